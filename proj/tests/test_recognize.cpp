#include <doctest.h>

#include <random>

#include "fpg/construct.hpp"
#include "fpg/recognize.hpp"
#include "support/knots.hpp"
#include "support/random.hpp"

using namespace fpg;

namespace {
  Word const x1 = Word::generator(0), x2 = Word::generator(1),
             x3 = Word::generator(2);

  Presentation knot_form(std::vector<std::string> gens, std::size_t h,
                         std::vector<Word> const& betas) {
    std::vector<Word> rels;
    for (std::size_t i = 0; i < h; ++i)
      rels.push_back(invert(Word::generator(2 * i)) * Word::generator(2 * i + 1));
    for (std::size_t j = 0; j < betas.size(); ++j)
      rels.push_back(invert(Word::generator(j)) * betas[j]);
    return Presentation(std::move(gens), std::move(rels));
  }
}  // namespace

TEST_SUITE("recognize") {
  TEST_CASE("permutations and orbits") {
    auto c = Permutation::cycle(4);
    CHECK(c(3) == 0);
    CHECK(c.cycle_string() == "(1 2 3 4)");
    CHECK(Permutation::identity(2).cycle_string() == "(1)(2)");
    Permutation const swap({1, 0, 2, 3});
    std::vector<Permutation> gens{swap};
    auto o = orbits(4, gens);
    CHECK(o.size() == 3);
    CHECK(o[0] == std::vector<std::size_t>{0, 1});
    gens.push_back(Permutation({0, 2, 3, 1}));
    CHECK(orbits(4, gens).size() == 1);
  }

  TEST_CASE("wirtinger examples") {
    auto yes = is_wirtinger(parse("< x1, x2 | x1^-1 x2 >"));
    CHECK(yes.outcome.is_yes());
    REQUIRE(yes.witnesses.size() == 1);
    CHECK(yes.witnesses[0].w.empty());

    auto p = parse("< x1, x2, x3 | x2^-1 x3^-1 x1 x3 >");
    auto r = is_wirtinger(p);
    REQUIRE(r.outcome.is_yes());
    auto const& wit = r.witnesses[0];
    CHECK(invert(Word::generator(wit.i)) * invert(wit.w) * Word::generator(wit.j) * wit.w
          == p.relators()[0]);

    CHECK(is_wirtinger(parse("< x | x^2 >")).outcome.is_no());
    CHECK(is_wirtinger(testing::trefoil_wirtinger()).outcome.is_yes());
    CHECK(is_wirtinger(parse("< x | x^-1 x >")).outcome.is_yes());
  }

  TEST_CASE("wirtinger implies torsion-free H1") {
    std::mt19937_64 rng(151);
    for (int i = 0; i < 400; ++i) {
      std::size_t const m = 1 + rng() % 3;
      std::size_t const n = rng() % 4;
      std::vector<Word> rels;
      for (std::size_t k = 0; k < n; ++k) {
        auto a = Word::generator(static_cast<generator_index>(rng() % m));
        auto b = Word::generator(static_cast<generator_index>(rng() % m));
        auto w = testing::random_word(rng, m, 3);
        rels.push_back(invert(a) * invert(w) * b * w);
      }
      std::vector<std::string> gens;
      for (std::size_t k = 0; k < m; ++k) gens.push_back("x" + std::to_string(k + 1));
      Presentation p(gens, rels);
      CHECK(is_wirtinger(p).outcome.is_yes());
      CHECK(h1(p).torsion.empty());

      auto q = testing::random_presentation(rng, 3, 3, 5);
      if (is_wirtinger(q).outcome.is_yes()) CHECK(h1(q).torsion.empty());
    }
  }

  TEST_CASE("artin examples") {
    auto unknot = artin_check(parse("< x1 | x1^-1 x1 >"));
    CHECK(unknot.outcome.is_yes());
    auto swap = artin_check(parse("< x1, x2 | x1^-1 x2, x2^-1 x1 >"));
    CHECK(swap.outcome.is_no());
    REQUIRE(swap.mu);
    CHECK(*swap.mu == Permutation::cycle(2));
    CHECK(artin_check(parse("< | >")).outcome.is_no());
    CHECK(artin_check(parse("< x1, x2 | x1^-1 x2 >")).outcome.is_no());
  }

  TEST_CASE("artin accepts the closed trefoil braid") {
    auto p = testing::trefoil_braid();
    auto r = artin_check(p);
    REQUIRE(r.outcome.is_yes());
    CHECK(*r.mu == Permutation::cycle(2));
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(conjugate(Word::generator((*r.mu)(j)), r.conjugators[j]) == r.betas[j]);
    }
    CHECK(h1_is_infinite_cyclic(p));
    CHECK(to_string(h1(p)) == "Z^1");
  }

  TEST_CASE("artin rejects single-edit mutants") {
    auto const mutants = testing::single_edit_mutants(testing::trefoil_braid(), 40);
    REQUIRE(mutants.size() == 40);
    for (auto const& q : mutants) CHECK(artin_check(q).outcome.is_no());
  }

  TEST_CASE("artin yes implies H1 infinite cyclic") {
    // braid automorphisms on three strands
    std::vector<Word> const s1{x1 * x2 * invert(x1), x1, x3};
    std::vector<Word> const s2{x1, x2 * x3 * invert(x2), x2};
    std::mt19937_64         rng(157);
    int                     yes = 0;
    for (int i = 0; i < 60; ++i) {
      std::vector<Word> images{x1, x2, x3};
      std::size_t const len = 1 + rng() % 6;
      for (std::size_t k = 0; k < len; ++k) images = oracle::compose(images, rng() % 2 ? s1 : s2);
      auto p = knot_form({"x1", "x2", "x3"}, 0, images);
      auto r = artin_check(p);
      if (r.outcome.is_yes()) {
        ++yes;
        CHECK(h1_is_infinite_cyclic(p));
      }
    }
    CHECK(yes > 0);
  }

  TEST_CASE("two-knot examples") {
    // beta_j = x_j
    auto trivial = knot_form({"x1", "x2"}, 1, {x1, x2});
    auto r       = two_knot_check(trivial, 1, 100);
    CHECK(r.outcome.is_yes());
    REQUIRE(r.trace);
    REQUIRE(r.trace_prime);
    CHECK(r.betas_prime == std::vector<Word>{x2, x1});

    auto three = knot_form({"x1", "x2", "x3"}, 1, {x1, x2, x3});
    CHECK(two_knot_check(three, 1, 100).outcome.is_no());  // x3 is its own orbit

    auto bad_shape = knot_form({"x1", "x2"}, 0, {x1, x2});
    CHECK(two_knot_check(bad_shape, 1, 100).outcome.is_no());

    auto intransitive = knot_form({"x1", "x2"}, 0, {x1, x2});
    auto ir           = two_knot_check(intransitive, 0, 100);
    CHECK(ir.outcome.is_no());
    CHECK(ir.orbits.size() == 2);

    // the trefoil betas satisfy (1)-(3) but present a non-free group
    auto tb = testing::trefoil_braid();
    std::vector<Word> betas{x1 * tb.relators()[0], x2 * tb.relators()[1]};
    auto tr = two_knot_check(knot_form({"x1", "x2"}, 0, betas), 0, 100);
    CHECK(tr.outcome.is_unknown());
  }

  TEST_CASE("two-knot yes carries replayable traces") {
    std::vector<Word> const s1{x1 * x2 * invert(x1), x1, x3};
    std::vector<Word> const s2{x1, x2 * x3 * invert(x2), x2};
    std::mt19937_64         rng(163);
    int                     yes = 0;
    for (int i = 0; i < 100; ++i) {
      std::vector<Word> images{x1, x2, x3};
      std::size_t const len = rng() % 4;
      for (std::size_t k = 0; k < len; ++k) images = oracle::compose(images, rng() % 2 ? s1 : s2);
      auto p = knot_form({"x1", "x2", "x3"}, 1, images);
      auto r = two_knot_check(p, 1, 100);
      if (!r.outcome.is_yes()) continue;
      ++yes;
      REQUIRE(r.trace);
      std::vector<Word> rels;
      for (std::size_t j = 0; j < 3; ++j)
        rels.push_back(invert(Word::generator(j)) * r.betas[j]);
      CHECK(replay(Presentation({"x1", "x2", "x3"}, rels), *r.trace));
      CHECK(r.trace->result.relator_count() == 0);
    }
    CHECK(yes > 0);
  }

  TEST_CASE("elimination") {
    auto t = eliminate_to_free(parse("< a, b, c | a b^-1, c a^2 >"), 10);
    REQUIRE(t);
    CHECK(t->result.relator_count() == 0);
    CHECK(t->result.generator_count() == 1);
    CHECK(replay(parse("< a, b, c | a b^-1, c a^2 >"), *t));
    CHECK_FALSE(eliminate_to_free(parse("< a, b | [a, b] >"), 10));
    CHECK_FALSE(eliminate_to_free(parse("< a | a^2 >"), 10));
  }

  TEST_CASE("verify_identity") {
    auto p = parse("< a | a^2 >");
    CHECK(verify_identity(p, {{{Word{}, 0, 1}, {Word{}, 0, -1}}}));
    CHECK_FALSE(verify_identity(p, {{{Word{}, 0, 1}}}));
    CHECK(verify_identity(p, {{{x1, 0, 1}, {Word{}, 0, -1}}}));

    std::mt19937_64 rng(167);
    for (int i = 0; i < 100; ++i) {
      auto q = testing::random_presentation(rng, 3, 3, 6);
      if (q.relator_count() == 0) continue;
      IdentitySequence pi;
      for (int k = 0; k < 3; ++k) {
        auto g  = testing::random_word(rng, q.generator_count(), 3);
        auto ix = rng() % q.relator_count();
        pi.entries.push_back({g, ix, 1});
      }
      bool const before = verify_identity(q, pi);
      auto       g      = testing::random_word(rng, q.generator_count(), 3);
      auto       at     = static_cast<long>(rng() % (pi.entries.size() + 1));
      auto       k      = rng() % q.relator_count();
      pi.entries.insert(pi.entries.begin() + at, {{g, k, 1}, {g, k, -1}});
      CHECK(verify_identity(q, pi) == before);
      // a product and its reverse inverse cancel
      IdentitySequence both = pi;
      for (auto it = pi.entries.rbegin(); it != pi.entries.rend(); ++it)
        both.entries.push_back({it->conjugator, it->relator_index, -it->sign});
      CHECK(verify_identity(q, both));
    }
  }

  TEST_CASE("kervaire reports") {
    auto trefoil = parse("< y1, y2 | y1 y2 y1 y2^-1 y1^-1 y2^-1 >");
    std::vector<Word> cand{x1};
    auto r = kervaire_report(trefoil, cand, 10000);
    CHECK(r.h1_infinite_cyclic);
    REQUIRE(r.weight.size() == 1);
    CHECK(r.weight[0].second.is_yes());
    CHECK(r.h2 == H2Status::certified);  // one relator, nonzero exponent row

    CHECK_FALSE(kervaire_report(parse("< x | x^2 >"), {}, 100).h1_infinite_cyclic);

    auto ms = m_minus_s(parse("< x | x^3 >"));
    std::vector<Word> s{ms.output.letter("s")};
    auto k = kervaire_report(ms.output, s, 10000);
    CHECK(k.h1_infinite_cyclic);
    CHECK(k.weight[0].second.is_yes());
    CHECK(k.h2 == H2Status::not_determined);
  }

  TEST_CASE("h2 certification from identities") {
    auto p = parse("< a | a, a >");
    CHECK_FALSE(identities_generate_h2(p, {}));
    std::vector<IdentitySequence> ids{{{{Word{}, 0, 1}, {Word{}, 1, -1}}}};
    CHECK(identities_generate_h2(p, ids));
    std::vector<IdentitySequence> twice{{{{Word{}, 0, 1}, {Word{}, 1, -1},
                                          {Word{}, 0, 1}, {Word{}, 1, -1}}}};
    CHECK_FALSE(identities_generate_h2(p, twice));
    std::vector<Word> none;
    CHECK(kervaire_report(p, none, 100, ids).h2 == H2Status::certified);
  }

  TEST_CASE("weight-one enumerator") {
    WeightOneEnumerator en;
    auto                first = en.next();
    REQUIRE(first);
    CHECK(serialize(first->presentation) == "< x | >");
    CHECK(first->witness == x1);
    bool multi = false;
    for (int i = 0; i < 50; ++i) {
      auto e = en.next();
      REQUIRE(e);
      multi = multi || e->presentation.generator_count() > 1;
      CHECK_FALSE(is_trivial_bounded(quotient(e->presentation, {e->witness}), 2000)
                      .is_no());
      // the trace replays to the presentation the witness was taken from
      Presentation q({"x"}, {x1});
      for (auto const& m : e->trace) q = apply(q, m);
      CHECK(q.relators()[0] == e->witness);
      CHECK(std::equal(q.relators().begin() + 1, q.relators().end(),
                       e->presentation.relators().begin(),
                       e->presentation.relators().end()));
    }
    CHECK(multi);
  }

  TEST_CASE("recognizers are deterministic") {
    auto p = testing::trefoil_braid();
    CHECK(artin_check(p).conjugators == artin_check(p).conjugators);
    CHECK(two_knot_check(p, 0, 50).outcome.reason == two_knot_check(p, 0, 50).outcome.reason);
  }
}
