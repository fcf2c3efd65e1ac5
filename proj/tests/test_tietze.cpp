#include <doctest.h>

#include <random>

#include "fpg/abelian.hpp"
#include "fpg/identity.hpp"
#include "fpg/tietze.hpp"
#include "support/random.hpp"

using namespace fpg;

namespace {
  Word const x = Word::generator(0), y = Word::generator(1);

  std::vector<std::pair<Presentation, TietzeMove>>
  drain(Presentation const& p, TietzeBudget b, std::size_t limit = 100000) {
    TietzeNeighbors                                  s(p, b);
    std::vector<std::pair<Presentation, TietzeMove>> out;
    while (out.size() < limit) {
      auto n = s.next();
      if (!n) break;
      out.push_back(std::move(*n));
    }
    return out;
  }
}  // namespace

TEST_SUITE("tietze") {
  TEST_CASE("add generator move") {
    auto p  = parse("< x | >");
    auto ns = drain(p, {});
    bool found = false;
    for (auto const& [q, m] : ns) {
      if (m.kind == TietzeMove::Kind::add_generator && m.word == power(x, 2)) {
        CHECK(q.generator_count() == 2);
        CHECK(q.relators().back() == Word::generator(1) * invert(power(x, 2)));
        found = true;
      }
    }
    CHECK(found);
  }

  TEST_CASE("remove redundant relator") {
    auto p  = parse("< x | x, x >");
    auto ns = drain(p, {});
    REQUIRE_FALSE(ns.empty());
    auto const& [q, m] = ns.front();
    CHECK(m.kind == TietzeMove::Kind::remove_relator);
    CHECK(q == parse("< x | x >"));
    CHECK(identity_product(p.relators(), m.certificate).empty());
    CHECK(apply(p, m) == q);
  }

  TEST_CASE("generator elimination") {
    auto p = parse("< x, y | x y^-2, y^5 >");
    REQUIRE(solve_for(p.relators()[0], 0));
    CHECK(*solve_for(p.relators()[0], 0) == power(y, 2));
    CHECK_FALSE(solve_for(p.relators()[1], 1));
    auto q = eliminate_generator(p, 0, 0);
    CHECK(serialize(q) == "< y | y^5 >");
  }

  TEST_CASE("illegal moves are rejected") {
    auto       p = parse("< x, y | x y >");
    TietzeMove m;
    m.kind  = TietzeMove::Kind::remove_relator;
    m.index = 3;
    CHECK_THROWS_AS((void) apply(p, m), PresentationError);
    m.index = 0;
    CHECK_THROWS_AS((void) apply(p, m), PresentationError);
    TietzeMove g;
    g.kind             = TietzeMove::Kind::remove_generator;
    g.index            = 0;
    g.defining_relator = 0;
    g.word             = y;
    CHECK_THROWS_AS((void) apply(p, g), PresentationError);
  }

  TEST_CASE("emissions keep H1 and replay") {
    std::mt19937_64 rng(71);
    TietzeBudget    b{.max_factors = 2, .max_conjugator_length = 1,
                      .max_relator_length = 8, .max_definition_length = 2};
    int             checked = 0;
    for (int i = 0; i < 100; ++i) {
      auto p  = testing::random_presentation(rng, 2, 3, 5);
      auto hp = h1(p);
      for (auto const& [q, m] : drain(p, b, 60)) {
        CHECK(h1(q) == hp);
        CHECK(apply(p, m) == q);
        ++checked;
      }
    }
    CHECK(checked > 1000);
  }

  TEST_CASE("emission order is deterministic") {
    auto p = parse("< x, y | x y x^-1 y^-1 >");
    auto a = drain(p, {}, 200);
    auto b = drain(p, {}, 200);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].first == b[i].first);
    int last = 0;
    for (auto const& [q, m] : a) {
      int k = static_cast<int>(m.kind);
      CHECK(k >= last);
      last = k;
    }
  }

  TEST_CASE("consequences are products of conjugated relators") {
    auto p = parse("< x, y | x^2, y^3 >");
    auto c = consequences(p, {});
    CHECK_FALSE(c.products.empty());
    for (auto const& [w, seq] : c.products) {
      CHECK(identity_product(p.relators(), seq) == w);
      CHECK(seq.entries.size() <= 2);
    }
    auto ex = consequences(p, {}, 0);
    for (auto const& [w, seq] : ex.products)
      for (auto const& e : seq.entries) CHECK(e.relator_index != 0);
  }

  TEST_CASE("reduced words") {
    auto ws = reduced_words_up_to(2, 3);
    CHECK(ws.size() == 1 + 4 + 12 + 36);
    for (std::size_t i = 1; i < ws.size(); ++i) CHECK(ws[i - 1] < ws[i]);
    CHECK(reduced_words_up_to(2, 6).size() == 1457);
    CHECK(reduced_words_up_to(0, 4).size() == 1);
  }

  TEST_CASE("move json names the kind") {
    auto p  = parse("< x | x, x >");
    auto ns = drain(p, {}, 1);
    REQUIRE(ns.size() == 1);
    auto j = to_json(p, ns[0].second);
    CHECK(j.dump().find(std::string(to_string(TietzeMove::Kind::remove_relator)))
          != std::string::npos);
  }
}
