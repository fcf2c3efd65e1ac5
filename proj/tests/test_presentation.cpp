#include <doctest.h>

#include <random>

#include "fpg/abelian.hpp"
#include "fpg/presentation.hpp"
#include "support/random.hpp"

using namespace fpg;

TEST_SUITE("presentation") {
  TEST_CASE("parse examples") {
    auto p = parse("< x | x^2 >");
    CHECK(p.generator_count() == 1);
    REQUIRE(p.relator_count() == 1);
    CHECK(p.relators()[0].size() == 2);

    auto f = parse("< a, b | >");
    CHECK(f.generator_count() == 2);
    CHECK(f.relator_count() == 0);

    auto t = parse("< y1, y2 | y1 y2 y1 y2^-1 y1^-1 y2^-1 >");
    CHECK(t.relators()[0].size() == 6);
    CHECK(serialize(t) == "< y1, y2 | y1 y2 y1 y2^-1 y1^-1 y2^-1 >");

    auto e = parse("< | >");
    CHECK(e.generator_count() == 0);
  }

  TEST_CASE("grammar extras") {
    auto p = parse("< c, d | (c d)^2, [c, d], 1 >");
    CHECK(p.relators()[0] == power(Word::generator(0) * Word::generator(1), 2));
    CHECK(p.relators()[1] == commutator(Word::generator(0), Word::generator(1)));
    CHECK(p.relators()[2].empty());
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS((void) parse("< x | y >"));
    CHECK_THROWS((void) parse("< x, x | >"));
    CHECK_THROWS((void) parse("< x | x^ >"));
    CHECK_THROWS((void) parse("< x | x"));
    CHECK_THROWS((void) parse("x | x >"));
    try {
      (void) parse("< x | x^ >");
    } catch (ParseError const& e) {
      CHECK(e.position() > 0);
    }
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(Presentation({"a", "a"}), PresentationError);
    CHECK_THROWS_AS(Presentation({"a"}, {Word::generator(1)}), PresentationError);
    CHECK_THROWS_AS(Presentation({"1a"}), PresentationError);
    CHECK(is_valid_name("x_1"));
    CHECK_FALSE(is_valid_name(""));
  }

  TEST_CASE("json round trip") {
    auto p = parse("< a, b | a^3 b^-2, [a, b] >");
    auto j = to_json(p);
    CHECK(j["generators"].size() == 2);
    CHECK(j["relators"][0][0][1] == 3);
    CHECK(presentation_from_json(j) == p);
    CHECK_THROWS((void) presentation_from_json(nlohmann::json{{"generators", 3}}));
  }

  TEST_CASE("text round trip on random presentations") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      auto p = testing::random_presentation(rng);
      CHECK(parse(serialize(p)) == p);
      CHECK(presentation_from_json(to_json(p)) == p);
    }
  }

  TEST_CASE("free and direct products") {
    auto x = parse("< x | >"), y = parse("< y | >");
    auto fp = free_product(x, y);
    CHECK(serialize(fp) == "< x, y | >");
    auto dp = direct_product(x, y);
    CHECK(serialize(dp) == "< x, y | x^-1 y^-1 x y >");
    CHECK(h1(dp).free_rank == 2);

    auto q  = parse("< s, a | s^2 a >");
    auto qq = free_product(q, q, "1", "2");
    CHECK(qq.index_of("s1"));
    CHECK(qq.index_of("s2"));
    CHECK_THROWS_AS((void) free_product(q, q), PresentationError);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
      auto p = testing::random_presentation(rng, 3, 3, 6);
      auto r = testing::random_presentation(rng, 3, 3, 6);
      auto f = free_product(p, r, "_p", "_q");
      auto d = direct_product(p, r, "_p", "_q");
      CHECK(f.generator_count() == p.generator_count() + r.generator_count());
      CHECK(f.relator_count() == p.relator_count() + r.relator_count());
      CHECK(d.relator_count()
            == p.relator_count() + r.relator_count()
                   + p.generator_count() * r.generator_count());
      // H1 of a free product is the direct sum: compare against the
      // block-diagonal relation matrix.
      auto hp = h1(p), hr = h1(r), hf = h1(f);
      CHECK(hf.free_rank == hp.free_rank + hr.free_rank);
      CHECK(h1(d) == hf);
    }
  }

  TEST_CASE("hnn extensions and quotients") {
    auto b = parse("< b | >");
    Word bw = Word::generator(0);
    std::pair<Word, Word> pr{bw, power(bw, 2)};
    auto k = hnn_extension(b, "s", std::span(&pr, 1));
    CHECK(serialize(k) == "< b, s | s^-1 b s b^-2 >");
    CHECK(to_string(h1(k)) == "Z^1");
    auto free = hnn_extension(b, "s", {});
    CHECK(h1(free).free_rank == 2);
    CHECK_THROWS((void) hnn_extension(b, "b", {}));

    auto t = quotient(parse("< x | >"), {Word::generator(0)});
    CHECK(h1(t).is_trivial());
    auto p = parse("< x | x^2 >");
    CHECK(quotient(p, std::span<Word const>{}) == p);
  }

  TEST_CASE("deficiency") {
    CHECK(parse("< a, b | a b a >").deficiency() == 1);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
      auto p = testing::random_presentation(rng);
      auto q = drop_deficiency(p);
      CHECK(q.deficiency() == p.deficiency() - 1);
      CHECK(h1(q) == h1(p));
      if (is_freely_related(p).is_yes()) {
        CHECK(is_freely_related(q).is_yes());
      }
    }
  }

  TEST_CASE("freely related") {
    CHECK(is_freely_related(parse("< a, b | [a, b] >")).is_yes());
    CHECK(is_freely_related(parse("< a | a, a >")).is_no());
    CHECK(is_freely_related(parse("< a, b | a^2, a^3 >")).is_no());
    CHECK(is_freely_related(parse("< a, b | a b, b >")).is_yes());
    CHECK(is_freely_related(parse("< a | 1 >")).is_no());
  }

  TEST_CASE("fresh names") {
    auto p = parse("< a, a_ | >");
    CHECK(fresh_name(p, "a") == "a__");
    CHECK(fresh_name(p, "b") == "b");
  }
}
