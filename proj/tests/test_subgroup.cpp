#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "fpg/presentation.hpp"
#include "fpg/subgroup.hpp"
#include "fpg/tietze.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace fpg;

namespace {
  Word const a = Word::generator(0), b = Word::generator(1);

  bool is_folded(SubgroupGraph const& g) {
    std::set<std::tuple<std::size_t, generator_index>> out, in;
    for (auto const& e : g.edges()) {
      if (!out.insert({e.from, e.label}).second) return false;
      if (!in.insert({e.to, e.label}).second) return false;
    }
    return true;
  }

  bool is_connected(SubgroupGraph const& g) {
    std::vector<std::size_t> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto const& e : g.edges()) parent[find(e.from)] = find(e.to);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (find(v) != find(g.base())) return false;
    return true;
  }

  // Products of at most three generators or inverses.
  std::set<Word> short_products(std::vector<Word> const& gens) {
    std::vector<Word> letters;
    for (auto const& w : gens) {
      letters.push_back(w);
      letters.push_back(invert(w));
    }
    std::set<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    for (int k = 0; k < 3; ++k) {
      std::vector<Word> next;
      for (auto const& p : layer)
        for (auto const& l : letters) next.push_back(p * l);
      out.insert(next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }
}  // namespace

TEST_SUITE("subgroup") {
  TEST_CASE("examples") {
    auto whole = fold(2, std::vector{a, b});
    CHECK(rank(whole) == 2);
    CHECK(whole.vertex_count() == 1);

    auto g = fold(1, std::vector{power(a, 2), power(a, 3)});
    CHECK(rank(g) == 1);
    CHECK(contains(g, a));

    auto e = fold(2, std::vector<Word>{});
    CHECK(e.vertex_count() == 1);
    CHECK(rank(e) == 0);
    CHECK(contains(e, Word{}));

    CHECK_FALSE(contains(fold(2, std::vector{a}), b));
    CHECK(is_basis(2, std::vector{a, b * a * invert(b)}));
    CHECK_FALSE(is_basis(1, std::vector{a, power(a, 2)}));
    CHECK_FALSE(is_basis(2, std::vector{a, Word{}}));
    CHECK(rank(fold(2, std::vector{power(a, 2), power(b, 2), power(a * b, 2)}))
          == 3);
  }

  TEST_CASE("graphs are folded and connected") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 300; ++i) {
      std::vector<Word> ws;
      std::size_t const k = rng() % 4;
      for (std::size_t j = 0; j < k; ++j) ws.push_back(testing::random_word(rng, 3, 8));
      auto g = fold(3, ws);
      CHECK(is_folded(g));
      CHECK(is_connected(g));
      for (auto const& w : ws) CHECK(contains(g, w));
      CHECK(fold(3, ws) == g);
      auto c = g.core();
      CHECK(rank(c) == rank(g));
    }
  }

  TEST_CASE("membership agrees with short products") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
      std::vector<Word> ws;
      std::size_t const k = 1 + rng() % 3;
      for (std::size_t j = 0; j < k; ++j) ws.push_back(testing::random_word(rng, 2, 4, 1));
      auto g = fold(2, ws);
      for (auto const& p : short_products(ws)) CHECK(contains(g, p));
    }
  }

  TEST_CASE("membership agrees with the saturated automaton") {
    std::mt19937_64 rng(47);
    auto const      words = reduced_words_up_to(2, 6);
    for (int i = 0; i < 150; ++i) {
      std::vector<Word> ws;
      std::size_t const k = rng() % 4;
      for (std::size_t j = 0; j < k; ++j) ws.push_back(testing::random_word(rng, 2, 4));
      auto                    g = fold(2, ws);
      oracle::BouquetAutomaton aut(2, ws);
      for (auto const& w : words) {
        if (contains(g, w) != aut.accepts(w)) {
          FAIL_CHECK("mismatch");
          break;
        }
      }
    }
  }

  TEST_CASE("rank invariance") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 200; ++i) {
      std::vector<Word> ws;
      std::size_t const k = 1 + rng() % 4;
      for (std::size_t j = 0; j < k; ++j) ws.push_back(testing::random_word(rng, 3, 6));
      std::size_t const r = rank(fold(3, ws));

      auto perm = ws;
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(rank(fold(3, perm)) == r);

      auto inv = ws;
      for (auto& w : inv)
        if (rng() % 2) w = invert(w);
      CHECK(rank(fold(3, inv)) == r);

      Word c   = testing::random_word(rng, 3, 5);
      auto con = ws;
      for (auto& w : con) w = conjugate(w, c);
      CHECK(rank(fold(3, con)) == r);
    }
  }

  TEST_CASE("bases give freely related presentations") {
    std::mt19937_64 rng(59);
    int             bases = 0;
    for (int i = 0; i < 300; ++i) {
      std::vector<Word> ws;
      std::size_t const k = 1 + rng() % 3;
      for (std::size_t j = 0; j < k; ++j) ws.push_back(testing::random_word(rng, 3, 5, 1));
      if (!is_basis(3, ws)) continue;
      ++bases;
      Presentation p({"x", "y", "z"}, ws);
      CHECK(is_freely_related(p).is_yes());
    }
    CHECK(bases > 50);
  }
}
