// Independent reference computations used to cross-check the library.
// Nothing here calls into coset enumeration, Smith normal form or folding.

#ifndef FPG_TESTS_ORACLES_HPP_
#define FPG_TESTS_ORACLES_HPP_

#include <array>
#include <bitset>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "fpg/word.hpp"

namespace fpg::oracle {

  ////////////////////////////////////////////////////////////////////////
  // Permutations of {0..n-1}, composed left to right (x^(pq) = (x^p)^q).

  using Perm = std::vector<int>;

  inline Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
  }

  inline Perm perm_mul(Perm const& p, Perm const& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[i] = q[p[i]];
    }
    return r;
  }

  inline Perm perm_inv(Perm const& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[p[i]] = static_cast<int>(i);
    }
    return r;
  }

  inline Perm perm_eval(Word const& w, std::vector<Perm> const& gens) {
    Perm r = perm_identity(static_cast<int>(gens.front().size()));
    for (Letter l : w) {
      r = perm_mul(r, l.sign > 0 ? gens[l.gen] : perm_inv(gens[l.gen]));
    }
    return r;
  }

  // c = (1 2)(3 4), d = (1 3 5) on five points.
  inline std::vector<Perm> a5_generators() {
    return {{1, 0, 3, 2, 4}, {2, 1, 4, 3, 0}};
  }

  template <typename T, typename Mul>
  std::size_t closure_size(std::vector<T> const& gens, T const& one, Mul mul) {
    std::set<T>    seen{one};
    std::vector<T> frontier{one};
    while (!frontier.empty()) {
      std::vector<T> next;
      for (auto const& x : frontier) {
        for (auto const& g : gens) {
          T y = mul(x, g);
          if (seen.insert(y).second) {
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    return seen.size();
  }

  ////////////////////////////////////////////////////////////////////////
  // 2x2 matrices over Z/5.

  using Mat = std::array<int, 4>;  // row-major

  inline Mat mat_mul(Mat const& a, Mat const& b) {
    return {(a[0] * b[0] + a[1] * b[2]) % 5, (a[0] * b[1] + a[1] * b[3]) % 5,
            (a[2] * b[0] + a[3] * b[2]) % 5, (a[2] * b[1] + a[3] * b[3]) % 5};
  }

  inline Mat mat_inv(Mat const& a) {  // determinant one
    return {a[3], (5 - a[1]) % 5, (5 - a[2]) % 5, a[0]};
  }

  inline Mat mat_pow(Mat a, int k) {
    Mat r{1, 0, 0, 1};
    for (int i = 0; i < k; ++i) {
      r = mat_mul(r, a);
    }
    return r;
  }

  inline Mat mat_eval(Word const& w, std::vector<Mat> const& gens) {
    Mat r{1, 0, 0, 1};
    for (Letter l : w) {
      r = mat_mul(r, l.sign > 0 ? gens[l.gen] : mat_inv(gens[l.gen]));
    }
    return r;
  }

  inline std::vector<Mat> sl25() {
    std::vector<Mat> out;
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        for (int c = 0; c < 5; ++c)
          for (int d = 0; d < 5; ++d)
            if (((a * d - b * c) % 5 + 5) % 5 == 1) out.push_back({a, b, c, d});
    return out;
  }

  // First pair (c, d) in SL(2,5) with c^2 = d^3 = (c d^-1)^5 = -1 that
  // generates the whole group.
  inline std::vector<Mat> binary_icosahedral_generators() {
    Mat const  minus{4, 0, 0, 4};
    auto const all = sl25();
    for (auto const& c : all) {
      if (mat_pow(c, 2) != minus) continue;
      for (auto const& d : all) {
        if (mat_pow(d, 3) != minus) continue;
        if (mat_pow(mat_mul(c, mat_inv(d)), 5) != minus) continue;
        if (closure_size<Mat>({c, d}, Mat{1, 0, 0, 1}, mat_mul) == 120) {
          return {c, d};
        }
      }
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Invariant factors as quotients of gcds of k x k minors.

  inline mpz_class det(std::vector<std::vector<mpz_class>> const& m) {
    std::size_t const n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    mpz_class out = 0;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<mpz_class>> minor;
      for (std::size_t i = 1; i < n; ++i) {
        std::vector<mpz_class> row;
        for (std::size_t k = 0; k < n; ++k)
          if (k != j) row.push_back(m[i][k]);
        minor.push_back(row);
      }
      mpz_class term = m[0][j] * det(minor);
      out += (j % 2 == 0) ? term : mpz_class(-term);
    }
    return out;
  }

  inline void subsets(std::size_t n, std::size_t k, std::size_t from,
                      std::vector<std::size_t>&               cur,
                      std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      cur.push_back(i);
      subsets(n, k, i + 1, cur, out);
      cur.pop_back();
    }
  }

  inline std::vector<mpz_class>
  invariant_factors(std::vector<std::vector<mpz_class>> const& m,
                    std::size_t rows, std::size_t cols) {
    std::vector<mpz_class> out;
    mpz_class              prev = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
      std::vector<std::vector<std::size_t>> rs, cs;
      std::vector<std::size_t>              cur;
      subsets(rows, k, 0, cur, rs);
      subsets(cols, k, 0, cur, cs);
      mpz_class g = 0;
      for (auto const& r : rs) {
        for (auto const& c : cs) {
          std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
          mpz_class d = det(sub);
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        }
      }
      if (g == 0) break;
      out.push_back(g / prev);
      prev = g;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroup membership by Benois saturation of the bouquet automaton:
  // a state set automaton with epsilon moves added for every path that
  // freely reduces to the empty word.

  class BouquetAutomaton {
   public:
    static constexpr std::size_t max_states = 64;
    using States                            = std::bitset<max_states>;

    BouquetAutomaton(std::size_t alphabet, std::vector<Word> const& words)
        : alphabet_(alphabet), edges_(max_states) {
      for (auto const& w : words) {
        if (w.empty()) continue;
        std::size_t prev = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
          std::size_t next = i + 1 == w.size() ? 0 : n_++;
          add_edge(prev, w[i], next);
          prev = next;
        }
      }
      eps_.assign(n_, States{});
      for (std::size_t i = 0; i < n_; ++i) eps_[i].set(i);
      saturate();
    }

    bool accepts(Word const& w) const {
      States s = eps_[0];
      for (Letter l : w) {
        s = step(s, l.code());
        if (s.none()) return false;
      }
      return s.test(0);
    }

    // Closure of a state set under one letter and epsilon moves.
    States step(States const& s, std::size_t code) const {
      States out;
      for (std::size_t p = 0; p < n_; ++p) {
        if (!s.test(p)) continue;
        for (auto [c, q] : edges_[p]) {
          if (c == code) out |= eps_[q];
        }
      }
      return out;
    }

    States start() const {
      return eps_[0];
    }

   private:
    void add_edge(std::size_t p, Letter l, std::size_t q) {
      edges_[p].push_back({l.code(), q});
      edges_[q].push_back({l.inverse().code(), p});
    }

    void saturate() {
      bool changed = true;
      while (changed) {
        changed = false;
        // transitive closure of epsilon
        for (std::size_t k = 0; k < n_; ++k)
          for (std::size_t i = 0; i < n_; ++i)
            if (eps_[i].test(k)) eps_[i] |= eps_[k];
        for (std::size_t p = 0; p < n_; ++p) {
          for (std::size_t c = 0; c < 2 * alphabet_; ++c) {
            States mid = step(eps_[p], c);
            States to  = step(mid, c ^ 1);
            if ((to & ~eps_[p]).any()) {
              eps_[p] |= to;
              changed = true;
            }
          }
        }
      }
    }

    std::size_t                                              alphabet_;
    std::size_t                                              n_ = 1;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges_;
    std::vector<States>                                      eps_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Free group automorphism images, applied symbolically.

  inline std::vector<Word> compose(std::vector<Word> const& images,
                                   std::vector<Word> const& then) {
    std::vector<Word> out;
    for (auto const& w : images) {
      std::vector<Letter> letters;
      for (Letter l : w) {
        Word img = then[l.gen];
        if (l.sign < 0) {
          std::vector<Letter> inv;
          for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
            inv.push_back(it->inverse());
          img = Word(inv);
        }
        letters.insert(letters.end(), img.begin(), img.end());
      }
      out.push_back(Word(letters));
    }
    return out;
  }

}  // namespace fpg::oracle

#endif  // FPG_TESTS_ORACLES_HPP_
