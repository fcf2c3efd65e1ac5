#include "fpg/abelian.hpp"

#include <stdexcept>
#include <utility>

namespace fpg {

  IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                       std::vector<BigInt> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw std::invalid_argument("entry count must equal rows * cols");
    }
  }

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      std::swap((*this)(a, j), (*this)(b, j));
    }
  }

  void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      std::swap((*this)(i, a), (*this)(i, b));
    }
  }

  void IntMatrix::add_row(std::size_t dst, std::size_t src, BigInt const& k) {
    for (std::size_t j = 0; j < cols_; ++j) {
      (*this)(dst, j) += k * (*this)(src, j);
    }
  }

  void IntMatrix::add_col(std::size_t dst, std::size_t src, BigInt const& k) {
    for (std::size_t i = 0; i < rows_; ++i) {
      (*this)(i, dst) += k * (*this)(i, src);
    }
  }

  void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) {
      (*this)(r, j) = -(*this)(r, j);
    }
  }

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw std::invalid_argument("matrix dimension mismatch");
    }
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          out(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return out;
  }

  BigInt determinant(IntMatrix const& input) {
    if (input.rows() != input.cols()) {
      throw std::invalid_argument("determinant of a non-square matrix");
    }
    std::size_t const n = input.rows();
    if (n == 0) {
      return 1;
    }
    // Bareiss fraction-free elimination.
    IntMatrix m    = input;
    BigInt    prev = 1;
    int       sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m(k, k) == 0) {
        std::size_t r = k + 1;
        while (r < n && m(r, k) == 0) {
          ++r;
        }
        if (r == n) {
          return 0;
        }
        m.swap_rows(k, r);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        }
      }
      prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
  }

  IntMatrix relation_matrix(Presentation const& p) {
    IntMatrix m(p.relator_count(), p.generator_count());
    for (std::size_t i = 0; i < p.relator_count(); ++i) {
      for (Letter l : p.relators()[i]) {
        m(i, l.gen) += l.sign;
      }
    }
    return m;
  }

  std::vector<BigInt> SmithForm::invariant_factors() const {
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
      if (d(i, i) != 0) {
        out.push_back(d(i, i));
      }
    }
    return out;
  }

  SmithForm smith_normal_form(IntMatrix const& m) {
    std::size_t const rows = m.rows();
    std::size_t const cols = m.cols();
    SmithForm         s{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    IntMatrix&        d = s.d;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
      bool exhausted = false;
      while (true) {
        // Smallest nonzero |entry| in the trailing block, first in (row, col)
        // order on ties.
        std::size_t pi = rows, pj = cols;
        BigInt      best;
        for (std::size_t i = t; i < rows; ++i) {
          for (std::size_t j = t; j < cols; ++j) {
            if (d(i, j) == 0) {
              continue;
            }
            BigInt a = abs(d(i, j));
            if (pi == rows || a < best) {
              best = a;
              pi   = i;
              pj   = j;
            }
          }
        }
        if (pi == rows) {
          exhausted = true;
          break;
        }
        d.swap_rows(t, pi);
        s.u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        s.v.swap_cols(t, pj);

        bool   clean = true;
        BigInt q;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (d(i, t) == 0) {
            continue;
          }
          mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
          q = -q;
          d.add_row(i, t, q);
          s.u.add_row(i, t, q);
          clean = clean && d(i, t) == 0;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d(t, j) == 0) {
            continue;
          }
          mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
          q = -q;
          d.add_col(j, t, q);
          s.v.add_col(j, t, q);
          clean = clean && d(t, j) == 0;
        }
        if (!clean) {
          continue;
        }
        // Pivot must divide the rest of the block; otherwise fold the
        // offending row into row t and reduce again.
        std::size_t bad = rows;
        for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
              bad = i;
              break;
            }
          }
        }
        if (bad == rows) {
          break;
        }
        d.add_row(t, bad, 1);
        s.u.add_row(t, bad, 1);
      }
      if (exhausted) {
        break;
      }
      if (d(t, t) < 0) {
        d.negate_row(t);
        s.u.negate_row(t);
      }
    }
    return s;
  }

  std::string to_string(AbelianInvariants const& a) {
    std::string out;
    if (a.free_rank > 0) {
      out = "Z^" + std::to_string(a.free_rank);
    }
    for (auto const& d : a.torsion) {
      if (!out.empty()) {
        out += " + ";
      }
      out += "Z/" + d.get_str();
    }
    return out.empty() ? "0" : out;
  }

  AbelianInvariants abelian_invariants(IntMatrix const& m) {
    auto              factors = smith_normal_form(m).invariant_factors();
    AbelianInvariants out;
    out.free_rank = m.cols() - factors.size();
    for (auto& f : factors) {
      if (f > 1) {
        out.torsion.push_back(std::move(f));
      }
    }
    return out;
  }

  AbelianInvariants h1(Presentation const& p) {
    return abelian_invariants(relation_matrix(p));
  }

  bool is_perfect(Presentation const& p) {
    return h1(p).is_trivial();
  }

  bool h1_is_infinite_cyclic(Presentation const& p) {
    return h1(p).is_infinite_cyclic();
  }

  IntMatrix left_kernel(IntMatrix const& m) {
    auto const        s    = smith_normal_form(m);
    std::size_t const rank = s.invariant_factors().size();
    IntMatrix         out(m.rows() - rank, m.rows());
    for (std::size_t i = rank; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.rows(); ++j) {
        out(i - rank, j) = s.u(i, j);
      }
    }
    return out;
  }

  namespace {
    nlohmann::json big_to_json(BigInt const& x) {
      if (x.fits_slong_p()) {
        return x.get_si();
      }
      return x.get_str();
    }

    BigInt big_from_json(nlohmann::json const& j) {
      if (j.is_number_integer()) {
        return BigInt(j.get<long>());
      }
      if (j.is_string()) {
        return BigInt(j.get<std::string>());
      }
      throw std::invalid_argument("matrix entries must be integers");
    }
  }  // namespace

  nlohmann::json to_json(IntMatrix const& m) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) {
        row.push_back(big_to_json(m(i, j)));
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  IntMatrix matrix_from_json(nlohmann::json const& j) {
    if (!j.is_array()) {
      throw std::invalid_argument("matrix must be an array of rows");
    }
    std::size_t const   rows = j.size();
    std::size_t const   cols = rows == 0 ? 0 : j.at(0).size();
    std::vector<BigInt> entries;
    for (auto const& row : j) {
      if (!row.is_array() || row.size() != cols) {
        throw std::invalid_argument("matrix rows must have equal length");
      }
      for (auto const& x : row) {
        entries.push_back(big_from_json(x));
      }
    }
    return IntMatrix(rows, cols, std::move(entries));
  }

  nlohmann::json to_json(AbelianInvariants const& a) {
    nlohmann::json torsion = nlohmann::json::array();
    for (auto const& d : a.torsion) {
      torsion.push_back(big_to_json(d));
    }
    return {{"free_rank", a.free_rank}, {"torsion", std::move(torsion)}};
  }

}  // namespace fpg
