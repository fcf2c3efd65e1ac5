// Integer relation matrices, Smith normal form and H_1 invariants.

#ifndef FPG_ABELIAN_HPP_
#define FPG_ABELIAN_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "fpg/presentation.hpp"

namespace fpg {

  using BigInt = mpz_class;

  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);

    [[nodiscard]] static IntMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const noexcept {
      return rows_;
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return cols_;
    }
    [[nodiscard]] BigInt& operator()(std::size_t i, std::size_t j) {
      return entries_[i * cols_ + j];
    }
    [[nodiscard]] BigInt const& operator()(std::size_t i, std::size_t j) const {
      return entries_[i * cols_ + j];
    }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, BigInt const& k);
    void add_col(std::size_t dst, std::size_t src, BigInt const& k);
    void negate_row(std::size_t r);

    friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

   private:
    std::size_t         rows_ = 0;
    std::size_t         cols_ = 0;
    std::vector<BigInt> entries_;
  };

  [[nodiscard]] IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);

  // Exact determinant by fraction-free elimination. Square input only.
  [[nodiscard]] BigInt determinant(IntMatrix const& m);

  // Row i holds the exponent sums of relator i.
  [[nodiscard]] IntMatrix relation_matrix(Presentation const& p);

  // U * M * V == D with U, V unimodular and D diagonal, nonnegative, and
  // d_1 | d_2 | ... Pivots are chosen by smallest absolute value, ties by
  // (row, col).
  struct SmithForm {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;

    // Nonzero diagonal entries, in order.
    [[nodiscard]] std::vector<BigInt> invariant_factors() const;
  };

  [[nodiscard]] SmithForm smith_normal_form(IntMatrix const& m);

  struct AbelianInvariants {
    std::size_t         free_rank = 0;
    std::vector<BigInt> torsion;

    [[nodiscard]] bool is_trivial() const noexcept {
      return free_rank == 0 && torsion.empty();
    }
    [[nodiscard]] bool is_infinite_cyclic() const noexcept {
      return free_rank == 1 && torsion.empty();
    }

    friend bool operator==(AbelianInvariants const&, AbelianInvariants const&)
        = default;
  };

  // "Z^r + Z/d1 + ... + Z/dk"; "0" for the trivial group.
  [[nodiscard]] std::string to_string(AbelianInvariants const& a);

  [[nodiscard]] AbelianInvariants abelian_invariants(IntMatrix const& m);
  [[nodiscard]] AbelianInvariants h1(Presentation const& p);
  [[nodiscard]] bool              is_perfect(Presentation const& p);
  [[nodiscard]] bool              h1_is_infinite_cyclic(Presentation const& p);

  // A basis (as rows) of the left kernel {c : c M = 0} of m.
  [[nodiscard]] IntMatrix left_kernel(IntMatrix const& m);

  [[nodiscard]] nlohmann::json to_json(IntMatrix const& m);
  [[nodiscard]] IntMatrix      matrix_from_json(nlohmann::json const& j);
  [[nodiscard]] nlohmann::json to_json(AbelianInvariants const& a);

}  // namespace fpg

#endif  // FPG_ABELIAN_HPP_
