// Bounded Todd-Coxeter coset enumeration (HLT with lookahead).
//
// The enumeration is deterministic: relators are scanned shortest first
// (ties in input order), cosets are numbered in definition order and
// coincidences are processed first-in first-out. The budget bounds the
// number of simultaneously live cosets.

#ifndef FPG_COSET_HPP_
#define FPG_COSET_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "fpg/outcome.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

  inline constexpr std::size_t default_max_cosets = 100000;

  // Complete coset table. Coset 0 is the coset of the subgroup.
  class CosetTable {
   public:
    CosetTable(std::size_t generator_count, std::vector<std::uint32_t> action);

    [[nodiscard]] std::size_t rows() const noexcept {
      return generator_count_ == 0 ? 1 : action_.size() / (2 * generator_count_);
    }
    [[nodiscard]] std::size_t generator_count() const noexcept {
      return generator_count_;
    }
    [[nodiscard]] std::size_t target(std::size_t coset, Letter l) const {
      return action_[coset * 2 * generator_count_ + l.code()];
    }
    // Coset reached from `coset` by reading w left to right.
    [[nodiscard]] std::size_t trace(std::size_t coset, Word const& w) const;

    // Every relator returns every coset to itself and every subgroup word
    // fixes coset 0.
    [[nodiscard]] bool is_closed(std::span<Word const> relators,
                                 std::span<Word const> subgroup) const;

    // Permutation of the cosets induced by generator g.
    [[nodiscard]] std::vector<std::size_t> permutation(generator_index g) const;

   private:
    std::size_t                generator_count_;
    std::vector<std::uint32_t> action_;
  };

  struct Finite {
    std::size_t index;
    CosetTable  table;
    std::size_t cosets_used;
  };

  struct Exhausted {
    std::size_t cosets_used;
  };

  using EnumerationResult = std::variant<Finite, Exhausted>;

  [[nodiscard]] inline bool is_finite(EnumerationResult const& r) noexcept {
    return std::holds_alternative<Finite>(r);
  }

  // Index of the subgroup generated by `subgroup`, if it can be derived with
  // at most `max_cosets` live cosets.
  [[nodiscard]] EnumerationResult enumerate(Presentation const&   p,
                                            std::span<Word const> subgroup,
                                            std::size_t max_cosets
                                            = default_max_cosets);

  [[nodiscard]] EnumerationResult order(Presentation const& p,
                                        std::size_t max_cosets
                                        = default_max_cosets);

  // Yes iff order is Finite(1), No iff Finite(n > 1), Unknown otherwise.
  [[nodiscard]] CheckOutcome is_trivial_bounded(Presentation const& p,
                                                std::size_t max_cosets
                                                = default_max_cosets);

  // Decides w == 1 through the regular representation when the group is
  // finite within budget.
  [[nodiscard]] CheckOutcome word_is_trivial_in_finite(Presentation const& p,
                                                       Word const&         w,
                                                       std::size_t max_cosets
                                                       = default_max_cosets);

  // Yes iff the normal closure of t is the whole group, certified by the
  // quotient closing to order 1.
  [[nodiscard]] CheckOutcome weight_one_witness_check(Presentation const& p,
                                                      Word const&         t,
                                                      std::size_t max_cosets
                                                      = default_max_cosets);

  [[nodiscard]] nlohmann::json to_json(CosetTable const& t);

}  // namespace fpg

#endif  // FPG_COSET_HPP_
