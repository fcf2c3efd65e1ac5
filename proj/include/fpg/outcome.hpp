#ifndef FPG_OUTCOME_HPP_
#define FPG_OUTCOME_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace fpg {

  enum class Verdict { yes, no, unknown };

  [[nodiscard]] constexpr std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::yes:
        return "Yes";
      case Verdict::no:
        return "No";
      case Verdict::unknown:
        return "Unknown";
    }
    return "Unknown";
  }

  // Result of a decision or semi-decision. `budget_used` is the resource
  // count the procedure consumed (cosets, elimination steps); `reason` is a
  // short human-readable note, mostly filled for No and Unknown.
  struct CheckOutcome {
    Verdict     verdict     = Verdict::unknown;
    std::size_t budget_used = 0;
    std::string reason;

    [[nodiscard]] bool is_yes() const noexcept {
      return verdict == Verdict::yes;
    }
    [[nodiscard]] bool is_no() const noexcept {
      return verdict == Verdict::no;
    }
    [[nodiscard]] bool is_unknown() const noexcept {
      return verdict == Verdict::unknown;
    }

    static CheckOutcome yes(std::string reason = {}, std::size_t used = 0) {
      return {Verdict::yes, used, std::move(reason)};
    }
    static CheckOutcome no(std::string reason = {}, std::size_t used = 0) {
      return {Verdict::no, used, std::move(reason)};
    }
    static CheckOutcome unknown(std::string reason = {}, std::size_t used = 0) {
      return {Verdict::unknown, used, std::move(reason)};
    }
  };

  // Process exit code for a verdict: 0 Yes, 1 No, 2 Unknown.
  [[nodiscard]] constexpr int exit_code(Verdict v) noexcept {
    switch (v) {
      case Verdict::yes:
        return 0;
      case Verdict::no:
        return 1;
      case Verdict::unknown:
        return 2;
    }
    return 2;
  }

}  // namespace fpg

#endif  // FPG_OUTCOME_HPP_
