// Recognizers for knot-theoretic presentation shapes and the hypotheses of
// the classical characterizations of knot groups.

#ifndef FPG_RECOGNIZE_HPP_
#define FPG_RECOGNIZE_HPP_

#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fpg/abelian.hpp"
#include "fpg/coset.hpp"
#include "fpg/identity.hpp"
#include "fpg/outcome.hpp"
#include "fpg/presentation.hpp"
#include "fpg/tietze.hpp"

namespace fpg {

  // Images (0-based) of a permutation of {0, ..., n-1}.
  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<std::size_t> images);

    [[nodiscard]] static Permutation identity(std::size_t n);
    // (0 1 ... n-1): i -> i+1 mod n
    [[nodiscard]] static Permutation cycle(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept {
      return images_.size();
    }
    [[nodiscard]] std::size_t operator()(std::size_t i) const {
      return images_.at(i);
    }
    [[nodiscard]] std::span<std::size_t const> images() const noexcept {
      return images_;
    }

    // Disjoint cycle notation with 1-based points, e.g. "(1 2)(3)".
    [[nodiscard]] std::string cycle_string() const;

    friend bool operator==(Permutation const&, Permutation const&) = default;

   private:
    std::vector<std::size_t> images_;
  };

  // Orbits of the group generated by the given permutations of {0..n-1},
  // each sorted, ordered by smallest point.
  [[nodiscard]] std::vector<std::vector<std::size_t>>
  orbits(std::size_t n, std::span<Permutation const> generators);

  ////////////////////////////////////////////////////////////////////////

  // r == x_i^-1 w^-1 x_j w
  struct WirtingerWitness {
    generator_index i = 0;
    generator_index j = 0;
    Word            w;
  };

  struct WirtingerResult {
    CheckOutcome                  outcome;
    std::vector<WirtingerWitness> witnesses;  // one per relator when Yes
  };

  [[nodiscard]] WirtingerResult is_wirtinger(Presentation const& p);

  ////////////////////////////////////////////////////////////////////////

  // beta_j = x_j r_j, and conjugators[j]^-1 x_mu(j) conjugators[j] = beta_j.
  struct ArtinResult {
    CheckOutcome       outcome;
    std::vector<Word>  betas;
    std::optional<Permutation> mu;
    std::vector<Word>  conjugators;
  };

  [[nodiscard]] ArtinResult artin_check(Presentation const& p);

  ////////////////////////////////////////////////////////////////////////

  struct EliminationStep {
    generator_index generator;  // index in the presentation at that step
    std::string     name;
    std::size_t     relator;    // defining relator index at that step
    Word            image;      // over the alphabet at that step
  };

  struct EliminationTrace {
    std::vector<EliminationStep> steps;
    Presentation                 result;  // relator-free when successful
  };

  // Greedy Tietze elimination: repeatedly drop freely trivial relators and
  // eliminate the lowest generator occurring exactly once in the lowest such
  // relator. Succeeds when no relators remain within `max_steps` steps.
  [[nodiscard]] std::optional<EliminationTrace>
  eliminate_to_free(Presentation const& p, std::size_t max_steps);

  // Re-run a trace from p and check it ends at a relator-free presentation.
  [[nodiscard]] bool replay(Presentation const&     p,
                            EliminationTrace const& trace);

  struct TwoKnotResult {
    CheckOutcome                          outcome;
    std::vector<Word>                     betas;
    std::vector<Word>                     betas_prime;
    std::optional<Permutation>            mu;
    std::vector<std::vector<std::size_t>> orbits;
    std::optional<EliminationTrace>       trace;
    std::optional<EliminationTrace>       trace_prime;
  };

  // Relators: x_{2i-1}^-1 x_{2i} (i = 1..h) then x_j^-1 beta_j (j = 1..n).
  [[nodiscard]] TwoKnotResult two_knot_check(Presentation const& p,
                                             std::size_t         h,
                                             std::size_t         max_steps);

  ////////////////////////////////////////////////////////////////////////

  enum class H2Status { certified, not_determined };

  struct KervaireReport {
    bool                                           h1_infinite_cyclic = false;
    AbelianInvariants                              h1;
    std::vector<std::pair<Word, CheckOutcome>>     weight;
    H2Status                                       h2 = H2Status::not_determined;
    std::string                                    h2_reason;
  };

  [[nodiscard]] KervaireReport
  kervaire_report(Presentation const&           p,
                  std::span<Word const>         candidates,
                  std::size_t                   max_cosets,
                  std::span<IdentitySequence const> identities = {});

  // True iff the conjugated relators multiply out to the empty word.
  [[nodiscard]] bool verify_identity(Presentation const&     p,
                                     IdentitySequence const& pi);

  // Do the classes of the (verified) identities span the second homology
  // of the presentation complex?
  [[nodiscard]] bool identities_generate_h2(
      Presentation const&               p,
      std::span<IdentitySequence const> identities);

  ////////////////////////////////////////////////////////////////////////

  struct WeightOneBudget {
    TietzeBudget tietze{1, 1, 6, 1};
    std::size_t  max_depth         = 3;
    std::size_t  max_generators    = 3;
  };

  struct WeightOneEmission {
    Presentation presentation;
    Word         witness;
    // Moves from <x | x> to the presentation whose first relator was
    // deleted.
    std::vector<TietzeMove> trace;
  };

  // Breadth-first Tietze descendants of <x | x> (all present the trivial
  // group); each is emitted with its first relator removed, paired with
  // that relator.
  class WeightOneEnumerator {
   public:
    explicit WeightOneEnumerator(WeightOneBudget budget = {});

    [[nodiscard]] std::optional<WeightOneEmission> next();

   private:
    struct Node {
      Presentation            presentation;
      std::vector<TietzeMove> trace;
    };

    WeightOneBudget                 budget_;
    std::deque<Node>                queue_;
    std::set<std::string>           seen_;
  };

}  // namespace fpg

#endif  // FPG_RECOGNIZE_HPP_
