// Single Tietze moves and their budgeted neighbourhood.

#ifndef FPG_TIETZE_HPP_
#define FPG_TIETZE_HPP_

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <utility>

#include "fpg/identity.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

  struct TietzeBudget {
    // Consequence relators are products of at most this many conjugates of
    // relators or their inverses...
    std::size_t max_factors = 2;
    // ...with conjugators of at most this length.
    std::size_t max_conjugator_length = 1;
    // Longest added consequence relator.
    std::size_t max_relator_length = 12;
    // Longest defining word for a new generator.
    std::size_t max_definition_length = 2;
  };

  struct TietzeMove {
    enum class Kind {
      remove_relator,
      remove_generator,
      add_relator,
      add_generator
    };

    Kind kind = Kind::add_relator;
    // remove_relator: relator index; remove_generator: generator index.
    std::size_t index = 0;
    // remove_generator: the relator used to eliminate the generator.
    std::size_t defining_relator = 0;
    // add_relator: the new relator; add_generator: defining word;
    // remove_generator: the word substituted for the generator.
    Word word;
    // add_generator: the new generator's name.
    std::string name;
    // For relator moves: an identity over the presentation that contains
    // the relator, ending in that relator with sign -1.
    IdentitySequence certificate;
  };

  [[nodiscard]] std::string_view to_string(TietzeMove::Kind k) noexcept;

  // Applies the move, validating it. Throws PresentationError if the move
  // is not legal for p (bad index, certificate not an identity, generator
  // not eliminable through the named relator).
  [[nodiscard]] Presentation apply(Presentation const& p, TietzeMove const& m);

  [[nodiscard]] nlohmann::json to_json(Presentation const& p,
                                       TietzeMove const&   m);

  // Resumable stream of presentations one legal Tietze move away from p.
  // Emission order: removals of relators, removals of generators, added
  // relators, added generators; within a kind, shortlex in the payload.
  class TietzeNeighbors {
   public:
    TietzeNeighbors(Presentation p, TietzeBudget budget);

    [[nodiscard]] std::optional<std::pair<Presentation, TietzeMove>> next();

   private:
    void fill_stage();

    Presentation                                    source_;
    TietzeBudget                                    budget_;
    int                                             stage_ = 0;
    std::deque<std::pair<Presentation, TietzeMove>> pending_;
  };

  // All products of at most max_factors conjugated relators (any sign) with
  // conjugators up to max_conjugator_length, skipping entries that use the
  // relator `exclude`. Each product maps to the shortlex-first sequence
  // that reaches it.
  struct ConsequenceSearch {
    std::vector<std::pair<Word, IdentitySequence>> products;
  };
  [[nodiscard]] ConsequenceSearch
  consequences(Presentation const&       p,
               TietzeBudget const&       budget,
               std::optional<std::size_t> exclude = std::nullopt);

  // If g occurs exactly once in r, the word g equals modulo r.
  [[nodiscard]] std::optional<Word> solve_for(Word const& r, generator_index g);

  // Remove generator g using relator k (in which g occurs once): substitute
  // its solution into the other relators and re-index the alphabet.
  [[nodiscard]] Presentation eliminate_generator(Presentation const& p,
                                                 generator_index     g,
                                                 std::size_t         k);

  // All freely reduced words over `alphabet` generators of length <= n, in
  // shortlex order.
  [[nodiscard]] std::vector<Word> reduced_words_up_to(std::size_t alphabet,
                                                      std::size_t n);

}  // namespace fpg

#endif  // FPG_TIETZE_HPP_
