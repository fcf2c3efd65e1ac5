// Identity sequences: tuples of conjugated relators whose product is
// freely trivial.

#ifndef FPG_IDENTITY_HPP_
#define FPG_IDENTITY_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "fpg/presentation.hpp"
#include "fpg/word.hpp"

namespace fpg {

  // conjugator^-1 * relator^sign * conjugator
  struct IdentityEntry {
    Word        conjugator;
    std::size_t relator_index = 0;
    int         sign          = 1;

    friend bool operator==(IdentityEntry const&, IdentityEntry const&)
        = default;
  };

  struct IdentitySequence {
    std::vector<IdentityEntry> entries;

    friend bool operator==(IdentitySequence const&, IdentitySequence const&)
        = default;
  };

  // Freely reduced product of the entries. Throws PresentationError on an
  // out-of-range relator index.
  [[nodiscard]] Word identity_product(std::span<Word const>   relators,
                                      IdentitySequence const& pi);

  // Signed number of occurrences of each relator; this is the class of the
  // identity in the second homology of the presentation complex.
  [[nodiscard]] std::vector<long> relator_class(IdentitySequence const& pi,
                                                std::size_t relator_count);

  // [[conjugator-word, relator_index, sign], ...] with words in the text
  // syntax of p.
  [[nodiscard]] nlohmann::json   to_json(Presentation const&     p,
                                         IdentitySequence const& pi);
  [[nodiscard]] IdentitySequence identity_from_json(Presentation const&   p,
                                                    nlohmann::json const& j);

}  // namespace fpg

#endif  // FPG_IDENTITY_HPP_
