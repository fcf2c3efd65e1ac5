// Finite group presentations <x_1, ..., x_m | r_1, ..., r_n>.
//
// Text grammar:
//
//   presentation := '<' [name (',' name)*] '|' [word (',' word)*] '>'
//   word         := '1' | factor+
//   factor       := atom ['^' int]
//   atom         := name | '(' word ')' | '[' word ',' word ']'
//
// Names match [A-Za-z_][A-Za-z0-9_']*. Brackets denote the commutator
// [u, v] = u^-1 v^-1 u v. serialize() only ever emits names and exponents.

#ifndef FPG_PRESENTATION_HPP_
#define FPG_PRESENTATION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fpg/outcome.hpp"
#include "fpg/word.hpp"

namespace fpg {

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& msg, std::size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)),
          position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept {
      return position_;
    }

   private:
    std::size_t position_;
  };

  // Invalid presentation data: duplicate or colliding names, out-of-range
  // letters, violated construction preconditions.
  class PresentationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  class Presentation {
   public:
    Presentation() = default;
    Presentation(std::vector<std::string> generators,
                 std::vector<Word>        relators = {});

    [[nodiscard]] std::span<std::string const> generators() const noexcept {
      return generators_;
    }
    [[nodiscard]] std::span<Word const> relators() const noexcept {
      return relators_;
    }
    [[nodiscard]] std::size_t generator_count() const noexcept {
      return generators_.size();
    }
    [[nodiscard]] std::size_t relator_count() const noexcept {
      return relators_.size();
    }
    [[nodiscard]] std::string const& name(generator_index g) const {
      return generators_.at(g);
    }
    [[nodiscard]] std::optional<generator_index>
    index_of(std::string_view name) const noexcept;

    // Index of `name`, throwing PresentationError if undeclared.
    [[nodiscard]] generator_index require(std::string_view name) const;

    // Word for a single named generator.
    [[nodiscard]] Word letter(std::string_view name) const {
      return Word::generator(require(name));
    }

    // gens - rels
    [[nodiscard]] long deficiency() const noexcept;

    friend bool operator==(Presentation const&, Presentation const&) = default;

   private:
    std::vector<std::string> generators_;
    std::vector<Word>        relators_;
  };

  [[nodiscard]] bool is_valid_name(std::string_view name) noexcept;

  [[nodiscard]] Presentation parse(std::string_view text);
  [[nodiscard]] std::string  serialize(Presentation const& p);

  // Parse a word over the generator names of p.
  [[nodiscard]] Word        parse_word(Presentation const& p,
                                       std::string_view    text);
  [[nodiscard]] std::string format_word(Presentation const& p, Word const& w);

  // {"generators": [...], "relators": [[[gen, exp], ...], ...]}, with each
  // relator run-length encoded into (generator, nonzero exponent) pairs.
  [[nodiscard]] nlohmann::json to_json(Presentation const& p);
  [[nodiscard]] Presentation   presentation_from_json(nlohmann::json const& j);
  [[nodiscard]] nlohmann::json word_to_json(Word const& w);
  [[nodiscard]] Word           word_from_json(nlohmann::json const& j);

  // Copy of p with `tag` appended to every generator name.
  [[nodiscard]] Presentation with_tag(Presentation const& p,
                                      std::string_view    tag);

  // Generators and relators of p (tagged) followed by those of q (tagged).
  // Throws PresentationError on a name collision.
  [[nodiscard]] Presentation free_product(Presentation const& p,
                                          Presentation const& q,
                                          std::string_view    tag_p = "",
                                          std::string_view    tag_q = "");

  // free_product plus [x, y] for every x of p and y of q (x-major order).
  [[nodiscard]] Presentation direct_product(Presentation const& p,
                                            Presentation const& q,
                                            std::string_view    tag_p = "",
                                            std::string_view    tag_q = "");

  // Adjoin the stable letter and, for each (u, v), the relator
  // stable^-1 u stable v^-1.
  [[nodiscard]] Presentation
  hnn_extension(Presentation const&                  p,
                std::string_view                     stable,
                std::span<std::pair<Word, Word> const> pairs);

  [[nodiscard]] Presentation quotient(Presentation const&   p,
                                      std::span<Word const> extra);
  [[nodiscard]] Presentation quotient(Presentation const& p,
                                      std::initializer_list<Word> extra);

  // Adds generators z1, z2 (renamed if taken) and relators z1, z2^3,
  // z2 z1 z2: same group, deficiency one lower, freely-relatedness kept.
  [[nodiscard]] Presentation drop_deficiency(Presentation const& p);

  // A generator name not used in p, starting from `stem`.
  [[nodiscard]] std::string fresh_name(Presentation const& p,
                                       std::string_view    stem);

  // Yes iff the relators freely generate a free group of rank equal to
  // their number. Always Yes or No.
  [[nodiscard]] CheckOutcome is_freely_related(Presentation const& p);

}  // namespace fpg

#endif  // FPG_PRESENTATION_HPP_
