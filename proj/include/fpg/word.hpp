// Free-group words over a positional alphabet.
//
// A Word is always stored freely reduced; every constructor and operation
// below returns reduced output. Generator indices are plain integers, names
// are attached by Presentation.

#ifndef FPG_WORD_HPP_
#define FPG_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fpg {

  using generator_index = std::uint32_t;

  struct Letter {
    generator_index gen  = 0;
    std::int8_t     sign = 1;  // +1 or -1

    [[nodiscard]] constexpr Letter inverse() const noexcept {
      return Letter{gen, static_cast<std::int8_t>(-sign)};
    }

    [[nodiscard]] constexpr bool cancels(Letter other) const noexcept {
      return gen == other.gen && sign == -other.sign;
    }

    // Dense code used as a table column: 2g for g, 2g+1 for g^-1.
    [[nodiscard]] constexpr std::size_t code() const noexcept {
      return 2 * static_cast<std::size_t>(gen) + (sign < 0 ? 1 : 0);
    }

    [[nodiscard]] static constexpr Letter from_code(std::size_t c) noexcept {
      return Letter{static_cast<generator_index>(c / 2),
                    static_cast<std::int8_t>(c % 2 == 0 ? 1 : -1)};
    }

    friend constexpr bool operator==(Letter, Letter) = default;
    // Shortlex letter order: x0 < x0^-1 < x1 < x1^-1 < ...
    friend constexpr auto operator<=>(Letter a, Letter b) noexcept {
      return a.code() <=> b.code();
    }
  };

  class Word {
   public:
    Word() = default;
    explicit Word(std::span<Letter const> letters);
    explicit Word(std::vector<Letter> letters);
    Word(std::initializer_list<Letter> letters);

    [[nodiscard]] static Word generator(generator_index g, int exponent = 1);

    [[nodiscard]] std::span<Letter const> letters() const noexcept {
      return letters_;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return letters_.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return letters_.empty();
    }
    [[nodiscard]] Letter operator[](std::size_t i) const noexcept {
      return letters_[i];
    }
    [[nodiscard]] auto begin() const noexcept {
      return letters_.begin();
    }
    [[nodiscard]] auto end() const noexcept {
      return letters_.end();
    }

    // One past the largest generator index used, 0 for the empty word.
    [[nodiscard]] std::size_t alphabet_bound() const noexcept;

    // Sum of the exponents of generator g.
    [[nodiscard]] long exponent_sum(generator_index g) const noexcept;

    // Number of letters (of either sign) equal to generator g.
    [[nodiscard]] std::size_t occurrences(generator_index g) const noexcept;

    friend bool operator==(Word const&, Word const&) = default;
    // Shortlex: shorter words first, then letterwise.
    friend std::strong_ordering operator<=>(Word const& a, Word const& b);

   private:
    std::vector<Letter> letters_;
  };

  [[nodiscard]] Word reduce(std::span<Letter const> letters);

  [[nodiscard]] Word concat(Word const& u, Word const& v);
  [[nodiscard]] Word invert(Word const& u);
  [[nodiscard]] Word power(Word const& u, long k);
  // [u, v] = u^-1 v^-1 u v
  [[nodiscard]] Word commutator(Word const& u, Word const& v);
  // u^g = g^-1 u g
  [[nodiscard]] Word conjugate(Word const& u, Word const& g);

  [[nodiscard]] Word operator*(Word const& u, Word const& v);

  [[nodiscard]] bool free_equal(std::span<Letter const> u,
                                std::span<Letter const> v);
  [[nodiscard]] bool free_equal(Word const& u, Word const& v);

  // w = c core c^-1 with core cyclically reduced.
  struct CyclicDecomposition {
    Word core;
    Word conjugator;
  };
  [[nodiscard]] CyclicDecomposition cyclic_decomposition(Word const& w);

  // Some g with g^-1 u g == v in the free group, if u and v are conjugate.
  [[nodiscard]] std::optional<Word> conjugacy_witness(Word const& u,
                                                      Word const& v);

  // All cyclic rotations of a cyclically reduced word, starting with itself.
  [[nodiscard]] std::vector<Word> rotations(Word const& w);

  // Replace every occurrence of generator g by `image` (inverse letters by
  // its inverse). Other letters are kept.
  [[nodiscard]] Word substitute(Word const&      w,
                                generator_index  g,
                                Word const&      image);

  // Apply an endomorphism given on generators: letter gi -> images[i].
  [[nodiscard]] Word apply_map(Word const& w, std::span<Word const> images);

  // Shift every generator index by `offset`.
  [[nodiscard]] Word shift(Word const& w, generator_index offset);

}  // namespace fpg

#endif  // FPG_WORD_HPP_
