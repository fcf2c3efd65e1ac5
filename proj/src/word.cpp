#include "fpg/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace fpg {

  namespace {
    void push_reduced(std::vector<Letter>& out, Letter l) {
      if (!out.empty() && out.back().cancels(l)) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }

    std::vector<Letter> reduced_letters(std::span<Letter const> letters) {
      std::vector<Letter> out;
      out.reserve(letters.size());
      for (Letter l : letters) {
        push_reduced(out, l);
      }
      return out;
    }
  }  // namespace

  Word::Word(std::span<Letter const> letters)
      : letters_(reduced_letters(letters)) {}

  Word::Word(std::vector<Letter> letters)
      : letters_(reduced_letters(letters)) {}

  Word::Word(std::initializer_list<Letter> letters)
      : letters_(reduced_letters({letters.begin(), letters.size()})) {}

  Word Word::generator(generator_index g, int exponent) {
    Word w;
    Letter l{g, static_cast<std::int8_t>(exponent < 0 ? -1 : 1)};
    w.letters_.assign(static_cast<std::size_t>(std::abs(exponent)), l);
    return w;
  }

  std::size_t Word::alphabet_bound() const noexcept {
    std::size_t bound = 0;
    for (Letter l : letters_) {
      bound = std::max(bound, static_cast<std::size_t>(l.gen) + 1);
    }
    return bound;
  }

  long Word::exponent_sum(generator_index g) const noexcept {
    long sum = 0;
    for (Letter l : letters_) {
      if (l.gen == g) {
        sum += l.sign;
      }
    }
    return sum;
  }

  std::size_t Word::occurrences(generator_index g) const noexcept {
    return static_cast<std::size_t>(std::count_if(
        letters_.begin(), letters_.end(), [g](Letter l) { return l.gen == g; }));
  }

  std::strong_ordering operator<=>(Word const& a, Word const& b) {
    if (auto c = a.size() <=> b.size(); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        a.begin(), a.end(), b.begin(), b.end());
  }

  Word reduce(std::span<Letter const> letters) {
    return Word(letters);
  }

  Word concat(Word const& u, Word const& v) {
    std::vector<Letter> out(u.begin(), u.end());
    out.reserve(u.size() + v.size());
    for (Letter l : v) {
      push_reduced(out, l);
    }
    return Word(std::move(out));
  }

  Word operator*(Word const& u, Word const& v) {
    return concat(u, v);
  }

  Word invert(Word const& u) {
    std::vector<Letter> out;
    out.reserve(u.size());
    for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
      out.push_back(it->inverse());
    }
    return Word(std::move(out));
  }

  Word power(Word const& u, long k) {
    Word base = k < 0 ? invert(u) : u;
    Word out;
    for (long i = 0; i < std::labs(k); ++i) {
      out = concat(out, base);
    }
    return out;
  }

  Word commutator(Word const& u, Word const& v) {
    return invert(u) * invert(v) * u * v;
  }

  Word conjugate(Word const& u, Word const& g) {
    return invert(g) * u * g;
  }

  bool free_equal(std::span<Letter const> u, std::span<Letter const> v) {
    return reduce(u) == reduce(v);
  }

  bool free_equal(Word const& u, Word const& v) {
    return u == v;
  }

  CyclicDecomposition cyclic_decomposition(Word const& w) {
    auto        letters = w.letters();
    std::size_t lo      = 0;
    std::size_t hi      = letters.size();
    while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
      ++lo;
      --hi;
    }
    return {Word(letters.subspan(lo, hi - lo)), Word(letters.first(lo))};
  }

  std::vector<Word> rotations(Word const& w) {
    std::vector<Word> out;
    auto              letters = w.letters();
    std::size_t const n       = letters.size();
    if (n == 0) {
      out.emplace_back();
      return out;
    }
    std::vector<Letter> buf(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        buf[i] = letters[(i + k) % n];
      }
      out.emplace_back(buf);
    }
    return out;
  }

  std::optional<Word> conjugacy_witness(Word const& u, Word const& v) {
    // u = a u' a^-1, v = b v' b^-1. If v' = p^-1 u' p for a prefix p of u',
    // then g = a p b^-1 satisfies g^-1 u g = v.
    auto [cu, a] = cyclic_decomposition(u);
    auto [cv, b] = cyclic_decomposition(v);
    if (cu.size() != cv.size()) {
      return std::nullopt;
    }
    std::size_t const n = cu.size();
    if (n == 0) {
      return a * invert(b);
    }
    auto lu = cu.letters();
    auto lv = cv.letters();
    for (std::size_t k = 0; k < n; ++k) {
      bool match = true;
      for (std::size_t i = 0; i < n && match; ++i) {
        match = lu[(i + k) % n] == lv[i];
      }
      if (match) {
        Word p(lu.first(k));
        return a * p * invert(b);
      }
    }
    return std::nullopt;
  }

  Word substitute(Word const& w, generator_index g, Word const& image) {
    Word const          inv = invert(image);
    std::vector<Letter> out;
    for (Letter l : w) {
      if (l.gen != g) {
        push_reduced(out, l);
        continue;
      }
      for (Letter m : (l.sign > 0 ? image : inv)) {
        push_reduced(out, m);
      }
    }
    return Word(std::move(out));
  }

  Word apply_map(Word const& w, std::span<Word const> images) {
    std::vector<Letter> out;
    for (Letter l : w) {
      Word const& img = images[l.gen];
      if (l.sign > 0) {
        for (Letter m : img) {
          push_reduced(out, m);
        }
      } else {
        for (auto it = img.letters().rbegin(); it != img.letters().rend();
             ++it) {
          push_reduced(out, it->inverse());
        }
      }
    }
    return Word(std::move(out));
  }

  Word shift(Word const& w, generator_index offset) {
    std::vector<Letter> out(w.begin(), w.end());
    for (Letter& l : out) {
      l.gen += offset;
    }
    return Word(std::move(out));
  }

}  // namespace fpg
