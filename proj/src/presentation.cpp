#include "fpg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_set>

#include "fpg/subgroup.hpp"

namespace fpg {

  Presentation::Presentation(std::vector<std::string> generators,
                             std::vector<Word>        relators)
      : generators_(std::move(generators)), relators_(std::move(relators)) {
    std::unordered_set<std::string_view> seen;
    for (auto const& g : generators_) {
      if (!is_valid_name(g)) {
        throw PresentationError("invalid generator name '" + g + "'");
      }
      if (!seen.insert(g).second) {
        throw PresentationError("duplicate generator name '" + g + "'");
      }
    }
    for (auto const& r : relators_) {
      if (r.alphabet_bound() > generators_.size()) {
        throw PresentationError("relator uses an undeclared generator");
      }
    }
  }

  std::optional<generator_index>
  Presentation::index_of(std::string_view name) const noexcept {
    auto it = std::find(generators_.begin(), generators_.end(), name);
    if (it == generators_.end()) {
      return std::nullopt;
    }
    return static_cast<generator_index>(it - generators_.begin());
  }

  generator_index Presentation::require(std::string_view name) const {
    if (auto i = index_of(name)) {
      return *i;
    }
    throw PresentationError("undeclared generator '" + std::string(name)
                            + "'");
  }

  long Presentation::deficiency() const noexcept {
    return static_cast<long>(generators_.size())
           - static_cast<long>(relators_.size());
  }

  bool is_valid_name(std::string_view name) noexcept {
    if (name.empty()) {
      return false;
    }
    auto head = static_cast<unsigned char>(name.front());
    if (!std::isalpha(head) && head != '_') {
      return false;
    }
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
      auto u = static_cast<unsigned char>(c);
      return std::isalnum(u) || c == '_' || c == '\'';
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class Parser {
     public:
      explicit Parser(std::string_view text) : text_(text) {}

      Presentation presentation() {
        expect('<');
        std::vector<std::string> names;
        skip_space();
        if (peek() != '|') {
          names.push_back(name());
          while (accept(',')) {
            names.push_back(name());
          }
        }
        expect('|');
        for (std::size_t i = 0; i < names.size(); ++i) {
          if (std::find(names.begin(), names.begin() + i, names[i])
              != names.begin() + i) {
            throw ParseError("duplicate generator name '" + names[i] + "'",
                             pos_);
          }
        }
        names_ = &names;
        std::vector<Word> rels;
        skip_space();
        if (peek() != '>') {
          rels.push_back(word());
          while (accept(',')) {
            rels.push_back(word());
          }
        }
        expect('>');
        end();
        return Presentation(std::move(names), std::move(rels));
      }

      Word word_over(std::vector<std::string> const& names) {
        names_ = &names;
        Word w = word();
        end();
        return w;
      }

     private:
      Word word() {
        skip_space();
        if (peek() == '1') {
          std::size_t save = pos_;
          ++pos_;
          skip_space();
          char c = peek();
          if (c == '\0' || c == ',' || c == '>' || c == ')' || c == ']') {
            return Word{};
          }
          pos_ = save;
        }
        std::vector<Letter> letters;
        bool                any = false;
        while (true) {
          skip_space();
          char c = peek();
          if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'
                || c == '(' || c == '[')) {
            break;
          }
          Word f = factor();
          letters.insert(letters.end(), f.begin(), f.end());
          any = true;
        }
        if (!any) {
          throw ParseError("expected a word", pos_);
        }
        return Word(std::move(letters));
      }

      Word factor() {
        Word base = atom();
        skip_space();
        if (accept_raw('^')) {
          return power(base, integer());
        }
        return base;
      }

      Word atom() {
        skip_space();
        if (accept_raw('(')) {
          Word w = word();
          expect(')');
          return w;
        }
        if (accept_raw('[')) {
          Word u = word();
          expect(',');
          Word v = word();
          expect(']');
          return commutator(u, v);
        }
        std::size_t at = pos_;
        std::string n  = name();
        auto        it = std::find(names_->begin(), names_->end(), n);
        if (it == names_->end()) {
          throw ParseError("undeclared generator '" + n + "'", at);
        }
        return Word::generator(
            static_cast<generator_index>(it - names_->begin()));
      }

      long integer() {
        skip_space();
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') {
          ++pos_;
        }
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          ++pos_;
        }
        std::string_view digits = text_.substr(start, pos_ - start);
        if (!digits.empty() && digits.front() == '+') {
          digits.remove_prefix(1);
        }
        long value = 0;
        auto [ptr, ec]
            = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc() || ptr != digits.data() + digits.size()
            || digits.empty()) {
          throw ParseError("expected an integer exponent", start);
        }
        return value;
      }

      std::string name() {
        skip_space();
        std::size_t start = pos_;
        char        c     = peek();
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
          throw ParseError("expected a generator name", pos_);
        }
        while (true) {
          c = peek();
          if (std::isalnum(static_cast<unsigned char>(c)) || c == '_'
              || c == '\'') {
            ++pos_;
          } else {
            break;
          }
        }
        return std::string(text_.substr(start, pos_ - start));
      }

      void skip_space() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      char peek() const {
        return pos_ < text_.size() ? text_[pos_] : '\0';
      }

      bool accept_raw(char c) {
        if (peek() == c) {
          ++pos_;
          return true;
        }
        return false;
      }

      bool accept(char c) {
        skip_space();
        return accept_raw(c);
      }

      void expect(char c) {
        if (!accept(c)) {
          throw ParseError(std::string("expected '") + c + "'", pos_);
        }
      }

      void end() {
        skip_space();
        if (pos_ != text_.size()) {
          throw ParseError("unexpected trailing input", pos_);
        }
      }

      std::string_view                text_;
      std::size_t                     pos_   = 0;
      std::vector<std::string> const* names_ = nullptr;
    };

  }  // namespace

  Presentation parse(std::string_view text) {
    return Parser(text).presentation();
  }

  Word parse_word(Presentation const& p, std::string_view text) {
    std::vector<std::string> names(p.generators().begin(),
                                   p.generators().end());
    return Parser(text).word_over(names);
  }

  std::string format_word(Presentation const& p, Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    auto        letters = w.letters();
    for (std::size_t i = 0; i < letters.size();) {
      std::size_t j = i;
      while (j < letters.size() && letters[j] == letters[i]) {
        ++j;
      }
      long exp = static_cast<long>(j - i) * letters[i].sign;
      if (!out.empty()) {
        out += ' ';
      }
      out += p.name(letters[i].gen);
      if (exp != 1) {
        out += '^';
        out += std::to_string(exp);
      }
      i = j;
    }
    return out;
  }

  std::string serialize(Presentation const& p) {
    std::string out = "< ";
    for (std::size_t i = 0; i < p.generator_count(); ++i) {
      if (i != 0) {
        out += ", ";
      }
      out += p.generators()[i];
    }
    out += p.generator_count() == 0 ? "|" : " |";
    for (std::size_t i = 0; i < p.relator_count(); ++i) {
      out += i == 0 ? " " : ", ";
      out += format_word(p, p.relators()[i]);
    }
    out += " >";
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  nlohmann::json word_to_json(Word const& w) {
    nlohmann::json out     = nlohmann::json::array();
    auto           letters = w.letters();
    for (std::size_t i = 0; i < letters.size();) {
      std::size_t j = i;
      while (j < letters.size() && letters[j] == letters[i]) {
        ++j;
      }
      out.push_back({letters[i].gen, static_cast<long>(j - i) * letters[i].sign});
      i = j;
    }
    return out;
  }

  Word word_from_json(nlohmann::json const& j) {
    std::vector<Letter> letters;
    for (auto const& pair : j) {
      if (!pair.is_array() || pair.size() != 2) {
        throw PresentationError("relator factor must be [generator, exponent]");
      }
      auto g   = pair.at(0).get<long>();
      auto exp = pair.at(1).get<long>();
      if (g < 0) {
        throw PresentationError("negative generator index");
      }
      Word f = Word::generator(static_cast<generator_index>(g),
                               static_cast<int>(exp));
      letters.insert(letters.end(), f.begin(), f.end());
    }
    return Word(std::move(letters));
  }

  nlohmann::json to_json(Presentation const& p) {
    nlohmann::json rels = nlohmann::json::array();
    for (auto const& r : p.relators()) {
      rels.push_back(word_to_json(r));
    }
    return {{"generators",
             std::vector<std::string>(p.generators().begin(),
                                      p.generators().end())},
            {"relators", std::move(rels)}};
  }

  Presentation presentation_from_json(nlohmann::json const& j) {
    try {
      auto              gens = j.at("generators").get<std::vector<std::string>>();
      std::vector<Word> rels;
      for (auto const& r : j.at("relators")) {
        rels.push_back(word_from_json(r));
      }
      return Presentation(std::move(gens), std::move(rels));
    } catch (nlohmann::json::exception const& e) {
      throw PresentationError(std::string("malformed presentation JSON: ")
                              + e.what());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Combinators
  ////////////////////////////////////////////////////////////////////////

  Presentation with_tag(Presentation const& p, std::string_view tag) {
    std::vector<std::string> gens;
    for (auto const& g : p.generators()) {
      gens.push_back(g + std::string(tag));
    }
    return Presentation(std::move(gens),
                        {p.relators().begin(), p.relators().end()});
  }

  namespace {
    void check_disjoint(std::vector<std::string> const& gens) {
      std::unordered_set<std::string_view> seen;
      for (auto const& g : gens) {
        if (!seen.insert(g).second) {
          throw PresentationError("generator name collision on '" + g + "'");
        }
      }
    }
  }  // namespace

  Presentation free_product(Presentation const& p,
                            Presentation const& q,
                            std::string_view    tag_p,
                            std::string_view    tag_q) {
    std::vector<std::string> gens;
    for (auto const& g : p.generators()) {
      gens.push_back(g + std::string(tag_p));
    }
    for (auto const& g : q.generators()) {
      gens.push_back(g + std::string(tag_q));
    }
    check_disjoint(gens);
    std::vector<Word> rels(p.relators().begin(), p.relators().end());
    auto const offset = static_cast<generator_index>(p.generator_count());
    for (auto const& r : q.relators()) {
      rels.push_back(shift(r, offset));
    }
    return Presentation(std::move(gens), std::move(rels));
  }

  Presentation direct_product(Presentation const& p,
                              Presentation const& q,
                              std::string_view    tag_p,
                              std::string_view    tag_q) {
    Presentation      fp = free_product(p, q, tag_p, tag_q);
    std::vector<Word> rels(fp.relators().begin(), fp.relators().end());
    auto const        m = static_cast<generator_index>(p.generator_count());
    auto const        n = static_cast<generator_index>(q.generator_count());
    for (generator_index x = 0; x < m; ++x) {
      for (generator_index y = 0; y < n; ++y) {
        rels.push_back(
            commutator(Word::generator(x), Word::generator(m + y)));
      }
    }
    return Presentation({fp.generators().begin(), fp.generators().end()},
                        std::move(rels));
  }

  Presentation hnn_extension(Presentation const&                    p,
                             std::string_view                       stable,
                             std::span<std::pair<Word, Word> const> pairs) {
    std::vector<std::string> gens(p.generators().begin(),
                                  p.generators().end());
    gens.emplace_back(stable);
    check_disjoint(gens);
    std::vector<Word> rels(p.relators().begin(), p.relators().end());
    Word const        s = Word::generator(
        static_cast<generator_index>(p.generator_count()));
    for (auto const& [u, v] : pairs) {
      if (u.alphabet_bound() > p.generator_count()
          || v.alphabet_bound() > p.generator_count()) {
        throw PresentationError("HNN pair uses a letter outside the base");
      }
      rels.push_back(invert(s) * u * s * invert(v));
    }
    return Presentation(std::move(gens), std::move(rels));
  }

  Presentation quotient(Presentation const& p, std::span<Word const> extra) {
    std::vector<Word> rels(p.relators().begin(), p.relators().end());
    rels.insert(rels.end(), extra.begin(), extra.end());
    return Presentation({p.generators().begin(), p.generators().end()},
                        std::move(rels));
  }

  Presentation quotient(Presentation const& p, std::initializer_list<Word> extra) {
    return quotient(p, std::span<Word const>(extra.begin(), extra.size()));
  }

  std::string fresh_name(Presentation const& p, std::string_view stem) {
    std::string name(stem);
    while (p.index_of(name)) {
      name += '_';
    }
    return name;
  }

  Presentation drop_deficiency(Presentation const& p) {
    std::vector<std::string> gens(p.generators().begin(),
                                  p.generators().end());
    std::string z1 = fresh_name(p, "z1");
    gens.push_back(z1);
    std::string z2 = fresh_name(Presentation(gens), "z2");
    gens.push_back(z2);
    auto const a = Word::generator(static_cast<generator_index>(gens.size() - 2));
    auto const b = Word::generator(static_cast<generator_index>(gens.size() - 1));
    std::vector<Word> rels(p.relators().begin(), p.relators().end());
    rels.push_back(a);
    rels.push_back(power(b, 3));
    rels.push_back(b * a * b);
    return Presentation(std::move(gens), std::move(rels));
  }

  CheckOutcome is_freely_related(Presentation const& p) {
    std::vector<Word> rels(p.relators().begin(), p.relators().end());
    auto const g = fold(p.generator_count(), rels);
    auto const r = rank(g);
    if (r == rels.size()
        && std::none_of(rels.begin(), rels.end(), [](Word const& w) {
             return w.empty();
           })) {
      return CheckOutcome::yes("relators form a free basis of rank "
                               + std::to_string(r));
    }
    return CheckOutcome::no("relators generate a free group of rank "
                            + std::to_string(r) + ", not "
                            + std::to_string(rels.size()));
  }

}  // namespace fpg
