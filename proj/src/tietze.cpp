#include "fpg/tietze.hpp"

#include <algorithm>
#include <map>

namespace fpg {

  ////////////////////////////////////////////////////////////////////////
  // Identity sequences
  ////////////////////////////////////////////////////////////////////////

  Word identity_product(std::span<Word const> relators,
                        IdentitySequence const& pi) {
    Word out;
    for (auto const& e : pi.entries) {
      if (e.relator_index >= relators.size()) {
        throw PresentationError("identity entry refers to relator "
                                + std::to_string(e.relator_index)
                                + " which does not exist");
      }
      if (e.sign != 1 && e.sign != -1) {
        throw PresentationError("identity entry sign must be +1 or -1");
      }
      Word r = e.sign > 0 ? relators[e.relator_index]
                          : invert(relators[e.relator_index]);
      out = out * conjugate(r, e.conjugator);
    }
    return out;
  }

  std::vector<long> relator_class(IdentitySequence const& pi,
                                  std::size_t             relator_count) {
    std::vector<long> out(relator_count, 0);
    for (auto const& e : pi.entries) {
      if (e.relator_index < relator_count) {
        out[e.relator_index] += e.sign;
      }
    }
    return out;
  }

  nlohmann::json to_json(Presentation const& p, IdentitySequence const& pi) {
    nlohmann::json out = nlohmann::json::array();
    for (auto const& e : pi.entries) {
      out.push_back({format_word(p, e.conjugator), e.relator_index, e.sign});
    }
    return out;
  }

  IdentitySequence identity_from_json(Presentation const&   p,
                                      nlohmann::json const& j) {
    IdentitySequence pi;
    try {
      for (auto const& e : j) {
        if (!e.is_array() || e.size() != 3) {
          throw PresentationError(
              "identity entry must be [conjugator, relator_index, sign]");
        }
        auto index = e.at(1).get<long>();
        if (index < 0) {
          throw PresentationError("negative relator index");
        }
        auto const sign = e.at(2).get<int>();
        if (sign != 1 && sign != -1) {
          throw PresentationError("identity sign must be 1 or -1");
        }
        auto const text = e.at(0).get<std::string>();
        Word const g    = text.find_first_not_of(" \t") == std::string::npos
                              ? Word{}
                              : parse_word(p, text);
        pi.entries.push_back({g, static_cast<std::size_t>(index), sign});
      }
    } catch (nlohmann::json::exception const& ex) {
      throw PresentationError(std::string("malformed identity JSON: ")
                              + ex.what());
    }
    return pi;
  }

  ////////////////////////////////////////////////////////////////////////
  // Helpers
  ////////////////////////////////////////////////////////////////////////

  std::vector<Word> reduced_words_up_to(std::size_t alphabet, std::size_t n) {
    std::vector<Word> out{Word{}};
    std::size_t       begin = 0;
    for (std::size_t len = 1; len <= n; ++len) {
      std::size_t end = out.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t c = 0; c < 2 * alphabet; ++c) {
          Letter l = Letter::from_code(c);
          if (!out[i].empty() && out[i].letters().back().cancels(l)) {
            continue;
          }
          std::vector<Letter> letters(out[i].begin(), out[i].end());
          letters.push_back(l);
          out.emplace_back(std::move(letters));
        }
      }
      begin = end;
    }
    return out;
  }

  std::optional<Word> solve_for(Word const& r, generator_index g) {
    if (r.occurrences(g) != 1) {
      return std::nullopt;
    }
    auto        letters = r.letters();
    std::size_t pos     = 0;
    while (letters[pos].gen != g) {
      ++pos;
    }
    Word u(letters.first(pos));
    Word v(letters.subspan(pos + 1));
    // u g^e v = 1
    if (letters[pos].sign > 0) {
      return invert(u) * invert(v);
    }
    return v * u;
  }

  namespace {
    // Drops generator g from the alphabet; words must not contain g.
    std::vector<Word> reindex_images(std::size_t n, generator_index g) {
      std::vector<Word> images(n);
      for (generator_index i = 0; i < n; ++i) {
        if (i < g) {
          images[i] = Word::generator(i);
        } else if (i > g) {
          images[i] = Word::generator(i - 1);
        }
      }
      return images;
    }
  }  // namespace

  Presentation eliminate_generator(Presentation const& p,
                                   generator_index     g,
                                   std::size_t         k) {
    if (g >= p.generator_count() || k >= p.relator_count()) {
      throw PresentationError("elimination index out of range");
    }
    auto image = solve_for(p.relators()[k], g);
    if (!image) {
      throw PresentationError("generator " + p.name(g)
                              + " does not occur exactly once in relator "
                              + std::to_string(k));
    }
    auto const images = reindex_images(p.generator_count(), g);
    std::vector<Word> rels;
    for (std::size_t i = 0; i < p.relator_count(); ++i) {
      if (i != k) {
        rels.push_back(apply_map(substitute(p.relators()[i], g, *image), images));
      }
    }
    std::vector<std::string> gens;
    for (std::size_t i = 0; i < p.generator_count(); ++i) {
      if (i != g) {
        gens.push_back(p.generators()[i]);
      }
    }
    return Presentation(std::move(gens), std::move(rels));
  }

  ConsequenceSearch consequences(Presentation const&        p,
                                 TietzeBudget const&        budget,
                                 std::optional<std::size_t> exclude) {
    auto const conjugators
        = reduced_words_up_to(p.generator_count(), budget.max_conjugator_length);
    std::vector<std::pair<Word, IdentityEntry>> factors;
    for (auto const& c : conjugators) {
      for (std::size_t k = 0; k < p.relator_count(); ++k) {
        if (exclude && *exclude == k) {
          continue;
        }
        for (int sign : {1, -1}) {
          Word r = sign > 0 ? p.relators()[k] : invert(p.relators()[k]);
          factors.emplace_back(conjugate(r, c), IdentityEntry{c, k, sign});
        }
      }
    }
    ConsequenceSearch           out;
    std::map<Word, std::size_t> seen;
    out.products.emplace_back(Word{}, IdentitySequence{});
    seen.emplace(Word{}, 0);
    std::size_t begin = 0;
    for (std::size_t level = 1; level <= budget.max_factors; ++level) {
      std::size_t end = out.products.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (auto const& [f, entry] : factors) {
          Word w = out.products[i].first * f;
          if (seen.contains(w)) {
            continue;
          }
          IdentitySequence seq = out.products[i].second;
          seq.entries.push_back(entry);
          seen.emplace(w, out.products.size());
          out.products.emplace_back(std::move(w), std::move(seq));
        }
      }
      begin = end;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Moves
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(TietzeMove::Kind k) noexcept {
    switch (k) {
      case TietzeMove::Kind::remove_relator:
        return "remove-redundant-relator";
      case TietzeMove::Kind::remove_generator:
        return "remove-generator";
      case TietzeMove::Kind::add_relator:
        return "add-redundant-relator";
      case TietzeMove::Kind::add_generator:
        return "add-generator";
    }
    return "unknown";
  }

  namespace {
    Presentation without_relator(Presentation const& p, std::size_t i) {
      std::vector<Word> rels;
      for (std::size_t k = 0; k < p.relator_count(); ++k) {
        if (k != i) {
          rels.push_back(p.relators()[k]);
        }
      }
      return Presentation({p.generators().begin(), p.generators().end()},
                          std::move(rels));
    }

    // The certificate must be an identity using relator i exactly once.
    void check_certificate(Presentation const&     p,
                           std::size_t             i,
                           IdentitySequence const& cert) {
      auto uses = std::count_if(
          cert.entries.begin(), cert.entries.end(),
          [i](IdentityEntry const& e) { return e.relator_index == i; });
      if (uses != 1) {
        throw PresentationError(
            "certificate must use the redundant relator exactly once");
      }
      if (!identity_product(p.relators(), cert).empty()) {
        throw PresentationError("certificate is not an identity");
      }
    }

    std::string new_generator_name(Presentation const& p) {
      if (!p.index_of("y")) {
        return "y";
      }
      for (std::size_t i = 1;; ++i) {
        std::string name = "y" + std::to_string(i);
        if (!p.index_of(name)) {
          return name;
        }
      }
    }
  }  // namespace

  Presentation apply(Presentation const& p, TietzeMove const& m) {
    switch (m.kind) {
      case TietzeMove::Kind::remove_relator: {
        if (m.index >= p.relator_count()) {
          throw PresentationError("relator index out of range");
        }
        check_certificate(p, m.index, m.certificate);
        return without_relator(p, m.index);
      }
      case TietzeMove::Kind::remove_generator: {
        if (m.defining_relator >= p.relator_count()) {
          throw PresentationError("defining relator index out of range");
        }
        auto const solved = solve_for(p.relators()[m.defining_relator],
                                      static_cast<generator_index>(m.index));
        if (!solved || *solved != m.word) {
          throw PresentationError("substitution does not solve the relator");
        }
        return eliminate_generator(p, static_cast<generator_index>(m.index),
                                   m.defining_relator);
      }
      case TietzeMove::Kind::add_relator: {
        if (m.word.alphabet_bound() > p.generator_count()) {
          throw PresentationError("added relator uses an undeclared generator");
        }
        Presentation q = quotient(p, {m.word});
        check_certificate(q, q.relator_count() - 1, m.certificate);
        return q;
      }
      case TietzeMove::Kind::add_generator: {
        if (m.word.alphabet_bound() > p.generator_count()) {
          throw PresentationError("definition uses an undeclared generator");
        }
        std::vector<std::string> gens(p.generators().begin(),
                                      p.generators().end());
        gens.push_back(m.name);
        std::vector<Word> rels(p.relators().begin(), p.relators().end());
        auto const y = Word::generator(
            static_cast<generator_index>(p.generator_count()));
        rels.push_back(y * invert(m.word));
        return Presentation(std::move(gens), std::move(rels));
      }
    }
    throw PresentationError("unknown Tietze move");
  }

  nlohmann::json to_json(Presentation const& p, TietzeMove const& m) {
    nlohmann::json out{{"kind", to_string(m.kind)}};
    switch (m.kind) {
      case TietzeMove::Kind::remove_relator:
        out["index"]       = m.index;
        out["certificate"] = to_json(p, m.certificate);
        break;
      case TietzeMove::Kind::remove_generator:
        out["generator"]        = p.name(static_cast<generator_index>(m.index));
        out["defining_relator"] = m.defining_relator;
        out["substitution"]     = format_word(p, m.word);
        break;
      case TietzeMove::Kind::add_relator: {
        Presentation q     = quotient(p, {m.word});
        out["relator"]     = format_word(p, m.word);
        out["certificate"] = to_json(q, m.certificate);
        break;
      }
      case TietzeMove::Kind::add_generator:
        out["name"]       = m.name;
        out["definition"] = format_word(p, m.word);
        break;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Neighbourhood stream
  ////////////////////////////////////////////////////////////////////////

  TietzeNeighbors::TietzeNeighbors(Presentation p, TietzeBudget budget)
      : source_(std::move(p)), budget_(budget) {}

  std::optional<std::pair<Presentation, TietzeMove>> TietzeNeighbors::next() {
    while (pending_.empty() && stage_ < 4) {
      fill_stage();
      ++stage_;
    }
    if (pending_.empty()) {
      return std::nullopt;
    }
    auto out = std::move(pending_.front());
    pending_.pop_front();
    return out;
  }

  void TietzeNeighbors::fill_stage() {
    Presentation const& p = source_;
    switch (stage_) {
      case 0: {
        for (std::size_t i = 0; i < p.relator_count(); ++i) {
          auto search = consequences(p, budget_, i);
          for (auto const& [w, seq] : search.products) {
            if (w != p.relators()[i]) {
              continue;
            }
            TietzeMove m;
            m.kind        = TietzeMove::Kind::remove_relator;
            m.index       = i;
            m.certificate = seq;
            m.certificate.entries.push_back({Word{}, i, -1});
            pending_.emplace_back(apply(p, m), std::move(m));
            break;
          }
        }
        break;
      }
      case 1: {
        for (generator_index g = 0; g < p.generator_count(); ++g) {
          for (std::size_t k = 0; k < p.relator_count(); ++k) {
            if (auto image = solve_for(p.relators()[k], g)) {
              TietzeMove m;
              m.kind             = TietzeMove::Kind::remove_generator;
              m.index            = g;
              m.defining_relator = k;
              m.word             = *image;
              pending_.emplace_back(apply(p, m), std::move(m));
            }
          }
        }
        break;
      }
      case 2: {
        auto search = consequences(p, budget_);
        std::vector<std::pair<Word, IdentitySequence>> candidates;
        for (auto& [w, seq] : search.products) {
          if (w.empty() || w.size() > budget_.max_relator_length) {
            continue;
          }
          if (std::find(p.relators().begin(), p.relators().end(), w)
              != p.relators().end()) {
            continue;
          }
          candidates.emplace_back(w, seq);
        }
        std::sort(candidates.begin(), candidates.end(),
                  [](auto const& a, auto const& b) { return a.first < b.first; });
        for (auto& [w, seq] : candidates) {
          TietzeMove m;
          m.kind        = TietzeMove::Kind::add_relator;
          m.word        = w;
          m.certificate = std::move(seq);
          m.certificate.entries.push_back({Word{}, p.relator_count(), -1});
          pending_.emplace_back(apply(p, m), std::move(m));
        }
        break;
      }
      case 3: {
        std::string name = new_generator_name(p);
        for (auto const& w : reduced_words_up_to(p.generator_count(),
                                                 budget_.max_definition_length)) {
          TietzeMove m;
          m.kind = TietzeMove::Kind::add_generator;
          m.name = name;
          m.word = w;
          pending_.emplace_back(apply(p, m), std::move(m));
        }
        break;
      }
      default:
        break;
    }
  }

}  // namespace fpg
