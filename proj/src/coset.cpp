#include "fpg/coset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fpg {

  CosetTable::CosetTable(std::size_t                generator_count,
                         std::vector<std::uint32_t> action)
      : generator_count_(generator_count), action_(std::move(action)) {
    if (generator_count_ != 0 && action_.size() % (2 * generator_count_) != 0) {
      throw std::invalid_argument("coset table has a ragged row");
    }
  }

  std::size_t CosetTable::trace(std::size_t coset, Word const& w) const {
    for (Letter l : w) {
      coset = target(coset, l);
    }
    return coset;
  }

  bool CosetTable::is_closed(std::span<Word const> relators,
                             std::span<Word const> subgroup) const {
    for (std::size_t c = 0; c < rows(); ++c) {
      for (auto const& r : relators) {
        if (trace(c, r) != c) {
          return false;
        }
      }
    }
    return std::all_of(subgroup.begin(), subgroup.end(),
                       [&](Word const& h) { return trace(0, h) == 0; });
  }

  std::vector<std::size_t> CosetTable::permutation(generator_index g) const {
    std::vector<std::size_t> out(rows());
    for (std::size_t c = 0; c < rows(); ++c) {
      out[c] = target(c, Letter{g, 1});
    }
    return out;
  }

  namespace {

    struct OutOfSpace {};

    class Enumerator {
     public:
      using index_t = std::int32_t;

      Enumerator(Presentation const&   p,
                 std::span<Word const> subgroup,
                 std::size_t           max_cosets)
          : cols_(2 * p.generator_count()), max_live_(max_cosets) {
        std::vector<std::size_t> order(p.relator_count());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) {
                           return p.relators()[a].size()
                                  < p.relators()[b].size();
                         });
        for (auto i : order) {
          if (!p.relators()[i].empty()) {
            relators_.push_back(codes(p.relators()[i]));
          }
        }
        for (auto const& h : subgroup) {
          if (!h.empty()) {
            subgroup_.push_back(codes(h));
          }
        }
      }

      EnumerationResult run() {
        if (max_live_ == 0) {
          return Exhausted{0};
        }
        new_coset();
        if (cols_ == 0) {
          return Finite{1, CosetTable(0, {}), 1};
        }
        while (true) {
          try {
            for (auto const& h : subgroup_) {
              scan_and_fill(0, h);
            }
            break;
          } catch (OutOfSpace const&) {
            if (!lookahead()) {
              return Exhausted{defined_};
            }
          }
        }
        while (true) {
          index_t c = 0;
          while (static_cast<std::size_t>(c) < rows()) {
            if (!alive(c)) {
              ++c;
              continue;
            }
            try {
              for (auto const& r : relators_) {
                scan_and_fill(c, r);
                if (!alive(c)) {
                  break;
                }
              }
              if (alive(c)) {
                for (std::size_t x = 0; x < cols_; ++x) {
                  if (at(c, x) < 0) {
                    define(c, x);
                  }
                }
              }
            } catch (OutOfSpace const&) {
              if (!lookahead()) {
                return Exhausted{defined_};
              }
              c = compact(c);
              continue;
            }
            ++c;
            if (dead_rows() > 4096 && dead_rows() > live_) {
              c = compact(c);
            }
          }
          compact(0);
          if (table_complete_and_closed()) {
            break;
          }
        }
        std::vector<std::uint32_t> action(table_.begin(), table_.end());
        std::size_t const          n = rows();
        return Finite{n, CosetTable(cols_ / 2, std::move(action)), defined_};
      }

     private:
      static std::vector<std::size_t> codes(Word const& w) {
        std::vector<std::size_t> out;
        out.reserve(w.size());
        for (Letter l : w) {
          out.push_back(l.code());
        }
        return out;
      }

      std::size_t rows() const {
        return parent_.size();
      }

      std::size_t dead_rows() const {
        return rows() - live_;
      }

      index_t& at(index_t c, std::size_t x) {
        return table_[static_cast<std::size_t>(c) * cols_ + x];
      }

      bool alive(index_t c) const {
        return parent_[static_cast<std::size_t>(c)] == c;
      }

      index_t new_coset() {
        if (live_ >= max_live_) {
          throw OutOfSpace{};
        }
        auto c = static_cast<index_t>(parent_.size());
        parent_.push_back(c);
        table_.resize(table_.size() + cols_, -1);
        ++live_;
        ++defined_;
        return c;
      }

      void define(index_t c, std::size_t x) {
        index_t d  = new_coset();
        at(c, x)     = d;
        at(d, x ^ 1) = c;
      }

      index_t rep(index_t k) {
        index_t r = k;
        while (parent_[static_cast<std::size_t>(r)] != r) {
          r = parent_[static_cast<std::size_t>(r)];
        }
        while (parent_[static_cast<std::size_t>(k)] != r) {
          index_t next                         = parent_[static_cast<std::size_t>(k)];
          parent_[static_cast<std::size_t>(k)] = r;
          k                                    = next;
        }
        return r;
      }

      void merge(index_t k, index_t l) {
        k = rep(k);
        l = rep(l);
        if (k == l) {
          return;
        }
        index_t mu                            = std::min(k, l);
        index_t nu                            = std::max(k, l);
        parent_[static_cast<std::size_t>(nu)] = mu;
        queue_.push_back(nu);
        --live_;
      }

      void coincidence(index_t a, index_t b) {
        queue_.clear();
        merge(a, b);
        for (std::size_t i = 0; i < queue_.size(); ++i) {
          index_t g = queue_[i];
          for (std::size_t x = 0; x < cols_; ++x) {
            index_t d = at(g, x);
            if (d < 0) {
              continue;
            }
            std::size_t xi = x ^ 1;
            if (at(d, xi) == g) {
              at(d, xi) = -1;
            }
            index_t mu = rep(g);
            index_t nu = rep(d);
            if (at(mu, x) >= 0) {
              merge(nu, at(mu, x));
            } else if (at(nu, xi) >= 0) {
              merge(mu, at(nu, xi));
            } else {
              at(mu, x)  = nu;
              at(nu, xi) = mu;
            }
          }
        }
      }

      // Scan w at coset a, defining new cosets when fill is set. Returns
      // after the scan closes, deduces, or (without fill) gets stuck.
      void scan(index_t a, std::vector<std::size_t> const& w, bool fill) {
        index_t        f = a;
        index_t        b = a;
        std::ptrdiff_t i = 0;
        std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
        while (true) {
          while (i <= j && at(f, w[static_cast<std::size_t>(i)]) >= 0) {
            f = at(f, w[static_cast<std::size_t>(i)]);
            ++i;
          }
          if (i > j) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          while (j >= i && at(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0) {
            b = at(b, w[static_cast<std::size_t>(j)] ^ 1);
            --j;
          }
          if (j < i) {
            coincidence(f, b);
            return;
          }
          if (i == j) {
            std::size_t x = w[static_cast<std::size_t>(i)];
            at(f, x)      = b;
            at(b, x ^ 1)  = f;
            return;
          }
          if (!fill) {
            return;
          }
          define(f, w[static_cast<std::size_t>(i)]);
        }
      }

      void scan_and_fill(index_t a, std::vector<std::size_t> const& w) {
        scan(a, w, true);
      }

      // Scan every relator at every live coset without defining anything.
      // Returns true if some coset was freed.
      bool lookahead() {
        std::size_t before = live_;
        for (auto const& h : subgroup_) {
          scan(rep(0), h, false);
        }
        for (std::size_t c = 0; c < rows(); ++c) {
          auto k = static_cast<index_t>(c);
          for (auto const& r : relators_) {
            if (!alive(k)) {
              break;
            }
            scan(k, r, false);
          }
        }
        return live_ < before;
      }

      // Drop dead rows, renumbering live cosets in order. Returns the new
      // index of the first live coset at or after c.
      index_t compact(index_t c) {
        std::vector<index_t> renumber(rows(), -1);
        index_t              next = 0;
        index_t              mapped_c = -1;
        for (std::size_t k = 0; k < rows(); ++k) {
          if (alive(static_cast<index_t>(k))) {
            if (mapped_c < 0 && static_cast<index_t>(k) >= c) {
              mapped_c = next;
            }
            renumber[k] = next++;
          }
        }
        std::vector<index_t> table(static_cast<std::size_t>(next) * cols_, -1);
        for (std::size_t k = 0; k < rows(); ++k) {
          if (renumber[k] < 0) {
            continue;
          }
          for (std::size_t x = 0; x < cols_; ++x) {
            index_t t = table_[k * cols_ + x];
            if (t >= 0) {
              table[static_cast<std::size_t>(renumber[k]) * cols_ + x]
                  = renumber[static_cast<std::size_t>(rep(t))];
            }
          }
        }
        table_ = std::move(table);
        parent_.resize(static_cast<std::size_t>(next));
        std::iota(parent_.begin(), parent_.end(), 0);
        return mapped_c < 0 ? next : mapped_c;
      }

      bool table_complete_and_closed() {
        if (std::any_of(table_.begin(), table_.end(),
                        [](index_t t) { return t < 0; })) {
          return false;
        }
        auto trace = [&](index_t c, std::vector<std::size_t> const& w) {
          for (auto x : w) {
            c = at(c, x);
          }
          return c;
        };
        for (std::size_t c = 0; c < rows(); ++c) {
          for (auto const& r : relators_) {
            if (trace(static_cast<index_t>(c), r) != static_cast<index_t>(c)) {
              return false;
            }
          }
        }
        return std::all_of(subgroup_.begin(), subgroup_.end(),
                           [&](auto const& h) { return trace(0, h) == 0; });
      }

      std::size_t                           cols_;
      std::size_t                           max_live_;
      std::vector<std::vector<std::size_t>> relators_;
      std::vector<std::vector<std::size_t>> subgroup_;
      std::vector<index_t>                  table_;
      std::vector<index_t>                  parent_;
      std::vector<index_t>                  queue_;
      std::size_t                           live_    = 0;
      std::size_t                           defined_ = 0;
    };

  }  // namespace

  EnumerationResult enumerate(Presentation const&   p,
                              std::span<Word const> subgroup,
                              std::size_t           max_cosets) {
    for (auto const& h : subgroup) {
      if (h.alphabet_bound() > p.generator_count()) {
        throw PresentationError("subgroup word uses an undeclared generator");
      }
    }
    return Enumerator(p, subgroup, max_cosets).run();
  }

  EnumerationResult order(Presentation const& p, std::size_t max_cosets) {
    return enumerate(p, {}, max_cosets);
  }

  CheckOutcome is_trivial_bounded(Presentation const& p,
                                  std::size_t         max_cosets) {
    auto result = order(p, max_cosets);
    if (auto const* f = std::get_if<Finite>(&result)) {
      if (f->index == 1) {
        return CheckOutcome::yes("order 1", f->cosets_used);
      }
      return CheckOutcome::no("order " + std::to_string(f->index),
                              f->cosets_used);
    }
    auto used = std::get<Exhausted>(result).cosets_used;
    return CheckOutcome::unknown("coset budget exhausted", used);
  }

  CheckOutcome word_is_trivial_in_finite(Presentation const& p,
                                         Word const&         w,
                                         std::size_t         max_cosets) {
    if (w.alphabet_bound() > p.generator_count()) {
      throw PresentationError("word uses an undeclared generator");
    }
    auto result = order(p, max_cosets);
    if (auto const* f = std::get_if<Finite>(&result)) {
      if (f->table.generator_count() == 0 || f->table.trace(0, w) == 0) {
        return CheckOutcome::yes("fixes coset 0 in the regular representation",
                                 f->cosets_used);
      }
      return CheckOutcome::no("moves coset 0 in the regular representation",
                              f->cosets_used);
    }
    return CheckOutcome::unknown("coset budget exhausted",
                                 std::get<Exhausted>(result).cosets_used);
  }

  CheckOutcome weight_one_witness_check(Presentation const& p,
                                        Word const&         t,
                                        std::size_t         max_cosets) {
    if (t.alphabet_bound() > p.generator_count()) {
      throw PresentationError("witness uses an undeclared generator");
    }
    return is_trivial_bounded(quotient(p, {t}), max_cosets);
  }

  nlohmann::json to_json(CosetTable const& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t c = 0; c < t.rows() && t.generator_count() > 0; ++c) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t x = 0; x < 2 * t.generator_count(); ++x) {
        row.push_back(t.target(c, Letter::from_code(x)));
      }
      rows.push_back(std::move(row));
    }
    return {{"generators", t.generator_count()},
            {"columns", "per generator g: image under g, then under g^-1"},
            {"rows", std::move(rows)}};
  }

}  // namespace fpg
