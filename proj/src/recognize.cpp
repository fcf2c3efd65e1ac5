#include "fpg/recognize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fpg {

  ////////////////////////////////////////////////////////////////////////
  // Permutations
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<std::size_t> images)
      : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (auto i : images_) {
      if (i >= images_.size() || hit[i]) {
        throw std::invalid_argument("not a permutation");
      }
      hit[i] = true;
    }
  }

  Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
  }

  Permutation Permutation::cycle(std::size_t n) {
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) {
      images[i] = (i + 1) % n;
    }
    return Permutation(std::move(images));
  }

  std::string Permutation::cycle_string() const {
    std::string       out;
    std::vector<bool> done(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (done[i]) {
        continue;
      }
      out += '(';
      std::size_t j = i;
      bool        first = true;
      while (!done[j]) {
        done[j] = true;
        if (!first) {
          out += ' ';
        }
        out += std::to_string(j + 1);
        first = false;
        j     = images_[j];
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  std::vector<std::vector<std::size_t>>
  orbits(std::size_t n, std::span<Permutation const> generators) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (auto const& g : generators) {
      for (std::size_t i = 0; i < n; ++i) {
        auto a = find(i);
        auto b = find(g(i));
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      auto r = find(i);
      if (slot[r] == n) {
        slot[r] = out.size();
        out.emplace_back();
      }
      out[slot[r]].push_back(i);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Wirtinger
  ////////////////////////////////////////////////////////////////////////

  WirtingerResult is_wirtinger(Presentation const& p) {
    WirtingerResult result;
    auto const      n = static_cast<generator_index>(p.generator_count());
    for (std::size_t k = 0; k < p.relator_count(); ++k) {
      Word const& r     = p.relators()[k];
      bool        found = false;
      for (generator_index i = 0; i < n && !found; ++i) {
        Word const u = Word::generator(i) * r;
        if (u.size() % 2 == 0) {
          continue;
        }
        for (generator_index j = 0; j < n && !found; ++j) {
          if (auto g = conjugacy_witness(Word::generator(j), u)) {
            result.witnesses.push_back({i, j, *g});
            found = true;
          }
        }
      }
      if (!found) {
        result.outcome = CheckOutcome::no(
            "relator " + std::to_string(k) + " (" + format_word(p, r)
            + ") is not of the form x_i^-1 w^-1 x_j w");
        result.witnesses.clear();
        return result;
      }
    }
    result.outcome = CheckOutcome::yes("every relator conjugates one generator "
                                       "to another");
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Artin
  ////////////////////////////////////////////////////////////////////////

  namespace {

    Word product_of(std::span<Word const> words) {
      Word out;
      for (auto const& w : words) {
        out = out * w;
      }
      return out;
    }

    Word product_of_generators(std::size_t n) {
      Word out;
      for (generator_index j = 0; j < n; ++j) {
        out = out * Word::generator(j);
      }
      return out;
    }

    // mu(j) and the conjugator for each beta_j, or the first failing j.
    struct ConjugacyData {
      std::vector<std::size_t> images;
      std::vector<Word>        conjugators;
      std::optional<std::size_t> failure;
    };

    ConjugacyData conjugate_to_generators(std::span<Word const> betas,
                                          std::size_t           n) {
      ConjugacyData out;
      for (std::size_t j = 0; j < betas.size(); ++j) {
        bool found = false;
        for (generator_index k = 0; k < n && !found; ++k) {
          if (auto g = conjugacy_witness(Word::generator(k), betas[j])) {
            out.images.push_back(k);
            out.conjugators.push_back(*g);
            found = true;
          }
        }
        if (!found) {
          out.failure = j;
          return out;
        }
      }
      return out;
    }

    bool is_bijection(std::span<std::size_t const> images) {
      std::vector<bool> hit(images.size(), false);
      for (auto i : images) {
        if (i >= images.size() || hit[i]) {
          return false;
        }
        hit[i] = true;
      }
      return true;
    }

  }  // namespace

  ArtinResult artin_check(Presentation const& p) {
    ArtinResult       result;
    std::size_t const n = p.generator_count();
    if (n == 0) {
      result.outcome = CheckOutcome::no("no generators");
      return result;
    }
    if (p.relator_count() != n) {
      result.outcome = CheckOutcome::no(
          "relator count " + std::to_string(p.relator_count())
          + " differs from generator count " + std::to_string(n));
      return result;
    }
    for (generator_index j = 0; j < n; ++j) {
      result.betas.push_back(Word::generator(j) * p.relators()[j]);
    }
    auto data = conjugate_to_generators(result.betas, n);
    if (data.failure) {
      result.outcome = CheckOutcome::no(
          "beta_" + std::to_string(*data.failure + 1)
          + " is not conjugate to a generator");
      return result;
    }
    result.conjugators = data.conjugators;
    if (!is_bijection(data.images)) {
      result.outcome = CheckOutcome::no("mu is not a permutation");
      return result;
    }
    result.mu = Permutation(data.images);
    if (*result.mu != Permutation::cycle(n)) {
      result.outcome = CheckOutcome::no("mu = " + result.mu->cycle_string()
                                        + " is not the cycle (1 2 ... n)");
      return result;
    }
    if (product_of(result.betas) != product_of_generators(n)) {
      result.outcome
          = CheckOutcome::no("beta_1 ... beta_n differs from x_1 ... x_n in F");
      return result;
    }
    result.outcome = CheckOutcome::yes("mu = " + result.mu->cycle_string());
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Elimination to a free presentation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Replace relators by their cyclic cores and drop the trivial ones.
    Presentation normalize(Presentation const& p) {
      std::vector<Word> rels;
      for (auto const& r : p.relators()) {
        Word core = cyclic_decomposition(r).core;
        if (!core.empty()) {
          rels.push_back(std::move(core));
        }
      }
      return Presentation({p.generators().begin(), p.generators().end()},
                          std::move(rels));
    }
  }  // namespace

  std::optional<EliminationTrace> eliminate_to_free(Presentation const& p,
                                                    std::size_t max_steps) {
    EliminationTrace trace;
    Presentation     cur = normalize(p);
    while (cur.relator_count() > 0) {
      if (trace.steps.size() >= max_steps) {
        return std::nullopt;
      }
      bool stepped = false;
      for (std::size_t k = 0; k < cur.relator_count() && !stepped; ++k) {
        for (generator_index g = 0; g < cur.generator_count(); ++g) {
          if (auto image = solve_for(cur.relators()[k], g)) {
            trace.steps.push_back({g, cur.name(g), k, *image});
            cur     = normalize(eliminate_generator(cur, g, k));
            stepped = true;
            break;
          }
        }
      }
      if (!stepped) {
        return std::nullopt;
      }
    }
    trace.result = std::move(cur);
    return trace;
  }

  bool replay(Presentation const& p, EliminationTrace const& trace) {
    Presentation cur = normalize(p);
    for (auto const& step : trace.steps) {
      if (step.generator >= cur.generator_count()
          || step.relator >= cur.relator_count()
          || cur.name(step.generator) != step.name) {
        return false;
      }
      auto image = solve_for(cur.relators()[step.relator], step.generator);
      if (!image || *image != step.image) {
        return false;
      }
      cur = normalize(eliminate_generator(cur, step.generator, step.relator));
    }
    return cur.relator_count() == 0 && cur == trace.result;
  }

  ////////////////////////////////////////////////////////////////////////
  // 2-knots
  ////////////////////////////////////////////////////////////////////////

  TwoKnotResult two_knot_check(Presentation const& p,
                               std::size_t         h,
                               std::size_t         max_steps) {
    TwoKnotResult     result;
    std::size_t const n = p.generator_count();
    if (n == 0) {
      result.outcome = CheckOutcome::no("no generators");
      return result;
    }
    if (2 * h > n) {
      result.outcome = CheckOutcome::no("2h exceeds the generator count");
      return result;
    }
    if (p.relator_count() != h + n) {
      result.outcome = CheckOutcome::no("expected h + n = "
                                        + std::to_string(h + n) + " relators");
      return result;
    }
    for (std::size_t i = 0; i < h; ++i) {
      auto const a = static_cast<generator_index>(2 * i);
      Word const expected
          = invert(Word::generator(a)) * Word::generator(a + 1);
      if (p.relators()[i] != expected) {
        result.outcome = CheckOutcome::no(
            "relator " + std::to_string(i) + " is not x_" + std::to_string(a + 1)
            + "^-1 x_" + std::to_string(a + 2));
        return result;
      }
    }
    for (generator_index j = 0; j < n; ++j) {
      result.betas.push_back(Word::generator(j) * p.relators()[h + j]);
    }
    auto data = conjugate_to_generators(result.betas, n);
    if (data.failure) {
      result.outcome = CheckOutcome::no(
          "beta_" + std::to_string(*data.failure + 1)
          + " is not conjugate to a generator");
      return result;
    }
    if (!is_bijection(data.images)) {
      result.outcome = CheckOutcome::no("mu is not a permutation");
      return result;
    }
    result.mu = Permutation(data.images);
    if (product_of(result.betas) != product_of_generators(n)) {
      result.outcome
          = CheckOutcome::no("beta_1 ... beta_n differs from x_1 ... x_n in F");
      return result;
    }

    std::vector<std::size_t> tau(n);
    std::iota(tau.begin(), tau.end(), 0);
    for (std::size_t i = 0; i < h; ++i) {
      std::swap(tau[2 * i], tau[2 * i + 1]);
    }
    std::vector<Permutation> gens{*result.mu, Permutation(tau)};
    result.orbits = orbits(n, gens);
    if (result.orbits.size() != 1) {
      result.outcome = CheckOutcome::no(
          "mu and the transpositions (2i-1 2i) are intransitive ("
          + std::to_string(result.orbits.size()) + " orbits)");
      return result;
    }

    for (std::size_t j = 0; j < n; ++j) {
      if (j % 2 == 0 && j + 1 < 2 * h) {
        Word x = Word::generator(static_cast<generator_index>(j + 1));
        result.betas_prime.push_back(x * result.betas[j + 1] * invert(x));
      } else if (j % 2 == 1 && j < 2 * h) {
        result.betas_prime.push_back(result.betas[j - 1]);
      } else {
        result.betas_prime.push_back(result.betas[j]);
      }
    }

    auto knot_presentation = [&](std::vector<Word> const& betas) {
      std::vector<Word> rels;
      for (generator_index j = 0; j < n; ++j) {
        rels.push_back(invert(Word::generator(j)) * betas[j]);
      }
      return Presentation({p.generators().begin(), p.generators().end()},
                          std::move(rels));
    };
    result.trace = eliminate_to_free(knot_presentation(result.betas), max_steps);
    result.trace_prime
        = eliminate_to_free(knot_presentation(result.betas_prime), max_steps);
    std::size_t used = (result.trace ? result.trace->steps.size() : max_steps)
                       + (result.trace_prime ? result.trace_prime->steps.size()
                                             : max_steps);
    if (result.trace && result.trace_prime) {
      result.outcome = CheckOutcome::yes(
          "both presentations reduce to free presentations", used);
    } else {
      result.outcome = CheckOutcome::unknown(
          "bounded elimination did not reach a free presentation", used);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Identities and Kervaire conditions
  ////////////////////////////////////////////////////////////////////////

  bool verify_identity(Presentation const& p, IdentitySequence const& pi) {
    return identity_product(p.relators(), pi).empty();
  }

  bool identities_generate_h2(Presentation const&               p,
                              std::span<IdentitySequence const> identities) {
    auto const kernel = left_kernel(relation_matrix(p));
    if (kernel.rows() == 0) {
      return true;
    }
    if (identities.empty()) {
      return false;
    }
    std::size_t const n = p.relator_count();
    IntMatrix         classes(identities.size(), n);
    for (std::size_t i = 0; i < identities.size(); ++i) {
      if (!verify_identity(p, identities[i])) {
        return false;
      }
      auto c = relator_class(identities[i], n);
      for (std::size_t k = 0; k < n; ++k) {
        classes(i, k) = c[k];
      }
    }
    // The classes lie in the (saturated) kernel lattice; they span it iff
    // they have full rank there and span a saturated sublattice.
    auto const factors = smith_normal_form(classes).invariant_factors();
    return factors.size() == kernel.rows()
           && std::all_of(factors.begin(), factors.end(),
                          [](BigInt const& d) { return d == 1; });
  }

  KervaireReport kervaire_report(Presentation const&               p,
                                 std::span<Word const>             candidates,
                                 std::size_t                       max_cosets,
                                 std::span<IdentitySequence const> identities) {
    KervaireReport report;
    report.h1                 = h1(p);
    report.h1_infinite_cyclic = report.h1.is_infinite_cyclic();
    for (auto const& t : candidates) {
      report.weight.emplace_back(t, weight_one_witness_check(p, t, max_cosets));
    }
    for (std::size_t i = 0; i < identities.size(); ++i) {
      if (!verify_identity(p, identities[i])) {
        report.h2_reason = "identity " + std::to_string(i)
                           + " does not reduce to the empty word";
        return report;
      }
    }
    if (identities_generate_h2(p, identities)) {
      report.h2        = H2Status::certified;
      report.h2_reason = "identity classes generate H2 of the presentation "
                         "complex";
    } else {
      report.h2_reason = "supplied identities do not generate H2 of the "
                         "presentation complex";
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Weight-one enumeration
  ////////////////////////////////////////////////////////////////////////

  WeightOneEnumerator::WeightOneEnumerator(WeightOneBudget budget)
      : budget_(budget) {
    Presentation start({"x"}, {Word::generator(0)});
    seen_.insert(serialize(start));
    queue_.push_back({std::move(start), {}});
  }

  std::optional<WeightOneEmission> WeightOneEnumerator::next() {
    while (!queue_.empty()) {
      Node node = std::move(queue_.front());
      queue_.pop_front();
      if (node.trace.size() < budget_.max_depth) {
        TietzeNeighbors neighbors(node.presentation, budget_.tietze);
        while (auto nb = neighbors.next()) {
          auto& [q, move] = *nb;
          if (q.generator_count() == 0
              || q.generator_count() > budget_.max_generators) {
            continue;
          }
          if (!seen_.insert(serialize(q)).second) {
            continue;
          }
          auto trace = node.trace;
          trace.push_back(std::move(move));
          queue_.push_back({std::move(q), std::move(trace)});
        }
      }
      Presentation const& p = node.presentation;
      if (p.generator_count() == 0 || p.relator_count() == 0) {
        continue;
      }
      std::vector<Word> rest(p.relators().begin() + 1, p.relators().end());
      return WeightOneEmission{
          Presentation({p.generators().begin(), p.generators().end()},
                       std::move(rest)),
          p.relators()[0], std::move(node.trace)};
    }
    return std::nullopt;
  }

}  // namespace fpg
