#include "fpg/kernels.hpp"

#include <omp.h>

namespace fpg::kernels {

  namespace serial {
    std::vector<AbelianInvariants> h1_batch(std::span<Presentation const> ps) {
      std::vector<AbelianInvariants> out;
      out.reserve(ps.size());
      for (auto const& p : ps) {
        out.push_back(h1(p));
      }
      return out;
    }

    std::vector<char> membership_batch(SubgroupGraph const&  g,
                                       std::span<Word const> words) {
      std::vector<char> out;
      out.reserve(words.size());
      for (auto const& w : words) {
        out.push_back(contains(g, w) ? 1 : 0);
      }
      return out;
    }

    std::vector<std::size_t> trace_batch(CosetTable const&     t,
                                         std::span<Word const> words) {
      std::vector<std::size_t> out;
      out.reserve(words.size());
      for (auto const& w : words) {
        out.push_back(t.trace(0, w));
      }
      return out;
    }
  }  // namespace serial

  namespace parallel {
    std::vector<AbelianInvariants> h1_batch(std::span<Presentation const> ps) {
      std::vector<AbelianInvariants> out(ps.size());
      auto const n = static_cast<std::ptrdiff_t>(ps.size());
#pragma omp parallel for schedule(dynamic, 4)
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[i] = h1(ps[i]);
      }
      return out;
    }

    std::vector<char> membership_batch(SubgroupGraph const&  g,
                                       std::span<Word const> words) {
      std::vector<char> out(words.size());
      auto const n = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[i] = contains(g, words[i]) ? 1 : 0;
      }
      return out;
    }

    std::vector<std::size_t> trace_batch(CosetTable const&     t,
                                         std::span<Word const> words) {
      std::vector<std::size_t> out(words.size());
      auto const n = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[i] = t.trace(0, words[i]);
      }
      return out;
    }
  }  // namespace parallel

  int thread_count() noexcept {
    return omp_get_max_threads();
  }

}  // namespace fpg::kernels
