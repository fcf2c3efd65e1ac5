// Batch kernels: the same computation over many independent inputs. Each
// kernel has a serial reference and an OpenMP version that must agree with
// it element for element.

#ifndef FPG_KERNELS_HPP_
#define FPG_KERNELS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "fpg/abelian.hpp"
#include "fpg/coset.hpp"
#include "fpg/presentation.hpp"
#include "fpg/subgroup.hpp"

namespace fpg::kernels {

  namespace serial {
    [[nodiscard]] std::vector<AbelianInvariants>
    h1_batch(std::span<Presentation const> ps);

    [[nodiscard]] std::vector<char>
    membership_batch(SubgroupGraph const& g, std::span<Word const> words);

    [[nodiscard]] std::vector<std::size_t>
    trace_batch(CosetTable const& t, std::span<Word const> words);
  }  // namespace serial

  namespace parallel {
    [[nodiscard]] std::vector<AbelianInvariants>
    h1_batch(std::span<Presentation const> ps);

    [[nodiscard]] std::vector<char>
    membership_batch(SubgroupGraph const& g, std::span<Word const> words);

    [[nodiscard]] std::vector<std::size_t>
    trace_batch(CosetTable const& t, std::span<Word const> words);
  }  // namespace parallel

  // Number of threads the parallel kernels use.
  [[nodiscard]] int thread_count() noexcept;

}  // namespace fpg::kernels

#endif  // FPG_KERNELS_HPP_
