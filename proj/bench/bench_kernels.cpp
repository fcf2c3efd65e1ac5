// Serial reference vs OpenMP kernels on identical batches.

#include <benchmark/benchmark.h>

#include <random>

#include "fpg/construct.hpp"
#include "fpg/kernels.hpp"
#include "fpg/tietze.hpp"
#include "support/random.hpp"

using namespace fpg;

namespace {

  std::vector<Presentation> const& presentations() {
    static auto const ps = [] {
      std::mt19937_64           rng(7);
      std::vector<Presentation> out;
      for (int i = 0; i < 2000; ++i) {
        out.push_back(perfect_embed(testing::random_presentation(rng)).output);
      }
      return out;
    }();
    return ps;
  }

  SubgroupGraph const& graph() {
    static auto const g = [] {
      std::mt19937_64   rng(11);
      std::vector<Word> ws;
      for (int i = 0; i < 6; ++i) ws.push_back(testing::random_word(rng, 3, 10, 1));
      return fold(3, ws);
    }();
    return g;
  }

  std::vector<Word> const& words() {
    static auto const ws = reduced_words_up_to(3, 8);
    return ws;
  }

  CosetTable const& table() {
    static auto const r = order(binary_icosahedral());
    return std::get<Finite>(r).table;
  }

  std::vector<Word> const& long_words() {
    static auto const ws = [] {
      std::mt19937_64   rng(13);
      std::vector<Word> out;
      for (int i = 0; i < 200000; ++i) out.push_back(testing::random_word(rng, 2, 60, 30));
      return out;
    }();
    return ws;
  }

  void h1_serial(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(kernels::serial::h1_batch(presentations()));
    s.SetItemsProcessed(s.iterations() * presentations().size());
  }
  void h1_parallel(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(kernels::parallel::h1_batch(presentations()));
    s.SetItemsProcessed(s.iterations() * presentations().size());
    s.counters["threads"] = kernels::thread_count();
  }

  void membership_serial(benchmark::State& s) {
    for (auto _ : s)
      benchmark::DoNotOptimize(kernels::serial::membership_batch(graph(), words()));
    s.SetItemsProcessed(s.iterations() * words().size());
  }
  void membership_parallel(benchmark::State& s) {
    for (auto _ : s)
      benchmark::DoNotOptimize(kernels::parallel::membership_batch(graph(), words()));
    s.SetItemsProcessed(s.iterations() * words().size());
    s.counters["threads"] = kernels::thread_count();
  }

  void trace_serial(benchmark::State& s) {
    for (auto _ : s)
      benchmark::DoNotOptimize(kernels::serial::trace_batch(table(), long_words()));
    s.SetItemsProcessed(s.iterations() * long_words().size());
  }
  void trace_parallel(benchmark::State& s) {
    for (auto _ : s)
      benchmark::DoNotOptimize(kernels::parallel::trace_batch(table(), long_words()));
    s.SetItemsProcessed(s.iterations() * long_words().size());
    s.counters["threads"] = kernels::thread_count();
  }

}  // namespace

BENCHMARK(h1_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(h1_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(membership_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(membership_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(trace_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(trace_parallel)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  // build the inputs outside the timed loops
  (void) presentations();
  (void) graph();
  (void) words();
  (void) table();
  (void) long_words();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) {
    return 1;
  }
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
