#include <benchmark/benchmark.h>

#include "triples/critical_values.hpp"
#include "triples/flip_loci.hpp"
#include "triples/report.hpp"

using namespace triples;

namespace {

void BM_WallEnumeration(benchmark::State& state) {
  const TripleType t(state.range(0), 1, 3 * state.range(0), -state.range(0));
  const auto w = default_window(t).value();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_critical_values(t, w.lo, w.hi));
}
BENCHMARK(BM_WallEnumeration)->DenseRange(2, 8, 2);

void BM_FlipSweep(benchmark::State& state) {
  const TripleType t(state.range(0), 2, 4 * state.range(0) + 1, -3);
  const auto w = default_window(t).value();
  const auto walls = enumerate_critical_values(t, w.lo, w.hi);
  for (auto _ : state) {
    for (const auto& c : walls) {
      if (c.alpha_c <= w.lo || c.alpha_c >= w.hi) continue;
      benchmark::DoNotOptimize(enumerate_flip_decompositions(t, c.alpha_c, Genus(3)));
    }
  }
  state.counters["walls"] = static_cast<double>(walls.size());
}
BENCHMARK(BM_FlipSweep)->DenseRange(3, 7, 2);

void BM_FullReport(benchmark::State& state) {
  const TripleType t(3, 2, 7, -2);
  for (auto _ : state) benchmark::DoNotOptimize(emit(build_report(t, Genus(2)), Format::Json));
}
BENCHMARK(BM_FullReport);

}  // namespace

BENCHMARK_MAIN();
