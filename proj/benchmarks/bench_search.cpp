#include <benchmark/benchmark.h>

#include "bipramsey/searcher.hpp"
#include "bipramsey/turan.hpp"

using namespace bipramsey;

static void BM_ArrowsP4ThreeColors(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(arrows(n, 3, {DoubleStarSpec{1, 1}}));
}
BENCHMARK(BM_ArrowsP4ThreeColors)->DenseRange(2, 4);

static void BM_ArrowsS21TwoColors(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(arrows(n, 2, {DoubleStarSpec{2, 1}}));
}
BENCHMARK(BM_ArrowsS21TwoColors)->DenseRange(3, 6);

static void BM_ArrowsPlainEnumeration(benchmark::State& state) {
  SearchOptions plain;
  plain.plain = true;
  for (auto _ : state) benchmark::DoNotOptimize(arrows(3, 2, {DoubleStarSpec{1, 1}}, plain));
}
BENCHMARK(BM_ArrowsPlainEnumeration);

static void BM_TuranOracleP4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_turan_max(4, 1, 1));
}
BENCHMARK(BM_TuranOracleP4)->Unit(benchmark::kMillisecond);
