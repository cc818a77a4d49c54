#include <benchmark/benchmark.h>

#include <random>

#include "bipramsey/constructions.hpp"
#include "bipramsey/detector.hpp"

using namespace bipramsey;

namespace {

EdgeColoring random_coloring(std::size_t n, Color k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Color> pick(1, k);
  EdgeColoring col(n, n, k);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) col.set_color(x, y, pick(rng));
  return col;
}

}  // namespace

static void BM_MonochromaticScanCritical(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto col = matching_lower_construction(4, n);
  for (auto _ : state) benchmark::DoNotOptimize(find_monochromatic_double_star(col, DoubleStarSpec{n, 1}));
}
BENCHMARK(BM_MonochromaticScanCritical)->RangeMultiplier(2)->Range(2, 32);

static void BM_MonochromaticScanRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto col = random_coloring(n, 3, 42);
  for (auto _ : state) benchmark::DoNotOptimize(find_monochromatic_double_star(col, DoubleStarSpec{n / 3, 1}));
}
BENCHMARK(BM_MonochromaticScanRandom)->RangeMultiplier(2)->Range(8, 128);

static void BM_EmbeddingOracle(benchmark::State& state) {
  auto g = color_class(random_coloring(6, 2, 7), 1);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_contains(g, {2, 2}));
}
BENCHMARK(BM_EmbeddingOracle);
