#include <benchmark/benchmark.h>

#include "crossvol/bounds.hpp"
#include "crossvol/cross.hpp"
#include "crossvol/funcross.hpp"
#include "crossvol/gallery.hpp"
#include "crossvol/linalg.hpp"
#include "crossvol/maxvol.hpp"

using namespace crossvol;

static void BM_CrossApproximate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = gallery::random_general(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cross_approximate(a, n / 4, PivotStrategy::full));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CrossApproximate)->RangeMultiplier(2)->Range(32, 256)->Complexity();

static void BM_InfToOneNorm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = gallery::random_general(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(inf_to_one_norm(a));
}
BENCHMARK(BM_InfToOneNorm)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_BruteForceMaxvol(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = gallery::random_general(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_maxvol(a, 3, false));
}
BENCHMARK(BM_BruteForceMaxvol)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_FunctionCross(benchmark::State& state) {
  const auto g = static_cast<std::size_t>(state.range(0));
  const TestFunction fn = test_function("runge2d");
  const Grid grid = Grid::chebyshev(g);
  for (auto _ : state) benchmark::DoNotOptimize(function_cross(fn.f, 8, grid));
}
BENCHMARK(BM_FunctionCross)->RangeMultiplier(2)->Range(33, 257);

static void BM_BoundReport(benchmark::State& state) {
  const Matrix a = gallery::random_spsd(10, 7);
  for (auto _ : state) benchmark::DoNotOptimize(bound_report(a, 4));
}
BENCHMARK(BM_BoundReport)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
