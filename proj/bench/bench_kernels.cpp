#include <benchmark/benchmark.h>

#include <random>

#include "hooklab/hooks.hpp"
#include "hooklab/series.hpp"

using namespace hooklab;

namespace {

TruncatedSeries random_series(int order, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> coeff(-1'000'000, 1'000'000);
  TruncatedSeries s(order);
  for (int n = 0; n <= order; ++n) s[n] = coeff(rng);
  return s;
}

void BM_census_parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census(ClassId::R2, n, 4));
}

void BM_census_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_serial(ClassId::R2, n, 4));
}

void BM_series_mul_parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = random_series(n, 1), b = random_series(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(series_mul(a, b));
}

void BM_series_mul_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = random_series(n, 1), b = random_series(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(series_mul_serial(a, b));
}

}  // namespace

BENCHMARK(BM_census_parallel)->Arg(60)->Arg(90)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_census_serial)->Arg(60)->Arg(90)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_series_mul_parallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_series_mul_serial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
