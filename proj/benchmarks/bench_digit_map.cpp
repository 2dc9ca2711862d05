#include <benchmark/benchmark.h>

#include <string>

#include "digitprod/digit_map.hpp"

using namespace digitprod;

static void BM_ProductU64(benchmark::State& state) {
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(product_nonzero_digits(n));
    n = n * 6364136223846793005ULL + 1442695040888963407ULL;
  }
}
BENCHMARK(BM_ProductU64);

static void BM_ProductNatural(benchmark::State& state) {
  std::string digits;
  for (std::int64_t i = 0; i < state.range(0); ++i) digits.push_back(static_cast<char>('1' + i % 9));
  const Natural n = Natural::from_decimal(digits);
  for (auto _ : state) benchmark::DoNotOptimize(product_nonzero_digits(n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProductNatural)->RangeMultiplier(10)->Range(10, 100'000)->Complexity();

static void BM_Trajectory(benchmark::State& state) {
  const Exponent k(static_cast<unsigned>(state.range(0)));
  const Natural start(state.range(1));
  const IterationBudget budget = IterationBudget::defaults(k);
  for (auto _ : state) benchmark::DoNotOptimize(iterate_trajectory(start, k, budget));
}
BENCHMARK(BM_Trajectory)->Args({2, 375})->Args({2, 4})->Args({3, 217})->Args({3, 4})->Unit(benchmark::kMicrosecond);
