#include <benchmark/benchmark.h>

#include "digitprod/residue_sieve.hpp"

using namespace digitprod;

static void BM_Sieve(benchmark::State& state) {
  const auto r = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sieve_binary_residues(r));
}
BENCHMARK(BM_Sieve)->DenseRange(2, 9)->Unit(benchmark::kMillisecond);

static void BM_DigitLengthLog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(digit_length_by_logarithm(10, 3338938));
}
BENCHMARK(BM_DigitLengthLog);

static void BM_DigitLengthExact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(digit_length_exact(10, 3338938));
}
BENCHMARK(BM_DigitLengthExact)->Unit(benchmark::kMillisecond);

static void BM_BinarySquares(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_binary_digit_squares(10'000'000));
}
BENCHMARK(BM_BinarySquares)->Unit(benchmark::kMillisecond);
