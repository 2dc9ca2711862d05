#include <benchmark/benchmark.h>

#include "digitprod/conjecture.hpp"
#include "digitprod/sequence.hpp"

using namespace digitprod;

static void BM_EnumerateTerms(benchmark::State& state) {
  const Exponent k(static_cast<unsigned>(state.range(0)));
  const auto limit = static_cast<std::uint64_t>(state.range(1));
  const IterationBudget budget = IterationBudget::defaults(k);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_terms(limit, k, budget));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_EnumerateTerms)->Args({2, 100'000})->Args({2, 1'000'000})->Args({3, 100'000})->Unit(
    benchmark::kMillisecond);

static void BM_ClassifyDirect(benchmark::State& state) {
  const TermClassifier classifier(Exponent(2), IterationBudget::defaults(Exponent(2)));
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classifier.classify_direct(n));
    n = n % 1'000'000 + 1;
  }
}
BENCHMARK(BM_ClassifyDirect);

static void BM_NoNine(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_no_nine(limit, IterationBudget::defaults(Exponent(2))));
}
BENCHMARK(BM_NoNine)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
