#include "olacat/kl.hpp"
#include "olacat/olamult.hpp"
#include "olacat/order.hpp"
#include "olacat/partitions.hpp"
#include "olacat/symalg.hpp"

#include <benchmark/benchmark.h>

using namespace olacat;

static void BM_LrCoefficient(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::vector<int> stair;
  for (int i = k; i >= 1; --i) stair.push_back(i);
  Partition lam(stair), nu;
  std::vector<int> doubled;
  for (int x : stair) doubled.push_back(2 * x);
  nu = Partition(doubled);
  for (auto _ : state) benchmark::DoNotOptimize(lr_coefficient(lam, lam, nu));
}
BENCHMARK(BM_LrCoefficient)->DenseRange(2, 4);

// The engine memoizes across calls, so after the first iteration this measures lookups.
static void BM_KlLongestMemoized(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<int> rev;
  for (int i = m; i >= 1; --i) rev.push_back(i);
  const Perm w(rev), x = Perm::identity(m);
  for (auto _ : state) benchmark::DoNotOptimize(kl_polynomial(x, w));
}
BENCHMARK(BM_KlLongestMemoized)->DenseRange(4, 7);

static void BM_KlPattern(benchmark::State& state) {
  const Perm x = Perm::parse("[1,3,2,5,4,6]"), w = Perm::parse("[3,4,6,5,1,2]");
  for (auto _ : state) benchmark::DoNotOptimize(kl_polynomial(x, w));
}
BENCHMARK(BM_KlPattern);

static void BM_SymLayer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sym_layer(n, 3, d));
}
BENCHMARK(BM_SymLayer)->Args({1, 3})->Args({1, 5})->Args({2, 3})->Args({2, 4});

static void BM_StandardMultiplicity(benchmark::State& state) {
  const auto lambda = EligibleWeight(1);
  const auto mu = parse_weight("e[-1,1] + e[-2,1] - e[1,1] - e[2,1]", 1);
  for (auto _ : state) benchmark::DoNotOptimize(standard_simple_multiplicity(lambda, mu));
}
BENCHMARK(BM_StandardMultiplicity);

static void BM_Interval(benchmark::State& state) {
  const auto lambda = EligibleWeight(1);
  const auto mu = parse_weight("e[-2,1] - e[2,1]", 1);
  for (auto _ : state) benchmark::DoNotOptimize(interval(mu, lambda));
}
BENCHMARK(BM_Interval);

BENCHMARK_MAIN();
