#include <benchmark/benchmark.h>

#include "polytorus/constants.hpp"
#include "polytorus/norms.hpp"

using namespace polytorus;

static void BM_SolveCriticalP(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solveCriticalP());
}
BENCHMARK(BM_SolveCriticalP);

static void BM_TwoTermNorm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(twoTermNorm(1.0, 0.7, 3.3).value);
}
BENCHMARK(BM_TwoTermNorm);

static void BM_WalkMoment(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pearsonWalkMoment(d, 1.5).value);
}
BENCHMARK(BM_WalkMoment)->DenseRange(3, 12, 3)->Unit(benchmark::kMicrosecond);

static void BM_MultinomialNorm(benchmark::State& state) {
  const auto phi = LinearPolynomial::symmetric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multinomialNorm(phi, 8.0).value);
}
BENCHMARK(BM_MultinomialNorm)->Arg(4)->Arg(12)->Arg(64);

static void BM_MonteCarloNorm(benchmark::State& state) {
  const auto phi = LinearPolynomial::symmetric(6);
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(monteCarloNorm(phi, 3.0, samples, 7).value);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloNorm)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
