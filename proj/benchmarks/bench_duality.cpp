#include <benchmark/benchmark.h>

#include "polytorus/duality.hpp"
#include "polytorus/minimal_lift.hpp"

using namespace polytorus;

static void BM_DualNormLinear(benchmark::State& state) {
  const auto phi = LinearPolynomial::symmetric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dualNormLinear(phi, 3.0, 2).value);
}
BENCHMARK(BM_DualNormLinear)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_BuildLift(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(buildLift(d, Exponent(1.5)).normalizer);
}
BENCHMARK(BM_BuildLift)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
