#include <benchmark/benchmark.h>

#include "polytorus/grid_function.hpp"
#include "polytorus/norms.hpp"

using namespace polytorus;

namespace {

FourierSeries symmetric(std::size_t d) {
  return FourierSeries::fromLinear(LinearPolynomial::symmetric(d));
}

}  // namespace

static void BM_SampleGrid(benchmark::State& state) {
  const auto f = symmetric(2) * symmetric(2) + symmetric(2).conjugate();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sampleGrid(f, n).mean());
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_SampleGrid)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

static void BM_ExtractCoefficients(benchmark::State& state) {
  const auto g = sampleGrid(symmetric(3) * symmetric(3), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extractCoefficients(g, 4).size());
}
BENCHMARK(BM_ExtractCoefficients)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_GridNorm(benchmark::State& state) {
  const auto f = symmetric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gridNorm(f, 3.0).value);
}
BENCHMARK(BM_GridNorm)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
