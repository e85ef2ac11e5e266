#include <gtest/gtest.h>

#include <cstdlib>
#include <numbers>
#include <random>

#include "polytorus/grid_function.hpp"
#include "polytorus/parallel.hpp"
#include "polytorus/series_io.hpp"
#include "test_support.hpp"

using namespace polytorus;
using polytorus::testing::randomSeries;
using C = std::complex<double>;

TEST(GridFunction, ConstantHasUnitMean) {
  auto one = FourierSeries::constant(1.0);
  one.setDim(1);
  const auto g = sampleGrid(one, 5);
  EXPECT_EQ(g.size(), 5u);
  for (const auto& v : g.values()) EXPECT_EQ(v, C(1.0));
  EXPECT_NEAR(std::abs(g.mean() - 1.0), 0.0, 1e-15);

  FourierSeries one3 = FourierSeries::constant(1.0);
  one3.setDim(3);
  EXPECT_NEAR(std::abs(sampleGrid(one3, 6).mean() - 1.0), 0.0, 1e-15);
  EXPECT_EQ(sampleGrid(one3, 6).size(), 216u);
}

TEST(GridFunction, RootsOfUnityForZ1) {
  const auto g = sampleGrid(FourierSeries::variable(0), 4);
  const C expected[] = {1.0, C(0, 1), -1.0, C(0, -1)};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(g[i] - expected[i]), 0.0, 1e-15);
}

TEST(GridFunction, SamplesMatchPointwiseEvaluation) {
  std::mt19937_64 rng(21);
  const auto f = randomSeries(rng, 3, 2, 10);
  const auto g = sampleGrid(f, 7);
  for (std::size_t flat = 0; flat < g.size(); flat += 13) {
    const auto pt = g.point(flat);
    EXPECT_EQ(g.flatIndex(pt), flat);
    std::vector<double> angles;
    for (auto n : pt) angles.push_back(2.0 * std::numbers::pi * static_cast<double>(n) / 7.0);
    EXPECT_NEAR(std::abs(g[flat] - evaluate(f, angles)), 0.0, 1e-12);
  }
}

TEST(GridFunction, AliasingGuard) {
  EXPECT_THROW(sampleGrid(FourierSeries::variable(0) * FourierSeries::variable(0), 4),
               std::invalid_argument);
  EXPECT_NO_THROW(sampleGrid(FourierSeries::variable(0) * FourierSeries::variable(0), 5));
  EXPECT_THROW(gridPointCount(4, 1 << 10), std::length_error);
}

TEST(ExtractCoefficients, Examples) {
  const auto f = FourierSeries::variable(0) + FourierSeries::variable(1, true);
  const auto c = extractCoefficients(sampleGrid(f, 8), 3);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_NEAR(std::abs(c.coefficient(MultiIndex({1})) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(c.coefficient(MultiIndex({0, -1})) - 1.0), 0.0, 1e-14);

  const auto z = FourierSeries::variable(0);
  const auto abs2 = extractCoefficients(sampleGrid(z * z.conjugate(), 6), 2);
  EXPECT_EQ(abs2.size(), 1u);
  EXPECT_NEAR(std::abs(abs2.coefficient(MultiIndex{}) - 1.0), 0.0, 1e-14);
}

TEST(ExtractCoefficients, RoundTripReproducesSeries) {
  std::mt19937_64 rng(22);
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto f = randomSeries(rng, d, 3, 12);
    const auto back = extractCoefficients(sampleGrid(f, 8), 3);
    EXPECT_EQ(back.size(), f.size());
    for (const auto& [alpha, c] : f.terms()) {
      EXPECT_NEAR(std::abs(back.coefficient(alpha) - c), 0.0, 1e-12) << alpha.toString();
    }
  }
}

TEST(Parallel, ReductionIndependentOfWorkerCount) {
  std::mt19937_64 rng(23);
  const auto f = randomSeries(rng, 3, 3, 10);
  auto norm = [&] { return sampleGrid(f, 40).lpNorm(3.0); };
  setenv("POLYTORUS_THREADS", "1", 1);
  const double one = norm();
  setenv("POLYTORUS_THREADS", "3", 1);
  const double three = norm();
  unsetenv("POLYTORUS_THREADS");
  EXPECT_EQ(one, three);
}

TEST(SeriesJson, CanonicalBytes) {
  FourierSeries f(2);
  f.add(MultiIndex({0, 1}), C(2.0, -1.0));
  f.add(MultiIndex({1}), 1.0);
  f.add(MultiIndex({0, -1}), 0.5);
  EXPECT_EQ(toJson(f),
            R"({"dim":2,"terms":[{"alpha":[0,-1],"im":0.0,"re":0.5},{"alpha":[0,1],"im":-1.0,"re":2.0},{"alpha":[1],"im":0.0,"re":1.0}]})");
}

TEST(SeriesJson, RoundTripIsBitExact) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 10; ++t) {
    const auto f = randomSeries(rng, 3, 3, 9);
    const auto text = toJson(f);
    const auto back = seriesFromJson(text);
    EXPECT_EQ(back, f);
    EXPECT_EQ(toJson(back), text);
  }
}

TEST(SeriesJson, AcceptsPaddedAndRepeatedIndices) {
  const auto f = seriesFromJson(
      R"({"dim":2,"terms":[{"alpha":[1,0],"re":1,"im":0},{"alpha":[1],"re":0.5,"im":1}]})");
  EXPECT_EQ(f.size(), 1u);
  EXPECT_EQ(f.coefficient(MultiIndex({1})), C(1.5, 1.0));
}

TEST(SeriesJson, RejectsMalformedInput) {
  EXPECT_THROW(seriesFromJson("{"), std::invalid_argument);
  EXPECT_THROW(seriesFromJson(R"({"terms":[]})"), std::invalid_argument);
  EXPECT_THROW(seriesFromJson(R"({"dim":1,"terms":[{"alpha":[0,1],"re":1,"im":0}]})"),
               std::invalid_argument);
  EXPECT_THROW(seriesFromJson(R"({"dim":1,"terms":[{"alpha":[1],"re":"x","im":0}]})"),
               std::invalid_argument);
}
