#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "polytorus/constants.hpp"
#include "polytorus/exponent.hpp"
#include "polytorus/special_functions.hpp"

using namespace polytorus;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

const double sqrtPi = std::sqrt(std::numbers::pi);

// Gamma(1 + p/2)^{1/p} in 50-digit arithmetic.
Big bigMoment(Big p) { return pow(boost::math::tgamma(Big(1) + p / 2), Big(1) / p); }

double bigCriticalP() {
  const Big target = Big(2) / sqrt(boost::math::constants::pi<Big>());
  Big lo = 2, hi = 6;
  for (int i = 0; i < 120; ++i) {
    const Big mid = (lo + hi) / 2;
    (bigMoment(mid) < target ? lo : hi) = mid;
  }
  return static_cast<double>((lo + hi) / 2);
}

}  // namespace

TEST(Gamma, MatchesBoostOracle) {
  for (double x = 0.05; x < 12.0; x += 0.0731) {
    const double expected = boost::math::tgamma(x);
    EXPECT_NEAR(polytorus::gamma(x), expected, 2e-14 * std::abs(expected)) << x;
    EXPECT_NEAR(logGamma(x), boost::math::lgamma(x), 1e-13 * std::max(1.0, std::abs(boost::math::lgamma(x))));
  }
  for (double x : {-0.5, -1.5, -2.25, -7.7}) {
    EXPECT_NEAR(polytorus::gamma(x), boost::math::tgamma(x), 1e-13 * std::abs(boost::math::tgamma(x))) << x;
  }
}

TEST(Gamma, ExactAtIntegersAndHalfIntegers) {
  EXPECT_EQ(polytorus::gamma(1.0), 1.0);
  EXPECT_EQ(polytorus::gamma(2.0), 1.0);
  EXPECT_EQ(polytorus::gamma(6.0), 120.0);
  EXPECT_NEAR(polytorus::gamma(1.5), sqrtPi / 2.0, 1e-15);
  EXPECT_NEAR(polytorus::gamma(0.5), sqrtPi, 1e-15);
}

TEST(Gamma, PolesAndReciprocal) {
  EXPECT_THROW(polytorus::gamma(0.0), std::domain_error);
  EXPECT_THROW(polytorus::gamma(-3.0), std::domain_error);
  for (double x : {0.0, -1.0, -2.0, -10.0}) EXPECT_EQ(reciprocalGamma(x), 0.0);
  EXPECT_NEAR(reciprocalGamma(-2.5), 1.0 / boost::math::tgamma(-2.5), 1e-14);
  EXPECT_NEAR(beta(2.0, 3.0), 1.0 / 12.0, 1e-15);
  EXPECT_NEAR(beta(0.5, 0.5), std::numbers::pi, 1e-14);
}

TEST(BracketedRoot, FindsRootAndRejectsBadBracket) {
  const auto r = bracketedRoot([](double x) { return std::cos(x); }, 1.0, 2.0);
  EXPECT_NEAR(r.root, std::numbers::pi / 2, 1e-10);
  EXPECT_LT(r.residual, 1e-10);
  EXPECT_THROW(bracketedRoot([](double x) { return x * x + 1.0; }, -1.0, 1.0), BracketError);
  EXPECT_EQ(bracketedRoot([](double x) { return x; }, 0.0, 1.0).root, 0.0);
}

TEST(GammaMomentConstant, Examples) {
  EXPECT_NEAR(gammaMomentConstant(2.0), 1.0, 1e-15);
  EXPECT_NEAR(gammaMomentConstant(1.0), sqrtPi / 2.0, 1e-14);
  EXPECT_NEAR(gammaMomentConstant(4.0), std::pow(2.0, 0.25), 1e-14);
  EXPECT_THROW(gammaMomentConstant(0.5), std::domain_error);
}

TEST(GammaMomentConstant, StrictlyIncreasingAboveTwo) {
  double prev = gammaMomentConstant(2.0);
  for (int i = 1; i <= 100; ++i) {
    const double cur = gammaMomentConstant(2.0 + 0.1 * i);
    EXPECT_GT(cur, prev);
    prev = cur;
  }
}

TEST(Khintchine, Examples) {
  const auto k2 = khintchineConstants(2.0);
  EXPECT_NEAR(k2.a, 1.0, 1e-15);
  EXPECT_NEAR(k2.b, 1.0, 1e-15);
  const auto k1 = khintchineConstants(1.0);
  EXPECT_NEAR(k1.a, sqrtPi / 2.0, 1e-14);
  EXPECT_EQ(k1.b, 1.0);
  const auto k4 = khintchineConstants(4.0);
  EXPECT_EQ(k4.a, 1.0);
  EXPECT_NEAR(k4.b, std::pow(2.0, 0.25), 1e-14);
  EXPECT_THROW(khintchineConstants(0.9), std::domain_error);
  for (double p = 1.0; p < 12.0; p += 0.37) {
    const auto k = khintchineConstants(p);
    EXPECT_LE(k.a, 1.0);
    EXPECT_GE(k.b, 1.0);
    EXPECT_TRUE(k.a == 1.0 || k.b == 1.0);
  }
}

TEST(CriticalP, MatchesHighPrecisionOracle) {
  const double p = solveCriticalP();
  EXPECT_NEAR(p, 3.31138, 1e-5);
  EXPECT_NEAR(p, bigCriticalP(), 1e-8);
  EXPECT_LT(std::abs(gammaMomentConstant(p) - 2.0 / sqrtPi), 1e-8);
  EXPECT_LT(p, kMarzoSeipBound);
}

TEST(ExponentTriple, Conjugacy) {
  const auto inf = ExponentTriple::make(3.0, Exponent::infinity());
  EXPECT_EQ(inf.r, 1.0);
  for (double q : {1.1, 4.0 / 3.0, 1.5, 2.0, 3.0, 7.5}) {
    const auto t = ExponentTriple::make(2.0, Exponent(q));
    EXPECT_NEAR(1.0 / q + 1.0 / t.r, 1.0, 1e-12);
  }
  EXPECT_EQ(Exponent(4.0 / 3.0).conjugate().value(), 4.0);
  EXPECT_EQ(Exponent(1.0).conjugate(), Exponent::infinity());
  EXPECT_THROW(ExponentTriple::make(2.0, Exponent(1.0)), std::domain_error);
}

TEST(Exponent, Parsing) {
  EXPECT_TRUE(Exponent::parse("inf").isInfinite());
  EXPECT_TRUE(Exponent::parse("oo").isInfinite());
  EXPECT_EQ(Exponent::parse("3.5").value(), 3.5);
  EXPECT_EQ(Exponent::parse("4/3").value(), 4.0 / 3.0);
  EXPECT_THROW(Exponent::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Exponent::parse("0.5"), std::domain_error);
  EXPECT_TRUE(Exponent(3.0) < Exponent::infinity());
  EXPECT_FALSE(Exponent::infinity() < Exponent::infinity());
}

TEST(UnboundednessMargin, Examples) {
  EXPECT_NEAR(unboundednessMargin(ExponentTriple::make(2.0, Exponent(2.0))), 1.0, 1e-15);
  const double oracle = static_cast<double>(bigMoment(Big(3.5)) * bigMoment(Big(1)));
  const double margin = unboundednessMargin(ExponentTriple::make(3.5, Exponent::infinity()));
  EXPECT_NEAR(margin, oracle, 1e-13);
  EXPECT_NEAR(margin, 1.0152, 1e-4);
  EXPECT_NEAR(unboundednessMargin(ExponentTriple::make(solveCriticalP(), Exponent::infinity())), 1.0, 1e-7);
  EXPECT_THROW(unboundednessMargin(ExponentTriple::make(5.0, Exponent(4.0))), std::domain_error);
}

TEST(CriticalCurve, EndpointsAndInteriorRoot) {
  EXPECT_NEAR(criticalCurve(Exponent::infinity()), solveCriticalP(), 1e-7);
  EXPECT_EQ(criticalCurve(Exponent(2.0)), 2.0);
  const double p4 = criticalCurve(Exponent(4.0));
  EXPECT_GT(p4, 2.0);
  EXPECT_LT(p4, 4.0);
  EXPECT_NEAR(p4, 2.791981577, 1e-8);
}

TEST(CriticalCurve, MarginIsOneAndCurveIsMonotone) {
  double prev = 2.0;
  for (double q = 2.0; q <= 60.0; q += 0.5) {
    const double p = criticalCurve(Exponent(q));
    EXPECT_GE(p, 2.0);
    EXPECT_LE(p, q);
    EXPECT_GE(p, prev - 1e-9) << q;
    if (p > 2.0 && p < q) {
      EXPECT_NEAR(unboundednessMargin(ExponentTriple::make(p, Exponent(q))), 1.0, 1e-7) << q;
    }
    prev = p;
  }
  EXPECT_LE(prev, criticalCurve(Exponent::infinity()) + 1e-9);
}

TEST(LegacyCondition, Examples) {
  EXPECT_EQ(legacyCondition(ExponentTriple::make(4.0, Exponent::infinity())), 1.0);
  EXPECT_EQ(legacyCondition(ExponentTriple::make(3.5, Exponent::infinity())), 0.875);
  EXPECT_EQ(legacyCondition(ExponentTriple::make(2.0, Exponent(2.0))), 1.0);
  EXPECT_EQ(legacyCriticalP(Exponent::infinity()), 4.0);
  EXPECT_EQ(legacyCriticalP(Exponent(2.0)), 2.0);
}
