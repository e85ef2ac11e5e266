#include "polytorus/minimal_lift.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "abs_pow.hpp"
#include "polytorus/linear_polynomial.hpp"
#include "polytorus/norms.hpp"

namespace polytorus {

std::size_t defaultLiftGrid(std::size_t d) {
  static constexpr std::size_t kDefaults[] = {64, 256, 96, 32};
  if (d < 1 || d > 4) throw std::domain_error("minimal lift: need 1 <= d <= 4");
  return kDefaults[d - 1];
}

MinimalLift buildLift(std::size_t d, Exponent q, std::size_t pointsPerAxis) {
  if (d < 1 || d > 4) throw std::domain_error("buildLift: need 1 <= d <= 4");
  if (!(q.isInfinite() || q.value() > 1.0)) throw std::domain_error("buildLift: need q > 1");
  const std::size_t n = pointsPerAxis == 0 ? defaultLiftGrid(d) : pointsPerAxis;
  if (n <= 2) throw std::domain_error("buildLift: need N > 2");

  MinimalLift out;
  out.d = d;
  out.q = q;
  out.p = q.conjugate().value();
  const double p = out.p;
  const auto roots = rootsOfUnity(n);
  auto phi = [&](std::span<const std::size_t> pt) {
    std::complex<double> z{};
    for (std::size_t j : pt) z += roots[j];
    return z;
  };

  const double zeroCut = 1e-12 * static_cast<double>(d);
  out.lift = GridFunction::tabulate(d, n, [&](std::span<const std::size_t> pt) {
    const auto z = phi(pt);
    const double a = std::abs(z);
    if (a <= zeroCut) return std::complex<double>{};
    return z * std::pow(a, p - 2.0);
  });
  const double moment = gridAverage(d, n, [&](std::span<const std::size_t> pt) {
    return detail::absPowFromNorm(std::norm(phi(pt)), p);
  });
  out.normalizer = static_cast<double>(d) / moment;
  for (auto& v : out.lift.values()) v *= out.normalizer;
  return out;
}

double projectionTolerance(double p) { return p >= 2.0 ? 1e-6 : 1e-3; }

ProjectionReport verifyProjection(const MinimalLift& lift, int maxDeg, std::size_t dominantCount) {
  if (maxDeg < 1 || lift.lift.pointsPerAxis() <= static_cast<std::size_t>(2 * maxDeg)) {
    throw std::domain_error("verifyProjection: grid too coarse for degree " +
                            std::to_string(maxDeg));
  }
  ProjectionReport report;
  report.tolerance = projectionTolerance(lift.p);
  report.coefficients = extractCoefficients(lift.lift, maxDeg, 0.0);

  for (std::size_t j = 0; j < lift.d; ++j) {
    report.unitCoefficients.push_back(report.coefficients.coefficient(MultiIndex::unit(j)));
  }
  for (const auto& [alpha, c] : report.coefficients.terms()) {
    double violation = 0.0;
    if (alpha.isAnalytic()) {
      violation = alpha.degree() == 1 && alpha.maxAbsExponent() == 1 ? std::abs(c - 1.0)
                                                                     : std::abs(c);
    } else {
      report.dominantNonAnalytic.emplace_back(alpha, c);
    }
    if (violation > report.maxViolation) {
      report.maxViolation = violation;
      report.worstIndex = alpha;
    }
  }
  // Unit coefficients that came out exactly zero never appear among the terms.
  for (std::size_t j = 0; j < lift.d; ++j) {
    const double violation = std::abs(report.unitCoefficients[j] - 1.0);
    if (violation > report.maxViolation) {
      report.maxViolation = violation;
      report.worstIndex = MultiIndex::unit(j);
    }
  }

  auto& dominant = report.dominantNonAnalytic;
  std::stable_sort(dominant.begin(), dominant.end(), [](const auto& a, const auto& b) {
    return std::abs(a.second) > std::abs(b.second);
  });
  if (dominant.size() > dominantCount) dominant.resize(dominantCount);
  report.passed = report.maxViolation <= report.tolerance;
  return report;
}

double d2ClosedFormCoefficient(double p, int k) {
  if (!(p > 1.0)) throw std::domain_error("d2ClosedFormCoefficient: need p > 1");
  // The coefficients are symmetric under k -> 1 - k, and consecutive ones
  // satisfy c_k = c_{k-1} (1 + p/2 - k) / (p/2 + k - 1) by Gamma(x + 1) = x Gamma(x).
  const int m = k >= 1 ? k : 1 - k;
  double c = 1.0;
  for (int j = 2; j <= m; ++j) {
    c *= (1.0 + 0.5 * p - j) / (0.5 * p + j - 1.0);
  }
  return c;
}

MinimalNormIdentity minimalNormIdentity(const MinimalLift& lift) {
  const double lhs = lift.lift.lpNorm(lift.q.value());
  const double rhs =
      static_cast<double>(lift.d) / linearNorm(LinearPolynomial::allOnes(lift.d), lift.p).value;
  return {lhs, rhs};
}

}  // namespace polytorus
