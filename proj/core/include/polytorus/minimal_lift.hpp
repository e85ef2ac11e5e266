#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "polytorus/exponent.hpp"
#include "polytorus/fourier_series.hpp"
#include "polytorus/grid_function.hpp"

namespace polytorus {

/// Samples of psi = C |phi|^{p-2} phi for phi = z_1 + ... + z_d, the element
/// of least L^q norm whose Riesz projection is phi. p is the conjugate of q
/// and C = d / ||phi||_p^p on the same grid.
struct MinimalLift {
  std::size_t d = 0;
  Exponent q = Exponent(2.0);
  double p = 2.0;
  double normalizer = 1.0;
  GridFunction lift;
};

/// Default points per axis: 64, 256, 96, 32 for d = 1..4.
std::size_t defaultLiftGrid(std::size_t d);

/// Requires 1 <= d <= 4, q > 1 and N > 2 (pass N = 0 for the default).
/// Where phi vanishes on the grid psi is set to 0.
MinimalLift buildLift(std::size_t d, Exponent q, std::size_t pointsPerAxis = 0);

struct ProjectionReport {
  bool passed = false;
  double tolerance = 0.0;
  /// Largest of |c_{e_j} - 1| and |c_alpha| over other analytic alpha.
  double maxViolation = 0.0;
  MultiIndex worstIndex;
  /// Extracted coefficients at e_1, ..., e_d.
  std::vector<std::complex<double>> unitCoefficients;
  /// Largest non-analytic coefficients, by decreasing modulus.
  std::vector<std::pair<MultiIndex, std::complex<double>>> dominantNonAnalytic;
  /// Everything extracted with |exponents| <= maxDeg.
  FourierSeries coefficients;
};

/// 1e-6 for p >= 2, 1e-3 below.
double projectionTolerance(double p);

/// Checks P psi = phi on the coefficients with all |exponents| <= maxDeg.
/// Requires N > 2 maxDeg.
ProjectionReport verifyProjection(const MinimalLift& lift, int maxDeg = 6,
                                  std::size_t dominantCount = 8);

/// Coefficient of z_1^k z_2^{1-k} in the d = 2 lift:
///   Gamma(1 + p/2) Gamma(p/2) / (Gamma(1 + p/2 - k) Gamma(p/2 + k)),
/// zero where a denominator argument is a pole. Requires p > 1.
double d2ClosedFormCoefficient(double p, int k);

struct MinimalNormIdentity {
  /// ||psi||_q on the grid.
  double lhs;
  /// d / ||phi||_p from an independent norm evaluation.
  double rhs;
};

MinimalNormIdentity minimalNormIdentity(const MinimalLift& lift);

}  // namespace polytorus
