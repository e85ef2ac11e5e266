#pragma once


#include "polytorus/exponent.hpp"

namespace polytorus {

/// Upper bound on the L^infinity -> L^p critical exponent from the earlier
/// two-variable counterexample; kept as a comparison constant.
inline constexpr double kMarzoSeipBound = 3.67632;

/// Gamma(1 + p/2)^{1/p}: the L^p norm of a standard complex Gaussian, and the
/// limit of ||(z_1 + ... + z_d)/sqrt(d)||_p as d grows. Requires p >= 1.
double gammaMomentConstant(double p);

/// Optimal constants in a ||f||_2 <= ||f||_p <= b ||f||_2 for linear f.
struct KhintchineConstants {
  double p;
  double a;
  double b;
};

/// Requires 1 <= p < infinity.
KhintchineConstants khintchineConstants(double p);

/// The unique p in [2, 6] with Gamma(1 + p/2)^{1/p} = 2/sqrt(pi), to 1e-10.
/// The Riesz projection is unbounded from L^infinity to L^p past this value.
double solveCriticalP();

/// Gamma(1 + p/2)^{1/p} * Gamma(1 + r/2)^{1/r}. A value above 1 means the
/// Riesz projection is unbounded from L^q to L^p. Requires 2 <= p <= q.
double unboundednessMargin(const ExponentTriple& t);

/// The p in [2, q] where unboundednessMargin crosses 1 for this q, clamped to
/// q when the margin stays at or below 1 on the whole interval. Requires q >= 2.
double criticalCurve(Exponent q);

/// p * r / 4: the older sufficient condition (unbounded when > 1).
double legacyCondition(const ExponentTriple& t);

/// The p where legacyCondition crosses 1, i.e. 4 / r clamped to [2, q].
double legacyCriticalP(Exponent q);

}  // namespace polytorus
