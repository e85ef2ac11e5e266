#pragma once

#include <cstddef>
#include <cstdint>

#include "polytorus/linear_polynomial.hpp"
#include "polytorus/norms.hpp"

namespace polytorus {

/// Outcome of maximizing |<f, phi>| / ||f||_p over linear f.
struct DualNormResult {
  /// Best ratio found; a lower bound on the dual norm of phi.
  double value = 0.0;
  /// The maximizing f, with unit L^2 norm.
  LinearPolynomial maximizer;
  /// Ratio at f = phi: ||phi||_2^2 / ||phi||_p.
  double lowerCertificate = 0.0;
  /// ||phi||_2 / a_p, the dual Khintchine upper bound.
  double upperCertificate = 0.0;
  /// Restart that produced the maximizer (0 is the phi-direction start).
  std::size_t bestRestart = 0;
};

struct DualOptions {
  /// Central finite-difference step for the gradient.
  double fdStep = 1e-6;
  int maxIterations = 200;
  /// Stop when the projected gradient norm falls below this.
  double gradientTolerance = 1e-9;
  /// Accuracy of the norms behind the reported value and certificates.
  LinearNormOptions accurate = [] {
    LinearNormOptions o;
    o.grid.rtol = 1e-6;
    return o;
  }();
};

/// Dual norm of a linear phi in (H^p)^*, restricted to linear test functions,
/// which loses nothing because the projection onto linear functions is
/// contractive. Coefficients are phase-normalized so the search runs over
/// nonnegative unit vectors, by projected gradient ascent with Nelder-Mead as
/// fallback, from the phi direction plus restarts - 1 random starts.
///
/// The search objective uses fixed-grid norms; the reported value and
/// certificates are recomputed with linearNorm and divided by (norm + error
/// bound), so value is a lower bound on the true dual norm.
/// Requires 1 <= p < infinity and phi non-trivial.
DualNormResult dualNormLinear(const LinearPolynomial& phi, double p, std::size_t restarts = 8,
                              std::uint64_t seed = 1, const DualOptions& options = {});

struct ShiftAverage {
  /// (c_1 + ... + c_d) / sqrt(d) = <f, phi_d>.
  double lambda;
  /// (1/d) sum of the d cyclic shifts of the coefficient sequence.
  LinearPolynomial averaged;
};

/// Requires real nonnegative coefficients (throws std::invalid_argument).
ShiftAverage shiftAverage(const LinearPolynomial& f);

struct DualInverseCheck {
  double measured;
  double predicted;
};

/// measured = dualNormLinear(phi_d, p).value, predicted = 1 / ||phi_d||_p.
/// Requires 1 <= d <= 4 and 1 <= p < infinity.
DualInverseCheck verifyDualInverse(std::size_t d, double p, std::size_t restarts = 8,
                                   std::uint64_t seed = 1, const DualOptions& options = {});

/// Dual norm in (H^infinity)^* of a linear function: max_j |c_j| (0 if empty).
double supNormDualLinear(const LinearPolynomial& f);

struct PointEvaluationCheck {
  /// (1 - eps^2)^{-1/r}: norm of evaluation at eps on H^r of the disc.
  double dualNorm;
  /// ||(1 - eps z)^{-p/2}||_2^{2/p} = ||(1 - eps z)^{-1}||_p.
  double hpNorm;
  /// |dualNorm - (1 + eps^2 / r)|.
  double dualExpansionError;
  /// |hpNorm - (1 + p eps^2 / 4)|.
  double hpExpansionError;
};

/// Requires 0 <= eps < 1/2 and r, p >= 1.
PointEvaluationCheck pointEvaluationCheck(double eps, double r, double p);

}  // namespace polytorus
