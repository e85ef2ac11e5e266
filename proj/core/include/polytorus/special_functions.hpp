#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace polytorus {

/// Gamma function for real arguments. Lanczos approximation (g = 7, nine
/// terms) for x >= 1/2 with relative error near 1e-15, the reflection formula
/// below 1/2, and exact factorials at positive integers up to 170.
/// Throws std::domain_error at the poles 0, -1, -2, ...
double gamma(double x);

/// log|Gamma(x)|, same method; usable where Gamma itself overflows.
double logGamma(double x);

/// 1/Gamma(x), entire: exactly 0 at the poles of Gamma.
double reciprocalGamma(double x);

/// Beta(x, y) = Gamma(x) Gamma(y) / Gamma(x + y).
double beta(double x, double y);

/// Thrown when a bracketing root finder is handed a bracket without a sign
/// change or fails to converge.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RootResult {
  double root;
  double residual;
  int iterations;
};

/// Root of f on [lo, hi] by bisection down to width `xtol`, followed by one
/// secant step through the final bracket endpoints (kept only if it stays
/// inside the bracket and does not increase |f|). f(lo) and f(hi) must have
/// opposite signs (or one of them be zero).
template <class F>
RootResult bracketedRoot(F&& f, double lo, double hi, double xtol = 1e-10,
                         int maxIterations = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0};
  if (fhi == 0.0) return {hi, 0.0, 0};
  if (std::signbit(flo) == std::signbit(fhi) || !std::isfinite(flo) || !std::isfinite(fhi)) {
    throw BracketError("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                       "]: f = " + std::to_string(flo) + ", " + std::to_string(fhi));
  }
  int it = 0;
  while (hi - lo > xtol) {
    if (++it > maxIterations) throw BracketError("bisection did not converge");
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) return {mid, 0.0, it};
    if (std::signbit(fmid) == std::signbit(flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }
  double best = std::abs(flo) < std::abs(fhi) ? lo : hi;
  double bestResidual = std::min(std::abs(flo), std::abs(fhi));
  if (fhi != flo) {
    const double secant = hi - fhi * (hi - lo) / (fhi - flo);
    if (secant >= lo && secant <= hi) {
      const double fs = f(secant);
      if (std::abs(fs) <= bestResidual) {
        best = secant;
        bestResidual = std::abs(fs);
      }
    }
  }
  return {best, bestResidual, it};
}

}  // namespace polytorus
