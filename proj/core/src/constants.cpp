#include "polytorus/constants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "polytorus/special_functions.hpp"

namespace polytorus {

namespace {

void requireOrdered(const ExponentTriple& t) {
  if (t.p < 2.0 || t.q < Exponent(t.p)) {
    throw std::domain_error("exponents must satisfy 2 <= p <= q, got p = " + std::to_string(t.p) +
                            ", q = " + t.q.toString());
  }
}

}  // namespace

double gammaMomentConstant(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::domain_error("gammaMomentConstant: p must be finite and >= 1");
  }
  return std::exp(logGamma(1.0 + 0.5 * p) / p);
}

KhintchineConstants khintchineConstants(double p) {
  const double g = gammaMomentConstant(p);
  return {p, std::min(1.0, g), std::max(1.0, g)};
}

double solveCriticalP() {
  const double target = 2.0 / std::sqrt(std::numbers::pi);
  return bracketedRoot([target](double p) { return gammaMomentConstant(p) - target; }, 2.0, 6.0)
      .root;
}

double unboundednessMargin(const ExponentTriple& t) {
  requireOrdered(t);
  return gammaMomentConstant(t.p) * gammaMomentConstant(t.r);
}

double criticalCurve(Exponent q) {
  if (q < Exponent(2.0)) throw std::domain_error("criticalCurve: q must be >= 2");
  if (q == Exponent(2.0)) return 2.0;
  const double rFactor = gammaMomentConstant(q.conjugate().value());
  auto excess = [rFactor](double p) { return gammaMomentConstant(p) * rFactor - 1.0; };

  double hi = q.isInfinite() ? 6.0 : q.value();
  if (q.isInfinite()) {
    while (excess(hi) <= 0.0) {
      hi *= 2.0;
      if (hi > 1e6) throw BracketError("criticalCurve: no crossing below 1e6");
    }
  } else if (excess(hi) <= 0.0) {
    return hi;
  }
  return bracketedRoot(excess, 2.0, hi).root;
}

double legacyCondition(const ExponentTriple& t) {
  requireOrdered(t);
  return t.p * t.r / 4.0;
}

double legacyCriticalP(Exponent q) {
  if (q < Exponent(2.0)) throw std::domain_error("legacyCriticalP: q must be >= 2");
  const double r = q.conjugate().value();
  return std::clamp(4.0 / r, 2.0, q.value());
}

}  // namespace polytorus
