#pragma once

#include <cmath>

namespace polytorus::detail {

/// |z|^p from |z|^2, with the common exponents done without pow().
inline double absPowFromNorm(double abs2, double p) {
  if (p == 2.0) return abs2;
  if (p == 1.0) return std::sqrt(abs2);
  if (p == 4.0) return abs2 * abs2;
  if (p == 3.0) return abs2 * std::sqrt(abs2);
  if (p == 1.5) {
    const double s = std::sqrt(abs2);
    return s * std::sqrt(s);
  }
  if (abs2 == 0.0) return 0.0;
  return std::pow(abs2, 0.5 * p);
}

}  // namespace polytorus::detail
