#include "polytorus/special_functions.hpp"

#include <array>
#include <numbers>

namespace polytorus {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool isNonPositiveInteger(double x) { return x <= 0.0 && x == std::floor(x); }

bool isSmallPositiveInteger(double x) { return x >= 1.0 && x <= 171.0 && x == std::floor(x); }

double factorialOf(double n) {
  double f = 1.0;
  for (double k = 2.0; k <= n; k += 1.0) f *= k;
  return f;
}

// Lanczos sum for x >= 1/2: returns log Gamma(x).
double lanczosLogGamma(double x) {
  x -= 1.0;
  double a = kLanczos[0];
  const double t = x + kLanczosG + 0.5;
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + static_cast<double>(i));
  return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t + std::log(a);
}

double lanczosGamma(double x) {
  x -= 1.0;
  double a = kLanczos[0];
  const double t = x + kLanczosG + 0.5;
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + static_cast<double>(i));
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

}  // namespace

double gamma(double x) {
  if (std::isnan(x)) return x;
  if (isNonPositiveInteger(x)) {
    throw std::domain_error("gamma: pole at " + std::to_string(x));
  }
  if (isSmallPositiveInteger(x)) return factorialOf(x - 1.0);
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
  }
  if (x > 140.0) return std::exp(lanczosLogGamma(x));
  return lanczosGamma(x);
}

double logGamma(double x) {
  if (std::isnan(x)) return x;
  if (isNonPositiveInteger(x)) {
    throw std::domain_error("logGamma: pole at " + std::to_string(x));
  }
  if (isSmallPositiveInteger(x)) return std::log(factorialOf(x - 1.0));
  if (x < 0.5) {
    return std::log(std::numbers::pi / std::abs(std::sin(std::numbers::pi * x))) -
           logGamma(1.0 - x);
  }
  return lanczosLogGamma(x);
}

double reciprocalGamma(double x) {
  if (isNonPositiveInteger(x)) return 0.0;
  return 1.0 / gamma(x);
}

double beta(double x, double y) {
  return gamma(x) * gamma(y) * reciprocalGamma(x + y);
}

}  // namespace polytorus
