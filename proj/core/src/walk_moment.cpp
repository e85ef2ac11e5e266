#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "polytorus/norms.hpp"
#include "polytorus/special_functions.hpp"

namespace polytorus {

namespace {

constexpr std::size_t kTaylorTerms = 48;

// Coefficients a_k of J0(t)^n = sum_k a_k t^{2k}, k < kTaylorTerms.
std::vector<double> besselPowerSeries(std::size_t n) {
  std::vector<double> j0(kTaylorTerms);
  j0[0] = 1.0;
  for (std::size_t k = 1; k < kTaylorTerms; ++k) {
    j0[k] = -j0[k - 1] / (4.0 * static_cast<double>(k) * static_cast<double>(k));
  }
  std::vector<double> out(kTaylorTerms, 0.0);
  out[0] = 1.0;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<double> next(kTaylorTerms, 0.0);
    for (std::size_t i = 0; i < kTaylorTerms; ++i) {
      for (std::size_t j = 0; i + j < kTaylorTerms; ++j) next[i + j] += out[i] * j0[j];
    }
    out = std::move(next);
  }
  return out;
}

// k-th positive zero of J0: McMahon's expansion polished by Newton steps.
double besselJ0Zero(std::size_t k) {
  const double b = (static_cast<double>(k) - 0.25) * std::numbers::pi;
  const double b2 = b * b;
  double x = b + 1.0 / (8.0 * b) - 31.0 / (384.0 * b * b2) + 3779.0 / (15360.0 * b * b2 * b2);
  for (int it = 0; it < 4; ++it) {
    const double step = std::cyl_bessel_j(0.0, x) / std::cyl_bessel_j(1.0, x);
    x += step;
    if (std::abs(step) < 1e-15 * x) break;
  }
  return x;
}

// E R^{2k} for the unit-step walk: (k!)^2 [x^k] (sum_a x^a / (a!)^2)^n.
double evenWalkMoment(std::size_t n, std::size_t k) {
  std::vector<double> base(k + 1, 1.0);
  for (std::size_t a = 1; a <= k; ++a) {
    base[a] = base[a - 1] / (static_cast<double>(a) * static_cast<double>(a));
  }
  std::vector<double> poly(k + 1, 0.0);
  poly[0] = 1.0;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<double> next(k + 1, 0.0);
    for (std::size_t i = 0; i <= k; ++i) {
      for (std::size_t a = 0; i + a <= k; ++a) next[i + a] += poly[i] * base[a];
    }
    poly = std::move(next);
  }
  double kf = 1.0;
  for (std::size_t a = 2; a <= k; ++a) kf *= static_cast<double>(a);
  return kf * kf * poly[k];
}

}  // namespace

NormEstimate pearsonWalkMoment(std::size_t d, double p, const WalkMomentOptions& options) {
  if (d == 0) throw std::domain_error("pearsonWalkMoment: need d >= 1");
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::domain_error("pearsonWalkMoment: p must be finite and >= 1");
  }
  if (d == 1) return {1.0, NormMethod::bessel, 0.0, 0, true};
  if (p == std::floor(p) && std::fmod(p, 2.0) == 0.0) {
    const double moment = evenWalkMoment(d, static_cast<std::size_t>(p / 2.0));
    return {std::pow(moment, 1.0 / p), NormMethod::multinomial, 0.0, 0, true};
  }

  // Next to an even integer the normalization has a pole that the integral
  // cancels, losing digits; interpolate to the exact even moment instead.
  constexpr double kEvenGap = 1e-4;
  const double even = 2.0 * std::round(0.5 * p);
  if (even >= 2.0 && std::abs(p - even) < 0.5 * kEvenGap) {
    const double exact = std::pow(evenWalkMoment(d, static_cast<std::size_t>(even / 2.0)), 1.0 / even);
    const double side = p > even ? kEvenGap : -kEvenGap;
    NormEstimate far = pearsonWalkMoment(d, even + side, options);
    far.value = exact + (far.value - exact) * (p - even) / side;
    far.errorBound += 1e-9;
    return far;
  }

  const double n = static_cast<double>(d);
  const double s = p;
  const auto m = static_cast<std::size_t>(std::floor(s / 2.0));
  const auto a = besselPowerSeries(d);

  // Normalization: reciprocal of the continued Mellin transform of J0.
  const double scale = std::pow(2.0, s + 1.0) * gamma(1.0 + 0.5 * s) * reciprocalGamma(-0.5 * s);

  // On [0, t0] integrate the subtracted series term by term; n t0^2 / 4 <= 1
  // keeps its terms below 1 in magnitude.
  const double t0 = std::min(1.0, 2.0 / std::sqrt(n));
  double seriesPart = 0.0;
  double magnitude = 0.0;
  for (std::size_t k = m + 1; k < kTaylorTerms; ++k) {
    const double e = 2.0 * static_cast<double>(k) - s;
    const double term = a[k] * std::pow(t0, e) / e;
    seriesPart += term;
    magnitude += std::abs(term);
  }
  // The Taylor polynomial integrated over [t0, inf) in closed form.
  double polynomialPart = 0.0;
  for (std::size_t j = 0; j <= m; ++j) {
    const double e = s - 2.0 * static_cast<double>(j);
    const double term = a[j] * std::pow(t0, -e) / e;
    polynomialPart += term;
    magnitude += std::abs(term);
  }

  // Guess of E R^p used only to turn the tolerance into a target on the integral.
  const double momentGuess = std::pow(n, 0.5 * s) * std::min(1.0, gamma(1.0 + 0.5 * s));
  const double integralTarget = options.tolerance * p *
                                std::pow(momentGuess, 1.0 - 1.0 / p) / std::abs(scale);
  auto oscillatingTail = [&](double x) {
    return std::pow(2.0 / (std::numbers::pi * x), 0.5 * n) * std::pow(x, -1.0 - s);
  };

  auto integrand = [&](double t) {
    return std::pow(std::cyl_bessel_j(0.0, t), n) * std::pow(t, -1.0 - s);
  };
  using Quadrature = boost::math::quadrature::gauss_kronrod<double, 31>;

  double numeric = 0.0;
  double quadratureError = 0.0;
  std::size_t intervals = 0;
  std::size_t zeroIndex = 1;
  double left = t0;
  while (besselJ0Zero(zeroIndex) <= left) ++zeroIndex;
  bool converged = false;
  while (intervals < options.maxIntervals) {
    const double right = besselJ0Zero(zeroIndex++);
    double err = 0.0;
    const double piece = Quadrature::integrate(integrand, left, right, 0, 0.0, &err);
    numeric += piece;
    quadratureError += err;
    magnitude += std::abs(piece);
    ++intervals;
    left = right;
    if (intervals >= 8 && oscillatingTail(left) <= 1e-3 * integralTarget) {
      converged = true;
      break;
    }
  }

  // Mean of J0^n over [A, inf): J0(t)^n averages to c_n (2/(pi t))^{n/2} (1 - n/(16 t^2))
  // with c_n = binomial(n, n/2) / 2^n for even n, and to 0 for odd n.
  const double cutoff = left;
  double tailMean = 0.0;
  double tailModelError = 0.0;
  if (d % 2 == 0) {
    double cn = 1.0;
    for (std::size_t i = 1; i <= d / 2; ++i) {
      cn *= static_cast<double>(d / 2 + i) / static_cast<double>(i);
    }
    cn /= std::pow(2.0, n);
    const double e = s + 0.5 * n;
    const double amp = cn * std::pow(2.0 / std::numbers::pi, 0.5 * n);
    tailMean = amp * (std::pow(cutoff, -e) / e -
                      n / 16.0 * std::pow(cutoff, -e - 2.0) / (e + 2.0));
    tailModelError = amp * std::pow(cutoff, -e - 4.0);
  }

  const double integral = seriesPart - polynomialPart + numeric + tailMean;
  const double moment = scale * integral;
  if (!(moment > 0.0)) {
    throw std::runtime_error("pearsonWalkMoment: non-positive moment for d = " +
                             std::to_string(d) + ", p = " + std::to_string(p));
  }
  const double integralError = quadratureError + oscillatingTail(cutoff) + tailModelError +
                               64.0 * std::numeric_limits<double>::epsilon() * magnitude;
  const double momentError = std::abs(scale) * integralError;
  const double value = std::pow(moment, 1.0 / p);
  const double bound = momentError * std::pow(moment, 1.0 / p - 1.0) / p;
  return {value, NormMethod::bessel, bound, intervals * 31, converged};
}

}  // namespace polytorus
