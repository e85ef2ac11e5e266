#include "polytorus/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "abs_pow.hpp"
#include "polytorus/grid_function.hpp"
#include "polytorus/parallel.hpp"
#include "polytorus/special_functions.hpp"

namespace polytorus {

namespace {

void requireExponent(double p, const char* who) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::domain_error(std::string(who) + ": p must be finite and >= 1");
  }
}

// Absolute error of m^{1/p} induced by an absolute error dm in m.
double rootError(double moment, double dm, double p) {
  if (dm == 0.0) return 0.0;
  if (moment <= 0.0) return std::pow(dm, 1.0 / p);
  return dm * std::pow(moment, 1.0 / p - 1.0) / p;
}

double gridValue(const FourierSeries& f, double p, std::size_t n) {
  GridEvaluator eval(f, n);
  const double mean = gridAverage(f.dim(), n, [&](std::span<const std::size_t> pt) {
    return detail::absPowFromNorm(std::norm(eval(pt)), p);
  });
  return std::pow(mean, 1.0 / p);
}

bool isEvenInteger(double p) { return p == std::floor(p) && std::fmod(p, 2.0) == 0.0; }

}  // namespace

std::string_view toString(NormMethod method) noexcept {
  switch (method) {
    case NormMethod::grid: return "grid";
    case NormMethod::reduction1d: return "reduction1d";
    case NormMethod::multinomial: return "multinomial";
    case NormMethod::montecarlo: return "montecarlo";
    case NormMethod::bessel: return "bessel";
    case NormMethod::cltLimit: return "cltLimit";
  }
  return "unknown";
}

NormMethod parseNormMethod(std::string_view name) {
  for (auto m : {NormMethod::grid, NormMethod::reduction1d, NormMethod::multinomial,
                 NormMethod::montecarlo, NormMethod::bessel, NormMethod::cltLimit}) {
    if (toString(m) == name) return m;
  }
  throw std::invalid_argument("unknown norm method '" + std::string(name) + "'");
}

NormEstimate gridNorm(const FourierSeries& f, double p, std::size_t pointsPerAxis,
                      const GridNormOptions& options) {
  requireExponent(p, "gridNorm");
  if (pointsPerAxis < 4) throw std::domain_error("gridNorm: N must be at least 4");
  if (f.dim() > 4) {
    throw std::domain_error("gridNorm: dimension " + std::to_string(f.dim()) +
                            " exceeds the grid cost guard of 4");
  }
  if (f.empty()) return {0.0, NormMethod::grid, 0.0, 1, true};

  auto fits = [&](std::size_t n) {
    try {
      return gridPointCount(f.dim(), n, options.maxPoints) <= options.maxPoints;
    } catch (const std::length_error&) {
      return false;
    }
  };
  if (!fits(pointsPerAxis)) {
    throw std::domain_error("gridNorm: starting grid exceeds the point cap");
  }

  std::size_t n = pointsPerAxis;
  double prev = gridValue(f, p, n);
  double diff = std::numeric_limits<double>::infinity();
  while (fits(2 * n)) {
    n *= 2;
    const double cur = gridValue(f, p, n);
    diff = std::abs(cur - prev);
    prev = cur;
    if (diff <= options.rtol * cur) {
      return {cur, NormMethod::grid, diff, gridPointCount(f.dim(), n), true};
    }
  }
  return {prev, NormMethod::grid, diff, gridPointCount(f.dim(), n), false};
}

NormEstimate twoTermNorm(std::complex<double> c1, std::complex<double> c2, double p,
                         double absTol) {
  requireExponent(p, "twoTermNorm");
  const double a = std::abs(c1);
  const double b = std::abs(c2);
  if (a == 0.0 || b == 0.0) return {std::max(a, b), NormMethod::reduction1d, 0.0, 0, true};

  // |a + b e^{i theta}|^2 = (a - b)^2 + 4ab cos^2(theta/2), folded onto [0, pi].
  std::size_t evaluations = 0;
  auto integrand = [&](double theta) {
    ++evaluations;
    const double c = std::cos(0.5 * theta);
    return detail::absPowFromNorm((a - b) * (a - b) + 4.0 * a * b * c * c, p);
  };
  double error = 0.0;
  using Quadrature = boost::math::quadrature::gauss_kronrod<double, 31>;
  const double integral = Quadrature::integrate(integrand, 0.0, std::numbers::pi, 20,
                                                1e-14, &error);
  const double moment = integral / std::numbers::pi;
  const double value = std::pow(moment, 1.0 / p);
  const double bound = rootError(moment, error / std::numbers::pi, p);
  return {value, NormMethod::reduction1d, bound, evaluations, bound <= absTol};
}

NormEstimate multinomialNorm(const LinearPolynomial& f, double p) {
  if (!(p == 2.0 || p == 4.0 || p == 6.0 || p == 8.0)) {
    throw std::domain_error("multinomialNorm: p must be one of 2, 4, 6, 8");
  }
  const auto k = static_cast<std::size_t>(p / 2.0);

  // (k!)^2 [x^k] prod_j sum_a |c_j|^{2a} x^a / (a!)^2
  std::vector<double> inverseFactorialSquared(k + 1, 1.0);
  for (std::size_t a = 1; a <= k; ++a) {
    inverseFactorialSquared[a] =
        inverseFactorialSquared[a - 1] / (static_cast<double>(a) * static_cast<double>(a));
  }
  std::vector<double> poly(k + 1, 0.0);
  poly[0] = 1.0;
  for (const auto& c : f.coeffs) {
    const double w = std::norm(c);
    std::vector<double> next(k + 1, 0.0);
    for (std::size_t i = 0; i <= k; ++i) {
      double wa = 1.0;
      for (std::size_t a = 0; i + a <= k; ++a) {
        next[i + a] += poly[i] * wa * inverseFactorialSquared[a];
        wa *= w;
      }
    }
    poly = std::move(next);
  }
  double kFactorial = 1.0;
  for (std::size_t a = 2; a <= k; ++a) kFactorial *= static_cast<double>(a);
  const double moment = kFactorial * kFactorial * poly[k];

  // Number of exponent vectors a with |a| = k: binomial(k + d - 1, d - 1).
  double count = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    count = count * static_cast<double>(f.dim() + i - 1) / static_cast<double>(i);
  }
  return {std::pow(moment, 1.0 / p), NormMethod::multinomial, 0.0,
          static_cast<std::size_t>(count), true};
}

NormEstimate monteCarloNorm(const LinearPolynomial& f, double p, std::size_t samples,
                            std::uint64_t seed) {
  requireExponent(p, "monteCarloNorm");
  if (samples < 1000) throw std::domain_error("monteCarloNorm: need at least 1000 samples");

  struct Partial {
    double sum = 0.0;
    double sumSquares = 0.0;
  };
  constexpr std::size_t kChunk = std::size_t{1} << 16;
  const auto& coeffs = f.coeffs;
  auto partials = mapChunks<Partial>(
      samples, kChunk, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(chunk),
                          static_cast<std::uint32_t>(chunk >> 32)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        Partial acc;
        for (std::size_t m = begin; m < end; ++m) {
          std::complex<double> z{};
          for (const auto& c : coeffs) z += c * std::polar(1.0, angle(rng));
          const double y = detail::absPowFromNorm(std::norm(z), p);
          acc.sum += y;
          acc.sumSquares += y * y;
        }
        return acc;
      });
  Partial total;
  for (const auto& part : partials) {
    total.sum += part.sum;
    total.sumSquares += part.sumSquares;
  }
  const auto m = static_cast<double>(samples);
  const double mean = total.sum / m;
  const double variance = std::max(0.0, (total.sumSquares / m - mean * mean) * m / (m - 1.0));
  const double halfWidth = kMonteCarloZ99 * std::sqrt(variance / m);
  return {std::pow(mean, 1.0 / p), NormMethod::montecarlo, rootError(mean, halfWidth, p), samples,
          true};
}

double cltLimitNorm(double p) {
  requireExponent(p, "cltLimitNorm");
  return std::exp(logGamma(1.0 + 0.5 * p) / p);
}

NormEstimate linearNorm(const LinearPolynomial& f, double p, const LinearNormOptions& options) {
  requireExponent(p, "linearNorm");
  std::vector<double> moduli;
  for (const auto& c : f.coeffs) {
    if (c != 0.0) moduli.push_back(std::abs(c));
  }
  if (moduli.empty()) return {0.0, NormMethod::multinomial, 0.0, 0, true};
  if (moduli.size() == 1) return {moduli[0], NormMethod::multinomial, 0.0, 1, true};
  if (isEvenInteger(p) && p <= 8.0) return multinomialNorm(f, p);
  if (moduli.size() == 2) return twoTermNorm(moduli[0], moduli[1], p);

  const bool equalModuli =
      std::all_of(moduli.begin(), moduli.end(), [&](double m) { return m == moduli[0]; });
  if (equalModuli) {
    auto walk = pearsonWalkMoment(moduli.size(), p, options.walk);
    walk.value *= moduli[0];
    walk.errorBound *= moduli[0];
    return walk;
  }
  if (moduli.size() <= 4) {
    // Multiplying by conj(z_1) leaves the distribution of |f| unchanged.
    FourierSeries reduced = FourierSeries::constant(moduli[0]);
    for (std::size_t j = 1; j < moduli.size(); ++j) {
      reduced.add(MultiIndex::unit(j - 1), moduli[j]);
    }
    return gridNorm(reduced, p, 32, options.grid);
  }
  return monteCarloNorm(LinearPolynomial(std::vector<std::complex<double>>(moduli.begin(),
                                                                           moduli.end())),
                        p, options.monteCarloSamples, options.seed);
}

}  // namespace polytorus
