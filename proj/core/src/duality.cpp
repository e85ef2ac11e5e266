#include "polytorus/duality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "abs_pow.hpp"
#include "polytorus/constants.hpp"
#include "polytorus/grid_function.hpp"

namespace polytorus {

namespace {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b) { return std::inner_product(a.begin(), a.end(), b.begin(), 0.0); }

double euclidean(const Vec& a) { return std::sqrt(dot(a, a)); }

// Clamp to the nonnegative orthant and rescale to the unit sphere.
Vec projectToSphere(Vec c) {
  for (double& x : c) x = std::max(0.0, x);
  const double n = euclidean(c);
  if (n == 0.0) return c;
  for (double& x : c) x /= n;
  return c;
}

// ||sum c_j z_j||_p for real nonnegative c on a fixed grid over the variables
// 2..k after the rotation z -> z * conj(z_1). Smooth in c, which is what the
// finite-difference gradient needs.
class FixedGridLinearNorm {
 public:
  FixedGridLinearNorm(std::size_t k, double p) : k_(k), p_(p) {
    even_ = p == std::floor(p) && std::fmod(p, 2.0) == 0.0 && p <= 8.0;
    if (!even_ && k_ > 1) {
      static constexpr std::size_t kPointsPerAxis[] = {0, 4096, 192, 32};
      if (k_ - 1 >= std::size(kPointsPerAxis)) {
        throw std::domain_error("dual norm search supports at most 4 active variables");
      }
      n_ = kPointsPerAxis[k_ - 1];
      roots_ = rootsOfUnity(n_);
    }
  }

  double operator()(const Vec& c) const {
    if (k_ == 1) return std::abs(c[0]);
    if (even_) {
      LinearPolynomial f;
      for (double x : c) f.coeffs.emplace_back(x);
      return multinomialNorm(f, p_).value;
    }
    const double mean = gridAverage(k_ - 1, n_, [&](std::span<const std::size_t> pt) {
      std::complex<double> z = c[0];
      for (std::size_t j = 1; j < k_; ++j) z += c[j] * roots_[pt[j - 1]];
      return detail::absPowFromNorm(std::norm(z), p_);
    });
    return std::pow(mean, 1.0 / p_);
  }

 private:
  std::size_t k_;
  double p_;
  bool even_ = false;
  std::size_t n_ = 0;
  std::vector<std::complex<double>> roots_;
};

class RatioSearch {
 public:
  RatioSearch(Vec weights, double p, const DualOptions& options)
      : w_(std::move(weights)), norm_(w_.size(), p), options_(options) {}

  double objective(const Vec& c) const {
    Vec a(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) a[j] = std::abs(c[j]);
    const double n = norm_(a);
    return n == 0.0 ? 0.0 : dot(a, w_) / n;
  }

  // Projected gradient ascent on the nonnegative part of the unit sphere.
  // Returns the final point; sets `stalled` when the line search gave up
  // with a non-negligible gradient.
  Vec ascend(Vec c, bool& stalled) const {
    c = projectToSphere(std::move(c));
    double f = objective(c);
    double step = 0.1;
    stalled = false;
    for (int iter = 0; iter < options_.maxIterations; ++iter) {
      Vec g = gradient(c);
      const double radial = dot(g, c);
      for (std::size_t j = 0; j < g.size(); ++j) {
        g[j] -= radial * c[j];
        if (c[j] == 0.0 && g[j] < 0.0) g[j] = 0.0;
      }
      const double gnorm2 = dot(g, g);
      if (std::sqrt(gnorm2) < options_.gradientTolerance) return c;

      bool accepted = false;
      while (step > 1e-14) {
        Vec cand(c);
        for (std::size_t j = 0; j < c.size(); ++j) cand[j] += step * g[j];
        cand = projectToSphere(std::move(cand));
        const double fc = objective(cand);
        if (fc > f + 1e-4 * step * gnorm2) {
          const double gain = fc - f;
          c = std::move(cand);
          f = fc;
          step = std::min(1.0, 2.0 * step);
          accepted = true;
          if (gain < 1e-15 * f) return c;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) {
        stalled = std::sqrt(gnorm2) > 1e-6;
        return c;
      }
    }
    return c;
  }

  Vec nelderMead(Vec start) const {
    const std::size_t k = start.size();
    auto loss = [&](const Vec& x) { return -objective(x); };
    std::vector<Vec> simplex(k + 1, start);
    for (std::size_t j = 0; j < k; ++j) simplex[j + 1][j] += 0.05;
    Vec values(k + 1);
    for (std::size_t i = 0; i <= k; ++i) values[i] = loss(simplex[i]);

    for (int iter = 0; iter < 400 * static_cast<int>(k); ++iter) {
      std::vector<std::size_t> order(k + 1);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
      const std::size_t best = order.front(), worst = order.back(), second = order[k - 1];
      if (values[worst] - values[best] < 1e-13) break;

      Vec centroid(k, 0.0);
      for (std::size_t i : order) {
        if (i == worst) continue;
        for (std::size_t j = 0; j < k; ++j) centroid[j] += simplex[i][j] / static_cast<double>(k);
      }
      auto along = [&](double t) {
        Vec x(k);
        for (std::size_t j = 0; j < k; ++j) x[j] = centroid[j] + t * (simplex[worst][j] - centroid[j]);
        return x;
      };
      Vec reflected = along(-1.0);
      const double fr = loss(reflected);
      if (fr < values[best]) {
        Vec expanded = along(-2.0);
        const double fe = loss(expanded);
        if (fe < fr) {
          simplex[worst] = std::move(expanded);
          values[worst] = fe;
        } else {
          simplex[worst] = std::move(reflected);
          values[worst] = fr;
        }
      } else if (fr < values[second]) {
        simplex[worst] = std::move(reflected);
        values[worst] = fr;
      } else {
        Vec contracted = along(0.5);
        const double fc = loss(contracted);
        if (fc < values[worst]) {
          simplex[worst] = std::move(contracted);
          values[worst] = fc;
        } else {
          for (std::size_t i = 0; i <= k; ++i) {
            if (i == best) continue;
            for (std::size_t j = 0; j < k; ++j) {
              simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
            }
            values[i] = loss(simplex[i]);
          }
        }
      }
    }
    const auto best = std::min_element(values.begin(), values.end()) - values.begin();
    Vec out = simplex[static_cast<std::size_t>(best)];
    for (double& x : out) x = std::abs(x);
    return projectToSphere(std::move(out));
  }

 private:
  Vec gradient(const Vec& c) const {
    const double h = options_.fdStep;
    Vec g(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
      Vec up(c), down(c);
      up[j] += h;
      if (c[j] >= h) {
        down[j] -= h;
        g[j] = (objective(up) - objective(down)) / (2.0 * h);
      } else {
        g[j] = (objective(up) - objective(c)) / h;
      }
    }
    return g;
  }

  Vec w_;
  FixedGridLinearNorm norm_;
  const DualOptions& options_;
};

void requireFiniteP(double p, const char* who) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::domain_error(std::string(who) + ": p must be finite and >= 1");
  }
}

}  // namespace

DualNormResult dualNormLinear(const LinearPolynomial& phi, double p, std::size_t restarts,
                              std::uint64_t seed, const DualOptions& options) {
  requireFiniteP(p, "dualNormLinear");
  if (phi.isTrivial()) throw std::invalid_argument("dualNormLinear: phi must be non-trivial");

  // Rotating each variable turns every coefficient of phi into |phi_j|; the
  // optimal f then has the same phases, and zero coefficients stay zero.
  std::vector<std::size_t> support;
  Vec weights;
  for (std::size_t j = 0; j < phi.dim(); ++j) {
    if (phi.coeffs[j] != 0.0) {
      support.push_back(j);
      weights.push_back(std::abs(phi.coeffs[j]));
    }
  }
  const double phiL2 = phi.l2Norm();

  RatioSearch search(weights, p, options);
  Vec best = projectToSphere(weights);
  std::size_t bestRestart = 0;
  if (weights.size() > 1) {
    double bestValue = -1.0;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t r = 0; r < std::max<std::size_t>(1, restarts); ++r) {
      Vec start = weights;
      if (r > 0) {
        for (double& x : start) x = unit(rng);
      }
      bool stalled = false;
      Vec c = search.ascend(start, stalled);
      if (stalled) {
        Vec polished = search.nelderMead(c);
        if (search.objective(polished) > search.objective(c)) c = std::move(polished);
      }
      const double v = search.objective(c);
      if (v > bestValue) {
        bestValue = v;
        best = std::move(c);
        bestRestart = r;
      }
    }
  }

  auto embed = [&](const Vec& c) {
    LinearPolynomial f(std::vector<std::complex<double>>(phi.dim(), 0.0));
    for (std::size_t i = 0; i < support.size(); ++i) {
      const auto& z = phi.coeffs[support[i]];
      f.coeffs[support[i]] = c[i] * (z / std::abs(z));
    }
    return f;
  };

  const auto phiNorm = linearNorm(phi, p, options.accurate);
  DualNormResult result;
  result.lowerCertificate = phiL2 * phiL2 / (phiNorm.value + phiNorm.errorBound);
  result.upperCertificate = phiL2 / khintchineConstants(p).a;

  result.maximizer = embed(best);
  const auto fNorm = linearNorm(result.maximizer, p, options.accurate);
  result.value = dot(best, weights) / (fNorm.value + fNorm.errorBound);
  result.bestRestart = bestRestart;
  if (result.value < result.lowerCertificate) {
    result.value = result.lowerCertificate;
    result.maximizer = embed(projectToSphere(weights));
    result.bestRestart = 0;
  }
  return result;
}

ShiftAverage shiftAverage(const LinearPolynomial& f) {
  const std::size_t d = f.dim();
  for (const auto& c : f.coeffs) {
    if (c.imag() != 0.0 || c.real() < 0.0) {
      throw std::invalid_argument("shiftAverage: coefficients must be real and nonnegative");
    }
  }
  if (d == 0) return {0.0, {}};
  double total = 0.0;
  for (const auto& c : f.coeffs) total += c.real();

  std::vector<std::complex<double>> averaged(d, 0.0);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < d; ++j) averaged[j] += f.coeffs[(j + k) % d];
  }
  for (auto& c : averaged) c /= static_cast<double>(d);
  return {total / std::sqrt(static_cast<double>(d)), LinearPolynomial(std::move(averaged))};
}

DualInverseCheck verifyDualInverse(std::size_t d, double p, std::size_t restarts,
                                   std::uint64_t seed, const DualOptions& options) {
  requireFiniteP(p, "verifyDualInverse");
  if (d < 1 || d > 4) throw std::domain_error("verifyDualInverse: need 1 <= d <= 4");
  const auto phi = LinearPolynomial::symmetric(d);
  const double measured = dualNormLinear(phi, p, restarts, seed, options).value;
  const double predicted = 1.0 / linearNorm(phi, p, options.accurate).value;
  return {measured, predicted};
}

double supNormDualLinear(const LinearPolynomial& f) {
  double m = 0.0;
  for (const auto& c : f.coeffs) m = std::max(m, std::abs(c));
  return m;
}

PointEvaluationCheck pointEvaluationCheck(double eps, double r, double p) {
  if (!(eps >= 0.0 && eps < 0.5)) throw std::domain_error("pointEvaluationCheck: need 0 <= eps < 1/2");
  if (!(r >= 1.0) || !(p >= 1.0)) throw std::domain_error("pointEvaluationCheck: need r, p >= 1");

  const double dualNorm = std::pow(1.0 - eps * eps, -1.0 / r);

  // Taylor coefficients of (1 - eps z)^{-p/2}: c_n = c_{n-1} eps (p/2 + n - 1) / n.
  double coefficient = 1.0;
  double sumSquares = 1.0;
  for (int n = 1; n < 100000; ++n) {
    coefficient *= eps * (0.5 * p + n - 1.0) / n;
    const double term = coefficient * coefficient;
    sumSquares += term;
    if (n > p && term < 1e-16 * sumSquares) break;
  }
  const double hpNorm = std::pow(sumSquares, 1.0 / p);
  return {dualNorm, hpNorm, std::abs(dualNorm - (1.0 + eps * eps / r)),
          std::abs(hpNorm - (1.0 + p * eps * eps / 4.0))};
}

}  // namespace polytorus
