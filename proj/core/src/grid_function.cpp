#include "polytorus/grid_function.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace polytorus {

std::size_t gridPointCount(std::size_t dim, std::size_t pointsPerAxis, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t j = 0; j < dim; ++j) {
    if (pointsPerAxis != 0 && total > cap / pointsPerAxis) {
      throw std::length_error("grid of " + std::to_string(pointsPerAxis) + "^" +
                              std::to_string(dim) + " points exceeds the size cap");
    }
    total *= pointsPerAxis;
  }
  return total;
}

GridFunction::GridFunction(std::size_t dim, std::size_t pointsPerAxis)
    : dim_(dim), n_(pointsPerAxis), values_(gridPointCount(dim, pointsPerAxis)) {
  if (pointsPerAxis == 0) throw std::invalid_argument("GridFunction: N must be positive");
}

std::size_t GridFunction::flatIndex(std::span<const std::size_t> point) const {
  if (point.size() != dim_) throw std::invalid_argument("GridFunction::flatIndex: dimension");
  std::size_t flat = 0;
  for (std::size_t j = 0; j < dim_; ++j) flat = flat * n_ + point[j];
  return flat;
}

std::vector<std::size_t> GridFunction::point(std::size_t flat) const {
  std::vector<std::size_t> pt(dim_);
  detail::decodePoint(flat, n_, pt);
  return pt;
}

std::complex<double> GridFunction::mean() const {
  auto partial = mapChunks<std::complex<double>>(
      size(), detail::kGridChunk, [&](std::size_t, std::size_t b, std::size_t e) {
        std::complex<double> s{};
        for (std::size_t i = b; i < e; ++i) s += values_[i];
        return s;
      });
  std::complex<double> sum{};
  for (const auto& s : partial) sum += s;
  return sum / static_cast<double>(size());
}

double GridFunction::meanAbsPow(double p) const {
  auto partial = mapChunks<double>(size(), detail::kGridChunk,
                                   [&](std::size_t, std::size_t b, std::size_t e) {
                                     double s = 0.0;
                                     for (std::size_t i = b; i < e; ++i) {
                                       s += std::pow(std::abs(values_[i]), p);
                                     }
                                     return s;
                                   });
  double sum = 0.0;
  for (double s : partial) sum += s;
  return sum / static_cast<double>(size());
}

double GridFunction::lpNorm(double p) const {
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
  }
  return std::pow(meanAbsPow(p), 1.0 / p);
}

std::vector<std::complex<double>> rootsOfUnity(std::size_t n) {
  std::vector<std::complex<double>> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                   static_cast<double>(n));
  }
  return roots;
}

GridEvaluator::GridEvaluator(const FourierSeries& f, std::size_t pointsPerAxis)
    : n_(pointsPerAxis), roots_(rootsOfUnity(pointsPerAxis)) {
  for (const auto& [alpha, c] : f.terms()) {
    coeffs_.push_back(c);
    std::vector<long long> e(alpha.size());
    for (std::size_t j = 0; j < alpha.size(); ++j) e[j] = alpha[j];
    exponents_.push_back(std::move(e));
  }
}

std::complex<double> GridEvaluator::operator()(std::span<const std::size_t> point) const {
  const auto n = static_cast<long long>(n_);
  std::complex<double> sum{};
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    long long phase = 0;
    const auto& e = exponents_[t];
    for (std::size_t j = 0; j < e.size(); ++j) phase += e[j] * static_cast<long long>(point[j]);
    phase %= n;
    if (phase < 0) phase += n;
    sum += coeffs_[t] * roots_[static_cast<std::size_t>(phase)];
  }
  return sum;
}

GridFunction sampleGrid(const FourierSeries& f, std::size_t pointsPerAxis) {
  if (pointsPerAxis <= 2 * static_cast<std::size_t>(f.maxAbsExponent())) {
    throw std::invalid_argument("sampleGrid: N = " + std::to_string(pointsPerAxis) +
                                " aliases a series of degree " +
                                std::to_string(f.maxAbsExponent()));
  }
  GridEvaluator eval(f, pointsPerAxis);
  return GridFunction::tabulate(f.dim(), pointsPerAxis, eval);
}

FourierSeries extractCoefficients(const GridFunction& g, int maxDeg, double purgeThreshold) {
  const std::size_t n = g.pointsPerAxis();
  if (maxDeg < 0 || n <= 2 * static_cast<std::size_t>(maxDeg)) {
    throw std::invalid_argument("extractCoefficients: need N > 2 * maxDeg");
  }
  const std::size_t d = g.dim();
  const std::size_t m = 2 * static_cast<std::size_t>(maxDeg) + 1;
  const auto roots = rootsOfUnity(n);

  // Axis by axis: shape goes from (m,..,m, N,..,N) to (m,..,m,m, N,..,N).
  std::vector<std::complex<double>> cur(g.values().begin(), g.values().end());
  for (std::size_t axis = 0; axis < d; ++axis) {
    std::size_t outer = 1;
    for (std::size_t j = 0; j < axis; ++j) outer *= m;
    std::size_t inner = 1;
    for (std::size_t j = axis + 1; j < d; ++j) inner *= n;
    std::vector<std::complex<double>> next(outer * m * inner);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t km = 0; km < m; ++km) {
        const long long k = static_cast<long long>(km) - maxDeg;
        std::complex<double>* dst = &next[(o * m + km) * inner];
        for (std::size_t t = 0; t < n; ++t) {
          long long idx = (-k * static_cast<long long>(t)) % static_cast<long long>(n);
          if (idx < 0) idx += static_cast<long long>(n);
          const std::complex<double> w = roots[static_cast<std::size_t>(idx)];
          const std::complex<double>* src = &cur[(o * n + t) * inner];
          for (std::size_t i = 0; i < inner; ++i) dst[i] += w * src[i];
        }
        for (std::size_t i = 0; i < inner; ++i) dst[i] /= static_cast<double>(n);
      }
    }
    cur = std::move(next);
  }

  FourierSeries out(d);
  std::vector<int> alpha(d);
  for (std::size_t flat = 0; flat < cur.size(); ++flat) {
    if (std::abs(cur[flat]) <= purgeThreshold) continue;
    std::size_t rem = flat;
    for (std::size_t j = d; j-- > 0;) {
      alpha[j] = static_cast<int>(rem % m) - maxDeg;
      rem /= m;
    }
    out.add(MultiIndex(alpha), cur[flat]);
  }
  out.setDim(d);
  return out;
}

}  // namespace polytorus
