#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "polytorus/fourier_series.hpp"
#include "polytorus/parallel.hpp"

namespace polytorus {

/// Total number of points N^d; throws std::length_error past `cap`.
std::size_t gridPointCount(std::size_t dim, std::size_t pointsPerAxis,
                           std::size_t cap = std::size_t{1} << 26);

namespace detail {
inline constexpr std::size_t kGridChunk = std::size_t{1} << 14;

inline void decodePoint(std::size_t flat, std::size_t n, std::span<std::size_t> out) {
  for (std::size_t j = out.size(); j-- > 0;) {
    out[j] = flat % n;
    flat /= n;
  }
}

inline void advancePoint(std::size_t n, std::span<std::size_t> pt) {
  for (std::size_t j = pt.size(); j-- > 0;) {
    if (++pt[j] < n) return;
    pt[j] = 0;
  }
}
}  // namespace detail

/// Samples on the uniform N^d grid of the d-torus, theta_j = 2 pi n_j / N,
/// stored row-major in (n_1, ..., n_d) so n_d varies fastest. Every sample
/// carries weight N^{-d}: the normalized Haar measure at truncation level d.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(std::size_t dim, std::size_t pointsPerAxis);

  /// Fills the grid from a function of the grid coordinates (n_1, ..., n_d).
  template <class PointFn>
  static GridFunction tabulate(std::size_t dim, std::size_t pointsPerAxis, PointFn&& fn);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t pointsPerAxis() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<std::complex<double>> values() noexcept { return values_; }
  std::span<const std::complex<double>> values() const noexcept { return values_; }
  std::complex<double>& operator[](std::size_t flat) { return values_[flat]; }
  const std::complex<double>& operator[](std::size_t flat) const { return values_[flat]; }

  /// Flat index of the grid point (n_1, ..., n_d).
  std::size_t flatIndex(std::span<const std::size_t> point) const;
  /// Grid coordinates of a flat index.
  std::vector<std::size_t> point(std::size_t flat) const;

  /// Integral against the normalized measure: the sample mean.
  std::complex<double> mean() const;
  /// mean |value|^p for finite p >= 1.
  double meanAbsPow(double p) const;
  /// (mean |value|^p)^{1/p}; pass +infinity for the sup over samples.
  double lpNorm(double p) const;

 private:
  std::size_t dim_ = 0;
  std::size_t n_ = 0;
  std::vector<std::complex<double>> values_;
};

template <class PointFn>
GridFunction GridFunction::tabulate(std::size_t dim, std::size_t pointsPerAxis, PointFn&& fn) {
  GridFunction g(dim, pointsPerAxis);
  forEachChunk(g.size(), detail::kGridChunk,
               [&](std::size_t, std::size_t begin, std::size_t end) {
                 std::vector<std::size_t> pt(dim);
                 detail::decodePoint(begin, pointsPerAxis, pt);
                 for (std::size_t i = begin; i < end; ++i) {
                   g.values_[i] = fn(std::span<const std::size_t>(pt));
                   detail::advancePoint(pointsPerAxis, pt);
                 }
               });
  return g;
}

/// (1/N^d) sum_n w(n) over the grid without materializing it; w receives the
/// grid coordinates. Reduction order is fixed, independent of worker count.
template <class PointFn>
double gridAverage(std::size_t dim, std::size_t pointsPerAxis, PointFn&& w) {
  const std::size_t total = gridPointCount(dim, pointsPerAxis);
  auto partial = mapChunks<double>(
      total, detail::kGridChunk, [&](std::size_t, std::size_t begin, std::size_t end) {
        std::vector<std::size_t> pt(dim);
        detail::decodePoint(begin, pointsPerAxis, pt);
        double s = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
          s += w(std::span<const std::size_t>(pt));
          detail::advancePoint(pointsPerAxis, pt);
        }
        return s;
      });
  double sum = 0.0;
  for (double s : partial) sum += s;
  return sum / static_cast<double>(total);
}

/// Largest w(n) over the grid.
template <class PointFn>
double gridMaximum(std::size_t dim, std::size_t pointsPerAxis, PointFn&& w) {
  const std::size_t total = gridPointCount(dim, pointsPerAxis);
  auto partial = mapChunks<double>(
      total, detail::kGridChunk, [&](std::size_t, std::size_t begin, std::size_t end) {
        std::vector<std::size_t> pt(dim);
        detail::decodePoint(begin, pointsPerAxis, pt);
        double m = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
          m = std::max(m, w(std::span<const std::size_t>(pt)));
          detail::advancePoint(pointsPerAxis, pt);
        }
        return m;
      });
  double m = 0.0;
  for (double v : partial) m = std::max(m, v);
  return m;
}

/// The N-th roots of unity e^{2 pi i k / N}, k = 0..N-1.
std::vector<std::complex<double>> rootsOfUnity(std::size_t n);

/// Evaluates a series at grid points through a table of roots of unity, so
/// phases are exact table entries rather than accumulated angles.
class GridEvaluator {
 public:
  GridEvaluator(const FourierSeries& f, std::size_t pointsPerAxis);
  std::complex<double> operator()(std::span<const std::size_t> point) const;

 private:
  std::size_t n_;
  std::vector<std::complex<double>> roots_;
  std::vector<std::complex<double>> coeffs_;
  std::vector<std::vector<long long>> exponents_;
};

/// Default magnitude below which numerically extracted coefficients are dropped.
inline constexpr double kExtractionPurgeThreshold = 1e-12;

/// Evaluates f at every grid point. Requires N > 2 * maxAbsExponent(f) so the
/// samples determine f; throws std::invalid_argument otherwise.
GridFunction sampleGrid(const FourierSeries& f, std::size_t pointsPerAxis);

/// Fourier coefficients of the grid samples for every multi-index with all
/// |exponents| <= maxDeg, by a separable discrete Fourier transform. Exact for
/// trigonometric polynomials of degree <= maxDeg per axis. Requires
/// N > 2 * maxDeg. Coefficients with modulus <= purgeThreshold are dropped.
FourierSeries extractCoefficients(const GridFunction& g, int maxDeg,
                                  double purgeThreshold = kExtractionPurgeThreshold);

}  // namespace polytorus
