#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "polytorus/fourier_series.hpp"
#include "polytorus/linear_polynomial.hpp"

namespace polytorus::testing {

inline FourierSeries randomSeries(std::mt19937_64& rng, std::size_t dim, int degree, int terms) {
  std::uniform_int_distribution<int> exponent(-degree, degree);
  std::normal_distribution<double> gauss;
  FourierSeries f(dim);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> alpha(dim);
    for (auto& a : alpha) a = exponent(rng);
    f.add(MultiIndex(alpha), {gauss(rng), gauss(rng)});
  }
  return f;
}

inline LinearPolynomial randomLinear(std::mt19937_64& rng, std::size_t dim, bool complexCoeffs = true) {
  std::normal_distribution<double> gauss;
  LinearPolynomial f;
  for (std::size_t j = 0; j < dim; ++j) {
    f.coeffs.emplace_back(gauss(rng), complexCoeffs ? gauss(rng) : 0.0);
  }
  return f;
}

inline FourierSeries asSeries(const LinearPolynomial& f) { return FourierSeries::fromLinear(f); }

}  // namespace polytorus::testing
