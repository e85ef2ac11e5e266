#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace polytorus {

/// f(z) = c_1 z_1 + ... + c_d z_d.
struct LinearPolynomial {
  std::vector<std::complex<double>> coeffs;

  LinearPolynomial() = default;
  explicit LinearPolynomial(std::vector<std::complex<double>> c) : coeffs(std::move(c)) {}
  LinearPolynomial(std::initializer_list<std::complex<double>> c) : coeffs(c) {}

  /// The normalized symmetric function (z_1 + ... + z_d) / sqrt(d).
  static LinearPolynomial symmetric(std::size_t d);
  /// z_1 + ... + z_d without normalization.
  static LinearPolynomial allOnes(std::size_t d);

  std::size_t dim() const noexcept { return coeffs.size(); }
  /// L^2 (= H^2) norm, sqrt(sum |c_j|^2).
  double l2Norm() const;
  /// Number of nonzero coefficients.
  std::size_t supportSize() const;
  bool isTrivial() const { return supportSize() == 0; }
  /// Moduli |c_j| in order.
  std::vector<double> magnitudes() const;
};

}  // namespace polytorus
