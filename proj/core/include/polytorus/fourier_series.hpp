#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>

#include "polytorus/linear_polynomial.hpp"
#include "polytorus/multi_index.hpp"

namespace polytorus {

/// Truncated Fourier series on the d-torus: a sparse map from multi-index to
/// complex coefficient.
///
/// Invariants: no stored coefficient is exactly zero, and dim() is at least
/// the support length of every stored multi-index. Arithmetic purges exact
/// zeros only; numerical noise is left to callers (see extractCoefficients).
class FourierSeries {
 public:
  using Coefficient = std::complex<double>;
  using Terms = std::map<MultiIndex, Coefficient>;

  FourierSeries() = default;
  explicit FourierSeries(std::size_t dim) : dim_(dim) {}

  static FourierSeries constant(Coefficient c);
  static FourierSeries monomial(const MultiIndex& alpha, Coefficient c = 1.0);
  /// z_{position+1}, or its conjugate when `conjugate` is set.
  static FourierSeries variable(std::size_t position, bool conjugate = false);
  static FourierSeries fromLinear(const LinearPolynomial& f);

  /// Adds c to the coefficient at alpha, dropping the term if the sum is 0.
  void add(const MultiIndex& alpha, Coefficient c);
  Coefficient coefficient(const MultiIndex& alpha) const;

  const Terms& terms() const noexcept { return terms_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  /// Raises the ambient dimension. Lowering below the support throws.
  void setDim(std::size_t dim);

  int maxAbsExponent() const noexcept;
  /// Largest variable count actually used by a term.
  std::size_t supportDim() const noexcept;
  /// sqrt(sum |c_alpha|^2), the L^2 norm by Parseval.
  double l2Norm() const;
  /// The series of the pointwise conjugate function.
  FourierSeries conjugate() const;

  FourierSeries& operator+=(const FourierSeries& other);
  FourierSeries& operator-=(const FourierSeries& other);
  FourierSeries& operator*=(Coefficient s);

  friend FourierSeries operator+(FourierSeries a, const FourierSeries& b) { return a += b; }
  friend FourierSeries operator-(FourierSeries a, const FourierSeries& b) { return a -= b; }
  friend FourierSeries operator*(FourierSeries a, Coefficient s) { return a *= s; }
  friend FourierSeries operator*(Coefficient s, FourierSeries a) { return a *= s; }
  friend FourierSeries operator*(const FourierSeries& a, const FourierSeries& b);

  bool operator==(const FourierSeries& other) const = default;

 private:
  std::size_t dim_ = 0;
  Terms terms_;
};

/// Value of f at the point (e^{i theta_1}, ..., e^{i theta_d}).
/// Throws std::invalid_argument when fewer than f.dim() angles are given.
std::complex<double> evaluate(const FourierSeries& f, std::span<const double> angles);

/// Riesz projection: keeps the terms whose multi-index is nonnegative.
FourierSeries rieszProject(const FourierSeries& f);

/// The k-homogeneous part: terms of total degree k.
FourierSeries homogeneousPart(const FourierSeries& f, int k);

/// A_d: drops every term that depends on a variable beyond the first d.
FourierSeries restrict(const FourierSeries& f, std::size_t d);

/// f(z_1, z_3, z_5, ...) * f(z_2, z_4, z_6, ...), of dimension 2 * f.dim().
FourierSeries tensorDouble(const FourierSeries& f);

/// <f, g> = sum_alpha c_alpha(f) * conj(c_alpha(g)).
std::complex<double> innerProduct(const FourierSeries& f, const FourierSeries& g);

}  // namespace polytorus
