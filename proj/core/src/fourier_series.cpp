#include "polytorus/fourier_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace polytorus {

LinearPolynomial LinearPolynomial::symmetric(std::size_t d) {
  if (d == 0) return {};
  return LinearPolynomial(
      std::vector<std::complex<double>>(d, 1.0 / std::sqrt(static_cast<double>(d))));
}

LinearPolynomial LinearPolynomial::allOnes(std::size_t d) {
  return LinearPolynomial(std::vector<std::complex<double>>(d, 1.0));
}

double LinearPolynomial::l2Norm() const {
  double s = 0.0;
  for (const auto& c : coeffs) s += std::norm(c);
  return std::sqrt(s);
}

std::size_t LinearPolynomial::supportSize() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs.begin(), coeffs.end(), [](const auto& c) { return c != 0.0; }));
}

std::vector<double> LinearPolynomial::magnitudes() const {
  std::vector<double> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(std::abs(c));
  return out;
}

FourierSeries FourierSeries::constant(Coefficient c) {
  FourierSeries f;
  f.add(MultiIndex{}, c);
  return f;
}

FourierSeries FourierSeries::monomial(const MultiIndex& alpha, Coefficient c) {
  FourierSeries f(alpha.size());
  f.add(alpha, c);
  return f;
}

FourierSeries FourierSeries::variable(std::size_t position, bool conjugate) {
  return monomial(MultiIndex::unit(position, conjugate ? -1 : 1));
}

FourierSeries FourierSeries::fromLinear(const LinearPolynomial& f) {
  FourierSeries out(f.dim());
  for (std::size_t j = 0; j < f.dim(); ++j) out.add(MultiIndex::unit(j), f.coeffs[j]);
  return out;
}

void FourierSeries::add(const MultiIndex& alpha, Coefficient c) {
  if (c == 0.0) return;
  dim_ = std::max(dim_, alpha.size());
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

FourierSeries::Coefficient FourierSeries::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Coefficient{} : it->second;
}

void FourierSeries::setDim(std::size_t dim) {
  if (dim < supportDim()) {
    throw std::invalid_argument("FourierSeries::setDim: dimension below support");
  }
  dim_ = dim;
}

int FourierSeries::maxAbsExponent() const noexcept {
  int m = 0;
  for (const auto& [alpha, c] : terms_) m = std::max(m, alpha.maxAbsExponent());
  return m;
}

std::size_t FourierSeries::supportDim() const noexcept {
  std::size_t m = 0;
  for (const auto& [alpha, c] : terms_) m = std::max(m, alpha.size());
  return m;
}

double FourierSeries::l2Norm() const {
  double s = 0.0;
  for (const auto& [alpha, c] : terms_) s += std::norm(c);
  return std::sqrt(s);
}

FourierSeries FourierSeries::conjugate() const {
  FourierSeries out(dim_);
  for (const auto& [alpha, c] : terms_) out.add(-alpha, std::conj(c));
  return out;
}

FourierSeries& FourierSeries::operator+=(const FourierSeries& other) {
  dim_ = std::max(dim_, other.dim_);
  for (const auto& [alpha, c] : other.terms_) add(alpha, c);
  return *this;
}

FourierSeries& FourierSeries::operator-=(const FourierSeries& other) {
  dim_ = std::max(dim_, other.dim_);
  for (const auto& [alpha, c] : other.terms_) add(alpha, -c);
  return *this;
}

FourierSeries& FourierSeries::operator*=(Coefficient s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    it = it->second == 0.0 ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

FourierSeries operator*(const FourierSeries& a, const FourierSeries& b) {
  FourierSeries out(std::max(a.dim(), b.dim()));
  for (const auto& [alpha, ca] : a.terms()) {
    for (const auto& [beta, cb] : b.terms()) out.add(alpha + beta, ca * cb);
  }
  return out;
}

std::complex<double> evaluate(const FourierSeries& f, std::span<const double> angles) {
  if (angles.size() < f.dim()) {
    throw std::invalid_argument("evaluate: got " + std::to_string(angles.size()) +
                                " angles for a series of dimension " +
                                std::to_string(f.dim()));
  }
  std::complex<double> sum{};
  for (const auto& [alpha, c] : f.terms()) {
    double phase = 0.0;
    for (std::size_t j = 0; j < alpha.size(); ++j) phase += alpha[j] * angles[j];
    sum += c * std::polar(1.0, phase);
  }
  return sum;
}

namespace {

template <class Keep>
FourierSeries filterTerms(const FourierSeries& f, Keep keep) {
  FourierSeries out(f.dim());
  for (const auto& [alpha, c] : f.terms()) {
    if (keep(alpha)) out.add(alpha, c);
  }
  return out;
}

FourierSeries reindex(const FourierSeries& f, std::size_t offset, std::size_t stride,
                      std::size_t dim) {
  FourierSeries out(dim);
  for (const auto& [alpha, c] : f.terms()) {
    std::vector<int> e(alpha.size() == 0 ? 0 : offset + stride * (alpha.size() - 1) + 1, 0);
    for (std::size_t j = 0; j < alpha.size(); ++j) e[offset + stride * j] = alpha[j];
    out.add(MultiIndex(std::move(e)), c);
  }
  return out;
}

}  // namespace

FourierSeries rieszProject(const FourierSeries& f) {
  return filterTerms(f, [](const MultiIndex& a) { return a.isAnalytic(); });
}

FourierSeries homogeneousPart(const FourierSeries& f, int k) {
  return filterTerms(f, [k](const MultiIndex& a) { return a.degree() == k; });
}

FourierSeries restrict(const FourierSeries& f, std::size_t d) {
  FourierSeries out = filterTerms(f, [d](const MultiIndex& a) { return a.size() <= d; });
  out.setDim(std::min(f.dim(), d));
  return out;
}

FourierSeries tensorDouble(const FourierSeries& f) {
  const std::size_t dim = 2 * f.dim();
  FourierSeries out = reindex(f, 0, 2, dim) * reindex(f, 1, 2, dim);
  out.setDim(dim);
  return out;
}

std::complex<double> innerProduct(const FourierSeries& f, const FourierSeries& g) {
  const auto& small = f.size() <= g.size() ? f : g;
  const auto& large = f.size() <= g.size() ? g : f;
  std::complex<double> sum{};
  for (const auto& [alpha, c] : small.terms()) {
    auto other = large.coefficient(alpha);
    if (other == 0.0) continue;
    sum += (&small == &f) ? c * std::conj(other) : other * std::conj(c);
  }
  return sum;
}

}  // namespace polytorus
