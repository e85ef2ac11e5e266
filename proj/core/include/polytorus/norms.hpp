#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "polytorus/fourier_series.hpp"
#include "polytorus/linear_polynomial.hpp"

namespace polytorus {

enum class NormMethod { grid, reduction1d, multinomial, montecarlo, bessel, cltLimit };

std::string_view toString(NormMethod method) noexcept;
/// Inverse of toString; throws std::invalid_argument on unknown names.
NormMethod parseNormMethod(std::string_view name);

/// A computed L^p norm with its reported uncertainty.
struct NormEstimate {
  double value = 0.0;
  NormMethod method = NormMethod::grid;
  /// Absolute error bound; zero for exact methods.
  double errorBound = 0.0;
  /// Grid points, quadrature nodes or Monte Carlo samples used.
  std::size_t samplesOrPoints = 0;
  /// False when an iterative method hit its cost cap first.
  bool converged = true;
};

/// Two-sided 99% normal quantile used for Monte Carlo error bars.
inline constexpr double kMonteCarloZ99 = 2.5758293035489004;

struct GridNormOptions {
  double rtol = 1e-8;
  std::size_t maxPoints = std::size_t{1} << 24;
};

/// ((1/N^d) sum |f(theta_n)|^p)^{1/p} on the uniform grid, doubling N until
/// two successive values agree to rtol or the next grid would exceed
/// maxPoints. errorBound is the last observed difference. Requires p >= 1,
/// N >= 4 and f.dim() <= 4.
NormEstimate gridNorm(const FourierSeries& f, double p, std::size_t pointsPerAxis = 16,
                      const GridNormOptions& options = {});

/// ||c1 z1 + c2 z2||_p through the one-dimensional reduction
/// |c1 z1 + c2 z2| ~ ||c1| + |c2| e^{i theta}|, by adaptive Gauss-Kronrod
/// quadrature to an absolute accuracy of about absTol.
NormEstimate twoTermNorm(std::complex<double> c1, std::complex<double> c2, double p,
                         double absTol = 1e-10);

/// Exact ||f||_p for p in {2, 4, 6, 8}:
///   E|sum c_j z_j|^{2k} = sum_{|a| = k} (k! / a!)^2 prod |c_j|^{2 a_j},
/// the diagonal pairings of (sum c_j z_j)^k (sum conj(c_j z_j))^k.
NormEstimate multinomialNorm(const LinearPolynomial& f, double p);

/// ((1/M) sum_m |f(theta_m)|^p)^{1/p} over M i.i.d. uniform points. Samples
/// are drawn in fixed-size chunks, each from its own generator seeded by
/// (seed, chunk), so the result depends only on (f, p, samples, seed).
/// errorBound is the 99% normal half-width carried through the 1/p power.
/// Requires p >= 1 and samples >= 1000.
NormEstimate monteCarloNorm(const LinearPolynomial& f, double p, std::size_t samples,
                            std::uint64_t seed);

struct WalkMomentOptions {
  /// Target absolute accuracy of the returned (E R^p)^{1/p}.
  double tolerance = 1e-6;
  /// Cap on Bessel-zero intervals integrated before the asymptotic tail.
  std::size_t maxIntervals = 60000;
};

/// (E R^p)^{1/p} for the endpoint distance R = |z_1 + ... + z_d| of the
/// planar walk with d unit steps in uniform random directions.
///
/// For p not an even integer, with m = floor(p/2) and T_m the degree-2m
/// Taylor polynomial of J0(t)^d at 0,
///   E R^p = 2^{p+1} Gamma(1 + p/2) / Gamma(-p/2)
///           * int_0^inf (J0(t)^d - T_m(t)) t^{-1-p} dt.
/// The integral is split at the zeros of J0 and summed out to a cutoff past
/// which the oscillating remainder is below tolerance; the non-oscillating
/// part of the tail is added from the large-argument expansion of J0. Even
/// integer p is evaluated exactly by counting pairings. Requires d >= 1 and
/// p >= 1.
NormEstimate pearsonWalkMoment(std::size_t d, double p, const WalkMomentOptions& options = {});

/// Gamma(1 + p/2)^{1/p}: lim ||(z_1 + ... + z_d)/sqrt(d)||_p. Requires p >= 1.
double cltLimitNorm(double p);

struct LinearNormOptions {
  GridNormOptions grid;
  WalkMomentOptions walk;
  std::size_t monteCarloSamples = 1'000'000;
  std::uint64_t seed = 20170;
};

/// Best available ||f||_p for a linear polynomial: exact when the support has
/// one variable or p is an even integer <= 8, the one-dimensional reduction
/// for two variables, the walk integral for equal moduli, grid quadrature over
/// the phase-reduced torus for up to four variables, Monte Carlo otherwise.
NormEstimate linearNorm(const LinearPolynomial& f, double p, const LinearNormOptions& options = {});

}  // namespace polytorus
