#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polytorus/exponent.hpp"
#include "polytorus/fourier_series.hpp"
#include "polytorus/norms.hpp"

namespace polytorus {

/// One dimension of the witness scan: norms of phi_d = (z_1 + ... + z_d)/sqrt(d).
struct ScanEntry {
  std::size_t d = 0;
  NormEstimate normP;
  NormEstimate normR;
  /// normP.value * normR.value.
  double product = 0.0;
  /// (normP.value - normP.errorBound) * (normR.value - normR.errorBound).
  double productLowerBound = 0.0;
};

struct Certificate {
  ExponentTriple exponents = ExponentTriple::make(2.0, Exponent(2.0));
  /// Witness dimension.
  std::size_t d = 0;
  double productLowerBound = 0.0;
  /// productLowerBound - 1.
  double margin = 0.0;
  /// One line per norm value: which method produced it and its error bar.
  std::vector<std::string> methodLog;
  /// Both witness norms agreed with an independent method within error bars.
  bool revalidated = false;
};

enum class CertifyStatus { certified, conditionUnsatisfied, inconclusive };

/// 0 certified, 2 condition unsatisfied, 3 inconclusive.
int exitCode(CertifyStatus status) noexcept;
std::string_view toString(CertifyStatus status) noexcept;

struct CertifyOutcome {
  CertifyStatus status = CertifyStatus::inconclusive;
  std::optional<Certificate> certificate;
  std::vector<ScanEntry> scan;
  /// Gamma(1 + p/2)^{1/p} Gamma(1 + r/2)^{1/r}, the large-d limit of the product.
  double limitProduct = 0.0;
  std::size_t bestD = 0;
  /// Largest productLowerBound - 1 over the scan.
  double bestMargin = 0.0;
  std::string message;
};

struct CertifyOptions {
  WalkMomentOptions walk;
  /// Samples of the Monte Carlo cross-check on each walk value.
  std::size_t crossCheckSamples = 200'000;
  /// Relative tolerance of the grid norms used for revalidation.
  double revalidationRtol = 1e-6;
};

/// Scans d = 1..dMax for ||phi_d||_p ||phi_d||_r > 1 with error bars
/// subtracted, which shows the Riesz projection unbounded from L^q to L^p.
/// Norms are exact for even exponents and d = 1, otherwise from the walk
/// integral with a Monte Carlo cross-check whose disagreement widens the
/// error bar. When the limit product is at most 1 the status is
/// conditionUnsatisfied whatever the scan shows.
/// Requires 2 <= p <= q, p finite, 1 <= dMax <= 12.
CertifyOutcome certifyUnbounded(double p, Exponent q, std::size_t dMax = 12,
                                std::uint64_t seed = 20170, const CertifyOptions& options = {});

struct AmplificationResult {
  /// ||Pf||_p / ||f||_q.
  double ratio;
  /// ||P f_2||_p / ||f_2||_q with f_2 the tensor double of f.
  double ratioDoubled;
};

/// Both ratios from grid norms at N points per axis, so the squaring
/// identity holds up to rounding. Requires f.dim() <= 2, p, q >= 1 and
/// N > 2 maxAbsExponent(f).
AmplificationResult amplificationDemo(const FourierSeries& f, Exponent p, Exponent q,
                                      std::size_t pointsPerAxis = 32);

struct CriticalTableRow {
  Exponent q;
  double criticalP;
  double legacyP;
  bool hasMarzoSeipReference;
};

/// One row per q: criticalCurve(q), legacyCriticalP(q), and the comparison
/// constant on the q = infinity row. Requires every q >= 2.
std::vector<CriticalTableRow> emitCriticalTable(const std::vector<Exponent>& qValues);

/// Header q,theorem3_p,legacy_p,marzo_seip_reference; the last field is empty
/// except on the q = infinity row.
std::string criticalTableCsv(const std::vector<CriticalTableRow>& rows);

}  // namespace polytorus
