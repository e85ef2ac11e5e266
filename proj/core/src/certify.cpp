#include "polytorus/certify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "polytorus/constants.hpp"
#include "polytorus/grid_function.hpp"
#include "polytorus/linear_polynomial.hpp"

namespace polytorus {

namespace {

bool isEvenInteger(double s) { return s == std::floor(s) && std::fmod(s, 2.0) == 0.0 && s <= 8.0; }

std::string formatNumber(double v, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

NormEstimate witnessNorm(std::size_t d, double s, std::uint64_t seed, const CertifyOptions& options) {
  if (d == 1) return {1.0, NormMethod::multinomial, 0.0, 1, true};
  const auto phi = LinearPolynomial::symmetric(d);
  if (isEvenInteger(s)) return multinomialNorm(phi, s);

  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  NormEstimate walk = pearsonWalkMoment(d, s, options.walk);
  walk.value *= scale;
  walk.errorBound *= scale;
  const auto mc = monteCarloNorm(phi, s, options.crossCheckSamples, seed);
  const double gap = std::abs(mc.value - walk.value);
  if (gap > mc.errorBound + walk.errorBound) walk.errorBound = std::max(walk.errorBound, gap);
  return walk;
}

std::string logLine(std::size_t d, double s, const NormEstimate& e) {
  return "d=" + std::to_string(d) + " exponent=" + formatNumber(s) + " value=" + formatNumber(e.value, 12) +
         " error=" + formatNumber(e.errorBound, 3) + " method=" + std::string(toString(e.method));
}

// An estimate from a method other than the primary one.
NormEstimate independentNorm(std::size_t d, double s, std::uint64_t seed, const CertifyOptions& options) {
  if (d <= 4) {
    FourierSeries phi(d);
    for (std::size_t j = 0; j < d; ++j) {
      phi.add(MultiIndex::unit(j), 1.0 / std::sqrt(static_cast<double>(d)));
    }
    GridNormOptions grid;
    grid.rtol = options.revalidationRtol;
    grid.maxPoints = std::size_t{1} << 22;
    return gridNorm(phi, s, 16, grid);
  }
  return monteCarloNorm(LinearPolynomial::symmetric(d), s, 1'000'000, seed ^ 0x9e3779b97f4a7c15ULL);
}

bool agrees(const NormEstimate& a, const NormEstimate& b) {
  return std::abs(a.value - b.value) <= a.errorBound + b.errorBound + 1e-12;
}

}  // namespace

int exitCode(CertifyStatus status) noexcept {
  switch (status) {
    case CertifyStatus::certified: return 0;
    case CertifyStatus::conditionUnsatisfied: return 2;
    case CertifyStatus::inconclusive: return 3;
  }
  return 3;
}

std::string_view toString(CertifyStatus status) noexcept {
  switch (status) {
    case CertifyStatus::certified: return "certified";
    case CertifyStatus::conditionUnsatisfied: return "condition_unsatisfied";
    case CertifyStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

CertifyOutcome certifyUnbounded(double p, Exponent q, std::size_t dMax, std::uint64_t seed,
                                const CertifyOptions& options) {
  if (!std::isfinite(p) || p < 2.0 || q < Exponent(p)) {
    throw std::domain_error("certifyUnbounded: need 2 <= p <= q with p finite");
  }
  if (dMax < 1 || dMax > 12) throw std::domain_error("certifyUnbounded: need 1 <= dMax <= 12");

  const auto triple = ExponentTriple::make(p, q);
  CertifyOutcome out;
  out.limitProduct = unboundednessMargin(triple);
  out.bestMargin = -1.0;

  for (std::size_t d = 1; d <= dMax; ++d) {
    ScanEntry e;
    e.d = d;
    e.normP = witnessNorm(d, triple.p, seed + 2 * d, options);
    e.normR = witnessNorm(d, triple.r, seed + 2 * d + 1, options);
    e.product = e.normP.value * e.normR.value;
    e.productLowerBound =
        (e.normP.value - e.normP.errorBound) * (e.normR.value - e.normR.errorBound);
    if (e.productLowerBound - 1.0 > out.bestMargin) {
      out.bestMargin = e.productLowerBound - 1.0;
      out.bestD = d;
    }
    out.scan.push_back(e);
  }

  if (out.limitProduct <= 1.0) {
    out.status = CertifyStatus::conditionUnsatisfied;
    out.message = "unboundedness condition not satisfied: limit product " +
                  formatNumber(out.limitProduct) + " <= 1";
    return out;
  }

  for (const auto& e : out.scan) {
    if (e.productLowerBound <= 1.0) continue;
    Certificate cert;
    cert.exponents = triple;
    cert.d = e.d;
    cert.productLowerBound = e.productLowerBound;
    cert.margin = e.productLowerBound - 1.0;
    cert.methodLog.push_back(logLine(e.d, triple.p, e.normP));
    cert.methodLog.push_back(logLine(e.d, triple.r, e.normR));
    const auto checkP = independentNorm(e.d, triple.p, seed + 101, options);
    const auto checkR = independentNorm(e.d, triple.r, seed + 103, options);
    cert.methodLog.push_back("revalidation " + logLine(e.d, triple.p, checkP));
    cert.methodLog.push_back("revalidation " + logLine(e.d, triple.r, checkR));
    cert.revalidated = agrees(e.normP, checkP) && agrees(e.normR, checkR);
    out.status = CertifyStatus::certified;
    out.message = "unbounded from L^" + triple.q.toString() + " to L^" + formatNumber(p) +
                  ", witness d=" + std::to_string(e.d);
    out.certificate = std::move(cert);
    return out;
  }

  out.status = CertifyStatus::inconclusive;
  out.message = "no witness up to d=" + std::to_string(dMax) + "; best margin " +
                formatNumber(out.bestMargin) + " at d=" + std::to_string(out.bestD);
  return out;
}

AmplificationResult amplificationDemo(const FourierSeries& f, Exponent p, Exponent q,
                                      std::size_t pointsPerAxis) {
  if (f.dim() > 2) throw std::domain_error("amplificationDemo: need f.dim() <= 2");
  auto ratio = [&](const FourierSeries& g) {
    const double num = sampleGrid(rieszProject(g), pointsPerAxis).lpNorm(p.value());
    const double den = sampleGrid(g, pointsPerAxis).lpNorm(q.value());
    if (den == 0.0) throw std::invalid_argument("amplificationDemo: f must be non-zero");
    return num / den;
  };
  FourierSeries base = f;
  if (base.dim() == 0) base.setDim(1);
  return {ratio(base), ratio(tensorDouble(base))};
}

std::vector<CriticalTableRow> emitCriticalTable(const std::vector<Exponent>& qValues) {
  std::vector<CriticalTableRow> rows;
  for (const auto& q : qValues) {
    rows.push_back({q, criticalCurve(q), legacyCriticalP(q), q.isInfinite()});
  }
  return rows;
}

std::string criticalTableCsv(const std::vector<CriticalTableRow>& rows) {
  std::ostringstream out;
  out << "q,theorem3_p,legacy_p,marzo_seip_reference\n";
  for (const auto& row : rows) {
    out << row.q.toString() << ',' << formatNumber(row.criticalP) << ','
        << formatNumber(row.legacyP) << ',';
    if (row.hasMarzoSeipReference) out << formatNumber(kMarzoSeipBound, 6);
    out << '\n';
  }
  return out.str();
}

}  // namespace polytorus
