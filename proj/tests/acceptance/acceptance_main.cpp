// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Usage: polytorus_acceptance [path-to-polytorus-cli]

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "polytorus/certify.hpp"
#include "polytorus/constants.hpp"
#include "polytorus/duality.hpp"
#include "polytorus/minimal_lift.hpp"
#include "polytorus/norms.hpp"

using namespace polytorus;
using Clock = std::chrono::steady_clock;

namespace {

const double pi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

FourierSeries symmetricSeries(std::size_t d) {
  return FourierSeries::fromLinear(LinearPolynomial::symmetric(d));
}

Outcome criticalExponent() {
  const auto start = Clock::now();
  const double p = solveCriticalP();
  const double elapsed = seconds(start);
  const double residual = std::abs(gammaMomentConstant(p) - 2.0 / std::sqrt(pi));
  const bool pass = std::abs(p - 3.31138) <= 1e-5 && residual < 1e-8 && elapsed < 0.1;
  return {pass, fmt("p=%.10f residual=%.2e time=%.4fs", p, residual, elapsed)};
}

Outcome goldenH1() {
  const auto start = Clock::now();
  const double two = twoTermNorm(1.0, 1.0, 1.0).value;
  const double walk2 = pearsonWalkMoment(2, 1.0).value;
  const double walk3 = pearsonWalkMoment(3, 1.0).value;
  const double elapsed = seconds(start);
  const double target = 4.0 / pi;
  const bool pass = std::abs(two - target) <= 1e-6 && std::abs(walk2 - target) <= 1e-6 &&
                    std::abs(walk3 - 1.57459) <= 1e-4 && elapsed < 5.0;
  return {pass, fmt("twoTerm=%.10f walk(2,1)=%.10f walk(3,1)=%.10f time=%.3fs", two, walk2, walk3, elapsed)};
}

Outcome evenExactOracle() {
  bool pass = true;
  std::string detail;
  for (std::size_t d = 1; d <= 3; ++d) {
    const double grid = std::pow(gridNorm(symmetricSeries(d), 4.0).value, 4.0);
    const double exact = std::pow(multinomialNorm(LinearPolynomial::symmetric(d), 4.0).value, 4.0);
    const double err = std::max(std::abs(grid - exact), std::abs(exact - (2.0 - 1.0 / d)));
    pass = pass && err <= 1e-10;
    detail += fmt("d=%zu err=%.1e; ", d, err);
  }
  const auto mc = monteCarloNorm(LinearPolynomial::symmetric(6), 4.0, 1'000'000, 20170);
  const double se = mc.errorBound / kMonteCarloZ99;
  const double z = std::abs(mc.value - std::pow(2.0 - 1.0 / 6.0, 0.25)) / se;
  pass = pass && z <= 3.0;
  detail += fmt("MC d=6 deviation=%.2f standard errors", z);
  return {pass, detail};
}

Outcome cltConvergence() {
  const double m4 = std::pow(multinomialNorm(LinearPolynomial::symmetric(12), 4.0).value, 4.0);
  const double gap = std::abs(m4 - 2.0);
  const double h1 = pearsonWalkMoment(12, 1.0).value / std::sqrt(12.0);
  const double limit = std::sqrt(pi) / 2.0;
  const bool pass = std::abs(gap - 1.0 / 12.0) <= 1e-14 && std::abs(h1 - limit) < 0.02;
  return {pass, fmt("|m4-2|=%.16f (1/12=%.16f) ||phi_12||_1=%.8f sqrt(pi)/2=%.8f", gap, 1.0 / 12.0, h1, limit)};
}

Outcome dualIdentity() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (std::size_t d = 1; d <= 3; ++d) {
    for (double p : {1.0, 1.5, 3.0, 4.0}) {
      const auto r = verifyDualInverse(d, p);
      worst = std::max(worst, std::abs(r.measured - r.predicted) / r.predicted);
    }
  }
  const double elapsed = seconds(start);
  return {worst <= 2e-3 && elapsed < 60.0, fmt("max relative gap=%.2e time=%.2fs", worst, elapsed)};
}

Outcome dualSandwich() {
  std::mt19937_64 rng(20170);
  std::uniform_int_distribution<std::size_t> dims(1, 4);
  std::normal_distribution<double> g;
  int violations = 0, checks = 0;
  double worst = -1e9;
  for (int t = 0; t < 100; ++t) {
    LinearPolynomial phi;
    const std::size_t d = dims(rng);
    for (std::size_t j = 0; j < d; ++j) phi.coeffs.emplace_back(g(rng), g(rng));
    const double l2 = phi.l2Norm();
    for (double p : {1.0, 1.5, 3.0, 4.0}) {
      const auto k = khintchineConstants(p);
      const auto r = dualNormLinear(phi, p, 2, 1000 + t);
      const double tol = 1e-3;
      const double below = l2 / k.b - tol - r.value;
      const double above = r.value - (l2 / k.a + tol);
      worst = std::max({worst, below, above});
      ++checks;
      if (below > 0.0 || above > 0.0) ++violations;
    }
  }
  return {violations == 0, fmt("%d checks, %d violations, worst slack=%.3e", checks, violations, worst)};
}

Outcome minimalLift() {
  bool pass = true;
  std::string detail;
  double worstViolation = 0.0, worstIdentity = 0.0;
  for (std::size_t d = 1; d <= 3; ++d) {
    for (double q : {2.0, 4.0 / 3.0, 1.5}) {
      const auto lift = buildLift(d, Exponent(q));
      const auto report = verifyProjection(lift);
      const auto id = minimalNormIdentity(lift);
      const double rel = std::abs(id.lhs - id.rhs) / id.rhs;
      pass = pass && report.passed && rel < 1e-6;
      worstViolation = std::max(worstViolation, report.maxViolation);
      worstIdentity = std::max(worstIdentity, rel);
    }
  }
  double worstClosed = 0.0;
  double third = 0.0;
  for (double p : {3.0, 4.0, 6.0}) {
    const auto report = verifyProjection(buildLift(2, Exponent(p).conjugate()));
    for (int k = -5; k <= 6; ++k) {
      const auto c = report.coefficients.coefficient(MultiIndex({k, 1 - k}));
      worstClosed = std::max(worstClosed, std::abs(c - d2ClosedFormCoefficient(p, k)));
      if (p == 4.0 && k == 2) third = c.real();
    }
  }
  pass = pass && worstClosed < 1e-6 && std::abs(third - 1.0 / 3.0) < 1e-6;
  detail = fmt("projection max violation=%.2e identity max rel=%.2e closed-form max diff=%.2e c(4,2)=%.12f",
               worstViolation, worstIdentity, worstClosed, third);
  return {pass, detail};
}

int runCli(const std::string& cli, const std::string& args) {
  const std::string command = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome certification(const std::string& cli) {
  int a, b, c;
  std::string how;
  if (!cli.empty()) {
    a = runCli(cli, "certify --p 3.5 --q inf");
    b = runCli(cli, "certify --p 3.3 --q inf");
    c = runCli(cli, "certify --p 2 --q 2");
    how = "cli";
  } else {
    a = exitCode(certifyUnbounded(3.5, Exponent::infinity()).status);
    b = exitCode(certifyUnbounded(3.3, Exponent::infinity()).status);
    c = exitCode(certifyUnbounded(2.0, Exponent(2.0)).status);
    how = "library";
  }
  const auto cert = certifyUnbounded(3.5, Exponent::infinity());
  const bool conservative = cert.certificate && cert.certificate->productLowerBound > 1.0 &&
                            cert.certificate->productLowerBound <= cert.scan[cert.certificate->d - 1].product &&
                            cert.certificate->revalidated;
  const bool pass = a == 0 && (b == 2 || b == 3) && c == 2 && conservative;
  return {pass, fmt("%s exits: 3.5/inf=%d 3.3/inf=%d 2/2=%d; witness d=%zu margin=%.6f", how.c_str(), a, b, c,
                    cert.certificate ? cert.certificate->d : 0, cert.certificate ? cert.certificate->margin : 0.0)};
}

Outcome tensorization() {
  std::mt19937_64 rng(20171);
  std::uniform_int_distribution<int> exponent(-2, 2);
  std::uniform_int_distribution<std::size_t> dims(1, 2);
  std::normal_distribution<double> g;
  const Exponent exps[] = {Exponent(1.0), Exponent(1.5), Exponent(2.0), Exponent(3.0), Exponent(4.0),
                           Exponent::infinity()};
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = dims(rng);
    FourierSeries f(d);
    for (int i = 0; i < 5; ++i) {
      std::vector<int> alpha(d);
      for (auto& a : alpha) a = exponent(rng);
      f.add(MultiIndex(alpha), {g(rng), g(rng)});
    }
    const auto r = amplificationDemo(f, exps[t % 6], exps[(t + 3) % 6], 16);
    worst = std::max(worst, std::abs(r.ratioDoubled - r.ratio * r.ratio));
  }
  return {worst <= 1e-6, fmt("max |ratio2 - ratio^2|=%.2e over 20 inputs", worst)};
}

Outcome pointEvaluation() {
  double worst = 0.0;
  bool pass = true;
  for (double eps : {0.05, 0.1}) {
    for (double r : {1.0, 2.0}) {
      for (double p : {3.0, 4.0}) {
        const auto c = pointEvaluationCheck(eps, r, p);
        const double bound = 10.0 * std::pow(eps, 4);
        pass = pass && c.dualExpansionError < bound && c.hpExpansionError < bound;
        worst = std::max({worst, c.dualExpansionError / bound, c.hpExpansionError / bound});
      }
    }
  }
  return {pass, fmt("max error / (10 eps^4)=%.3f", worst)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"critical exponent", criticalExponent},
      {"golden H1 values", goldenH1},
      {"even-p exact oracle", evenExactOracle},
      {"CLT convergence", cltConvergence},
      {"dual-norm identity", dualIdentity},
      {"dual Khintchine sandwich", dualSandwich},
      {"minimal lift", minimalLift},
      {"certification", [&] { return certification(cli); }},
      {"tensorization", tensorization},
      {"point-evaluation expansion", pointEvaluation},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
