#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "polytorus/certify.hpp"
#include "polytorus/config.hpp"
#include "polytorus/constants.hpp"
#include "polytorus/duality.hpp"
#include "polytorus/minimal_lift.hpp"
#include "polytorus/norms.hpp"
#include "polytorus/series_io.hpp"
#include "polytorus/special_functions.hpp"

using nlohmann::ordered_json;
using namespace polytorus;

namespace {

enum class Format { text, json, csv };

struct Global {
  bool json = false;
  bool csv = false;
  std::string configPath;
  Settings settings;

  Format format() const { return json ? Format::json : csv ? Format::csv : Format::text; }
};

std::string csvField(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v.get<double>());
    return buf;
  }
  return v.dump();
}

// Flat key/value record in the chosen format.
void emitRecord(const ordered_json& record, Format format) {
  switch (format) {
    case Format::json:
      std::cout << record.dump(2) << '\n';
      return;
    case Format::csv: {
      std::string header, row;
      for (const auto& [key, value] : record.items()) {
        if (!header.empty()) {
          header += ',';
          row += ',';
        }
        header += key;
        row += csvField(value);
      }
      std::cout << header << '\n' << row << '\n';
      return;
    }
    case Format::text:
      for (const auto& [key, value] : record.items()) {
        std::cout << key << ": " << csvField(value) << '\n';
      }
      return;
  }
}

// Rows sharing the keys of the first row.
void emitTable(const ordered_json& rows, Format format) {
  if (format == Format::json) {
    std::cout << rows.dump(2) << '\n';
    return;
  }
  if (rows.empty()) return;
  const char sep = format == Format::csv ? ',' : '\t';
  bool first = true;
  for (const auto& [key, value] : rows.front().items()) {
    (void)value;
    std::cout << (first ? "" : std::string(1, sep)) << key;
    first = false;
  }
  std::cout << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& [key, value] : row.items()) {
      (void)key;
      std::cout << (first ? "" : std::string(1, sep)) << csvField(value);
      first = false;
    }
    std::cout << '\n';
  }
}

ordered_json exponentJson(const Exponent& e) {
  if (e.isInfinite()) return "inf";
  return e.value();
}

std::complex<double> parseComplex(const std::string& text) {
  const auto colon = text.find(':');
  std::size_t used = 0;
  const double re = std::stod(text.substr(0, colon), &used);
  if (used != (colon == std::string::npos ? text.size() : colon)) {
    throw std::invalid_argument("bad coefficient '" + text + "'");
  }
  if (colon == std::string::npos) return re;
  const auto imText = text.substr(colon + 1);
  const double im = std::stod(imText, &used);
  if (used != imText.size()) throw std::invalid_argument("bad coefficient '" + text + "'");
  return {re, im};
}

// Comma-separated coefficients, each "re" or "re:im".
LinearPolynomial parseCoefficients(const std::string& text) {
  LinearPolynomial f;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) f.coeffs.push_back(parseComplex(item));
  }
  if (f.coeffs.empty()) throw std::invalid_argument("no coefficients given");
  return f;
}

ordered_json complexList(const LinearPolynomial& f) {
  ordered_json out = ordered_json::array();
  for (const auto& c : f.coeffs) out.push_back({c.real(), c.imag()});
  return out;
}

ordered_json estimateJson(const NormEstimate& e) {
  return {{"value", e.value},
          {"method", std::string(toString(e.method))},
          {"error_bound", e.errorBound},
          {"samples", e.samplesOrPoints},
          {"converged", e.converged}};
}

FourierSeries seriesOf(const LinearPolynomial& f) {
  FourierSeries out(f.dim());
  for (std::size_t j = 0; j < f.dim(); ++j) out.add(MultiIndex::unit(j), f.coeffs[j]);
  return out;
}

int runConstants(const Global& g) {
  const double p = solveCriticalP();
  const auto k = khintchineConstants(p);
  ordered_json record = {
      {"critical_p", p},
      {"residual", gammaMomentConstant(p) - 2.0 / std::sqrt(std::acos(-1.0))},
      {"a_p", k.a},
      {"b_p", k.b},
      {"legacy_p_inf", legacyCriticalP(Exponent::infinity())},
      {"marzo_seip_bound", kMarzoSeipBound},
      {"limit_product_p4_qinf", unboundednessMargin(ExponentTriple::make(4.0, Exponent::infinity()))}};
  emitRecord(record, g.format());
  return 0;
}

int runTable(const Global& g, const std::vector<Exponent>& qs) {
  const auto rows = emitCriticalTable(qs);
  if (g.format() == Format::json) {
    ordered_json out = ordered_json::array();
    for (const auto& r : rows) {
      out.push_back({{"q", exponentJson(r.q)},
                     {"theorem3_p", r.criticalP},
                     {"legacy_p", r.legacyP},
                     {"marzo_seip_reference",
                      r.hasMarzoSeipReference ? ordered_json(kMarzoSeipBound) : ordered_json()}});
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << criticalTableCsv(rows);
  }
  return 0;
}

std::vector<Exponent> parseExponentList(const std::string& text) {
  std::vector<Exponent> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(Exponent::parse(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riesz projection norms and Khintchine-type bounds on the infinite polytorus"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_flag("--csv", g.csv, "Emit CSV");
  app.add_option("--config", g.configPath, "Settings file of key = value lines")->check(CLI::ExistingFile);

  auto* constants = app.add_subcommand("constants", "Critical exponent and reference constants");

  double qmin = 2.0, qmax = 20.0;
  int steps = 19;
  bool includeInf = false;
  auto* curve = app.add_subcommand("curve", "Critical curve p(q) on a grid of q values");
  curve->add_option("--qmin", qmin)->check(CLI::Range(2.0, 1e9));
  curve->add_option("--qmax", qmax)->check(CLI::Range(2.0, 1e9));
  curve->add_option("--steps", steps)->check(CLI::Range(1, 100000));
  curve->add_flag("--include-inf", includeInf, "Append the q = infinity row");

  std::string qList = "2,3,4,6,8,inf";
  auto* table = app.add_subcommand("table", "Critical exponent table");
  table->add_option("--q-list", qList, "Comma-separated q values, 'inf' allowed");

  std::string coeffs;
  std::string pText;
  std::string method = "auto";
  std::optional<std::size_t> samples, gridN;
  std::optional<std::uint64_t> seed;
  auto* norm = app.add_subcommand("norm", "L^p norm of a linear polynomial");
  norm->add_option("--coeffs", coeffs, "Coefficients c_1,...,c_d; complex as re:im")->required();
  norm->add_option("--p", pText)->required();
  norm->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "grid", "reduction1d", "multinomial", "montecarlo", "bessel", "cltLimit"}));
  norm->add_option("--samples", samples);
  norm->add_option("--seed", seed);
  norm->add_option("--grid-N", gridN);

  std::optional<std::size_t> restarts;
  auto* dual = app.add_subcommand("dual", "Dual norm of a linear functional on H^p");
  dual->add_option("--coeffs", coeffs)->required();
  dual->add_option("--p", pText)->required();
  dual->add_option("--restarts", restarts);
  dual->add_option("--seed", seed);

  std::size_t d = 2;
  std::string qText;
  std::optional<int> maxDeg;
  bool emitCoeffs = false;
  auto* lift = app.add_subcommand("lift", "Minimal L^q lift of z_1 + ... + z_d");
  lift->add_option("--d", d)->check(CLI::Range(1, 4));
  lift->add_option("--q", qText)->required();
  lift->add_option("--grid-N", gridN);
  lift->add_option("--max-deg", maxDeg);
  lift->add_flag("--emit-coeffs", emitCoeffs);

  std::optional<std::size_t> dMax;
  auto* certify = app.add_subcommand("certify", "Certify unboundedness of the Riesz projection");
  certify->add_option("--p", pText)->required();
  certify->add_option("--q", qText)->required();
  certify->add_option("--dmax", dMax);
  certify->add_option("--seed", seed);

  std::string seriesFile;
  auto* amplify = app.add_subcommand("amplify", "Norm ratio of f and of its tensor double");
  amplify->add_option("--series-file", seriesFile)->required()->check(CLI::ExistingFile);
  amplify->add_option("--p", pText)->required();
  amplify->add_option("--q", qText)->required();
  amplify->add_option("--grid-N", gridN);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!g.configPath.empty()) g.settings = Settings::load(g.configPath);
    const auto& s = g.settings;
    auto seedOr = [&](const char* key, std::uint64_t fallback) {
      return seed ? *seed : static_cast<std::uint64_t>(s.getInt(key, static_cast<std::int64_t>(fallback)));
    };
    LinearNormOptions normOptions;
    normOptions.grid.rtol = s.getDouble("grid.rtol", normOptions.grid.rtol);
    normOptions.walk.tolerance = s.getDouble("walk.tolerance", normOptions.walk.tolerance);
    normOptions.monteCarloSamples =
        static_cast<std::size_t>(s.getInt("norm.samples", static_cast<std::int64_t>(normOptions.monteCarloSamples)));
    if (samples) normOptions.monteCarloSamples = *samples;
    normOptions.seed = seedOr("norm.seed", normOptions.seed);

    if (*constants) return runConstants(g);

    if (*curve) {
      if (qmax < qmin) throw std::invalid_argument("curve: --qmax must be >= --qmin");
      std::vector<Exponent> qs;
      for (int i = 0; i <= steps; ++i) qs.emplace_back(qmin + (qmax - qmin) * i / steps);
      if (includeInf) qs.push_back(Exponent::infinity());
      return runTable(g, qs);
    }

    if (*table) return runTable(g, parseExponentList(qList));

    if (*norm) {
      const auto f = parseCoefficients(coeffs);
      const double p = Exponent::parse(pText).value();
      if (std::isinf(p)) {
        double sum = 0.0;
        for (const auto& c : f.coeffs) sum += std::abs(c);
        emitRecord({{"value", sum}, {"method", "closed_form"}, {"error_bound", 0.0}}, g.format());
        return 0;
      }
      NormEstimate e;
      if (method == "auto") {
        e = linearNorm(f, p, normOptions);
      } else if (method == "grid") {
        const auto n = gridN ? *gridN : static_cast<std::size_t>(s.getInt("norm.grid_N", 16));
        e = gridNorm(seriesOf(f), p, n, normOptions.grid);
      } else if (method == "reduction1d") {
        if (f.dim() != 2) throw std::invalid_argument("reduction1d needs exactly two coefficients");
        e = twoTermNorm(f.coeffs[0], f.coeffs[1], p);
      } else if (method == "multinomial") {
        e = multinomialNorm(f, p);
      } else if (method == "montecarlo") {
        e = monteCarloNorm(f, p, normOptions.monteCarloSamples, normOptions.seed);
      } else if (method == "bessel") {
        const auto m = f.magnitudes();
        for (double x : m) {
          if (x != m.front()) throw std::invalid_argument("bessel needs coefficients of equal modulus");
        }
        e = pearsonWalkMoment(f.dim(), p, normOptions.walk);
        e.value *= m.front();
        e.errorBound *= m.front();
      } else {
        e = {cltLimitNorm(p) * f.l2Norm(), NormMethod::cltLimit, 0.0, 0, true};
      }
      emitRecord(estimateJson(e), g.format());
      return 0;
    }

    if (*dual) {
      const auto f = parseCoefficients(coeffs);
      const auto p = Exponent::parse(pText);
      if (p.isInfinite()) {
        emitRecord({{"value", supNormDualLinear(f)}, {"method", "closed_form"}}, g.format());
        return 0;
      }
      DualOptions options;
      options.accurate = normOptions;
      options.accurate.grid.rtol = s.getDouble("dual.norm_rtol", 1e-6);
      const auto r = dualNormLinear(
          f, p.value(), restarts ? *restarts : static_cast<std::size_t>(s.getInt("dual.restarts", 8)),
          seedOr("dual.seed", 1), options);
      ordered_json record = {{"value", r.value},
                             {"maximizer", complexList(r.maximizer)},
                             {"lower_certificate", r.lowerCertificate},
                             {"upper_certificate", r.upperCertificate},
                             {"best_restart", r.bestRestart}};
      emitRecord(record, g.format());
      return 0;
    }

    if (*lift) {
      const auto q = Exponent::parse(qText);
      const auto n = gridN ? *gridN
                           : static_cast<std::size_t>(s.getInt("lift.grid_N",
                                                               static_cast<std::int64_t>(defaultLiftGrid(d))));
      const int deg = maxDeg ? *maxDeg : static_cast<int>(s.getInt("lift.max_deg", 6));
      const auto built = buildLift(d, q, n);
      const auto report = verifyProjection(built, deg);
      const auto identity = minimalNormIdentity(built);
      ordered_json record = {{"d", d},
                             {"q", exponentJson(q)},
                             {"p", built.p},
                             {"C", built.normalizer},
                             {"norm_lhs", identity.lhs},
                             {"norm_rhs", identity.rhs},
                             {"max_violation", report.maxViolation},
                             {"worst_index", report.worstIndex.toString()},
                             {"tolerance", report.tolerance},
                             {"passed", report.passed}};
      if (emitCoeffs) {
        ordered_json table = ordered_json::array();
        for (const auto& [alpha, c] : report.coefficients.terms()) {
          if (std::abs(c) < 1e-12) continue;
          table.push_back({{"alpha", alpha.toString()}, {"re", c.real()}, {"im", c.imag()}});
        }
        record["coefficient_table"] = table;
        if (g.format() != Format::json) {
          emitTable(table, g.format());
          return report.passed ? 0 : 1;
        }
      }
      emitRecord(record, g.format());
      return report.passed ? 0 : 1;
    }

    if (*certify) {
      const double p = Exponent::parse(pText).value();
      const auto q = Exponent::parse(qText);
      CertifyOptions options;
      options.walk = normOptions.walk;
      options.crossCheckSamples = static_cast<std::size_t>(
          s.getInt("certify.cross_check_samples", static_cast<std::int64_t>(options.crossCheckSamples)));
      const auto outcome = certifyUnbounded(
          p, q, dMax ? *dMax : static_cast<std::size_t>(s.getInt("certify.dmax", 12)),
          seedOr("certify.seed", 20170), options);
      if (g.format() == Format::json) {
        ordered_json scan = ordered_json::array();
        for (const auto& e : outcome.scan) {
          scan.push_back({{"d", e.d},
                          {"norm_p", estimateJson(e.normP)},
                          {"norm_r", estimateJson(e.normR)},
                          {"product", e.product},
                          {"product_lower_bound", e.productLowerBound}});
        }
        ordered_json record = {{"status", std::string(toString(outcome.status))},
                               {"message", outcome.message},
                               {"p", p},
                               {"q", exponentJson(q)},
                               {"r", q.conjugate().value()},
                               {"limit_product", outcome.limitProduct},
                               {"best_d", outcome.bestD},
                               {"best_margin", outcome.bestMargin},
                               {"scan", scan}};
        if (outcome.certificate) {
          const auto& c = *outcome.certificate;
          record["certificate"] = {{"d", c.d},
                                   {"product_lower_bound", c.productLowerBound},
                                   {"margin", c.margin},
                                   {"revalidated", c.revalidated},
                                   {"method_log", c.methodLog}};
        }
        std::cout << record.dump(2) << '\n';
      } else if (g.format() == Format::csv) {
        ordered_json rows = ordered_json::array();
        for (const auto& e : outcome.scan) {
          rows.push_back({{"d", e.d},
                          {"norm_p", e.normP.value},
                          {"norm_p_error", e.normP.errorBound},
                          {"norm_r", e.normR.value},
                          {"norm_r_error", e.normR.errorBound},
                          {"product", e.product},
                          {"product_lower_bound", e.productLowerBound}});
        }
        emitTable(rows, Format::csv);
      } else {
        std::cout << toString(outcome.status) << ": " << outcome.message << '\n';
        std::cout << "limit product: " << outcome.limitProduct << '\n';
        if (outcome.certificate) {
          for (const auto& line : outcome.certificate->methodLog) std::cout << "  " << line << '\n';
          std::cout << "  revalidated: " << (outcome.certificate->revalidated ? "yes" : "no") << '\n';
        }
      }
      return exitCode(outcome.status);
    }

    if (*amplify) {
      std::ifstream in(seriesFile);
      std::stringstream buffer;
      buffer << in.rdbuf();
      const auto f = seriesFromJson(buffer.str());
      const auto p = Exponent::parse(pText);
      const auto q = Exponent::parse(qText);
      const auto n = gridN ? *gridN : static_cast<std::size_t>(s.getInt("amplify.grid_N", 32));
      const auto r = amplificationDemo(f, p, q, n);
      emitRecord({{"ratio", r.ratio},
                  {"ratio_doubled", r.ratioDoubled},
                  {"ratio_squared", r.ratio * r.ratio},
                  {"identity_error", std::abs(r.ratioDoubled - r.ratio * r.ratio)}},
                 g.format());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
