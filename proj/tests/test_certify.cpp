#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "polytorus/certify.hpp"
#include "polytorus/grid_function.hpp"
#include "polytorus/constants.hpp"
#include "test_support.hpp"

using namespace polytorus;
using polytorus::testing::randomSeries;

TEST(Certify, CertifiesAboveThreshold) {
  const auto out = certifyUnbounded(3.5, Exponent::infinity());
  ASSERT_EQ(out.status, CertifyStatus::certified);
  ASSERT_TRUE(out.certificate.has_value());
  const auto& c = *out.certificate;
  EXPECT_EQ(c.d, 3u);
  EXPECT_GT(c.margin, 0.0);
  EXPECT_GT(c.productLowerBound, 1.0);
  EXPECT_NEAR(c.margin, c.productLowerBound - 1.0, 1e-15);
  EXPECT_TRUE(c.revalidated);
  EXPECT_EQ(c.methodLog.size(), 4u);
  EXPECT_NEAR(out.limitProduct, 1.0152, 1e-4);
  EXPECT_EQ(exitCode(out.status), 0);
}

TEST(Certify, ProductsStayBelowTheLimit) {
  for (auto [p, q] : {std::pair{3.5, Exponent::infinity()}, {4.0, Exponent(8.0)}, {3.0, Exponent(3.0)}}) {
    const auto out = certifyUnbounded(p, q);
    for (const auto& e : out.scan) {
      EXPECT_LE(e.productLowerBound, e.product);
      EXPECT_LE(e.productLowerBound, out.limitProduct + e.normP.errorBound + e.normR.errorBound)
          << "p=" << p << " d=" << e.d;
    }
    // Approach to the limit at d = 12 is reported rather than asserted tightly.
    const double gap = out.limitProduct - out.scan.back().product;
    RecordProperty("gap_at_12_p" + std::to_string(p), std::to_string(gap));
    EXPECT_LT(std::abs(gap), 0.01);
  }
}

TEST(Certify, QuadraticPairIsUnsatisfied) {
  const auto out = certifyUnbounded(2.0, Exponent(2.0));
  EXPECT_EQ(out.status, CertifyStatus::conditionUnsatisfied);
  EXPECT_FALSE(out.certificate.has_value());
  EXPECT_NEAR(out.limitProduct, 1.0, 1e-15);
  EXPECT_LE(out.bestMargin, 1e-12);
  EXPECT_EQ(exitCode(out.status), 2);
}

TEST(Certify, NoCertificateBelowCriticalExponent) {
  for (double p : {3.3, solveCriticalP()}) {
    const auto out = certifyUnbounded(p, Exponent::infinity());
    EXPECT_NE(out.status, CertifyStatus::certified) << p;
    EXPECT_LE(out.bestMargin, 1e-12) << p;
    for (const auto& e : out.scan) EXPECT_LE(e.productLowerBound, 1.0 + 1e-12) << p << " d=" << e.d;
  }
  EXPECT_EQ(certifyUnbounded(3.3, Exponent::infinity()).status, CertifyStatus::conditionUnsatisfied);
}

TEST(Certify, InconclusiveWhenScanIsTooShort) {
  const auto out = certifyUnbounded(3.4, Exponent::infinity(), 2);
  EXPECT_EQ(out.status, CertifyStatus::inconclusive);
  EXPECT_EQ(exitCode(out.status), 3);
  EXPECT_EQ(out.scan.size(), 2u);
}

TEST(Certify, Preconditions) {
  EXPECT_THROW(certifyUnbounded(5.0, Exponent(4.0)), std::domain_error);
  EXPECT_THROW(certifyUnbounded(1.5, Exponent(4.0)), std::domain_error);
  EXPECT_THROW(certifyUnbounded(3.0, Exponent(4.0), 13), std::domain_error);
  EXPECT_THROW(certifyUnbounded(3.0, Exponent(4.0), 0), std::domain_error);
}

TEST(Amplification, Examples) {
  const auto f = FourierSeries::variable(0) + FourierSeries::variable(0, true);
  const auto r = amplificationDemo(f, Exponent(2.0), Exponent(2.0));
  EXPECT_NEAR(r.ratio, 1.0 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(r.ratioDoubled, 0.5, 1e-14);

  const auto g = FourierSeries::variable(0) + 0.5 * FourierSeries::variable(1);
  const auto a = amplificationDemo(g, Exponent(4.0), Exponent(1.5));
  const auto grid = sampleGrid(g, 32);
  EXPECT_NEAR(a.ratio, grid.lpNorm(4.0) / grid.lpNorm(1.5), 1e-14);
  EXPECT_THROW(amplificationDemo(FourierSeries::variable(2), Exponent(2.0), Exponent(2.0)), std::domain_error);
}

TEST(Amplification, SquaringIdentity) {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<std::size_t> dims(1, 2);
  const Exponent exps[] = {Exponent(1.0), Exponent(1.5), Exponent(3.0), Exponent(4.0), Exponent::infinity()};
  for (int t = 0; t < 20; ++t) {
    const auto f = randomSeries(rng, dims(rng), 2, 5);
    const auto& p = exps[t % 5];
    const auto& q = exps[(t / 5 + 2) % 5];
    const auto r = amplificationDemo(f, p, q, 16);
    EXPECT_NEAR(r.ratioDoubled, r.ratio * r.ratio, 1e-6 * std::max(1.0, r.ratio * r.ratio)) << t;
  }
}

TEST(CriticalTable, Rows) {
  const auto rows = emitCriticalTable({Exponent(2.0), Exponent(4.0), Exponent::infinity()});
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].criticalP, 2.0);
  EXPECT_EQ(rows[0].legacyP, 2.0);
  EXPECT_FALSE(rows[0].hasMarzoSeipReference);
  EXPECT_LT(rows[1].criticalP, rows[1].legacyP);
  EXPECT_NEAR(rows[2].criticalP, 3.31138, 1e-5);
  EXPECT_EQ(rows[2].legacyP, 4.0);
  EXPECT_TRUE(rows[2].hasMarzoSeipReference);
  EXPECT_EQ(criticalTableCsv(rows),
            "q,theorem3_p,legacy_p,marzo_seip_reference\n2,2,2,\n4,2.791981577,3,\ninf,3.311375843,4,3.67632\n");
  EXPECT_THROW(emitCriticalTable({Exponent(1.5)}), std::domain_error);
}

TEST(CriticalTable, ImprovesOnLegacyCondition) {
  std::vector<Exponent> qs;
  for (double q = 2.0; q < 100.0; q *= 1.3) qs.emplace_back(q);
  qs.push_back(Exponent::infinity());
  for (const auto& row : emitCriticalTable(qs)) EXPECT_LE(row.criticalP, row.legacyP + 1e-12) << row.q.toString();
}
