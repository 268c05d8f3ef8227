#include "shadowaudit/analysis.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracle/exact_rounding.hpp"
#include "shadowaudit/errors.hpp"

namespace shadowaudit {
namespace {

// Published labels are 1-based sample indices (t = n + 1).
constexpr std::size_t kIterate51 = 50;
constexpr std::size_t kIterate43 = 42;

class PaperOrbits : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    params_ = new MapParameters("3.8", "0.4", 100);
    g_ = new FixedOrbit(iterate_fixed(EvaluationForm::G, *params_));
    h_ = new FixedOrbit(iterate_fixed(EvaluationForm::H, *params_));
    p_ = new ReferenceOrbit(iterate_reference(*params_, 1000));
  }
  static void TearDownTestSuite() {
    delete p_;
    delete h_;
    delete g_;
    delete params_;
  }
  static MapParameters* params_;
  static FixedOrbit* g_;
  static FixedOrbit* h_;
  static ReferenceOrbit* p_;
};

MapParameters* PaperOrbits::params_ = nullptr;
FixedOrbit* PaperOrbits::g_ = nullptr;
FixedOrbit* PaperOrbits::h_ = nullptr;
ReferenceOrbit* PaperOrbits::p_ = nullptr;

TEST_F(PaperOrbits, LowerBoundOfOrbitWithItselfIsZero) {
  const auto s = lower_bound_series(*g_, *g_);
  EXPECT_EQ(s.kind, SeriesKind::LowerBound);
  ASSERT_EQ(s.values.size(), 101u);
  for (double v : s.values) EXPECT_EQ(v, 0.0);
}

TEST_F(PaperOrbits, LowerBoundStartsAtZeroAndReachesPublishedValue) {
  const auto s = lower_bound_series(*g_, *h_);
  EXPECT_EQ(s.values[0], 0.0);
  EXPECT_EQ(s.sources, (std::vector<std::string>{"G", "H"}));
  EXPECT_NEAR(std::log10(s.values[kIterate51]), -7.638, 1e-3);
  EXPECT_NEAR(log10_series(s)[kIterate51], -7.638, 1e-3);
}

TEST_F(PaperOrbits, LowerBoundIsSymmetric) {
  EXPECT_EQ(lower_bound_series(*g_, *h_).values, lower_bound_series(*h_, *g_).values);
}

TEST_F(PaperOrbits, DeviationAtZeroIsRepresentationErrorOfPointFour) {
  const auto s = deviation_series(*g_, *p_);
  const double expected =
      oracle::round_to_binary64(oracle::exact(nearest_binary64("0.4")) - mpq_class(2, 5));
  EXPECT_EQ(s.values[0], expected);
  EXPECT_NEAR(s.values[0], 2.2204e-17, 0.0001e-17);
}

TEST_F(PaperOrbits, DeviationsReachPublishedValues) {
  const auto dg = deviation_series(*g_, *p_);
  const auto dh = deviation_series(*h_, *p_);
  EXPECT_NEAR(std::log10(dg.values[kIterate43]), -7.921, 1e-3);
  EXPECT_NEAR(std::log10(dh.values[kIterate43]), -7.954, 1e-3);
  EXPECT_EQ(dg.sources, (std::vector<std::string>{"G", "P"}));
}

TEST_F(PaperOrbits, FirstLowerBoundCrossingIsIterateFifty) {
  const auto c = first_crossing(lower_bound_series(*g_, *h_), 1e-8);
  ASSERT_TRUE(c.iterate.has_value());
  EXPECT_EQ(*c.iterate, 50u);  // published label 51
  EXPECT_GE(c.delta_at_crossing, 1e-8);
}

TEST_F(PaperOrbits, BothDeviationsExceedShadowingDistance) {
  for (const auto* orbit : {g_, h_}) {
    const auto c = first_crossing(deviation_series(*orbit, *p_), 1e-8);
    ASSERT_TRUE(c.iterate.has_value());
    EXPECT_LE(*c.iterate, 100u);
  }
}

TEST_F(PaperOrbits, CertificateHoldsEverywhere) {
  const auto cert = theorem1_certificate(*g_, *h_, *p_);
  ASSERT_EQ(cert.size(), 101u);
  for (std::size_t n = 0; n < cert.size(); ++n) EXPECT_TRUE(cert[n]) << n;
}

TEST_F(PaperOrbits, MismatchedParametersAreUsageErrors) {
  const MapParameters other("3.7", "0.4", 100);
  const auto g2 = iterate_fixed(EvaluationForm::G, other);
  EXPECT_THROW(lower_bound_series(*g_, g2), UsageError);
  EXPECT_THROW(deviation_series(g2, *p_), UsageError);
  EXPECT_THROW(theorem1_certificate(*g_, g2, *p_), UsageError);
  const std::vector<double> shorter(5, 0.0);
  EXPECT_THROW(half_abs_difference(g_->values(), shorter), UsageError);
}

TEST(FirstCrossingTest, Examples) {
  EXPECT_FALSE(first_crossing(std::vector<double>(10, 0.0), 1e-8).iterate.has_value());
  const auto c = first_crossing(std::vector<double>{0.0, 1e-9, 1e-7}, 1e-8);
  ASSERT_TRUE(c.iterate.has_value());
  EXPECT_EQ(*c.iterate, 2u);
  EXPECT_EQ(c.delta_at_crossing, 1e-7);
  EXPECT_EQ(c.threshold, 1e-8);
}

TEST(FirstCrossingTest, EqualityCounts) {
  const auto c = first_crossing(std::vector<double>{0.0, 1e-8}, 1e-8);
  ASSERT_TRUE(c.iterate.has_value());
  EXPECT_EQ(*c.iterate, 1u);
}

TEST(FirstCrossingTest, ThresholdMustBePositive) {
  EXPECT_THROW(first_crossing(std::vector<double>{1.0}, 0.0), ConfigError);
  EXPECT_THROW(first_crossing(std::vector<double>{1.0}, -1.0), ConfigError);
  EXPECT_THROW(first_crossing(std::vector<double>{1.0}, std::nan("")), ConfigError);
}

TEST(FirstCrossingTest, ReturnsMinimalIndex) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> exponent(-12.0, -4.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> values(60);
    for (auto& v : values) v = std::pow(10.0, exponent(rng));
    const double threshold = std::pow(10.0, exponent(rng));
    const auto c = first_crossing(values, threshold);
    const std::size_t stop = c.iterate.value_or(values.size());
    for (std::size_t m = 0; m < stop; ++m) ASSERT_LT(values[m], threshold);
    if (c.iterate) ASSERT_GE(values[*c.iterate], threshold);
  }
}

TEST(Log10SeriesTest, Examples) {
  const auto out = log10_series(std::vector<double>{1e-8, 0.0, 1.0, 100.0});
  EXPECT_EQ(out[0], -8.0);
  EXPECT_EQ(out[1], kLog10ZeroSentinel);
  EXPECT_TRUE(std::isinf(out[1]) && out[1] < 0);
  EXPECT_EQ(out[2], 0.0);
  EXPECT_EQ(out[3], 2.0);
}

TEST(Log10SeriesTest, AgreesWithLibmToAnUlp) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(1e-20, 1.0);
  std::vector<double> values(1000);
  for (auto& v : values) v = u(rng);
  const auto out = log10_series(values);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double libm = std::log10(values[i]);
    EXPECT_LE(std::fabs(out[i] - libm), std::fabs(libm) * 2.3e-16) << values[i];
  }
}

TEST(Theorem1CertificateTest, IdenticalOperandsAreVacuouslyTrue) {
  const MapParameters params("3.8", "0.4", 30);
  const auto g = iterate_fixed(EvaluationForm::G, params);
  std::vector<MpReal> ref;
  for (double v : g.values()) ref.push_back(MpReal::from_double(v, 200));
  for (bool ok : theorem1_certificate(g.values(), g.values(), ref)) EXPECT_TRUE(ok);
}

TEST(Theorem1CertificateTest, HoldsForRandomPerturbedTriples) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> log_eps(-17.0, -1.0);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t len = 20;
    std::vector<double> a(len), b(len);
    std::vector<MpReal> ref;
    for (std::size_t n = 0; n < len; ++n) {
      const double truth = unit(rng);
      auto perturb = [&](double v) {
        const double eps = std::pow(10.0, log_eps(rng)) * (sign(rng) ? 1 : -1);
        return std::clamp(v + eps, 0.0, 1.0);
      };
      a[n] = perturb(truth);
      b[n] = perturb(truth);
      // Reference carries bits beyond binary64.
      MpReal r = MpReal::from_double(truth, 400);
      mpfr_add_d(r.get(), r.get(), std::ldexp(unit(rng), -60), MPFR_RNDN);
      ref.push_back(std::move(r));
    }
    const auto cert = theorem1_certificate(a, b, ref);
    for (std::size_t n = 0; n < len; ++n) ASSERT_TRUE(cert[n]) << trial << ":" << n;
  }
}

TEST(ErrorSeriesTest, ValuesAreNonNegativeForRandomParameters) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> r_frac(0, 5000);
  std::uniform_int_distribution<int> x_frac(1, 9999);
  for (int trial = 0; trial < 20; ++trial) {
    const MapParameters params("3." + std::to_string(5000 + r_frac(rng) - 1),
                               "0." + std::to_string(x_frac(rng)), 100);
    const auto g = iterate_fixed(EvaluationForm::G, params);
    const auto h = iterate_fixed(EvaluationForm::H, params);
    const auto p = iterate_reference(params, 100);
    const auto lb = lower_bound_series(g, h);
    EXPECT_EQ(lb.values, lower_bound_series(h, g).values);
    for (const auto& s : {lb, deviation_series(g, p), deviation_series(h, p)}) {
      ASSERT_EQ(s.values.size(), 101u);
      for (double v : s.values) EXPECT_GE(v, 0.0);
    }
  }
}

}  // namespace
}  // namespace shadowaudit
