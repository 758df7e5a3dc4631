#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "ebc/specfun.hpp"
#include "support.hpp"

using namespace ebc;

namespace {

// exp(z^2) erfc(z) from 50-digit arithmetic.
const std::vector<std::pair<double, double>> kErfcxReference = {
    {0.1, 0.89645697996912664193},    {0.5, 0.61569034419292587487},    {1.0, 0.42758357615580700441},
    {2.0, 0.25539567631050574387},    {5.0, 0.11070463773306862637},    {7.9, 0.070857477367397134019},
    {8.1, 0.069133920177343148707},   {10.0, 0.056140992743822585858},  {26.0, 0.021683584850562906616},
    {30.0, 0.018795888861416751497},  {100.0, 0.0056416137829894329036}, {1000.0, 0.0005641893014533876542},
    {10000.0, 0.000056418958072680841152},
};

}  // namespace

TEST(StdNormalCdf, KnownValues) {
  EXPECT_EQ(std_normal_cdf(0.0), 0.5);
  EXPECT_NEAR(std_normal_cdf(-1.23), 0.10935, 1e-5);
  EXPECT_NEAR(std_normal_cdf(-1.23), 0.10934855242569193803, 1e-16);
  EXPECT_EQ(std_normal_cdf(40.0), 1.0);
  EXPECT_EQ(std_normal_cdf(-40.0), 0.0);
  EXPECT_FALSE(std::isnan(std_normal_cdf(1e300)));
}

TEST(StdNormalCdf, SymmetryAndMonotonicity) {
  double prev = 0.0;
  for (double z = -8.0; z <= 8.0; z += 1.0 / 64.0) {
    EXPECT_NEAR(std_normal_cdf(z) + std_normal_cdf(-z), 1.0, 1e-15) << z;
    const double v = std_normal_cdf(z);
    EXPECT_GE(v, prev);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    prev = v;
  }
}

TEST(ErfcScaled, MatchesHighPrecisionReference) {
  EXPECT_EQ(erfc_scaled(0.0), 1.0);
  for (auto [z, want] : kErfcxReference) {
    EXPECT_LT(test::relative_error(erfc_scaled(z), want), 1e-12) << "z=" << z;
  }
}

TEST(ErfcScaled, AgreesWithDirectProductWhereRepresentable) {
  for (double z = 0.0; z < 26.0; z += 0.37) {
    EXPECT_LT(test::relative_error(erfc_scaled(z), std::exp(z * z) * std::erfc(z)), 1e-12) << z;
  }
}

TEST(ErfcScaled, ReflectionIdentity) {
  for (double z : {0.1, 0.5, 1.0}) {
    EXPECT_NEAR(erfc_scaled(-z) - (2.0 * std::exp(z * z) - erfc_scaled(z)), 0.0, 1e-14);
  }
}

TEST(ErfcScaled, LargeArgumentAsymptote) {
  const double want = 1.0 / (100.0 * std::sqrt(std::numbers::pi));
  EXPECT_LT(test::relative_error(erfc_scaled(100.0), want), 1e-4);
  EXPECT_TRUE(std::isfinite(erfc_scaled(1e4)));
  EXPECT_GT(erfc_scaled(1e8), 0.0);
}

TEST(ErfcScaled, StrictlyDecreasingOnHalfLine) {
  double prev = erfc_scaled(0.0);
  for (double z = 0.01; z < 60.0; z *= 1.01) {
    const double v = erfc_scaled(z);
    EXPECT_LT(v, prev) << z;
    EXPECT_GT(v, 0.0);
    prev = v;
  }
  // Across the switch to the continued fraction.
  EXPECT_GT(erfc_scaled(std::nextafter(8.0, 0.0)), erfc_scaled(8.0));
}

TEST(ExpTimesNormalCdf, TrivialCases) {
  EXPECT_DOUBLE_EQ(exp_times_normal_cdf(0.0, 1.5), std_normal_cdf(-1.5));
  for (double beta : {-30.0, -1.0, 0.0, 2.5, 300.0}) {
    EXPECT_LT(test::relative_error(exp_times_normal_cdf(beta, 0.0), 0.5 * std::exp(beta)), 1e-15);
  }
}

TEST(ExpTimesNormalCdf, OverflowRegimeMatchesArbitraryPrecision) {
  // exp(800) alone overflows a double.
  EXPECT_LT(test::relative_error(exp_times_normal_cdf(800.0, 40.0), 0.0099673351883013099835), 1e-9);
  EXPECT_LT(test::relative_error(exp_times_normal_cdf(300.0, 30.0), 9.5309306459905194849e-68), 1e-10);
  EXPECT_LT(test::relative_error(exp_times_normal_cdf(50.0, 12.0), 9.2105366279251815957e-12), 1e-10);
  EXPECT_LT(test::relative_error(exp_times_normal_cdf(5.0, 3.0), 0.20034263134057220322), 1e-12);
  EXPECT_LT(test::relative_error(exp_times_normal_cdf(-2.0, 0.2), 0.056941006392113713848), 1e-13);
}

TEST(ExpTimesNormalCdf, UnscalesToNormalTail) {
  test::ParamGenerator gen(7);
  for (int i = 0; i < 2000; ++i) {
    const double beta = gen.uniform(-300.0, 300.0);
    const double u = gen.uniform(-5.0, 37.0);
    const double tail = std_normal_cdf(-u);
    // Skip where the product itself leaves the normal double range.
    if (tail == 0.0 || beta + std::log(tail) < -700.0) continue;
    EXPECT_LT(test::relative_error(exp_times_normal_cdf(beta, u) * std::exp(-beta), tail), 1e-10)
        << beta << " " << u;
  }
}
