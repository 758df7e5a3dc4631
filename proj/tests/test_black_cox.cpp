#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ebc/black_cox.hpp"
#include "ebc/specfun.hpp"
#include "support.hpp"

using namespace ebc;

namespace {

const ModelParams kBlackCoxB = NormalizedParams{0.23, 2.07}.with_sigma(1.0);

}  // namespace

TEST(DensityAbsorbing, VanishesOnTheBarrier) {
  for (double t : {0.01, 1.0, 30.0}) EXPECT_EQ(density_absorbing(0.0, t, kBlackCoxB), 0.0);
}

TEST(DensityAbsorbing, IntegratesToSurvival) {
  for (double t : {0.3, 1.0, 5.0, 20.0}) {
    const double mass = test::integrate_to_infinity(
        [&](double x) { return density_absorbing(x, t, kBlackCoxB); }, 0.0, kBlackCoxB.x0 + kBlackCoxB.a * t);
    EXPECT_NEAR(mass, 1.0 - pod_absorbing(t, kBlackCoxB), 1e-8) << t;
  }
}

TEST(DensityAbsorbing, DriftlessValueAtStart) {
  const ModelParams p{0.0, 0.7, 1.3};
  const double d = p.diffusion();
  for (double t : {0.2, 2.0}) {
    const double want = (1.0 - std::exp(-p.x0 * p.x0 / (d * t))) / (2.0 * std::sqrt(std::numbers::pi * d * t));
    EXPECT_NEAR(density_absorbing(p.x0, t, p), want, 1e-15);
  }
}

TEST(DensityAbsorbing, RejectsNonPositiveTime) {
  EXPECT_THROW(density_absorbing(1.0, 0.0, kBlackCoxB), DomainError);
  EXPECT_THROW(density_absorbing(1.0, -1.0, kBlackCoxB), DomainError);
  EXPECT_THROW(density_absorbing(-0.1, 1.0, kBlackCoxB), DomainError);
}

TEST(PodAbsorbing, StartOnBarrierDefaultsSurely) {
  const ModelParams p = kBlackCoxB.with_x0(0.0);
  for (double t : {1e-9, 0.5, 100.0}) EXPECT_EQ(pod_absorbing(t, p), 1.0);
}

TEST(PodAbsorbing, DriftlessReflectionPrinciple) {
  const ModelParams p{0.0, 1.0, 1.5};
  for (double t : {0.1, 1.0, 10.0}) EXPECT_NEAR(pod_absorbing(t, p), 2.0 * std_normal_cdf(-1.5 / std::sqrt(t)), 1e-15);
}

TEST(PodAbsorbing, TableOneBlackCoxFirstYear) { EXPECT_NEAR(pod_absorbing(1.0, kBlackCoxB), 0.0237, 0.001); }

TEST(PodAbsorbing, MatchesHighPrecisionReference) {
  struct Case {
    double a, sigma, x0, t, want;
  };
  for (const Case& c : {Case{0.23, 1, 2.07, 1, 0.023413799678493777534}, Case{-0.4, 0.3, 0.2, 2, 0.97584943227519834485},
                        Case{0.1, 0.5, 1, 30, 0.41687658327858050999}}) {
    EXPECT_LT(test::relative_error(pod_absorbing(c.t, {c.a, c.sigma, c.x0}), c.want), 1e-13);
  }
}

TEST(PodAbsorbing, DiscontinuityAtTheBarrier) {
  EXPECT_EQ(pod_absorbing(1e-6, kBlackCoxB.with_x0(0.0)), 1.0);
  for (double x0 : {0.01, 0.1, 1.0}) EXPECT_LT(pod_absorbing(1e-7, kBlackCoxB.with_x0(x0)), 1e-12);
}

TEST(FirstHittingDensity, MatchesBarrierGradient) {
  // Second-order one-sided difference of D dp/dx at x = 0 (p(0) = 0).
  for (double t : {0.5, 2.0, 10.0}) {
    const double h = 1e-6;
    const double grad =
        (4.0 * density_absorbing(h, t, kBlackCoxB) - density_absorbing(2.0 * h, t, kBlackCoxB)) / (2.0 * h);
    EXPECT_LT(test::relative_error(kBlackCoxB.diffusion() * grad, first_hitting_density(t, kBlackCoxB)), 1e-8);
  }
}

TEST(FirstHittingDensity, ZeroFromTheBarrierAndIntegratesToUltimatePod) {
  EXPECT_EQ(first_hitting_density(1.0, kBlackCoxB.with_x0(0.0)), 0.0);
  const double total = test::integrate_to_infinity([&](double t) { return first_hitting_density(t, kBlackCoxB); },
                                                   0.0, 10.0);
  EXPECT_NEAR(total, std::exp(-2.0 * 0.23 * 2.07), 1e-9);
  const ModelParams toward{-0.1, 1.0, 2.07};
  const double sure = test::integrate_to_infinity([&](double t) { return first_hitting_density(t, toward); }, 0.0,
                                                  30.0);
  EXPECT_NEAR(sure, 1.0, 1e-9);
}

TEST(HazardAbsorbing, ConsistentWithFiniteDifferenceOfPod) {
  const double t = 5.0;
  const double dp = test::central_difference([&](double s) { return pod_absorbing(s, kBlackCoxB); }, t, 1e-4);
  const double h = hazard_absorbing(t, kBlackCoxB);
  EXPECT_LT(test::relative_error(h * (1.0 - pod_absorbing(t, kBlackCoxB)), dp), 1e-6);
  EXPECT_LT(test::relative_error(h, first_hitting_density(t, kBlackCoxB) / survival_absorbing(t, kBlackCoxB)),
            1e-10);
}

TEST(HazardAbsorbing, VanishesAtShortHorizonsAndFarFromTheBarrier) {
  EXPECT_LT(hazard_absorbing(1e-4, kBlackCoxB), 1e-300);
  const double far = hazard_absorbing(1.0, NormalizedParams{0.23, 20.0}.with_sigma(1.0));
  EXPECT_FALSE(std::isnan(far));
  EXPECT_LT(far, 1e-80);
  EXPECT_EQ(hazard_absorbing(1.0, NormalizedParams{0.23, 60.0}.with_sigma(1.0)), 0.0);
}

TEST(HazardAbsorbing, SingularWhenSurvivalIsExhausted) {
  EXPECT_THROW(hazard_absorbing(1.0, kBlackCoxB.with_x0(0.0)), SingularStateError);
  EXPECT_THROW(hazard_absorbing(400.0, ModelParams{-2.0, 1.0, 0.1}), SingularStateError);
}

TEST(HazardAbsorbing, IntegratedHazardReproducesSurvival) {
  for (double t : {0.5, 3.0, 20.0}) {
    const double cumulative = test::integrate([&](double s) { return hazard_absorbing(s, kBlackCoxB); }, 0.0, t);
    EXPECT_NEAR(std::exp(-cumulative), 1.0 - pod_absorbing(t, kBlackCoxB), 1e-6) << t;
  }
}

TEST(BlackCoxProperties, BoundedMonotoneAndScaleFree) {
  test::ParamGenerator gen(2024);
  for (int i = 0; i < 1000; ++i) {
    const ModelParams p = gen.radiation();
    const double lambda = gen.uniform(0.2, 5.0);
    const ModelParams scaled{lambda * p.a, lambda * p.sigma, lambda * p.x0};
    double prev = 0.0;
    for (double t : geometric_grid(0.01, 50.0, 24)) {
      const double v = pod_absorbing(t, p);
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
      ASSERT_GE(v, prev - 1e-15);
      ASSERT_NEAR(pod_absorbing(t, scaled), v, 1e-13);
      prev = v;
    }
  }
}
