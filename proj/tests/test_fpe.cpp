#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "ebc/black_cox.hpp"
#include "ebc/extended.hpp"
#include "ebc/oracle/fpe.hpp"
#include "ebc/reference_data.hpp"

using namespace ebc;
using oracle::fpe_solve;
using oracle::GridSpec;

namespace {

const ModelParams kB = NormalizedParams{0.14, 1.09, 0.25}.with_sigma(1.0);
const std::vector<double> kHorizons = linear_grid(0.1, 20.0, 200);

double worst_gap(const oracle::OracleCurve& c, const ModelParams& p, Boundary b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < c.t.size(); ++i) worst = std::max(worst, std::abs(c.pod[i] - pod(c.t[i], p, b)));
  return worst;
}

}  // namespace

TEST(GridSpec, StandardGridMeetsPlacementRule) {
  const GridSpec g = GridSpec::standard(kB, 20.0);
  EXPECT_NO_THROW(g.validate(kB));
  EXPECT_EQ(g.nx, 4000);
  EXPECT_DOUBLE_EQ(g.dt, 2e-3);
}

TEST(GridSpec, RejectsInvalidGrids) {
  GridSpec g = GridSpec::standard(kB, 20.0);
  GridSpec small = g;
  small.nx = 199;
  EXPECT_THROW(small.validate(kB), PreconditionError);
  GridSpec no_step = g;
  no_step.dt = 0.0;
  EXPECT_THROW(no_step.validate(kB), PreconditionError);
  GridSpec narrow = g;
  narrow.x_max = 10.0;
  EXPECT_THROW(narrow.validate(kB), PreconditionError);
  const std::vector<double> late{25.0};
  EXPECT_THROW(fpe_solve(kB, g, late), PreconditionError);
  const std::vector<double> unordered{2.0, 1.0};
  EXPECT_THROW(fpe_solve(kB, g, unordered), PreconditionError);
}

TEST(FpeSolve, ReflectingBarrierConservesMass) {
  const ModelParams p = kB.with_kc(0.0);
  const auto r = fpe_solve(p, GridSpec::standard(p, 20.0), kHorizons);
  for (double v : r.curve.pod) EXPECT_NEAR(v, 0.0, 1e-8);
}

TEST(FpeSolve, ProbabilityIsConservedEachStep) {
  const auto r = fpe_solve(kB, GridSpec::standard(kB, 20.0), kHorizons);
  EXPECT_LT(r.max_balance_error, 1e-8);
}

TEST(FpeSolve, MatchesRadiationClosedForm) {
  const auto r = fpe_solve(kB, GridSpec::standard(kB, 20.0), kHorizons);
  ASSERT_EQ(r.curve.t.size(), kHorizons.size());
  EXPECT_DOUBLE_EQ(r.curve.t.back(), 20.0);
  EXPECT_LT(worst_gap(r.curve, kB, Boundary::radiation), 1e-4);
}

TEST(FpeSolve, MatchesClosedFormAtResonantDrift) {
  const ModelParams p = kB.with_a(-0.25).with_kc(0.25);
  const auto r = fpe_solve(p, GridSpec::standard(p, 20.0), kHorizons);
  EXPECT_LT(worst_gap(r.curve, p, Boundary::radiation), 1e-4);
}

TEST(FpeSolve, StiffBarrierMatchesAbsorbingClosedForm) {
  const ModelParams p = kB.with_kc(1e3);
  const auto r = fpe_solve(p, GridSpec::standard(p, 20.0), kHorizons);
  EXPECT_LT(worst_gap(r.curve, p, Boundary::absorbing), 5e-4);
}

TEST(FpeSolve, DirichletBarrierMatchesBlackCox) {
  for (reference::Preset preset : {reference::Preset::b_bc, reference::Preset::bb_bc}) {
    const ModelParams p = reference::preset_params(preset).with_sigma(1.0);
    const auto r = fpe_solve(p, GridSpec::standard(p, 20.0), kHorizons, Boundary::absorbing);
    EXPECT_LT(worst_gap(r.curve, p, Boundary::absorbing), 1e-4);
  }
}

TEST(FpeSolve, FinalDensityTracksGreensFunction) {
  const auto r = fpe_solve(kB, GridSpec::standard(kB, 5.0), std::vector<double>{5.0});
  double worst = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i)
    worst = std::max(worst, std::abs(r.density[i] - density_radiation(r.x[i], 5.0, kB)));
  EXPECT_LT(worst, 1e-4);
  EXPECT_EQ(r.density.back(), 0.0);
}

TEST(FpeSolve, SecondOrderInSpace) {
  // x0 sits on a node at every resolution.
  std::vector<double> err;
  const std::vector<double> ts{1.0, 2.0, 5.0, 10.0, 20.0};
  for (int intervals : {900, 1800, 3600}) {
    const GridSpec g{36.0 * kB.x0, intervals + 1, 2e-3, 20.0};
    err.push_back(worst_gap(fpe_solve(kB, g, ts).curve, kB, Boundary::radiation));
  }
  EXPECT_GE(std::log2(err[0] / err[1]), 1.9);
  EXPECT_GE(std::log2(err[1] / err[2]), 1.9);
}

TEST(FpeSolve, ErrorEstimateBoundsActualError) {
  const std::vector<double> ts{0.5, 1.0, 5.0, 20.0};
  const auto r = fpe_solve(kB, GridSpec::standard(kB, 20.0, 1000), ts, Boundary::radiation, true);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    EXPECT_GT(r.curve.error[i], 0.0);
    EXPECT_LT(std::abs(r.curve.pod[i] - pod_radiation(ts[i], kB)), 3.0 * r.curve.error[i] + 1e-7) << ts[i];
  }
}

TEST(FpeSolve, CentralAdvectionBlowUpIsReported) {
  // Cell Peclet number far above 2: central fluxes oscillate.
  const ModelParams p{60.0, 1.0, 1.0, 0.5};
  EXPECT_THROW(fpe_solve(p, GridSpec::standard(p, 1.0, 200), std::vector<double>{1.0}), InstabilityError);
}
