#pragma once

// Extended model with a Gaussian-distributed initial distance to the barrier.
//
// For short horizons a N(x0, delta^2) start is, up to normalisation, the
// radiation Green's function started at x0 - a tau and run for
// tau = delta^2 / 2D. Conditioning on survival over that virtual period
// gives closed forms with P(0) = 0 and a strictly positive hazard at t = 0.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ebc/black_cox.hpp"
#include "ebc/extended.hpp"
#include "ebc/params.hpp"
#include "ebc/specfun.hpp"

namespace ebc {

/// Model parameters with delta > 0 plus the short-horizon validity rule.
class UncertainParams {
 public:
  explicit UncertainParams(const ModelParams& base, double regime_factor = 3.0)
      : base_(base), regime_factor_(regime_factor) {
    if (!(base.delta > 0.0)) throw PreconditionError("uncertainty model requires delta > 0");
    if (!(regime_factor > 0.0)) throw PreconditionError("regime factor must be positive");
  }

  const ModelParams& base() const { return base_; }
  double regime_factor() const { return regime_factor_; }

  /// Equivalent diffusion time of the initial spread, delta^2 / 2D.
  double tau() const { return base_.delta * base_.delta / (2.0 * base_.diffusion()); }

  /// Point-start parameters whose Green's function at time tau mimics the
  /// Gaussian start.
  ModelParams shifted() const {
    const double y = base_.x0 - base_.a * tau();
    if (y < 0.0) throw PreconditionError("shifted start x0 - a*tau is below the barrier");
    return base_.with_x0(y).with_delta(0.0);
  }

  /// True while sqrt(D (t + tau)) < x0 / regime_factor.
  bool short_term_valid(double t) const {
    return std::sqrt(base_.diffusion() * (t + tau())) < base_.x0 / regime_factor_;
  }

 private:
  ModelParams base_;
  double regime_factor_;
};

/// Closed form of the t = 0 hazard to use.
enum class ZeroHazardForm {
  exact,           // full bracketed expression
  gaussian_approx, // sqrt(2/pi) kc/delta exp(-x0^2 / 2 delta^2)
};

namespace detail {
inline void require_nonnegative_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("time must be non-negative and finite");
}
}  // namespace detail

/// Survival of the shifted point start over the virtual period tau; the
/// normaliser of the shifted solution.
inline double survival_shift_base(const UncertainParams& p) {
  return survival_radiation(p.tau(), p.shifted());
}

/// Short-horizon cumulative PoD under the Gaussian start. Exactly 0 at t = 0.
/// Evaluation outside short_term_valid() is allowed; callers check the flag.
inline double pod_uncertain(double t, const UncertainParams& p) {
  detail::require_nonnegative_time(t);
  if (t == 0.0) return 0.0;
  const ModelParams y = p.shifted();
  const double tau = p.tau();
  const double omega = survival_radiation(tau, y);
  if (omega < detail::kSurvivalFloor) throw SingularStateError("shifted survival exhausted");
  const double v = (pod_radiation(t + tau, y) - pod_radiation(tau, y)) / omega;
  return std::clamp(v, 0.0, 1.0);
}

/// Hazard (and zero-recovery spread) under the Gaussian start; finite and
/// positive at t = 0.
inline double hazard_uncertain(double t, const UncertainParams& p) {
  detail::require_nonnegative_time(t);
  const ModelParams y = p.shifted();
  const double horizon = t + p.tau();
  const double omega = survival_radiation(horizon, y);
  if (omega < detail::kSurvivalFloor) throw SingularStateError("shifted survival exhausted");
  return pod_radiation_dot(horizon, y) / omega;
}

/// Hazard at t = 0, either from the full expression or its Gaussian-tail
/// approximation (which is independent of sigma).
inline double hazard_uncertain_at_zero(const UncertainParams& p, ZeroHazardForm form) {
  const ModelParams& b = p.base();
  if (b.kc == 0.0) return 0.0;
  if (form == ZeroHazardForm::gaussian_approx) {
    return std::sqrt(2.0 / std::numbers::pi) * b.kc / b.delta *
           std::exp(-b.x0 * b.x0 / (2.0 * b.delta * b.delta));
  }
  const double d = b.diffusion();
  const double tau = p.tau();
  const double gauss = std::exp(-b.x0 * b.x0 / (4.0 * d * tau));
  const double tail = detail::exp_times_normal_cdf_reduced(
      (b.x0 + b.kc * tau) * b.kc / d, -b.x0 * b.x0 / (4.0 * d * tau),
      (b.x0 + 2.0 * b.kc * tau) / std::sqrt(2.0 * d * tau));
  const double bracket = gauss / std::sqrt(std::numbers::pi * d * tau) - (2.0 * b.kc + b.a) / d * tail;
  return b.kc / survival_shift_base(p) * bracket;
}

/// Reference PoD under the Gaussian start by direct convolution: the
/// point-start PoD averaged over N(x0, delta^2) truncated to [0, x0 + 10 delta]
/// and renormalised. Valid at every horizon.
inline double pod_uncertain_quadrature(double t, const UncertainParams& p, double tolerance = 1e-8) {
  detail::require_positive_time(t);
  const ModelParams& b = p.base();
  if (b.kc == 0.0) return 0.0;
  const double lo = std::max(0.0, b.x0 - 10.0 * b.delta);
  const double hi = b.x0 + 10.0 * b.delta;
  const double z_lo = (lo - b.x0) / b.delta;
  const double mass = std_normal_cdf(10.0) - std_normal_cdf(z_lo);

  auto integrand = [&](double y) {
    const double z = (y - b.x0) / b.delta;
    const ModelParams q{b.a, b.sigma, std::max(y, 0.0), b.kc};
    return pod_radiation(t, q) * std_normal_pdf(z) / b.delta;
  };
  double err = 0.0;
  const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, lo, hi, 15, tolerance * 1e-2, &err);
  if (!(err / mass <= tolerance)) throw QuadratureError("convolution quadrature did not reach tolerance");
  return std::clamp(integral / mass, 0.0, 1.0);
}

/// CreditGrades-style survival: first-passage survival of the shifted start
/// with the tau normaliser dropped. Below 1 already at t = 0.
inline double survival_creditgrades(double t, const UncertainParams& p) {
  detail::require_nonnegative_time(t);
  return survival_absorbing(t + p.tau(), p.shifted());
}

}  // namespace ebc
