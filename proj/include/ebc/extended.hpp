#pragma once

// Extended Black-Cox model: the barrier at x = 0 carries a radiation
// condition J(0, t) = -kc p(0, t), so a touch defaults only at the finite
// rate kc. kc -> inf recovers the absorbing model, kc = 0 a reflecting
// barrier with no defaults at all.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ebc/black_cox.hpp"
#include "ebc/params.hpp"
#include "ebc/specfun.hpp"

namespace ebc {

/// Probability flux J = a p - D dp/dx at a point, per year.
struct FluxValue {
  double j = 0.0;
};

/// Which asymptotic form of dP/dt to evaluate.
enum class AsymptoticRegime {
  long_time,      // t >> D/kc^2 with kc x0 >> D
  first_passage,  // kc -> inf
};

namespace detail {

// exp(kc (x0 + (kc + a) t) / D) * Phi(-(x0 + (a + 2 kc) t) / sqrt(2Dt)).
// Its reduced exponent is -(x0 + a t)^2 / 4Dt whatever kc is, so it stays
// finite where the naive product overflows (kc t large).
inline double radiation_tail(double t, const ModelParams& p) {
  const double d = p.diffusion();
  const double m = p.x0 + p.a * t;
  const double beta = p.kc * (p.x0 + (p.kc + p.a) * t) / d;
  const double u = (p.x0 + (p.a + 2.0 * p.kc) * t) / std::sqrt(2.0 * d * t);
  return exp_times_normal_cdf_reduced(beta, -m * m / (4.0 * d * t), u);
}

// (image - tail) / (kc + a) evaluated exactly at kc + a = 0, where both
// terms coincide. Obtained by differentiating in s = kc + a at fixed kc.
inline double mixed_ratio_at_resonance(double t, const ModelParams& p) {
  const double d = p.diffusion();
  const double s = std::sqrt(2.0 * d * t);
  const double kc = p.kc;
  const double e0 = exp_times_normal_cdf_reduced(
      kc * p.x0 / d, -(p.x0 - kc * t) * (p.x0 - kc * t) / (4.0 * d * t), (p.x0 + kc * t) / s);
  const double gauss = std::exp(-(p.x0 - kc * t) * (p.x0 - kc * t) / (4.0 * d * t)) *
                       std::numbers::inv_sqrtpi / std::numbers::sqrt2;
  return -(p.x0 + kc * t) / d * e0 + 2.0 * t / s * gauss;
}

// Half-width, in units of sigma, of the band around kc + a = 0 where the
// direct quotient loses too many digits and a quadratic in kc + a is used.
inline constexpr double kResonanceBand = 1e-4;

// kc / (kc + a) * (image - tail), continuous through kc + a = 0.
inline double radiation_mixed(double t, const ModelParams& p) {
  const double sum = p.kc + p.a;
  const double h = kResonanceBand * p.sigma;
  auto quotient = [&](double drift) {
    const ModelParams q{drift, p.sigma, p.x0, p.kc};
    return (image_term(t, q) - radiation_tail(t, q)) / (p.kc + drift);
  };
  if (std::abs(sum) >= h) return p.kc * quotient(p.a);
  const double g0 = mixed_ratio_at_resonance(t, p);
  const double gp = quotient(h - p.kc);
  const double gm = quotient(-h - p.kc);
  const double slope = (gp - gm) / (2.0 * h);
  const double curv = (gp - 2.0 * g0 + gm) / (2.0 * h * h);
  return p.kc * (g0 + sum * (slope + sum * curv));
}

}  // namespace detail

/// Transition density of the log-distance with the radiation barrier.
inline double density_radiation(double x, double t, const ModelParams& p) {
  detail::require_positive_time(t);
  detail::require_position(x);
  const double d = p.diffusion();
  const double direct = detail::free_kernel(x, t, p);
  const double image = direct * std::exp(-x * p.x0 / (d * t));
  const double m = x - p.x0 - p.a * t;
  const double beta = ((p.a + p.kc) * (x + p.kc * t) + p.kc * p.x0) / d;
  const double reduced = -m * m / (4.0 * d * t) - x * p.x0 / (d * t);
  const double u = ((p.a + 2.0 * p.kc) * t + x + p.x0) / std::sqrt(2.0 * d * t);
  const double tail = detail::exp_times_normal_cdf_reduced(beta, reduced, u);
  return std::max(0.0, direct + image - (p.a + 2.0 * p.kc) / d * tail);
}

/// Probability flux at x, with the spatial derivative taken analytically.
inline FluxValue flux_radiation(double x, double t, const ModelParams& p) {
  detail::require_positive_time(t);
  detail::require_position(x);
  const double d = p.diffusion();
  const double direct = detail::free_kernel(x, t, p);
  const double image = direct * std::exp(-x * p.x0 / (d * t));
  const double m = x - p.x0 - p.a * t;
  const double beta = ((p.a + p.kc) * (x + p.kc * t) + p.kc * p.x0) / d;
  const double reduced = -m * m / (4.0 * d * t) - x * p.x0 / (d * t);
  const double u = ((p.a + 2.0 * p.kc) * t + x + p.x0) / std::sqrt(2.0 * d * t);
  const double tail = detail::exp_times_normal_cdf_reduced(beta, reduced, u);
  const double c = (p.a + 2.0 * p.kc) / d;

  const double density = direct + image - c * tail;
  const double tail_gauss = std::exp(reduced) * std::numbers::inv_sqrtpi / std::numbers::sqrt2;
  const double ddx = -direct * m / (2.0 * d * t) - image * (x + p.x0 - p.a * t) / (2.0 * d * t) -
                     c * ((p.a + p.kc) / d * tail - tail_gauss / std::sqrt(2.0 * d * t));
  return {p.a * density - d * ddx};
}

/// Cumulative probability of default by t with the radiation barrier.
inline double pod_radiation(double t, const ModelParams& p) {
  detail::require_positive_time(t);
  if (p.kc == 0.0) return 0.0;
  const double s = std::sqrt(2.0 * p.diffusion() * t);
  const double v = std_normal_cdf(-(p.x0 + p.a * t) / s) + detail::radiation_mixed(t, p) -
                   detail::radiation_tail(t, p);
  return std::clamp(v, 0.0, 1.0);
}

/// 1 - pod_radiation, formed directly so small default probabilities keep
/// their relative accuracy in the complement.
inline double survival_radiation(double t, const ModelParams& p) {
  detail::require_positive_time(t);
  if (p.kc == 0.0) return 1.0;
  const double s = std::sqrt(2.0 * p.diffusion() * t);
  const double v = std_normal_cdf((p.x0 + p.a * t) / s) - detail::radiation_mixed(t, p) +
                   detail::radiation_tail(t, p);
  return std::clamp(v, 0.0, 1.0);
}

/// dP/dt = kc p(0, t) for the radiation barrier, per year.
inline double pod_radiation_dot(double t, const ModelParams& p) {
  detail::require_positive_time(t);
  if (p.kc == 0.0) return 0.0;
  const double d = p.diffusion();
  const double g = detail::drift_gaussian(t, p) / std::sqrt(std::numbers::pi * d * t);
  const double v = p.kc * (g - (2.0 * p.kc + p.a) / d * detail::radiation_tail(t, p));
  return std::max(0.0, v);
}

/// Hazard rate dP/dt / (1 - P). With zero recovery and mu = r this is also
/// the continuously compounded credit spread.
inline double hazard_radiation(double t, const ModelParams& p) {
  const double omega = survival_radiation(t, p);
  if (omega < detail::kSurvivalFloor) throw SingularStateError("radiation survival exhausted; hazard undefined");
  return pod_radiation_dot(t, p) / omega;
}

/// Default probability as t -> inf.
inline double pod_longtime_limit(const ModelParams& p) {
  if (p.kc == 0.0) return 0.0;
  if (p.a <= 0.0) return 1.0;
  return p.kc / (p.kc + p.a) * std::exp(-p.a * p.x0 / p.diffusion());
}

/// Characteristic time D / kc^2 separating the sqrt(t) and long-time regimes.
inline double characteristic_time(const ModelParams& p) {
  if (!(p.kc > 0.0)) throw PreconditionError("characteristic time needs kc > 0");
  return p.diffusion() / (p.kc * p.kc);
}

/// PoD for a driftless firm starting on the barrier: 1 - erfcx(sqrt(t/t0)).
inline double pod_boundary_start(double t, const ModelParams& p) {
  detail::require_positive_time(t);
  if (p.x0 != 0.0 || p.a != 0.0 || !(p.kc > 0.0))
    throw PreconditionError("pod_boundary_start requires x0 = 0, a = 0 and kc > 0");
  return 1.0 - erfc_scaled(std::sqrt(t / characteristic_time(p)));
}

/// Asymptotic forms of dP/dt. The first-passage branch is the first hitting
/// density itself.
inline double pod_dot_asymptotic(double t, const ModelParams& p, AsymptoticRegime regime) {
  detail::require_positive_time(t);
  if (regime == AsymptoticRegime::first_passage) return first_hitting_density(t, p);
  const double d = p.diffusion();
  const double denom = (p.a * t + 2.0 * p.kc * t + p.x0) * std::sqrt(std::numbers::pi * d * t);
  return p.kc * p.x0 / denom * detail::drift_gaussian(t, p);
}

// Boundary-generic entry points.

inline double pod(double t, const ModelParams& p, Boundary b) {
  return b == Boundary::absorbing ? pod_absorbing(t, p) : pod_radiation(t, p);
}

inline double survival(double t, const ModelParams& p, Boundary b) {
  return b == Boundary::absorbing ? survival_absorbing(t, p) : survival_radiation(t, p);
}

inline double pod_dot(double t, const ModelParams& p, Boundary b) {
  return b == Boundary::absorbing ? first_hitting_density(t, p) : pod_radiation_dot(t, p);
}

inline double hazard(double t, const ModelParams& p, Boundary b) {
  return b == Boundary::absorbing ? hazard_absorbing(t, p) : hazard_radiation(t, p);
}

/// Zero-recovery zero-coupon credit spread per year; identical to the hazard.
inline double credit_spread(double t, const ModelParams& p, Boundary b) { return hazard(t, p, b); }

}  // namespace ebc
