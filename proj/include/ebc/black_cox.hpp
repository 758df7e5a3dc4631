#pragma once

// Classical Black-Cox model: the log-distance to default diffuses with
// constant drift and default happens at the first touch of x = 0
// (absorbing barrier).

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ebc/params.hpp"
#include "ebc/specfun.hpp"

namespace ebc {

namespace detail {

// exp(-(x0 + a t)^2 / 4Dt), the Gaussian factor shared by the first-passage
// formulas once their exp(+large) * Phi(-large) products are reduced.
inline double drift_gaussian(double t, const ModelParams& p) {
  const double m = p.x0 + p.a * t;
  return std::exp(-m * m / (4.0 * p.diffusion() * t));
}

// exp(-a x0 / D) * Phi(-(x0 - a t) / sqrt(2Dt)); common to the absorbing and
// radiation survival formulas.
inline double image_term(double t, const ModelParams& p) {
  const double d = p.diffusion();
  const double m = p.x0 + p.a * t;
  const double u = (p.x0 - p.a * t) / std::sqrt(2.0 * d * t);
  return exp_times_normal_cdf_reduced(-p.a * p.x0 / d, -m * m / (4.0 * d * t), u);
}

// Free-space Gaussian kernel 1/(2 sqrt(pi D t)) exp(-(x - x0 - a t)^2 / 4Dt).
inline double free_kernel(double x, double t, const ModelParams& p) {
  const double d = p.diffusion();
  const double m = x - p.x0 - p.a * t;
  return std::exp(-m * m / (4.0 * d * t)) / (2.0 * std::sqrt(std::numbers::pi * d * t));
}

}  // namespace detail

/// Transition density of the log-distance killed at x = 0.
inline double density_absorbing(double x, double t, const ModelParams& p) {
  detail::require_positive_time(t);
  detail::require_position(x);
  // The image term equals the direct term times exp(-x x0 / Dt).
  return -detail::free_kernel(x, t, p) * std::expm1(-x * p.x0 / (p.diffusion() * t));
}

/// Probability of having survived (not touched the barrier) up to t.
inline double survival_absorbing(double t, const ModelParams& p) {
  detail::require_positive_time(t);
  if (p.x0 == 0.0) return 0.0;
  const double s = std::sqrt(2.0 * p.diffusion() * t);
  const double v = std_normal_cdf((p.x0 + p.a * t) / s) - detail::image_term(t, p);
  return std::clamp(v, 0.0, 1.0);
}

/// Cumulative probability of default by t in the first-passage model.
///
/// Starting on the barrier (x0 = 0) defaults immediately, so this returns
/// exactly 1 there for every t > 0.
inline double pod_absorbing(double t, const ModelParams& p) {
  detail::require_positive_time(t);
  if (p.x0 == 0.0) return 1.0;
  const double s = std::sqrt(2.0 * p.diffusion() * t);
  const double v = std_normal_cdf(-(p.x0 + p.a * t) / s) + detail::image_term(t, p);
  return std::clamp(v, 0.0, 1.0);
}

/// Density of the first hitting time of x = 0, i.e. dP/dt of pod_absorbing.
inline double first_hitting_density(double t, const ModelParams& p) {
  detail::require_positive_time(t);
  const double d = p.diffusion();
  return p.x0 / std::sqrt(4.0 * std::numbers::pi * d * t * t * t) * detail::drift_gaussian(t, p);
}

/// Hazard rate of the first-passage model; throws SingularStateError once
/// survival is exhausted.
inline double hazard_absorbing(double t, const ModelParams& p) {
  const double omega = survival_absorbing(t, p);
  if (omega < detail::kSurvivalFloor) throw SingularStateError("absorbing survival exhausted; hazard undefined");
  return first_hitting_density(t, p) / omega;
}

}  // namespace ebc
