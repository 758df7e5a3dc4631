#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ebc/errors.hpp"

namespace ebc {

/// Which condition the default barrier imposes on the log-distance density.
enum class Boundary {
  absorbing,  // classical first passage
  radiation,  // finite default rate kc at the barrier
};

inline std::string_view to_string(Boundary b) {
  return b == Boundary::absorbing ? "absorbing" : "radiation";
}

inline Boundary boundary_from_string(std::string_view s) {
  if (s == "absorbing") return Boundary::absorbing;
  if (s == "radiation") return Boundary::radiation;
  throw PreconditionError("unknown boundary variant '" + std::string(s) + "'");
}

struct ModelParams;

/// Scale-free parameters: every model output at times in years depends on
/// (a, sigma, x0, kc, delta) only through these ratios to sigma.
struct NormalizedParams {
  double a_tilde = 0.0;
  double x0_tilde = 0.0;
  double kc_tilde = 0.0;
  double delta_tilde = 0.0;

  ModelParams with_sigma(double sigma = 1.0) const;

  friend bool operator==(const NormalizedParams&, const NormalizedParams&) = default;
};

/// Parameters of the log-distance diffusion dx = a dt + sigma dW with the
/// default barrier at x = 0.
///
///   a      drift of x = ln(V/L) per year, a = mu - sigma^2/2
///   sigma  asset log-volatility per sqrt(year)
///   x0     initial log-distance to the barrier
///   kc     default rate-constant at the barrier (radiation models)
///   delta  standard deviation of x0 (uncertainty models)
struct ModelParams {
  double a = 0.0;
  double sigma = 1.0;
  double x0 = 0.0;
  double kc = 0.0;
  double delta = 0.0;

  ModelParams() = default;
  ModelParams(double a_, double sigma_, double x0_, double kc_ = 0.0, double delta_ = 0.0)
      : a(a_), sigma(sigma_), x0(x0_), kc(kc_), delta(delta_) {
    validate();
  }

  /// Builds the parameters from the expected asset return mu instead of the drift.
  static ModelParams from_return(double mu, double sigma, double x0, double kc = 0.0,
                                 double delta = 0.0) {
    return {mu - 0.5 * sigma * sigma, sigma, x0, kc, delta};
  }

  double diffusion() const { return 0.5 * sigma * sigma; }

  NormalizedParams normalized() const { return {a / sigma, x0 / sigma, kc / sigma, delta / sigma}; }

  ModelParams with_x0(double v) const { return {a, sigma, v, kc, delta}; }
  ModelParams with_a(double v) const { return {v, sigma, x0, kc, delta}; }
  ModelParams with_kc(double v) const { return {a, sigma, x0, v, delta}; }
  ModelParams with_delta(double v) const { return {a, sigma, x0, kc, v}; }

  void validate() const {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("sigma must be positive and finite");
    if (!std::isfinite(a)) throw DomainError("drift must be finite");
    if (!(x0 >= 0.0) || !std::isfinite(x0)) throw DomainError("x0 must be non-negative and finite");
    if (!(kc >= 0.0)) throw DomainError("kc must be non-negative");
    if (!(delta >= 0.0) || !std::isfinite(delta)) throw DomainError("delta must be non-negative and finite");
  }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

inline ModelParams NormalizedParams::with_sigma(double sigma) const {
  return {a_tilde * sigma, sigma, x0_tilde * sigma, kc_tilde * sigma, delta_tilde * sigma};
}

/// Ordered (t, value) series: a PoD, hazard or spread curve.
class TermStructure {
 public:
  struct Point {
    double t;
    double value;
  };

  TermStructure() = default;
  explicit TermStructure(std::vector<Point> points) : points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (!(points_[i].t > 0.0)) throw DomainError("term structure times must be positive");
      if (!std::isfinite(points_[i].value)) throw DomainError("term structure values must be finite");
      if (i > 0 && !(points_[i].t > points_[i - 1].t))
        throw DomainError("term structure times must be strictly increasing");
    }
  }

  /// Evaluates f(t) on every time of the grid.
  template <typename F>
  static TermStructure tabulate(const std::vector<double>& times, F&& f) {
    std::vector<Point> pts;
    pts.reserve(times.size());
    for (double t : times) pts.push_back({t, f(t)});
    return TermStructure(std::move(pts));
  }

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<Point> points_;
};

/// n times spaced geometrically on [t_min, t_max].
inline std::vector<double> geometric_grid(double t_min = 0.01, double t_max = 30.0, std::size_t n = 256) {
  if (!(t_min > 0.0) || !(t_max > t_min) || n < 2) throw DomainError("invalid geometric grid");
  std::vector<double> g(n);
  const double ratio = std::log(t_max / t_min);
  for (std::size_t i = 0; i < n; ++i) g[i] = t_min * std::exp(ratio * double(i) / double(n - 1));
  g.back() = t_max;
  return g;
}

/// n times spaced evenly on [t_min, t_max].
inline std::vector<double> linear_grid(double t_min, double t_max, std::size_t n) {
  if (!(t_max > t_min) || n < 2) throw DomainError("invalid linear grid");
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = t_min + (t_max - t_min) * double(i) / double(n - 1);
  g.back() = t_max;
  return g;
}

namespace detail {

inline void require_positive_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("time must be positive and finite");
}

inline void require_position(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("position must be non-negative and finite");
}

// Hazard is refused once survival drops below this level.
inline constexpr double kSurvivalFloor = 1e-14;

}  // namespace detail

}  // namespace ebc
