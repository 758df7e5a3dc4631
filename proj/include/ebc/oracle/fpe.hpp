#pragma once

// Finite-volume Crank-Nicolson solver for dp/dt = -dJ/dx, J = a p - D dp/dx,
// on a node grid x_i = i dx over [0, x_max]. Node 0 owns the half cell
// [0, dx/2] and takes the barrier flux J(0) = -kc p_0 (the ghost-point form
// of the radiation condition); an absorbing barrier pins p_0 = 0 instead.
// p = 0 at x_max. The first two steps are split into four backward-Euler
// half steps to damp the point initial condition.

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "ebc/errors.hpp"
#include "ebc/params.hpp"

namespace ebc::oracle {

struct GridSpec {
  double x_max = 0.0;
  int nx = 0;  // nodes including both ends
  double dt = 0.0;
  double t_end = 0.0;

  /// Grid with x_max = x0 + |a| t_end + 8 sqrt(2 D t_end) and dt = dt_fraction * t_end.
  static GridSpec standard(const ModelParams& p, double t_end, int nx = 4000, double dt_fraction = 1e-4) {
    const double x_max = p.x0 + std::abs(p.a) * t_end + 8.0 * std::sqrt(2.0 * p.diffusion() * t_end);
    return {x_max, nx, dt_fraction * t_end, t_end};
  }

  double dx() const { return x_max / (nx - 1); }

  void validate(const ModelParams& p) const {
    if (!(t_end > 0.0) || !std::isfinite(t_end)) throw PreconditionError("grid t_end must be positive");
    if (!(dt > 0.0)) throw PreconditionError("grid dt must be positive");
    if (nx < 200) throw PreconditionError("grid needs at least 200 nodes");
    const double need = p.x0 + std::abs(p.a) * t_end + 6.0 * std::sqrt(2.0 * p.diffusion() * t_end);
    if (!(x_max >= need))
      throw PreconditionError("grid x_max " + std::to_string(x_max) + " below required " + std::to_string(need));
  }
};

/// PoD term structure from an oracle. `error` is the Monte Carlo standard
/// error or the PDE discretisation-error estimate (0 when not estimated).
struct OracleCurve {
  std::vector<double> t;
  std::vector<double> pod;
  std::vector<double> error;
};

struct FpeResult {
  OracleCurve curve;
  std::vector<double> x;        // nodes
  std::vector<double> density;  // at t_end
  double max_balance_error = 0.0;  // |survival + absorbed + far-field loss - 1| over all steps
};

namespace detail {

// Solves the tridiagonal system in place; rhs becomes the solution.
inline void solve_tridiagonal(const std::vector<double>& lower, std::vector<double> diag,
                              const std::vector<double>& upper, std::vector<double>& rhs) {
  const std::size_t n = diag.size();
  for (std::size_t i = 1; i < n; ++i) {
    const double m = lower[i] / diag[i - 1];
    diag[i] -= m * upper[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  rhs[n - 1] /= diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
}

inline FpeResult fpe_run(const ModelParams& p, const GridSpec& g, const std::vector<double>& times, bool absorbing) {
  const double dx = g.dx();
  const double d = p.diffusion();
  const int n_nodes = g.nx - 1;  // last node is the far-field zero
  const int first = absorbing ? 1 : 0;
  const int n = n_nodes - first;

  // Face flux F_{i+1/2} = alpha p_i + beta p_{i+1}.
  const double alpha = 0.5 * p.a + d / dx;
  const double beta = 0.5 * p.a - d / dx;

  std::vector<double> w(n, dx), lo(n, alpha), di(n, beta - alpha), up(n, -beta);
  lo[0] = 0.0;
  up[n - 1] = 0.0;
  if (!absorbing) {
    w[0] = 0.5 * dx;
    di[0] = -p.kc - alpha;
  }
  auto barrier_rate = [&](const std::vector<double>& v) { return absorbing ? -beta * v[0] : p.kc * v[0]; };
  auto far_rate = [&](const std::vector<double>& v) { return alpha * v[n - 1]; };
  auto apply = [&](const std::vector<double>& v, int i) {
    double r = di[i] * v[i];
    if (i > 0) r += lo[i] * v[i - 1];
    if (i < n - 1) r += up[i] * v[i + 1];
    return r;
  };

  std::vector<double> v(n, 0.0);
  double absorbed = 0.0, far = 0.0;
  {
    const double s = p.x0 / dx;
    const int j = static_cast<int>(std::floor(s));
    const double theta = s - j;
    if (j + 1 >= n_nodes) throw PreconditionError("start lies outside the grid");
    auto deposit = [&](int node, double mass) {
      if (node < first) absorbed += mass;
      else v[node - first] += mass / w[node - first];
    };
    deposit(j, 1.0 - theta);
    if (theta > 0.0) deposit(j + 1, theta);
  }

  FpeResult out;
  double survival = 0.0;
  auto total_survival = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += w[i] * v[i];
    return s;
  };

  std::vector<double> rhs(n), lhs_lo(n), lhs_di(n), lhs_up(n);
  double t = 0.0;
  int half_steps_left = 4;
  std::size_t next = 0;
  const double snap = 1e-12 * g.t_end;
  while (next < times.size()) {
    const bool startup = half_steps_left > 0;
    const double theta = startup ? 1.0 : 0.5;
    double h = startup ? 0.5 * g.dt : g.dt;
    if (t + h >= times[next] - snap) h = times[next] - t;
    if (startup) --half_steps_left;

    for (int i = 0; i < n; ++i) {
      rhs[i] = w[i] * v[i] + (1.0 - theta) * h * apply(v, i);
      lhs_lo[i] = -theta * h * lo[i];
      lhs_di[i] = w[i] - theta * h * di[i];
      lhs_up[i] = -theta * h * up[i];
    }
    const double in_rate = barrier_rate(v), out_rate = far_rate(v);
    solve_tridiagonal(lhs_lo, lhs_di, lhs_up, rhs);
    v.swap(rhs);
    absorbed += h * (theta * barrier_rate(v) + (1.0 - theta) * in_rate);
    far += h * (theta * far_rate(v) + (1.0 - theta) * out_rate);
    t += h;

    const double lowest = *std::min_element(v.begin(), v.end());
    if (lowest < -1e-8) throw InstabilityError("negative density " + std::to_string(lowest));
    survival = total_survival();
    if (survival < -1e-8 || survival > 1.0 + 1e-8) throw InstabilityError("survival left [0, 1]");
    out.max_balance_error = std::max(out.max_balance_error, std::abs(survival + absorbed + far - 1.0));

    if (t >= times[next] - snap) {
      t = times[next];
      out.curve.t.push_back(t);
      out.curve.pod.push_back(std::clamp(1.0 - survival, 0.0, 1.0));
      out.curve.error.push_back(0.0);
      ++next;
    }
  }

  out.x.resize(g.nx);
  out.density.assign(g.nx, 0.0);
  for (int i = 0; i < g.nx; ++i) out.x[i] = i * dx;
  for (int i = 0; i < n; ++i) out.density[i + first] = v[i];
  return out;
}

}  // namespace detail

/// Solves the FPE from a point start and reports PoD = 1 - integral of the
/// density at the given times (sorted, within (0, t_end]). With
/// estimate_error the grid is also solved at half resolution and the
/// Richardson estimate |P_h - P_2h| / 3 is stored per point.
inline FpeResult fpe_solve(const ModelParams& p, const GridSpec& g, std::span<const double> times,
                           Boundary boundary = Boundary::radiation, bool estimate_error = false) {
  g.validate(p);
  std::vector<double> ts(times.begin(), times.end());
  if (ts.empty()) ts.push_back(g.t_end);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!(ts[i] > 0.0) || ts[i] > g.t_end * (1.0 + 1e-12)) throw PreconditionError("report time outside (0, t_end]");
    if (i > 0 && !(ts[i] > ts[i - 1])) throw PreconditionError("report times must increase");
  }
  const bool absorbing = boundary == Boundary::absorbing || std::isinf(p.kc);
  FpeResult fine = detail::fpe_run(p, g, ts, absorbing);
  if (estimate_error) {
    GridSpec coarse = g;
    coarse.nx = (g.nx - 1) / 2 + 1;
    const FpeResult c = detail::fpe_run(p, coarse, ts, absorbing);
    for (std::size_t i = 0; i < ts.size(); ++i) fine.curve.error[i] = std::abs(fine.curve.pod[i] - c.curve.pod[i]) / 3.0;
  }
  return fine;
}

}  // namespace ebc::oracle
