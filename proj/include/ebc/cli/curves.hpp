#pragma once

// Term-structure tables for the pod, hazard, spread and density commands.
// With delta > 0 the Gaussian-start model is used and a validity column is
// added.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ebc/cli/csv.hpp"
#include "ebc/extended.hpp"
#include "ebc/params.hpp"
#include "ebc/uncertainty.hpp"

namespace ebc::cli {

enum class CurveKind { pod, hazard, spread };

struct TimeGrid {
  double t_min = 0.1;
  double t_max = 20.0;
  int t_points = 200;

  std::vector<double> times() const {
    if (!(t_min >= 0.0) || !(t_max > t_min) || t_points < 2)
      throw PreconditionError("time grid needs 0 <= t-min < t-max and at least 2 points");
    return linear_grid(t_min, t_max, static_cast<std::size_t>(t_points));
  }
};

inline CsvTable curve_table(CurveKind kind, const ModelParams& p, Boundary variant, const TimeGrid& grid) {
  const std::string column = kind == CurveKind::pod      ? "pod_pct"
                             : kind == CurveKind::hazard ? "hazard_per_yr"
                                                         : "spread_bp";
  const double scale = kind == CurveKind::pod ? 100.0 : kind == CurveKind::hazard ? 1.0 : 1e4;
  const std::vector<double> times = grid.times();

  if (p.delta > 0.0) {
    if (variant != Boundary::radiation) throw PreconditionError("delta > 0 requires the radiation variant");
    const UncertainParams u(p);
    CsvTable out({"t_yr", column, "short_term_valid"});
    for (double t : times) {
      const double v = kind == CurveKind::pod ? pod_uncertain(t, u) : hazard_uncertain(t, u);
      out.add_row({t, scale * v, std::int64_t{u.short_term_valid(t)}});
    }
    return out;
  }

  CsvTable out({"t_yr", column});
  for (double t : times) {
    const double v = kind == CurveKind::pod ? pod(t, p, variant) : hazard(t, p, variant);
    out.add_row({t, scale * v});
  }
  return out;
}

/// Density at t = grid.t_max on t_points nodes of [0, x0 + |a| t + 6 sqrt(2 D t)].
inline CsvTable density_table(const ModelParams& p, Boundary variant, const TimeGrid& grid) {
  if (p.delta > 0.0) throw PreconditionError("density is available for point starts only (delta = 0)");
  if (grid.t_points < 2) throw PreconditionError("density grid needs at least 2 points");
  const double t = grid.t_max;
  detail::require_positive_time(t);
  const double x_max = p.x0 + std::abs(p.a) * t + 6.0 * std::sqrt(2.0 * p.diffusion() * t);
  CsvTable out({"x", "density"});
  for (double x : linear_grid(0.0, x_max, static_cast<std::size_t>(grid.t_points))) {
    const double v = variant == Boundary::absorbing ? density_absorbing(x, t, p) : density_radiation(x, t, p);
    out.add_row({x, v});
  }
  return out;
}

}  // namespace ebc::cli
