#pragma once

// Reproduction tables and figure data as CSV.
//
//   table1  observed and both fitted columns per rating, years 1..20
//   table2  fresh calibrations next to the published fits
//   fig1    PoD curves, full range and the 0-4 year zoom (panel column)
//   fig2    spread curves for the four presets
//   fig3    short-horizon spreads per initial-distance uncertainty delta~

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ebc/calibration.hpp"
#include "ebc/cli/csv.hpp"
#include "ebc/extended.hpp"
#include "ebc/reference_data.hpp"
#include "ebc/uncertainty.hpp"

namespace ebc::cli {

enum class ReportKind { table1, table2, fig1, fig2, fig3 };

inline ReportKind report_kind_from_string(std::string_view s) {
  if (s == "table1") return ReportKind::table1;
  if (s == "table2") return ReportKind::table2;
  if (s == "fig1") return ReportKind::fig1;
  if (s == "fig2") return ReportKind::fig2;
  if (s == "fig3") return ReportKind::fig3;
  throw PreconditionError("unknown report '" + std::string(s) + "'");
}

struct ReportOptions {
  std::uint64_t seed = 1981;
  int trials = 10'000;
  double q = 0.8;
  int t_points = 400;
};

inline constexpr std::array<double, 5> kFigureThreeDeltas{0.0, 0.1, 0.25, 0.5, 1.0};

namespace detail {

inline ModelParams preset_model(reference::Preset p) { return reference::preset_params(p).with_sigma(1.0); }

inline double preset_pod_percent(reference::Preset p, double t) {
  return 100.0 * pod(t, preset_model(p), reference::preset_boundary(p));
}

inline CsvTable table_one() {
  using reference::Preset;
  CsvTable out({"year", "bb_observed_pct", "bb_black_cox_pct", "bb_extended_pct", "b_observed_pct",
                "b_black_cox_pct", "b_extended_pct"});
  for (const auto& row : reference::kTableOne) {
    const double t = row.year;
    out.add_row({std::int64_t{row.year}, row.bb_observed, preset_pod_percent(Preset::bb_bc, t),
                 preset_pod_percent(Preset::bb_ebc, t), row.b_observed, preset_pod_percent(Preset::b_bc, t),
                 preset_pod_percent(Preset::b_ebc, t)});
  }
  return out;
}

inline CsvTable table_two(const ReportOptions& o) {
  CsvTable out({"preset", "rating", "variant", "rho_pct", "x0_tilde", "a_tilde", "kc_tilde", "published_rho_pct",
                "published_x0_tilde", "published_a_tilde", "published_kc_tilde", "delta_rho_pct", "delta_x0_tilde",
                "delta_a_tilde", "delta_kc_tilde"});
  for (reference::Preset p : reference::kAllPresets) {
    CalibrationConfig c;
    c.variant = reference::preset_boundary(p);
    c.seed = o.seed;
    c.trials = o.trials;
    c.q = o.q;
    const CalibrationResult r = calibrate(reference_dataset(reference::preset_rating(p)), c);
    const reference::PublishedFit f = reference::published_fit(p);
    out.add_row({std::string(reference::to_string(p)), std::string(reference::preset_rating(p)),
                 std::string(to_string(c.variant)), r.rho, r.params.x0_tilde, r.params.a_tilde, r.params.kc_tilde,
                 f.rho, f.x0_tilde, f.a_tilde, f.kc_tilde, r.rho - f.rho, r.params.x0_tilde - f.x0_tilde,
                 r.params.a_tilde - f.a_tilde, r.params.kc_tilde - f.kc_tilde});
  }
  return out;
}

inline CsvTable figure_one(const ReportOptions& o) {
  using reference::Preset;
  CsvTable out({"panel", "rating", "series", "t_yr", "pod_pct"});
  struct Panel {
    const char* name;
    double t_min, t_max;
  };
  for (const Panel panel : {Panel{"full", 0.05, 20.0}, Panel{"zoom", 0.01, 4.0}}) {
    for (const char* rating : {"BB", "B"}) {
      const bool bb = std::string_view(rating) == "BB";
      const auto observed = reference::observed_percent(rating);
      for (std::size_t i = 0; i < observed.size(); ++i) {
        const double year = reference::kTableOne[i].year;
        if (year <= panel.t_max) out.add_row({panel.name, rating, "observed", year, observed[i]});
      }
      const auto times = linear_grid(panel.t_min, panel.t_max, static_cast<std::size_t>(o.t_points));
      for (const auto& [series, preset] :
           {std::pair{"black_cox", bb ? Preset::bb_bc : Preset::b_bc}, std::pair{"extended", bb ? Preset::bb_ebc : Preset::b_ebc}}) {
        for (double t : times) out.add_row({panel.name, rating, series, t, preset_pod_percent(preset, t)});
      }
    }
  }
  return out;
}

inline CsvTable figure_two(const ReportOptions& o) {
  CsvTable out({"preset", "t_yr", "spread_bp"});
  for (reference::Preset p : reference::kAllPresets) {
    const ModelParams m = preset_model(p);
    for (double t : linear_grid(0.05, 20.0, static_cast<std::size_t>(o.t_points)))
      out.add_row({std::string(reference::to_string(p)), t, 1e4 * credit_spread(t, m, reference::preset_boundary(p))});
  }
  return out;
}

inline CsvTable figure_three(const ReportOptions& o) {
  using reference::Preset;
  CsvTable out({"rating", "delta_tilde", "t_yr", "spread_bp", "short_term_valid"});
  for (Preset p : {Preset::bb_ebc, Preset::b_ebc}) {
    const ModelParams base = preset_model(p);
    const std::string rating(reference::preset_rating(p));
    const auto times = linear_grid(0.01, 5.0, static_cast<std::size_t>(o.t_points));
    for (double delta : kFigureThreeDeltas) {
      if (delta == 0.0) {
        for (double t : times) out.add_row({rating, delta, t, 1e4 * hazard_radiation(t, base), std::int64_t{1}});
        continue;
      }
      const UncertainParams u(base.with_delta(delta));
      for (double t : times)
        out.add_row({rating, delta, t, 1e4 * hazard_uncertain(t, u), std::int64_t{u.short_term_valid(t)}});
    }
  }
  return out;
}

}  // namespace detail

inline CsvTable run_report(ReportKind kind, const ReportOptions& o = {}) {
  if (o.t_points < 2) throw PreconditionError("report needs at least 2 time points");
  switch (kind) {
    case ReportKind::table1: return detail::table_one();
    case ReportKind::table2: return detail::table_two(o);
    case ReportKind::fig1: return detail::figure_one(o);
    case ReportKind::fig2: return detail::figure_two(o);
    case ReportKind::fig3: return detail::figure_three(o);
  }
  throw PreconditionError("unknown report");
}

}  // namespace ebc::cli
