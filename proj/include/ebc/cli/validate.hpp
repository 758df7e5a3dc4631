#pragma once

// Oracle validation run: the PDE solver against the closed forms for the
// four presets and the resonant drift kc + a = 0 on t in [0.1, 20], and the
// dt-extrapolated Monte Carlo against the radiation closed form for the
// 'B' extended preset at t = 1, 5, 20.
//
//   full   PDE 4000 nodes, 1e-4 absolute; MC 1e6 paths, 3 standard errors
//   quick  PDE 1000 nodes, 1e-4 absolute; MC 4e4 paths, 5 standard errors

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ebc/cli/csv.hpp"
#include "ebc/extended.hpp"
#include "ebc/oracle/fpe.hpp"
#include "ebc/oracle/monte_carlo.hpp"
#include "ebc/reference_data.hpp"

namespace ebc::cli {

struct ValidationOptions {
  bool quick = false;
  std::uint64_t seed = 1981;
  double contact_constant = oracle::kContactConstant;  // overridable for negative controls
};

struct ValidationRow {
  std::string check;
  std::string case_name;
  double t;
  double reference;
  double oracle;
  double tolerance;

  double deviation() const { return std::abs(oracle - reference); }
  bool pass() const { return deviation() <= tolerance; }
};

struct ValidationReport {
  std::vector<ValidationRow> rows;

  bool passed() const {
    for (const auto& r : rows)
      if (!r.pass()) return false;
    return !rows.empty();
  }

  /// "check/case@t" for each failing comparison.
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& r : rows)
      if (!r.pass()) out.push_back(r.check + "/" + r.case_name + "@t=" + format_number(r.t));
    return out;
  }

  CsvTable table() const {
    CsvTable out({"check", "case", "t_yr", "reference_pct", "oracle_pct", "deviation_pct", "tolerance_pct", "pass"});
    for (const auto& r : rows)
      out.add_row({r.check, r.case_name, r.t, 100.0 * r.reference, 100.0 * r.oracle, 100.0 * r.deviation(),
                   100.0 * r.tolerance, std::int64_t{r.pass()}});
    return out;
  }
};

struct ValidationCase {
  std::string name;
  ModelParams params;
  Boundary boundary;
};

/// The PDE lattice: the four presets (first-passage ones with the absorbing
/// boundary) and the resonant drift a = -kc.
inline std::vector<ValidationCase> validation_lattice() {
  std::vector<ValidationCase> out;
  for (reference::Preset p : reference::kAllPresets)
    out.push_back({std::string(reference::to_string(p)), reference::preset_params(p).with_sigma(1.0),
                   reference::preset_boundary(p)});
  out.push_back({"resonance", ModelParams{-0.25, 1.0, 1.09, 0.25}, Boundary::radiation});
  return out;
}

inline ValidationReport run_validate(const ValidationOptions& o = {}) {
  ValidationReport report;
  const double pde_tolerance = 1e-4;
  const int nx = o.quick ? 1000 : 4000;
  const double dt_fraction = o.quick ? 4e-4 : 1e-4;
  const auto pde_times = linear_grid(0.1, 20.0, o.quick ? 40 : 200);

  for (const ValidationCase& c : validation_lattice()) {
    const auto grid = oracle::GridSpec::standard(c.params, 20.0, nx, dt_fraction);
    const auto r = oracle::fpe_solve(c.params, grid, pde_times, c.boundary);
    const std::string check = c.boundary == Boundary::absorbing ? "pde_absorbing" : "pde_radiation";
    for (std::size_t i = 0; i < pde_times.size(); ++i)
      report.rows.push_back({check, c.name, pde_times[i], pod(pde_times[i], c.params, c.boundary), r.curve.pod[i],
                             pde_tolerance});
  }

  const ModelParams b = reference::preset_params(reference::Preset::b_ebc).with_sigma(1.0);
  oracle::McSpec m;
  m.n_paths = o.quick ? 40'000 : 1'000'000;
  m.seed = o.seed;
  m.contact_constant = o.contact_constant;
  const double k = o.quick ? 5.0 : 3.0;
  const std::vector<double> mc_times{1.0, 5.0, 20.0};
  const auto mc = oracle::mc_extrapolate(b, m, mc_times);
  for (std::size_t i = 0; i < mc_times.size(); ++i)
    report.rows.push_back({"mc_radiation", "b_ebc", mc_times[i], pod_radiation(mc_times[i], b), mc.extrapolated.pod[i],
                           k * mc.extrapolated.error[i]});
  return report;
}

}  // namespace ebc::cli
