// ebc: command-line front end.
//
//   ebc pod|hazard|spread|density [--preset P | --a-tilde A --x0-tilde X --kc-tilde K] [--delta-tilde D]
//   ebc calibrate [--dataset FILE | --label B|BB] [--variant V] [--seed S] [--trials N] [--q Q]
//   ebc validate [--quick]
//   ebc report table1|table2|fig1|fig2|fig3 [--seed S]
//
// Exit codes: 0 success, 1 usage, 2 data, 3 numerical or validation failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ebc/calibration.hpp"
#include "ebc/cli/csv.hpp"
#include "ebc/cli/curves.hpp"
#include "ebc/cli/dataset.hpp"
#include "ebc/cli/report.hpp"
#include "ebc/cli/validate.hpp"
#include "ebc/reference_data.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kData = 2, kNumerical = 3 };

// Invalid flag combinations discovered after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string kind;
  std::optional<double> a_tilde, x0_tilde, kc_tilde, delta_tilde;
  double sigma = 1.0;
  std::optional<std::string> variant, preset, dataset, label, weights, out;
  std::optional<double> t_min, t_max;
  std::optional<int> t_points;
  std::uint64_t seed = 1981;
  int trials = 10'000;
  double q = 0.8;
  bool quick = false;
};

ebc::Boundary parse_variant(const std::string& s) {
  try {
    return ebc::boundary_from_string(s);
  } catch (const ebc::PreconditionError& e) {
    throw UsageError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ebc::DataError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<double> parse_weights(const std::string& list) {
  std::vector<double> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--weights: '" + item + "' is not a number");
    }
  }
  return out;
}

void emit(const ebc::cli::CsvTable& table, const Options& o) {
  if (!o.out) {
    table.write(std::cout);
    return;
  }
  std::ofstream f(*o.out, std::ios::binary);
  if (!f) throw ebc::DataError("cannot write '" + *o.out + "'");
  table.write(f);
  if (!f) throw ebc::DataError("write to '" + *o.out + "' failed");
}

// Preset first, then explicit flags on top.
std::pair<ebc::ModelParams, ebc::Boundary> model_from(const Options& o) {
  ebc::NormalizedParams z;
  ebc::Boundary variant = ebc::Boundary::radiation;
  if (o.preset) {
    const auto p = ebc::reference::preset_from_string(*o.preset);
    z = ebc::reference::preset_params(p);
    variant = ebc::reference::preset_boundary(p);
  } else if (!o.a_tilde || !o.x0_tilde) {
    throw UsageError("give --preset or both --a-tilde and --x0-tilde");
  }
  if (o.variant) variant = parse_variant(*o.variant);
  if (o.a_tilde) z.a_tilde = *o.a_tilde;
  if (o.x0_tilde) z.x0_tilde = *o.x0_tilde;
  if (o.kc_tilde) z.kc_tilde = *o.kc_tilde;
  if (o.delta_tilde) z.delta_tilde = *o.delta_tilde;
  if (variant == ebc::Boundary::radiation && !o.preset && !o.kc_tilde)
    throw UsageError("the radiation variant needs --kc-tilde");
  if (variant == ebc::Boundary::absorbing) z.kc_tilde = 0.0;
  return {z.with_sigma(o.sigma), variant};
}

ebc::cli::TimeGrid grid_from(const Options& o) {
  ebc::cli::TimeGrid g;
  if (o.t_min) g.t_min = *o.t_min;
  if (o.t_max) g.t_max = *o.t_max;
  if (o.t_points) g.t_points = *o.t_points;
  return g;
}

int run_calibrate(const Options& o) {
  std::optional<ebc::HistoricalDataset> data;
  if (o.dataset) {
    data = ebc::cli::parse_dataset(read_file(*o.dataset), o.label.value_or(ebc::cli::label_from_path(*o.dataset)));
  } else if (o.label) {
    data = ebc::reference_dataset(*o.label);
  } else {
    throw UsageError("calibrate needs --dataset or --label B|BB");
  }
  if (o.weights) data = data->with_weights(parse_weights(*o.weights));
  for (const std::string& w : data->warnings()) std::cerr << "warning: " << w << '\n';

  ebc::CalibrationConfig c;
  if (o.variant) c.variant = parse_variant(*o.variant);
  c.seed = o.seed;
  c.trials = o.trials;
  c.q = o.q;
  if (o.a_tilde) c.initial.a_tilde = *o.a_tilde;
  if (o.x0_tilde) c.initial.x0_tilde = *o.x0_tilde;
  if (o.kc_tilde) c.initial.kc_tilde = *o.kc_tilde;
  const ebc::CalibrationResult r = ebc::calibrate(*data, c);

  ebc::cli::CsvTable out({"label", "variant", "a_tilde", "x0_tilde", "kc_tilde", "rho_pct", "trials",
                          "improvements", "seed"});
  out.add_row({data->label(), std::string(ebc::to_string(r.variant)), r.params.a_tilde, r.params.x0_tilde,
               r.params.kc_tilde, r.rho, std::int64_t{r.trials_run}, std::int64_t{r.improvements},
               std::to_string(r.seed)});
  emit(out, o);
  return kOk;
}

int run_validate(const Options& o) {
  ebc::cli::ValidationOptions v;
  v.quick = o.quick;
  v.seed = o.seed;
  const auto report = ebc::cli::run_validate(v);
  emit(report.table(), o);
  for (const std::string& f : report.failures()) std::cerr << "FAIL " << f << '\n';
  return report.passed() ? kOk : kNumerical;
}

int run_report(const Options& o) {
  if (o.kind.empty()) throw UsageError("report needs a kind: table1, table2, fig1, fig2 or fig3");
  ebc::cli::ReportOptions r;
  r.seed = o.seed;
  r.trials = o.trials;
  r.q = o.q;
  if (o.t_points) r.t_points = *o.t_points;
  ebc::cli::ReportKind kind;
  try {
    kind = ebc::cli::report_kind_from_string(o.kind);
  } catch (const ebc::PreconditionError& e) {
    throw UsageError(e.what());
  }
  emit(ebc::cli::run_report(kind, r), o);
  return kOk;
}

int dispatch(const Options& o) {
  using ebc::cli::CurveKind;
  if (o.command == "calibrate") return run_calibrate(o);
  if (o.command == "validate") return run_validate(o);
  if (o.command == "report") return run_report(o);
  if (!o.kind.empty()) throw UsageError("unexpected argument '" + o.kind + "'");
  const auto [p, variant] = model_from(o);
  if (o.command == "density") {
    emit(ebc::cli::density_table(p, variant, grid_from(o)), o);
    return kOk;
  }
  const CurveKind k = o.command == "pod" ? CurveKind::pod : o.command == "hazard" ? CurveKind::hazard : CurveKind::spread;
  emit(ebc::cli::curve_table(k, p, variant, grid_from(o)), o);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Default probabilities and credit spreads with a radiation default barrier"};
  app.set_config("--config", "", "key=value file with the same names as the flags; flags override it");
  Options o;
  app.add_option("command", o.command, "pod, hazard, spread, density, calibrate, validate or report")
      ->required()
      ->check(CLI::IsMember({"pod", "hazard", "spread", "density", "calibrate", "validate", "report"}));
  app.add_option("kind", o.kind, "report kind: table1, table2, fig1, fig2 or fig3");
  app.add_option("--a-tilde", o.a_tilde, "drift over volatility");
  app.add_option("--x0-tilde", o.x0_tilde, "initial distance to default over volatility")->check(CLI::NonNegativeNumber);
  app.add_option("--kc-tilde", o.kc_tilde, "barrier default rate over volatility")->check(CLI::NonNegativeNumber);
  app.add_option("--delta-tilde", o.delta_tilde, "initial-distance uncertainty over volatility")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--sigma", o.sigma, "asset volatility per sqrt(year)")->check(CLI::PositiveNumber);
  app.add_option("--variant", o.variant, "radiation or absorbing");
  app.add_option("--preset", o.preset, "published fit")->check(CLI::IsMember({"b_bc", "b_ebc", "bb_bc", "bb_ebc"}));
  app.add_option("--t-min", o.t_min, "first horizon in years");
  app.add_option("--t-max", o.t_max, "last horizon in years (density: evaluation time)");
  app.add_option("--t-points", o.t_points, "number of grid points");
  app.add_option("--dataset", o.dataset, "CSV with header year,pod_percent[,weight]");
  app.add_option("--label", o.label, "dataset label; without --dataset selects embedded data B or BB");
  app.add_option("--weights", o.weights, "comma-separated weights, one per dataset row");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--trials", o.trials, "random-search trials")->check(CLI::PositiveNumber);
  app.add_option("--q", o.q, "search contraction factor in (0, 1]");
  app.add_option("--out", o.out, "output file (default stdout)");
  app.add_flag("--quick", o.quick, "reduced validation run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return dispatch(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ebc::DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kData;
  } catch (const ebc::PreconditionError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ebc::DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ebc::Error& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kNumerical;
  }
}
