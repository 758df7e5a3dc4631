#pragma once

// Fitting (a~, x0~[, kc~]) to an observed cumulative-PoD term structure by
// minimising the weighted RMSD with a multiplicative random search: each
// trial draws every free parameter uniformly from [z q, z / q] around the
// current incumbent and keeps the proposal only if the RMSD drops.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ebc/black_cox.hpp"
#include "ebc/errors.hpp"
#include "ebc/extended.hpp"
#include "ebc/params.hpp"
#include "ebc/reference_data.hpp"

namespace ebc {

struct DataPoint {
  double t;       // years
  double pod;     // fraction
  double weight = 1.0;
};

/// Observed cumulative PoD by horizon for one rating category.
class HistoricalDataset {
 public:
  HistoricalDataset(std::string label, std::vector<DataPoint> points)
      : label_(std::move(label)), points_(std::move(points)) {
    if (points_.size() < 2) throw DataError("dataset needs at least 2 points");
    for (std::size_t i = 0; i < points_.size(); ++i) {
      const DataPoint& p = points_[i];
      if (!(p.t > 0.0) || !std::isfinite(p.t)) throw DataError("horizon must be positive, row " + std::to_string(i + 1));
      if (i > 0 && !(p.t > points_[i - 1].t))
        throw DataError("horizons must be strictly increasing, row " + std::to_string(i + 1));
      if (!(p.pod >= 0.0 && p.pod <= 1.0)) throw DataError("PoD outside [0, 1], row " + std::to_string(i + 1));
      if (!(p.weight >= 0.0) || !std::isfinite(p.weight))
        throw DataError("weight must be non-negative, row " + std::to_string(i + 1));
    }
  }

  const std::string& label() const { return label_; }
  const std::vector<DataPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  /// Non-fatal findings, such as a cumulative PoD that decreases.
  std::vector<std::string> warnings() const {
    std::vector<std::string> out;
    for (std::size_t i = 1; i < points_.size(); ++i) {
      if (points_[i].pod < points_[i - 1].pod)
        out.push_back("cumulative PoD decreases at t=" + std::to_string(points_[i].t));
    }
    return out;
  }

  HistoricalDataset with_weights(std::span<const double> w) const {
    if (w.size() != points_.size()) throw DataError("weight count does not match dataset size");
    std::vector<DataPoint> pts = points_;
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i].weight = w[i];
    return {label_, std::move(pts)};
  }

 private:
  std::string label_;
  std::vector<DataPoint> points_;
};

/// Embedded observed data for rating "B" or "BB", unit weights.
inline HistoricalDataset reference_dataset(std::string_view rating) {
  const auto pct = reference::observed_percent(rating);
  std::vector<DataPoint> pts;
  for (std::size_t i = 0; i < pct.size(); ++i) pts.push_back({double(reference::kTableOne[i].year), pct[i] / 100.0});
  return {std::string(rating), std::move(pts)};
}

struct CalibrationConfig {
  Boundary variant = Boundary::radiation;
  double q = 0.8;
  int trials = 10'000;
  std::uint64_t seed = 1981;
  NormalizedParams initial{0.2, 2.0, 0.2};
  double floor = 1e-6;

  /// q = 1 is accepted as the degenerate zero-width search.
  void validate() const {
    if (!(q > 0.0 && q <= 1.0)) throw PreconditionError("q must lie in (0, 1]");
    if (trials < 1) throw PreconditionError("trials must be at least 1");
    if (!(floor > 0.0)) throw PreconditionError("parameter floor must be positive");
    if (!(initial.a_tilde > 0.0) || !(initial.x0_tilde > 0.0))
      throw PreconditionError("initial a~ and x0~ must be positive");
    if (variant == Boundary::radiation && !(initial.kc_tilde > 0.0))
      throw PreconditionError("initial kc~ must be positive");
  }
};

struct CalibrationResult {
  NormalizedParams params;
  double rho = 0.0;  // percentage points
  int trials_run = 0;
  int improvements = 0;
  std::uint64_t seed = 0;
  Boundary variant = Boundary::radiation;

  friend bool operator==(const CalibrationResult&, const CalibrationResult&) = default;
};

/// Thrown when the model cannot be evaluated at a proposal.
class ObjectiveError : public Error {
 public:
  ObjectiveError(int trial, const std::string& what)
      : Error("objective failed at trial " + std::to_string(trial) + ": " + what), trial_(trial) {}
  int trial() const { return trial_; }

 private:
  int trial_;
};

/// Model PoD for normalised parameters (sigma = 1); kc~ is ignored for the
/// absorbing variant.
inline double model_pod(double t, const NormalizedParams& z, Boundary variant) {
  const ModelParams p{z.a_tilde, 1.0, z.x0_tilde, variant == Boundary::absorbing ? 0.0 : z.kc_tilde};
  return pod(t, p, variant);
}

/// Weighted RMSD in percentage points.
inline double rmsd(const NormalizedParams& z, const HistoricalDataset& d, Boundary variant) {
  double sum = 0.0, weight = 0.0;
  for (const DataPoint& p : d.points()) {
    const double r = 100.0 * (model_pod(p.t, z, variant) - p.pod);
    sum += p.weight * r * r;
    weight += p.weight;
  }
  if (!(weight > 0.0)) throw DataError("weights sum to zero");
  return std::sqrt(sum / weight);
}

inline CalibrationResult calibrate(const HistoricalDataset& d, const CalibrationConfig& c) {
  c.validate();
  const bool radiation = c.variant == Boundary::radiation;
  std::mt19937_64 rng(c.seed);
  // Fixed bit-to-double mapping so the chain is identical on every platform.
  auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto propose = [&](double z) { return std::max(c.floor, z * c.q + uniform() * (z / c.q - z * c.q)); };

  CalibrationResult best;
  best.params = c.initial;
  if (!radiation) best.params.kc_tilde = 0.0;
  best.params.delta_tilde = 0.0;
  best.rho = rmsd(best.params, d, c.variant);
  best.seed = c.seed;
  best.variant = c.variant;

  for (int trial = 1; trial <= c.trials; ++trial) {
    NormalizedParams z = best.params;
    z.a_tilde = propose(z.a_tilde);
    z.x0_tilde = propose(z.x0_tilde);
    if (radiation) z.kc_tilde = propose(z.kc_tilde);
    double rho;
    try {
      rho = rmsd(z, d, c.variant);
    } catch (const Error& e) {
      throw ObjectiveError(trial, e.what());
    }
    if (rho < best.rho) {
      best.params = z;
      best.rho = rho;
      ++best.improvements;
    }
    best.trials_run = trial;
  }
  return best;
}

/// Model PoD in percent at each horizon.
inline TermStructure fitted_table(const NormalizedParams& z, std::span<const double> horizons, Boundary variant) {
  if (horizons.empty()) throw PreconditionError("no horizons");
  return TermStructure::tabulate(std::vector<double>(horizons.begin(), horizons.end()),
                                 [&](double t) { return 100.0 * model_pod(t, z, variant); });
}

}  // namespace ebc
