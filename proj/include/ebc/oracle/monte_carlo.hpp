#pragma once

// Monte Carlo paths of dx = a dt + sigma dW with a barrier at 0.
//
// Absorbing mode kills a path when a step ends below 0 or, with the
// Brownian-bridge probability exp(-2 x x' / (sigma^2 h)), when it touched 0
// in between. Radiation mode reflects at 0 and kills each step that touched
// the barrier with probability c kc sqrt(h) / sigma. A touch happens on
// average sqrt(2/pi) sigma sqrt(h) p(0) times per unit length per step, so
// c = sqrt(pi/2) reproduces the default rate kc p(0).
//
// Away from the barrier paths take exact Gaussian steps of h = dt 2^k,
// chosen so the start sits at least 8 sqrt(h) sigma above the drifted
// barrier; the skipped touch probability is below 1e-15 per step.

#include <boost/random/normal_distribution.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <thread>
#include <vector>

#include "ebc/errors.hpp"
#include "ebc/oracle/fpe.hpp"
#include "ebc/oracle/philox.hpp"
#include "ebc/params.hpp"

namespace ebc::oracle {

/// Per-touch kill constant for the radiation barrier.
inline const double kContactConstant = std::sqrt(std::numbers::pi / 2.0);

struct McSpec {
  std::int64_t n_paths = 1'000'000;
  double dt = 1e-3;
  std::uint64_t seed = 1981;
  Boundary boundary = Boundary::radiation;
  double contact_constant = kContactConstant;
  bool bridge = true;   // Brownian-bridge touch detection
  bool coarsen = true;  // large steps far from the barrier
  unsigned workers = 0; // 0: hardware concurrency

  void validate() const {
    if (n_paths < 10'000) throw PreconditionError("Monte Carlo needs at least 1e4 paths");
    if (!(dt > 0.0) || dt > 1e-2) throw PreconditionError("Monte Carlo dt must be in (0, 1e-2]");
    if (!(contact_constant > 0.0)) throw PreconditionError("contact constant must be positive");
  }
};

namespace detail {

inline constexpr int kMaxLevel = 40;

class PathKernel {
 public:
  PathKernel(const ModelParams& p, const McSpec& m, bool absorbing)
      : a_(p.a), sigma_(p.sigma), kc_(p.kc), x0_(p.x0), c_(m.contact_constant), absorbing_(absorbing),
        bridge_(m.bridge), max_level_(m.coarsen ? kMaxLevel : 0) {
    for (int k = 0; k <= kMaxLevel; ++k) {
      const double h = m.dt * std::ldexp(1.0, k);
      h_[k] = h;
      sqrt_h_[k] = std::sqrt(h);
      safe_[k] = 8.0 * sigma_ * sqrt_h_[k] - std::min(a_, 0.0) * h;
      kill_[k] = c_ * kc_ * sqrt_h_[k] / sigma_;
    }
  }

  // Fine-step index of default, or -1 if the path survives to `last`.
  // Increments come from `normals` alone, so switching the bridge off
  // leaves the Gaussian path unchanged.
  std::int64_t run(PathStream& normals, PathStream& uniforms, std::int64_t last) const {
    boost::random::normal_distribution<double> gauss;
    double x = x0_;
    std::int64_t step = 0;
    int level = 0;
    auto fits = [&](int k) {
      const std::int64_t span = std::int64_t{1} << k;
      return (step & (span - 1)) == 0 && step + span <= last && x >= safe_[k];
    };
    while (step < last) {
      while (level > 0 && !fits(level)) --level;
      while (level < max_level_ && fits(level + 1)) ++level;
      const double h = h_[level];
      double next = x + a_ * h + sigma_ * sqrt_h_[level] * gauss(normals);
      step += std::int64_t{1} << level;

      bool touched = next <= 0.0;
      if (!touched && bridge_) {
        const double e = 2.0 * x * next / (sigma_ * sigma_ * h);
        touched = e < 40.0 && uniforms.uniform() < std::exp(-e);
      }
      if (absorbing_) {
        if (touched) return step;
      } else {
        next = std::abs(next);
        if (touched && kc_ > 0.0 && uniforms.uniform() < kill_[level]) return step;
      }
      x = next;
    }
    return -1;
  }

 private:
  double a_, sigma_, kc_, x0_, c_;
  bool absorbing_, bridge_;
  int max_level_;
  std::array<double, kMaxLevel + 1> h_{}, sqrt_h_{}, safe_{}, kill_{};
};

}  // namespace detail

/// Simulates PoD at the given report times, which must be positive,
/// increasing and multiples of dt. Results are identical for any worker
/// count.
inline OracleCurve mc_simulate(const ModelParams& p, const McSpec& m, std::span<const double> times) {
  m.validate();
  if (times.empty()) throw PreconditionError("no report times");
  std::vector<std::int64_t> marks;
  for (double t : times) {
    const double steps = t / m.dt;
    const double r = std::round(steps);
    if (!(t > 0.0) || std::abs(steps - r) > 1e-6 * std::max(1.0, r))
      throw PreconditionError("report times must be positive multiples of dt");
    if (!marks.empty() && static_cast<std::int64_t>(r) <= marks.back())
      throw PreconditionError("report times must increase");
    marks.push_back(static_cast<std::int64_t>(r));
  }

  const bool absorbing = m.boundary == Boundary::absorbing || std::isinf(p.kc);
  const detail::PathKernel kernel(p, m, absorbing);

  unsigned workers = m.workers ? m.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::int64_t>(workers, m.n_paths));
  std::vector<std::vector<std::int64_t>> counts(workers, std::vector<std::int64_t>(marks.size(), 0));

  auto work = [&](unsigned w) {
    const std::int64_t begin = m.n_paths * w / workers;
    const std::int64_t end = m.n_paths * (w + 1) / workers;
    for (std::int64_t path = begin; path < end; ++path) {
      PathStream normals(m.seed, static_cast<std::uint64_t>(path), 0);
      PathStream uniforms(m.seed, static_cast<std::uint64_t>(path), 1);
      const std::int64_t died = kernel.run(normals, uniforms, marks.back());
      if (died < 0) continue;
      const auto bucket = std::lower_bound(marks.begin(), marks.end(), died) - marks.begin();
      ++counts[w][bucket];
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  OracleCurve out;
  std::int64_t cumulative = 0;
  const double n = static_cast<double>(m.n_paths);
  for (std::size_t k = 0; k < marks.size(); ++k) {
    for (unsigned w = 0; w < workers; ++w) cumulative += counts[w][k];
    const double v = static_cast<double>(cumulative) / n;
    out.t.push_back(times[k]);
    out.pod.push_back(v);
    out.error.push_back(std::sqrt(v * (1.0 - v) / n));
  }
  return out;
}

/// Runs at several dt and extrapolates to dt = 0 with the interpolating
/// polynomial in sqrt(dt). Each run uses its own seed.
struct McExtrapolation {
  std::vector<double> dts;
  std::vector<OracleCurve> runs;
  OracleCurve extrapolated;
};

inline McExtrapolation mc_extrapolate(const ModelParams& p, const McSpec& m, std::span<const double> times,
                                      std::vector<double> dts = {1e-2, 1e-3, 1e-4}) {
  if (dts.size() < 2) throw PreconditionError("extrapolation needs at least two step sizes");
  McExtrapolation out;
  out.dts = dts;
  for (std::size_t i = 0; i < dts.size(); ++i) {
    McSpec run = m;
    run.dt = dts[i];
    run.seed = m.seed + 0x9E3779B97F4A7C15ull * (i + 1);
    out.runs.push_back(mc_simulate(p, run, times));
  }
  // Lagrange weights at s = 0 for nodes s_i = sqrt(dt_i).
  std::vector<double> weight(dts.size(), 1.0);
  for (std::size_t i = 0; i < dts.size(); ++i) {
    for (std::size_t j = 0; j < dts.size(); ++j) {
      if (i == j) continue;
      const double si = std::sqrt(dts[i]), sj = std::sqrt(dts[j]);
      weight[i] *= sj / (sj - si);
    }
  }
  out.extrapolated.t.assign(times.begin(), times.end());
  for (std::size_t k = 0; k < times.size(); ++k) {
    double v = 0.0, var = 0.0;
    for (std::size_t i = 0; i < dts.size(); ++i) {
      v += weight[i] * out.runs[i].pod[k];
      var += weight[i] * weight[i] * out.runs[i].error[k] * out.runs[i].error[k];
    }
    out.extrapolated.pod.push_back(std::clamp(v, 0.0, 1.0));
    out.extrapolated.error.push_back(std::sqrt(var));
  }
  return out;
}

}  // namespace ebc::oracle
