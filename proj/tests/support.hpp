#pragma once

// Numerical helpers shared by the test suites. Everything here is
// independent of the library's own evaluation paths.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <cstdint>
#include <random>

#include "ebc/params.hpp"

namespace ebc::test {

template <typename F>
double integrate(F&& f, double lo, double hi, double tol = 1e-13) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 20, tol);
}

// Integral over [lo, inf) split at the given breakpoint so peaked
// integrands are resolved.
template <typename F>
double integrate_to_infinity(F&& f, double lo, double split, double tol = 1e-13) {
  boost::math::quadrature::exp_sinh<double> tail;
  return integrate(f, lo, split, tol) + tail.integrate([&](double x) { return f(x + split); }, tol);
}

template <typename F>
double central_difference(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double relative_error(double got, double want) { return std::abs(got - want) / std::abs(want); }

// Random parameter lattices for property tests, in normalized units scaled
// by a random sigma.
class ParamGenerator {
 public:
  explicit ParamGenerator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  ModelParams radiation() {
    const double sigma = uniform(0.1, 2.0);
    return NormalizedParams{uniform(-0.5, 0.5), uniform(0.05, 3.5), uniform(0.01, 3.0)}.with_sigma(sigma);
  }

  double horizon() { return std::exp(uniform(std::log(0.01), std::log(50.0))); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ebc::test
