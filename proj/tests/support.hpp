// Copyright 2026 The casimir-sense Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "casimir/gaussian.hpp"
#include "casimir/scenario.hpp"

namespace testing {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

/// Least-squares slope of log|y| against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline std::vector<double> logspace(double a, double b, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = a * std::pow(b / a, static_cast<double>(i) / static_cast<double>(n - 1));
  }
  return v;
}

/// Seeded uniform draws for property tests.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }

 private:
  std::mt19937_64 rng_;
};

/// Lossless, perfectly detected, nearly static oscillator: the regime where the
/// conditional variance has a closed form. Natural units, κ = 1.
inline casimir::DynamicsParams ideal_dynamics(double n_th) {
  casimir::DynamicsParams p;
  p.omegaM = 1e-8;
  p.n_th = n_th;
  p.damping = {casimir::DampingKind::momentum, 0.0};
  // a_L = 2·g·√(ε·Γ_det)/Γ = 1 with Γ = Γ_det = 1, ε = 1/4.
  p.split = {1.0, 0.0, 1.0, 0.25, 1.0};
  return p;
}

/// Zero-temperature toy oscillator with κ²/ωM = 0.1 and partial detection.
struct Toy {
  double omegaM = 1.0;
  double gamma = 0.05;
  double kappa2 = 0.1;
  double nu = 0.6;

  casimir::DynamicsParams dynamics() const {
    casimir::DynamicsParams p;
    p.omegaM = omegaM;
    p.n_th = 0.0;
    p.damping = {casimir::DampingKind::symmetric, gamma};
    // Γ = 1, ε = 1/4: a_L = g·√ν, a_N = g·√(1 − ν).
    p.split = {nu, 1.0 - nu, std::sqrt(kappa2 / nu), 0.25, 1.0};
    return p;
  }
};

}  // namespace testing
