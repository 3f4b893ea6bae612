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

// Truncated-Fock-space stochastic master equation for a monitored, damped
// oscillator in the lab frame. Conditional state under homodyne detection of
// c = √k·x with efficiency η, zero-temperature damping L = √γ·a, and
// H = ωM·a†a, integrated with a positivity-preserving first-order scheme.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

struct SmeParams {
  double omegaM = 1.0;
  double gamma = 0.0;
  double k = 0.0;    // measurement strength of c = √k·x
  double eta = 1.0;  // detection efficiency
  int dim = 30;
  double dt = 1e-3;
  double t_end = 1.0;
  std::size_t record_every = 1000;
  std::uint64_t seed = 1;
};

struct SmeSample {
  double t = 0.0;
  double Vx = 0.0;  // 2(<x²> - <x>²), vacuum = 1
  double Vp = 0.0;
  double trace_error = 0.0;  // |tr ρ - 1| before renormalization
  double top_population = 0.0;  // population of the highest Fock level
};

inline std::vector<SmeSample> run_sme(const SmeParams& p) {
  using M = Eigen::MatrixXcd;
  using cd = std::complex<double>;
  const int n = p.dim;
  const cd i(0.0, 1.0);

  M a = M::Zero(n, n);
  for (int j = 1; j < n; ++j) a(j - 1, j) = std::sqrt(static_cast<double>(j));
  const M ad = a.adjoint();
  const M x = (a + ad) / std::sqrt(2.0);
  const M pm = (a - ad) / (i * std::sqrt(2.0));
  const M x2 = x * x;
  const M p2 = pm * pm;
  const M c = std::sqrt(p.k) * x;
  const M c2 = c * c;
  const M L = std::sqrt(p.gamma) * a;
  const M H = p.omegaM * ad * a;
  const M I = M::Identity(n, n);
  const M A = I - (i * H + 0.5 * c.adjoint() * c + 0.5 * L.adjoint() * L) * p.dt;

  M rho = M::Zero(n, n);
  rho(0, 0) = 1.0;

  std::mt19937_64 rng(p.seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(p.dt));

  auto sample = [&](double t, double err) {
    const double ex = (x * rho).trace().real();
    const double ep = (pm * rho).trace().real();
    return SmeSample{t, 2.0 * ((x2 * rho).trace().real() - ex * ex),
                     2.0 * ((p2 * rho).trace().real() - ep * ep), err, rho(n - 1, n - 1).real()};
  };

  std::vector<SmeSample> out{sample(0.0, 0.0)};
  const auto steps = static_cast<std::size_t>(std::llround(p.t_end / p.dt));
  const double se = std::sqrt(p.eta);
  for (std::size_t s = 1; s <= steps; ++s) {
    const double mean_c = (c * rho).trace().real();
    const double dy = 2.0 * se * mean_c * p.dt + normal(rng);
    const M K = A + se * dy * c + 0.5 * p.eta * (dy * dy - p.dt) * c2;
    M next = K * rho * K.adjoint() + (1.0 - p.eta) * p.dt * c * rho * c.adjoint() +
             p.dt * L * rho * L.adjoint();
    const double tr = next.trace().real();
    rho = 0.5 * (next + next.adjoint()) / tr;
    if (s % p.record_every == 0) out.push_back(sample(static_cast<double>(s) * p.dt, std::abs(tr - 1.0)));
  }
  return out;
}

}  // namespace oracle
