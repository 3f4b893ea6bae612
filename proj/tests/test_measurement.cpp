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

#include <cmath>

#include "casimir/errors.hpp"
#include "casimir/measurement.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace casimir;
using testing::kTwoPi;
using testing::rel_diff;

namespace {

InteractionResult rates(double Gamma, double Gamma_rad) {
  InteractionResult ir;
  ir.Gamma = Gamma;
  ir.Gamma_rad = Gamma_rad;
  ir.Gamma_nonrad = Gamma - Gamma_rad;
  return ir;
}

CouplingGradient gradient(double g) { return {18e-9, g, 18e-11, 0.0}; }

}  // namespace

TEST_CASE("emitter steady state") {
  CHECK(steady_state(0.0).sz_inf == -1.0);
  CHECK(steady_state(0.3).sz_inf == doctest::Approx(-0.85));
  for (double eps : {0.01, 0.1, 0.3, 0.9}) {
    for (double x : {-3.0, 0.0, 0.2, 5.0}) {
      const auto st = steady_state(eps, x);
      CHECK(std::abs(st.alpha_bar * st.alpha_bar + st.beta_bar * st.beta_bar - eps) < 1e-12);
      CHECK(std::abs(st.sz_inf - (-1.0 + eps / 2.0)) <= eps * eps);
    }
  }
  CHECK(steady_state(0.1).beta_bar == 0.0);
  CHECK_THROWS_AS(steady_state(1.0), DomainError);
  CHECK_THROWS_AS(steady_state(-0.1), DomainError);
}

TEST_CASE("renormalized coupling") {
  const double g = kTwoPi * 16e9 / 1e-9;
  CHECK(renormalized_coupling(gradient(g), 0.0) == doctest::Approx(std::sqrt(2.0) * g));
  CHECK(rel_diff(renormalized_coupling(gradient(g), 0.3), 1.2551 * g) < 1e-4);
  CHECK(renormalized_coupling(gradient(-g), 0.3) == renormalized_coupling(gradient(g), 0.3));
}

TEST_CASE("detection efficiency") {
  CHECK(detection_efficiency(rates(1.0, 0.54), 0.75) == doctest::Approx(0.405));
  CHECK(detection_efficiency(rates(2.0, 2.0), 1.0) == 1.0);
  CHECK(detection_efficiency(rates(2.0, 1.0), 0.0) == 0.0);
  CHECK_THROWS_AS(detection_efficiency(rates(0.0, 0.0), 0.5), DomainError);
}

TEST_CASE("coupling rate identities and limits") {
  const ScenarioParams s = reference_scenario();
  const InteractionResult ir = rates(2.0 * s.emitter.Gamma0, 1.0 * s.emitter.Gamma0);
  const CouplingGradient cg = gradient(kTwoPi * 20e9 / 1e-9);
  const CouplingResult k = kappa(s, ir, cg);

  CHECK(k.nu == doctest::Approx(0.375));
  CHECK(rel_diff(k.g_bar, k.g_bar_si * s.mechanics.x_zpm) < 1e-15);
  CHECK(rel_diff(k.kappa * k.kappa, 4.0 * s.drive.epsilon * k.g_bar * k.g_bar * k.nu / ir.Gamma) < 1e-12);
  const double via_rates = 2.0 * k.g_bar * std::sqrt(s.drive.epsilon * k.Gamma_det) / ir.Gamma;
  CHECK(rel_diff(k.kappa, via_rates) < 1e-12);
  CHECK(rel_diff(k.Gamma_det + k.Gamma_N, ir.Gamma) < 1e-15);
  REQUIRE(k.kappa_inv_si.has_value());
  CHECK(rel_diff(*k.kappa_inv_si, s.mechanics.x_zpm / k.kappa) < 1e-15);
  CHECK(rel_diff(k.merit, k.kappa * k.kappa / s.mechanics.omegaM) < 1e-15);
  CHECK(rel_diff(k.merit_ideal, k.merit / k.nu) < 1e-12);
  CHECK(k.quantum_regime == (k.merit > 1.0));

  SUBCASE("no detected photons") {
    ScenarioParams dark = s;
    dark.drive.eta_det = 0.0;
    const CouplingResult z = kappa(dark, ir, cg);
    CHECK(z.nu == 0.0);
    CHECK(z.kappa == 0.0);
    CHECK_FALSE(z.kappa_inv_si.has_value());
    CHECK_FALSE(z.quantum_regime);
  }
}

TEST_CASE("coupling rate grows with efficiency and drive") {
  const ScenarioParams base = reference_scenario();
  const InteractionResult ir = rates(2.0 * base.emitter.Gamma0, 1.5 * base.emitter.Gamma0);
  const CouplingGradient cg = gradient(kTwoPi * 20e9 / 1e-9);
  double prev = -1.0;
  for (double eta : {0.0, 0.1, 0.4, 0.75, 1.0}) {
    ScenarioParams s = base;
    s.drive.eta_det = eta;
    const double k = kappa(s, ir, cg).kappa;
    CHECK(k > prev);
    prev = k;
  }
  // κ² ∝ ε·ḡ² with ḡ ∝ (1 − 3ε/8).
  ScenarioParams ref = base;
  ref.drive.epsilon = 0.1;
  const double norm = kappa(ref, ir, cg).merit / 0.1 / std::pow(1.0 - 0.0375, 2);
  for (double eps : {0.05, 0.2, 0.3, 0.6, 0.9}) {
    ScenarioParams s = base;
    s.drive.epsilon = eps;
    const CouplingResult k = kappa(s, ir, cg);
    CHECK(std::abs(k.merit / eps / std::pow(1.0 - 0.375 * eps, 2) / norm - 1.0) < 1e-9);
  }
  prev = -1.0;
  for (double eps : {0.05, 0.2, 0.3, 0.6}) {
    ScenarioParams s = base;
    s.drive.epsilon = eps;
    const double k = kappa(s, ir, cg).kappa;
    CHECK(k > prev);
    prev = k;
  }
}

TEST_CASE("operating point is in the quantum regime") {
  const OperatingPoint op = evaluate_operating_point(reference_scenario());
  CHECK(op.coupling.merit > 1.0);
  CHECK(op.coupling.merit_ideal > op.coupling.merit);
  CHECK(op.coupling.quantum_regime);
}

TEST_CASE("drive consistency warning") {
  DriveParams d{0.3, 0.75, std::nullopt, std::nullopt};
  CHECK_FALSE(drive_consistency_warning(d, 1.0).has_value());
  // Ω²/(Γ²/4) = 0.3 at Γ = 1.
  d.rabi = std::sqrt(0.075);
  d.detuning = 0.0;
  CHECK_FALSE(drive_consistency_warning(d, 1.0).has_value());
  CHECK(drive_consistency_warning(d, 2.0).has_value());
}
