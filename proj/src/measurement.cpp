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

#include "casimir/measurement.hpp"

#include <cmath>
#include <sstream>

#include "casimir/errors.hpp"

namespace casimir {

EmitterSteadyState steady_state(double epsilon, double detuning_over_gamma) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw DomainError("steady_state: saturation parameter must lie in [0, 1)");
  }
  // ᾱ ∝ Γ/2, β̄ ∝ Δ, both over Δ² + Γ²/4; normalized so ᾱ² + β̄² = ε.
  const double norm = std::hypot(detuning_over_gamma, 0.5);
  const double root = std::sqrt(epsilon);
  return {-1.0 + 0.5 * epsilon, root * 0.5 / norm, root * detuning_over_gamma / norm, epsilon};
}

double renormalized_coupling(const CouplingGradient& g, double epsilon) {
  return std::abs(g.g_value) * std::sqrt(2.0) * (1.0 - 0.375 * epsilon);
}

double detection_efficiency(const InteractionResult& ir, double eta_det) {
  if (!(ir.Gamma > 0.0)) throw DomainError("detection_efficiency: total decay rate must be positive");
  return eta_det * ir.Gamma_rad / ir.Gamma;
}

CouplingResult kappa(const ScenarioParams& s, const InteractionResult& ir,
                     const CouplingGradient& cg) {
  CouplingResult r;
  const double eps = s.drive.epsilon;
  const double wM = s.mechanics.omegaM;
  r.g_bar_si = renormalized_coupling(cg, eps);
  r.g_bar = r.g_bar_si * s.mechanics.x_zpm;
  r.nu = detection_efficiency(ir, s.drive.eta_det);
  r.Gamma = ir.Gamma;
  r.Gamma_det = r.nu * ir.Gamma;
  r.Gamma_N = ir.Gamma - r.Gamma_det;
  r.kappa = 2.0 * r.g_bar * std::sqrt(eps * r.nu / ir.Gamma);
  r.kappa_ideal = 2.0 * r.g_bar * std::sqrt(eps / ir.Gamma);
  if (r.kappa > 0.0) r.kappa_inv_si = s.mechanics.x_zpm / r.kappa;
  r.merit = r.kappa * r.kappa / wM;
  r.merit_ideal = r.kappa_ideal * r.kappa_ideal / wM;
  r.quantum_regime = r.kappa_inv_si.has_value() &&
                     *r.kappa_inv_si < s.mechanics.x_zpm / std::sqrt(wM);
  return r;
}

std::optional<std::string> drive_consistency_warning(const DriveParams& drive, double Gamma) {
  if (!drive.rabi || !drive.detuning) return std::nullopt;
  const double eps = saturation_parameter(*drive.rabi, *drive.detuning, Gamma);
  if (std::abs(eps - drive.epsilon) <= 1e-6 * drive.epsilon) return std::nullopt;
  std::ostringstream msg;
  msg << "drive: Rabi frequency and detuning give epsilon = " << eps
      << " at the surface-modified linewidth, configured epsilon = " << drive.epsilon;
  return msg.str();
}

OperatingPoint evaluate_operating_point(const ScenarioParams& s) {
  OperatingPoint op;
  op.interaction = interaction(s.distance, s.emitter, s.graphene, s.constants);
  op.gradient = transition_gradient(s.distance, s.emitter, s.graphene, s.constants);
  op.coupling = kappa(s, op.interaction, op.gradient);
  return op;
}

}  // namespace casimir
