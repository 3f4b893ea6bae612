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

#include <optional>
#include <string>

#include "casimir/interaction.hpp"
#include "casimir/scenario.hpp"

namespace casimir {

/// Weakly driven emitter, linearized to first order in ε.
struct EmitterSteadyState {
  double sz_inf = -1.0;
  double alpha_bar = 0.0;
  double beta_bar = 0.0;
  double epsilon = 0.0;
};

struct CouplingResult {
  double g_bar_si = 0.0;     // rad/s per m
  double g_bar = 0.0;        // rad/s per x_zpm
  double nu = 0.0;           // detection efficiency
  double Gamma = 0.0;        // surface-modified total decay rate, rad/s
  double Gamma_det = 0.0;    // nu * Gamma
  double Gamma_N = 0.0;      // Gamma - Gamma_det
  double kappa = 0.0;        // 1/sqrt(s), position in x_zpm units
  double kappa_ideal = 0.0;  // same with nu = 1
  std::optional<double> kappa_inv_si;  // m/sqrt(Hz); empty when kappa = 0
  double merit = 0.0;        // kappa^2 / omegaM
  double merit_ideal = 0.0;  // kappa_ideal^2 / omegaM
  /// kappa^-1 < x_zpm / sqrt(omegaM): resolving x_zpm within one inverse
  /// mechanical frequency.
  bool quantum_regime = false;
};

/// Steady state of the driven, decaying emitter. `detuning_over_gamma` is
/// Δ/Γ; only the split of ε between ᾱ and β̄ depends on it.
EmitterSteadyState steady_state(double epsilon, double detuning_over_gamma = 0.0);

/// ḡ = |g|·√2·(1 − 3ε/8), rad/s per m.
double renormalized_coupling(const CouplingGradient& g, double epsilon);

/// ν = η_det·Γ_rad/Γ.
double detection_efficiency(const InteractionResult& ir, double eta_det);

CouplingResult kappa(const ScenarioParams& s, const InteractionResult& ir,
                     const CouplingGradient& cg);

/// Non-empty when the optional (Ω, Δ) drive disagrees with the configured ε
/// at the surface-modified linewidth Γ by more than 1e-6 relative.
std::optional<std::string> drive_consistency_warning(const DriveParams& drive, double Gamma);

/// Everything needed to characterize one (d, μ) point.
struct OperatingPoint {
  InteractionResult interaction;
  CouplingGradient gradient;
  CouplingResult coupling;
};

OperatingPoint evaluate_operating_point(const ScenarioParams& s);

}  // namespace casimir
