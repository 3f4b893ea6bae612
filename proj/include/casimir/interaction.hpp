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

#include "casimir/constants.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/scenario.hpp"

namespace casimir {

/// Level shifts and decay rates at emitter-sheet distance d. All rates and
/// shifts are angular frequencies (rad/s).
struct InteractionResult {
  double d = 0.0;
  double delta_g = 0.0;       // ground-state shift
  double delta_e = 0.0;       // excited-state shift
  double delta_omega = 0.0;   // transition shift, delta_e - delta_g
  double Gamma = 0.0;         // total decay rate
  double Gamma_rad = 0.0;     // into propagating (free-space) modes
  double Gamma_nonrad = 0.0;  // into evanescent modes: absorption and plasmons
};

struct DecayRates {
  double Gamma = 0.0;
  double Gamma_rad = 0.0;
  double Gamma_nonrad = 0.0;
};

/// ∂Δω/∂d in rad/s per m.
struct CouplingGradient {
  double d = 0.0;
  double g_value = 0.0;
  double stencil_step = 0.0;   // largest step used, m
  double error_estimate = 0.0; // |Richardson - finest central difference|
};

/// Tolerances for the nested imaginary-frequency integral.
struct ShiftOptions {
  double outer_rel_tol = 1e-10;
  double inner_rel_tol = 1e-12;
};

/// Returns ∫₀^∞ du u²/(ω₀²+u²) Tr G(d,d,iu) in natural units (c = ω₀ = 1),
/// together with its error estimate. `z` is k₀d.
quad::Result<double> ground_shift_integral(double z, const GrapheneParams& g_natural,
                                           const ShiftOptions& opt = {});

double ground_shift(double d, const EmitterParams& e, const GrapheneParams& g,
                    const PhysicalConstants& pc = kConstants, const ShiftOptions& opt = {});

double excited_shift(double d, const EmitterParams& e, const GrapheneParams& g,
                     const PhysicalConstants& pc = kConstants, const ShiftOptions& opt = {});

DecayRates decay_rates(double d, const EmitterParams& e, const GrapheneParams& g,
                       const PhysicalConstants& pc = kConstants);

/// Shifts and rates together, evaluating each integral once.
InteractionResult interaction(double d, const EmitterParams& e, const GrapheneParams& g,
                              const PhysicalConstants& pc = kConstants,
                              const ShiftOptions& opt = {});

/// Central difference of Δω(d) at steps h = d/100 and h/2, combined by
/// Richardson extrapolation. Throws NumericalError if the extrapolation
/// error exceeds 1% of |g|.
CouplingGradient transition_gradient(double d, const EmitterParams& e, const GrapheneParams& g,
                                     const PhysicalConstants& pc = kConstants);

/// Radiative scattering rate f(d, ω_L) under weak drive normalized to the
/// free-space resonant rate Ω²/Γ₀ (the Rabi frequency cancels).
double scattering_rate(const InteractionResult& ir, double omega_L, const EmitterParams& e);

double scattering_rate_map(double d, double omega_L, const ScenarioParams& s);

}  // namespace casimir
