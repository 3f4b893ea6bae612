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
#include <string_view>

#include "casimir/config.hpp"
#include "casimir/constants.hpp"

namespace casimir {

/// Two-level emitter. Frequencies are angular (rad/s).
struct EmitterParams {
  double omega0 = 0.0;
  double Gamma0 = 0.0;
  /// Multiplies cΓ₀/ω₀² in the ground-state shift integral. 1 corresponds to an
  /// orientation-averaged dipole, consistent with the decay-rate and
  /// excited-state prefactors.
  double ground_shift_prefactor = 1.0;

  static EmitterParams from_wavelength(double lambda0, double Gamma0,
                                       const PhysicalConstants& pc = kConstants);
  double lambda0(const PhysicalConstants& pc = kConstants) const;
  double k0(const PhysicalConstants& pc = kConstants) const;
};

/// Doped graphene sheet. `mu` is the Fermi energy divided by ħ.
struct GrapheneParams {
  double mu = 0.0;       // rad/s
  double gamma_g = 0.0;  // rad/s
  /// Forces σ ≡ 0 (free space); used to check the no-surface limit.
  bool transparent = false;

  /// Same sheet with frequencies expressed in units of `omega_ref`.
  GrapheneParams scaled(double omega_ref) const {
    return {mu / omega_ref, gamma_g / omega_ref, transparent};
  }
};

struct MechanicalParams {
  double omegaM = 0.0;  // rad/s
  double mass = 0.0;    // kg
  double Q = 0.0;
  double T_bath = 0.0;  // K
  // derived
  double gamma = 0.0;   // rad/s, omegaM / Q
  double x_zpm = 0.0;   // m, sqrt(hbar / (m omegaM))
  double n_th = 0.0;    // kB T / (hbar omegaM)

  static MechanicalParams make(double omegaM, double mass, double Q, double T_bath,
                               const PhysicalConstants& pc = kConstants);
};

struct DriveParams {
  double epsilon = 0.0;
  double eta_det = 0.0;
  /// Optional Rabi frequency and detuning (rad/s). When present the drive is
  /// reported through them; ε remains the quantity used downstream.
  std::optional<double> rabi;
  std::optional<double> detuning;
};

struct ScenarioParams {
  PhysicalConstants constants{};
  EmitterParams emitter;
  GrapheneParams graphene;
  MechanicalParams mechanics;
  DriveParams drive;
  double distance = 0.0;  // m

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// ε = Ω²/(Δ² + Γ²/4).
double saturation_parameter(double rabi, double detuning, double Gamma);

/// Operating point of the graphene resonator example (d = 18 nm, μ = 0.8ħω₀).
ScenarioParams reference_scenario();

ScenarioParams scenario_from_config(const Config& cfg);

/// Parses and validates INI text. See `scenario_schema()` for the key list.
ScenarioParams load_scenario(std::string_view config_text);

/// Documented key list with units, as emitted by `casimir-sense schema`.
std::string scenario_schema();

/// INI text that `load_scenario` maps back to `s`.
std::string to_config_text(const ScenarioParams& s);

/// Dimensionless scenario: frequencies in units of ω₀, lengths in units of
/// 1/k₀, mechanical quadratures in units of x_zpm (vacuum covariance = 1).
struct NaturalScenario {
  // reference scales (SI)
  double omega0 = 0.0;
  double k0 = 0.0;
  double x_zpm = 0.0;
  // dimensionless
  double Gamma0 = 0.0;
  double distance = 0.0;
  GrapheneParams graphene;
  double omegaM = 0.0;
  double gamma = 0.0;
  double n_th = 0.0;
  double epsilon = 0.0;
  double eta_det = 0.0;
  double ground_shift_prefactor = 1.0;
  std::optional<double> rabi;
  std::optional<double> detuning;
  PhysicalConstants constants{};

  ScenarioParams to_si() const;
};

NaturalScenario natural_units(const ScenarioParams& s);

}  // namespace casimir
