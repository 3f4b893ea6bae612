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

#include "casimir/scenario.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string_view>

#include "casimir/errors.hpp"

namespace casimir {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace

EmitterParams EmitterParams::from_wavelength(double lambda0, double Gamma0,
                                             const PhysicalConstants& pc) {
  return {kTwoPi * pc.c / lambda0, Gamma0, 1.0};
}

double EmitterParams::lambda0(const PhysicalConstants& pc) const { return kTwoPi * pc.c / omega0; }

double EmitterParams::k0(const PhysicalConstants& pc) const { return omega0 / pc.c; }

MechanicalParams MechanicalParams::make(double omegaM, double mass, double Q, double T_bath,
                                        const PhysicalConstants& pc) {
  MechanicalParams m;
  m.omegaM = omegaM;
  m.mass = mass;
  m.Q = Q;
  m.T_bath = T_bath;
  m.gamma = omegaM / Q;
  m.x_zpm = std::sqrt(pc.hbar / (mass * omegaM));
  m.n_th = pc.kB * T_bath / (pc.hbar * omegaM);
  return m;
}

void ScenarioParams::validate() const {
  if (!(distance > 0.0)) throw ConfigError("geometry.distance_m", "distance must be positive");
  if (!(emitter.omega0 > 0.0)) throw ConfigError("emitter.lambda0_m", "wavelength must be positive");
  if (!(emitter.Gamma0 > 0.0)) throw ConfigError("emitter.gamma0_hz", "decay rate must be positive");
  if (!(emitter.ground_shift_prefactor >= 0.0)) {
    throw ConfigError("emitter.ground_shift_prefactor", "prefactor must be non-negative");
  }
  if (!(graphene.mu >= 0.0)) {
    throw ConfigError("graphene.mu_over_hbar_omega0", "Fermi energy must be non-negative");
  }
  if (!(graphene.gamma_g > 0.0)) {
    throw ConfigError("graphene.omega0_over_gamma_g", "intraband loss rate must be positive");
  }
  if (!(mechanics.omegaM > 0.0)) throw ConfigError("mechanics.omega_m_hz", "frequency must be positive");
  if (!(mechanics.mass > 0.0)) throw ConfigError("mechanics.mass_kg", "mass must be positive");
  if (!(mechanics.Q > 0.0)) throw ConfigError("mechanics.quality_factor", "quality factor must be positive");
  if (!(mechanics.T_bath >= 0.0)) throw ConfigError("mechanics.t_bath_k", "temperature must be non-negative");
  if (!(drive.epsilon > 0.0 && drive.epsilon < 1.0)) {
    throw ConfigError("drive.epsilon", "saturation parameter must lie in (0, 1)");
  }
  if (!(drive.eta_det >= 0.0 && drive.eta_det <= 1.0)) {
    throw ConfigError("drive.eta_det", "collection efficiency must lie in [0, 1]");
  }
  if (drive.rabi.has_value() != drive.detuning.has_value()) {
    throw ConfigError(drive.rabi ? "drive.detuning_hz" : "drive.rabi_hz",
                      "Rabi frequency and detuning must be given together");
  }
}

double saturation_parameter(double rabi, double detuning, double Gamma) {
  return rabi * rabi / (detuning * detuning + 0.25 * Gamma * Gamma);
}

ScenarioParams reference_scenario() {
  ScenarioParams s;
  s.emitter = EmitterParams::from_wavelength(2e-6, kTwoPi * 240e6, s.constants);
  s.graphene = {0.8 * s.emitter.omega0, s.emitter.omega0 / 1e3, false};
  s.mechanics = MechanicalParams::make(kTwoPi * 1e6, 2.81e-18, 5e4, 1.0, s.constants);
  s.drive = {0.3, 0.75, std::nullopt, std::nullopt};
  s.distance = 18e-9;
  return s;
}

ScenarioParams scenario_from_config(const Config& cfg) {
  static constexpr std::array<std::string_view, 18> kKnown{
      "emitter.lambda0_m",     "emitter.gamma0_hz",       "emitter.ground_shift_prefactor",
      "graphene.mu_over_hbar_omega0", "graphene.omega0_over_gamma_g", "graphene.transparent",
      "mechanics.omega_m_hz",  "mechanics.mass_kg",       "mechanics.quality_factor",
      "mechanics.t_bath_k",    "drive.epsilon",           "drive.eta_det",
      "drive.rabi_hz",         "drive.detuning_hz",       "geometry.distance_m",
      "simulation.damping",    "simulation.t_end_s",      "simulation.tau_s"};
  for (const auto& [key, value] : cfg.values()) {
    if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) {
      throw ConfigError(key, "unknown key");
    }
  }

  ScenarioParams s;
  const double lambda0 = cfg.get_double("emitter.lambda0_m");
  if (!(lambda0 > 0.0)) throw ConfigError("emitter.lambda0_m", "wavelength must be positive");
  s.emitter = EmitterParams::from_wavelength(lambda0, kTwoPi * cfg.get_double("emitter.gamma0_hz"),
                                             s.constants);
  s.emitter.ground_shift_prefactor =
      cfg.get_optional_double("emitter.ground_shift_prefactor").value_or(1.0);

  const double mu_ratio = cfg.get_double("graphene.mu_over_hbar_omega0");
  const double loss_ratio = cfg.get_double("graphene.omega0_over_gamma_g");
  if (!(loss_ratio > 0.0)) {
    throw ConfigError("graphene.omega0_over_gamma_g", "ratio must be positive");
  }
  s.graphene = {mu_ratio * s.emitter.omega0, s.emitter.omega0 / loss_ratio,
                cfg.get_bool("graphene.transparent", false)};

  s.mechanics = MechanicalParams::make(
      kTwoPi * cfg.get_double("mechanics.omega_m_hz"), cfg.get_double("mechanics.mass_kg"),
      cfg.get_double("mechanics.quality_factor"), cfg.get_double("mechanics.t_bath_k"),
      s.constants);

  s.drive.epsilon = cfg.get_double("drive.epsilon");
  s.drive.eta_det = cfg.get_double("drive.eta_det");
  if (auto r = cfg.get_optional_double("drive.rabi_hz")) s.drive.rabi = kTwoPi * *r;
  if (auto d = cfg.get_optional_double("drive.detuning_hz")) s.drive.detuning = kTwoPi * *d;

  s.distance = cfg.get_double("geometry.distance_m");
  s.validate();
  return s;
}

ScenarioParams load_scenario(std::string_view config_text) {
  return scenario_from_config(Config::parse(config_text));
}

std::string scenario_schema() {
  return R"(# casimir-sense scenario file. Frequencies given in Hz are cyclic (f = omega / 2pi).
[emitter]
lambda0_m = <m>                      # free-space transition wavelength
gamma0_hz = <Hz>                     # free-space decay rate Gamma0 / 2pi
ground_shift_prefactor = <1>         # optional, default 1
[graphene]
mu_over_hbar_omega0 = <1>            # Fermi energy in units of hbar omega0
omega0_over_gamma_g = <1>            # omega0 / intraband loss rate
transparent = <bool>                 # optional, forces sigma = 0
[mechanics]
omega_m_hz = <Hz>                    # mode frequency omegaM / 2pi
mass_kg = <kg>                       # effective motional mass
quality_factor = <1>                 # Q = omegaM / gamma (inf allowed)
t_bath_k = <K>                       # bath temperature
[drive]
epsilon = <1>                        # saturation parameter, 0 < epsilon < 1
eta_det = <1>                        # free-space collection efficiency
rabi_hz = <Hz>                       # optional, Omega / 2pi (with detuning_hz)
detuning_hz = <Hz>                   # optional, Delta / 2pi
[geometry]
distance_m = <m>                     # emitter-sheet separation
)";
}

std::string to_config_text(const ScenarioParams& s) {
  std::ostringstream out;
  out << "[emitter]\n"
      << "lambda0_m = " << fmt(s.emitter.lambda0(s.constants)) << "\n"
      << "gamma0_hz = " << fmt(s.emitter.Gamma0 / kTwoPi) << "\n"
      << "ground_shift_prefactor = " << fmt(s.emitter.ground_shift_prefactor) << "\n"
      << "[graphene]\n"
      << "mu_over_hbar_omega0 = " << fmt(s.graphene.mu / s.emitter.omega0) << "\n"
      << "omega0_over_gamma_g = " << fmt(s.emitter.omega0 / s.graphene.gamma_g) << "\n"
      << "transparent = " << (s.graphene.transparent ? "true" : "false") << "\n"
      << "[mechanics]\n"
      << "omega_m_hz = " << fmt(s.mechanics.omegaM / kTwoPi) << "\n"
      << "mass_kg = " << fmt(s.mechanics.mass) << "\n"
      << "quality_factor = " << fmt(s.mechanics.Q) << "\n"
      << "t_bath_k = " << fmt(s.mechanics.T_bath) << "\n"
      << "[drive]\n"
      << "epsilon = " << fmt(s.drive.epsilon) << "\n"
      << "eta_det = " << fmt(s.drive.eta_det) << "\n";
  if (s.drive.rabi) out << "rabi_hz = " << fmt(*s.drive.rabi / kTwoPi) << "\n";
  if (s.drive.detuning) out << "detuning_hz = " << fmt(*s.drive.detuning / kTwoPi) << "\n";
  out << "[geometry]\n"
      << "distance_m = " << fmt(s.distance) << "\n";
  return out.str();
}

NaturalScenario natural_units(const ScenarioParams& s) {
  NaturalScenario n;
  n.constants = s.constants;
  n.omega0 = s.emitter.omega0;
  n.k0 = s.emitter.k0(s.constants);
  n.x_zpm = s.mechanics.x_zpm;
  n.Gamma0 = s.emitter.Gamma0 / n.omega0;
  n.distance = s.distance * n.k0;
  n.graphene = s.graphene.scaled(n.omega0);
  n.omegaM = s.mechanics.omegaM / n.omega0;
  n.gamma = s.mechanics.gamma / n.omega0;
  n.n_th = s.mechanics.n_th;
  n.epsilon = s.drive.epsilon;
  n.eta_det = s.drive.eta_det;
  n.ground_shift_prefactor = s.emitter.ground_shift_prefactor;
  if (s.drive.rabi) n.rabi = *s.drive.rabi / n.omega0;
  if (s.drive.detuning) n.detuning = *s.drive.detuning / n.omega0;
  return n;
}

ScenarioParams NaturalScenario::to_si() const {
  ScenarioParams s;
  s.constants = constants;
  s.emitter = {omega0, Gamma0 * omega0, ground_shift_prefactor};
  s.graphene = {graphene.mu * omega0, graphene.gamma_g * omega0, graphene.transparent};
  const double wM = omegaM * omega0;
  const double mass = constants.hbar / (x_zpm * x_zpm * wM);
  const double T = n_th * constants.hbar * wM / constants.kB;
  s.mechanics = MechanicalParams::make(wM, mass, omegaM / gamma, T, constants);
  s.drive.epsilon = epsilon;
  s.drive.eta_det = eta_det;
  if (rabi) s.drive.rabi = *rabi * omega0;
  if (detuning) s.drive.detuning = *detuning * omega0;
  s.distance = distance / k0;
  return s;
}

}  // namespace casimir
