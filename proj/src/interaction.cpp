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

#include "casimir/interaction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/green.hpp"

namespace casimir {
namespace {

using std::numbers::pi;

void require_distance(double d) {
  if (!(d > 0.0)) throw DomainError("distance must be positive");
}

struct Natural {
  double z;
  GrapheneParams g;
};

Natural to_natural(double d, const EmitterParams& e, const GrapheneParams& g,
                   const PhysicalConstants& pc) {
  return {d * e.k0(pc), g.scaled(e.omega0)};
}

}  // namespace

quad::Result<double> ground_shift_integral(double z, const GrapheneParams& g_natural,
                                           const ShiftOptions& opt) {
  if (g_natural.transparent) return {0.0, 0.0, 0, true};
  const quad::Options inner{opt.inner_rel_tol, 0.0, 4000};
  // u = tan θ turns du·u²/(1+u²) into dθ·u²; beyond u = 30/z the kernel is below e^{-60}.
  auto integrand = [&](double theta) {
    return green::u2_trace_imag(z, std::tan(theta), g_natural, inner).value;
  };
  const double theta_max = std::atan(30.0 / z);
  std::vector<double> pts{0.0, 0.25 * pi, std::atan(1.0 / z), theta_max};
  std::erase_if(pts, [&](double p) { return p > theta_max; });
  std::sort(pts.begin(), pts.end());
  const quad::Options outer{opt.outer_rel_tol, 0.0, 2000};
  return quad::integrate_checked(integrand, pts, outer, "ground_shift");
}

double ground_shift(double d, const EmitterParams& e, const GrapheneParams& g,
                    const PhysicalConstants& pc, const ShiftOptions& opt) {
  require_distance(d);
  const auto n = to_natural(d, e, g, pc);
  return e.ground_shift_prefactor * e.Gamma0 * ground_shift_integral(n.z, n.g, opt).value;
}

double excited_shift(double d, const EmitterParams& e, const GrapheneParams& g,
                     const PhysicalConstants& pc, const ShiftOptions& opt) {
  return interaction(d, e, g, pc, opt).delta_e;
}

DecayRates decay_rates(double d, const EmitterParams& e, const GrapheneParams& g,
                       const PhysicalConstants& pc) {
  require_distance(d);
  const auto n = to_natural(d, e, g, pc);
  const auto tr = green::trace_real(n.z, 1.0, n.g);
  DecayRates r;
  r.Gamma_rad = e.Gamma0 * (1.0 + 2.0 * pi * tr.propagating.imag());
  r.Gamma_nonrad = e.Gamma0 * 2.0 * pi * tr.evanescent.imag();
  r.Gamma = e.Gamma0 * (1.0 + 2.0 * pi * tr.total().imag());
  return r;
}

InteractionResult interaction(double d, const EmitterParams& e, const GrapheneParams& g,
                              const PhysicalConstants& pc, const ShiftOptions& opt) {
  require_distance(d);
  const auto n = to_natural(d, e, g, pc);
  const auto tr = green::trace_real(n.z, 1.0, n.g);

  InteractionResult r;
  r.d = d;
  r.delta_g = e.ground_shift_prefactor * e.Gamma0 * ground_shift_integral(n.z, n.g, opt).value;
  r.delta_e = -r.delta_g - pi * e.Gamma0 * tr.total().real();
  r.delta_omega = r.delta_e - r.delta_g;
  r.Gamma_rad = e.Gamma0 * (1.0 + 2.0 * pi * tr.propagating.imag());
  r.Gamma_nonrad = e.Gamma0 * 2.0 * pi * tr.evanescent.imag();
  r.Gamma = e.Gamma0 * (1.0 + 2.0 * pi * tr.total().imag());
  return r;
}

CouplingGradient transition_gradient(double d, const EmitterParams& e, const GrapheneParams& g,
                                     const PhysicalConstants& pc) {
  require_distance(d);
  const double h = d / 100.0;
  if (!(d - h > 0.0) || !(h > 0.0)) throw NumericalError("transition_gradient: step underflow", h);
  if (g.transparent) return {d, 0.0, h, 0.0};

  auto shift = [&](double x) { return interaction(x, e, g, pc).delta_omega; };
  const double coarse = (shift(d + h) - shift(d - h)) / (2.0 * h);
  const double fine = (shift(d + 0.5 * h) - shift(d - 0.5 * h)) / h;
  const double richardson = (4.0 * fine - coarse) / 3.0;
  const double err = std::abs(richardson - fine);
  if (!(err <= 0.01 * std::abs(richardson))) {
    throw NumericalError("transition_gradient: Richardson extrapolation not converged", err);
  }
  return {d, richardson, h, err};
}

double scattering_rate(const InteractionResult& ir, double omega_L, const EmitterParams& e) {
  const double detuning = e.omega0 + ir.delta_omega - omega_L;
  return 0.25 * ir.Gamma_rad * e.Gamma0 / (0.25 * ir.Gamma * ir.Gamma + detuning * detuning);
}

double scattering_rate_map(double d, double omega_L, const ScenarioParams& s) {
  return scattering_rate(interaction(d, s.emitter, s.graphene, s.constants), omega_L, s.emitter);
}

}  // namespace casimir
