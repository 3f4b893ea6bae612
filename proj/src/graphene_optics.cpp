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

#include "casimir/graphene_optics.hpp"

#include <cmath>
#include <numbers>

#include "casimir/errors.hpp"

namespace casimir {

using std::numbers::pi;

Conductivity sigma_real_axis(double omega, const GrapheneParams& g) {
  if (!(omega > 0.0)) throw DomainError("sigma_real_axis: frequency must be positive");
  const TaggedFrequency f = TaggedFrequency::real(omega);
  if (g.transparent) return {{0.0, 0.0}, f};

  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> drude = (4.0 * g.mu / pi) * i / (omega + i * g.gamma_g);
  if (g.mu == 0.0) return {drude + 1.0, f};

  const double two_mu = 2.0 * g.mu;
  if (omega == two_mu) {
    throw DomainError("sigma_real_axis: interband edge omega = 2 mu is a logarithmic singularity");
  }
  const double step = omega > two_mu ? 1.0 : 0.0;
  const double log_term = std::log(std::abs((omega - two_mu) / (omega + two_mu))) / pi;
  return {drude + std::complex<double>(step, log_term), f};
}

Conductivity sigma_imag_axis(double u, const GrapheneParams& g) {
  if (!(u > 0.0)) throw DomainError("sigma_imag_axis: frequency must be positive");
  const TaggedFrequency f = TaggedFrequency::imaginary(u);
  if (g.transparent) return {{0.0, 0.0}, f};
  const double drude = (4.0 * g.mu / pi) / (u + g.gamma_g);
  const double interband = g.mu > 0.0 ? (2.0 / pi) * std::atan(u / (2.0 * g.mu)) : 1.0;
  return {{drude + interband, 0.0}, f};
}

Conductivity sigma(TaggedFrequency f, const GrapheneParams& g) {
  return f.axis == FrequencyAxis::real ? sigma_real_axis(f.value, g) : sigma_imag_axis(f.value, g);
}

std::complex<double> perpendicular_wavevector(std::complex<double> k_omega, double k_par) {
  auto kp = std::sqrt(k_omega * k_omega - k_par * k_par);
  if (kp.imag() < 0.0) kp = -kp;
  // On the imaginary axis k_omega² is negative and sqrt lands on the cut;
  // choose the decaying branch explicitly.
  if (kp.imag() == 0.0 && kp.real() < 0.0) kp = -kp;
  return kp;
}

FresnelPair fresnel(TaggedFrequency f, double k_par, const GrapheneParams& g,
                    const PhysicalConstants& pc) {
  if (!(k_par >= 0.0)) throw DomainError("fresnel: parallel wavevector must be non-negative");
  const auto s = sheet_response(sigma(f, g).value);
  const std::complex<double> k_omega = f.complex() / pc.c;
  std::complex<double> k_perp;
  if (f.axis == FrequencyAxis::imaginary) {
    k_perp = {0.0, std::hypot(f.value / pc.c, k_par)};
  } else {
    k_perp = perpendicular_wavevector(k_omega, k_par);
  }
  return {reflection_p(k_perp, k_omega, s), reflection_s(k_perp, k_omega, s), k_par, k_perp};
}

std::optional<double> plasmon_wavevector(double omega, const GrapheneParams& g,
                                         const PhysicalConstants& pc) {
  const double im = sheet_response(sigma_real_axis(omega, g).value).imag();
  if (!(im > 0.0)) return std::nullopt;
  return omega / pc.c / im;
}

double plasmon_wavelength_drude(double omega, const GrapheneParams& g,
                                const PhysicalConstants& pc) {
  const double lambda = 2.0 * pi * pc.c / omega;
  return lambda * 2.0 * pc.alpha() * g.mu / omega;
}

}  // namespace casimir
