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

#include <complex>
#include <numbers>
#include <optional>

#include "casimir/constants.hpp"
#include "casimir/scenario.hpp"

namespace casimir {

enum class FrequencyAxis { real, imaginary };

/// ω on the real axis, or u for ω = iu on the imaginary axis (rad/s).
struct TaggedFrequency {
  FrequencyAxis axis = FrequencyAxis::real;
  double value = 0.0;

  static TaggedFrequency real(double omega) { return {FrequencyAxis::real, omega}; }
  static TaggedFrequency imaginary(double u) { return {FrequencyAxis::imaginary, u}; }
  /// ω as a complex number (iu on the imaginary axis).
  std::complex<double> complex() const {
    return axis == FrequencyAxis::real ? std::complex<double>(value, 0.0)
                                       : std::complex<double>(0.0, value);
  }
};

/// Sheet conductivity in units of σ₀ = e²/4ħ.
struct Conductivity {
  std::complex<double> value;
  TaggedFrequency frequency;

  std::complex<double> siemens(const PhysicalConstants& pc = kConstants) const {
    return value * pc.sigma0();
  }
};

/// Zero-temperature local conductivity: Drude intraband term plus the
/// step-like interband absorption and its logarithmic dispersive partner.
/// Frequencies of `omega` and `g` may be in any common unit.
Conductivity sigma_real_axis(double omega, const GrapheneParams& g);

/// σ(iu), real and positive. The interband part is the dispersion-relation
/// continuation of the absorption step, (2/π)·atan(u/2μ).
Conductivity sigma_imag_axis(double u, const GrapheneParams& g);

Conductivity sigma(TaggedFrequency f, const GrapheneParams& g);

/// σ/(2ε₀c) for σ given in units of σ₀; this is πα/2 · σ.
inline std::complex<double> sheet_response(std::complex<double> sigma_in_sigma0) {
  return 0.5 * std::numbers::pi * kAlpha * sigma_in_sigma0;
}

/// Reflection coefficients of a free-standing sheet with dimensionless
/// response `s` = σ/(2ε₀c). `k_omega` is ω/c (iu/c on the imaginary axis).
inline std::complex<double> reflection_p(std::complex<double> k_perp, std::complex<double> k_omega,
                                         std::complex<double> s) {
  return k_perp * s / (k_perp * s + k_omega);
}

inline std::complex<double> reflection_s(std::complex<double> k_perp, std::complex<double> k_omega,
                                         std::complex<double> s) {
  return -s * k_omega / (k_perp + s * k_omega);
}

/// k_perp = sqrt((ω/c)² - k_par²) on the branch with Im ≥ 0.
std::complex<double> perpendicular_wavevector(std::complex<double> k_omega, double k_par);

struct FresnelPair {
  std::complex<double> r_p;
  std::complex<double> r_s;
  double k_par = 0.0;             // 1/m
  std::complex<double> k_perp;    // 1/m
};

/// SI wavevectors (1/m) and angular frequency (rad/s).
FresnelPair fresnel(TaggedFrequency f, double k_par, const GrapheneParams& g,
                    const PhysicalConstants& pc = kConstants);

/// Parallel wavevector of the sheet plasmon in the quasi-static limit,
/// (ω/c)/Im(σ/2ε₀c), using the full conductivity at ω. Empty if Im σ ≤ 0.
std::optional<double> plasmon_wavevector(double omega, const GrapheneParams& g,
                                         const PhysicalConstants& pc = kConstants);

/// Leading-order Drude estimate of the plasmon wavelength, λ_sp = λ₀·2α·μ/ħω.
double plasmon_wavelength_drude(double omega, const GrapheneParams& g,
                                const PhysicalConstants& pc = kConstants);

}  // namespace casimir
