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

#include "casimir/constants.hpp"
#include "casimir/graphene_optics.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/scenario.hpp"

namespace casimir {

/// Trace of the reflected (surface) part of the dyadic Green's function at
/// coincident points a height z above the sheet.
struct GreensTrace {
  std::complex<double> value;  // 1/m
  double z = 0.0;              // m
  TaggedFrequency frequency;
  double error = 0.0;          // absolute quadrature error estimate, 1/m
};

/// Real-axis trace split at the light line k_par = ω/c.
struct TraceSplit {
  std::complex<double> propagating;  // k_par < ω/c
  std::complex<double> evanescent;   // k_par > ω/c
  double error = 0.0;

  std::complex<double> total() const { return propagating + evanescent; }
};

namespace green {

/// Inner-integral tolerance used by the nested Casimir integrals.
inline constexpr quad::Options kTraceOptions{1e-12, 0.0, 4000};

// Dimensionless kernels with c = 1: z in units of 1/k_ref, frequencies and
// the sheet parameters in units of ω_ref = c·k_ref. Traces come back in
// units of k_ref.

/// u²·Tr G(z, iu); finite as u → 0.
quad::Result<double> u2_trace_imag(double z, double u, const GrapheneParams& g,
                                   const quad::Options& opt = kTraceOptions);

/// Tr G(z, ω) with the k_par integral split at the light line.
TraceSplit trace_real(double z, double omega, const GrapheneParams& g,
                      const quad::Options& opt = kTraceOptions);

/// Integrand pieces, exposed for independent oracles.
/// Returns (k/k_perp)·e^{2ik_perp z}·[(ω/c)² r_s + (k² − k_perp²) r_p]·ic²/(4πω²)
/// for ω = iu, written in real form, times u².
double u2_imag_integrand(double z, double u, double k, double sheet);

/// Same on the real axis, as a function of k_par (singular at k = ω).
std::complex<double> real_integrand(double z, double omega, double k, std::complex<double> sheet);

}  // namespace green

/// SI interface: z in m, u in rad/s.
GreensTrace trace_green_imag(double z, double u, const GrapheneParams& g,
                             const PhysicalConstants& pc = kConstants);

/// SI interface: z in m, ω in rad/s.
GreensTrace trace_green_real(double z, double omega, const GrapheneParams& g,
                             const PhysicalConstants& pc = kConstants);

}  // namespace casimir
