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

#include <numbers>

namespace casimir {

/// CODATA 2018 exact and recommended values, SI units.
struct PhysicalConstants {
  double c = 299792458.0;               // m/s
  double hbar = 1.054571817e-34;        // J s
  double kB = 1.380649e-23;             // J/K
  double e = 1.602176634e-19;           // C
  double eps0 = 8.8541878128e-12;       // F/m
  double mu0 = 1.25663706212e-6;        // N/A^2

  /// Universal sheet conductivity e^2/(4 hbar), in siemens.
  constexpr double sigma0() const { return e * e / (4.0 * hbar); }
  constexpr double alpha() const { return e * e / (4.0 * std::numbers::pi * eps0 * hbar * c); }
};

inline constexpr PhysicalConstants kConstants{};

inline constexpr double kAlpha = kConstants.alpha();

}  // namespace casimir
