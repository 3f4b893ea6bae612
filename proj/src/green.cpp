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

#include "casimir/green.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {
namespace green {
namespace {

using std::numbers::pi;
using cd = std::complex<double>;

// e^{-2κz} below e^{-50} of its peak is dropped.
constexpr double kDecayCutoff = 25.0;

std::vector<double> sorted_points(std::vector<double> pts, double lo, double hi) {
  pts.push_back(lo);
  pts.push_back(hi);
  std::erase_if(pts, [&](double p) { return !(p >= lo && p <= hi) || !std::isfinite(p); });
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

double u2_imag_integrand(double z, double u, double k, double sheet) {
  const double kappa = std::hypot(u, k);
  const double rp = kappa * sheet / (kappa * sheet + u);
  const double rs = -sheet * u / (kappa + sheet * u);
  return -(k / kappa) * std::exp(-2.0 * kappa * z) * ((k * k + kappa * kappa) * rp - u * u * rs) /
         (4.0 * pi);
}

cd real_integrand(double z, double omega, double k, cd sheet) {
  const cd i(0.0, 1.0);
  const cd kperp = perpendicular_wavevector(omega, k);
  const cd rp = reflection_p(kperp, omega, sheet);
  const cd rs = reflection_s(kperp, omega, sheet);
  return i / (4.0 * pi * omega * omega) * (k / kperp) * std::exp(2.0 * i * kperp * z) *
         (omega * omega * rs + (k * k - kperp * kperp) * rp);
}

quad::Result<double> u2_trace_imag(double z, double u, const GrapheneParams& g,
                                   const quad::Options& opt) {
  if (!(z > 0.0)) throw DomainError("trace_green_imag: height must be positive");
  if (!(u > 0.0)) throw DomainError("trace_green_imag: frequency must be positive");
  const double sheet = sheet_response(sigma_imag_axis(u, g).value).real();
  if (sheet == 0.0) return {0.0, 0.0, 0, true};

  const double kappa_max = u + kDecayCutoff / z;
  const double k_max = std::sqrt(kappa_max * kappa_max - u * u);
  const auto pts = sorted_points({1.5 / z, 5.0 / z}, 0.0, k_max);
  auto f = [&](double k) { return u2_imag_integrand(z, u, k, sheet); };
  return quad::integrate_checked(f, pts, opt, "trace_green_imag");
}

TraceSplit trace_real(double z, double omega, const GrapheneParams& g, const quad::Options& opt) {
  if (!(z > 0.0)) throw DomainError("trace_green_real: height must be positive");
  if (!(omega > 0.0)) throw DomainError("trace_green_real: frequency must be positive");
  const cd sheet = sheet_response(sigma_real_axis(omega, g).value);
  if (sheet == cd(0.0, 0.0)) return {};

  const cd i(0.0, 1.0);
  const double w2 = omega * omega;

  // k = ω sin t removes the 1/k_perp edge of the propagating window.
  auto propagating = [&](double t) {
    const double k = omega * std::sin(t);
    const double kperp = omega * std::cos(t);
    const cd rp = reflection_p(kperp, omega, sheet);
    const cd rs = reflection_s(kperp, omega, sheet);
    return i / (4.0 * pi * w2) * (omega * std::sin(t)) * std::exp(2.0 * i * kperp * z) *
           (w2 * rs + (k * k - kperp * kperp) * rp);
  };
  // k = ω cosh s, k_perp = iω sinh s for the evanescent tail.
  auto evanescent = [&](double s) {
    const double k = omega * std::cosh(s);
    const double kappa = omega * std::sinh(s);
    const cd kperp(0.0, kappa);
    const cd rp = reflection_p(kperp, omega, sheet);
    const cd rs = reflection_s(kperp, omega, sheet);
    return std::cosh(s) / (4.0 * pi * omega) * std::exp(-2.0 * z * kappa) *
           (w2 * rs + (k * k + kappa * kappa) * rp);
  };

  const std::vector<double> prop_pts{0.0, 0.5 * pi};
  const auto p = quad::integrate_checked(propagating, prop_pts, opt, "trace_green_real (propagating)");

  const double s_max = std::asinh(kDecayCutoff / (z * omega));
  std::vector<double> hints{std::asinh(1.5 / (z * omega))};
  // Quasi-static plasmon pole of r_p: kappa·Im(sheet) = ω.
  if (sheet.imag() > 0.0) {
    const double s_pole = std::asinh(1.0 / sheet.imag());
    hints.push_back(s_pole);
    const double width = std::max(std::abs(sheet.real() / sheet.imag()), 1e-9);
    hints.push_back(s_pole - 5.0 * width);
    hints.push_back(s_pole + 5.0 * width);
  }
  const auto e = quad::integrate_checked(evanescent, sorted_points(hints, 0.0, s_max), opt,
                                         "trace_green_real (evanescent)");
  return {p.value, e.value, p.error + e.error};
}

}  // namespace green

GreensTrace trace_green_imag(double z, double u, const GrapheneParams& g,
                             const PhysicalConstants& pc) {
  if (!(u > 0.0)) throw DomainError("trace_green_imag: frequency must be positive");
  const double k_ref = u / pc.c;
  const auto r = green::u2_trace_imag(z * k_ref, 1.0, g.scaled(u));
  return {{r.value * k_ref, 0.0}, z, TaggedFrequency::imaginary(u), r.error * k_ref};
}

GreensTrace trace_green_real(double z, double omega, const GrapheneParams& g,
                             const PhysicalConstants& pc) {
  if (!(omega > 0.0)) throw DomainError("trace_green_real: frequency must be positive");
  const double k_ref = omega / pc.c;
  const auto r = green::trace_real(z * k_ref, 1.0, g.scaled(omega));
  return {r.total() * k_ref, z, TaggedFrequency::real(omega), r.error * k_ref};
}

}  // namespace casimir
