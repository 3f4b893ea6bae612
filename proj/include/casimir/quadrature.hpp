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

// Globally adaptive Gauss-Kronrod (7/15) quadrature for real- or
// complex-valued integrands on finite intervals with optional break points.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir::quad {

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_intervals = 4000;
};

template <class T>
struct Result {
  T value{};
  double error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

namespace detail {

inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for kXgk[1], kXgk[3], kXgk[5], kXgk[7].
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
double magnitude(const T& v) {
  return std::abs(v);
}

template <class T>
struct Segment {
  double a, b;
  T value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class T, class F>
Segment<T> gk15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(center);
  T kronrod = fc * kWgk[7];
  T gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const T sum = f(center - dx) + f(center + dx);
    kronrod += sum * kWgk[j];
    if (j % 2 == 1) gauss += sum * kWg[j / 2];
  }
  return {a, b, kronrod * half, magnitude(T((kronrod - gauss) * half))};
}

}  // namespace detail

/// Integrates f over [points.front(), points.back()], splitting at every
/// interior point. Points must be sorted ascending.
template <class F>
auto integrate(F&& f, std::span<const double> points, const Options& opt = {})
    -> Result<std::decay_t<std::invoke_result_t<F&, double>>> {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  using detail::Segment;
  Result<T> res;
  if (points.size() < 2) return res;

  // Max-heap on error estimate.
  std::vector<Segment<T>> heap;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i + 1] <= points[i]) continue;
    heap.push_back(detail::gk15<T>(f, points[i], points[i + 1]));
    res.evaluations += 15;
  }
  std::make_heap(heap.begin(), heap.end());
  auto totals = [&heap] {
    T value{};
    double error = 0.0;
    for (const auto& s : heap) {
      value += s.value;
      error += s.error;
    }
    return std::pair<T, double>{value, error};
  };
  auto target = [&opt](const T& v) { return std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(v)); };

  auto [value, error] = totals();
  while (!heap.empty() && error > target(value) &&
         static_cast<int>(heap.size()) < opt.max_intervals) {
    const Segment<T> worst = heap.front();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // interval exhausted at machine precision
    std::pop_heap(heap.begin(), heap.end());
    heap.pop_back();
    const auto left = detail::gk15<T>(f, worst.a, mid);
    const auto right = detail::gk15<T>(f, mid, worst.b);
    res.evaluations += 30;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end());
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
  }
  // Re-sum to shed the drift of the running updates.
  std::tie(value, error) = totals();
  res.value = value;
  res.error = error;
  res.converged = error <= target(value);
  return res;
}

template <class F>
auto integrate(F&& f, double a, double b, const Options& opt = {}) {
  const std::array<double, 2> pts{a, b};
  return integrate(std::forward<F>(f), std::span<const double>(pts), opt);
}

/// As `integrate`, but throws NumericalError when the tolerance is not met.
template <class F>
auto integrate_checked(F&& f, std::span<const double> points, const Options& opt,
                       const std::string& what) {
  auto r = integrate(std::forward<F>(f), points, opt);
  if (!r.converged) throw NumericalError(what + ": quadrature did not converge", r.error);
  return r;
}

}  // namespace casimir::quad
