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

// Data-parallel kernels. Each OpenMP kernel has a serial reference with the
// same contract; tests compare the two and bench/ times them.

#include <omp.h>

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir::kernels {

enum class PointStatus { ok, numerical_error, domain_error, physicality_error, other_error };

/// Result of one grid point. Failures are captured per point so a sweep
/// always returns a full, ordered table.
template <class R>
struct PointResult {
  std::optional<R> value;
  PointStatus status = PointStatus::ok;
  std::string message;

  bool ok() const { return status == PointStatus::ok; }
};

namespace detail {

template <class R, class F>
PointResult<R> evaluate_point(F& fn, std::size_t i) noexcept {
  PointResult<R> out;
  try {
    out.value = fn(i);
  } catch (const NumericalError& e) {
    out.status = PointStatus::numerical_error;
    out.message = e.what();
  } catch (const PhysicalityError& e) {
    out.status = PointStatus::physicality_error;
    out.message = e.what();
  } catch (const DomainError& e) {
    out.status = PointStatus::domain_error;
    out.message = e.what();
  } catch (const std::exception& e) {
    out.status = PointStatus::other_error;
    out.message = e.what();
  }
  return out;
}

}  // namespace detail

/// Serial reference: evaluates fn(0..n-1) in order.
template <class F, class R = std::invoke_result_t<F&, std::size_t>>
std::vector<PointResult<R>> sweep_serial(std::size_t n, F&& fn) {
  std::vector<PointResult<R>> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = detail::evaluate_point<R>(fn, i);
  return out;
}

/// Evaluates fn(0..n-1) on `jobs` threads (0 = OpenMP default). Each point
/// writes only its own slot, so the table is identical to `sweep_serial`.
template <class F, class R = std::invoke_result_t<F&, std::size_t>>
std::vector<PointResult<R>> sweep_parallel(std::size_t n, F&& fn, int jobs = 0) {
  std::vector<PointResult<R>> out(n);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long long i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = detail::evaluate_point<R>(fn, static_cast<std::size_t>(i));
  }
  return out;
}

/// Composite trapezoid rule with n intervals, serial reference.
template <class F, class T = std::invoke_result_t<F&, double>>
T trapezoid_serial(F&& f, double a, double b, std::size_t n) {
  const double h = (b - a) / static_cast<double>(n);
  T sum = 0.5 * (f(a) + f(b));
  for (std::size_t i = 1; i < n; ++i) sum += f(a + h * static_cast<double>(i));
  return sum * h;
}

/// Composite trapezoid rule with n intervals; node sums are reduced per
/// thread, so results differ from the serial reference only by rounding.
template <class F, class T = std::invoke_result_t<F&, double>>
T trapezoid_parallel(F&& f, double a, double b, std::size_t n, int jobs = 0) {
  const double h = (b - a) / static_cast<double>(n);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const auto count = static_cast<long long>(n);
  std::vector<T> partial(static_cast<std::size_t>(threads), T{});
#pragma omp parallel num_threads(threads)
  {
    T local{};
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
#pragma omp for schedule(static)
    for (long long i = 1; i < count; ++i) local += f(a + h * static_cast<double>(i));
    partial[tid] = local;
  }
  T sum = 0.5 * (f(a) + f(b));
  for (const auto& p : partial) sum += p;
  return sum * h;
}

}  // namespace casimir::kernels
