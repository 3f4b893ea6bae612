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

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "casimir/green.hpp"
#include "casimir/kernels.hpp"
#include "casimir/scenario.hpp"

namespace {

using namespace casimir;

const GrapheneParams kSheet{0.8, 1e-3, false};

double sweep_point(std::size_t i) {
  const double z = 0.02 + 0.002 * static_cast<double>(i);
  return green::u2_trace_imag(z, 1.0, kSheet).value;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sweep_serial(n, sweep_point));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sweep_parallel(n, sweep_point));
}

std::complex<double> trapezoid_integrand(double k) {
  return green::real_integrand(0.06, 1.0, k, {0.01, -0.005});
}

void BM_TrapezoidSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::trapezoid_serial(trapezoid_integrand, 1.0, 200.0, n));
}

void BM_TrapezoidParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::trapezoid_parallel(trapezoid_integrand, 1.0, 200.0, n));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrapezoidSerial)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrapezoidParallel)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
