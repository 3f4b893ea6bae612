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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "casimir/measurement.hpp"
#include "casimir/scenario.hpp"

namespace casimir {

enum class DampingKind { symmetric, momentum };
enum class Frame { rotating, lab };

const char* to_string(DampingKind k);
const char* to_string(Frame f);
DampingKind parse_damping(const std::string& name);

/// symmetric: γ_x = γ_p = γ/2. momentum: γ_x = 0, γ_p = γ.
struct DampingModel {
  DampingKind kind = DampingKind::momentum;
  double gamma = 0.0;  // rad/s
};

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat8 = Eigen::Matrix<double, 8, 8>;

/// Mechanical covariance block, vacuum = identity.
struct ConditionalState {
  Mat2 cov_m = Mat2::Identity();
  double t = 0.0;  // s
  Frame frame = Frame::rotating;

  double Vx() const { return cov_m(0, 0); }
  double Vp() const { return cov_m(1, 1); }
  double Vxp() const { return cov_m(0, 1); }
  double det() const { return cov_m.determinant(); }
};

/// Mode order: x_m, p_m, x_L, p_L, x_N, p_N, f_x, f_p.
struct StepOperator {
  Mat8 S = Mat8::Identity();
  double tau = 0.0;
  double t = 0.0;
};

/// Input covariance of (x_L, p_L, x_N, p_N, f_x, f_p).
struct NoiseSpec {
  Mat6 cov_in = Mat6::Identity();

  static NoiseSpec make(DampingKind kind, double n_th);
};

/// Emitter-mediated rates that set the light coupling.
struct KappaSplit {
  double Gamma_det = 0.0;  // rad/s
  double Gamma_N = 0.0;    // rad/s
  double g_bar_m = 0.0;    // rad/s
  double epsilon = 0.0;
  double Gamma = 0.0;      // rad/s, Gamma_det + Gamma_N

  /// Detected-channel coupling, equal to κ (1/√s).
  double a_L() const;
  /// Undetected-channel coupling (1/√s).
  double a_N() const;
};

struct DynamicsParams {
  double omegaM = 0.0;  // rad/s
  double n_th = 0.0;
  DampingModel damping;
  KappaSplit split;

  /// Largest rate entering the step precondition, rad/s.
  double max_rate() const;

  static DynamicsParams from(const ScenarioParams& s, const CouplingResult& c, DampingKind kind);
  static DynamicsParams from(const ScenarioParams& s, DampingKind kind);
};

inline constexpr double kHomodyneSqueezing = 1e12;
inline constexpr double kStepRateLimit = 1e-2;
inline constexpr double kPhysicalityTolerance = 1e-9;

/// Step with rate·τ = 2.5e-4 against the fastest process.
double default_tau(const DynamicsParams& p);

/// One step of duration τ starting at time t. Throws DomainError when
/// τ times any process rate reaches 1e-2.
StepOperator build_step(double t, double tau, const DynamicsParams& p);

/// Projects the light mode of `joint` (x_m, p_m, x_L, p_L) onto the
/// squeezed state diag(1/r, r); r → ∞ is homodyne detection of x_L.
ConditionalState measurement_update(const ConditionalState& state, const Mat4& joint,
                                    double r = kHomodyneSqueezing);

struct SimulationOptions {
  double t_end = 0.0;  // s
  double tau = 0.0;    // s; 0 selects default_tau
  std::size_t record_every = 1;
  bool conditional = true;
  std::optional<Mat2> initial;  // rotating frame; thermal when empty
  double r = kHomodyneSqueezing;
};

/// Recorded states, starting with t = 0 and always ending at t_end. The step
/// count is ceil(t_end/τ) with τ shrunk so the steps tile [0, t_end].
std::vector<ConditionalState> simulate(const DynamicsParams& p, const SimulationOptions& opt);

std::vector<ConditionalState> simulate(const ScenarioParams& s, DampingKind kind, double t_end,
                                       double tau = 0.0);

struct ShortTimeVariances {
  double Vx = 0.0;
  double Vp = 0.0;
};

/// V_x = 1/(1/V_x_in + κ²t), V_p = V_p_in + κ²t.
ShortTimeVariances analytic_shorttime(double Vx_in, double Vp_in, double kappa, double t);

/// Undoes the co-rotation at the state's time stamp.
ConditionalState lab_frame(const ConditionalState& state, double omegaM);
ConditionalState rotating_frame(const ConditionalState& state, double omegaM);

}  // namespace casimir
