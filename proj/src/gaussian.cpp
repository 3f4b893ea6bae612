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

#include "casimir/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

enum Mode { XM = 0, PM, XL, PL, XN, PN, FX, FP };

// Rotation R(t) taking lab (x, p) to rotating (x̃, p̃).
Mat2 rotation(double phase) {
  const double c = std::cos(phase);
  const double s = std::sin(phase);
  Mat2 R;
  R << c, -s, s, c;
  return R;
}

void check_physical(const ConditionalState& st) {
  const double det = st.det();
  if (!(det >= 1.0 - kPhysicalityTolerance) || !(st.Vx() * st.Vp() >= 1.0 - kPhysicalityTolerance)) {
    std::ostringstream msg;
    msg << "covariance violates the uncertainty relation at t = " << st.t << " s (det = " << det
        << ", Vx*Vp = " << st.Vx() * st.Vp() << ")";
    throw PhysicalityError(msg.str(), st.t, det);
  }
}

}  // namespace

const char* to_string(DampingKind k) {
  return k == DampingKind::symmetric ? "symmetric" : "momentum";
}

const char* to_string(Frame f) { return f == Frame::rotating ? "rotating" : "lab"; }

DampingKind parse_damping(const std::string& name) {
  if (name == "symmetric") return DampingKind::symmetric;
  if (name == "momentum") return DampingKind::momentum;
  throw DomainError("damping model must be 'symmetric' or 'momentum', got '" + name + "'");
}

NoiseSpec NoiseSpec::make(DampingKind kind, double n_th) {
  if (!(n_th >= 0.0)) throw DomainError("NoiseSpec: thermal occupation must be non-negative");
  NoiseSpec n;
  const double th = 2.0 * n_th + 1.0;
  if (kind == DampingKind::symmetric) {
    n.cov_in(4, 4) = th;
    n.cov_in(5, 5) = th;
  } else {
    n.cov_in(4, 4) = 1.0 / th;
    n.cov_in(5, 5) = th;
  }
  return n;
}

double KappaSplit::a_L() const {
  return Gamma > 0.0 ? 2.0 * g_bar_m * std::sqrt(epsilon * Gamma_det) / Gamma : 0.0;
}

double KappaSplit::a_N() const {
  return Gamma > 0.0 ? 2.0 * g_bar_m * std::sqrt(epsilon * Gamma_N) / Gamma : 0.0;
}

double DynamicsParams::max_rate() const {
  const double aL = split.a_L();
  const double aN = split.a_N();
  return std::max({omegaM, aL * aL + aN * aN, damping.gamma * (2.0 * n_th + 1.0)});
}

DynamicsParams DynamicsParams::from(const ScenarioParams& s, const CouplingResult& c,
                                    DampingKind kind) {
  DynamicsParams p;
  p.omegaM = s.mechanics.omegaM;
  p.n_th = s.mechanics.n_th;
  p.damping = {kind, s.mechanics.gamma};
  p.split = {c.Gamma_det, c.Gamma_N, c.g_bar, s.drive.epsilon, c.Gamma};
  return p;
}

DynamicsParams DynamicsParams::from(const ScenarioParams& s, DampingKind kind) {
  return from(s, evaluate_operating_point(s).coupling, kind);
}

double default_tau(const DynamicsParams& p) {
  const double rate = p.max_rate();
  if (!(rate > 0.0)) throw DomainError("default_tau: all process rates vanish");
  return 2.5e-4 / rate;
}

StepOperator build_step(double t, double tau, const DynamicsParams& p) {
  if (!(tau > 0.0)) throw DomainError("build_step: time step must be positive");
  if (!(tau * p.max_rate() < kStepRateLimit)) {
    std::ostringstream msg;
    msg << "build_step: tau = " << tau << " s too large, tau * rate = " << tau * p.max_rate()
        << " (limit " << kStepRateLimit << ")";
    throw DomainError(msg.str());
  }
  const double c = std::cos(p.omegaM * t);
  const double s = std::sin(p.omegaM * t);
  const double g = p.damping.gamma;
  const double rt = std::sqrt(tau);

  // Damping and thermal force.
  Mat8 D = Mat8::Identity();
  double kx = 0.0;
  double kp = 0.0;
  if (p.damping.kind == DampingKind::symmetric) {
    D(XM, XM) -= 0.5 * g * tau;
    D(PM, PM) -= 0.5 * g * tau;
    kx = kp = std::sqrt(g);
  } else {
    D(XM, XM) += -g * s * s * tau;
    D(XM, PM) += g * c * s * tau;
    D(PM, XM) += g * c * s * tau;
    D(PM, PM) += -g * c * c * tau;
    kx = std::sqrt(0.5 * g);
    kp = std::sqrt(2.0 * g);
  }
  D(XM, FX) = c * kx * rt;
  D(XM, FP) = -s * kp * rt;
  D(PM, FX) = s * kx * rt;
  D(PM, FP) = c * kp * rt;

  // Back-action and signal mapping.
  const double aL = p.split.a_L() * rt;
  const double aN = p.split.a_N() * rt;
  const double G = p.split.Gamma;
  const double refl = G > 0.0 ? 1.0 - 2.0 * p.split.Gamma_det / G : 1.0;
  const double mix = G > 0.0 ? 2.0 * std::sqrt(p.split.Gamma_det * p.split.Gamma_N) / G : 0.0;
  Mat8 C = Mat8::Identity();
  C(XM, PL) = -s * aL;
  C(XM, PN) = -s * aN;
  C(PM, PL) = c * aL;
  C(PM, PN) = c * aN;
  C(XL, XM) = c * aL;
  C(XL, PM) = s * aL;
  C(XL, XL) = refl;
  C(XL, XN) = -mix;
  C(PL, PL) = refl;
  C(PL, PN) = -mix;

  return {C * D, tau, t};
}

ConditionalState measurement_update(const ConditionalState& state, const Mat4& joint, double r) {
  if (!(r > 0.0)) throw DomainError("measurement_update: projector squeezing must be positive");
  const Mat2 GM = joint.topLeftCorner<2, 2>();
  const Mat2 Gcoh = joint.topRightCorner<2, 2>();
  Mat2 GL = joint.bottomRightCorner<2, 2>();
  GL(0, 0) += 1.0 / r;
  GL(1, 1) += r;
  const Eigen::FullPivLU<Mat2> lu(GL);
  if (!lu.isInvertible()) {
    throw NumericalError("measurement_update: singular light covariance", std::abs(GL.determinant()));
  }
  ConditionalState out = state;
  out.cov_m = GM - Gcoh * lu.inverse() * Gcoh.transpose();
  out.cov_m = 0.5 * (out.cov_m + out.cov_m.transpose());
  return out;
}

std::vector<ConditionalState> simulate(const DynamicsParams& p, const SimulationOptions& opt) {
  if (!(opt.t_end >= 0.0)) throw DomainError("simulate: end time must be non-negative");
  if (opt.record_every == 0) throw DomainError("simulate: record interval must be at least one step");
  const double tau_req = opt.tau > 0.0 ? opt.tau : default_tau(p);
  const auto steps = static_cast<std::size_t>(std::ceil(opt.t_end / tau_req - 1e-9));
  const double tau = steps > 0 ? opt.t_end / static_cast<double>(steps) : tau_req;

  ConditionalState st;
  st.cov_m = opt.initial.value_or(Mat2::Identity() * (2.0 * p.n_th + 1.0));
  check_physical(st);

  const NoiseSpec noise = NoiseSpec::make(p.damping.kind, p.n_th);
  Mat8 big = Mat8::Zero();
  big.bottomRightCorner<6, 6>() = noise.cov_in;

  std::vector<ConditionalState> out;
  out.reserve(steps / opt.record_every + 2);
  out.push_back(st);
  for (std::size_t n = 0; n < steps; ++n) {
    const double t = static_cast<double>(n) * tau;
    const StepOperator op = build_step(t, tau, p);
    big.topLeftCorner<2, 2>() = st.cov_m;
    const Mat8 next = op.S * big * op.S.transpose();
    st.t = static_cast<double>(n + 1) * tau;
    if (opt.conditional) {
      st = measurement_update(st, next.topLeftCorner<4, 4>(), opt.r);
    } else {
      st.cov_m = next.topLeftCorner<2, 2>();
    }
    check_physical(st);
    if ((n + 1) % opt.record_every == 0 || n + 1 == steps) out.push_back(st);
  }
  return out;
}

std::vector<ConditionalState> simulate(const ScenarioParams& s, DampingKind kind, double t_end,
                                       double tau) {
  SimulationOptions opt;
  opt.t_end = t_end;
  opt.tau = tau;
  return simulate(DynamicsParams::from(s, kind), opt);
}

ShortTimeVariances analytic_shorttime(double Vx_in, double Vp_in, double kappa, double t) {
  const double k2t = kappa * kappa * t;
  return {1.0 / (1.0 / Vx_in + k2t), Vp_in + k2t};
}

ConditionalState lab_frame(const ConditionalState& state, double omegaM) {
  if (state.frame != Frame::rotating) throw DomainError("lab_frame: state is already in the lab frame");
  const Mat2 Rinv = rotation(omegaM * state.t).transpose();
  ConditionalState out = state;
  out.cov_m = Rinv * state.cov_m * Rinv.transpose();
  out.frame = Frame::lab;
  return out;
}

ConditionalState rotating_frame(const ConditionalState& state, double omegaM) {
  if (state.frame != Frame::lab) throw DomainError("rotating_frame: state is already in the rotating frame");
  const Mat2 R = rotation(omegaM * state.t);
  ConditionalState out = state;
  out.cov_m = R * state.cov_m * R.transpose();
  out.frame = Frame::rotating;
  return out;
}

}  // namespace casimir
