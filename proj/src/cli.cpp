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

#include "casimir/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "casimir/errors.hpp"
#include "casimir/gaussian.hpp"
#include "casimir/graphene_optics.hpp"
#include "casimir/interaction.hpp"
#include "casimir/kernels.hpp"
#include "casimir/measurement.hpp"
#include "casimir/scenario.hpp"

#ifndef CASIMIR_SENSE_VERSION
#define CASIMIR_SENSE_VERSION "unknown"
#endif

namespace casimir::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& name, const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v)) {
    throw UsageError(name + ": '" + text + "' is not a finite number");
  }
  return v;
}

struct Common {
  std::string config_path;
  std::string out_path;
  int jobs = 0;
  bool sigma_zero = false;
  std::vector<std::string> sets;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config_path, "scenario file (default: $CASIMIR_SENSE_CONFIG)");
  cmd->add_option("--out", c.out_path, "write CSV here instead of stdout");
  cmd->add_option("--jobs", c.jobs, "worker threads for sweeps (0 = all cores)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--set", c.sets, "override a scenario key, section.key=value")->take_all();
  cmd->add_flag("--sigma-zero", c.sigma_zero, "replace graphene by a transparent sheet");
}

struct Resolved {
  Config config;
  ScenarioParams scenario;
};

Resolved resolve(const Common& c, const EnvLookup& env) {
  Resolved r;
  r.config = Config::parse(to_config_text(reference_scenario()));
  std::string path = c.config_path;
  if (path.empty()) path = env("CASIMIR_SENSE_CONFIG").value_or("");
  if (!path.empty()) {
    const Config file = Config::load_file(path);
    for (const auto& [k, v] : file.values()) r.config.set(k, v);
  }
  if (const auto extra = env("CASIMIR_SENSE_SET")) {
    for (const auto& item : split(*extra, ';')) {
      if (!trim(item).empty()) r.config.apply_override(trim(item));
    }
  }
  for (const auto& item : c.sets) r.config.apply_override(item);
  if (c.sigma_zero) r.config.set("graphene.transparent", "true");
  r.scenario = scenario_from_config(r.config);
  r.scenario.validate();
  return r;
}

void write_header(std::ostream& os, const std::string& command, const Resolved& r,
                  const std::vector<std::string>& extra = {}) {
  os << "# casimir-sense " << CASIMIR_SENSE_VERSION << "\n# command: " << command << "\n";
  std::istringstream text(to_config_text(r.scenario));
  for (std::string line; std::getline(text, line);) os << "# " << line << "\n";
  for (const auto& line : extra) os << "# " << line << "\n";
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("--out: cannot open '" + path + "' for writing");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

const char* status_name(kernels::PointStatus s) {
  switch (s) {
    case kernels::PointStatus::ok: return "ok";
    case kernels::PointStatus::numerical_error: return "numerical_error";
    case kernels::PointStatus::domain_error: return "domain_error";
    case kernels::PointStatus::physicality_error: return "physicality_error";
    case kernels::PointStatus::other_error: return "error";
  }
  return "error";
}

// Exit code for a finished sweep; failed rows are reported on `err`.
template <class R>
int sweep_exit(const std::vector<kernels::PointResult<R>>& rows, std::ostream& err) {
  int code = kOk;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].ok()) continue;
    err << "row " << i << ": " << rows[i].message << "\n";
    const int c = rows[i].status == kernels::PointStatus::physicality_error ? kPhysicality : kNumerical;
    code = std::max(code, c);
  }
  return code;
}

std::string blanks(std::size_t n) { return std::string(n, ','); }

int cmd_conductivity(const Common& c, const std::string& mu_text, double omega, bool imaginary,
                     std::ostream& out, std::ostream& err, const EnvLookup& env) {
  const Resolved r = resolve(c, env);
  const Axis mu = Axis::parse("--mu", mu_text);
  if (!(omega > 0.0)) throw UsageError("--omega: frequency must be positive");
  const std::vector<double> mus = mu.values();
  const GrapheneParams base = r.scenario.graphene.scaled(r.scenario.emitter.omega0);
  auto rows = kernels::sweep_parallel(mus.size(), [&](std::size_t i) {
    GrapheneParams g = base;
    g.mu = mus[i];
    return imaginary ? sigma_imag_axis(omega, g).value : sigma_real_axis(omega, g).value;
  }, c.jobs);

  Output o(c.out_path, out);
  auto& os = o.stream();
  write_header(os, "conductivity", r,
               {std::string("frequency = ") + num(omega) + (imaginary ? " i" : "") + " omega0",
                "sigma in units of e^2/(4 hbar)"});
  os << "mu_over_hbar_omega0,re_sigma,im_sigma,status\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << num(mus[i]) << ",";
    if (rows[i].ok()) {
      os << num(rows[i].value->real()) << "," << num(rows[i].value->imag());
    } else {
      os << ",";
    }
    os << "," << status_name(rows[i].status) << "\n";
  }
  return sweep_exit(rows, err);
}

struct InteractionRow {
  InteractionResult ir;
  CouplingGradient cg;
};

int cmd_interaction(const Common& c, const std::string& d_text, std::ostream& out, std::ostream& err,
                    const EnvLookup& env) {
  const Resolved r = resolve(c, env);
  const ScenarioParams& s = r.scenario;
  const Axis d = d_text.empty() ? Axis::point("--d", s.distance) : Axis::parse("--d", d_text);
  const std::vector<double> ds = d.values();
  for (double v : ds) {
    if (!(v > 0.0)) throw UsageError("--d: distances must be positive");
  }
  auto rows = kernels::sweep_parallel(ds.size(), [&](std::size_t i) {
    return InteractionRow{interaction(ds[i], s.emitter, s.graphene, s.constants),
                          transition_gradient(ds[i], s.emitter, s.graphene, s.constants)};
  }, c.jobs);

  Output o(c.out_path, out);
  auto& os = o.stream();
  write_header(os, "interaction", r, {"units: d in m, shifts and rates in rad/s, g in rad/s per m"});
  os << "d_m,delta_g,delta_e,delta_omega,Gamma,Gamma_rad,Gamma_nonrad,g,status\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << num(ds[i]) << ",";
    if (rows[i].ok()) {
      const auto& ir = rows[i].value->ir;
      os << num(ir.delta_g) << "," << num(ir.delta_e) << "," << num(ir.delta_omega) << ","
         << num(ir.Gamma) << "," << num(ir.Gamma_rad) << "," << num(ir.Gamma_nonrad) << ","
         << num(rows[i].value->cg.g_value);
    } else {
      os << blanks(6);
    }
    os << "," << status_name(rows[i].status) << "\n";
  }
  return sweep_exit(rows, err);
}

int cmd_sensitivity(const Common& c, const std::string& d_text, const std::string& mu_text,
                    std::ostream& out, std::ostream& err, const EnvLookup& env) {
  const Resolved r = resolve(c, env);
  const ScenarioParams& s = r.scenario;
  const double w0 = s.emitter.omega0;
  SweepSpec spec;
  spec.axis1 = d_text.empty() ? Axis::point("--d", s.distance) : Axis::parse("--d", d_text);
  spec.axis2 = mu_text.empty() ? Axis::point("--mu", s.graphene.mu / w0) : Axis::parse("--mu", mu_text);
  spec.quantity = "kappa";
  const std::vector<double> ds = spec.axis1.values();
  const std::vector<double> mus = spec.axis2->values();
  for (double v : ds) {
    if (!(v > 0.0)) throw UsageError("--d: distances must be positive");
  }
  auto rows = kernels::sweep_parallel(spec.size(), [&](std::size_t i) {
    ScenarioParams p = s;
    p.distance = ds[i / mus.size()];
    p.graphene.mu = mus[i % mus.size()] * w0;
    return evaluate_operating_point(p);
  }, c.jobs);

  for (const auto& row : rows) {
    if (!row.ok()) continue;
    if (auto w = drive_consistency_warning(s.drive, row.value->interaction.Gamma)) {
      err << "warning: " << *w << "\n";
    }
    break;
  }

  Output o(c.out_path, out);
  auto& os = o.stream();
  write_header(os, "sensitivity", r,
               {"units: d in m, kappa_inv in m/sqrt(Hz), merit = kappa^2/omegaM",
                "quantum_regime: kappa_inv < x_zpm/sqrt(omegaM); kappa_inv empty when kappa = 0"});
  os << "d_m,mu_over_hbar_omega0,kappa_inv_m_per_sqrt_hz,merit,merit_ideal,quantum_regime,status\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << num(ds[i / mus.size()]) << "," << num(mus[i % mus.size()]) << ",";
    if (rows[i].ok()) {
      const CouplingResult& k = rows[i].value->coupling;
      if (k.kappa_inv_si) os << num(*k.kappa_inv_si);
      os << "," << num(k.merit) << "," << num(k.merit_ideal) << ","
         << (k.quantum_regime ? "true" : "false");
    } else {
      os << blanks(3);
    }
    os << "," << status_name(rows[i].status) << "\n";
  }
  return sweep_exit(rows, err);
}

struct SqueezeOptions {
  std::string damping;
  std::optional<double> t_end;
  std::optional<double> tau;
  std::size_t record_every = 0;
  bool unconditional = false;
  std::string frame = "rotating";
};

int cmd_squeeze(const Common& c, const SqueezeOptions& so, std::ostream& out, std::ostream& err,
                const EnvLookup& env) {
  const Resolved r = resolve(c, env);
  const ScenarioParams& s = r.scenario;
  const Config& cfg = r.config;

  std::string damping = so.damping;
  if (damping.empty()) damping = cfg.has("simulation.damping") ? cfg.get_string("simulation.damping") : "momentum";
  DampingKind kind;
  try {
    kind = parse_damping(damping);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--damping: ") + e.what());
  }
  if (so.frame != "rotating" && so.frame != "lab") throw UsageError("--frame: expected 'rotating' or 'lab'");
  const double t_end = so.t_end ? *so.t_end
                                : (cfg.has("simulation.t_end_s") ? cfg.get_double("simulation.t_end_s") : 3e-6);
  if (!(t_end > 0.0)) throw UsageError("--t-end: must be positive");

  const OperatingPoint op = evaluate_operating_point(s);
  if (auto w = drive_consistency_warning(s.drive, op.interaction.Gamma)) err << "warning: " << *w << "\n";
  const DynamicsParams dp = DynamicsParams::from(s, op.coupling, kind);

  double tau = so.tau ? *so.tau : (cfg.has("simulation.tau_s") ? cfg.get_double("simulation.tau_s") : 0.0);
  if (tau < 0.0) throw UsageError("--tau: must be positive");
  if (tau == 0.0) tau = default_tau(dp);
  if (!(tau * dp.max_rate() < kStepRateLimit)) {
    throw UsageError("--tau: step too large, tau * rate = " + num(tau * dp.max_rate()) + " (limit " +
                     num(kStepRateLimit) + ")");
  }
  const auto steps = static_cast<std::size_t>(std::ceil(t_end / tau - 1e-9));

  SimulationOptions opt;
  opt.t_end = t_end;
  opt.tau = tau;
  opt.conditional = !so.unconditional;
  opt.record_every = so.record_every > 0 ? so.record_every : std::max<std::size_t>(1, steps / 1000);
  const std::vector<ConditionalState> traj = simulate(dp, opt);

  auto best = std::min_element(traj.begin(), traj.end(),
                               [](const ConditionalState& a, const ConditionalState& b) { return a.Vx() < b.Vx(); });

  Output o(c.out_path, out);
  auto& os = o.stream();
  write_header(os, "squeeze", r,
               {"damping = " + damping, "t_end_s = " + num(t_end),
                "tau_s = " + num(t_end / static_cast<double>(std::max<std::size_t>(steps, 1))),
                "kappa_per_sqrt_s = " + num(op.coupling.kappa), "n_th = " + num(s.mechanics.n_th),
                std::string("measurement = ") + (so.unconditional ? "unconditional" : "conditional"),
                "variances in units of x_zpm^2 (vacuum = 1)"});
  os << "t_s,Vx,Vp,Vxp,frame,damping\n";
  for (const auto& st : traj) {
    const ConditionalState v = so.frame == "lab" ? lab_frame(st, dp.omegaM) : st;
    os << num(v.t) << "," << num(v.Vx()) << "," << num(v.Vp()) << "," << num(v.Vxp()) << ","
       << to_string(v.frame) << "," << damping << "\n";
  }
  const std::string summary = "summary: min_Vx_rotating = " + num(best->Vx()) + " at t_s = " + num(best->t) +
                              (best->Vx() < 1.0 ? " (squeezed)" : " (not squeezed)");
  os << "# " << summary << "\n";
  if (o.to_file()) out << summary << "\n";
  return kOk;
}

}  // namespace

Axis Axis::parse(const std::string& name, const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  Axis a;
  a.name = name;
  if (parts.size() == 1) {
    a.start = a.stop = parse_number(name, parts[0]);
    return a;
  }
  if (parts.size() < 3 || parts.size() > 4) {
    throw UsageError(name + ": expected 'value' or 'start:stop:count[:lin|log]', got '" + text + "'");
  }
  a.start = parse_number(name, parts[0]);
  a.stop = parse_number(name, parts[1]);
  const double count = parse_number(name, parts[2]);
  if (count < 2.0 || count != std::floor(count) || count > 1e7) {
    throw UsageError(name + ": a range needs an integer count of at least 2");
  }
  a.count = static_cast<std::size_t>(count);
  if (!(a.start < a.stop)) throw UsageError(name + ": range start must be below its stop");
  if (parts.size() == 4) {
    const std::string sc = trim(parts[3]);
    if (sc == "log") {
      a.scale = AxisScale::log;
    } else if (sc != "lin" && sc != "linear") {
      throw UsageError(name + ": scale must be 'lin' or 'log'");
    }
  }
  if (a.scale == AxisScale::log && !(a.start > 0.0)) {
    throw UsageError(name + ": log scale needs positive endpoints");
  }
  return a;
}

Axis Axis::point(const std::string& name, double value) {
  Axis a;
  a.name = name;
  a.start = a.stop = value;
  return a;
}

std::vector<double> Axis::values() const {
  std::vector<double> v(count);
  if (count == 1) {
    v[0] = start;
    return v;
  }
  const double n = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / n;
    v[i] = scale == AxisScale::log ? start * std::pow(stop / start, f) : start + (stop - start) * f;
  }
  v.back() = stop;
  return v;
}

std::size_t SweepSpec::size() const { return axis1.count * (axis2 ? axis2->count : 1); }

std::optional<std::string> process_env(const std::string& name) {
  const char* v = std::getenv(name.c_str());
  if (v == nullptr) return std::nullopt;
  return std::string(v);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
  CLI::App app{"Casimir-Polder coupling of an emitter to a graphene sheet and conditional mechanical squeezing",
               "casimir-sense"};
  app.set_version_flag("--version", CASIMIR_SENSE_VERSION);
  app.require_subcommand(1);

  Common common;

  auto* cond = app.add_subcommand("conductivity", "graphene conductivity versus Fermi energy");
  add_common(cond, common);
  std::string cond_mu = "0:1.2:100";
  double cond_omega = 1.0;
  bool cond_imag = false;
  cond->add_option("--mu", cond_mu, "Fermi energy / hbar omega0: value or start:stop:count[:lin|log]");
  cond->add_option("--omega", cond_omega, "frequency in units of omega0");
  cond->add_flag("--imaginary", cond_imag, "evaluate at imaginary frequency i*omega");

  auto* inter = app.add_subcommand("interaction", "level shifts, decay rates and coupling gradient");
  add_common(inter, common);
  std::string inter_d;
  inter->add_option("--d", inter_d, "distance in m: value or start:stop:count[:lin|log]");

  auto* sens = app.add_subcommand("sensitivity", "inverse coupling strength over a (d, mu) grid");
  add_common(sens, common);
  std::string sens_d;
  std::string sens_mu;
  sens->add_option("--d", sens_d, "distance in m: value or start:stop:count[:lin|log]");
  sens->add_option("--mu", sens_mu, "Fermi energy / hbar omega0: value or start:stop:count[:lin|log]");

  auto* sq = app.add_subcommand("squeeze", "conditional variance trajectory under homodyne monitoring");
  add_common(sq, common);
  SqueezeOptions so;
  sq->add_option("--damping", so.damping, "symmetric | momentum (default momentum)");
  sq->add_option("--t-end", so.t_end, "simulated time in s (default 3e-6)");
  sq->add_option("--tau", so.tau, "time step in s (default: 2.5e-4 / fastest rate)");
  sq->add_option("--record-every", so.record_every, "write every N-th step (default: about 1000 rows)");
  sq->add_flag("--unconditional", so.unconditional, "discard the measurement record");
  sq->add_option("--frame", so.frame, "rotating | lab");

  auto* schema = app.add_subcommand("schema", "print the scenario file keys");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*schema) {
      out << scenario_schema()
          << "[simulation]\n"
          << "damping = <name>                     # optional, symmetric | momentum\n"
          << "t_end_s = <s>                        # optional, squeeze duration\n"
          << "tau_s = <s>                          # optional, squeeze time step\n";
      return kOk;
    }
    if (*cond) return cmd_conductivity(common, cond_mu, cond_omega, cond_imag, out, err, env);
    if (*inter) return cmd_interaction(common, inter_d, out, err, env);
    if (*sens) return cmd_sensitivity(common, sens_d, sens_mu, out, err, env);
    if (*sq) return cmd_squeeze(common, so, out, err, env);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PhysicalityError& e) {
    err << "error: " << e.what() << "\n";
    return kPhysicality;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kNumerical;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kNumerical;
  }
  return kUsage;
}

}  // namespace casimir::cli
