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

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace casimir::cli {

enum class AxisScale { linear, log };

struct Axis {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;
  AxisScale scale = AxisScale::linear;

  /// Parses "value" (single point) or "start:stop:count[:lin|log]".
  static Axis parse(const std::string& name, const std::string& text);
  static Axis point(const std::string& name, double value);
  std::vector<double> values() const;
};

/// Grid behind one sweep. Points are ordered row-major: axis2 varies fastest.
struct SweepSpec {
  Axis axis1;
  std::optional<Axis> axis2;
  std::string quantity;

  std::size_t size() const;
};

enum ExitCode : int { kOk = 0, kUsage = 2, kNumerical = 3, kPhysicality = 4 };

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Reads the process environment.
std::optional<std::string> process_env(const std::string& name);

/// Runs one invocation. `args` excludes the program name. Scenario sources,
/// lowest precedence first: built-in defaults, the config file (--config or
/// CASIMIR_SENSE_CONFIG), overrides in CASIMIR_SENSE_SET (';'-separated
/// key=value), then --set and dedicated flags.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const EnvLookup& env = process_env);

}  // namespace casimir::cli
