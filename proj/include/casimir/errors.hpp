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

#include <stdexcept>
#include <string>

namespace casimir {

// Configuration problem tied to one key of the scenario file.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

// Argument outside the domain of a physical formula (negative frequency, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A quadrature or extrapolation that did not reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double residual)
      : std::runtime_error(what + " (residual estimate " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// A covariance matrix that stopped satisfying the uncertainty relation.
class PhysicalityError : public std::runtime_error {
 public:
  PhysicalityError(const std::string& what, double time, double det)
      : std::runtime_error(what), time_(time), det_(det) {}
  double time() const noexcept { return time_; }
  double determinant() const noexcept { return det_; }

 private:
  double time_;
  double det_;
};

}  // namespace casimir
