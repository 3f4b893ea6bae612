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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace casimir {

/// Flat INI-style key/value store. Keys are addressed as "section.key".
///
/// Syntax: `[section]` headers, `key = value` lines, `#` or `;` comments
/// (full-line or trailing). Keys outside any section live at top level.
class Config {
 public:
  static Config parse(std::string_view text);
  static Config load_file(const std::string& path);

  bool has(const std::string& key) const { return values_.contains(key); }
  void set(const std::string& key, std::string value) { values_[key] = std::move(value); }

  /// Parses an override of the form `section.key=value`.
  void apply_override(std::string_view assignment);

  const std::string& get_string(const std::string& key) const;
  double get_double(const std::string& key) const;
  std::optional<double> get_optional_double(const std::string& key) const;
  bool get_bool(const std::string& key, bool fallback) const;

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace casimir
