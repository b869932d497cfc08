/******************************************************************************
 * Copyright 2026 The Agentic Loop Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "agentic/experiments.hpp"
#include "agentic/scenario.hpp"

namespace agentic {

/// Malformed or unreadable configuration. `field()` is the dotted path of the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error("config field '" + field + "': " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Parses a YAML scenario document. Unknown keys are rejected.
ScenarioConfig parse_scenario(const std::string& text);
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// YAML with 17 significant digits per number, so parse(serialize(s)) == s.
std::string serialize_scenario(const ScenarioConfig& scenario);

/// The optional top-level `sweep` section (tau_a_values, tau_bar_values).
std::optional<GridSpec> parse_grid_spec(const std::string& text);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace agentic
