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
#include <ostream>
#include <string>

#include "agentic/budget.hpp"
#include "agentic/scenario.hpp"

namespace agentic::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kNumericalBlowup = 3 };

struct CommandOptions {
  std::filesystem::path config;
  std::filesystem::path out_dir = ".";
  unsigned workers = 1;
  std::optional<double> dt;
  std::optional<double> horizon;
};

/// trajectory.csv, events.csv, summary.csv. Returns 3 when the run hits non-finite values.
int cmd_simulate(const CommandOptions& opts, std::ostream& out, std::ostream& err);
/// sweep.csv and boundary.csv over the config's `sweep` section (default grid otherwise).
int cmd_sweep(const CommandOptions& opts, std::ostream& out, std::ostream& err);
/// budget.csv and certificate.txt.
int cmd_budget(const CommandOptions& opts, std::ostream& out, std::ostream& err);
/// Certificate report on `out` without simulating.
int cmd_certify(const CommandOptions& opts, std::ostream& out, std::ostream& err);

/// Applies --dt / --horizon overrides.
void apply_overrides(ScenarioConfig& scenario, const CommandOptions& opts);

/// Dwell-time checks, fully coupled margin and the per-level rule table, with the
/// origin of every constant.
std::string certificate_report(const ScenarioConfig& scenario, const ResolvedBudget& resolved);

}  // namespace agentic::cli
