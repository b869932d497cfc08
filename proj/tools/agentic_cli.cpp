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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "agentic/commands.hpp"
#include "agentic/config_io.hpp"
#include "agentic/experiments.hpp"

namespace {

void add_common(CLI::App* sub, agentic::cli::CommandOptions& opts, bool writes) {
  sub->add_option("--config", opts.config, "Scenario YAML file")->required()->check(CLI::ExistingFile);
  if (writes) sub->add_option("--out", opts.out_dir, "Output directory");
  sub->add_option("--dt", opts.dt, "Integrator step (s)")->check(CLI::PositiveNumber);
  sub->add_option("--horizon", opts.horizon, "Simulation horizon (s)")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator and stability certificates for agentic control loops"};
  app.require_subcommand(1);

  agentic::cli::CommandOptions opts;
  auto* simulate = app.add_subcommand("simulate", "Run one scenario; write trajectory, events and summary CSVs");
  add_common(simulate, opts, true);
  auto* sweep = app.add_subcommand("sweep", "Dwell/delay grid sweep; write sweep and boundary CSVs");
  add_common(sweep, opts, true);
  sweep->add_option("--workers", opts.workers, "Worker threads")->check(CLI::PositiveNumber);
  auto* budget = app.add_subcommand("budget", "Budget trace CSV and certificate report");
  add_common(budget, opts, true);
  auto* certify = app.add_subcommand("certify", "Certificate report only");
  add_common(certify, opts, false);

  std::string preset_name;
  auto* preset = app.add_subcommand("preset", "Print a shipped preset as YAML");
  preset->add_option("name", preset_name, "Preset name")->required()->check(CLI::IsMember(agentic::presets::names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : agentic::cli::kConfigError;
  }

  if (*simulate) return agentic::cli::cmd_simulate(opts, std::cout, std::cerr);
  if (*sweep) return agentic::cli::cmd_sweep(opts, std::cout, std::cerr);
  if (*budget) return agentic::cli::cmd_budget(opts, std::cout, std::cerr);
  if (*certify) return agentic::cli::cmd_certify(opts, std::cout, std::cerr);
  if (*preset) {
    std::cout << agentic::serialize_scenario(agentic::presets::by_name(preset_name));
    return 0;
  }
  return 0;
}
