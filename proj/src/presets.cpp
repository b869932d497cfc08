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

#include <stdexcept>

#include "agentic/experiments.hpp"

namespace agentic::presets {

Matrix mode_a1() { return Matrix{{-3.8897, -3.2679}, {1.5381, 0.7197}}; }
Matrix mode_a2() { return Matrix{{-3.1172, 0.4840}, {-5.4957, 0.4516}}; }
Matrix delay_coupling() { return Matrix{{0.0, 0.0}, {0.8, 0.2}}; }

BudgetOverrides reference_budget() {
  BudgetOverrides b;
  b.gamma = 0.609;
  b.nu_sigma = 2.2;
  b.l_theta = 0.8;
  b.beta = 2.5;
  b.merged_jumps = true;
  return b;
}

namespace {

ScenarioConfig switched_base(const std::string& name) {
  ScenarioConfig s;
  s.name = name;
  s.level = AgencyLevel::L3;
  s.num_modes = 2;
  s.num_configs = 1;
  s.dynamics = {ModeDynamics{mode_a1(), delay_coupling(), "A1"}, ModeDynamics{mode_a2(), delay_coupling(), "A2"}};
  s.policy = SwitchingPolicy::dwell_constrained(1.4, SwitchingPolicy::threshold_sign(0));
  s.budget = reference_budget();
  return s;
}

void set_total_delay(ScenarioConfig& s, double tau_bar) {
  s.delays = DelayBudget{};
  s.delays.tau_u = tau_bar;
  s.delays.tau_bar = tau_bar;
}

ScenarioConfig coupled(const std::string& name, double rho, double tau_a, double tau_bar) {
  ScenarioConfig s = switched_base(name);
  s.level = AgencyLevel::L4;
  s.adaptation = AdaptationLaw{.rho = rho, .kappa = 0.3, .enabled = true, .coupling_gain = 0.0};
  s.policy = SwitchingPolicy::dwell_constrained(tau_a, SwitchingPolicy::threshold_sign(0));
  set_total_delay(s, tau_bar);
  return s;
}

}  // namespace

ScenarioConfig level1_baseline() {
  ScenarioConfig s;
  s.name = "level1_baseline";
  s.level = AgencyLevel::L1;
  s.num_modes = 1;
  s.num_configs = 1;
  s.dynamics = {ModeDynamics{mode_a1(), Matrix::zeros(2), "A1"}};
  return s;
}

ScenarioConfig fig1_sweep() {
  ScenarioConfig s = switched_base("fig1_sweep");
  set_total_delay(s, 0.0);
  return s;
}

ScenarioConfig fig2_reconfig() {
  ScenarioConfig s = ReconfigScenario::make_default().to_scenario(kFastReconfigPeriod);
  s.name = "fig2_reconfig";
  return s;
}

ScenarioConfig fig3_stable() { return coupled("fig3_stable", 0.15, 4.0, 0.03); }
ScenarioConfig fig3_unstable() { return coupled("fig3_unstable", 3.5, 0.4, 0.20); }

std::vector<std::string> names() {
  return {"level1_baseline", "fig1_sweep", "fig2_reconfig", "fig3_stable", "fig3_unstable"};
}

ScenarioConfig by_name(const std::string& name) {
  if (name == "level1_baseline") return level1_baseline();
  if (name == "fig1_sweep") return fig1_sweep();
  if (name == "fig2_reconfig") return fig2_reconfig();
  if (name == "fig3_stable") return fig3_stable();
  if (name == "fig3_unstable") return fig3_unstable();
  throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace agentic::presets
