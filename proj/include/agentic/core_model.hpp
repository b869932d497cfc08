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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agentic/linalg.hpp"

namespace agentic {

/// Full state of the agentic closed loop at one instant.
///
/// Mode and configuration indices are 1-based: sigma in {1..P}, c in {1..C}.
/// `m` and `zeta` may be empty when the scenario carries no memory or goal.
struct AugmentedState {
  double t = 0.0;
  Vector x;
  Vector m;
  Vector theta;
  int sigma = 1;
  int c = 1;
  Vector zeta;

  bool operator==(const AugmentedState&) const = default;
};

/// The discrete and goal part of the state: (zeta, sigma, c).
struct DesignTuple {
  Vector zeta;
  int sigma = 1;
  int c = 1;

  bool operator==(const DesignTuple&) const = default;
};

DesignTuple project_design_state(const AugmentedState& s);

/// Violated invariants of a single state; empty when the state is valid.
std::vector<std::string> state_violations(const AugmentedState& s, int num_modes, int num_configs);

/// Linear flow of one (mode, configuration) pair: xdot = a x + a_delay x(t - tau).
struct ModeDynamics {
  Matrix a;
  Matrix a_delay;
  std::string label;

  std::size_t dimension() const { return a.rows(); }
  bool operator==(const ModeDynamics&) const = default;
};

/// theta_dot = rho * (kappa * tanh(|x|) - theta) while enabled; theta frozen otherwise.
///
/// `coupling_gain` feeds theta back into the plant as xdot += gain * theta_1 * x.
/// It defaults to 0, which keeps theta coupled to the budget only.
struct AdaptationLaw {
  double rho = 0.0;
  double kappa = 0.3;
  bool enabled = false;
  double coupling_gain = 0.0;

  bool operator==(const AdaptationLaw&) const = default;
};

enum class AgencyLevel { L1 = 1, L2 = 2, L3 = 3, L4 = 4, L5 = 5 };

/// Which decision mechanisms a level grants. The hierarchy is cumulative.
struct Mechanisms {
  bool adaptation = false;
  bool switching = false;
  bool reconfiguration = false;
  bool design_drift = false;

  bool operator==(const Mechanisms&) const = default;
};

Mechanisms permitted_mechanisms(AgencyLevel level);
std::string_view to_string(AgencyLevel level);
std::optional<AgencyLevel> parse_agency_level(std::string_view text);

/// Per-channel latencies (seconds) and their declared supremum `tau_bar`.
struct DelayBudget {
  double tau_u = 0.0;
  double tau_theta = 0.0;
  double tau_z = 0.0;
  double tau_sigma = 0.0;
  double tau_c = 0.0;
  double tau_zeta = 0.0;
  double tau_bar = 0.0;

  double channel_sum() const { return tau_u + tau_theta + tau_z + tau_sigma + tau_c + tau_zeta; }
  bool operator==(const DelayBudget&) const = default;
};

}  // namespace agentic
