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

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "agentic/core_model.hpp"
#include "agentic/policies.hpp"

namespace agentic {

enum class ResetMode { Zero, CarryOver };

/// Supervisory reconfiguration schedule: c cycles 1 -> 2 -> ... -> C -> 1 every `period` seconds.
/// On each c-jump the `private_states` (0-based indices into x) are reset per `reset`.
struct ReconfigSpec {
  double period = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> private_states;
  ResetMode reset = ResetMode::Zero;

  bool operator==(const ReconfigSpec&) const = default;
};

struct IntegratorSettings {
  double dt = 1e-3;        // s
  double horizon = 30.0;   // s
  Vector x0{1.0, -1.0};
  Vector theta0{0.0};
  Vector m0;
  Vector zeta0;
  int sigma0 = 1;
  int c0 = 1;

  bool operator==(const IntegratorSettings&) const = default;
};

struct ClassifierTolerances {
  double settle_tol = 1e-2;
  double blowup_tol = 1e6;

  bool operator==(const ClassifierTolerances&) const = default;
};

/// Declared budget constants. Unset fields are derived from the scenario when possible.
struct BudgetOverrides {
  std::optional<double> gamma;
  std::optional<double> nu_sigma;
  std::optional<double> nu_c;
  std::optional<double> l_theta;
  std::optional<double> l_d;
  std::optional<double> beta;
  std::optional<double> tau_a_sigma;
  std::optional<double> tau_a_c;
  /// One jump term for both sigma and c jumps (nu_sigma, tau_a_sigma).
  bool merged_jumps = false;

  bool operator==(const BudgetOverrides&) const = default;
};

struct ScenarioConfig {
  std::string name = "scenario";
  AgencyLevel level = AgencyLevel::L1;
  int num_modes = 1;
  int num_configs = 1;
  /// Flow table, indexed (c - 1) * num_modes + (sigma - 1).
  std::vector<ModeDynamics> dynamics;
  DelayBudget delays;
  std::optional<SwitchingPolicy> policy;
  AdaptationLaw adaptation;
  ReconfigSpec reconfig;
  double eta_d = 0.0;         // design drift rate bound
  double memory_rate = 1.0;   // m_dot = -memory_rate * m
  IntegratorSettings integrator;
  ClassifierTolerances classifier;
  BudgetOverrides budget;

  const ModeDynamics& dynamics_for(int sigma, int c) const;
  std::size_t state_dimension() const;

  bool switching_enabled() const { return policy.has_value(); }
  bool reconfiguration_enabled() const;
  bool adaptation_active() const { return adaptation.enabled || adaptation.rho > 0.0; }
  bool drift_active() const { return eta_d > 0.0; }

  bool operator==(const ScenarioConfig&) const = default;
};

struct Violation {
  std::string field;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool mentions(std::string_view text) const;
  std::string to_string() const;
};

/// Report-style check of a scenario. Never throws; an empty report means runnable.
ValidationReport validate_scenario(const ScenarioConfig& scenario);

}  // namespace agentic
