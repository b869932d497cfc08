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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "agentic/core_model.hpp"

namespace agentic {

struct Trajectory;
struct ScenarioConfig;

/// Constants of the shared stability budget. A jump mechanism is enabled when
/// its dwell time is set; disabled mechanisms contribute nothing.
struct BudgetConstants {
  double gamma = 0.0;      // nominal decay, 1/s
  double nu_sigma = 1.0;   // controller-switch jump growth
  double nu_c = 1.0;       // reconfiguration jump growth
  double l_theta = 0.0;    // adaptation sensitivity
  double rho = 0.0;        // adaptation rate, 1/s
  double l_d = 0.0;        // design sensitivity
  double eta_d = 0.0;      // design drift rate
  double beta = 0.0;       // delay penalty, 1/s per s
  double tau_bar = 0.0;    // total delay bound, s
  std::optional<double> tau_a_sigma;  // s
  std::optional<double> tau_a_c;      // s
};

enum class Certification { Certified, NotCertified };
std::string_view to_string(Certification c);

struct BudgetReport {
  double gamma = 0.0;
  double term_adaptation = 0.0;
  double term_design = 0.0;
  double term_delay = 0.0;
  double term_switch = 0.0;
  double term_reconfig = 0.0;
  /// gamma minus all five terms.
  double lambda = 0.0;
  /// gamma minus the three flow terms.
  double lambda_flow = 0.0;
  bool flow_margin_positive = false;  // lambda_flow > 0
  bool jump_rate_within_margin = false;  // lambda > 0, i.e. lambda_flow exceeds the jump terms
  Certification verdict = Certification::NotCertified;

  double total_cost() const { return term_adaptation + term_design + term_delay + term_switch + term_reconfig; }
};

/// Exact term breakdown of the budget. Throws std::invalid_argument for invalid
/// constants (gamma <= 0, nu < 1, negative rates, or a zero dwell time).
BudgetReport effective_margin(const BudgetConstants& c);

/// Both conditions of the fully coupled certificate; identical to effective_margin.
BudgetReport check_theorem2(const BudgetConstants& c);

struct CheckResult {
  bool margin_ok = false;
  double margin = 0.0;  // gamma minus the flow penalty
  std::optional<double> required_tau_a;
  double tau_a = 0.0;
  bool satisfied = false;
};

/// Switching under adaptation: margin gamma - l_theta*rho, requirement ln(nu)/margin.
CheckResult check_theorem1(double gamma, double l_theta, double rho, double nu, double tau_a);

/// Switching under delay: margin gamma - beta*tau_bar, requirement ln(nu)/margin.
CheckResult check_prop1(double gamma, double beta, double tau_bar, double nu, double tau_a);

struct RuleRow {
  std::string level;       // "L2", "L3", "L3+delay", "L4", "L5"
  std::string constraint;  // printable form of the inequality
  std::string design_rule;
  bool pass = false;
  /// Positive when the rule holds: margin for L2/L5, dwell excess (s) for L3/L4.
  double slack = 0.0;
  std::optional<double> required;
};

using RuleTable = std::vector<RuleRow>;

/// Rows of the per-level constraint table that apply at `level` (cumulative),
/// skipping rows whose mechanism is disabled in `c`.
RuleTable design_rule_report(const BudgetConstants& c, AgencyLevel level);

struct BudgetSample {
  double t = 0.0;
  BudgetReport report;
};

/// Per-step budget along a trajectory. Uses declared constants, so traces are
/// piecewise constant.
std::vector<BudgetSample> budget_timeseries(const Trajectory& traj, const BudgetConstants& c);

enum class ConstantSource { Declared, Computed, Scenario, Disabled };
std::string_view to_string(ConstantSource s);

/// Budget constants resolved for a scenario, with where each one came from.
struct ResolvedBudget {
  BudgetConstants constants;
  std::map<std::string, ConstantSource> sources;
  /// Constants that are required but neither declared nor derivable.
  std::vector<std::string> missing;
  /// Values computed from quadratic certificates, reported next to declared ones.
  std::optional<double> computed_gamma;
  std::optional<double> computed_nu;

  bool complete() const { return missing.empty(); }
};

/// Declared values win; gamma and nu fall back to Q = I Lyapunov certificates of
/// the scenario's flow matrices; rho, tau_bar, eta_d and dwell times come from the
/// scenario's mechanisms. Mechanisms the agency level disables contribute zero.
ResolvedBudget resolve_budget(const ScenarioConfig& scenario);

}  // namespace agentic
