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
#include <vector>

#include "agentic/budget.hpp"
#include "agentic/hybrid_engine.hpp"
#include "agentic/policies.hpp"
#include "agentic/scenario.hpp"

namespace agentic {

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

namespace presets {

/// Regulation-mode closed loop.
Matrix mode_a1();
/// Tracking-mode closed loop; its least stable eigenvalue sets gamma.
Matrix mode_a2();
/// Delay coupling shared by both modes.
Matrix delay_coupling();

/// Declared budget constants used for the sweep and the fully coupled runs.
BudgetOverrides reference_budget();

ScenarioConfig level1_baseline();
/// Dwell-constrained sign switching at tau_a = 1.4 s, no delay, no adaptation.
ScenarioConfig fig1_sweep();
/// Observer/direct-feedback reconfiguration at the fast period.
ScenarioConfig fig2_reconfig();
ScenarioConfig fig3_stable();
ScenarioConfig fig3_unstable();

std::vector<std::string> names();
/// Throws std::invalid_argument for unknown names.
ScenarioConfig by_name(const std::string& name);

}  // namespace presets

// ---------------------------------------------------------------------------
// Dwell/delay sweep
// ---------------------------------------------------------------------------

struct GridSpec {
  std::vector<double> tau_a_values;
  std::vector<double> tau_bar_values;

  /// tau_a in {0.2, 0.4, ..., 4.0}, tau_bar in {0, 0.025, ..., 0.25}.
  static GridSpec defaults();
};

struct SweepGrid {
  std::vector<double> tau_a_values;
  std::vector<double> tau_bar_values;
  /// Row-major by tau_bar: cell (b, a) at b * tau_a_values.size() + a.
  std::vector<StabilityVerdict> verdicts;

  const StabilityVerdict& at(std::size_t bar_index, std::size_t a_index) const;
  bool complete() const { return verdicts.size() == tau_a_values.size() * tau_bar_values.size(); }
};

/// The base scenario with the dwell time and total delay of one grid cell.
ScenarioConfig sweep_cell_scenario(const ScenarioConfig& base, double tau_a, double tau_bar);

/// Simulates and classifies every cell. Cells are independent; `workers` threads
/// pull cells by index, so the result does not depend on scheduling.
/// Throws std::invalid_argument if any cell scenario is invalid.
SweepGrid delay_dwell_sweep(const ScenarioConfig& base, const GridSpec& grid, unsigned workers = 1);

struct BoundaryPoint {
  double tau_bar = 0.0;
  /// Smallest Stable tau_a whose larger neighbours are all Stable; empty when none.
  std::optional<double> tau_a;
};

std::vector<BoundaryPoint> empirical_boundary(const SweepGrid& grid);

// ---------------------------------------------------------------------------
// Level-4 reconfiguration
// ---------------------------------------------------------------------------

/// A plant under two architectures sharing the augmented state z = (x, x_hat):
/// arch_a is direct state feedback u = -K x (estimate idle, decaying),
/// arch_b is observer-based u = -K x_hat with a Luenberger estimator.
/// The estimate is architecture-private and reset on each architecture jump.
struct ReconfigScenario {
  Matrix plant;
  Matrix input;     // n x 1
  Matrix output;    // 1 x n
  Matrix feedback;  // 1 x n
  Matrix observer;  // n x 1
  Matrix arch_a;
  Matrix arch_b;
  ResetMode reset = ResetMode::Zero;
  Vector x0;
  double dt = 1e-3;
  double horizon = 30.0;

  /// Builds both closed loops and checks each is Hurwitz (throws CertificateError if not).
  static ReconfigScenario build(Matrix plant, Matrix input, Matrix output, Matrix feedback, Matrix observer,
                                Vector plant_x0);
  /// Unstable plant xddot = x + u with K = [1.25, 1], L = [2, 2]'.
  static ReconfigScenario make_default();

  std::size_t plant_dimension() const { return plant.rows(); }
  /// Level-4 scenario cycling the two architectures every `period` seconds (inf: never).
  ScenarioConfig to_scenario(double period) const;
};

inline constexpr double kFastReconfigPeriod = 0.1;
inline constexpr double kSlowReconfigPeriod = 10.0;

struct ReconfigRuns {
  Trajectory fast;
  Trajectory slow;
};

ReconfigRuns level4_reconfig_run(const ReconfigScenario& s, double fast_period, double slow_period);

/// max |x| over the run divided by |x(0)|.
double norm_growth_factor(const Trajectory& traj);

// ---------------------------------------------------------------------------
// Fully coupled budget cases
// ---------------------------------------------------------------------------

enum class CoupledCase { Stable, Unstable };

struct CoupledRun {
  ScenarioConfig scenario;
  Trajectory trajectory;
  StabilityVerdict verdict;
  BudgetConstants constants;
  BudgetReport report;
  std::vector<BudgetSample> budget_trace;
  SwitchStats stats;
};

CoupledRun fully_coupled_case(CoupledCase which);
CoupledRun run_with_budget(const ScenarioConfig& scenario);

}  // namespace agentic
