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

#include <cstddef>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "agentic/core_model.hpp"
#include "agentic/kernels.hpp"
#include "agentic/scenario.hpp"

namespace agentic {

/// Time-indexed samples of x supporting delayed reads x(t - tau).
///
/// Queries before the first sample return the constant initial history.
/// With a finite `window`, samples older than newest - window are dropped.
class HistoryBuffer {
 public:
  explicit HistoryBuffer(Vector initial, double window = std::numeric_limits<double>::infinity());

  /// Appends (t, x). Times must be strictly increasing and x must match the dimension.
  void push(double t, std::span<const double> x);
  /// Overwrites the newest sample's value (post-jump state at the same instant).
  void replace_newest(std::span<const double> x);

  /// Linear interpolation between bracketing samples; see sample_delayed.
  void sample_into(double t_query, std::span<double> out) const;
  Vector sample(double t_query) const;

  std::size_t dimension() const { return initial_.size(); }
  std::size_t size() const { return times_.size(); }
  bool empty() const { return times_.empty(); }
  double newest_time() const;
  double oldest_time() const;
  const Vector& initial() const { return initial_; }

 private:
  Vector initial_;
  double window_;
  std::deque<double> times_;
  std::deque<double> values_;
};

/// Thrown for reads later than the newest sample.
class FutureReadError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

Vector sample_delayed(const HistoryBuffer& h, double t_query);

/// Thrown when a flow step produces non-finite values. Carries the last finite state.
class IntegrationBlowup : public std::runtime_error {
 public:
  IntegrationBlowup(const std::string& what, AugmentedState last_finite)
      : std::runtime_error(what), last_finite_(std::move(last_finite)) {}
  const AugmentedState& last_finite() const { return last_finite_; }

 private:
  AugmentedState last_finite_;
};

/// Settings of one flow step that do not live in the mode or the adaptation law.
struct FlowContext {
  double tau_bar = 0.0;
  double memory_rate = 1.0;
  double eta_d = 0.0;
  const kernels::KernelTable* kernels = nullptr;  // null selects kernels::table(Auto)
};

/// One classical RK4 step of the coupled (x, theta, m, zeta) flow. sigma and c are unchanged.
///
/// The delayed term is evaluated at each stage time t_s - tau_bar from `history`.
/// With tau_bar == 0 the stage state itself is used, so the step is exactly the
/// undelayed RK4 of xdot = (A + A_d) x.
AugmentedState step_flow(const AugmentedState& s, const ModeDynamics& dyn, const AdaptationLaw& law,
                         const HistoryBuffer& history, double dt, const FlowContext& ctx = {});

enum class EventKind { Switch, Reconfig };
std::string_view to_string(EventKind kind);

struct Event {
  double t = 0.0;
  std::size_t step = 0;
  EventKind kind = EventKind::Switch;
  int from = 1;
  int to = 1;

  bool operator==(const Event&) const = default;
};

enum class Termination { Completed, Diverged, NonFinite };
std::string_view to_string(Termination t);

struct Trajectory {
  std::vector<AugmentedState> states;
  std::vector<Event> events;
  double dt = 0.0;
  Termination termination = Termination::Completed;
  /// Largest |x| seen along the run.
  double max_norm = 0.0;
  /// Largest observed |score(t_k) - score(t_{k-1})| / dt; 0 without a switching policy.
  double empirical_score_rate = 0.0;

  bool truncated() const { return termination != Termination::Completed; }
  const AugmentedState& final_state() const { return states.back(); }
};

struct SimulateOptions {
  kernels::Backend backend = kernels::Backend::Auto;
};

/// Runs the scenario over [0, horizon] with fixed step dt.
///
/// At each step boundary the switching policy is queried first, then the
/// reconfiguration schedule; each may fire at most once. The run stops early
/// (termination Diverged) once |x| exceeds the classifier's blowup tolerance,
/// and (termination NonFinite) if a step produces non-finite values.
/// Throws std::invalid_argument for scenarios that fail validate_scenario.
Trajectory simulate(const ScenarioConfig& scenario, const SimulateOptions& options = {});

enum class Outcome { Stable, Unstable, Inconclusive };
std::string_view to_string(Outcome o);

struct StabilityVerdict {
  Outcome outcome = Outcome::Inconclusive;
  double final_norm = 0.0;
  double max_norm = 0.0;
};

StabilityVerdict classify_outcome(const Trajectory& traj, double settle_tol, double blowup_tol);

}  // namespace agentic
