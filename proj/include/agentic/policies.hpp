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
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "agentic/linalg.hpp"

namespace agentic {

struct Trajectory;

enum class PolicyKind { ThresholdSign, Hysteresis, DwellConstrained };

/// One piece of a state-dependent hysteresis band: h applies while |x| < norm_upper.
struct BandSegment {
  double norm_upper = std::numeric_limits<double>::infinity();
  double h = 0.0;

  bool operator==(const BandSegment&) const = default;
};

/// Endogenous mode-selection rule over modes {1, 2}.
///
/// The decision score is x[score_channel] read from history at t - decision_delay.
/// `score_channel` is 0-based here; configuration files use 1-based channels.
struct SwitchingPolicy {
  PolicyKind kind = PolicyKind::ThresholdSign;
  std::size_t score_channel = 0;
  double band = 0.0;
  std::vector<BandSegment> band_map;
  double tau_a = 0.0;
  std::shared_ptr<const SwitchingPolicy> inner;
  double decision_delay = 0.0;
  /// Analytic bound on |d score / dt|, when the user has one.
  std::optional<double> m_upper;

  static SwitchingPolicy threshold_sign(std::size_t channel = 0);
  static SwitchingPolicy hysteresis(double h, std::size_t channel = 0);
  static SwitchingPolicy dwell_constrained(double tau_a, SwitchingPolicy inner);

  /// Band in effect at information-state norm `info_norm`.
  double band_at(double info_norm) const;
  /// Smallest band the policy can use (h lower bound).
  double band_lower() const;

  /// The policy that actually produces decisions (self unless dwell-wrapped).
  const SwitchingPolicy& decision_rule() const;

  bool operator==(const SwitchingPolicy& other) const;
};

/// Next mode. Total: always returns 1 or 2 (or `current_mode` when holding).
int decide_mode(const SwitchingPolicy& policy, double score, int current_mode, double t, double last_switch,
                double info_norm = 0.0);

/// kappa * tanh(|x|_2), in [0, kappa).
double adaptation_target(std::span<const double> x, double kappa);

/// Bounded design drift for Level-5 runs: eta_d * sin(t) along the unit diagonal.
Vector design_drift(std::span<const double> d, double eta_d, double t);

struct SwitchStats {
  std::vector<double> switch_times;
  double min_gap = std::numeric_limits<double>::infinity();
  double mean_gap = std::numeric_limits<double>::infinity();

  std::size_t count() const { return switch_times.size(); }
  /// Number of switches in (t, t + horizon].
  std::size_t n_sigma(double t, double horizon) const;
  /// Smallest chatter bound N0 with N(t, t+T) <= N0 + T / tau_a over every window.
  double chatter_bound(double tau_a) const;
};

SwitchStats switch_statistics(const Trajectory& traj);

/// Uniform dwell time guaranteed by a hysteresis band h_lower under score rate bound m_upper.
/// Throws std::invalid_argument for nonpositive inputs.
double hysteresis_dwell_bound(double h_lower, double m_upper);

/// Whether a hysteresis-induced dwell time meets the average dwell-time requirement
/// ln(nu) / (gamma - l_theta * rho). False when the margin itself is nonpositive.
bool hysteresis_meets_dwell_condition(double tau_h, double gamma, double l_theta, double rho, double nu);

}  // namespace agentic
