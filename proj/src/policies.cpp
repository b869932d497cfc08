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

#include "agentic/policies.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "agentic/hybrid_engine.hpp"

namespace agentic {

SwitchingPolicy SwitchingPolicy::threshold_sign(std::size_t channel) {
  SwitchingPolicy p;
  p.kind = PolicyKind::ThresholdSign;
  p.score_channel = channel;
  return p;
}

SwitchingPolicy SwitchingPolicy::hysteresis(double h, std::size_t channel) {
  SwitchingPolicy p;
  p.kind = PolicyKind::Hysteresis;
  p.band = h;
  p.score_channel = channel;
  return p;
}

SwitchingPolicy SwitchingPolicy::dwell_constrained(double tau_a, SwitchingPolicy inner) {
  SwitchingPolicy p;
  p.kind = PolicyKind::DwellConstrained;
  p.tau_a = tau_a;
  p.score_channel = inner.score_channel;
  p.decision_delay = inner.decision_delay;
  p.inner = std::make_shared<const SwitchingPolicy>(std::move(inner));
  return p;
}

double SwitchingPolicy::band_at(double info_norm) const {
  if (band_map.empty()) return band;
  for (const auto& seg : band_map) {
    if (info_norm < seg.norm_upper) return seg.h;
  }
  return band_map.back().h;
}

double SwitchingPolicy::band_lower() const {
  if (band_map.empty()) return band;
  double h = band_map.front().h;
  for (const auto& seg : band_map) h = std::min(h, seg.h);
  return h;
}

const SwitchingPolicy& SwitchingPolicy::decision_rule() const {
  if (kind == PolicyKind::DwellConstrained && inner) return *inner;
  return *this;
}

bool SwitchingPolicy::operator==(const SwitchingPolicy& o) const {
  const bool inner_eq = (!inner && !o.inner) || (inner && o.inner && *inner == *o.inner);
  return kind == o.kind && score_channel == o.score_channel && band == o.band && band_map == o.band_map &&
         tau_a == o.tau_a && decision_delay == o.decision_delay && m_upper == o.m_upper && inner_eq;
}

int decide_mode(const SwitchingPolicy& policy, double score, int current_mode, double t, double last_switch,
                double info_norm) {
  switch (policy.kind) {
    case PolicyKind::ThresholdSign:
      return score >= 0.0 ? 1 : 2;
    case PolicyKind::Hysteresis: {
      const double h = policy.band_at(info_norm);
      if (score >= h) return 1;
      if (score <= -h) return 2;
      return current_mode;
    }
    case PolicyKind::DwellConstrained:
      // Same comparison the post-hoc gap check uses, so accepted gaps are >= tau_a exactly.
      if (t - last_switch < policy.tau_a) return current_mode;
      if (!policy.inner) return current_mode;
      return decide_mode(*policy.inner, score, current_mode, t, last_switch, info_norm);
  }
  return current_mode;
}

double adaptation_target(std::span<const double> x, double kappa) { return kappa * std::tanh(norm2(x)); }

Vector design_drift(std::span<const double> d, double eta_d, double t) {
  Vector rate(d.size(), 0.0);
  if (eta_d == 0.0 || d.empty()) return rate;
  const double component = eta_d * std::sin(t) / std::sqrt(static_cast<double>(d.size()));
  std::fill(rate.begin(), rate.end(), component);
  return rate;
}

std::size_t SwitchStats::n_sigma(double t, double horizon) const {
  const auto lo = std::upper_bound(switch_times.begin(), switch_times.end(), t);
  const auto hi = std::upper_bound(switch_times.begin(), switch_times.end(), t + horizon);
  return static_cast<std::size_t>(hi - lo);
}

double SwitchStats::chatter_bound(double tau_a) const {
  if (switch_times.empty()) return 0.0;
  // Window [t_i, t_j] holds j - i + 1 switches; maximize (j - t_j/tau_a) - (i - t_i/tau_a) + 1.
  double best = 1.0;
  double min_prefix = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < switch_times.size(); ++j) {
    const double key = static_cast<double>(j) - switch_times[j] / tau_a;
    min_prefix = std::min(min_prefix, key);
    best = std::max(best, key - min_prefix + 1.0);
  }
  return best;
}

SwitchStats switch_statistics(const Trajectory& traj) {
  SwitchStats stats;
  for (const auto& e : traj.events) {
    if (e.kind == EventKind::Switch) stats.switch_times.push_back(e.t);
  }
  const auto& ts = stats.switch_times;
  for (std::size_t k = 1; k < ts.size(); ++k) stats.min_gap = std::min(stats.min_gap, ts[k] - ts[k - 1]);
  if (ts.size() >= 2) stats.mean_gap = (ts.back() - ts.front()) / static_cast<double>(ts.size() - 1);
  return stats;
}

double hysteresis_dwell_bound(double h_lower, double m_upper) {
  if (!(h_lower > 0.0)) throw std::invalid_argument("hysteresis_dwell_bound: h_lower must be > 0");
  if (!(m_upper > 0.0)) throw std::invalid_argument("hysteresis_dwell_bound: m_upper must be > 0");
  return 2.0 * h_lower / m_upper;
}

bool hysteresis_meets_dwell_condition(double tau_h, double gamma, double l_theta, double rho, double nu) {
  const double margin = gamma - l_theta * rho;
  if (!(margin > 0.0)) return false;
  return tau_h > std::log(nu) / margin;
}

}  // namespace agentic
