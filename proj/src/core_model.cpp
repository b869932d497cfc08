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

#include <cmath>
#include <sstream>

#include "agentic/core_model.hpp"
#include "agentic/scenario.hpp"

namespace agentic {

DesignTuple project_design_state(const AugmentedState& s) { return DesignTuple{s.zeta, s.sigma, s.c}; }

std::vector<std::string> state_violations(const AugmentedState& s, int num_modes, int num_configs) {
  std::vector<std::string> out;
  if (!std::isfinite(s.t)) out.emplace_back("t not finite");
  if (!all_finite(s.x)) out.emplace_back("x has non-finite entries");
  if (!all_finite(s.m)) out.emplace_back("m has non-finite entries");
  if (!all_finite(s.theta)) out.emplace_back("theta has non-finite entries");
  if (!all_finite(s.zeta)) out.emplace_back("zeta has non-finite entries");
  if (s.sigma < 1 || s.sigma > num_modes) out.emplace_back("sigma out of range");
  if (s.c < 1 || s.c > num_configs) out.emplace_back("c out of range");
  return out;
}

Mechanisms permitted_mechanisms(AgencyLevel level) {
  const int l = static_cast<int>(level);
  return Mechanisms{.adaptation = l >= 2, .switching = l >= 3, .reconfiguration = l >= 4, .design_drift = l >= 5};
}

std::string_view to_string(AgencyLevel level) {
  switch (level) {
    case AgencyLevel::L1: return "L1";
    case AgencyLevel::L2: return "L2";
    case AgencyLevel::L3: return "L3";
    case AgencyLevel::L4: return "L4";
    case AgencyLevel::L5: return "L5";
  }
  return "L?";
}

std::optional<AgencyLevel> parse_agency_level(std::string_view text) {
  for (int l = 1; l <= 5; ++l) {
    const auto level = static_cast<AgencyLevel>(l);
    if (text == to_string(level)) return level;
  }
  return std::nullopt;
}

const ModeDynamics& ScenarioConfig::dynamics_for(int sigma, int c) const {
  const auto idx = static_cast<std::size_t>((c - 1) * num_modes + (sigma - 1));
  return dynamics.at(idx);
}

std::size_t ScenarioConfig::state_dimension() const { return dynamics.empty() ? 0 : dynamics.front().dimension(); }

bool ScenarioConfig::reconfiguration_enabled() const {
  return num_configs > 1 && std::isfinite(reconfig.period);
}

bool ValidationReport::mentions(std::string_view text) const {
  for (const auto& v : violations) {
    if (v.message.find(text) != std::string::npos || v.field.find(text) != std::string::npos) return true;
  }
  return false;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) os << v.field << ": " << v.message << '\n';
  return os.str();
}

namespace {

void check_policy(const SwitchingPolicy& p, std::size_t n, const std::string& field, ValidationReport& r) {
  auto add = [&](std::string msg) { r.violations.push_back({field, std::move(msg)}); };
  if (p.score_channel >= n) add("score channel outside state dimension");
  if (!(p.decision_delay >= 0.0) || !std::isfinite(p.decision_delay)) add("decision delay must be finite and >= 0");
  if (p.m_upper && !(*p.m_upper > 0.0)) add("m_upper must be > 0");
  switch (p.kind) {
    case PolicyKind::ThresholdSign:
      break;
    case PolicyKind::Hysteresis:
      if (p.band_map.empty() && !(p.band > 0.0)) add("hysteresis requires band > 0");
      for (const auto& seg : p.band_map) {
        if (!(seg.h > 0.0)) add("hysteresis band map entries require h > 0");
      }
      break;
    case PolicyKind::DwellConstrained:
      if (!(p.tau_a >= 0.0) || !std::isfinite(p.tau_a)) add("dwell time tau_a must be finite and >= 0");
      if (!p.inner) {
        add("dwell-constrained policy requires an inner policy");
      } else if (p.inner->kind == PolicyKind::DwellConstrained) {
        add("dwell-constrained inner policy must not itself be dwell-constrained");
      } else {
        check_policy(*p.inner, n, field + ".inner", r);
      }
      break;
  }
}

}  // namespace

ValidationReport validate_scenario(const ScenarioConfig& s) {
  ValidationReport r;
  auto add = [&](std::string field, std::string msg) { r.violations.push_back({std::move(field), std::move(msg)}); };

  if (s.num_modes < 1) add("num_modes", "must be >= 1");
  if (s.num_configs < 1) add("num_configs", "must be >= 1");
  if (s.num_modes >= 1 && s.num_configs >= 1 &&
      s.dynamics.size() != static_cast<std::size_t>(s.num_modes * s.num_configs)) {
    add("dynamics", "expected num_modes * num_configs flow entries");
  }

  const std::size_t n = s.integrator.x0.size();
  if (n == 0) add("integrator.x0", "plant dimension must be >= 1");
  for (std::size_t k = 0; k < s.dynamics.size(); ++k) {
    const auto& d = s.dynamics[k];
    const std::string field = "dynamics[" + std::to_string(k) + "]";
    if (!d.a.square()) add(field + ".a", "dimension mismatch: flow matrix not square");
    if (d.a.rows() != n) add(field + ".a", "dimension mismatch: flow matrix vs x0");
    if (!d.a_delay.empty() && (d.a_delay.rows() != d.a.rows() || d.a_delay.cols() != d.a.cols())) {
      add(field + ".a_delay", "dimension mismatch: delay matrix vs flow matrix");
    }
    if (!d.a.all_finite() || !d.a_delay.all_finite()) add(field, "non-finite matrix entries");
  }

  const Mechanisms allowed = permitted_mechanisms(s.level);
  const std::string level(to_string(s.level));
  if (s.adaptation_active() && !allowed.adaptation) add("adaptation", "adaptation forbidden at " + level);
  if (s.switching_enabled() && !allowed.switching) add("policy", "switching forbidden at " + level);
  if (s.reconfiguration_enabled() && !allowed.reconfiguration) {
    add("reconfig", "reconfiguration forbidden at " + level);
  }
  if (s.drift_active() && !allowed.design_drift) add("eta_d", "design drift forbidden at " + level);
  if (!s.switching_enabled() && s.num_modes > 1) add("policy", "multiple modes declared but no switching policy");
  if (s.switching_enabled() && s.num_modes != 2) add("num_modes", "switching policies target exactly modes {1, 2}");
  if (std::isnan(s.reconfig.period)) add("reconfig.period", "period must be a number");

  if (!(s.adaptation.rho >= 0.0)) add("adaptation.rho", "negative rate");
  if (!(s.adaptation.kappa >= 0.0)) add("adaptation.kappa", "negative target amplitude");
  if (!std::isfinite(s.adaptation.coupling_gain)) add("adaptation.coupling_gain", "not finite");
  if (!(s.eta_d >= 0.0) || !std::isfinite(s.eta_d)) add("eta_d", "negative rate");
  if (s.drift_active() && s.integrator.zeta0.empty()) add("integrator.zeta0", "design drift needs a goal vector");
  if (!(s.memory_rate > 0.0)) add("memory_rate", "memory flow must be Hurwitz (rate > 0)");

  const auto& dl = s.delays;
  for (auto [name, v] : {std::pair{"delays.tau_u", dl.tau_u}, std::pair{"delays.tau_theta", dl.tau_theta},
                         std::pair{"delays.tau_z", dl.tau_z}, std::pair{"delays.tau_sigma", dl.tau_sigma},
                         std::pair{"delays.tau_c", dl.tau_c}, std::pair{"delays.tau_zeta", dl.tau_zeta},
                         std::pair{"delays.tau_bar", dl.tau_bar}}) {
    if (!(v >= 0.0) || !std::isfinite(v)) add(name, "delay must be finite and >= 0");
    else if (v > dl.tau_bar) add(name, "channel delay exceeds tau_bar");
  }

  const auto& in = s.integrator;
  if (!(in.dt > 0.0) || !std::isfinite(in.dt)) add("integrator.dt", "must be > 0");
  if (!(in.horizon > 0.0) || !std::isfinite(in.horizon)) add("integrator.horizon", "must be > 0");
  if (dl.tau_bar > 0.0 && in.dt > 0.0 && dl.tau_bar < in.dt) {
    add("delays.tau_bar", "nonzero delay shorter than dt cannot be resolved by the step grid");
  }
  if (!all_finite(in.x0) || !all_finite(in.theta0) || !all_finite(in.m0) || !all_finite(in.zeta0)) {
    add("integrator", "non-finite initial condition");
  }
  if (in.sigma0 < 1 || in.sigma0 > s.num_modes) add("integrator.sigma0", "out of range");
  if (in.c0 < 1 || in.c0 > s.num_configs) add("integrator.c0", "out of range");

  if (s.policy) {
    check_policy(*s.policy, n, "policy", r);
    const double dd = s.policy->decision_rule().decision_delay;
    if (dd > dl.tau_bar) add("policy.decision_delay", "decision delay exceeds tau_bar");
  }
  if (s.reconfiguration_enabled()) {
    if (!(s.reconfig.period > 0.0)) add("reconfig.period", "must be > 0");
    for (std::size_t idx : s.reconfig.private_states) {
      if (idx >= n) add("reconfig.private_states", "index outside state dimension");
    }
  }

  if (!(s.classifier.settle_tol > 0.0)) add("classifier.settle_tol", "must be > 0");
  if (!(s.classifier.blowup_tol > s.classifier.settle_tol)) add("classifier.blowup_tol", "must exceed settle_tol");

  const auto& b = s.budget;
  if (b.gamma && !(*b.gamma > 0.0)) add("budget.gamma", "must be > 0");
  if (b.nu_sigma && !(*b.nu_sigma >= 1.0)) add("budget.nu_sigma", "must be >= 1");
  if (b.nu_c && !(*b.nu_c >= 1.0)) add("budget.nu_c", "must be >= 1");
  for (auto [name, v] : {std::pair{"budget.l_theta", b.l_theta}, std::pair{"budget.l_d", b.l_d},
                         std::pair{"budget.beta", b.beta}}) {
    if (v && !(*v >= 0.0)) add(name, "must be >= 0");
  }
  for (auto [name, v] : {std::pair{"budget.tau_a_sigma", b.tau_a_sigma}, std::pair{"budget.tau_a_c", b.tau_a_c}}) {
    if (v && !(*v > 0.0)) add(name, "dwell time must be > 0");
  }
  return r;
}

}  // namespace agentic
