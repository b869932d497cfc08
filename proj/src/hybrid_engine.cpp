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

#include "agentic/hybrid_engine.hpp"

#include <algorithm>
#include <cmath>

#include "agentic/policies.hpp"

namespace agentic {

namespace {

struct StageBuffers {
  Vector kx, kth, km, kz;
  void resize(std::size_t n, std::size_t nth, std::size_t nm, std::size_t nz) {
    kx.assign(n, 0.0);
    kth.assign(nth, 0.0);
    km.assign(nm, 0.0);
    kz.assign(nz, 0.0);
  }
};

}  // namespace

std::string_view to_string(EventKind kind) { return kind == EventKind::Switch ? "switch" : "reconfig"; }

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::Completed: return "completed";
    case Termination::Diverged: return "diverged";
    case Termination::NonFinite: return "non_finite";
  }
  return "unknown";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Stable: return "Stable";
    case Outcome::Unstable: return "Unstable";
    case Outcome::Inconclusive: return "Inconclusive";
  }
  return "unknown";
}

AugmentedState step_flow(const AugmentedState& s, const ModeDynamics& dyn, const AdaptationLaw& law,
                         const HistoryBuffer& history, double dt, const FlowContext& ctx) {
  if (!(dt > 0.0)) throw std::invalid_argument("step_flow: dt must be > 0");
  const std::size_t n = s.x.size();
  if (dyn.a.rows() != n || !dyn.a.square()) throw std::invalid_argument("step_flow: flow matrix dimension mismatch");
  const kernels::KernelTable& kt = ctx.kernels ? *ctx.kernels : kernels::table();

  const bool has_delay_term = !dyn.a_delay.empty() && !dyn.a_delay.is_zero();
  const double* a = dyn.a.data().data();
  const double* ad = has_delay_term ? dyn.a_delay.data().data() : nullptr;
  const double tau = ctx.tau_bar;
  const double gain = law.coupling_gain;
  Vector delayed(n, 0.0);

  auto deriv = [&](double ts, const double* xs, const double* th, const double* ms, StageBuffers& k) {
    const double* w = xs;
    if (has_delay_term && tau > 0.0) {
      history.sample_into(ts - tau, delayed);
      w = delayed.data();
    }
    kt.flow_rhs(n, a, xs, ad, w, k.kx.data());
    if (gain != 0.0 && !s.theta.empty()) kt.axpy(n, k.kx.data(), gain * th[0], xs, k.kx.data());
    if (law.enabled) {
      const double target = adaptation_target(std::span<const double>(xs, n), law.kappa);
      for (std::size_t i = 0; i < k.kth.size(); ++i) k.kth[i] = law.rho * (target - th[i]);
    } else {
      std::fill(k.kth.begin(), k.kth.end(), 0.0);
    }
    for (std::size_t i = 0; i < k.km.size(); ++i) k.km[i] = -ctx.memory_rate * ms[i];
    if (!k.kz.empty()) {
      const Vector drift = design_drift(s.zeta, ctx.eta_d, ts);
      std::copy(drift.begin(), drift.end(), k.kz.begin());
    }
  };

  const std::size_t nth = s.theta.size(), nm = s.m.size(), nz = s.zeta.size();
  StageBuffers k1, k2, k3, k4;
  for (StageBuffers* k : {&k1, &k2, &k3, &k4}) k->resize(n, nth, nm, nz);
  Vector xs(n), ths(nth), mss(nm);

  const double h2 = 0.5 * dt;
  deriv(s.t, s.x.data(), s.theta.data(), s.m.data(), k1);

  kt.axpy(n, s.x.data(), h2, k1.kx.data(), xs.data());
  kt.axpy(nth, s.theta.data(), h2, k1.kth.data(), ths.data());
  kt.axpy(nm, s.m.data(), h2, k1.km.data(), mss.data());
  deriv(s.t + h2, xs.data(), ths.data(), mss.data(), k2);

  kt.axpy(n, s.x.data(), h2, k2.kx.data(), xs.data());
  kt.axpy(nth, s.theta.data(), h2, k2.kth.data(), ths.data());
  kt.axpy(nm, s.m.data(), h2, k2.km.data(), mss.data());
  deriv(s.t + h2, xs.data(), ths.data(), mss.data(), k3);

  kt.axpy(n, s.x.data(), dt, k3.kx.data(), xs.data());
  kt.axpy(nth, s.theta.data(), dt, k3.kth.data(), ths.data());
  kt.axpy(nm, s.m.data(), dt, k3.km.data(), mss.data());
  deriv(s.t + dt, xs.data(), ths.data(), mss.data(), k4);

  AugmentedState out = s;
  out.t = s.t + dt;
  kt.rk4_combine(n, s.x.data(), dt, k1.kx.data(), k2.kx.data(), k3.kx.data(), k4.kx.data(), out.x.data());
  kt.rk4_combine(nth, s.theta.data(), dt, k1.kth.data(), k2.kth.data(), k3.kth.data(), k4.kth.data(),
                 out.theta.data());
  kt.rk4_combine(nm, s.m.data(), dt, k1.km.data(), k2.km.data(), k3.km.data(), k4.km.data(), out.m.data());
  kt.rk4_combine(nz, s.zeta.data(), dt, k1.kz.data(), k2.kz.data(), k3.kz.data(), k4.kz.data(), out.zeta.data());

  if (!all_finite(out.x) || !all_finite(out.theta) || !all_finite(out.m) || !all_finite(out.zeta)) {
    throw IntegrationBlowup("integration produced non-finite state at t=" + std::to_string(out.t), s);
  }
  return out;
}

Trajectory simulate(const ScenarioConfig& sc, const SimulateOptions& options) {
  const ValidationReport report = validate_scenario(sc);
  if (!report.ok()) throw std::invalid_argument("invalid scenario:\n" + report.to_string());

  const kernels::KernelTable& kt = kernels::table(options.backend);
  const auto& in = sc.integrator;
  const double dt = in.dt;
  const auto steps = static_cast<std::size_t>(std::llround(in.horizon / dt));

  AugmentedState state;
  state.t = 0.0;
  state.x = in.x0;
  state.m = in.m0;
  state.theta = in.theta0;
  state.sigma = in.sigma0;
  state.c = in.c0;
  state.zeta = in.zeta0;

  double decision_delay = 0.0;
  if (sc.policy) decision_delay = sc.policy->decision_rule().decision_delay;
  const double window = std::max(sc.delays.tau_bar, decision_delay) + 4.0 * dt;
  HistoryBuffer history(in.x0, window);
  history.push(0.0, state.x);

  FlowContext ctx;
  ctx.tau_bar = sc.delays.tau_bar;
  ctx.memory_rate = sc.memory_rate;
  ctx.eta_d = sc.eta_d;
  ctx.kernels = &kt;

  Trajectory traj;
  traj.dt = dt;
  traj.states.reserve(steps + 1);
  traj.states.push_back(state);
  traj.max_norm = norm2(state.x);

  const bool reconfig = sc.reconfiguration_enabled();
  const std::size_t period_steps =
      reconfig ? std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(sc.reconfig.period / dt))) : 0;
  std::size_t last_reconfig_step = 0;
  double last_switch = 0.0;

  auto read_score = [&](double t, const Vector& x_now) {
    const SwitchingPolicy& rule = sc.policy->decision_rule();
    if (rule.decision_delay == 0.0) return x_now[rule.score_channel];
    return history.sample(t - rule.decision_delay)[rule.score_channel];
  };
  double prev_score = sc.policy ? read_score(0.0, state.x) : 0.0;

  for (std::size_t k = 0; k < steps; ++k) {
    const ModeDynamics& dyn = sc.dynamics_for(state.sigma, state.c);
    AugmentedState next;
    try {
      next = step_flow(state, dyn, sc.adaptation, history, dt, ctx);
    } catch (const IntegrationBlowup&) {
      traj.termination = Termination::NonFinite;
      break;
    }
    const std::size_t step = k + 1;
    next.t = static_cast<double>(step) * dt;
    history.push(next.t, next.x);

    const double norm = norm2(next.x);
    traj.max_norm = std::max(traj.max_norm, norm);
    if (norm > sc.classifier.blowup_tol) {
      traj.states.push_back(std::move(next));
      traj.termination = Termination::Diverged;
      break;
    }

    if (sc.policy) {
      const double score = read_score(next.t, next.x);
      traj.empirical_score_rate = std::max(traj.empirical_score_rate, std::abs(score - prev_score) / dt);
      prev_score = score;
      const int want = decide_mode(*sc.policy, score, next.sigma, next.t, last_switch, norm);
      if (want != next.sigma) {
        traj.events.push_back({next.t, step, EventKind::Switch, next.sigma, want});
        next.sigma = want;
        last_switch = next.t;
      }
    }

    if (reconfig && step - last_reconfig_step >= period_steps) {
      const int to = next.c % sc.num_configs + 1;
      traj.events.push_back({next.t, step, EventKind::Reconfig, next.c, to});
      next.c = to;
      last_reconfig_step = step;
      if (sc.reconfig.reset == ResetMode::Zero) {
        for (std::size_t idx : sc.reconfig.private_states) next.x[idx] = 0.0;
        history.replace_newest(next.x);
      }
    }

    traj.states.push_back(next);
    state = std::move(next);
  }
  return traj;
}

StabilityVerdict classify_outcome(const Trajectory& traj, double settle_tol, double blowup_tol) {
  StabilityVerdict v;
  v.max_norm = traj.max_norm;
  v.final_norm = traj.states.empty() ? 0.0 : norm2(traj.states.back().x);
  for (const auto& s : traj.states) v.max_norm = std::max(v.max_norm, norm2(s.x));
  if (traj.truncated() || v.max_norm > blowup_tol || !std::isfinite(v.final_norm)) {
    v.outcome = Outcome::Unstable;
  } else if (v.final_norm <= settle_tol) {
    v.outcome = Outcome::Stable;
  } else {
    v.outcome = Outcome::Inconclusive;
  }
  return v;
}

}  // namespace agentic
