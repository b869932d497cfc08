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
#include <numbers>

#include "agentic/experiments.hpp"
#include "agentic/policies.hpp"
#include "doctest.h"

using namespace agentic;

namespace {

Trajectory with_events(std::vector<double> times) {
  Trajectory t;
  t.dt = 1e-3;
  int from = 1;
  for (double tt : times) {
    t.events.push_back({tt, 0, EventKind::Switch, from, 3 - from});
    from = 3 - from;
  }
  return t;
}

ScenarioConfig chattering_scenario(const SwitchingPolicy& policy) {
  // Both modes push x1 toward the threshold, so the sign rule chatters.
  ScenarioConfig s;
  s.level = AgencyLevel::L3;
  s.num_modes = 2;
  s.dynamics = {ModeDynamics{Matrix{{-1.0, 0.0}, {0.0, -0.5}}, Matrix::zeros(2), "down"},
                ModeDynamics{Matrix{{-1.0, 0.0}, {0.0, -0.5}}, Matrix::zeros(2), "up"}};
  s.dynamics[0].a(0, 1) = -2.0;
  s.dynamics[1].a(0, 1) = 2.0;
  s.policy = policy;
  s.integrator.x0 = {0.2, 1.0};
  s.integrator.horizon = 6.0;
  return s;
}

}  // namespace

TEST_SUITE("policies") {
  TEST_CASE("hysteresis rule") {
    const auto h = SwitchingPolicy::hysteresis(0.5);
    CHECK(decide_mode(h, 0.6, 2, 0.0, 0.0) == 1);
    CHECK(decide_mode(h, -0.2, 1, 0.0, 0.0) == 1);
    CHECK(decide_mode(h, -0.2, 2, 0.0, 0.0) == 2);
    CHECK(decide_mode(h, -0.5, 1, 0.0, 0.0) == 2);
  }

  TEST_CASE("threshold sign rule") {
    const auto s = SwitchingPolicy::threshold_sign();
    CHECK(decide_mode(s, 0.0, 2, 0.0, 0.0) == 1);
    CHECK(decide_mode(s, -1e-300, 1, 0.0, 0.0) == 2);
  }

  TEST_CASE("dwell constraint suppresses early switches") {
    const auto d = SwitchingPolicy::dwell_constrained(4.0, SwitchingPolicy::threshold_sign());
    CHECK(decide_mode(d, -1.0, 1, 11.0, 10.0) == 1);
    CHECK(decide_mode(d, -1.0, 1, 14.0, 10.0) == 2);
    CHECK(d.decision_rule().kind == PolicyKind::ThresholdSign);
  }

  TEST_CASE("state-dependent band") {
    SwitchingPolicy h = SwitchingPolicy::hysteresis(0.5);
    h.band_map = {{1.0, 0.1}, {std::numeric_limits<double>::infinity(), 0.4}};
    CHECK(h.band_at(0.5) == 0.1);
    CHECK(h.band_at(2.0) == 0.4);
    CHECK(h.band_lower() == 0.1);
    CHECK(decide_mode(h, 0.2, 2, 0.0, 0.0, 0.5) == 1);
    CHECK(decide_mode(h, 0.2, 2, 0.0, 0.0, 2.0) == 2);
  }

  TEST_CASE("adaptation target") {
    CHECK(adaptation_target(Vector{0.0, 0.0}, 0.3) == 0.0);
    CHECK(adaptation_target(Vector{1e6, 0.0}, 0.3) == doctest::Approx(0.3));
    CHECK(adaptation_target(Vector{3.0, 4.0}, 0.3) == doctest::Approx(0.29997276127877853).epsilon(1e-14));
  }

  TEST_CASE("design drift is bounded by its rate") {
    CHECK(design_drift(Vector{1.0, 2.0}, 0.0, 1.3) == Vector{0.0, 0.0});
    const Vector d = design_drift(Vector{0.0, 0.0, 0.0}, 0.1, std::numbers::pi / 2);
    CHECK(norm2(d) == doctest::Approx(0.1).epsilon(1e-14));
    for (double t = 0.0; t < 20.0; t += 0.37) CHECK(norm2(design_drift(Vector{1.0, 1.0}, 0.25, t)) <= 0.25 + 1e-15);
  }

  TEST_CASE("switch statistics") {
    const SwitchStats none = switch_statistics(with_events({}));
    CHECK(none.count() == 0);
    CHECK(std::isinf(none.min_gap));
    const SwitchStats s = switch_statistics(with_events({1.0, 2.5, 4.0}));
    CHECK(s.min_gap == 1.5);
    CHECK(s.mean_gap == 1.5);
    CHECK(s.n_sigma(0.0, 2.5) == 2);
    CHECK(s.n_sigma(1.0, 3.0) == 2);
  }

  TEST_CASE("chatter bound covers every window") {
    const SwitchStats s = switch_statistics(with_events({1.0, 1.1, 1.2, 5.0, 9.0}));
    const double n0 = s.chatter_bound(2.0);
    CHECK(n0 >= 1.0);
    for (double t = 0.0; t < 10.0; t += 0.05)
      for (double len = 0.05; len < 10.0; len += 0.05) CHECK(s.n_sigma(t, len) <= n0 + len / 2.0 + 1e-12);
  }

  TEST_CASE("reconfiguration events do not count as switches") {
    Trajectory t = with_events({1.0, 3.0});
    t.events.insert(t.events.begin() + 1, Event{2.0, 0, EventKind::Reconfig, 1, 2});
    CHECK(switch_statistics(t).count() == 2);
    CHECK(switch_statistics(t).min_gap == 2.0);
  }

  TEST_CASE("hysteresis dwell bound") {
    CHECK(hysteresis_dwell_bound(1.0, 2.0) == 1.0);
    CHECK(hysteresis_dwell_bound(0.5, 10.0) == doctest::Approx(0.1));
    CHECK_THROWS_AS(hysteresis_dwell_bound(0.0, 1.0), std::invalid_argument);
    // Required dwell at gamma 0.609, nu 2.2, rho 0 is about 1.295 s.
    CHECK(hysteresis_meets_dwell_condition(hysteresis_dwell_bound(1.0, 1.5), 0.609, 0.8, 0.0, 2.2));
    CHECK_FALSE(hysteresis_meets_dwell_condition(hysteresis_dwell_bound(0.5, 1.0), 0.609, 0.8, 0.0, 2.2));
    CHECK_FALSE(hysteresis_meets_dwell_condition(100.0, 0.609, 0.8, 1.0, 2.2));
  }

  TEST_CASE("dwell-constrained runs keep every gap at least tau_a") {
    for (double tau_a : {0.4, 1.0, 2.2, 4.0}) {
      ScenarioConfig s = presets::fig3_unstable();
      s.policy = SwitchingPolicy::dwell_constrained(tau_a, SwitchingPolicy::threshold_sign(0));
      const SwitchStats st = switch_statistics(simulate(s));
      REQUIRE(st.count() >= 2);
      for (std::size_t k = 1; k < st.switch_times.size(); ++k) CHECK(st.switch_times[k] - st.switch_times[k - 1] >= tau_a);
    }
    const CoupledRun stable = fully_coupled_case(CoupledCase::Stable);
    CHECK(stable.stats.min_gap >= 4.0);
  }

  TEST_CASE("hysteresis runs respect the empirical dwell bound") {
    for (double h : {0.02, 0.05, 0.1}) {
      const Trajectory traj = simulate(chattering_scenario(SwitchingPolicy::hysteresis(h, 0)));
      const SwitchStats st = switch_statistics(traj);
      REQUIRE(st.count() >= 2);
      CHECK(st.min_gap >= 2.0 * h / traj.empirical_score_rate - traj.dt);
    }
  }

  TEST_CASE("any band reduces sign-rule chattering") {
    const std::size_t sign = switch_statistics(simulate(chattering_scenario(SwitchingPolicy::threshold_sign(0)))).count();
    CHECK(sign > 100);
    for (double h : {1e-4, 1e-3, 0.01, 0.1}) {
      const std::size_t hyst =
          switch_statistics(simulate(chattering_scenario(SwitchingPolicy::hysteresis(h, 0)))).count();
      CHECK(hyst < sign);
    }
  }

  TEST_CASE("adaptation state stays within its lag bound") {
    for (double rho : {0.15, 1.0, 3.5, 10.0}) {
      ScenarioConfig s = presets::fig3_unstable();
      s.adaptation.rho = rho;
      const Trajectory traj = simulate(s);
      double theta_max = 0.0;
      for (const auto& st : traj.states) theta_max = std::max(theta_max, std::abs(st.theta[0]));
      CHECK(theta_max <= s.adaptation.kappa);
      for (std::size_t k = 1; k < traj.states.size(); ++k) {
        const double rate = std::abs(traj.states[k].theta[0] - traj.states[k - 1].theta[0]) / traj.dt;
        CHECK(rate <= rho * (s.adaptation.kappa + theta_max) + 1e-9);
      }
    }
  }
}
