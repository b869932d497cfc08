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

#include "agentic/experiments.hpp"
#include "agentic/lyapunov.hpp"
#include "doctest.h"

using namespace agentic;

namespace {

SweepGrid synthetic(std::vector<double> a, std::vector<double> b, std::vector<Outcome> outcomes) {
  SweepGrid g;
  g.tau_a_values = std::move(a);
  g.tau_bar_values = std::move(b);
  for (Outcome o : outcomes) g.verdicts.push_back({o, 0.0, 0.0});
  return g;
}

}  // namespace

TEST_SUITE("experiments") {
  TEST_CASE("default grid") {
    const GridSpec g = GridSpec::defaults();
    REQUIRE(g.tau_a_values.size() == 20);
    REQUIRE(g.tau_bar_values.size() == 11);
    CHECK(g.tau_a_values.front() == 0.2);
    CHECK(g.tau_a_values.back() == 4.0);
    CHECK(g.tau_a_values[6] == 1.4);
    CHECK(g.tau_bar_values.front() == 0.0);
    CHECK(g.tau_bar_values.back() == 0.25);
  }

  TEST_CASE("boundary extraction") {
    using enum Outcome;
    const SweepGrid g = synthetic({0.5, 1.0, 1.5, 2.0}, {0.0, 0.1, 0.2},
                                  {Stable, Stable, Stable, Stable,          //
                                   Unstable, Unstable, Unstable, Unstable,  //
                                   Stable, Unstable, Inconclusive, Stable});
    const auto b = empirical_boundary(g);
    REQUIRE(b.size() == 3);
    CHECK(b[0].tau_a == 0.5);
    CHECK_FALSE(b[1].tau_a.has_value());
    CHECK(b[2].tau_a == 2.0);
  }

  TEST_CASE("sweep cells carry the dwell time and delay") {
    const ScenarioConfig cell = sweep_cell_scenario(presets::fig1_sweep(), 2.6, 0.125);
    CHECK(cell.policy->kind == PolicyKind::DwellConstrained);
    CHECK(cell.policy->tau_a == 2.6);
    CHECK(cell.policy->decision_rule().kind == PolicyKind::ThresholdSign);
    CHECK(cell.delays.tau_bar == 0.125);
    CHECK(cell.delays.tau_u == 0.125);
    CHECK(validate_scenario(cell).ok());
  }

  TEST_CASE("serial and parallel sweeps agree") {
    GridSpec spec;
    spec.tau_a_values = {0.4, 1.2, 2.0, 3.6};
    spec.tau_bar_values = {0.0, 0.1, 0.25};
    ScenarioConfig base = presets::fig1_sweep();
    base.integrator.horizon = 10.0;
    const SweepGrid serial = delay_dwell_sweep(base, spec, 1);
    const SweepGrid parallel = delay_dwell_sweep(base, spec, 4);
    REQUIRE(serial.complete());
    REQUIRE(parallel.complete());
    for (std::size_t i = 0; i < serial.verdicts.size(); ++i) {
      CHECK(serial.verdicts[i].outcome == parallel.verdicts[i].outcome);
      CHECK(serial.verdicts[i].final_norm == parallel.verdicts[i].final_norm);
      CHECK(serial.verdicts[i].max_norm == parallel.verdicts[i].max_norm);
    }
  }

  TEST_CASE("an invalid cell aborts the sweep") {
    GridSpec spec;
    spec.tau_a_values = {1.0};
    spec.tau_bar_values = {-0.1};
    CHECK_THROWS_AS(delay_dwell_sweep(presets::fig1_sweep(), spec, 1), std::invalid_argument);
  }

  TEST_CASE("named cells of the coupled cases") {
    const ScenarioConfig stable_cell = sweep_cell_scenario(presets::fig3_stable(), 4.0, 0.03);
    CHECK(classify_outcome(simulate(stable_cell), 1e-2, 1e6).outcome == Outcome::Stable);
    const ScenarioConfig unstable_cell = sweep_cell_scenario(presets::fig3_unstable(), 0.4, 0.20);
    CHECK(classify_outcome(simulate(unstable_cell), 1e-2, 1e6).outcome == Outcome::Unstable);
  }

  TEST_CASE("reconfiguration architectures") {
    const ReconfigScenario rs = ReconfigScenario::make_default();
    CHECK(rs.plant_dimension() == 2);
    CHECK(rs.arch_a.rows() == 4);
    CHECK(decay_rate(rs.arch_a) == doctest::Approx(0.5));
    CHECK(decay_rate(rs.arch_b) == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(decay_rate(rs.plant * 1.0 - rs.input * rs.feedback) == doctest::Approx(0.5));
    CHECK_THROWS_AS(ReconfigScenario::build(rs.plant, rs.input, rs.output, Matrix{{0.0, 0.0}}, rs.observer,
                                            Vector{1.0, 0.0}),
                    CertificateError);
    const ScenarioConfig sc = rs.to_scenario(1.0);
    CHECK(validate_scenario(sc).ok());
    CHECK(sc.reconfig.private_states == std::vector<std::size_t>{2, 3});
  }

  TEST_CASE("reconfiguration jumps reset the estimate and keep the plant state") {
    const ReconfigScenario rs = ReconfigScenario::make_default();
    const Trajectory traj = simulate(rs.to_scenario(1.0));
    REQUIRE(!traj.events.empty());
    for (const auto& e : traj.events) {
      CHECK(e.kind == EventKind::Reconfig);
      const auto& after = traj.states[e.step];
      CHECK(after.x[2] == 0.0);
      CHECK(after.x[3] == 0.0);
      CHECK(after.c == e.to);
    }
  }

  TEST_CASE("fast reconfiguration grows, slow reconfiguration settles") {
    const ReconfigRuns runs =
        level4_reconfig_run(ReconfigScenario::make_default(), kFastReconfigPeriod, kSlowReconfigPeriod);
    CHECK(norm_growth_factor(runs.fast) > 10.0);
    CHECK(classify_outcome(runs.slow, 1e-2, 1e6).outcome == Outcome::Stable);
    CHECK(norm_growth_factor(runs.slow) < 10.0);
  }

  TEST_CASE("sign of lambda predicts the coupled verdicts") {
    const CoupledRun stable = fully_coupled_case(CoupledCase::Stable);
    const CoupledRun unstable = fully_coupled_case(CoupledCase::Unstable);
    CHECK(stable.report.lambda > 0.0);
    CHECK(stable.verdict.outcome == Outcome::Stable);
    CHECK(unstable.report.lambda < 0.0);
    CHECK(unstable.verdict.outcome == Outcome::Unstable);
  }
}
