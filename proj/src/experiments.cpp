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

#include "agentic/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "agentic/lyapunov.hpp"

namespace agentic {

GridSpec GridSpec::defaults() {
  GridSpec g;
  for (int k = 1; k <= 20; ++k) g.tau_a_values.push_back(static_cast<double>(2 * k) / 10.0);
  for (int k = 0; k <= 10; ++k) g.tau_bar_values.push_back(static_cast<double>(25 * k) / 1000.0);
  return g;
}

const StabilityVerdict& SweepGrid::at(std::size_t bar_index, std::size_t a_index) const {
  return verdicts.at(bar_index * tau_a_values.size() + a_index);
}

ScenarioConfig sweep_cell_scenario(const ScenarioConfig& base, double tau_a, double tau_bar) {
  ScenarioConfig s = base;
  const SwitchingPolicy inner = base.policy ? base.policy->decision_rule() : SwitchingPolicy::threshold_sign(0);
  s.policy = SwitchingPolicy::dwell_constrained(tau_a, inner);
  // The swept delay is carried on the plant channel; other channels keep their values.
  const double others = base.delays.channel_sum() - base.delays.tau_u;
  s.delays.tau_u = std::max(0.0, tau_bar - others);
  s.delays.tau_bar = tau_bar;
  return s;
}

SweepGrid delay_dwell_sweep(const ScenarioConfig& base, const GridSpec& spec, unsigned workers) {
  SweepGrid grid;
  grid.tau_a_values = spec.tau_a_values;
  grid.tau_bar_values = spec.tau_bar_values;
  const std::size_t na = spec.tau_a_values.size();
  const std::size_t cells = na * spec.tau_bar_values.size();

  std::vector<ScenarioConfig> scenarios;
  scenarios.reserve(cells);
  for (double tau_bar : spec.tau_bar_values) {
    for (double tau_a : spec.tau_a_values) {
      scenarios.push_back(sweep_cell_scenario(base, tau_a, tau_bar));
      const ValidationReport r = validate_scenario(scenarios.back());
      if (!r.ok()) throw std::invalid_argument("invalid sweep cell:\n" + r.to_string());
    }
  }

  grid.verdicts.assign(cells, StabilityVerdict{});
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < cells; i = next.fetch_add(1)) {
      const ScenarioConfig& sc = scenarios[i];
      try {
        const Trajectory traj = simulate(sc);
        grid.verdicts[i] = classify_outcome(traj, sc.classifier.settle_tol, sc.classifier.blowup_tol);
      } catch (const std::exception&) {
        grid.verdicts[i] = StabilityVerdict{Outcome::Unstable, std::numeric_limits<double>::infinity(),
                                            std::numeric_limits<double>::infinity()};
      }
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(cells)));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  return grid;
}

std::vector<BoundaryPoint> empirical_boundary(const SweepGrid& grid) {
  std::vector<BoundaryPoint> out;
  const std::size_t na = grid.tau_a_values.size();
  // Visit tau_a in ascending order regardless of axis ordering.
  std::vector<std::size_t> order(na);
  for (std::size_t i = 0; i < na; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t l, std::size_t r) { return grid.tau_a_values[l] < grid.tau_a_values[r]; });

  for (std::size_t b = 0; b < grid.tau_bar_values.size(); ++b) {
    BoundaryPoint p{grid.tau_bar_values[b], std::nullopt};
    for (std::size_t k = na; k-- > 0;) {
      const std::size_t a = order[k];
      if (grid.at(b, a).outcome != Outcome::Stable) break;
      p.tau_a = grid.tau_a_values[a];
    }
    out.push_back(p);
  }
  return out;
}

ReconfigScenario ReconfigScenario::build(Matrix plant, Matrix input, Matrix output, Matrix feedback,
                                         Matrix observer, Vector plant_x0) {
  const std::size_t n = plant.rows();
  if (!plant.square() || input.rows() != n || output.cols() != n || feedback.cols() != n ||
      observer.rows() != n || plant_x0.size() != n) {
    throw std::invalid_argument("ReconfigScenario: dimension mismatch");
  }
  ReconfigScenario s;
  s.plant = std::move(plant);
  s.input = std::move(input);
  s.output = std::move(output);
  s.feedback = std::move(feedback);
  s.observer = std::move(observer);

  const Matrix bk = s.input * s.feedback;
  const Matrix lc = s.observer * s.output;
  const Matrix closed = s.plant - bk;
  s.arch_a = Matrix(2 * n, 2 * n);
  s.arch_b = Matrix(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      s.arch_a(i, j) = closed(i, j);
      s.arch_b(i, j) = s.plant(i, j);
      s.arch_b(i, n + j) = -bk(i, j);
      s.arch_b(n + i, j) = lc(i, j);
      s.arch_b(n + i, n + j) = closed(i, j) - lc(i, j);
    }
    s.arch_a(n + i, n + i) = -1.0;
  }
  decay_rate(s.arch_a);
  decay_rate(s.arch_b);

  s.x0 = plant_x0;
  s.x0.resize(2 * n, 0.0);
  return s;
}

ReconfigScenario ReconfigScenario::make_default() {
  return build(Matrix{{0.0, 1.0}, {1.0, 0.0}}, Matrix{{0.0}, {1.0}}, Matrix{{1.0, 0.0}}, Matrix{{1.25, 1.0}},
               Matrix{{2.0}, {2.0}}, Vector{1.0, -1.0});
}

ScenarioConfig ReconfigScenario::to_scenario(double period) const {
  const std::size_t n = plant_dimension();
  ScenarioConfig s;
  s.name = "level4_reconfig";
  s.level = AgencyLevel::L4;
  s.num_modes = 1;
  s.num_configs = 2;
  s.dynamics = {ModeDynamics{arch_a, Matrix::zeros(2 * n), "direct_state_feedback"},
                ModeDynamics{arch_b, Matrix::zeros(2 * n), "observer_based"}};
  s.reconfig.period = period;
  for (std::size_t i = n; i < 2 * n; ++i) s.reconfig.private_states.push_back(i);
  s.reconfig.reset = reset;
  s.integrator.dt = dt;
  s.integrator.horizon = horizon;
  s.integrator.x0 = x0;
  s.integrator.theta0 = {0.0};
  return s;
}

ReconfigRuns level4_reconfig_run(const ReconfigScenario& s, double fast_period, double slow_period) {
  return ReconfigRuns{simulate(s.to_scenario(fast_period)), simulate(s.to_scenario(slow_period))};
}

double norm_growth_factor(const Trajectory& traj) {
  if (traj.states.empty()) return 1.0;
  const double n0 = norm2(traj.states.front().x);
  double mx = traj.max_norm;
  for (const auto& st : traj.states) mx = std::max(mx, norm2(st.x));
  return n0 > 0.0 ? mx / n0 : std::numeric_limits<double>::infinity();
}

CoupledRun run_with_budget(const ScenarioConfig& scenario) {
  CoupledRun run;
  run.scenario = scenario;
  run.trajectory = simulate(scenario);
  run.verdict =
      classify_outcome(run.trajectory, scenario.classifier.settle_tol, scenario.classifier.blowup_tol);
  const ResolvedBudget rb = resolve_budget(scenario);
  if (!rb.complete()) throw std::invalid_argument("budget constants underdetermined");
  run.constants = rb.constants;
  run.report = effective_margin(run.constants);
  run.budget_trace = budget_timeseries(run.trajectory, run.constants);
  run.stats = switch_statistics(run.trajectory);
  return run;
}

CoupledRun fully_coupled_case(CoupledCase which) {
  return run_with_budget(which == CoupledCase::Stable ? presets::fig3_stable() : presets::fig3_unstable());
}

}  // namespace agentic
