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

#include "agentic/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "agentic/config_io.hpp"
#include "agentic/csv.hpp"
#include "agentic/experiments.hpp"
#include "agentic/lyapunov.hpp"

namespace agentic::cli {

namespace {

using csv::format_double;

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : std::string("n/a"); }

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

// Loads, overrides and validates. Throws ConfigError on any problem.
ScenarioConfig load_checked(const CommandOptions& opts) {
  ScenarioConfig s = load_scenario(opts.config);
  apply_overrides(s, opts);
  const ValidationReport r = validate_scenario(s);
  if (!r.ok()) {
    const auto& v = r.violations.front();
    throw ConfigError(v.field, r.to_string());
  }
  return s;
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
}

template <class Fn>
int guarded(std::ostream& err, Fn&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const CertificateError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

int report_missing(const ResolvedBudget& rb, std::ostream& err) {
  err << "error: budget constants underdetermined (neither declared nor derivable):";
  for (const auto& m : rb.missing) err << " " << m;
  err << "\n";
  return kConfigError;
}

}  // namespace

void apply_overrides(ScenarioConfig& scenario, const CommandOptions& opts) {
  if (opts.dt) scenario.integrator.dt = *opts.dt;
  if (opts.horizon) scenario.integrator.horizon = *opts.horizon;
}

std::string certificate_report(const ScenarioConfig& scenario, const ResolvedBudget& rb) {
  const BudgetConstants& c = rb.constants;
  std::ostringstream os;
  os << "scenario: " << scenario.name << " (" << to_string(scenario.level) << ")\n\n";

  os << "constants:\n";
  auto line = [&](const std::string& key, double v) {
    const auto it = rb.sources.find(key);
    const std::string src = it == rb.sources.end() ? "default" : std::string(to_string(it->second));
    os << "  " << key << " = " << fmt(v, 8) << "  [" << src << "]";
    if (key == "gamma" && rb.computed_gamma) os << "  computed " << fmt(*rb.computed_gamma, 8);
    const bool jump_key = key == "nu_sigma" || key == "nu_c";
    if (jump_key && rb.computed_nu && src != "disabled") os << "  computed " << fmt(*rb.computed_nu, 8);
    os << "\n";
  };
  line("gamma", c.gamma);
  line("nu_sigma", c.nu_sigma);
  line("nu_c", c.nu_c);
  line("l_theta", c.l_theta);
  line("rho", c.rho);
  line("l_d", c.l_d);
  line("eta_d", c.eta_d);
  line("beta", c.beta);
  line("tau_bar", c.tau_bar);
  os << "  tau_a_sigma = " << fmt_opt(c.tau_a_sigma) << "\n";
  os << "  tau_a_c = " << fmt_opt(c.tau_a_c) << "\n\n";

  if (c.tau_a_sigma) {
    const double tau_a = *c.tau_a_sigma;
    const CheckResult t1 = check_theorem1(c.gamma, c.l_theta, c.rho, c.nu_sigma, tau_a);
    os << "switching under adaptation: margin gamma - L_theta*rho = " << fmt(t1.margin)
       << ", required tau_a* = " << fmt_opt(t1.required_tau_a) << " s, tau_a = " << fmt(tau_a) << " s -> "
       << pass_fail(t1.satisfied) << "\n";
    const CheckResult p1 = check_prop1(c.gamma, c.beta, c.tau_bar, c.nu_sigma, tau_a);
    os << "switching under delay: margin gamma - beta*tau_bar = " << fmt(p1.margin)
       << ", required tau_a = " << fmt_opt(p1.required_tau_a) << " s, tau_a = " << fmt(tau_a) << " s -> "
       << pass_fail(p1.satisfied) << "\n";
  } else {
    os << "switching disabled: no dwell-time conditions\n";
  }

  const BudgetReport r = check_theorem2(c);
  os << "fully coupled budget:\n"
     << "  adaptation " << fmt(r.term_adaptation) << "\n"
     << "  design     " << fmt(r.term_design) << "\n"
     << "  delay      " << fmt(r.term_delay) << "\n"
     << "  switch     " << fmt(r.term_switch) << "\n"
     << "  reconfig   " << fmt(r.term_reconfig) << "\n"
     << "  lambda_flow = " << fmt(r.lambda_flow) << " (" << pass_fail(r.flow_margin_positive) << ")\n"
     << "  lambda      = " << fmt(r.lambda) << " (" << pass_fail(r.jump_rate_within_margin) << ")\n"
     << "  verdict: " << to_string(r.verdict) << "\n\n";

  os << "design rules:\n";
  for (const auto& row : design_rule_report(c, scenario.level)) {
    os << "  " << row.level << ": " << row.constraint << " -> " << pass_fail(row.pass) << " (slack " << fmt(row.slack);
    if (row.required) os << ", required " << fmt(*row.required);
    os << "; " << row.design_rule << ")\n";
  }
  return os.str();
}

int cmd_simulate(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ScenarioConfig s = load_checked(opts);
    const Trajectory traj = simulate(s);
    const StabilityVerdict v = classify_outcome(traj, s.classifier.settle_tol, s.classifier.blowup_tol);
    const SwitchStats stats = switch_statistics(traj);
    ensure_dir(opts.out_dir);
    csv::write_atomic(opts.out_dir / "trajectory.csv", csv::trajectory_csv(traj));
    csv::write_atomic(opts.out_dir / "events.csv", csv::events_csv(traj));
    csv::write_atomic(opts.out_dir / "summary.csv", csv::summary_csv(traj, v, stats));
    out << "verdict " << to_string(v.outcome) << ", final_norm " << format_double(v.final_norm) << ", switches "
        << stats.count() << "\n";
    if (traj.termination == Termination::NonFinite) {
      err << "error: non-finite state at t = " << format_double(traj.final_state().t) << "\n";
      return static_cast<int>(kNumericalBlowup);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_sweep(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ScenarioConfig s = load_checked(opts);
    const GridSpec grid = parse_grid_spec(read_text_file(opts.config)).value_or(GridSpec::defaults());
    const SweepGrid result = delay_dwell_sweep(s, grid, opts.workers);
    const auto boundary = empirical_boundary(result);
    ensure_dir(opts.out_dir);
    csv::write_atomic(opts.out_dir / "sweep.csv", csv::sweep_csv(result));
    csv::write_atomic(opts.out_dir / "boundary.csv", csv::boundary_csv(boundary));
    out << "swept " << result.verdicts.size() << " cells\n";
    return static_cast<int>(kOk);
  });
}

int cmd_budget(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ScenarioConfig s = load_checked(opts);
    const ResolvedBudget rb = resolve_budget(s);
    if (!rb.complete()) return report_missing(rb, err);
    const Trajectory traj = simulate(s);
    const auto samples = budget_timeseries(traj, rb.constants);
    const std::string report = certificate_report(s, rb);
    ensure_dir(opts.out_dir);
    csv::write_atomic(opts.out_dir / "budget.csv", csv::budget_csv(samples));
    csv::write_atomic(opts.out_dir / "certificate.txt", report);
    out << report;
    return static_cast<int>(kOk);
  });
}

int cmd_certify(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ScenarioConfig s = load_checked(opts);
    const ResolvedBudget rb = resolve_budget(s);
    if (!rb.complete()) return report_missing(rb, err);
    out << certificate_report(s, rb);
    return static_cast<int>(kOk);
  });
}

}  // namespace agentic::cli
