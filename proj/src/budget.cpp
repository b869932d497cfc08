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

#include "agentic/budget.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "agentic/hybrid_engine.hpp"
#include "agentic/lyapunov.hpp"
#include "agentic/scenario.hpp"

namespace agentic {

std::string_view to_string(Certification c) { return c == Certification::Certified ? "Certified" : "NotCertified"; }

std::string_view to_string(ConstantSource s) {
  switch (s) {
    case ConstantSource::Declared: return "declared";
    case ConstantSource::Computed: return "computed";
    case ConstantSource::Scenario: return "scenario";
    case ConstantSource::Disabled: return "disabled";
  }
  return "unknown";
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("budget constants: ") + what);
}

double jump_term(double nu, const std::optional<double>& tau_a, const char* name) {
  if (!tau_a) return 0.0;
  if (!(*tau_a > 0.0)) throw std::invalid_argument(std::string("budget constants: ") + name + " must be > 0");
  return std::log(nu) / *tau_a;
}

CheckResult dwell_check(double margin, double nu, double tau_a) {
  CheckResult r;
  r.margin = margin;
  r.tau_a = tau_a;
  r.margin_ok = margin > 0.0;
  if (r.margin_ok) {
    r.required_tau_a = std::log(nu) / margin;
    r.satisfied = tau_a > *r.required_tau_a;
  }
  return r;
}

}  // namespace

BudgetReport effective_margin(const BudgetConstants& c) {
  require(c.gamma > 0.0, "gamma must be > 0");
  require(c.nu_sigma >= 1.0 && c.nu_c >= 1.0, "jump growth factors must be >= 1");
  require(c.l_theta >= 0.0 && c.rho >= 0.0 && c.l_d >= 0.0 && c.eta_d >= 0.0 && c.beta >= 0.0 && c.tau_bar >= 0.0,
          "rates, sensitivities and delays must be >= 0");

  BudgetReport r;
  r.gamma = c.gamma;
  r.term_adaptation = c.l_theta * c.rho;
  r.term_design = c.l_d * c.eta_d;
  r.term_delay = c.beta * c.tau_bar;
  r.term_switch = jump_term(c.nu_sigma, c.tau_a_sigma, "tau_a_sigma");
  r.term_reconfig = jump_term(c.nu_c, c.tau_a_c, "tau_a_c");
  r.lambda_flow = c.gamma - r.term_adaptation - r.term_design - r.term_delay;
  r.lambda = r.lambda_flow - r.term_switch - r.term_reconfig;
  r.flow_margin_positive = r.lambda_flow > 0.0;
  r.jump_rate_within_margin = r.lambda > 0.0;
  r.verdict = (r.flow_margin_positive && r.jump_rate_within_margin) ? Certification::Certified
                                                                     : Certification::NotCertified;
  return r;
}

BudgetReport check_theorem2(const BudgetConstants& c) { return effective_margin(c); }

CheckResult check_theorem1(double gamma, double l_theta, double rho, double nu, double tau_a) {
  return dwell_check(gamma - l_theta * rho, nu, tau_a);
}

CheckResult check_prop1(double gamma, double beta, double tau_bar, double nu, double tau_a) {
  return dwell_check(gamma - beta * tau_bar, nu, tau_a);
}

RuleTable design_rule_report(const BudgetConstants& c, AgencyLevel level) {
  RuleTable rows;
  const int l = static_cast<int>(level);
  if (l >= 2) {
    const double slack = c.gamma - c.l_theta * c.rho;
    rows.push_back({"L2", "L_theta*rho < gamma", "limit adaptation rate", slack > 0.0, slack, std::nullopt});
  }
  if (l >= 3 && c.tau_a_sigma) {
    const CheckResult t1 = check_theorem1(c.gamma, c.l_theta, c.rho, c.nu_sigma, *c.tau_a_sigma);
    const double slack = t1.required_tau_a ? *c.tau_a_sigma - *t1.required_tau_a
                                           : -std::numeric_limits<double>::infinity();
    rows.push_back({"L3", "tau_a > ln(nu)/(gamma - L_theta*rho)", "enforce dwell-time", t1.satisfied, slack,
                    t1.required_tau_a});
    if (c.tau_bar > 0.0) {
      const CheckResult p1 = check_prop1(c.gamma, c.beta, c.tau_bar, c.nu_sigma, *c.tau_a_sigma);
      const double s2 = p1.required_tau_a ? *c.tau_a_sigma - *p1.required_tau_a
                                          : -std::numeric_limits<double>::infinity();
      rows.push_back({"L3+delay", "tau_a > ln(nu)/(gamma - beta*tau_bar)", "reduce switching under latency",
                      p1.satisfied, s2, p1.required_tau_a});
    }
  }
  if (l >= 4 && c.tau_a_c) {
    const double required = std::log(c.nu_c) / c.gamma;
    const double slack = *c.tau_a_c - required;
    rows.push_back({"L4", "tau_a_c > ln(nu_c)/gamma", "limit reconfiguration rate", slack > 0.0, slack, required});
  }
  if (l >= 5) {
    const BudgetReport r = effective_margin(c);
    rows.push_back({"L5",
                    "gamma > L_theta*rho + L_d*eta + beta*tau_bar + ln(nu_sigma)/tau_a_sigma + ln(nu_c)/tau_a_c",
                    "allocate shared stability budget", r.verdict == Certification::Certified, r.lambda,
                    std::nullopt});
  }
  return rows;
}

std::vector<BudgetSample> budget_timeseries(const Trajectory& traj, const BudgetConstants& c) {
  const BudgetReport report = effective_margin(c);
  std::vector<BudgetSample> out;
  out.reserve(traj.states.size());
  for (const auto& s : traj.states) out.push_back({s.t, report});
  return out;
}

ResolvedBudget resolve_budget(const ScenarioConfig& sc) {
  ResolvedBudget rb;
  BudgetConstants& k = rb.constants;
  const auto& decl = sc.budget;
  const Mechanisms allowed = permitted_mechanisms(sc.level);

  // Certificates of every (sigma, c) flow; absent when some flow is not Hurwitz.
  std::vector<ModeCertificate> certs;
  try {
    for (const auto& d : sc.dynamics) certs.push_back(make_certificate(d.a));
    double g = std::numeric_limits<double>::infinity();
    for (const auto& c : certs) g = std::min(g, c.gamma);
    rb.computed_gamma = g;
    rb.computed_nu = comparability_constant(certs);
  } catch (const std::exception&) {
    certs.clear();
  }

  if (decl.gamma) {
    k.gamma = *decl.gamma;
    rb.sources["gamma"] = ConstantSource::Declared;
  } else if (rb.computed_gamma) {
    k.gamma = *rb.computed_gamma;
    rb.sources["gamma"] = ConstantSource::Computed;
  } else {
    rb.missing.emplace_back("gamma");
  }

  auto resolve_nu = [&](const std::optional<double>& declared, const char* name) {
    if (declared) {
      rb.sources[name] = ConstantSource::Declared;
      return *declared;
    }
    if (rb.computed_nu) {
      rb.sources[name] = ConstantSource::Computed;
      return *rb.computed_nu;
    }
    rb.missing.emplace_back(name);
    return 1.0;
  };

  const bool adapt = allowed.adaptation && sc.adaptation.enabled && sc.adaptation.rho > 0.0;
  if (adapt) {
    k.rho = sc.adaptation.rho;
    rb.sources["rho"] = ConstantSource::Scenario;
    if (decl.l_theta) {
      k.l_theta = *decl.l_theta;
      rb.sources["l_theta"] = ConstantSource::Declared;
    } else {
      rb.missing.emplace_back("l_theta");
    }
  } else {
    rb.sources["rho"] = ConstantSource::Disabled;
    rb.sources["l_theta"] = ConstantSource::Disabled;
  }

  k.tau_bar = sc.delays.tau_bar;
  rb.sources["tau_bar"] = ConstantSource::Scenario;
  if (k.tau_bar > 0.0) {
    if (decl.beta) {
      k.beta = *decl.beta;
      rb.sources["beta"] = ConstantSource::Declared;
    } else {
      rb.missing.emplace_back("beta");
    }
  } else {
    rb.sources["beta"] = decl.beta ? ConstantSource::Declared : ConstantSource::Disabled;
    if (decl.beta) k.beta = *decl.beta;
  }

  if (allowed.design_drift && sc.eta_d > 0.0) {
    k.eta_d = sc.eta_d;
    rb.sources["eta_d"] = ConstantSource::Scenario;
    if (decl.l_d) {
      k.l_d = *decl.l_d;
      rb.sources["l_d"] = ConstantSource::Declared;
    } else {
      rb.missing.emplace_back("l_d");
    }
  } else {
    rb.sources["eta_d"] = ConstantSource::Disabled;
    rb.sources["l_d"] = ConstantSource::Disabled;
  }

  if (allowed.switching && sc.policy) {
    k.nu_sigma = resolve_nu(decl.nu_sigma, "nu_sigma");
    if (decl.tau_a_sigma) {
      k.tau_a_sigma = *decl.tau_a_sigma;
      rb.sources["tau_a_sigma"] = ConstantSource::Declared;
    } else if (sc.policy->kind == PolicyKind::DwellConstrained && sc.policy->tau_a > 0.0) {
      k.tau_a_sigma = sc.policy->tau_a;
      rb.sources["tau_a_sigma"] = ConstantSource::Scenario;
    } else if (sc.policy->kind == PolicyKind::Hysteresis && sc.policy->m_upper) {
      k.tau_a_sigma = hysteresis_dwell_bound(sc.policy->band_lower(), *sc.policy->m_upper);
      rb.sources["tau_a_sigma"] = ConstantSource::Computed;
    } else {
      rb.missing.emplace_back("tau_a_sigma");
    }
  } else {
    rb.sources["nu_sigma"] = ConstantSource::Disabled;
    rb.sources["tau_a_sigma"] = ConstantSource::Disabled;
  }

  if (allowed.reconfiguration && sc.reconfiguration_enabled() && !decl.merged_jumps) {
    k.nu_c = resolve_nu(decl.nu_c, "nu_c");
    k.tau_a_c = decl.tau_a_c ? *decl.tau_a_c : sc.reconfig.period;
    rb.sources["tau_a_c"] = decl.tau_a_c ? ConstantSource::Declared : ConstantSource::Scenario;
  } else {
    rb.sources["nu_c"] = ConstantSource::Disabled;
    rb.sources["tau_a_c"] = ConstantSource::Disabled;
  }
  return rb;
}

}  // namespace agentic
