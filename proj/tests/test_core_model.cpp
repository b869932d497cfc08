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

#include "agentic/core_model.hpp"
#include "agentic/experiments.hpp"
#include "agentic/scenario.hpp"
#include "doctest.h"

using namespace agentic;

TEST_SUITE("core_model") {
  TEST_CASE("delay-coupling matrix of the wrong size is a dimension mismatch") {
    ScenarioConfig s = presets::level1_baseline();
    s.dynamics[0].a_delay = Matrix::zeros(3);
    const ValidationReport r = validate_scenario(s);
    CHECK_FALSE(r.ok());
    CHECK(r.mentions("dimension mismatch"));
  }

  TEST_CASE("the switched two-mode scenario validates cleanly") {
    for (const auto& name : presets::names()) {
      CAPTURE(name);
      const ValidationReport r = validate_scenario(presets::by_name(name));
      CHECK_MESSAGE(r.ok(), r.to_string());
    }
  }

  TEST_CASE("L1 with an adaptation rate is rejected") {
    ScenarioConfig s = presets::level1_baseline();
    s.adaptation.enabled = true;
    s.adaptation.rho = 0.2;
    CHECK(validate_scenario(s).mentions("adaptation forbidden at L1"));
  }

  TEST_CASE("agency gating is exact per level") {
    CHECK(permitted_mechanisms(AgencyLevel::L1) == Mechanisms{false, false, false, false});
    CHECK(permitted_mechanisms(AgencyLevel::L2) == Mechanisms{true, false, false, false});
    CHECK(permitted_mechanisms(AgencyLevel::L3) == Mechanisms{true, true, false, false});
    CHECK(permitted_mechanisms(AgencyLevel::L4) == Mechanisms{true, true, true, false});
    CHECK(permitted_mechanisms(AgencyLevel::L5) == Mechanisms{true, true, true, true});
  }

  TEST_CASE("every disabled mechanism is a validation error") {
    const ScenarioConfig sw = presets::fig1_sweep();
    for (auto level : {AgencyLevel::L1, AgencyLevel::L2}) {
      ScenarioConfig s = sw;
      s.level = level;
      CHECK(validate_scenario(s).mentions("switching forbidden"));
    }
    ScenarioConfig rc = presets::fig2_reconfig();
    rc.level = AgencyLevel::L3;
    CHECK(validate_scenario(rc).mentions("reconfiguration forbidden at L3"));

    ScenarioConfig drift = presets::fig3_stable();
    drift.eta_d = 0.1;
    drift.integrator.zeta0 = {1.0};
    CHECK(validate_scenario(drift).mentions("design drift forbidden at L4"));
    drift.level = AgencyLevel::L5;
    CHECK(validate_scenario(drift).ok());
  }

  TEST_CASE("agency level names round-trip") {
    for (int l = 1; l <= 5; ++l) {
      const auto level = static_cast<AgencyLevel>(l);
      CHECK(parse_agency_level(to_string(level)) == level);
    }
    CHECK_FALSE(parse_agency_level("L6").has_value());
  }

  TEST_CASE("numeric field checks") {
    ScenarioConfig s = presets::fig3_stable();
    s.adaptation.rho = -1.0;
    s.adaptation.kappa = -0.1;
    s.delays.tau_theta = 0.5;
    s.integrator.dt = 0.0;
    s.classifier.blowup_tol = 1e-3;
    const ValidationReport r = validate_scenario(s);
    CHECK(r.mentions("negative rate"));
    CHECK(r.mentions("negative target amplitude"));
    CHECK(r.mentions("exceeds tau_bar"));
    CHECK(r.mentions("integrator.dt"));
    CHECK(r.mentions("must exceed settle_tol"));
  }

  TEST_CASE("delays shorter than one step are refused") {
    ScenarioConfig s = presets::fig3_stable();
    s.delays.tau_u = s.delays.tau_bar = 0.0004;
    CHECK(validate_scenario(s).mentions("shorter than dt"));
  }

  TEST_CASE("project_design_state copies the discrete part") {
    AugmentedState s;
    s.x = {1.0, 0.0};
    s.sigma = 2;
    s.c = 1;
    DesignTuple d = project_design_state(s);
    CHECK(d.zeta.empty());
    CHECK(d.sigma == 2);
    CHECK(d.c == 1);

    s.zeta = {0.25, -3.5};
    s.sigma = 1;
    s.c = 4;
    d = project_design_state(s);
    CHECK(d.zeta == s.zeta);
    CHECK(d.sigma == 1);
    CHECK(d.c == 4);
  }

  TEST_CASE("state invariants") {
    AugmentedState s;
    s.x = {1.0, 2.0};
    CHECK(state_violations(s, 2, 1).empty());
    s.sigma = 3;
    CHECK_FALSE(state_violations(s, 2, 1).empty());
    s.sigma = 1;
    s.x[1] = std::nan("");
    CHECK_FALSE(state_violations(s, 2, 1).empty());
  }
}
