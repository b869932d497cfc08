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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "agentic/budget.hpp"
#include "agentic/experiments.hpp"
#include "agentic/hybrid_engine.hpp"
#include "agentic/policies.hpp"

namespace agentic::csv {

inline constexpr std::string_view kEventsHeader = "t,kind,from,to";
inline constexpr std::string_view kSummaryHeader =
    "verdict,final_norm,max_norm,switch_count,min_gap,mean_gap,empirical_score_rate,termination";
inline constexpr std::string_view kSweepHeader = "tau_bar,tau_a,verdict,final_norm";
inline constexpr std::string_view kBoundaryHeader = "tau_bar,tau_a_boundary";
inline constexpr std::string_view kBudgetHeader =
    "t,term_adaptation,term_design,term_delay,term_switch,term_reconfig,gamma,lambda,lambda_flow";

/// Shortest decimal string that parses back to the same double; "inf", "-inf", "nan" otherwise.
std::string format_double(double v);

/// "t,x1,...,xn,norm,theta,sigma,c".
std::string trajectory_header(std::size_t state_dim);

std::string trajectory_csv(const Trajectory& traj);
std::string events_csv(const Trajectory& traj);
std::string summary_csv(const Trajectory& traj, const StabilityVerdict& verdict, const SwitchStats& stats);
std::string sweep_csv(const SweepGrid& grid);
/// Undefined boundaries are written as nan.
std::string boundary_csv(const std::vector<BoundaryPoint>& boundary);
std::string budget_csv(const std::vector<BudgetSample>& samples);

/// Writes through a temporary sibling file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace agentic::csv
