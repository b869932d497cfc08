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

#include "agentic/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace agentic::csv {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string trajectory_header(std::size_t state_dim) {
  std::string h = "t";
  for (std::size_t i = 1; i <= state_dim; ++i) h += ",x" + std::to_string(i);
  h += ",norm,theta,sigma,c";
  return h;
}

std::string trajectory_csv(const Trajectory& traj) {
  const std::size_t n = traj.states.empty() ? 0 : traj.states.front().x.size();
  std::string out = trajectory_header(n);
  out += '\n';
  for (const auto& s : traj.states) {
    out += format_double(s.t);
    for (double v : s.x) {
      out += ',';
      out += format_double(v);
    }
    out += ',';
    out += format_double(norm2(s.x));
    out += ',';
    out += format_double(s.theta.empty() ? 0.0 : s.theta.front());
    out += ',' + std::to_string(s.sigma) + ',' + std::to_string(s.c) + '\n';
  }
  return out;
}

std::string events_csv(const Trajectory& traj) {
  std::string out(kEventsHeader);
  out += '\n';
  for (const auto& e : traj.events) {
    out += format_double(e.t) + ',' + std::string(to_string(e.kind)) + ',' + std::to_string(e.from) + ',' +
           std::to_string(e.to) + '\n';
  }
  return out;
}

std::string summary_csv(const Trajectory& traj, const StabilityVerdict& verdict, const SwitchStats& stats) {
  std::string out(kSummaryHeader);
  out += '\n';
  out += std::string(to_string(verdict.outcome)) + ',' + format_double(verdict.final_norm) + ',' +
         format_double(verdict.max_norm) + ',' + std::to_string(stats.count()) + ',' +
         format_double(stats.min_gap) + ',' + format_double(stats.mean_gap) + ',' +
         format_double(traj.empirical_score_rate) + ',' + std::string(to_string(traj.termination)) + '\n';
  return out;
}

std::string sweep_csv(const SweepGrid& grid) {
  std::string out(kSweepHeader);
  out += '\n';
  for (std::size_t b = 0; b < grid.tau_bar_values.size(); ++b) {
    for (std::size_t a = 0; a < grid.tau_a_values.size(); ++a) {
      const auto& v = grid.at(b, a);
      out += format_double(grid.tau_bar_values[b]) + ',' + format_double(grid.tau_a_values[a]) + ',' +
             std::string(to_string(v.outcome)) + ',' + format_double(v.final_norm) + '\n';
    }
  }
  return out;
}

std::string boundary_csv(const std::vector<BoundaryPoint>& boundary) {
  std::string out(kBoundaryHeader);
  out += '\n';
  for (const auto& p : boundary) {
    out += format_double(p.tau_bar) + ',' + (p.tau_a ? format_double(*p.tau_a) : std::string("nan")) + '\n';
  }
  return out;
}

std::string budget_csv(const std::vector<BudgetSample>& samples) {
  std::string out(kBudgetHeader);
  out += '\n';
  for (const auto& s : samples) {
    const auto& r = s.report;
    out += format_double(s.t) + ',' + format_double(r.term_adaptation) + ',' + format_double(r.term_design) + ',' +
           format_double(r.term_delay) + ',' + format_double(r.term_switch) + ',' + format_double(r.term_reconfig) +
           ',' + format_double(r.gamma) + ',' + format_double(r.lambda) + ',' + format_double(r.lambda_flow) + '\n';
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename " + tmp.string() + ": " + ec.message());
  }
}

}  // namespace agentic::csv
