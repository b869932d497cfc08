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

#include <algorithm>
#include <cmath>
#include <string>

#include "agentic/hybrid_engine.hpp"

namespace agentic {

HistoryBuffer::HistoryBuffer(Vector initial, double window) : initial_(std::move(initial)), window_(window) {
  if (!(window_ >= 0.0)) throw std::invalid_argument("HistoryBuffer: window must be >= 0");
}

void HistoryBuffer::push(double t, std::span<const double> x) {
  if (x.size() != initial_.size()) throw std::invalid_argument("HistoryBuffer: sample dimension mismatch");
  if (!times_.empty() && !(t > times_.back())) {
    throw std::invalid_argument("HistoryBuffer: sample times must be strictly increasing");
  }
  times_.push_back(t);
  values_.insert(values_.end(), x.begin(), x.end());
  if (std::isfinite(window_)) {
    // Keep one sample at or before the window start so interpolation stays bracketed.
    const std::size_t n = initial_.size();
    while (times_.size() > 2 && times_[1] <= t - window_) {
      times_.pop_front();
      values_.erase(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(n));
    }
  }
}

void HistoryBuffer::replace_newest(std::span<const double> x) {
  if (times_.empty()) throw std::logic_error("HistoryBuffer: empty");
  if (x.size() != initial_.size()) throw std::invalid_argument("HistoryBuffer: sample dimension mismatch");
  std::copy(x.begin(), x.end(), values_.end() - static_cast<std::ptrdiff_t>(x.size()));
}

double HistoryBuffer::newest_time() const {
  if (times_.empty()) throw std::logic_error("HistoryBuffer: empty");
  return times_.back();
}

double HistoryBuffer::oldest_time() const {
  if (times_.empty()) throw std::logic_error("HistoryBuffer: empty");
  return times_.front();
}

void HistoryBuffer::sample_into(double t_query, std::span<double> out) const {
  const std::size_t n = initial_.size();
  if (out.size() != n) throw std::invalid_argument("HistoryBuffer: output dimension mismatch");
  if (times_.empty() || t_query < times_.front()) {
    if (!times_.empty() && times_.front() > 0.0 && std::isfinite(window_) && t_query >= 0.0) {
      throw std::out_of_range("HistoryBuffer: query older than retained window");
    }
    std::copy(initial_.begin(), initial_.end(), out.begin());
    return;
  }
  const double newest = times_.back();
  if (t_query > newest) {
    // Stage times are formed as t + c*dt - tau; allow rounding-level overshoot.
    if (t_query - newest > 1e-12 * std::max(1.0, std::abs(newest))) {
      throw FutureReadError("HistoryBuffer: future read at t=" + std::to_string(t_query) +
                            " beyond newest sample t=" + std::to_string(newest));
    }
    t_query = newest;
  }
  const auto it = std::upper_bound(times_.begin(), times_.end(), t_query);
  const std::size_t hi = static_cast<std::size_t>(it - times_.begin());
  const std::size_t lo = hi - 1;
  if (times_[lo] == t_query || hi == times_.size()) {
    for (std::size_t i = 0; i < n; ++i) out[i] = values_[lo * n + i];
    return;
  }
  const double w = (t_query - times_[lo]) / (times_[hi] - times_[lo]);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = values_[lo * n + i];
    const double b = values_[hi * n + i];
    out[i] = a + (b - a) * w;
  }
}

Vector HistoryBuffer::sample(double t_query) const {
  Vector out(initial_.size());
  sample_into(t_query, out);
  return out;
}

Vector sample_delayed(const HistoryBuffer& h, double t_query) { return h.sample(t_query); }

}  // namespace agentic
