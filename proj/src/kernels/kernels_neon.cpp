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

#include <arm_neon.h>

#include "agentic/kernels.hpp"

// vmulq/vaddq only; vfmaq would change rounding relative to the scalar path.

namespace agentic::kernels::neon {

void flow_rhs(std::size_t n, const double* a, const double* x, const double* b, const double* w, double* y) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t j = 0; j < n; ++j) {
      acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(a + j * n + i), vdupq_n_f64(x[j])));
    }
    if (b != nullptr) {
      for (std::size_t j = 0; j < n; ++j) {
        acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(b + j * n + i), vdupq_n_f64(w[j])));
      }
    }
    vst1q_f64(y + i, acc);
  }
  for (; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc = acc + a[j * n + i] * x[j];
    if (b != nullptr) {
      for (std::size_t j = 0; j < n; ++j) acc = acc + b[j * n + i] * w[j];
    }
    y[i] = acc;
  }
}

void axpy(std::size_t n, const double* x, double h, const double* k, double* out) {
  const float64x2_t hv = vdupq_n_f64(h);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vaddq_f64(vld1q_f64(x + i), vmulq_f64(hv, vld1q_f64(k + i))));
  }
  for (; i < n; ++i) out[i] = x[i] + h * k[i];
}

void rk4_combine(std::size_t n, const double* x, double dt, const double* k1, const double* k2,
                 const double* k3, const double* k4, double* out) {
  const double c = dt / 6.0;
  const float64x2_t cv = vdupq_n_f64(c);
  const float64x2_t two = vdupq_n_f64(2.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t s = vaddq_f64(vld1q_f64(k1 + i), vmulq_f64(two, vld1q_f64(k2 + i)));
    s = vaddq_f64(s, vmulq_f64(two, vld1q_f64(k3 + i)));
    s = vaddq_f64(s, vld1q_f64(k4 + i));
    vst1q_f64(out + i, vaddq_f64(vld1q_f64(x + i), vmulq_f64(cv, s)));
  }
  for (; i < n; ++i) {
    double s = k1[i] + 2.0 * k2[i];
    s = s + 2.0 * k3[i];
    s = s + k4[i];
    out[i] = x[i] + c * s;
  }
}

}  // namespace agentic::kernels::neon
