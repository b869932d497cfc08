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

#include "agentic/kernels.hpp"

namespace agentic::kernels::scalar {

void flow_rhs(std::size_t n, const double* a, const double* x, const double* b, const double* w, double* y) {
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc = acc + a[j * n + i] * x[j];
    if (b != nullptr) {
      for (std::size_t j = 0; j < n; ++j) acc = acc + b[j * n + i] * w[j];
    }
    y[i] = acc;
  }
}

void axpy(std::size_t n, const double* x, double h, const double* k, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + h * k[i];
}

void rk4_combine(std::size_t n, const double* x, double dt, const double* k1, const double* k2,
                 const double* k3, const double* k4, double* out) {
  const double c = dt / 6.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = k1[i] + 2.0 * k2[i];
    s = s + 2.0 * k3[i];
    s = s + k4[i];
    out[i] = x[i] + c * s;
  }
}

}  // namespace agentic::kernels::scalar
