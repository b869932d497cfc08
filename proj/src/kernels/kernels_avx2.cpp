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

#include <immintrin.h>

#include "agentic/kernels.hpp"

// Compiled with -mavx2 only (no -mfma); mul and add stay separate roundings
// so lanes match the scalar reference bit for bit.

namespace agentic::kernels::avx2 {

namespace {

inline void flow_rows_tail(std::size_t n, std::size_t i0, const double* a, const double* x, const double* b,
                           const double* w, double* y) {
  for (std::size_t i = i0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc = acc + a[j * n + i] * x[j];
    if (b != nullptr) {
      for (std::size_t j = 0; j < n; ++j) acc = acc + b[j * n + i] * w[j];
    }
    y[i] = acc;
  }
}

}  // namespace

void flow_rhs(std::size_t n, const double* a, const double* x, const double* b, const double* w, double* y) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < n; ++j) {
      const __m256d col = _mm256_loadu_pd(a + j * n + i);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(col, _mm256_set1_pd(x[j])));
    }
    if (b != nullptr) {
      for (std::size_t j = 0; j < n; ++j) {
        const __m256d col = _mm256_loadu_pd(b + j * n + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(col, _mm256_set1_pd(w[j])));
      }
    }
    _mm256_storeu_pd(y + i, acc);
  }
  // 2 and 3 row remainders go through SSE2 for the first pair.
  if (i + 2 <= n) {
    __m128d acc = _mm_setzero_pd();
    for (std::size_t j = 0; j < n; ++j) {
      acc = _mm_add_pd(acc, _mm_mul_pd(_mm_loadu_pd(a + j * n + i), _mm_set1_pd(x[j])));
    }
    if (b != nullptr) {
      for (std::size_t j = 0; j < n; ++j) {
        acc = _mm_add_pd(acc, _mm_mul_pd(_mm_loadu_pd(b + j * n + i), _mm_set1_pd(w[j])));
      }
    }
    _mm_storeu_pd(y + i, acc);
    i += 2;
  }
  flow_rows_tail(n, i, a, x, b, w, y);
}

void axpy(std::size_t n, const double* x, double h, const double* k, double* out) {
  const __m256d hv = _mm256_set1_pd(h);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_add_pd(_mm256_loadu_pd(x + i), _mm256_mul_pd(hv, _mm256_loadu_pd(k + i)));
    _mm256_storeu_pd(out + i, r);
  }
  for (; i < n; ++i) out[i] = x[i] + h * k[i];
}

void rk4_combine(std::size_t n, const double* x, double dt, const double* k1, const double* k2,
                 const double* k3, const double* k4, double* out) {
  const double c = dt / 6.0;
  const __m256d cv = _mm256_set1_pd(c);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d s = _mm256_add_pd(_mm256_loadu_pd(k1 + i), _mm256_mul_pd(two, _mm256_loadu_pd(k2 + i)));
    s = _mm256_add_pd(s, _mm256_mul_pd(two, _mm256_loadu_pd(k3 + i)));
    s = _mm256_add_pd(s, _mm256_loadu_pd(k4 + i));
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(x + i), _mm256_mul_pd(cv, s)));
  }
  for (; i < n; ++i) {
    double s = k1[i] + 2.0 * k2[i];
    s = s + 2.0 * k3[i];
    s = s + k4[i];
    out[i] = x[i] + c * s;
  }
}

}  // namespace agentic::kernels::avx2
