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

// Inner-loop arithmetic of the flow integrator.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, a SIMD variant (AVX2 on x86-64, NEON on AArch64). The variants
// perform the same IEEE operations in the same order per output element and
// never fuse multiply-add, so all backends produce bit-identical results.
// This is what lets trajectories stay byte-identical regardless of which
// backend the dispatcher picks on a given machine.

#include <cstddef>
#include <string_view>

namespace agentic::kernels {

enum class Backend { Auto, Scalar, Avx2, Neon };

/// y = A x + B w for n x n column-major A, B. B may be null (treated as zero).
using FlowRhsFn = void (*)(std::size_t n, const double* a, const double* x, const double* b,
                           const double* w, double* y);

/// out = x + h * k
using AxpyFn = void (*)(std::size_t n, const double* x, double h, const double* k, double* out);

/// out = x + (dt / 6) * (k1 + 2 k2 + 2 k3 + k4)
using Rk4CombineFn = void (*)(std::size_t n, const double* x, double dt, const double* k1,
                              const double* k2, const double* k3, const double* k4, double* out);

struct KernelTable {
  Backend backend;
  std::string_view name;
  FlowRhsFn flow_rhs;
  AxpyFn axpy;
  Rk4CombineFn rk4_combine;
};

/// True if `b` is compiled in and the running CPU supports it.
bool available(Backend b);

/// Kernel table for `b`. Auto resolves to the widest available backend.
/// Requesting an unavailable backend throws std::invalid_argument.
const KernelTable& table(Backend b = Backend::Auto);

std::string_view backend_name(Backend b);

namespace scalar {
void flow_rhs(std::size_t n, const double* a, const double* x, const double* b, const double* w, double* y);
void axpy(std::size_t n, const double* x, double h, const double* k, double* out);
void rk4_combine(std::size_t n, const double* x, double dt, const double* k1, const double* k2,
                 const double* k3, const double* k4, double* out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void flow_rhs(std::size_t n, const double* a, const double* x, const double* b, const double* w, double* y);
void axpy(std::size_t n, const double* x, double h, const double* k, double* out);
void rk4_combine(std::size_t n, const double* x, double dt, const double* k1, const double* k2,
                 const double* k3, const double* k4, double* out);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void flow_rhs(std::size_t n, const double* a, const double* x, const double* b, const double* w, double* y);
void axpy(std::size_t n, const double* x, double h, const double* k, double* out);
void rk4_combine(std::size_t n, const double* x, double dt, const double* k1, const double* k2,
                 const double* k3, const double* k4, double* out);
}  // namespace neon
#endif

}  // namespace agentic::kernels
