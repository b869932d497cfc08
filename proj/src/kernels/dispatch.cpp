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

#include <stdexcept>
#include <string>

#include "agentic/kernels.hpp"

namespace agentic::kernels {

namespace {

constexpr KernelTable kScalar{Backend::Scalar, "scalar", &scalar::flow_rhs, &scalar::axpy, &scalar::rk4_combine};

#if defined(__x86_64__) || defined(_M_X64)
constexpr KernelTable kAvx2{Backend::Avx2, "avx2", &avx2::flow_rhs, &avx2::axpy, &avx2::rk4_combine};
#endif

#if defined(__aarch64__)
constexpr KernelTable kNeon{Backend::Neon, "neon", &neon::flow_rhs, &neon::axpy, &neon::rk4_combine};
#endif

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

}  // namespace

bool available(Backend b) {
  switch (b) {
    case Backend::Auto:
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
      return cpu_has_avx2();
    case Backend::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Backend b) {
  if (b == Backend::Auto) {
#if defined(__aarch64__)
    return kNeon;
#else
    if (cpu_has_avx2()) {
#if defined(__x86_64__) || defined(_M_X64)
      return kAvx2;
#endif
    }
    return kScalar;
#endif
  }
  if (!available(b)) {
    throw std::invalid_argument("kernel backend not available: " + std::string(backend_name(b)));
  }
  switch (b) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::Avx2:
      return kAvx2;
#endif
#if defined(__aarch64__)
    case Backend::Neon:
      return kNeon;
#endif
    default:
      return kScalar;
  }
}

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Auto:
      return "auto";
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
    case Backend::Neon:
      return "neon";
  }
  return "unknown";
}

}  // namespace agentic::kernels
