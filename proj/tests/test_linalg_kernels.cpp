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
#include <cstring>
#include <random>

#include "agentic/experiments.hpp"
#include "agentic/hybrid_engine.hpp"
#include "agentic/kernels.hpp"
#include "agentic/linalg.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace agentic;

TEST_SUITE("linalg") {
  TEST_CASE("row-major literal is stored column-major") {
    const Matrix m{{1.0, 2.0}, {3.0, 4.0}};
    CHECK(m(0, 1) == 2.0);
    CHECK(m(1, 0) == 3.0);
    CHECK(m.data()[1] == 3.0);
    CHECK(m.transpose()(0, 1) == 3.0);
  }

  TEST_CASE("products and sums") {
    const Matrix a{{1.0, 2.0}, {3.0, 4.0}};
    const Matrix b{{0.0, 1.0}, {1.0, 0.0}};
    CHECK(a * b == Matrix{{2.0, 1.0}, {4.0, 3.0}});
    CHECK(a + b == Matrix{{1.0, 3.0}, {4.0, 4.0}});
    CHECK(a - a == Matrix::zeros(2));
    const Vector v = a * Vector{1.0, 1.0};
    CHECK(v == Vector{3.0, 7.0});
    CHECK(norm2(Vector{3.0, 4.0}) == 5.0);
  }

  TEST_CASE("solve_linear recovers a known solution") {
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 12; ++n) {
      const Matrix a = testing::random_matrix(rng, n, n) + Matrix::identity(n) * 3.0;
      const Vector x = testing::random_vector(rng, n);
      const Vector sol = solve_linear(a, a * x);
      for (std::size_t i = 0; i < n; ++i) CHECK(sol[i] == doctest::Approx(x[i]).epsilon(1e-12));
    }
  }

  TEST_CASE("singular systems are rejected") {
    CHECK_THROWS_AS(solve_linear(Matrix{{1.0, 2.0}, {2.0, 4.0}}, Vector{1.0, 1.0}), std::runtime_error);
    CHECK_THROWS_AS(inverse(Matrix{{0.0, 0.0}, {0.0, 0.0}}), std::runtime_error);
  }

  TEST_CASE("inverse times matrix is identity") {
    const Matrix a{{4.0, 1.0}, {2.0, 3.0}};
    const Matrix p = a * inverse(a);
    CHECK((p - Matrix::identity(2)).frobenius_norm() < 1e-15);
  }
}

TEST_SUITE("kernels") {
  TEST_CASE("scalar backend is always available") {
    CHECK(kernels::available(kernels::Backend::Scalar));
    CHECK(kernels::table(kernels::Backend::Scalar).backend == kernels::Backend::Scalar);
    CHECK(kernels::available(kernels::table().backend));
  }

  TEST_CASE("unavailable backend is refused") {
#if defined(__x86_64__)
    CHECK_FALSE(kernels::available(kernels::Backend::Neon));
    CHECK_THROWS_AS(kernels::table(kernels::Backend::Neon), std::invalid_argument);
#endif
  }

  TEST_CASE("flow_rhs matches matrix arithmetic") {
    const Matrix a{{1.0, 2.0}, {3.0, 4.0}};
    const Matrix b{{0.5, 0.0}, {0.0, 0.25}};
    const Vector x{1.0, -1.0}, w{2.0, 4.0};
    Vector y(2);
    kernels::scalar::flow_rhs(2, a.data().data(), x.data(), b.data().data(), w.data(), y.data());
    CHECK(y == Vector{-1.0 + 1.0, -1.0 + 1.0});
    kernels::scalar::flow_rhs(2, a.data().data(), x.data(), nullptr, nullptr, y.data());
    CHECK(y == Vector{-1.0, -1.0});
  }

  TEST_CASE("every SIMD backend is bitwise identical to scalar") {
    std::mt19937_64 rng(2024);
    for (auto backend : {kernels::Backend::Avx2, kernels::Backend::Neon}) {
      if (!kernels::available(backend)) continue;
      const auto& simd = kernels::table(backend);
      const auto& ref = kernels::table(kernels::Backend::Scalar);
      for (std::size_t n = 1; n <= 17; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
          const Matrix a = testing::random_matrix(rng, n, n, 3.0);
          const Matrix b = testing::random_matrix(rng, n, n, 3.0);
          const Vector x = testing::random_vector(rng, n, 5.0), w = testing::random_vector(rng, n, 5.0);
          const Vector k1 = testing::random_vector(rng, n), k2 = testing::random_vector(rng, n),
                       k3 = testing::random_vector(rng, n), k4 = testing::random_vector(rng, n);
          Vector y1(n), y2(n);

          ref.flow_rhs(n, a.data().data(), x.data(), b.data().data(), w.data(), y1.data());
          simd.flow_rhs(n, a.data().data(), x.data(), b.data().data(), w.data(), y2.data());
          CHECK(std::memcmp(y1.data(), y2.data(), n * sizeof(double)) == 0);

          ref.flow_rhs(n, a.data().data(), x.data(), nullptr, nullptr, y1.data());
          simd.flow_rhs(n, a.data().data(), x.data(), nullptr, nullptr, y2.data());
          CHECK(std::memcmp(y1.data(), y2.data(), n * sizeof(double)) == 0);

          ref.axpy(n, x.data(), 0.37, k1.data(), y1.data());
          simd.axpy(n, x.data(), 0.37, k1.data(), y2.data());
          CHECK(std::memcmp(y1.data(), y2.data(), n * sizeof(double)) == 0);

          ref.rk4_combine(n, x.data(), 1e-3, k1.data(), k2.data(), k3.data(), k4.data(), y1.data());
          simd.rk4_combine(n, x.data(), 1e-3, k1.data(), k2.data(), k3.data(), k4.data(), y2.data());
          CHECK(std::memcmp(y1.data(), y2.data(), n * sizeof(double)) == 0);
        }
      }
    }
  }

  TEST_CASE("trajectories do not depend on the backend") {
    const ScenarioConfig sc = presets::fig3_stable();
    const Trajectory ref = simulate(sc, {kernels::Backend::Scalar});
    const Trajectory fast = simulate(sc, {kernels::table().backend});
    REQUIRE(ref.states.size() == fast.states.size());
    CHECK(ref.states == fast.states);
    CHECK(ref.events == fast.events);

    const ScenarioConfig rc = ReconfigScenario::make_default().to_scenario(kFastReconfigPeriod);
    CHECK(simulate(rc, {kernels::Backend::Scalar}).states == simulate(rc, {kernels::table().backend}).states);
  }
}
