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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "agentic/experiments.hpp"
#include "agentic/lyapunov.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace agentic;

namespace {

double residual(const Matrix& a, const Matrix& p, const Matrix& q) {
  const Matrix r = a.transpose() * p + p * a + q;
  return r.frobenius_norm() / std::max(1.0, q.frobenius_norm());
}

}  // namespace

TEST_SUITE("lyapunov") {
  TEST_CASE("spectrum of the tracking mode") {
    const auto ev = eigen_spectrum(presets::mode_a2());
    REQUIRE(ev.size() == 2);
    CHECK(ev[0].real() == doctest::Approx(-2.057).epsilon(1e-3));
    CHECK(ev[1].real() == doctest::Approx(-0.609).epsilon(1e-3));
    CHECK(ev[0].imag() == 0.0);
  }

  TEST_CASE("spectra of simple matrices") {
    const auto neg = eigen_spectrum(Matrix::identity(2) * -1.0);
    CHECK(neg[0] == std::complex<double>(-1.0, 0.0));
    CHECK(neg[1] == std::complex<double>(-1.0, 0.0));
    const auto rot = eigen_spectrum(Matrix{{0.0, 1.0}, {-1.0, 0.0}});
    CHECK(rot[0].real() == 0.0);
    CHECK(std::abs(rot[0].imag()) == doctest::Approx(1.0));
    CHECK(rot[0].imag() == doctest::Approx(-rot[1].imag()));
  }

  TEST_CASE("decay rates") {
    CHECK(std::abs(decay_rate(presets::mode_a2()) - 0.609) < 1e-3);
    CHECK(decay_rate(presets::mode_a2()) == doctest::Approx(0.6088079005955935).epsilon(1e-12));
    CHECK(decay_rate(Matrix::identity(2) * -1.0) == 1.0);
    CHECK(decay_rate(presets::mode_a1()) == doctest::Approx(1.0508791335287493).epsilon(1e-12));
  }

  TEST_CASE("non-Hurwitz matrices are refused with the eigenvalue named") {
    try {
      decay_rate(Matrix{{0.5, 0.0}, {0.0, -1.0}});
      FAIL("expected CertificateError");
    } catch (const CertificateError& e) {
      CHECK(std::string(e.what()).find("0.5") != std::string::npos);
    }
    CHECK_THROWS_AS(solve_lyapunov(Matrix{{0.0, 1.0}, {-1.0, 0.0}}, Matrix::identity(2)), CertificateError);
    CHECK_THROWS_AS(eigen_spectrum(Matrix(2, 3)), std::invalid_argument);
  }

  TEST_CASE("closed-form Lyapunov solutions") {
    CHECK(solve_lyapunov(Matrix::identity(2) * -1.0, Matrix::identity(2)) == Matrix::identity(2) * 0.5);
    const Matrix p = solve_lyapunov(Matrix{{-1.0, 0.0}, {0.0, -2.0}}, Matrix::identity(2));
    CHECK(p(0, 0) == doctest::Approx(0.5));
    CHECK(p(1, 1) == doctest::Approx(0.25));
    CHECK(p(0, 1) == 0.0);
  }

  TEST_CASE("regulation-mode certificate") {
    const ModeCertificate c = make_certificate(presets::mode_a1());
    CHECK(residual(presets::mode_a1(), c.p_matrix, Matrix::identity(2)) <= 1e-10);
    CHECK(c.p_matrix(0, 1) == c.p_matrix(1, 0));
    CHECK(symmetric_eigenvalues(c.p_matrix)[0] > 0.0);
    CHECK(c.p_matrix(0, 0) == doctest::Approx(0.3619755201775425).epsilon(1e-10));
    CHECK(c.p_matrix(1, 1) == doctest::Approx(1.9857125572447214).epsilon(1e-10));
  }

  TEST_CASE("residual bound on 1000 random Hurwitz matrices") {
    std::mt19937_64 rng(1000);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const std::size_t n = 2 + k % 2;
      const Matrix a = testing::random_hurwitz(rng, n);
      const Matrix p = solve_lyapunov(a, Matrix::identity(n));
      worst = std::max(worst, residual(a, p, Matrix::identity(n)));
    }
    CAPTURE(worst);
    CHECK(worst <= 1e-10);
  }

  TEST_CASE("larger spectra satisfy the eigen equation") {
    std::mt19937_64 rng(5);
    for (std::size_t n = 3; n <= 8; ++n) {
      const Matrix a = testing::random_matrix(rng, n, n, 2.0);
      Eigen::MatrixXcd m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
      for (const auto& lambda : eigen_spectrum(a)) {
        const Eigen::MatrixXcd shifted = m - lambda * Eigen::MatrixXcd::Identity(n, n);
        const double smin = Eigen::JacobiSVD<Eigen::MatrixXcd>(shifted).singularValues()(n - 1);
        CHECK(smin <= 1e-9 * std::max(1.0, std::abs(lambda)));
      }
    }
  }

  TEST_CASE("decay rate is invariant under similarity") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 50; ++k) {
      const std::size_t n = 2 + k % 3;
      const Matrix a = testing::random_hurwitz(rng, n);
      const Matrix t = testing::random_matrix(rng, n, n, 0.3) + Matrix::identity(n);
      const Matrix b = t * a * inverse(t);
      CHECK(decay_rate(b) == doctest::Approx(decay_rate(a)).epsilon(1e-8));
    }
  }

  TEST_CASE("comparability constants") {
    CHECK(comparability_constant({make_certificate(presets::mode_a1())}) == 1.0);
    ModeCertificate p1{Matrix::identity(2), 1.0, {}};
    ModeCertificate p2{Matrix::identity(2) * 2.0, 1.0, {}};
    CHECK(comparability_constant({p1, p2}) == doctest::Approx(2.0));

    const double nu =
        comparability_constant({make_certificate(presets::mode_a1()), make_certificate(presets::mode_a2())});
    CHECK(nu >= 1.0);
    CHECK(nu == doctest::Approx(36.62114774823127).epsilon(1e-9));
  }

  TEST_CASE("comparability constant scales with a scaled certificate") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 20; ++k) {
      ModeCertificate a = make_certificate(testing::random_hurwitz(rng, 2));
      ModeCertificate b = make_certificate(testing::random_hurwitz(rng, 2));
      const double s = 1.0 + 4.0 * std::uniform_real_distribution<double>(0, 1)(rng);
      const auto ea = symmetric_eigenvalues(a.p_matrix), eb = symmetric_eigenvalues(b.p_matrix);
      const double base = std::max(ea.back() / eb.front(), eb.back() / ea.front());
      CHECK(comparability_constant({a, b}) == doctest::Approx(base).epsilon(1e-12));
      b.p_matrix = b.p_matrix * s;
      const double scaled = std::max(ea.back() / (s * eb.front()), s * eb.back() / ea.front());
      CHECK(comparability_constant({a, b}) == doctest::Approx(scaled).epsilon(1e-12));
      CHECK(comparability_constant({a, b}) >= 1.0);
    }
  }

  TEST_CASE("frozen-mode Lyapunov function is nonincreasing along the flow") {
    const Matrix a = presets::mode_a2();
    const Matrix p = make_certificate(a).p_matrix;
    ScenarioConfig s;
    s.dynamics = {ModeDynamics{a, Matrix::zeros(2), "A2"}};
    s.integrator.horizon = 10.0;
    const Trajectory traj = simulate(s);
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& st : traj.states) {
      const Vector px = p * st.x;
      const double v = st.x[0] * px[0] + st.x[1] * px[1];
      CHECK(v <= prev);
      prev = v;
    }
  }
}
