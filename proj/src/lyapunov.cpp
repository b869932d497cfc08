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

#include "agentic/lyapunov.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace agentic {

namespace {

constexpr std::size_t kMaxDim = 16;

void check_square(const Matrix& a, const char* who) {
  if (a.empty() || !a.square()) throw std::invalid_argument(std::string(who) + ": matrix must be square");
  if (a.rows() > kMaxDim) throw std::invalid_argument(std::string(who) + ": dimension above 16 unsupported");
  if (!a.all_finite()) throw std::invalid_argument(std::string(who) + ": non-finite entries");
}

Eigen::MatrixXd to_eigen(const Matrix& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

void sort_spectrum(std::vector<std::complex<double>>& ev) {
  std::sort(ev.begin(), ev.end(), [](const auto& l, const auto& r) {
    return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
  });
}

std::vector<std::complex<double>> spectrum_2x2(const Matrix& a) {
  const double tr = a(0, 0) + a(1, 1);
  const double det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  const double half = 0.5 * tr;
  const double disc = half * half - det;
  if (disc >= 0.0) {
    const double r = std::sqrt(disc);
    // Larger-magnitude root first, the other from det to avoid cancellation.
    const double big = half >= 0.0 ? half + r : half - r;
    const double small = big != 0.0 ? det / big : half - r;
    return {{big, 0.0}, {small, 0.0}};
  }
  const double im = std::sqrt(-disc);
  return {{half, -im}, {half, im}};
}

}  // namespace

std::vector<std::complex<double>> eigen_spectrum(const Matrix& a) {
  check_square(a, "eigen_spectrum");
  std::vector<std::complex<double>> ev;
  if (a.rows() == 1) {
    ev = {{a(0, 0), 0.0}};
  } else if (a.rows() == 2) {
    ev = spectrum_2x2(a);
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(to_eigen(a), /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigen_spectrum: QR iteration did not converge");
    const auto& vals = solver.eigenvalues();
    for (Eigen::Index i = 0; i < vals.size(); ++i) ev.push_back(vals(i));
  }
  sort_spectrum(ev);
  return ev;
}

double decay_rate(const Matrix& a) {
  const auto ev = eigen_spectrum(a);
  double gamma = std::numeric_limits<double>::infinity();
  for (const auto& l : ev) {
    if (!(l.real() < 0.0)) {
      std::ostringstream os;
      os << "matrix is not Hurwitz: eigenvalue " << l.real() << (l.imag() < 0 ? " - " : " + ")
         << std::abs(l.imag()) << "i has nonnegative real part";
      throw CertificateError(os.str());
    }
    gamma = std::min(gamma, -l.real());
  }
  return gamma;
}

Matrix solve_lyapunov(const Matrix& a, const Matrix& q) {
  check_square(a, "solve_lyapunov");
  if (q.rows() != a.rows() || !q.square()) throw std::invalid_argument("solve_lyapunov: Q dimension mismatch");
  decay_rate(a);  // throws for non-Hurwitz A

  // vec(A'P + PA) = (I kron A' + A' kron I) vec(P), column-major vec.
  const std::size_t n = a.rows();
  const std::size_t nn = n * n;
  Matrix k(nn, nn);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t row = j * n + i;  // entry (i, j) of the result
      // (A'P)_{ij} = sum_l A_{li} P_{lj}
      for (std::size_t l = 0; l < n; ++l) k(row, j * n + l) += a(l, i);
      // (PA)_{ij} = sum_l P_{il} A_{lj}
      for (std::size_t l = 0; l < n; ++l) k(row, l * n + i) += a(l, j);
    }
  }
  Vector rhs(nn);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) rhs[j * n + i] = -q(i, j);
  const Vector vec_p = solve_linear(std::move(k), std::move(rhs));

  Matrix p(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) p(i, j) = vec_p[j * n + i];
  // Remove the antisymmetric rounding residue.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = 0.5 * (p(i, j) + p(j, i));
      p(i, j) = s;
      p(j, i) = s;
    }
  return p;
}

std::vector<double> symmetric_eigenvalues(const Matrix& s) {
  check_square(s, "symmetric_eigenvalues");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(s), Eigen::EigenvaluesOnly);
  const auto& vals = solver.eigenvalues();
  return {vals.data(), vals.data() + vals.size()};
}

ModeCertificate make_certificate(const Matrix& a) { return make_certificate(a, Matrix::identity(a.rows())); }

ModeCertificate make_certificate(const Matrix& a, const Matrix& q) {
  ModeCertificate cert;
  cert.eigenvalues = eigen_spectrum(a);
  cert.gamma = decay_rate(a);
  cert.p_matrix = solve_lyapunov(a, q);
  const auto pe = symmetric_eigenvalues(cert.p_matrix);
  if (!(pe.front() > 0.0)) throw CertificateError("Lyapunov solution is not positive definite");
  return cert;
}

double comparability_constant(const std::vector<ModeCertificate>& certs) {
  if (certs.empty()) throw std::invalid_argument("comparability_constant: no certificates");
  const std::size_t n = certs.front().p_matrix.rows();
  std::vector<double> lo, hi;
  for (const auto& c : certs) {
    if (c.p_matrix.rows() != n) throw std::invalid_argument("comparability_constant: dimension mismatch");
    const auto e = symmetric_eigenvalues(c.p_matrix);
    lo.push_back(e.front());
    hi.push_back(e.back());
  }
  double nu = 1.0;
  for (std::size_t p = 0; p < certs.size(); ++p)
    for (std::size_t q = 0; q < certs.size(); ++q)
      if (p != q) nu = std::max(nu, hi[p] / lo[q]);
  return nu;
}

}  // namespace agentic
