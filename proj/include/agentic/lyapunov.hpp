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

#include <complex>
#include <stdexcept>
#include <vector>

#include "agentic/linalg.hpp"

namespace agentic {

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadratic Lyapunov certificate V(x) = x' P x of one Hurwitz mode.
struct ModeCertificate {
  Matrix p_matrix;
  double gamma = 0.0;
  std::vector<std::complex<double>> eigenvalues;
};

/// Full spectrum, sorted by (real, imag). 2x2 uses the closed-form quadratic;
/// larger matrices (n <= 16) use a dense Hessenberg-QR solver.
/// Throws std::invalid_argument for non-square, empty, oversized or non-finite input.
std::vector<std::complex<double>> eigen_spectrum(const Matrix& a);

/// gamma = min_i(-Re lambda_i). Throws CertificateError naming the offending eigenvalue
/// when the matrix is not Hurwitz.
double decay_rate(const Matrix& a);

/// Unique P with A'P + PA = -Q, solved as the Kronecker-vectorized linear system.
/// Throws CertificateError when A is not Hurwitz.
Matrix solve_lyapunov(const Matrix& a, const Matrix& q);

/// Eigenvalues of a symmetric matrix, ascending.
std::vector<double> symmetric_eigenvalues(const Matrix& s);

ModeCertificate make_certificate(const Matrix& a);
ModeCertificate make_certificate(const Matrix& a, const Matrix& q);

/// nu = max over ordered pairs p != p' of lambda_max(P_p) / lambda_min(P_p'); 1 for one mode.
double comparability_constant(const std::vector<ModeCertificate>& certs);

}  // namespace agentic
