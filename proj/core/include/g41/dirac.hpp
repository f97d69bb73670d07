// Copyright 2026 The g41 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <span>

#include "g41/complex_matrix.hpp"
#include "g41/field.hpp"
#include "g41/hermitian_eigen.hpp"
#include "g41/monogenic.hpp"

namespace g41 {

/// A_bar = p_m alpha^m + m beta, with its eigenvector matrix psi_bar and
/// diagonal eigenvalue matrix Lambda.
struct DiracSystem {
  MomentumVector k;
  ComplexMatrix4 a_bar;
  ComplexMatrix4 psi_bar;
  ComplexMatrix4 lambda;
  /// Eigenvalues as computed, in column order of psi_bar.
  std::array<double, 4> eigenvalues{};
  bool ordered = false;
};

ComplexMatrix4 build_dirac_operator(const MomentumVector& k);

/// Unordered eigensystem straight from the eigensolver.
DiracSystem solve_dirac_system(const MomentumVector& k);

/// Reorders so that Lambda = E beta, i.e. eigenvalue pattern (+E, +E, -E, -E).
///
/// Inside each two-dimensional eigenspace the columns are the eigenvectors of
/// the spin operator Sigma.p_hat (Sigma_3 when p = 0), eigenvalue +1 first,
/// each scaled so that its largest-modulus component is real and positive.
/// Throws ContractViolation when E = 0.
DiracSystem order_eigensystem(const DiracSystem& system);

/// solve_dirac_system followed by order_eigensystem.
DiracSystem dirac_system(const MomentumVector& k);

/// Spin operator Sigma.p_hat = -phi(p_hat_m sigma^m sigma^{40}); p_hat = e_3 when p = 0.
ComplexMatrix4 spin_operator(const std::array<double, 3>& p);

/// ||A_bar psi_bar - psi_bar Lambda||_max.
double eigen_equation_residual(const DiracSystem& s);
/// ||psi_bar Lambda psi_bar^-1 - A_bar||_max.
double reconstruction_residual(const DiracSystem& s);

struct CrosscheckReport {
  /// max over points of ||(i d_t + i alpha^m d_m - beta m) phi(psi(x))||_max.
  double dirac_residual = 0.0;
  /// ||phi(psi_0) - (E I + A_bar)||_max.
  double amplitude_residual = 0.0;
  /// ||A_bar (E I + A_bar) - E (E I + A_bar)||_max.
  double projector_residual = 0.0;

  double residual() const;
};

/// Compares the geometric plane wave psi = psi_0 exp(i(-E t + p.x)) with the
/// matrix form of the Dirac equation at the given points.
CrosscheckReport geometric_matrix_crosscheck(const MomentumVector& k, std::span<const Point5> points);

/// Geometric residual of (sigma^0 d_t + sigma^m d_m + i sigma^4 m) applied to
/// phi_inv(psi_bar S_j) exp(i(-lambda_j t + p.x)) for each column selector
/// S_j (the diagonal unit matrix picking column j). Returns the maximum.
double column_annihilation_residual(const DiracSystem& s, std::span<const ComplexMatrix4, 4> selectors,
                                    const Point5& x);

}  // namespace g41
