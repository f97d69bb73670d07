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

#include "g41/blade.hpp"
#include "g41/complex_matrix.hpp"
#include "g41/multivector.hpp"

namespace g41 {

/// Dirac-Pauli alpha^1..alpha^3 and beta.
struct DiracPauliBasis {
  ComplexMatrix4 alpha1;
  ComplexMatrix4 alpha2;
  ComplexMatrix4 alpha3;
  ComplexMatrix4 beta;

  /// alpha^m for m in {1, 2, 3}.
  const ComplexMatrix4& alpha(int m) const;

  static const DiracPauliBasis& standard();
};

/// Matrix of the raised-index vector sigma^alpha built from alpha/beta products:
///   sigma^0 = i a1 a2 a3 b,  sigma^1 = -i a2 a3 b,  sigma^2 = i a1 a3 b,
///   sigma^3 = -i a1 a2 b,    sigma^4 = i a1 a2 a3.
/// These satisfy sigma^m sigma^0 = alpha^m and sigma^4 sigma^0 = beta.
ComplexMatrix4 sigma_matrix(int alpha);

/// Image of the orthonormal generator sigma_alpha under phi.
///
/// phi(sigma_0) = sigma_matrix(0) and phi(sigma_i) = -sigma_matrix(i). Flipping
/// every generator is what makes the pseudoscalar land on +i*I while keeping
/// phi(sigma^{m0}) = alpha^m and phi(sigma^{40}) = beta.
const ComplexMatrix4& generator_image(int alpha);

/// phi of a single basis blade (ordered product of generator images).
const ComplexMatrix4& blade_image(BladeIndex blade);

/// Real-linear algebra isomorphism G(4,1) -> M(4, C).
ComplexMatrix4 phi(const Multivector& a);

/// Inverse of phi by trace pairing: for each blade e_A of grade <= 2,
/// z_A = tr(phi(e_A)^-1 M) / 4 gives e_A (real part) and i e_A (imaginary part).
Multivector phi_inv(const ComplexMatrix4& m);

}  // namespace g41
