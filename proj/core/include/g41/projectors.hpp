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
#include <string>
#include <vector>

#include "g41/complex_matrix.hpp"
#include "g41/multivector.hpp"

namespace g41 {

enum class Sign { plus, minus };

/// Four mutually orthogonal idempotents summing to one.
struct IdempotentSet {
  enum class Kind { f_set, e_set, custom };
  std::array<Multivector, 4> elements;
  Kind kind = Kind::custom;
};

/// f_1..f_4 = (1 -+ sigma^3)(1 -+ sigma^{04}) / 4 in the order
/// (-,-), (-,+), (+,+), (+,-).
IdempotentSet build_f_set();
/// e_1..e_4 = (1 +- sigma^{012})(1 +- sigma^{034}) / 4 in the order
/// (+,+), (+,-), (-,-), (-,+).
IdempotentSet build_e_set();

struct IdempotentDefects {
  double idempotency = 0.0;    // max ||f_i^2 - f_i||
  double orthogonality = 0.0;  // max ||f_i f_j||, i != j
  double completeness = 0.0;   // ||sum f_i - 1||

  double worst() const;
};
IdempotentDefects idempotent_defects(const IdempotentSet& set);

/// (1 +- sigma^{40}) / 2.
Multivector energy_idempotent(Sign sign);
/// (1 +- sigma^3) / 2.
Multivector helicity_idempotent(Sign sign);

/// psi_bar phi((1 +- sigma^{40})/2): keeps the eigencolumns of energy +-E.
ComplexMatrix4 energy_project(const ComplexMatrix4& psi_bar, Sign sign);
/// psi_bar phi((1 +- sigma^3)/2).
ComplexMatrix4 helicity_project(const ComplexMatrix4& psi_bar, Sign sign);

struct DiagonalGenerators {
  Multivector lambda3;
  Multivector lambda8;
  Multivector lambda15;
};

/// lambda3 = f1 - f2, lambda8 = (f1 + f2 - 2 f3)/sqrt3,
/// lambda15 = (f1 + f2 + f3 - 3 f4)/sqrt6. Throws ContractViolation unless the
/// input is an orthogonal idempotent quadruple within 1e-10.
DiagonalGenerators idempotents_to_generators(const IdempotentSet& set);

/// Inverse of idempotents_to_generators:
///   f1 = 1/4 + l3/2 + l8/(2 sqrt3) + l15/(2 sqrt6)
///   f2 = 1/4 - l3/2 + l8/(2 sqrt3) + l15/(2 sqrt6)
///   f3 = 1/4 - l8/sqrt3 + l15/(2 sqrt6)
///   f4 = 1/4 - 3 l15/(2 sqrt6)
std::array<Multivector, 4> generators_to_idempotents(const DiagonalGenerators& g);
/// Same relations with matrix generators and the identity.
std::array<ComplexMatrix4, 4> generators_to_idempotents(const ComplexMatrix4& l3, const ComplexMatrix4& l8,
                                                        const ComplexMatrix4& l15);

/// lambda_k of the standard SU(4) generator table, k in 1..15.
const ComplexMatrix4& su4_generator(int k);

/// perm[i] = diagonal slot of the single unit entry of phi(elements[i]).
/// Throws ContractViolation unless every image is a diagonal rank-one 0/1 matrix.
std::array<int, 4> diagonalizing_permutation(const IdempotentSet& set);
/// (P M P^T)(i, j) = M(perm[i], perm[j]).
ComplexMatrix4 permute(const ComplexMatrix4& m, const std::array<int, 4>& perm);

struct Su4Finding {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed() const { return residual <= tolerance; }
};

struct Su4Report {
  std::vector<Su4Finding> findings;
  bool ok() const;
  double worst_ratio() const;
};

/// Self-adjointness and tracelessness of every lambda_k (exact), unitarity and
/// unit determinant of exp(i theta lambda_k) for theta in {0, 0.3, 1}
/// (1e-12), and the f-set / diagonal-generator relations after the
/// diagonalizing permutation (1e-14).
Su4Report verify_su4_generators();

}  // namespace g41
