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

#include "g41/complex_matrix.hpp"

namespace g41 {

struct EigenSystem {
  /// Unitary; column j is the eigenvector for values[j].
  ComplexMatrix4 vectors;
  std::array<double, 4> values{};
  int sweeps = 0;
};

struct EigenOptions {
  double self_adjoint_tolerance = 1e-10;
  /// Stop when the off-diagonal Frobenius mass drops below this times ||A||_F.
  double off_diagonal_tolerance = 1e-12;
  int max_sweeps = 100;
};

/// Cyclic complex Jacobi eigensolver for self-adjoint 4x4 matrices.
///
/// Pivots are visited in the fixed order (0,1), (0,2), ..., (2,3), so the
/// output is a deterministic function of the input. Throws ContractViolation
/// for non-self-adjoint input and NumericError when the sweep cap is hit.
EigenSystem eigendecompose(const ComplexMatrix4& a, const EigenOptions& options = {});

}  // namespace g41
