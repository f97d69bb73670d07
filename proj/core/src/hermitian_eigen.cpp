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

#include "g41/hermitian_eigen.hpp"

#include <cmath>

#include "g41/errors.hpp"

namespace g41 {
namespace {

double frobenius(const ComplexMatrix4& m) {
  double s = 0.0;
  for (const Complex& z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double off_diagonal(const ComplexMatrix4& m) {
  double s = 0.0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (r != c) s += std::norm(m(r, c));
    }
  }
  return std::sqrt(s);
}

}  // namespace

EigenSystem eigendecompose(const ComplexMatrix4& input, const EigenOptions& options) {
  detail::require(is_self_adjoint(input, options.self_adjoint_tolerance), "eigendecompose: matrix is not self-adjoint");
  // Symmetrize so rounding in the input cannot leak into the rotations.
  ComplexMatrix4 a = 0.5 * (input + adjoint(input));
  ComplexMatrix4 v = ComplexMatrix4::identity();
  const double scale = frobenius(a);
  const double target = options.off_diagonal_tolerance * scale;

  EigenSystem out;
  for (int sweep = 0; off_diagonal(a) > target; ++sweep) {
    if (sweep == options.max_sweeps) throw NumericError("eigendecompose: no convergence within the sweep cap");
    out.sweeps = sweep + 1;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        // D removes the phase of a_pq, J is the real rotation zeroing it.
        const Complex phase = std::conj(apq) / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        ComplexMatrix4 u = ComplexMatrix4::identity();
        u(p, p) = c;
        u(p, q) = s;
        u(q, p) = -s * phase;
        u(q, q) = c * phase;
        a = adjoint(u) * a * u;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        v = v * u;
      }
    }
  }
  out.vectors = v;
  for (int k = 0; k < 4; ++k) out.values[k] = a(k, k).real();
  return out;
}

}  // namespace g41
