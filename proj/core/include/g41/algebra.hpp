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

#include "g41/multivector.hpp"

namespace g41 {

/// <a>_r. Throws ContractViolation unless 0 <= r <= 5.
Multivector grade_part(const Multivector& a, int r);

/// sum over grades r, s of <<a>_r <b>_s>_{|r-s|}.
Multivector inner(const Multivector& a, const Multivector& b);
/// sum over grades r, s of <<a>_r <b>_s>_{r+s}.
Multivector outer(const Multivector& a, const Multivector& b);
/// <ab>.
double scalar_product(const Multivector& a, const Multivector& b);
/// (ab - ba) / 2.
Multivector commutator(const Multivector& a, const Multivector& b);

/// Reverses the order of factors in every blade.
Multivector reverse(const Multivector& a);
/// Negates odd grades; sigma_alpha -> -sigma_alpha extended as an automorphism.
Multivector grade_involution(const Multivector& a);

/// |B| = <B B~>^(1/2). Throws DomainError when B B~ is not a non-negative
/// scalar within 1e-10 relative tolerance.
double norm(const Multivector& b);

/// True when only blades of grade r carry coefficients above tol.
bool is_homogeneous(const Multivector& a, int r, double tol = 0.0);

struct ExpOptions {
  double closed_form_tolerance = 1e-12;
  double series_tolerance = 1e-14;
  int max_terms = 64;
};

/// Multivector exponential.
///
/// The scalar part is factored out. For the remainder a, closed forms are used
/// whenever a^2 is a scalar s (cos/sin for s < 0, cosh/sinh for s > 0, 1 + a
/// for s = 0); otherwise a scaled power series is summed and squared back.
/// Throws NumericError if the series has not converged after max_terms.
Multivector mv_exp(const Multivector& a, const ExpOptions& options = {});

/// Rotor R = exp(-B/2) for a bivector B.
Multivector rotor(const Multivector& bivector);

/// R a R~ with R = exp(-B/2). Spatial B rotates, B containing sigma_0 boosts.
/// Throws ContractViolation if B is not a bivector.
Multivector rotate(const Multivector& a, const Multivector& bivector);

}  // namespace g41
