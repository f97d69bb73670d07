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

#include "g41/algebra.hpp"

#include <cmath>
#include <cstdlib>

#include "g41/errors.hpp"

namespace g41 {
namespace {

// Sum over blade pairs whose product lands on the grade chosen by `keep`.
template <typename Keep>
Multivector graded_product(const Multivector& a, const Multivector& b, Keep keep) {
  Multivector out;
  for (unsigned i = 0; i < kBlades; ++i) {
    const double ai = a.coeff(i);
    if (ai == 0.0) continue;
    const BladeIndex bi(i);
    for (unsigned j = 0; j < kBlades; ++j) {
      const double bj = b.coeff(j);
      if (bj == 0.0) continue;
      const BladeIndex bj_blade(j);
      const auto [sign, result] = blade_product(bi, bj_blade);
      if (!keep(bi.grade(), bj_blade.grade(), result.grade())) continue;
      out.coeff(result.mask()) += sign * ai * bj;
    }
  }
  return out;
}

}  // namespace

Multivector grade_part(const Multivector& a, int r) {
  detail::require(r >= 0 && r <= kGenerators, "grade_part: grade must lie in [0, 5]");
  Multivector out;
  for (unsigned i = 0; i < kBlades; ++i) {
    if (BladeIndex(i).grade() == r) out.coeff(i) = a.coeff(i);
  }
  return out;
}

Multivector inner(const Multivector& a, const Multivector& b) {
  return graded_product(a, b, [](int r, int s, int g) { return g == std::abs(r - s); });
}

Multivector outer(const Multivector& a, const Multivector& b) {
  return graded_product(a, b, [](int r, int s, int g) { return g == r + s; });
}

double scalar_product(const Multivector& a, const Multivector& b) {
  double s = 0.0;
  for (unsigned i = 0; i < kBlades; ++i) {
    // Only identical blades multiply to a scalar.
    s += blade_product(BladeIndex(i), BladeIndex(i)).sign * a.coeff(i) * b.coeff(i);
  }
  return s;
}

Multivector commutator(const Multivector& a, const Multivector& b) { return 0.5 * (a * b - b * a); }

Multivector reverse(const Multivector& a) {
  Multivector out;
  for (unsigned i = 0; i < kBlades; ++i) out.coeff(i) = reversion_sign(BladeIndex(i).grade()) * a.coeff(i);
  return out;
}

Multivector grade_involution(const Multivector& a) {
  Multivector out;
  for (unsigned i = 0; i < kBlades; ++i) out.coeff(i) = (BladeIndex(i).grade() & 1) ? -a.coeff(i) : a.coeff(i);
  return out;
}

bool is_homogeneous(const Multivector& a, int r, double tol) {
  for (unsigned i = 0; i < kBlades; ++i) {
    if (BladeIndex(i).grade() != r && std::abs(a.coeff(i)) > tol) return false;
  }
  return true;
}

double norm(const Multivector& b) {
  const Multivector bb = b * reverse(b);
  const double s = bb.scalar_part();
  const double residue = max_abs(bb - s);
  if (residue > 1e-10 * std::max(1.0, std::abs(s))) {
    throw DomainError("norm: B B~ has a non-scalar part");
  }
  if (s < 0.0) throw DomainError("norm: B B~ is negative");
  return std::sqrt(s);
}

Multivector mv_exp(const Multivector& a, const ExpOptions& options) {
  const double scale = std::exp(a.scalar_part());
  Multivector x = a;
  x.coeff(0) = 0.0;
  const double size = magnitude(x);
  if (size == 0.0) return Multivector::scalar(scale);

  const Multivector sq = x * x;
  const double s = sq.scalar_part();
  const double residue = max_abs(sq - s);
  if (residue <= options.closed_form_tolerance * magnitude(sq)) {
    if (std::abs(s) <= options.closed_form_tolerance * size * size) return scale * (1.0 + x);
    const double theta = std::sqrt(std::abs(s));
    if (s < 0.0) return scale * (std::cos(theta) + x * (std::sin(theta) / theta));
    return scale * (std::cosh(theta) + x * (std::sinh(theta) / theta));
  }

  // Scale into the unit ball, sum the series, square back.
  const int squarings = size > 1.0 ? static_cast<int>(std::ceil(std::log2(size))) : 0;
  const Multivector y = x / std::ldexp(1.0, squarings);
  Multivector sum = Multivector::scalar(1.0);
  Multivector term = Multivector::scalar(1.0);
  bool converged = false;
  for (int n = 1; n < options.max_terms; ++n) {
    term = term * y / static_cast<double>(n);
    sum += term;
    if (magnitude(term) <= options.series_tolerance * magnitude(sum)) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NumericError("mv_exp: power series did not converge");
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return scale * sum;
}

Multivector rotor(const Multivector& bivector) {
  detail::require(is_homogeneous(bivector, 2, 1e-14 * max_abs(bivector)), "rotor: B must be a bivector");
  return mv_exp(-0.5 * bivector);
}

Multivector rotate(const Multivector& a, const Multivector& bivector) {
  const Multivector r = rotor(bivector);
  return r * a * reverse(r);
}

}  // namespace g41
