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

#include "g41/field.hpp"

#include <cmath>
#include <utility>

#include "g41/errors.hpp"

namespace g41 {
namespace {

void require_finite(const Multivector& m, const char* what) {
  for (double c : m.coeffs()) {
    if (!std::isfinite(c)) throw NumericError(std::string(what) + ": non-finite field value");
  }
}

Multivector central_first(const MultivectorField& f, const Point5& x, int axis, double h) {
  return (f(x.shifted(axis, h)) - f(x.shifted(axis, -h))) / (2.0 * h);
}

Multivector central_second(const MultivectorField& f, const Point5& x, const Multivector& center, int axis,
                           double h) {
  return (f(x.shifted(axis, h)) - 2.0 * center + f(x.shifted(axis, -h))) / (h * h);
}

Multivector second_difference_laplacian(const MultivectorField& f, const Point5& x, const Multivector& center,
                                        double h) {
  Multivector out;
  for (int alpha = 0; alpha < kGenerators; ++alpha) {
    const Multivector d2 = central_second(f, x, center, alpha, h);
    if (alpha == 0) {
      out -= d2;
    } else {
      out += d2;
    }
  }
  return out;
}

}  // namespace

Differentiation Differentiation::central(double h) {
  detail::require(h > 0.0 && std::isfinite(h), "finite-difference step must be positive");
  return Differentiation(Kind::central, h);
}

Differentiation Differentiation::richardson(double h) {
  detail::require(h > 0.0 && std::isfinite(h), "finite-difference step must be positive");
  return Differentiation(Kind::richardson, h);
}

Multivector partial_derivative(const MultivectorField& field, const Point5& x, int axis, Differentiation mode) {
  detail::require(axis >= 0 && axis < kGenerators, "axis must lie in [0, 4]");
  Multivector d;
  switch (mode.kind()) {
    case Differentiation::Kind::analytic:
      detail::require(field.has_analytic_derivative(), "field has no analytic derivative");
      d = field.partial(x, axis);
      break;
    case Differentiation::Kind::central:
      d = central_first(field, x, axis, mode.step());
      break;
    case Differentiation::Kind::richardson: {
      const double h = mode.step();
      d = (4.0 * central_first(field, x, axis, 0.5 * h) - central_first(field, x, axis, h)) / 3.0;
      break;
    }
  }
  require_finite(d, "partial_derivative");
  return d;
}

Multivector vector_derivative(const MultivectorField& field, const Point5& x, Differentiation mode, Axes axes) {
  Multivector out;
  for (int alpha = 0; alpha < kGenerators; ++alpha) {
    if (!has_axis(axes, alpha)) continue;
    out += reciprocal_vector(alpha) * partial_derivative(field, x, alpha, mode);
  }
  return out;
}

Multivector laplacian(const MultivectorField& field, const Point5& x, Differentiation mode) {
  detail::require(mode.kind() != Differentiation::Kind::analytic, "laplacian needs a finite-difference mode");
  const Multivector center = field(x);
  const double h = mode.step();
  Multivector out = second_difference_laplacian(field, x, center, h);
  if (mode.kind() == Differentiation::Kind::richardson) {
    out = (4.0 * second_difference_laplacian(field, x, center, 0.5 * h) - out) / 3.0;
  }
  require_finite(out, "laplacian");
  return out;
}

MultivectorField constant_field(const Multivector& value) {
  return {[value](const Point5&) { return value; }, [](const Point5&, int) { return Multivector(); }};
}

MultivectorField harmonic_field(const Multivector& amplitude, const std::array<double, kGenerators>& covector) {
  const Multivector i = Multivector::pseudoscalar();
  auto value = [amplitude, covector, i](const Point5& x) {
    double phase = 0.0;
    for (int alpha = 0; alpha < kGenerators; ++alpha) phase += covector[alpha] * x[alpha];
    return amplitude * (std::cos(phase) + std::sin(phase) * i);
  };
  auto partial = [value, covector, i](const Point5& x, int axis) { return covector[axis] * (i * value(x)); };
  return {value, partial};
}

MultivectorField product_field(MultivectorField a, MultivectorField b) {
  MultivectorField out;
  out.value = [a, b](const Point5& x) { return a(x) * b(x); };
  if (a.has_analytic_derivative() && b.has_analytic_derivative()) {
    out.partial = [a, b](const Point5& x, int axis) {
      return a.partial(x, axis) * b(x) + a(x) * b.partial(x, axis);
    };
  }
  return out;
}

}  // namespace g41
