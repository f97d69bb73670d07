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
#include <functional>

#include "g41/multivector.hpp"

namespace g41 {

/// Coordinates (x^0 = t, x^1..x^3, x^4). Unitless.
struct Point5 {
  std::array<double, kGenerators> x{};

  constexpr Point5() = default;
  constexpr Point5(double t, double x1, double x2, double x3, double x4) : x{t, x1, x2, x3, x4} {}

  constexpr double operator[](int alpha) const { return x[alpha]; }
  constexpr double& operator[](int alpha) { return x[alpha]; }

  /// Copy displaced by `delta` along one axis.
  constexpr Point5 shifted(int axis, double delta) const {
    Point5 p = *this;
    p.x[axis] += delta;
    return p;
  }
};

/// Multivector-valued field with an optional analytic partial derivative.
struct MultivectorField {
  std::function<Multivector(const Point5&)> value;
  /// d/dx^axis; empty when only numerical differentiation is available.
  std::function<Multivector(const Point5&, int)> partial;

  Multivector operator()(const Point5& x) const { return value(x); }
  bool has_analytic_derivative() const { return static_cast<bool>(partial); }
};

/// How partial derivatives are obtained.
class Differentiation {
 public:
  enum class Kind { analytic, central, richardson };

  static constexpr Differentiation analytic() { return Differentiation(Kind::analytic, 0.0); }
  /// Second-order central differences with step h.
  static Differentiation central(double h);
  /// Central differences at h and h/2 combined to cancel the h^2 term.
  static Differentiation richardson(double h);

  constexpr Kind kind() const { return kind_; }
  constexpr double step() const { return step_; }

 private:
  constexpr Differentiation(Kind kind, double step) : kind_(kind), step_(step) {}
  Kind kind_;
  double step_;
};

inline constexpr double kDefaultStep = 1e-3;

/// Bit set of coordinate axes a derivative sums over.
enum class Axes : unsigned {
  all = 0b11111,        // alpha in 0..4
  spacetime = 0b01111,  // mu in 0..3
  fourspace = 0b11110,  // i in 1..4
  spatial = 0b01110,    // m in 1..3
};

constexpr bool has_axis(Axes axes, int alpha) { return (static_cast<unsigned>(axes) >> alpha) & 1u; }

/// d F / d x^axis at x. Throws NumericError on non-finite values and
/// ContractViolation when analytic mode is requested without a derivative.
Multivector partial_derivative(const MultivectorField& field, const Point5& x, int axis, Differentiation mode);

/// sum_alpha sigma^alpha d_alpha F over the selected axes, with
/// sigma^0 = -sigma_0 (left multiplication).
Multivector vector_derivative(const MultivectorField& field, const Point5& x, Differentiation mode,
                              Axes axes = Axes::all);

/// -d^2F/dt^2 + sum_i d^2F/(dx^i)^2 by second central differences. Richardson
/// mode combines steps h and h/2; central uses h alone.
Multivector laplacian(const MultivectorField& field, const Point5& x, Differentiation mode);

/// Field that is constant in space.
MultivectorField constant_field(const Multivector& value);

/// amplitude * exp(i k_alpha x^alpha), where i is the pseudoscalar; carries the
/// analytic derivative i k_alpha Psi.
MultivectorField harmonic_field(const Multivector& amplitude, const std::array<double, kGenerators>& covector);

/// Pointwise product a(x) b(x); analytic when both factors are.
MultivectorField product_field(MultivectorField a, MultivectorField b);

}  // namespace g41
