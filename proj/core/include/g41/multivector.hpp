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
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>

#include "g41/blade.hpp"

namespace g41 {

/// General element of G(4,1): 32 real coefficients indexed by blade mask.
///
/// Blades are stored in ascending mask order, so the scalar is slot 0 and the
/// pseudoscalar i = sigma_01234 is slot 31.
class Multivector {
 public:
  using Coefficients = std::array<double, kBlades>;

  constexpr Multivector() : coeffs_{} {}
  constexpr explicit Multivector(const Coefficients& coeffs) : coeffs_(coeffs) {}

  static constexpr Multivector scalar(double s) {
    Multivector m;
    m.coeffs_[0] = s;
    return m;
  }
  static constexpr Multivector blade(BladeIndex b, double c = 1.0) {
    Multivector m;
    m.coeffs_[b.mask()] = c;
    return m;
  }
  static constexpr Multivector pseudoscalar() { return blade(BladeIndex::pseudoscalar()); }
  /// sum_k components[k] * sigma_k.
  static Multivector vector(std::span<const double, kGenerators> components);
  static Multivector vector(std::initializer_list<double> components);

  constexpr double operator[](BladeIndex b) const { return coeffs_[b.mask()]; }
  constexpr double& operator[](BladeIndex b) { return coeffs_[b.mask()]; }
  constexpr double coeff(unsigned mask) const { return coeffs_[mask]; }
  constexpr double& coeff(unsigned mask) { return coeffs_[mask]; }
  constexpr const Coefficients& coeffs() const { return coeffs_; }

  constexpr double scalar_part() const { return coeffs_[0]; }

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(double s);
  Multivector& operator/=(double s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, double s) { return a /= s; }

  /// Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b);

  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  Coefficients coeffs_;
};

inline Multivector operator+(Multivector a, double s) {
  a.coeff(0) += s;
  return a;
}
inline Multivector operator+(double s, Multivector a) { return std::move(a) + s; }
inline Multivector operator-(Multivector a, double s) {
  a.coeff(0) -= s;
  return a;
}
inline Multivector operator-(double s, const Multivector& a) { return -a + s; }

/// Orthonormal generator sigma_alpha.
inline Multivector basis_vector(int alpha) { return Multivector::blade(BladeIndex::generator(alpha)); }

/// Reciprocal generator sigma^alpha: sigma^0 = -sigma_0, sigma^i = sigma_i.
inline Multivector reciprocal_vector(int alpha) {
  return Multivector::blade(BladeIndex::generator(alpha), alpha == 0 ? -1.0 : 1.0);
}

/// Product of reciprocal generators, e.g. up({4, 0}) = sigma^4 sigma^0 = sigma^{40}.
Multivector up(std::initializer_list<int> indices);

/// Maximum absolute coefficient.
double max_abs(const Multivector& a);
/// Euclidean length of the 32-coefficient vector (not a metric quantity).
double magnitude(const Multivector& a);
/// max_abs(a - b).
double distance(const Multivector& a, const Multivector& b);

}  // namespace g41
