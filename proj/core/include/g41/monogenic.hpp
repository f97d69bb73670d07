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
#include <vector>

#include "g41/field.hpp"
#include "g41/multivector.hpp"

namespace g41 {

enum class EnergySign { positive, negative };

/// (E, p_1, p_2, p_3, m) satisfying E^2 - |p|^2 - m^2 = 0.
class MomentumVector {
 public:
  /// E = +-sqrt(|p|^2 + m^2). Throws ContractViolation if m < 0.
  static MomentumVector from_momentum(const std::array<double, 3>& p, double m,
                                      EnergySign sign = EnergySign::positive);
  /// Explicit components; throws ContractViolation unless null within
  /// 1e-12 * max(1, E^2) and m >= 0.
  static MomentumVector from_components(double energy, const std::array<double, 3>& p, double m);

  double energy() const { return energy_; }
  const std::array<double, 3>& momentum() const { return p_; }
  double mass() const { return m_; }
  double momentum_norm() const;

  /// E^2 - |p|^2 - m^2.
  double null_defect() const;
  /// E sigma_0 + p_m sigma_m + m sigma_4.
  Multivector null_vector() const;
  /// Phase coefficients (k_0, k_m, k_4) = (-E, p_m, m).
  std::array<double, kGenerators> covector() const;

 private:
  MomentumVector(double e, const std::array<double, 3>& p, double m) : energy_(e), p_(p), m_(m) {}
  double energy_;
  std::array<double, 3> p_;
  double m_;
};

/// psi_0 = E + p_m sigma^{m0} + m sigma^{40} (= u sigma^0 with u the null vector).
Multivector plane_wave_amplitude(const MomentumVector& k);

/// Psi(x) = psi_0 exp(i(-E t + p_m x^m + m x^4)), with analytic derivative.
MultivectorField plane_wave(const MomentumVector& k);

/// Max over points of magnitude(nabla F).
double monogenic_residual(const MultivectorField& field, std::span<const Point5> points, Differentiation mode,
                          Axes axes = Axes::all);

/// Polynomial in (x^1, x^2, x^3) with multivector coefficients.
class Polynomial3 {
 public:
  struct Term {
    std::array<int, 3> powers;
    Multivector coeff;
  };

  Polynomial3() = default;
  explicit Polynomial3(std::vector<Term> terms) : terms_(std::move(terms)) {}

  const std::vector<Term>& terms() const { return terms_; }
  Multivector value(const Point5& x) const;
  /// Exact derivative; zero along x^0 and x^4.
  Multivector partial(const Point5& x, int axis) const;
  MultivectorField field() const;

 private:
  std::vector<Term> terms_;
};

struct MonogenicPolynomial {
  Polynomial3 polynomial;
  /// Values only carry scalar and sigma_12 parts.
  bool scalar_plus_e12 = false;
};

struct MonogenicBasis {
  int degree = 0;
  /// Rank of the assembled spatial-derivative matrix.
  int rank = 0;
  /// Fields with scalar+sigma_12 values come first.
  std::vector<MonogenicPolynomial> fields;
  int flagged_count() const;
};

/// Basis of homogeneous polynomials of the given degree with values in the
/// even subalgebra of G(3) (span{1, e12, e13, e23}) annihilated by
/// sigma^m d_m. Degree must be 0..3.
MonogenicBasis monogenic_polynomials_3d(int degree);

/// Psi = psi_r(x^m) psi_t(x^0, x^4) with psi_t a rest-frame wave of energy E
/// and mass m (E^2 = m^2). psi_r must commute with sigma_0 and sigma_4; this is
/// checked at a fixed set of sample points and violations throw
/// ContractViolation.
MultivectorField separable_wavepacket(const MultivectorField& spatial_factor, double energy, double mass);

}  // namespace g41
