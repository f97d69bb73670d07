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
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "g41/field.hpp"
#include "g41/multivector.hpp"

namespace g41 {

using Matrix5 = std::array<std::array<double, kGenerators>, kGenerators>;

Matrix5 identity5();

/// Refractive index tensor n^beta_alpha, stored as n[beta][alpha], possibly
/// position dependent.
struct RefractiveIndex {
  std::function<Matrix5(const Point5&)> tensor;

  static RefractiveIndex constant(const Matrix5& n);
  static RefractiveIndex identity();
};

/// Frame vectors g_alpha with metric, inverse metric and reciprocal frame.
struct Frame {
  std::array<Multivector, kGenerators> vectors;     // g_alpha
  Matrix5 metric{};                                 // g_{alpha beta}
  Matrix5 inverse_metric{};                         // g^{alpha beta}
  std::array<Multivector, kGenerators> reciprocal;  // g^alpha
  /// 2-norm condition number of the component matrix the frame was built from.
  double condition = 1.0;

  /// g_00 < 0 and g_ii > 0.
  bool signature_preserved() const;
};

/// Builds the frame from five vectors g_alpha. Throws DomainError when they are
/// (numerically) dependent, i.e. condition number above 1e12.
Frame frame_from_vectors(const std::array<Multivector, kGenerators>& vectors);
/// Same, starting from the reciprocal vectors g^alpha.
Frame frame_from_reciprocal(const std::array<Multivector, kGenerators>& reciprocal);

/// g_alpha = n^beta_alpha sigma_beta, g^alpha = g^{alpha gamma} g_gamma.
Frame build_frame(const RefractiveIndex& n, const Point5& x);

/// JSON object with n, metric, inverse_metric, condition, and the frame and
/// reciprocal vectors in multivector text form.
std::string frame_to_json(const Frame& frame, const Matrix5& n);

/// Largest violation of g_{ab} = g_a.g_b, g^{ab} g_{bc} = delta, g^a.g_b = delta,
/// g^{ab} = g^a.g^b and g_a = g_{ab} g^b.
double frame_duality_residual(const Frame& frame);

/// Scalar function of position with an optional analytic gradient.
struct ScalarFunction {
  std::function<double(const Point5&)> value;
  std::function<std::array<double, kGenerators>(const Point5&)> gradient;

  static ScalarFunction constant(double c);
  /// c + sum_alpha slope[alpha] x^alpha, with analytic gradient.
  static ScalarFunction linear(double c, const std::array<double, kGenerators>& slope);
};

/// d_alpha f; analytic when available and requested, else by the given
/// finite-difference mode (central with the default step for analytic requests
/// on functions without a gradient).
std::array<double, kGenerators> gradient(const ScalarFunction& f, const Point5& x, Differentiation mode);

/// Electromagnetic potential A = sigma^mu A_mu with charge and mass densities,
/// plus an optional local phase beta(x^mu) used by gauge transformations.
struct GaugeField {
  std::function<std::array<double, 4>(const Point5&)> potential;
  double charge = -1.0;
  double mass = 1.0;
  std::optional<ScalarFunction> phase;

  static GaugeField constant(const std::array<double, 4>& a, double charge, double mass);
  GaugeField with_phase(ScalarFunction beta) const;
};

/// Reciprocal frame g^mu = sigma^mu, g^4 = sigma^4 + (q/m) A_mu sigma^mu.
/// Throws ContractViolation when m = 0.
Frame em_frame(const GaugeField& field, const Point5& x);

/// D F = sum_alpha g^alpha d_alpha F.
Multivector covariant_derivative(const MultivectorField& f, const Frame& frame, const Point5& x, Differentiation mode);
/// Same with the electromagnetic frame evaluated at x.
Multivector covariant_derivative(const MultivectorField& f, const GaugeField& field, const Point5& x,
                                 Differentiation mode);

struct GaugeTransformed {
  MultivectorField psi;
  GaugeField field;
};

/// Psi' = Psi exp(i beta), A'_mu = A_mu - (1/q) d_mu beta, using field.phase as
/// beta. The transformed field carries no phase. Throws ContractViolation when
/// the phase is missing or q = 0.
GaugeTransformed gauge_transform(const MultivectorField& psi, const GaugeField& field,
                                 Differentiation gradient_mode = Differentiation::analytic());

/// max over points of ||D'Psi' - (D Psi) exp(i beta)|| for an explicit
/// transformed pair; beta is taken from field.phase.
double gauge_covariance_residual(const MultivectorField& psi, const GaugeField& field,
                                 const GaugeTransformed& transformed, std::span<const Point5> points,
                                 Differentiation mode);
/// Convenience: transforms with gauge_transform first.
double gauge_covariance_residual(const MultivectorField& psi, const GaugeField& field, std::span<const Point5> points,
                                 Differentiation mode);

/// max over points of ||nabla(Psi e^{i beta}) - (nabla Psi) e^{i beta} - i (sigma^mu d_mu beta) Psi e^{i beta}||.
/// nabla Psi' uses `mode`; nabla Psi and d beta are analytic when available.
double phase_gradient_identity_residual(const MultivectorField& psi, const ScalarFunction& beta,
                                        std::span<const Point5> points, Differentiation mode);

}  // namespace g41
