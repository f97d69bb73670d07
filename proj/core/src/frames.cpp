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

#include "g41/frames.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <json.hpp>
#include <string>

#include "g41/algebra.hpp"
#include "g41/errors.hpp"
#include "g41/multivector_io.hpp"

namespace g41 {
namespace {

using Mat5 = Eigen::Matrix<double, kGenerators, kGenerators>;

Mat5 to_eigen(const Matrix5& m) {
  Mat5 out;
  for (int r = 0; r < kGenerators; ++r) {
    for (int c = 0; c < kGenerators; ++c) out(r, c) = m[r][c];
  }
  return out;
}

Matrix5 from_eigen(const Mat5& m) {
  Matrix5 out{};
  for (int r = 0; r < kGenerators; ++r) {
    for (int c = 0; c < kGenerators; ++c) out[r][c] = m(r, c);
  }
  return out;
}

// Column alpha holds the sigma_beta components of vectors[alpha].
Mat5 components(const std::array<Multivector, kGenerators>& vectors) {
  Mat5 c;
  for (int alpha = 0; alpha < kGenerators; ++alpha) {
    detail::require(is_homogeneous(vectors[alpha], 1), "frame vectors must be grade-1 multivectors");
    for (int beta = 0; beta < kGenerators; ++beta) c(beta, alpha) = vectors[alpha].coeff(1u << beta);
  }
  return c;
}

double condition_number(const Mat5& m) {
  Eigen::JacobiSVD<Mat5> svd(m);
  const auto& s = svd.singularValues();
  const double smallest = s(kGenerators - 1);
  if (smallest == 0.0) return INFINITY;
  return s(0) / smallest;
}

void require_well_conditioned(double condition) {
  if (!(condition <= 1e12)) {
    throw DomainError("frame is singular (condition number estimate " + std::to_string(condition) + ")");
  }
}

Matrix5 gram(const std::array<Multivector, kGenerators>& v) {
  Matrix5 g{};
  for (int a = 0; a < kGenerators; ++a) {
    for (int b = 0; b < kGenerators; ++b) g[a][b] = scalar_product(v[a], v[b]);
  }
  return g;
}

std::array<Multivector, kGenerators> raise(const Matrix5& m, const std::array<Multivector, kGenerators>& v) {
  std::array<Multivector, kGenerators> out;
  for (int a = 0; a < kGenerators; ++a) {
    for (int c = 0; c < kGenerators; ++c) out[a] += m[a][c] * v[c];
  }
  return out;
}

Multivector phase_factor(double beta) { return std::cos(beta) + std::sin(beta) * Multivector::pseudoscalar(); }

}  // namespace

Matrix5 identity5() {
  Matrix5 m{};
  for (int k = 0; k < kGenerators; ++k) m[k][k] = 1.0;
  return m;
}

RefractiveIndex RefractiveIndex::constant(const Matrix5& n) {
  return {[n](const Point5&) { return n; }};
}

RefractiveIndex RefractiveIndex::identity() { return constant(identity5()); }

bool Frame::signature_preserved() const {
  if (!(metric[0][0] < 0.0)) return false;
  for (int i = 1; i < kGenerators; ++i) {
    if (!(metric[i][i] > 0.0)) return false;
  }
  return true;
}

Frame frame_from_vectors(const std::array<Multivector, kGenerators>& vectors) {
  Frame f;
  f.vectors = vectors;
  f.condition = condition_number(components(vectors));
  require_well_conditioned(f.condition);
  f.metric = gram(vectors);
  f.inverse_metric = from_eigen(to_eigen(f.metric).inverse());
  f.reciprocal = raise(f.inverse_metric, vectors);
  return f;
}

Frame frame_from_reciprocal(const std::array<Multivector, kGenerators>& reciprocal) {
  Frame f;
  f.reciprocal = reciprocal;
  f.condition = condition_number(components(reciprocal));
  require_well_conditioned(f.condition);
  f.inverse_metric = gram(reciprocal);
  f.metric = from_eigen(to_eigen(f.inverse_metric).inverse());
  f.vectors = raise(f.metric, reciprocal);
  return f;
}

Frame build_frame(const RefractiveIndex& n, const Point5& x) {
  const Matrix5 tensor = n.tensor(x);
  std::array<Multivector, kGenerators> g;
  for (int alpha = 0; alpha < kGenerators; ++alpha) {
    for (int beta = 0; beta < kGenerators; ++beta) g[alpha] += tensor[beta][alpha] * basis_vector(beta);
  }
  return frame_from_vectors(g);
}

std::string frame_to_json(const Frame& frame, const Matrix5& n) {
  using nlohmann::ordered_json;
  auto matrix = [](const Matrix5& m) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : m) rows.push_back(row);
    return rows;
  };
  auto vectors = [](const std::array<Multivector, kGenerators>& v) {
    ordered_json list = ordered_json::array();
    for (const auto& g : v) list.push_back(to_string(g));
    return list;
  };
  ordered_json doc;
  doc["n"] = matrix(n);
  doc["metric"] = matrix(frame.metric);
  doc["inverse_metric"] = matrix(frame.inverse_metric);
  doc["vectors"] = vectors(frame.vectors);
  doc["reciprocal"] = vectors(frame.reciprocal);
  doc["condition"] = frame.condition;
  doc["signature_preserved"] = frame.signature_preserved();
  return doc.dump(2) + "\n";
}

double frame_duality_residual(const Frame& f) {
  double worst = 0.0;
  auto track = [&](double r) { worst = std::max(worst, std::abs(r)); };
  for (int a = 0; a < kGenerators; ++a) {
    Multivector lowered;
    for (int b = 0; b < kGenerators; ++b) {
      const double delta = a == b ? 1.0 : 0.0;
      track(f.metric[a][b] - scalar_product(f.vectors[a], f.vectors[b]));
      track(f.inverse_metric[a][b] - scalar_product(f.reciprocal[a], f.reciprocal[b]));
      track(scalar_product(f.reciprocal[a], f.vectors[b]) - delta);
      double contraction = 0.0;
      for (int c = 0; c < kGenerators; ++c) contraction += f.inverse_metric[a][c] * f.metric[b][c];
      track(contraction - delta);
      lowered += f.metric[a][b] * f.reciprocal[b];
    }
    track(max_abs(lowered - f.vectors[a]));
  }
  return worst;
}

ScalarFunction ScalarFunction::constant(double c) {
  return {[c](const Point5&) { return c; }, [](const Point5&) { return std::array<double, kGenerators>{}; }};
}

ScalarFunction ScalarFunction::linear(double c, const std::array<double, kGenerators>& slope) {
  return {[c, slope](const Point5& x) {
            double v = c;
            for (int a = 0; a < kGenerators; ++a) v += slope[a] * x[a];
            return v;
          },
          [slope](const Point5&) { return slope; }};
}

std::array<double, kGenerators> gradient(const ScalarFunction& f, const Point5& x, Differentiation mode) {
  if (mode.kind() == Differentiation::Kind::analytic) {
    if (f.gradient) return f.gradient(x);
    mode = Differentiation::central(kDefaultStep);
  }
  auto central = [&](int axis, double h) { return (f.value(x.shifted(axis, h)) - f.value(x.shifted(axis, -h))) / (2.0 * h); };
  std::array<double, kGenerators> g{};
  for (int a = 0; a < kGenerators; ++a) {
    const double h = mode.step();
    g[a] = mode.kind() == Differentiation::Kind::central ? central(a, h) : (4.0 * central(a, 0.5 * h) - central(a, h)) / 3.0;
    if (!std::isfinite(g[a])) throw NumericError("gradient: non-finite value");
  }
  return g;
}

GaugeField GaugeField::constant(const std::array<double, 4>& a, double charge, double mass) {
  GaugeField f;
  f.potential = [a](const Point5&) { return a; };
  f.charge = charge;
  f.mass = mass;
  return f;
}

GaugeField GaugeField::with_phase(ScalarFunction beta) const {
  GaugeField f = *this;
  f.phase = std::move(beta);
  return f;
}

Frame em_frame(const GaugeField& field, const Point5& x) {
  detail::require(field.mass != 0.0, "em_frame: mass density must be non-zero");
  const auto a = field.potential(x);
  const double ratio = field.charge / field.mass;
  std::array<Multivector, kGenerators> reciprocal;
  for (int alpha = 0; alpha < kGenerators; ++alpha) reciprocal[alpha] = reciprocal_vector(alpha);
  for (int mu = 0; mu < 4; ++mu) reciprocal[4] += ratio * a[mu] * reciprocal_vector(mu);
  return frame_from_reciprocal(reciprocal);
}

Multivector covariant_derivative(const MultivectorField& f, const Frame& frame, const Point5& x, Differentiation mode) {
  Multivector out;
  for (int alpha = 0; alpha < kGenerators; ++alpha) out += frame.reciprocal[alpha] * partial_derivative(f, x, alpha, mode);
  return out;
}

Multivector covariant_derivative(const MultivectorField& f, const GaugeField& field, const Point5& x,
                                 Differentiation mode) {
  return covariant_derivative(f, em_frame(field, x), x, mode);
}

GaugeTransformed gauge_transform(const MultivectorField& psi, const GaugeField& field, Differentiation gradient_mode) {
  detail::require(field.phase.has_value(), "gauge_transform: field has no phase function");
  detail::require(field.charge != 0.0, "gauge_transform: charge must be non-zero");
  const ScalarFunction beta = *field.phase;
  const Multivector i = Multivector::pseudoscalar();

  GaugeTransformed out;
  out.psi.value = [psi, beta](const Point5& x) { return psi(x) * phase_factor(beta.value(x)); };
  if (psi.has_analytic_derivative()) {
    out.psi.partial = [psi, beta, i, gradient_mode](const Point5& x, int axis) {
      const Multivector rotated = psi(x) * phase_factor(beta.value(x));
      const double d_beta = gradient(beta, x, gradient_mode)[axis];
      return psi.partial(x, axis) * phase_factor(beta.value(x)) + d_beta * (i * rotated);
    };
  }
  out.field = field;
  out.field.phase.reset();
  const double q = field.charge;
  out.field.potential = [potential = field.potential, beta, q, gradient_mode](const Point5& x) {
    auto a = potential(x);
    const auto g = gradient(beta, x, gradient_mode);
    for (int mu = 0; mu < 4; ++mu) a[mu] -= g[mu] / q;
    return a;
  };
  return out;
}

double gauge_covariance_residual(const MultivectorField& psi, const GaugeField& field,
                                 const GaugeTransformed& transformed, std::span<const Point5> points,
                                 Differentiation mode) {
  detail::require(field.phase.has_value(), "gauge_covariance_residual: field has no phase function");
  double worst = 0.0;
  for (const Point5& x : points) {
    const Multivector lhs = covariant_derivative(transformed.psi, transformed.field, x, mode);
    const Multivector rhs = covariant_derivative(psi, field, x, mode) * phase_factor(field.phase->value(x));
    worst = std::max(worst, magnitude(lhs - rhs));
  }
  return worst;
}

double gauge_covariance_residual(const MultivectorField& psi, const GaugeField& field, std::span<const Point5> points,
                                 Differentiation mode) {
  return gauge_covariance_residual(psi, field, gauge_transform(psi, field), points, mode);
}

double phase_gradient_identity_residual(const MultivectorField& psi, const ScalarFunction& beta,
                                        std::span<const Point5> points, Differentiation mode) {
  const GaugeField carrier = GaugeField::constant({0.0, 0.0, 0.0, 0.0}, 1.0, 1.0).with_phase(beta);
  const MultivectorField rotated = gauge_transform(psi, carrier).psi;
  const Differentiation plain = psi.has_analytic_derivative() ? Differentiation::analytic() : mode;
  const Multivector i = Multivector::pseudoscalar();
  double worst = 0.0;
  for (const Point5& x : points) {
    const auto g = gradient(beta, x, Differentiation::analytic());
    Multivector grad_beta;
    for (int mu = 0; mu < 4; ++mu) grad_beta += g[mu] * reciprocal_vector(mu);
    const Multivector phase = phase_factor(beta.value(x));
    const Multivector r = vector_derivative(rotated, x, mode) - vector_derivative(psi, x, plain) * phase -
                          i * grad_beta * psi(x) * phase;
    worst = std::max(worst, magnitude(r));
  }
  return worst;
}

}  // namespace g41
