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

#include "g41/monogenic.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "g41/algebra.hpp"
#include "g41/errors.hpp"

namespace g41 {
namespace {

constexpr std::array<unsigned, 4> kEvenBlades{0b00000, 0b00110, 0b01010, 0b01100};  // 1, e12, e13, e23
constexpr std::array<unsigned, 4> kOddBlades{0b00010, 0b00100, 0b01000, 0b01110};   // e1, e2, e3, e123
constexpr unsigned kE12 = 0b00110;

std::vector<std::array<int, 3>> monomials(int degree) {
  std::vector<std::array<int, 3>> out;
  for (int a = degree; a >= 0; --a) {
    for (int b = degree - a; b >= 0; --b) out.push_back({a, b, degree - a - b});
  }
  return out;
}

std::size_t index_of(const std::vector<std::array<int, 3>>& list, const std::array<int, 3>& m) {
  return static_cast<std::size_t>(std::find(list.begin(), list.end(), m) - list.begin());
}

int odd_slot(unsigned mask) {
  for (int k = 0; k < 4; ++k) {
    if (kOddBlades[k] == mask) return k;
  }
  throw std::logic_error("spatial derivative left the odd subspace");
}

Eigen::MatrixXd kernel(const Eigen::MatrixXd& m, int* rank) {
  if (m.rows() == 0) {
    if (rank) *rank = 0;
    return Eigen::MatrixXd::Identity(m.cols(), m.cols());
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-10);
  if (rank) *rank = static_cast<int>(lu.rank());
  if (lu.rank() == m.cols()) return Eigen::MatrixXd(m.cols(), 0);
  return lu.kernel();
}

Polynomial3 to_polynomial(const Eigen::VectorXd& v, const std::vector<std::array<int, 3>>& terms) {
  const double scale = v.cwiseAbs().maxCoeff();
  std::vector<Polynomial3::Term> out;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    Multivector c;
    for (std::size_t e = 0; e < 4; ++e) {
      double value = v(static_cast<Eigen::Index>(j * 4 + e)) / scale;
      if (std::abs(value) < 1e-13) value = 0.0;
      c.coeff(kEvenBlades[e]) = value;
    }
    if (max_abs(c) > 0.0) out.push_back({terms[j], c});
  }
  return Polynomial3(std::move(out));
}

bool only_scalar_and_e12(const Polynomial3& p) {
  for (const auto& term : p.terms()) {
    for (unsigned i = 0; i < kBlades; ++i) {
      if (i != 0 && i != kE12 && std::abs(term.coeff.coeff(i)) > 1e-12) return false;
    }
  }
  return true;
}

double integer_power(double x, int n) {
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= x;
  return r;
}

}  // namespace

MomentumVector MomentumVector::from_momentum(const std::array<double, 3>& p, double m, EnergySign sign) {
  detail::require(m >= 0.0 && std::isfinite(m), "rest mass must be non-negative");
  const double e = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + m * m);
  return MomentumVector(sign == EnergySign::positive ? e : -e, p, m);
}

MomentumVector MomentumVector::from_components(double energy, const std::array<double, 3>& p, double m) {
  detail::require(m >= 0.0, "rest mass must be non-negative");
  const MomentumVector k(energy, p, m);
  detail::require(std::abs(k.null_defect()) <= 1e-12 * std::max(1.0, energy * energy),
                  "momentum is not null: E^2 - p^2 - m^2 = " + std::to_string(k.null_defect()));
  return k;
}

double MomentumVector::momentum_norm() const { return std::sqrt(p_[0] * p_[0] + p_[1] * p_[1] + p_[2] * p_[2]); }

double MomentumVector::null_defect() const {
  return energy_ * energy_ - p_[0] * p_[0] - p_[1] * p_[1] - p_[2] * p_[2] - m_ * m_;
}

Multivector MomentumVector::null_vector() const { return Multivector::vector({energy_, p_[0], p_[1], p_[2], m_}); }

std::array<double, kGenerators> MomentumVector::covector() const { return {-energy_, p_[0], p_[1], p_[2], m_}; }

Multivector plane_wave_amplitude(const MomentumVector& k) {
  Multivector psi0 = Multivector::scalar(k.energy());
  for (int m = 1; m <= 3; ++m) psi0 += k.momentum()[m - 1] * up({m, 0});
  psi0 += k.mass() * up({4, 0});
  return psi0;
}

MultivectorField plane_wave(const MomentumVector& k) { return harmonic_field(plane_wave_amplitude(k), k.covector()); }

double monogenic_residual(const MultivectorField& field, std::span<const Point5> points, Differentiation mode,
                          Axes axes) {
  double worst = 0.0;
  for (const Point5& x : points) worst = std::max(worst, magnitude(vector_derivative(field, x, mode, axes)));
  return worst;
}

Multivector Polynomial3::value(const Point5& x) const {
  Multivector out;
  for (const auto& [powers, coeff] : terms_) {
    const double mono = integer_power(x[1], powers[0]) * integer_power(x[2], powers[1]) *
                        integer_power(x[3], powers[2]);
    out += mono * coeff;
  }
  return out;
}

Multivector Polynomial3::partial(const Point5& x, int axis) const {
  Multivector out;
  if (axis < 1 || axis > 3) return out;
  for (const auto& [powers, coeff] : terms_) {
    const int n = powers[axis - 1];
    if (n == 0) continue;
    std::array<int, 3> lowered = powers;
    --lowered[axis - 1];
    const double mono = n * integer_power(x[1], lowered[0]) * integer_power(x[2], lowered[1]) *
                        integer_power(x[3], lowered[2]);
    out += mono * coeff;
  }
  return out;
}

MultivectorField Polynomial3::field() const {
  const Polynomial3 self = *this;
  return {[self](const Point5& x) { return self.value(x); },
          [self](const Point5& x, int axis) { return self.partial(x, axis); }};
}

int MonogenicBasis::flagged_count() const {
  return static_cast<int>(std::count_if(fields.begin(), fields.end(), [](const auto& f) { return f.scalar_plus_e12; }));
}

MonogenicBasis monogenic_polynomials_3d(int degree) {
  detail::require(degree >= 0 && degree <= 3, "monogenic_polynomials_3d: degree must be 0..3");
  const auto inputs = monomials(degree);
  const auto outputs = degree > 0 ? monomials(degree - 1) : std::vector<std::array<int, 3>>{};
  const Eigen::Index cols = static_cast<Eigen::Index>(inputs.size() * 4);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(outputs.size() * 4), cols);

  for (std::size_t j = 0; j < inputs.size(); ++j) {
    for (std::size_t e = 0; e < 4; ++e) {
      const BladeIndex value_blade(kEvenBlades[e]);
      for (int m = 1; m <= 3; ++m) {
        const int n = inputs[j][m - 1];
        if (n == 0) continue;
        std::array<int, 3> lowered = inputs[j];
        --lowered[m - 1];
        const auto [sign, blade] = blade_product(BladeIndex::generator(m), value_blade);
        const auto row = static_cast<Eigen::Index>(index_of(outputs, lowered) * 4 + odd_slot(blade.mask()));
        d(row, static_cast<Eigen::Index>(j * 4 + e)) += n * sign;
      }
    }
  }

  MonogenicBasis basis;
  basis.degree = degree;
  const Eigen::MatrixXd full = kernel(d, &basis.rank);

  // Kernel restricted to scalar + e12 valued polynomials.
  std::vector<Eigen::Index> restricted_cols;
  for (Eigen::Index u = 0; u < cols; ++u) {
    if (u % 4 <= 1) restricted_cols.push_back(u);
  }
  Eigen::MatrixXd sub(d.rows(), static_cast<Eigen::Index>(restricted_cols.size()));
  for (std::size_t k = 0; k < restricted_cols.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = d.col(restricted_cols[k]);
  const Eigen::MatrixXd sub_kernel = kernel(sub, nullptr);

  std::vector<Eigen::VectorXd> candidates;
  for (Eigen::Index k = 0; k < sub_kernel.cols(); ++k) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(cols);
    for (std::size_t r = 0; r < restricted_cols.size(); ++r) v(restricted_cols[r]) = sub_kernel(static_cast<Eigen::Index>(r), k);
    candidates.push_back(v);
  }
  for (Eigen::Index k = 0; k < full.cols(); ++k) candidates.push_back(full.col(k));

  // Greedy selection of independent vectors, flagged candidates first.
  std::vector<Eigen::VectorXd> orthonormal;
  for (const Eigen::VectorXd& v : candidates) {
    Eigen::VectorXd w = v / v.norm();
    for (const auto& q : orthonormal) w -= q.dot(w) * q;
    if (w.norm() < 1e-8) continue;
    orthonormal.push_back(w / w.norm());
    MonogenicPolynomial p{to_polynomial(v, inputs), false};
    p.scalar_plus_e12 = only_scalar_and_e12(p.polynomial);
    basis.fields.push_back(std::move(p));
  }
  if (static_cast<Eigen::Index>(basis.fields.size()) != cols - basis.rank) {
    throw NumericError("monogenic_polynomials_3d: kernel dimension mismatch");
  }
  std::stable_partition(basis.fields.begin(), basis.fields.end(), [](const auto& f) { return f.scalar_plus_e12; });
  return basis;
}

MultivectorField separable_wavepacket(const MultivectorField& spatial_factor, double energy, double mass) {
  detail::require(std::abs(energy * energy - mass * mass) <= 1e-12 * std::max(1.0, mass * mass),
                  "separable_wavepacket: rest-frame wave needs E^2 = m^2");
  const Multivector s0 = basis_vector(0);
  const Multivector s4 = basis_vector(4);
  constexpr std::array<double, 3> kSamples{-0.7, 0.3, 1.1};
  for (double a : kSamples) {
    for (double b : kSamples) {
      for (double c : kSamples) {
        const Multivector v = spatial_factor(Point5(0.0, a, b, c, 0.0));
        const double tol = 1e-10 * std::max(1.0, magnitude(v));
        if (max_abs(commutator(v, s0)) > tol || max_abs(commutator(v, s4)) > tol) {
          throw ContractViolation("separable_wavepacket: spatial factor must commute with sigma_0 and sigma_4");
        }
      }
    }
  }
  const Multivector amplitude = energy + mass * up({4, 0});
  return product_field(spatial_factor, harmonic_field(amplitude, {-energy, 0.0, 0.0, 0.0, mass}));
}

}  // namespace g41
