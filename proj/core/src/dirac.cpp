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

#include "g41/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "g41/algebra.hpp"
#include "g41/errors.hpp"
#include "g41/matrix_rep.hpp"

namespace g41 {
namespace {

constexpr Complex I{0.0, 1.0};

using Column = std::array<Complex, 4>;

Column column(const ComplexMatrix4& m, int c) { return {m(0, c), m(1, c), m(2, c), m(3, c)}; }

Complex dot(const Column& a, const Column& b) {
  Complex s = 0.0;
  for (int r = 0; r < 4; ++r) s += std::conj(a[r]) * b[r];
  return s;
}

Column apply(const ComplexMatrix4& m, const Column& v) {
  Column out{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out[r] += m(r, c) * v[c];
  }
  return out;
}

// Largest-modulus component made real positive; ties go to the lowest index.
Column fix_phase(Column v) {
  double best = 0.0;
  for (const Complex& z : v) best = std::max(best, std::abs(z));
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double size = std::abs(v[k]);
    if (size >= best * (1.0 - 1e-12)) {
      const Complex unit = std::conj(v[k]) / size;
      for (Complex& w : v) w *= unit;
      v[k] = size;
      break;
    }
  }
  return v;
}

// Eigenvectors of the 2x2 Hermitian [[a, b], [conj(b), d]], larger eigenvalue first.
std::array<std::array<Complex, 2>, 2> eigenvectors_2x2(double a, Complex b, double d) {
  const double mean = 0.5 * (a + d);
  const double half = 0.5 * (a - d);
  const double radius = std::sqrt(half * half + std::norm(b));
  if (std::abs(b) <= 1e-14 * std::max(1.0, radius)) {
    if (a >= d) return {{{1.0, 0.0}, {0.0, 1.0}}};
    return {{{0.0, 1.0}, {1.0, 0.0}}};
  }
  const double top = mean + radius;
  // (A - top) v = 0  =>  v = (b, top - a) up to scale.
  std::array<Complex, 2> v{b, top - a};
  const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  v[0] /= n;
  v[1] /= n;
  const std::array<Complex, 2> w{-std::conj(v[1]), std::conj(v[0])};
  return {v, w};
}

}  // namespace

ComplexMatrix4 build_dirac_operator(const MomentumVector& k) {
  const auto& dp = DiracPauliBasis::standard();
  ComplexMatrix4 a = k.mass() * dp.beta;
  for (int m = 1; m <= 3; ++m) a += k.momentum()[m - 1] * dp.alpha(m);
  return a;
}

DiracSystem solve_dirac_system(const MomentumVector& k) {
  const ComplexMatrix4 a = build_dirac_operator(k);
  const EigenSystem eig = eigendecompose(a);
  DiracSystem s{k, a, eig.vectors, {}, eig.values, false};
  s.lambda = ComplexMatrix4::diagonal(eig.values[0], eig.values[1], eig.values[2], eig.values[3]);
  return s;
}

ComplexMatrix4 spin_operator(const std::array<double, 3>& p) {
  const double n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  std::array<double, 3> dir{0.0, 0.0, 1.0};
  if (n > 0.0) dir = {p[0] / n, p[1] / n, p[2] / n};
  Multivector axis;
  for (int m = 1; m <= 3; ++m) axis += dir[m - 1] * reciprocal_vector(m);
  return -phi(axis * up({4, 0}));
}

DiracSystem order_eigensystem(const DiracSystem& system) {
  const double e = system.k.energy();
  detail::require(e != 0.0, "order_eigensystem: E = 0 has no ordered eigensystem");
  const double tol = 1e-8 * std::abs(e);

  std::array<std::vector<int>, 2> groups;  // eigenvalue +E, then -E
  for (int j = 0; j < 4; ++j) {
    const double value = system.eigenvalues[j];
    if (std::abs(value - e) <= tol) {
      groups[0].push_back(j);
    } else if (std::abs(value + e) <= tol) {
      groups[1].push_back(j);
    } else {
      throw NumericError("order_eigensystem: eigenvalue differs from +-E");
    }
  }
  if (groups[0].size() != 2 || groups[1].size() != 2) {
    throw NumericError("order_eigensystem: eigenvalues are not a doubled +-E pair");
  }

  const ComplexMatrix4 spin = spin_operator(system.k.momentum());
  DiracSystem out = system;
  int next = 0;
  for (const auto& group : groups) {
    const Column q0 = column(system.psi_bar, group[0]);
    const Column q1 = column(system.psi_bar, group[1]);
    const Column s0 = apply(spin, q0);
    const Column s1 = apply(spin, q1);
    const auto vecs = eigenvectors_2x2(dot(q0, s0).real(), dot(q0, s1), dot(q1, s1).real());
    for (const auto& v : vecs) {
      Column c{};
      for (int r = 0; r < 4; ++r) c[r] = v[0] * q0[r] + v[1] * q1[r];
      c = fix_phase(c);
      for (int r = 0; r < 4; ++r) out.psi_bar(r, next) = c[r];
      ++next;
    }
  }
  out.eigenvalues = {system.eigenvalues[groups[0][0]], system.eigenvalues[groups[0][1]],
                     system.eigenvalues[groups[1][0]], system.eigenvalues[groups[1][1]]};
  out.lambda = e * DiracPauliBasis::standard().beta;
  out.ordered = true;
  return out;
}

DiracSystem dirac_system(const MomentumVector& k) { return order_eigensystem(solve_dirac_system(k)); }

double eigen_equation_residual(const DiracSystem& s) { return distance(s.a_bar * s.psi_bar, s.psi_bar * s.lambda); }

double reconstruction_residual(const DiracSystem& s) {
  return distance(s.psi_bar * s.lambda * inverse(s.psi_bar), s.a_bar);
}

double CrosscheckReport::residual() const {
  return std::max({dirac_residual, amplitude_residual, projector_residual});
}

CrosscheckReport geometric_matrix_crosscheck(const MomentumVector& k, std::span<const Point5> points) {
  const auto& dp = DiracPauliBasis::standard();
  const Multivector psi0 = plane_wave_amplitude(k);
  const MultivectorField psi = harmonic_field(psi0, {-k.energy(), k.momentum()[0], k.momentum()[1], k.momentum()[2], 0.0});

  CrosscheckReport report;
  for (const Point5& x : points) {
    ComplexMatrix4 r = I * phi(psi.partial(x, 0)) - k.mass() * dp.beta * phi(psi(x));
    for (int m = 1; m <= 3; ++m) r += I * dp.alpha(m) * phi(psi.partial(x, m));
    report.dirac_residual = std::max(report.dirac_residual, max_abs(r));
  }
  const ComplexMatrix4 a = build_dirac_operator(k);
  const ComplexMatrix4 e_plus_a = k.energy() * ComplexMatrix4::identity() + a;
  report.amplitude_residual = distance(phi(psi0), e_plus_a);
  report.projector_residual = distance(a * e_plus_a, k.energy() * e_plus_a);
  return report;
}

double column_annihilation_residual(const DiracSystem& s, std::span<const ComplexMatrix4, 4> selectors,
                                    const Point5& x) {
  const Multivector i = Multivector::pseudoscalar();
  const auto& p = s.k.momentum();
  double worst = 0.0;
  for (int j = 0; j < 4; ++j) {
    const double lambda_j = s.lambda(j, j).real();
    const Multivector amplitude = phi_inv(s.psi_bar * selectors[j]);
    const MultivectorField psi_j = harmonic_field(amplitude, {-lambda_j, p[0], p[1], p[2], 0.0});
    const Multivector r = vector_derivative(psi_j, x, Differentiation::analytic(), Axes::spacetime) +
                          s.k.mass() * (i * reciprocal_vector(4) * psi_j(x));
    worst = std::max(worst, max_abs(r));
  }
  return worst;
}

}  // namespace g41
