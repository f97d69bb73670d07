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

#include "g41/verify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <set>
#include <sstream>

#include "g41/algebra.hpp"
#include "g41/dirac.hpp"
#include "g41/errors.hpp"
#include "g41/field.hpp"
#include "g41/frames.hpp"
#include "g41/matrix_rep.hpp"
#include "g41/monogenic.hpp"
#include "g41/projectors.hpp"
#include "g41/rng.hpp"

namespace g41 {
namespace {

struct Context {
  CounterRng rng;
  double step_h;
  RunConfig config;
};

/// A check returns its residual, or nullopt to report a skip.
using CheckFn = std::function<std::optional<double>(Context&)>;

struct Check {
  CheckInfo info;
  CheckFn run;
};

// ---------------------------------------------------------------- sampling

std::array<double, 5> random_unit_cube5(CounterRng& rng) {
  std::array<double, 5> v{};
  for (double& c : v) c = rng.uniform(-1.0, 1.0);
  return v;
}

Point5 random_point(CounterRng& rng, double radius = 1.0) {
  const auto c = random_unit_cube5(rng);
  return {radius * c[0], radius * c[1], radius * c[2], radius * c[3], radius * c[4]};
}

std::vector<Point5> random_points(CounterRng& rng, int n) {
  std::vector<Point5> pts;
  for (int k = 0; k < n; ++k) pts.push_back(random_point(rng));
  return pts;
}

/// Null momentum with |p| in [p_min, p_max] and m in (0, m_max].
MomentumVector random_momentum(CounterRng& rng, double p_max = 5.0, double m_max = 5.0, double p_min = 0.0,
                               double m_min = 0.0) {
  std::array<double, 3> p{};
  for (;;) {
    double n2 = 0.0;
    for (double& c : p) {
      c = rng.uniform(-p_max, p_max);
      n2 += c * c;
    }
    const double n = std::sqrt(n2);
    if (n <= p_max && n >= p_min) break;
  }
  const double m = m_min + (m_max - m_min) * (1.0 - rng.uniform());
  return MomentumVector::from_momentum(p, m);
}

Multivector random_multivector(CounterRng& rng) {
  Multivector a;
  for (unsigned b = 0; b < kBlades; ++b) a += Multivector::blade(BladeIndex(b), rng.uniform(-1.0, 1.0));
  return a;
}

Multivector random_integer_multivector(CounterRng& rng) {
  Multivector a;
  for (unsigned b = 0; b < kBlades; ++b) a += Multivector::blade(BladeIndex(b), rng.uniform_int(-3, 3));
  return a;
}

Multivector random_vector(CounterRng& rng) { return Multivector::vector(random_unit_cube5(rng)); }

/// Bivector in the span of sigma_ij, 1 <= i < j <= 4.
Multivector random_spatial_bivector(CounterRng& rng, double scale = 1.0) {
  Multivector b;
  for (int i = 1; i < kGenerators; ++i) {
    for (int j = i + 1; j < kGenerators; ++j) b += scale * rng.uniform(-1.0, 1.0) * basis_vector(i) * basis_vector(j);
  }
  return b;
}

std::array<ComplexMatrix4, 4> column_selectors() {
  std::array<ComplexMatrix4, 4> s;
  for (int j = 0; j < 4; ++j) s[j](j, j) = 1.0;
  return s;
}

// ---------------------------------------------------------------- algebra_core

std::optional<double> blade_squares(Context&) {
  // Square of a blade by grade, split on whether sigma_0 is a factor.
  constexpr int kSquare[6][2] = {{1, 0}, {1, -1}, {-1, 1}, {-1, 1}, {1, -1}, {0, -1}};
  double mismatches = 0;
  for (unsigned b = 0; b < kBlades; ++b) {
    const BladeIndex blade(b);
    const Multivector e = Multivector::blade(blade);
    const Multivector sq = e * e;
    const int expected = kSquare[blade.grade()][blade.contains(0) ? 1 : 0];
    if (sq.scalar_part() != expected || max_abs(sq - Multivector::scalar(sq.scalar_part())) != 0.0) ++mismatches;
  }
  return mismatches;
}

std::optional<double> anticommutation(Context&) {
  double worst = 0.0;
  for (int a = 0; a < kGenerators; ++a) {
    for (int b = 0; b < kGenerators; ++b) {
      const Multivector s = basis_vector(a) * basis_vector(b) + basis_vector(b) * basis_vector(a);
      const Multivector expected = Multivector::scalar(a == b ? 2.0 * metric_sign(a) : 0.0);
      worst = std::max(worst, max_abs(s - expected));
    }
  }
  return worst;
}

std::optional<double> associativity(Context& ctx) {
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Multivector a = random_integer_multivector(ctx.rng);
    const Multivector b = random_integer_multivector(ctx.rng);
    const Multivector c = random_integer_multivector(ctx.rng);
    worst = std::max(worst, max_abs((a * b) * c - a * (b * c)));
  }
  return worst;
}

std::optional<double> pseudoscalar_centrality(Context&) {
  const Multivector i = Multivector::pseudoscalar();
  double worst = max_abs(i * i + 1.0);
  for (unsigned b = 0; b < kBlades; ++b) {
    const Multivector e = Multivector::blade(BladeIndex(b));
    worst = std::max(worst, max_abs(i * e - e * i));
  }
  return worst;
}

std::optional<double> vector_decomposition(Context& ctx) {
  double worst = 0.0;
  for (int n = 0; n < 200; ++n) {
    const Multivector a = random_vector(ctx.rng);
    const Multivector b = random_vector(ctx.rng);
    worst = std::max(worst, max_abs(a * b - (inner(a, b) + outer(a, b))));
    worst = std::max(worst, max_abs(b * a - (inner(a, b) - outer(a, b))));
  }
  return worst;
}

std::optional<double> cross_product(Context& ctx) {
  const Multivector s123 = basis_vector(1) * basis_vector(2) * basis_vector(3);
  double worst = 0.0;
  for (int n = 0; n < 200; ++n) {
    std::array<double, 3> u{}, v{};
    for (int k = 0; k < 3; ++k) {
      u[k] = ctx.rng.uniform(-1.0, 1.0);
      v[k] = ctx.rng.uniform(-1.0, 1.0);
    }
    const Multivector a = Multivector::vector({0.0, u[0], u[1], u[2], 0.0});
    const Multivector b = Multivector::vector({0.0, v[0], v[1], v[2], 0.0});
    const std::array<double, 3> cross = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                         u[0] * v[1] - u[1] * v[0]};
    const Multivector expected = Multivector::vector({0.0, cross[0], cross[1], cross[2], 0.0});
    worst = std::max(worst, max_abs(-1.0 * (s123 * outer(a, b)) - expected));
  }
  return worst;
}

Multivector series_exp(const Multivector& a, int terms) {
  Multivector sum = Multivector::scalar(1.0);
  Multivector term = Multivector::scalar(1.0);
  for (int n = 1; n < terms; ++n) {
    term = term * a / static_cast<double>(n);
    sum += term;
  }
  return sum;
}

std::optional<double> exp_closed_form(Context& ctx) {
  const Multivector e01 = basis_vector(0) * basis_vector(1);
  const Multivector e12 = basis_vector(1) * basis_vector(2);
  const std::array<Multivector, 4> shapes = {e12, e01, Multivector::pseudoscalar(), e01 + e12};
  double worst = 0.0;
  for (int n = 0; n < 50; ++n) {
    const double theta = ctx.rng.uniform(-2.0, 2.0);
    for (const Multivector& s : shapes) {
      const Multivector a = theta * s;
      worst = std::max(worst, max_abs(mv_exp(a) - series_exp(a, 30)));
    }
  }
  return worst;
}

std::optional<double> rotor_unitarity(Context& ctx) {
  double worst = 0.0;
  for (int n = 0; n < 200; ++n) {
    const Multivector r = rotor(random_spatial_bivector(ctx.rng, 2.0));
    const Multivector rr = reverse(r) * r;
    worst = std::max(worst, std::abs(rr.scalar_part() - 1.0));
    worst = std::max(worst, max_abs(rr - Multivector::scalar(rr.scalar_part())));
  }
  return worst;
}

// ---------------------------------------------------------------- matrix_rep

std::optional<double> phi_homomorphism(Context& ctx) {
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Multivector a = random_multivector(ctx.rng);
    const Multivector b = random_multivector(ctx.rng);
    worst = std::max(worst, max_abs(phi(a * b) - phi(a) * phi(b)));
  }
  return worst;
}

std::optional<double> phi_roundtrip(Context& ctx) {
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Multivector a = random_multivector(ctx.rng);
    worst = std::max(worst, max_abs(phi_inv(phi(a)) - a));
  }
  return worst;
}

std::optional<double> dirac_pauli_relations(Context&) {
  const auto& d = DiracPauliBasis::standard();
  const ComplexMatrix4 id = ComplexMatrix4::identity();
  double worst = max_abs(d.beta * d.beta - id);
  for (int m = 1; m <= 3; ++m) {
    worst = std::max(worst, max_abs(d.alpha(m) * d.beta + d.beta * d.alpha(m)));
    for (int n = 1; n <= 3; ++n) {
      const ComplexMatrix4 expected = m == n ? 2.0 * id : ComplexMatrix4();
      worst = std::max(worst, max_abs(d.alpha(m) * d.alpha(n) + d.alpha(n) * d.alpha(m) - expected));
    }
  }
  return worst;
}

std::optional<double> sigma_clifford(Context&) {
  const ComplexMatrix4 id = ComplexMatrix4::identity();
  double worst = 0.0;
  for (int a = 0; a < kGenerators; ++a) {
    for (int b = 0; b < kGenerators; ++b) {
      const ComplexMatrix4 expected = a == b ? Complex(2.0 * metric_sign(a)) * id : ComplexMatrix4();
      worst = std::max(worst, max_abs(sigma_matrix(a) * sigma_matrix(b) + sigma_matrix(b) * sigma_matrix(a) - expected));
      worst = std::max(worst, max_abs(generator_image(a) * generator_image(b) + generator_image(b) * generator_image(a) -
                                      expected));
    }
  }
  return worst;
}

std::optional<double> blade_span(Context&) {
  Eigen::Matrix<double, kBlades, kBlades> gram;
  for (unsigned a = 0; a < kBlades; ++a) {
    for (unsigned b = 0; b < kBlades; ++b) {
      gram(a, b) = trace(adjoint(blade_image(BladeIndex(a))) * blade_image(BladeIndex(b))).real();
    }
  }
  Eigen::FullPivLU<Eigen::Matrix<double, kBlades, kBlades>> lu(gram);
  return static_cast<double>(kBlades - lu.rank());
}

// ---------------------------------------------------------------- monogenic

std::optional<double> monogenic_implies_harmonic(Context& ctx) {
  std::vector<MultivectorField> fields;
  for (int n = 0; n < 20; ++n) fields.push_back(plane_wave(random_momentum(ctx.rng)));
  for (const auto& f : monogenic_polynomials_3d(2).fields) fields.push_back(f.polynomial.field());
  const auto points = random_points(ctx.rng, 4);
  const Differentiation mode = Differentiation::richardson(ctx.step_h);
  double worst = 0.0;
  int used = 0;
  for (const auto& f : fields) {
    if (monogenic_residual(f, points, Differentiation::analytic()) > 1e-10) continue;
    ++used;
    for (const Point5& x : points) worst = std::max(worst, magnitude(laplacian(f, x, mode)));
  }
  if (used == 0) return std::nullopt;
  return worst;
}

std::optional<double> derivative_order(Context& ctx) {
  double worst_order = INFINITY;
  for (int n = 0; n < 20; ++n) {
    const MultivectorField f = plane_wave(random_momentum(ctx.rng));
    const Point5 x = random_point(ctx.rng);
    const Multivector exact = vector_derivative(f, x, Differentiation::analytic());
    const double coarse = magnitude(vector_derivative(f, x, Differentiation::central(1e-2)) - exact);
    const double fine = magnitude(vector_derivative(f, x, Differentiation::central(5e-3)) - exact);
    if (coarse < 1e-11) continue;
    worst_order = std::min(worst_order, std::log2(coarse / fine));
  }
  if (!std::isfinite(worst_order)) return std::nullopt;
  return std::max(0.0, 2.0 - worst_order);
}

std::optional<double> null_annihilation(Context&) {
  // Integer null momenta keep every product exact.
  const std::array<std::array<double, 5>, 8> momenta = {{{5, 3, 0, 0, 4},
                                                          {3, 1, 2, 2, 0},
                                                          {7, 2, 3, 6, 0},
                                                          {5, 1, 2, 2, 4},
                                                          {9, 2, 4, 5, 6},
                                                          {2, 1, 1, 1, 1},
                                                          {-5, 0, 3, 0, 4},
                                                          {1, 0, 0, 0, 1}}};
  double worst = 0.0;
  for (const auto& k : momenta) {
    const MomentumVector mv = MomentumVector::from_components(k[0], {k[1], k[2], k[3]}, k[4]);
    worst = std::max(worst, max_abs(mv.null_vector() * plane_wave_amplitude(mv)));
  }
  return worst;
}

std::optional<double> phase_sign_exclusivity(Context& ctx) {
  double violations = 0;
  const auto points = random_points(ctx.rng, 3);
  for (int n = 0; n < 50; ++n) {
    const MomentumVector k = random_momentum(ctx.rng, 5.0, 5.0, 0.5, 0.5);
    const Multivector psi0 = plane_wave_amplitude(k);
    int monogenic = 0;
    bool convention_monogenic = false;
    for (double se : {1.0, -1.0}) {
      for (double sm : {1.0, -1.0}) {
        const auto& p = k.momentum();
        const MultivectorField f = harmonic_field(psi0, {-se * k.energy(), p[0], p[1], p[2], sm * k.mass()});
        const bool is_mono = monogenic_residual(f, points, Differentiation::analytic()) <= 1e-10;
        monogenic += is_mono ? 1 : 0;
        if (se > 0 && sm > 0) convention_monogenic = is_mono;
      }
    }
    if (monogenic != 1 || !convention_monogenic) ++violations;
  }
  return violations;
}

// ---------------------------------------------------------------- dirac_eq

std::optional<double> dirac_spectrum(Context& ctx) {
  double worst = 0.0;
  for (int n = 0; n < 200; ++n) {
    const MomentumVector k = random_momentum(ctx.rng);
    auto values = solve_dirac_system(k).eigenvalues;
    std::sort(values.begin(), values.end());
    const double e = k.energy();
    const std::array<double, 4> expected = {-e, -e, e, e};
    for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(values[j] - expected[j]));
  }
  return worst;
}

std::optional<double> lambda_inverse(Context& ctx) {
  double worst = 0.0;
  for (int n = 0; n < 200; ++n) {
    const MomentumVector k = random_momentum(ctx.rng);
    const DiracSystem s = dirac_system(k);
    const double e2 = k.energy() * k.energy();
    worst = std::max(worst, max_abs(e2 * inverse(s.lambda) - s.lambda));
  }
  return worst;
}

std::optional<double> eigen_determinism(Context& ctx) {
  double differing = 0;
  for (int n = 0; n < 50; ++n) {
    const MomentumVector k = random_momentum(ctx.rng);
    if (!(dirac_system(k).psi_bar == dirac_system(k).psi_bar)) ++differing;
  }
  return differing;
}

std::optional<double> column_annihilation(Context& ctx) {
  const auto selectors = column_selectors();
  double worst = 0.0;
  for (int n = 0; n < 50; ++n) {
    const DiracSystem s = dirac_system(random_momentum(ctx.rng));
    for (int j = 0; j < 3; ++j) {
      worst = std::max(worst, column_annihilation_residual(s, selectors, random_point(ctx.rng)));
    }
  }
  return worst;
}

// ---------------------------------------------------------------- projectors_su4

std::optional<double> idempotent_sets(Context&) {
  return std::max(idempotent_defects(build_f_set()).worst(), idempotent_defects(build_e_set()).worst());
}

std::optional<double> commutation_prerequisites(Context&) {
  return std::max(max_abs(commutator(up({3}), up({0, 4}))), max_abs(commutator(up({0, 1, 2}), up({0, 3, 4}))));
}

std::optional<double> trivector_squares(Context&) {
  const Multivector a = up({0, 1, 2});
  const Multivector b = up({0, 3, 4});
  return std::max(max_abs(a * a - 1.0), max_abs(b * b - 1.0));
}

bool is_idempotent(const Multivector& a) { return max_abs(a * a - a) <= 1e-14; }

std::optional<double> set_independence(Context&) {
  const auto f = build_f_set();
  const auto e = build_e_set();
  for (const Multivector& fi : f.elements) {
    for (const Multivector& ej : e.elements) {
      const Multivector p = fi * ej;
      if (max_abs(p) > 1e-14 && !is_idempotent(p)) return 0.0;
    }
  }
  return 1.0;
}

double pattern_residual(const Multivector& lambda, std::array<double, 4> expected) {
  auto values = eigendecompose(phi(lambda)).values;
  std::sort(values.begin(), values.end());
  std::sort(expected.begin(), expected.end());
  double worst = 0.0;
  for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(values[j] - expected[j]));
  return worst;
}

std::optional<double> custom_idempotents(Context& ctx) {
  std::vector<IdempotentSet> sets = {build_f_set(), build_e_set()};
  for (int n = 0; n < 10; ++n) {
    const auto& base = n % 2 == 0 ? sets[0] : sets[1];
    const Multivector r = rotor(random_spatial_bivector(ctx.rng, 2.0));
    IdempotentSet s;
    // Random reordering together with a unitary conjugation.
    std::array<int, 4> order = {0, 1, 2, 3};
    for (int i = 3; i > 0; --i) std::swap(order[i], order[ctx.rng.uniform_int(0, i)]);
    for (int i = 0; i < 4; ++i) s.elements[i] = r * base.elements[order[i]] * reverse(r);
    sets.push_back(s);
  }
  const double s3 = std::sqrt(3.0);
  const double s6 = std::sqrt(6.0);
  double worst = 0.0;
  for (const auto& set : sets) {
    const auto g = idempotents_to_generators(set);
    const auto& f = set.elements;
    const std::array<Multivector, 3> l = {g.lambda3, g.lambda8, g.lambda15};
    for (int a = 0; a < 3; ++a) {
      const ComplexMatrix4 m = phi(l[a]);
      worst = std::max(worst, std::abs(trace(m)));
      worst = std::max(worst, max_abs(m - adjoint(m)));
      for (int b = a + 1; b < 3; ++b) worst = std::max(worst, max_abs(commutator(l[a], l[b])));
    }
    worst = std::max(worst, max_abs(g.lambda3 * g.lambda3 - (f[0] + f[1])));
    worst = std::max(worst, max_abs(g.lambda8 * g.lambda8 - (f[0] + f[1] + 4.0 * f[2]) / 3.0));
    worst = std::max(worst, max_abs(g.lambda15 * g.lambda15 - (f[0] + f[1] + f[2] + 9.0 * f[3]) / 6.0));
    worst = std::max(worst, pattern_residual(g.lambda3, {1.0, -1.0, 0.0, 0.0}));
    worst = std::max(worst, pattern_residual(g.lambda8, {1.0 / s3, 1.0 / s3, -2.0 / s3, 0.0}));
    worst = std::max(worst, pattern_residual(g.lambda15, {1.0 / s6, 1.0 / s6, 1.0 / s6, -3.0 / s6}));
  }
  return worst;
}

// ---------------------------------------------------------------- gauge_frames

std::optional<double> frame_duality(Context& ctx) {
  double worst = 0.0;
  int built = 0;
  while (built < 100) {
    Matrix5 n = identity5();
    for (auto& row : n) {
      for (double& c : row) c += ctx.rng.uniform(-0.4, 0.4);
    }
    Frame f;
    try {
      f = build_frame(RefractiveIndex::constant(n), Point5{});
    } catch (const DomainError&) {
      continue;
    }
    if (f.condition > 100.0) continue;
    ++built;
    worst = std::max(worst, frame_duality_residual(f));
  }
  return worst;
}

/// beta = b0 + b.x + c (x^0)^2 + d x^1 x^2, with its analytic gradient.
ScalarFunction random_phase(CounterRng& rng) {
  const double b0 = rng.uniform(-1.0, 1.0);
  std::array<double, 5> b{};
  for (int mu = 0; mu < 4; ++mu) b[mu] = rng.uniform(-1.0, 1.0);
  const double c = rng.uniform(-0.5, 0.5);
  const double d = rng.uniform(-0.5, 0.5);
  return {[=](const Point5& x) {
            double v = b0 + c * x[0] * x[0] + d * x[1] * x[2];
            for (int mu = 0; mu < 4; ++mu) v += b[mu] * x[mu];
            return v;
          },
          [=](const Point5& x) {
            std::array<double, 5> g = b;
            g[0] += 2.0 * c * x[0];
            g[1] += d * x[2];
            g[2] += d * x[1];
            return g;
          }};
}

std::optional<double> phase_gradient_identity(Context& ctx) {
  double worst = 0.0;
  const Differentiation mode = Differentiation::richardson(ctx.step_h);
  for (int n = 0; n < 20; ++n) {
    const MultivectorField psi = plane_wave(random_momentum(ctx.rng, 3.0, 3.0));
    const ScalarFunction beta = random_phase(ctx.rng);
    const auto points = random_points(ctx.rng, 3);
    worst = std::max(worst, phase_gradient_identity_residual(psi, beta, points, mode));
  }
  return worst;
}

std::optional<double> gauge_covariance(Context& ctx) {
  double worst = 0.0;
  const Differentiation mode = Differentiation::richardson(ctx.step_h);
  for (int n = 0; n < 20; ++n) {
    const MomentumVector k = random_momentum(ctx.rng, 3.0, 3.0, 0.0, 0.2);
    std::array<double, 4> a{};
    for (double& c : a) c = ctx.rng.uniform(-1.0, 1.0);
    std::array<double, 5> slope{};
    for (int mu = 0; mu < 4; ++mu) slope[mu] = ctx.rng.uniform(-1.0, 1.0);
    const double q = ctx.rng.uniform(0.5, 2.0) * (n % 2 == 0 ? -1.0 : 1.0);
    const GaugeField field =
        GaugeField::constant(a, q, k.mass()).with_phase(ScalarFunction::linear(ctx.rng.uniform(-1.0, 1.0), slope));
    const auto points = random_points(ctx.rng, 3);
    worst = std::max(worst, gauge_covariance_residual(plane_wave(k), field, points, mode));
  }
  return worst;
}

// ---------------------------------------------------------------- cli_verify

std::vector<CheckResult> run_checks(const RunConfig& config, const std::vector<const Check*>& checks);
const std::vector<Check>& checks();

std::optional<double> run_determinism(Context& ctx) {
  RunConfig config = ctx.config;
  std::vector<std::string> names;
  for (const Check& c : checks()) {
    if (c.info.module != "cli_verify") names.push_back(c.info.name);
  }
  config.selected_checks = names;
  const std::string first = format_json(config, run_suite(config), false);
  const std::string second = format_json(config, run_suite(config), false);
  return first == second ? 0.0 : 1.0;
}

constexpr std::size_t kExpectedChecks = 31;

std::optional<double> registry_complete(Context&) {
  std::set<std::string> names;
  for (const Check& c : checks()) names.insert(c.info.name);
  const double count_error = std::abs(static_cast<double>(checks().size()) - static_cast<double>(kExpectedChecks));
  const double duplicates = static_cast<double>(checks().size() - names.size());
  return count_error + duplicates;
}

const std::vector<Check>& checks() {
  static const std::vector<Check> registry = {
      {{"blade_squares", "algebra_core", "Blade squares: eight classes square to +1, the rest to -1", 0.0},
       blade_squares},
      {{"anticommutation", "algebra_core", "Generators anticommute; squares follow the (-++++) metric", 0.0},
       anticommutation},
      {{"associativity", "algebra_core", "Geometric product is associative", 0.0}, associativity},
      {{"pseudoscalar_centrality", "algebra_core", "Pseudoscalar is central and squares to -1", 0.0},
       pseudoscalar_centrality},
      {{"vector_decomposition", "algebra_core", "Vector product splits into inner and outer parts", 1e-12},
       vector_decomposition},
      {{"cross_product", "algebra_core", "Dual of the outer product is the cross product", 1e-12}, cross_product},
      {{"exp_closed_form", "algebra_core", "Closed-form exponentials match the power series", 1e-12},
       exp_closed_form},
      {{"rotor_unitarity", "algebra_core", "Rotors satisfy reverse(R) R = 1", 1e-12}, rotor_unitarity},
      {{"phi_homomorphism", "matrix_rep", "Matrix representation preserves products", 1e-12}, phi_homomorphism},
      {{"phi_roundtrip", "matrix_rep", "Matrix representation is invertible", 1e-12}, phi_roundtrip},
      {{"dirac_pauli_relations", "matrix_rep", "Dirac-Pauli alpha and beta anticommutation", 0.0},
       dirac_pauli_relations},
      {{"sigma_clifford", "matrix_rep", "Sigma matrices obey the Clifford relations", 0.0}, sigma_clifford},
      {{"blade_span", "matrix_rep", "Blade images span the complex 4x4 matrices", 0.0}, blade_span},
      {{"monogenic_residual", "monogenic", "Monogenic fields solve the five-dimensional wave equation", 1e-6},
       monogenic_implies_harmonic},
      {{"derivative_order", "monogenic", "Central differences converge at second order", 0.1}, derivative_order},
      {{"null_annihilation", "monogenic", "Null vector annihilates the plane-wave amplitude", 0.0},
       null_annihilation},
      {{"phase_sign_exclusivity", "monogenic", "Exactly one phase-sign convention is monogenic", 0.0},
       phase_sign_exclusivity},
      {{"dirac_spectrum", "dirac_eq", "Dirac operator spectrum is {+E, +E, -E, -E}", 1e-10}, dirac_spectrum},
      {{"lambda_inverse", "dirac_eq", "E^2 times the inverse eigenvalue matrix returns it", 1e-10},
       lambda_inverse},
      {{"eigen_determinism", "dirac_eq", "Eigenvector matrix is a deterministic function of k", 0.0},
       eigen_determinism},
      {{"column_annihilation", "dirac_eq", "Eigenvector columns solve the geometric mass equation", 1e-10},
       column_annihilation},
      {{"idempotent_sets", "projectors_su4", "Both idempotent sets are orthogonal and complete", 0.0},
       idempotent_sets},
      {{"commutation_prerequisites", "projectors_su4", "Factors of each idempotent set commute", 0.0},
       commutation_prerequisites},
      {{"trivector_squares", "projectors_su4", "Timelike trivectors square to +1", 0.0}, trivector_squares},
      {{"set_independence", "projectors_su4", "The two idempotent sets are independent", 0.0}, set_independence},
      {{"custom_idempotents", "projectors_su4", "Any orthogonal idempotent quadruple yields diagonal SU(4) generators",
        1e-10},
       custom_idempotents},
      {{"frame_duality", "gauge_frames", "Frame and reciprocal frame are dual", 1e-10}, frame_duality},
      {{"phase_gradient_identity", "gauge_frames", "Local phase spoils monogenicity by i grad(beta)", 1e-8},
       phase_gradient_identity},
      {{"gauge_covariance", "gauge_frames", "Covariant derivative is gauge covariant", 1e-8}, gauge_covariance},
      {{"run_determinism", "cli_verify", "Equal seeds give identical reports", 0.0}, run_determinism},
      {{"registry_complete", "cli_verify", "Every invariant is registered exactly once", 0.0}, registry_complete},
  };
  return registry;
}

std::vector<CheckResult> run_checks(const RunConfig& config, const std::vector<const Check*>& selected) {
  std::vector<CheckResult> results;
  results.reserve(selected.size());
  for (const Check* check : selected) {
    CheckResult r;
    r.name = check->info.name;
    r.paper_anchor = check->info.paper_anchor;
    const auto it = config.tolerance_overrides.find(r.name);
    const double tolerance = it == config.tolerance_overrides.end() ? check->info.tolerance : it->second;
    r.tolerance = tolerance;
    Context ctx{CounterRng(config.seed, stream_id(r.name)), config.step_h, config};
    const auto start = std::chrono::steady_clock::now();
    try {
      r.residual = check->run(ctx);
      if (!r.residual) {
        r.status = CheckStatus::skip;
      } else {
        r.status = *r.residual <= tolerance ? CheckStatus::pass : CheckStatus::fail;
      }
    } catch (const std::exception& e) {
      r.residual.reset();
      r.status = CheckStatus::fail;
      r.message = e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << v;
  return os.str();
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skip:
      return "skip";
  }
  return "skip";
}

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const Check& c : checks()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

void validate(const RunConfig& config) {
  auto known = [](const std::string& name) {
    return std::any_of(checks().begin(), checks().end(), [&](const Check& c) { return c.info.name == name; });
  };
  if (config.selected_checks) {
    for (const auto& name : *config.selected_checks) {
      if (!known(name)) throw UsageError("unknown check '" + name + "'");
    }
  }
  for (const auto& [name, tol] : config.tolerance_overrides) {
    if (!known(name)) throw UsageError("unknown check '" + name + "' in tolerance override");
    if (!(tol >= 0.0) || !std::isfinite(tol)) throw UsageError("tolerance for '" + name + "' must be finite and >= 0");
  }
  if (!(config.step_h > 0.0) || !std::isfinite(config.step_h)) throw UsageError("step must be finite and positive");
}

std::vector<CheckResult> run_suite(const RunConfig& config) {
  validate(config);
  std::vector<const Check*> selected;
  for (const Check& c : checks()) {
    if (!config.selected_checks ||
        std::find(config.selected_checks->begin(), config.selected_checks->end(), c.info.name) !=
            config.selected_checks->end()) {
      selected.push_back(&c);
    }
  }
  return run_checks(config, selected);
}

Summary summarize(const std::vector<CheckResult>& results) {
  Summary s;
  for (const auto& r : results) {
    switch (r.status) {
      case CheckStatus::pass:
        ++s.pass;
        break;
      case CheckStatus::fail:
        ++s.fail;
        break;
      case CheckStatus::skip:
        ++s.skip;
        break;
    }
  }
  return s;
}

int exit_code(const std::vector<CheckResult>& results) { return summarize(results).fail == 0 ? 0 : 1; }

std::string format_json(const RunConfig& config, const std::vector<CheckResult>& results, bool include_timings) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["version"] = std::string(kVersion);
  doc["seed"] = config.seed;
  ordered_json list = ordered_json::array();
  for (const auto& r : results) {
    ordered_json j;
    j["name"] = r.name;
    j["paper_anchor"] = r.paper_anchor;
    j["status"] = std::string(to_string(r.status));
    j["residual"] = r.residual ? ordered_json(*r.residual) : ordered_json(nullptr);
    j["tolerance"] = r.tolerance ? ordered_json(*r.tolerance) : ordered_json(nullptr);
    j["elapsed_ms"] = include_timings ? r.elapsed_ms : 0.0;
    if (!r.message.empty()) j["message"] = r.message;
    list.push_back(std::move(j));
  }
  doc["results"] = std::move(list);
  const Summary s = summarize(results);
  doc["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skip", s.skip}};
  return doc.dump(2) + "\n";
}

std::string format_text(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    std::string status(to_string(r.status));
    std::transform(status.begin(), status.end(), status.begin(), [](char c) { return static_cast<char>(c - 32); });
    os << status << "  " << std::left << std::setw(28) << r.name;
    os << " residual=" << (r.residual ? format_number(*r.residual) : "none");
    os << " tol=" << (r.tolerance ? format_number(*r.tolerance) : "none");
    os << " " << std::fixed << std::setprecision(2) << r.elapsed_ms << "ms";
    os.unsetf(std::ios::fixed);
    if (!r.message.empty()) os << "  (" << r.message << ")";
    os << "\n";
  }
  const Summary s = summarize(results);
  os << s.pass << " passed, " << s.fail << " failed, " << s.skip << " skipped\n";
  return os.str();
}

std::string format_registry() {
  std::ostringstream os;
  for (const auto& c : check_registry()) {
    os << std::left << std::setw(28) << c.name << std::setw(16) << c.module << std::setw(11) << format_number(c.tolerance)
       << c.paper_anchor << "\n";
  }
  return os.str();
}

}  // namespace g41
