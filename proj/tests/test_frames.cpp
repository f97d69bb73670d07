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

#include <gtest/gtest.h>

#include <cmath>
#include <json.hpp>

#include "g41/algebra.hpp"
#include "g41/errors.hpp"
#include "g41/frames.hpp"
#include "g41/monogenic.hpp"
#include "test_util.hpp"

namespace g41 {
namespace {

using testing::random_points;
using testing::rng_for;

Multivector phase(double beta) { return std::cos(beta) + std::sin(beta) * Multivector::pseudoscalar(); }

Matrix5 random_index(CounterRng& rng) {
  Matrix5 n = identity5();
  for (auto& row : n) {
    for (double& c : row) c += rng.uniform(-0.3, 0.3);
  }
  return n;
}

double dot(const Multivector& a, const Multivector& b) { return inner(a, b).scalar_part(); }

TEST(Frames, IdentityIndexGivesOrthonormalFrame) {
  const Frame f = build_frame(RefractiveIndex::identity(), Point5{0.3, -0.1, 0.2, 0.5, 1.0});
  for (int a = 0; a < kGenerators; ++a) {
    EXPECT_EQ(f.vectors[a], basis_vector(a));
    EXPECT_EQ(f.reciprocal[a], reciprocal_vector(a));
    for (int b = 0; b < kGenerators; ++b) {
      const double expected = a != b ? 0.0 : (a == 0 ? -1.0 : 1.0);
      EXPECT_EQ(f.metric[a][b], expected);
      EXPECT_EQ(f.inverse_metric[a][b], expected);
    }
  }
  EXPECT_EQ(f.reciprocal[0], -1.0 * basis_vector(0));
  EXPECT_EQ(f.condition, 1.0);
  EXPECT_TRUE(f.signature_preserved());
  EXPECT_EQ(frame_duality_residual(f), 0.0);
}

TEST(Frames, StretchedAxis) {
  Matrix5 n = identity5();
  n[1][1] = 2.0;
  const Frame f = build_frame(RefractiveIndex::constant(n), Point5{});
  EXPECT_EQ(f.vectors[1], 2.0 * basis_vector(1));
  EXPECT_EQ(f.reciprocal[1], 0.5 * basis_vector(1));
  EXPECT_EQ(f.metric[1][1], 4.0);
  EXPECT_EQ(f.inverse_metric[1][1], 0.25);
  EXPECT_NEAR(f.condition, 2.0, 1e-14);
}

TEST(Frames, RandomFramesAreDual) {
  auto rng = rng_for("frames-dual");
  for (int k = 0; k < 100; ++k) {
    const Frame f = build_frame(RefractiveIndex::constant(random_index(rng)), Point5{});
    EXPECT_LE(frame_duality_residual(f), 1e-10);
    for (int a = 0; a < kGenerators; ++a) {
      for (int b = 0; b < kGenerators; ++b) {
        EXPECT_NEAR(dot(f.reciprocal[a], f.vectors[b]), a == b ? 1.0 : 0.0, 1e-12);
        EXPECT_NEAR(f.metric[a][b], dot(f.vectors[a], f.vectors[b]), 1e-12);
      }
    }
  }
}

TEST(Frames, FromReciprocalMatchesFromVectors) {
  auto rng = rng_for("frames-recip");
  const Frame f = build_frame(RefractiveIndex::constant(random_index(rng)), Point5{});
  const Frame g = frame_from_reciprocal(f.reciprocal);
  for (int a = 0; a < kGenerators; ++a) EXPECT_LE(max_abs(g.vectors[a] - f.vectors[a]), 1e-12);
}

TEST(Frames, PositionDependentIndex) {
  RefractiveIndex n{[](const Point5& x) {
    Matrix5 m = identity5();
    m[2][2] = 1.0 + x[0] * x[0];
    return m;
  }};
  EXPECT_EQ(build_frame(n, Point5{0, 0, 0, 0, 0}).vectors[2], basis_vector(2));
  EXPECT_EQ(build_frame(n, Point5{2, 0, 0, 0, 0}).vectors[2], 5.0 * basis_vector(2));
}

TEST(Frames, SingularIndexIsRejected) {
  Matrix5 n = identity5();
  n[3][3] = 0.0;
  EXPECT_THROW(build_frame(RefractiveIndex::constant(n), Point5{}), DomainError);
  std::array<Multivector, kGenerators> dependent;
  for (int a = 0; a < kGenerators; ++a) dependent[a] = basis_vector(a);
  dependent[4] = basis_vector(1) + basis_vector(2);
  EXPECT_THROW(frame_from_vectors(dependent), DomainError);
}

TEST(Frames, SignatureFlipIsReported) {
  Matrix5 n = identity5();
  n[0][0] = 0.1;
  n[1][0] = 1.0;  // g_0 = 0.1 sigma_0 + sigma_1 is spacelike
  EXPECT_FALSE(build_frame(RefractiveIndex::constant(n), Point5{}).signature_preserved());
}

TEST(Frames, JsonDump) {
  Matrix5 n = identity5();
  n[1][1] = 2.0;
  const auto j = nlohmann::json::parse(frame_to_json(build_frame(RefractiveIndex::constant(n), Point5{}), n));
  for (const char* key : {"n", "metric", "inverse_metric", "vectors", "reciprocal", "condition", "signature_preserved"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["metric"][1][1], 4.0);
  EXPECT_EQ(j["vectors"].size(), 5u);
  EXPECT_EQ(j["signature_preserved"], true);
}

TEST(EmFrame, FifthReciprocalVectorCarriesThePotential) {
  const GaugeField field = GaugeField::constant({0.5, -1.0, 2.0, 0.25}, -1.0, 2.0);
  const Frame f = em_frame(field, Point5{});
  Multivector expected = basis_vector(4);
  const double ratio = -0.5;
  const std::array<double, 4> a = {0.5, -1.0, 2.0, 0.25};
  for (int mu = 0; mu < 4; ++mu) {
    EXPECT_EQ(f.reciprocal[mu], reciprocal_vector(mu));
    expected += ratio * a[mu] * reciprocal_vector(mu);
  }
  EXPECT_LE(max_abs(f.reciprocal[4] - expected), 1e-15);
  EXPECT_LE(max_abs(f.vectors[4] - basis_vector(4)), 1e-15);
  for (int mu = 0; mu < 4; ++mu) EXPECT_NEAR(dot(f.reciprocal[4], f.vectors[mu]), 0.0, 1e-15);
  EXPECT_LE(frame_duality_residual(f), 1e-12);
  EXPECT_THROW(em_frame(GaugeField::constant(a, -1.0, 0.0), Point5{}), ContractViolation);
}

TEST(CovariantDerivative, IdentityFrameIsVectorDerivative) {
  auto rng = rng_for("cov-identity");
  const MultivectorField psi = plane_wave(MomentumVector::from_momentum({1, -2, 0.5}, 1.5));
  const Frame f = build_frame(RefractiveIndex::identity(), Point5{});
  for (const Point5& x : random_points(rng, 10)) {
    EXPECT_LE(max_abs(covariant_derivative(psi, f, x, Differentiation::analytic()) -
                      vector_derivative(psi, x, Differentiation::analytic())),
              1e-13);
  }
}

TEST(CovariantDerivative, ExpandsIntoPotentialTerm) {
  auto rng = rng_for("cov-expand");
  const std::array<double, 4> a = {0.3, -0.7, 0.2, 1.1};
  const GaugeField field = GaugeField::constant(a, 1.5, 2.0);
  const MultivectorField psi = plane_wave(MomentumVector::from_momentum({0.5, 1.0, -1.0}, 2.0));
  Multivector potential;
  for (int mu = 0; mu < 4; ++mu) potential += a[mu] * reciprocal_vector(mu);
  for (const Point5& x : random_points(rng, 10)) {
    const auto mode = Differentiation::analytic();
    const Multivector expected =
        vector_derivative(psi, x, mode) + (1.5 / 2.0) * (potential * partial_derivative(psi, x, 4, mode));
    EXPECT_LE(max_abs(covariant_derivative(psi, field, x, mode) - expected), 1e-12);
  }
}

TEST(GaugeTransform, ConstantPhaseLeavesPotential) {
  const std::array<double, 4> a = {0.1, 0.2, 0.3, 0.4};
  const GaugeField field = GaugeField::constant(a, -1.0, 1.0).with_phase(ScalarFunction::constant(0.7));
  const MultivectorField psi = plane_wave(MomentumVector::from_momentum({1, 0, 0}, 1));
  const GaugeTransformed t = gauge_transform(psi, field);
  const Point5 x{0.2, 0.1, -0.3, 0.4, 0.0};
  EXPECT_EQ(t.field.potential(x), a);
  EXPECT_FALSE(t.field.phase.has_value());
  EXPECT_LE(max_abs(t.psi(x) - psi(x) * phase(0.7)), 1e-15);
}

TEST(GaugeTransform, LinearPhaseShiftsPotential) {
  const double c = 0.75;
  const std::array<double, 4> a = {0.1, 0.2, 0.3, 0.4};
  const GaugeField field = GaugeField::constant(a, -1.0, 1.0).with_phase(ScalarFunction::linear(0.0, {0, c, 0, 0, 0}));
  const GaugeTransformed t = gauge_transform(plane_wave(MomentumVector::from_momentum({1, 0, 0}, 1)), field);
  const auto shifted = t.field.potential(Point5{});
  EXPECT_DOUBLE_EQ(shifted[0], a[0]);
  EXPECT_DOUBLE_EQ(shifted[1], a[1] + c);
  EXPECT_DOUBLE_EQ(shifted[2], a[2]);
  EXPECT_DOUBLE_EQ(shifted[3], a[3]);
}

TEST(GaugeTransform, InverseTransformRestores) {
  auto rng = rng_for("gauge-inverse");
  const std::array<double, 4> a = {0.5, -0.2, 0.1, 0.3};
  const std::array<double, 5> slope = {0.4, -0.3, 0.2, 0.9, 0.0};
  const std::array<double, 5> minus = {-0.4, 0.3, -0.2, -0.9, 0.0};
  const MultivectorField psi = plane_wave(MomentumVector::from_momentum({0.2, 0.4, 0.6}, 1.2));
  const GaugeField field = GaugeField::constant(a, 2.0, 1.2).with_phase(ScalarFunction::linear(0.3, slope));
  const GaugeTransformed once = gauge_transform(psi, field);
  const GaugeTransformed twice = gauge_transform(once.psi, once.field.with_phase(ScalarFunction::linear(-0.3, minus)));
  for (const Point5& x : random_points(rng, 5)) {
    EXPECT_LE(max_abs(twice.psi(x) - psi(x)), 1e-14);
    const auto back = twice.field.potential(x);
    for (int mu = 0; mu < 4; ++mu) EXPECT_NEAR(back[mu], a[mu], 1e-15);
  }
}

TEST(GaugeTransform, Preconditions) {
  const MultivectorField psi = plane_wave(MomentumVector::from_momentum({1, 0, 0}, 1));
  const GaugeField no_phase = GaugeField::constant({0, 0, 0, 0}, -1.0, 1.0);
  EXPECT_THROW(gauge_transform(psi, no_phase), ContractViolation);
  const GaugeField neutral = GaugeField::constant({0, 0, 0, 0}, 0.0, 1.0).with_phase(ScalarFunction::constant(1.0));
  EXPECT_THROW(gauge_transform(psi, neutral), ContractViolation);
}

TEST(GaugeTransform, CovariantDerivativeIsCovariant) {
  auto rng = rng_for("gauge-cov");
  const auto mode = Differentiation::richardson(1e-3);
  for (int n = 0; n < 10; ++n) {
    const auto k = testing::random_momentum(rng, 3.0, 3.0);
    std::array<double, 4> a{};
    for (double& c : a) c = rng.uniform(-1, 1);
    std::array<double, 5> slope{};
    for (int mu = 0; mu < 4; ++mu) slope[mu] = rng.uniform(-1, 1);
    const double q = n % 2 == 0 ? -1.0 : 1.5;
    const GaugeField field = GaugeField::constant(a, q, k.mass()).with_phase(ScalarFunction::linear(0.2, slope));
    const auto points = random_points(rng, 3);
    EXPECT_LE(gauge_covariance_residual(plane_wave(k), field, points, mode), 1e-8);
    EXPECT_LE(gauge_covariance_residual(plane_wave(k), field, points, Differentiation::analytic()), 1e-12);
  }
}

TEST(GaugeTransform, UntransformedPotentialBreaksCovariance) {
  const auto k = MomentumVector::from_momentum({1, 0.5, 0}, 1);
  const std::array<double, 5> slope = {0.5, 1.0, -0.5, 0.25, 0.0};
  const GaugeField field = GaugeField::constant({0.2, 0.1, 0, 0}, -1.0, 1.0).with_phase(ScalarFunction::linear(0, slope));
  const MultivectorField psi = plane_wave(k);
  GaugeTransformed broken = gauge_transform(psi, field);
  broken.field = GaugeField::constant({0.2, 0.1, 0, 0}, -1.0, 1.0);
  const std::vector<Point5> points = {Point5{0.1, 0.2, 0.3, 0.4, 0.5}};
  const double r = gauge_covariance_residual(psi, field, broken, points, Differentiation::analytic());
  EXPECT_GT(r, 0.1 * max_abs(psi(points[0])));
}

TEST(PhaseGradient, IdentityHolds) {
  auto rng = rng_for("phase-grad");
  const ScalarFunction beta{[](const Point5& x) { return 0.3 * x[0] * x[0] - 0.2 * x[1] * x[2] + x[3]; },
                            [](const Point5& x) {
                              return std::array<double, 5>{0.6 * x[0], -0.2 * x[2], -0.2 * x[1], 1.0, 0.0};
                            }};
  for (int n = 0; n < 10; ++n) {
    const MultivectorField psi = plane_wave(testing::random_momentum(rng, 3.0, 3.0));
    const auto points = random_points(rng, 3);
    EXPECT_LE(phase_gradient_identity_residual(psi, beta, points, Differentiation::richardson(1e-3)), 1e-8);
  }
}

TEST(PhaseGradient, LocalPhaseSpoilsMonogenicity) {
  const MultivectorField psi = plane_wave(MomentumVector::from_momentum({1, 0, 0}, 1));
  const ScalarFunction beta = ScalarFunction::linear(0.0, {0.0, 0.0, 2.0, 0.0, 0.0});
  const GaugeField carrier = GaugeField::constant({0, 0, 0, 0}, 1.0, 1.0).with_phase(beta);
  const MultivectorField rotated = gauge_transform(psi, carrier).psi;
  const Point5 x{0.1, 0.2, 0.3, 0.4, 0.5};
  EXPECT_LE(max_abs(vector_derivative(psi, x, Differentiation::analytic())), 1e-12);
  EXPECT_GT(max_abs(vector_derivative(rotated, x, Differentiation::analytic())), 0.5);
}

TEST(ScalarFunctions, Gradients) {
  const ScalarFunction f = ScalarFunction::linear(1.0, {1, 2, 3, 4, 5});
  const Point5 x{0.5, 0.5, 0.5, 0.5, 0.5};
  EXPECT_DOUBLE_EQ(f.value(x), 8.5);
  EXPECT_EQ(gradient(f, x, Differentiation::analytic()), (std::array<double, 5>{1, 2, 3, 4, 5}));
  const auto numeric = gradient(f, x, Differentiation::central(1e-3));
  for (int a = 0; a < 5; ++a) EXPECT_NEAR(numeric[a], a + 1.0, 1e-9);
  const ScalarFunction g{[](const Point5& p) { return p[0] * p[0]; }, {}};
  EXPECT_NEAR(gradient(g, x, Differentiation::analytic())[0], 1.0, 1e-8);
  EXPECT_EQ(gradient(ScalarFunction::constant(3.0), x, Differentiation::analytic()), (std::array<double, 5>{}));
}

}  // namespace
}  // namespace g41
