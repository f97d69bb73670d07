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

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <map>

#include "g41/algebra.hpp"
#include "g41/errors.hpp"
#include "g41/field.hpp"
#include "g41/monogenic.hpp"
#include "test_util.hpp"

namespace g41 {
namespace {

using testing::five_point;
using testing::random_momentum;
using testing::random_point;
using testing::rng_for;

TEST(MomentumVector, Construction) {
  const auto k = MomentumVector::from_momentum({3, 0, 0}, 4);
  EXPECT_EQ(k.energy(), 5.0);
  EXPECT_EQ(k.null_defect(), 0.0);
  const auto neg = MomentumVector::from_momentum({3, 0, 0}, 4, EnergySign::negative);
  EXPECT_EQ(neg.energy(), -5.0);
  EXPECT_THROW(MomentumVector::from_momentum({1, 0, 0}, -1), ContractViolation);
  EXPECT_THROW(MomentumVector::from_components(5, {3, 0, 0}, 3.9), ContractViolation);
  EXPECT_NO_THROW(MomentumVector::from_components(5, {3, 0, 0}, 4));
  const Multivector u = k.null_vector();
  EXPECT_EQ(u * u, Multivector());
  EXPECT_EQ(scalar_product(u, u), -25.0 + 9.0 + 16.0);
  const auto cov = k.covector();
  EXPECT_EQ(cov, (std::array<double, 5>{-5, 3, 0, 0, 4}));
}

TEST(PlaneWave, Examples) {
  const auto rest = MomentumVector::from_components(1, {0, 0, 0}, 1);
  EXPECT_EQ(plane_wave(rest)(Point5{}), 1.0 + up({4, 0}));
  const auto k = MomentumVector::from_momentum({3, 0, 0}, 4);
  // psi0 = u sigma^0 with u null.
  EXPECT_EQ(plane_wave_amplitude(k), k.null_vector() * reciprocal_vector(0));
  EXPECT_EQ(plane_wave_amplitude(k), 5.0 + 3.0 * up({1, 0}) + 4.0 * up({4, 0}));
}

TEST(PlaneWave, FactorsIntoHarmonicDependenceOnX4) {
  auto rng = rng_for("pw-factor");
  const Multivector i = Multivector::pseudoscalar();
  for (int n = 0; n < 20; ++n) {
    const auto k = random_momentum(rng);
    const auto psi = plane_wave(k);
    Point5 x = random_point(rng);
    Point5 x0 = x;
    x0[4] = 0.0;
    const double phase = k.mass() * x[4];
    EXPECT_LE(max_abs(psi(x) - psi(x0) * (std::cos(phase) + std::sin(phase) * i)), 1e-12);
  }
}

TEST(PlaneWave, AnalyticPartialsMatchFivePointOracle) {
  auto rng = rng_for("pw-partials");
  for (int n = 0; n < 20; ++n) {
    const auto psi = plane_wave(random_momentum(rng));
    const Point5 x = random_point(rng);
    for (int axis = 0; axis < kGenerators; ++axis) {
      EXPECT_LE(max_abs(psi.partial(x, axis) - five_point(psi, x, axis, 1e-3)), 1e-7);
    }
  }
}

TEST(VectorDerivative, Examples) {
  const Point5 x{0.3, -0.1, 0.2, 0.7, -0.4};
  const MultivectorField c = constant_field(2.0 + basis_vector(3));
  EXPECT_EQ(vector_derivative(c, x, Differentiation::analytic()), Multivector());
  EXPECT_EQ(vector_derivative(c, x, Differentiation::central(1e-3)), Multivector());

  MultivectorField lin;
  lin.value = [](const Point5& p) { return p[1] * basis_vector(2); };
  EXPECT_LE(max_abs(vector_derivative(lin, x, Differentiation::central(1e-3)) - basis_vector(1) * basis_vector(2)),
            1e-12);
  lin.partial = [](const Point5&, int axis) { return axis == 1 ? basis_vector(2) : Multivector(); };
  EXPECT_EQ(vector_derivative(lin, x, Differentiation::analytic()), basis_vector(1) * basis_vector(2));
}

TEST(VectorDerivative, PlaneWavesAreMonogenic) {
  auto rng = rng_for("pw-monogenic");
  for (int n = 0; n < 10; ++n) {
    const auto psi = plane_wave(random_momentum(rng));
    const auto pts = testing::random_points(rng, 100);
    EXPECT_LE(monogenic_residual(psi, pts, Differentiation::analytic()), 1e-10);
    EXPECT_LE(monogenic_residual(psi, std::span(pts).first(5), Differentiation::richardson(1e-3)), 1e-8);
  }
}

TEST(VectorDerivative, SplitsIntoTimeAndFourSpaceParts) {
  auto rng = rng_for("split");
  const auto psi = plane_wave(random_momentum(rng));
  const Point5 x = random_point(rng);
  const auto mode = Differentiation::analytic();
  const Multivector whole = vector_derivative(psi, x, mode);
  const Multivector split =
      -1.0 * basis_vector(0) * psi.partial(x, 0) + vector_derivative(psi, x, mode, Axes::fourspace);
  EXPECT_LE(max_abs(whole - split), 1e-13);
  EXPECT_LE(max_abs(vector_derivative(psi, x, mode, Axes::spacetime) + basis_vector(4) * psi.partial(x, 4) - whole),
            1e-13);
}

TEST(VectorDerivative, Errors) {
  MultivectorField nan_field;
  nan_field.value = [](const Point5& p) {
    return p[2] > 0.0 ? Multivector::scalar(std::numeric_limits<double>::quiet_NaN()) : Multivector();
  };
  EXPECT_THROW(vector_derivative(nan_field, Point5{}, Differentiation::central(1e-3)), NumericError);
  EXPECT_THROW(vector_derivative(nan_field, Point5{}, Differentiation::analytic()), ContractViolation);
}

TEST(Laplacian, Examples) {
  auto rng = rng_for("laplacian");
  for (int n = 0; n < 20; ++n) {
    const auto psi = plane_wave(random_momentum(rng));
    EXPECT_LE(magnitude(laplacian(psi, random_point(rng), Differentiation::richardson(1e-3))), 1e-6);
  }
  MultivectorField t2;
  t2.value = [](const Point5& p) { return Multivector::scalar(p[0] * p[0]); };
  EXPECT_NEAR(laplacian(t2, Point5{0.4, 1, 2, 3, 4}, Differentiation::central(1e-3)).scalar_part(), -2.0, 1e-6);
}

TEST(Laplacian, NonNullWaveLeavesDefectTimesField) {
  auto rng = rng_for("laplacian-defect");
  for (int n = 0; n < 10; ++n) {
    const auto k = random_momentum(rng, 2.0, 2.0);
    double delta = rng.uniform(-1.0, 1.0);
    if (k.energy() * k.energy() + delta <= 0.0) delta = -delta;
    // Shift the energy so E^2 - p^2 - m^2 = delta.
    const double e = std::sqrt(k.energy() * k.energy() + delta);
    const auto& p = k.momentum();
    const auto psi = harmonic_field(plane_wave_amplitude(k), {-e, p[0], p[1], p[2], k.mass()});
    const Point5 x = random_point(rng);
    const Multivector lap = laplacian(psi, x, Differentiation::richardson(1e-3));
    EXPECT_LE(magnitude(lap - delta * psi(x)), 1e-6 * (1.0 + magnitude(psi(x))));
  }
}

TEST(FiniteDifferences, CentralIsSecondOrder) {
  auto rng = rng_for("order");
  for (int n = 0; n < 20; ++n) {
    const auto psi = plane_wave(random_momentum(rng));
    const Point5 x = random_point(rng);
    const Multivector exact = vector_derivative(psi, x, Differentiation::analytic());
    const double coarse = magnitude(vector_derivative(psi, x, Differentiation::central(1e-2)) - exact);
    const double fine = magnitude(vector_derivative(psi, x, Differentiation::central(5e-3)) - exact);
    EXPECT_GE(std::log2(coarse / fine), 1.9);
    const double rich = magnitude(vector_derivative(psi, x, Differentiation::richardson(1e-2)) - exact);
    EXPECT_LT(rich, coarse);
  }
}

TEST(NullVector, AnnihilatesAmplitudeExactly) {
  const std::array<std::array<double, 5>, 5> momenta = {
      {{5, 3, 0, 0, 4}, {3, 1, 2, 2, 0}, {9, 2, 4, 5, 6}, {-7, 2, 3, 6, 0}, {2, 1, 1, 1, 1}}};
  for (const auto& c : momenta) {
    const auto k = MomentumVector::from_components(c[0], {c[1], c[2], c[3]}, c[4]);
    EXPECT_EQ(k.null_vector() * plane_wave_amplitude(k), Multivector());
  }
}

TEST(PhaseSigns, ExactlyOneConventionIsMonogenic) {
  auto rng = rng_for("signs");
  const auto pts = testing::random_points(rng, 3);
  for (int n = 0; n < 50; ++n) {
    auto k = random_momentum(rng);
    if (k.momentum_norm() < 0.1 || k.mass() < 0.1) continue;
    const auto& p = k.momentum();
    int count = 0;
    for (double se : {1.0, -1.0}) {
      for (double sm : {1.0, -1.0}) {
        const auto f = harmonic_field(plane_wave_amplitude(k), {-se * k.energy(), p[0], p[1], p[2], sm * k.mass()});
        const bool mono = monogenic_residual(f, pts, Differentiation::analytic()) <= 1e-10;
        count += mono ? 1 : 0;
        if (mono) {
          EXPECT_EQ(se, 1.0);
          EXPECT_EQ(sm, 1.0);
        }
      }
    }
    EXPECT_EQ(count, 1);
  }
}

// ---------------------------------------------------------------- polynomials

using Monomial = std::array<int, 3>;

std::vector<Monomial> monomials(int degree) {
  std::vector<Monomial> out;
  for (int a = degree; a >= 0; --a) {
    for (int b = degree - a; b >= 0; --b) out.push_back({a, b, degree - a - b});
  }
  return out;
}

/// Rank of sigma^m d_m on even-valued homogeneous polynomials, assembled
/// independently of the library.
std::pair<int, int> oracle_rank_and_domain(int degree) {
  const std::array<unsigned, 4> even = {0b0000, 0b0110, 0b1010, 0b1100};
  const auto domain = monomials(degree);
  const auto image = degree > 0 ? monomials(degree - 1) : std::vector<Monomial>{};
  std::map<Monomial, int> row_of;
  for (std::size_t i = 0; i < image.size(); ++i) row_of[image[i]] = static_cast<int>(i);
  const int cols = static_cast<int>(domain.size() * even.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(std::max<int>(1, static_cast<int>(image.size()) * kBlades), cols);
  int col = 0;
  for (const auto& mono : domain) {
    for (unsigned blade : even) {
      for (int m = 0; m < 3; ++m) {
        if (mono[m] == 0) continue;
        Monomial lower = mono;
        --lower[m];
        const Multivector v = mono[m] * (basis_vector(m + 1) * Multivector::blade(BladeIndex(blade)));
        for (unsigned b = 0; b < kBlades; ++b) a(row_of[lower] * kBlades + b, col) += v.coeff(b);
      }
      ++col;
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  lu.setThreshold(1e-10);
  return {static_cast<int>(lu.rank()), cols};
}

bool in_spatial_even_subalgebra(const Multivector& v, double tol) {
  for (unsigned b = 0; b < kBlades; ++b) {
    const bool allowed = b == 0 || b == 0b00110 || b == 0b01010 || b == 0b01100;
    if (!allowed && std::abs(v.coeff(b)) > tol) return false;
  }
  return true;
}

bool only_scalar_and_e12(const Multivector& v, double tol) {
  for (unsigned b = 0; b < kBlades; ++b) {
    if (b != 0 && b != 0b00110 && std::abs(v.coeff(b)) > tol) return false;
  }
  return true;
}

TEST(MonogenicPolynomials, NullityMatchesRankOracle) {
  // Regression constants: nullity 4 (d + 1).
  const std::array<int, 4> expected = {4, 8, 12, 16};
  for (int d = 0; d <= 3; ++d) {
    const auto [rank, cols] = oracle_rank_and_domain(d);
    const MonogenicBasis basis = monogenic_polynomials_3d(d);
    EXPECT_EQ(basis.rank, rank) << d;
    EXPECT_EQ(static_cast<int>(basis.fields.size()), cols - rank) << d;
    EXPECT_EQ(static_cast<int>(basis.fields.size()), expected[d]) << d;
  }
}

TEST(MonogenicPolynomials, DegreeZeroIsAllEvenConstants) {
  const MonogenicBasis basis = monogenic_polynomials_3d(0);
  ASSERT_EQ(basis.fields.size(), 4u);
  Eigen::Matrix4d span;
  for (int j = 0; j < 4; ++j) {
    const Multivector v = basis.fields[j].polynomial.value(Point5{});
    const std::array<unsigned, 4> even = {0b0000, 0b0110, 0b1010, 0b1100};
    for (int r = 0; r < 4; ++r) span(r, j) = v.coeff(even[r]);
    EXPECT_EQ(max_abs(vector_derivative(basis.fields[j].polynomial.field(), Point5{}, Differentiation::analytic())),
              0.0);
  }
  EXPECT_GT(std::abs(span.determinant()), 1e-6);
}

TEST(MonogenicPolynomials, EveryFieldIsSpatiallyMonogenic) {
  auto rng = rng_for("poly");
  for (int d = 0; d <= 3; ++d) {
    const MonogenicBasis basis = monogenic_polynomials_3d(d);
    for (const auto& f : basis.fields) {
      const MultivectorField field = f.polynomial.field();
      for (int n = 0; n < 50; ++n) {
        const Point5 x = random_point(rng);
        EXPECT_LE(magnitude(vector_derivative(field, x, Differentiation::analytic(), Axes::spatial)), 1e-10);
        Multivector oracle;
        for (int m = 1; m <= 3; ++m) oracle += basis_vector(m) * five_point(field, x, m, 1e-2);
        EXPECT_LE(magnitude(oracle), 1e-10);
        EXPECT_TRUE(in_spatial_even_subalgebra(field(x), 1e-12));
        if (f.scalar_plus_e12) EXPECT_TRUE(only_scalar_and_e12(field(x), 1e-12));
      }
    }
  }
}

TEST(MonogenicPolynomials, FlaggedFieldsComeFirst) {
  for (int d = 0; d <= 3; ++d) {
    const MonogenicBasis basis = monogenic_polynomials_3d(d);
    bool seen_unflagged = false;
    for (const auto& f : basis.fields) {
      if (!f.scalar_plus_e12) seen_unflagged = true;
      EXPECT_FALSE(seen_unflagged && f.scalar_plus_e12);
    }
  }
  EXPECT_EQ(monogenic_polynomials_3d(0).flagged_count(), 2);
  EXPECT_EQ(monogenic_polynomials_3d(1).flagged_count(), 2);
}

TEST(MonogenicPolynomials, UnsupportedDegree) {
  EXPECT_THROW(monogenic_polynomials_3d(4), ContractViolation);
  EXPECT_THROW(monogenic_polynomials_3d(-1), ContractViolation);
}

// ---------------------------------------------------------------- wavepackets

TEST(Wavepacket, ConstantFactorGivesPureRestFrameWave) {
  const MultivectorField packet = separable_wavepacket(constant_field(Multivector::scalar(1.0)), 2.0, 2.0);
  const MultivectorField wave = plane_wave(MomentumVector::from_components(2.0, {0, 0, 0}, 2.0));
  auto rng = rng_for("packet-const");
  for (int n = 0; n < 20; ++n) {
    const Point5 x = random_point(rng);
    EXPECT_LE(max_abs(packet(x) - wave(x)), 1e-14);
  }
}

TEST(Wavepacket, FlaggedFactorGivesMonogenicPacket) {
  auto rng = rng_for("packet");
  const MonogenicBasis basis = monogenic_polynomials_3d(1);
  ASSERT_GE(basis.flagged_count(), 1);
  for (int j = 0; j < basis.flagged_count(); ++j) {
    const MultivectorField packet = separable_wavepacket(basis.fields[j].polynomial.field(), 1.5, 1.5);
    const auto pts = testing::random_points(rng, 20);
    EXPECT_LE(monogenic_residual(packet, pts, Differentiation::analytic()), 1e-9);
    for (const Point5& x : std::span(pts).first(5)) {
      Multivector oracle;
      for (int a = 0; a < kGenerators; ++a) oracle += reciprocal_vector(a) * five_point(packet, x, a, 1e-3);
      EXPECT_LE(magnitude(oracle), 1e-9);
    }
  }
}

TEST(Wavepacket, NonMonogenicFactorIsNegativeControl) {
  Polynomial3 x1({{{1, 0, 0}, Multivector::scalar(1.0)}});
  const MultivectorField packet = separable_wavepacket(x1.field(), 1.0, 1.0);
  auto rng = rng_for("packet-neg");
  for (int n = 0; n < 10; ++n) {
    const Point5 x = random_point(rng);
    const double r = magnitude(vector_derivative(packet, x, Differentiation::analytic()));
    EXPECT_GT(r, 0.1 * magnitude(packet(x)));
  }
}

TEST(Wavepacket, RejectsFactorsThatDoNotCommuteWithSigma0AndSigma4) {
  EXPECT_THROW(separable_wavepacket(constant_field(basis_vector(1)), 1.0, 1.0), ContractViolation);
  EXPECT_THROW(separable_wavepacket(constant_field(basis_vector(1) * basis_vector(4)), 1.0, 1.0), ContractViolation);
  EXPECT_THROW(separable_wavepacket(constant_field(basis_vector(0)), 1.0, 1.0), ContractViolation);
  EXPECT_NO_THROW(separable_wavepacket(constant_field(basis_vector(1) * basis_vector(2)), 1.0, 1.0));
}

}  // namespace
}  // namespace g41
