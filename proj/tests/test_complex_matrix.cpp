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

#include "g41/complex_matrix.hpp"
#include "g41/errors.hpp"
#include "test_util.hpp"

namespace g41 {
namespace {

using testing::kI;

ComplexMatrix4 random_matrix(CounterRng& rng) {
  ComplexMatrix4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(r, c) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  }
  return m;
}

TEST(ComplexMatrix, ProductMatchesNaiveLoop) {
  auto rng = testing::rng_for("cm-product");
  const ComplexMatrix4 a = random_matrix(rng);
  const ComplexMatrix4 b = random_matrix(rng);
  const ComplexMatrix4 p = a * b;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      Complex s = 0;
      for (int k = 0; k < 4; ++k) s += a(r, k) * b(k, c);
      EXPECT_LE(std::abs(p(r, c) - s), 1e-15);
    }
  }
}

TEST(ComplexMatrix, AdjointTraceDeterminant) {
  const ComplexMatrix4 d = ComplexMatrix4::diagonal(1.0, 2.0, kI, -3.0);
  EXPECT_EQ(trace(d), Complex(0.0, 1.0));
  EXPECT_LE(std::abs(determinant(d) - Complex(0, -6)), 1e-15);
  EXPECT_EQ(adjoint(d)(2, 2), -kI);
  auto rng = testing::rng_for("cm-det");
  for (int n = 0; n < 20; ++n) {
    const ComplexMatrix4 a = random_matrix(rng);
    const ComplexMatrix4 b = random_matrix(rng);
    EXPECT_LE(std::abs(determinant(a * b) - determinant(a) * determinant(b)), 1e-12);
    EXPECT_LE(std::abs(determinant(adjoint(a)) - std::conj(determinant(a))), 1e-13);
    EXPECT_LE(max_abs(adjoint(a * b) - adjoint(b) * adjoint(a)), 1e-15);
  }
}

TEST(ComplexMatrix, InverseAndSingularity) {
  auto rng = testing::rng_for("cm-inv");
  for (int n = 0; n < 20; ++n) {
    const ComplexMatrix4 a = random_matrix(rng);
    EXPECT_LE(max_abs(a * inverse(a) - ComplexMatrix4::identity()), 1e-11);
  }
  EXPECT_THROW(inverse(ComplexMatrix4::diagonal(1.0, 0.0, 1.0, 1.0)), DomainError);
}

TEST(ComplexMatrix, ExponentialOfDiagonalAndUnitarity) {
  const ComplexMatrix4 d = ComplexMatrix4::diagonal(0.5, -1.0, kI, 2.0);
  const ComplexMatrix4 e = expm(d);
  EXPECT_LE(std::abs(e(0, 0) - std::exp(Complex(0.5))), 1e-14);
  EXPECT_LE(std::abs(e(2, 2) - std::exp(kI)), 1e-14);
  EXPECT_LE(std::abs(e(3, 3) - std::exp(Complex(2.0))), 1e-13);
  EXPECT_EQ(expm(ComplexMatrix4()), ComplexMatrix4::identity());
  // exp(iH) is unitary for self-adjoint H.
  auto rng = testing::rng_for("cm-exp");
  ComplexMatrix4 h = random_matrix(rng);
  h = 0.5 * (h + adjoint(h));
  const ComplexMatrix4 u = expm(kI * h);
  EXPECT_LE(max_abs(adjoint(u) * u - ComplexMatrix4::identity()), 1e-13);
  EXPECT_LE(std::abs(determinant(u) - std::exp(kI * trace(h))), 1e-13);
}

TEST(ComplexMatrix, TextRoundTrip) {
  EXPECT_EQ(format_complex(Complex(0, -1)), "0-1i");
  EXPECT_EQ(format_complex(Complex(1.5, 0)), "1.5+0i");
  EXPECT_EQ(format_complex(Complex(-0.0, -0.0)), "0+0i");
  auto rng = testing::rng_for("cm-text");
  for (int n = 0; n < 20; ++n) {
    const ComplexMatrix4 a = random_matrix(rng);
    EXPECT_EQ(parse_matrix(to_string(a)), a);
  }
  EXPECT_THROW(parse_matrix("1+0i 2"), ParseError);
  EXPECT_THROW(parse_matrix("x"), ParseError);
}

}  // namespace
}  // namespace g41
