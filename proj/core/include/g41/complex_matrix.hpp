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
#include <complex>
#include <span>
#include <string>
#include <string_view>

namespace g41 {

using Complex = std::complex<double>;

/// Dense 4x4 complex matrix, row-major. Target of the G(4,1) isomorphism.
class ComplexMatrix4 {
 public:
  static constexpr int kSize = 4;
  using Entries = std::array<Complex, kSize * kSize>;

  ComplexMatrix4() : entries_{} {}
  explicit ComplexMatrix4(const Entries& entries) : entries_(entries) {}

  static ComplexMatrix4 identity();
  static ComplexMatrix4 diagonal(std::span<const Complex, kSize> diag);
  static ComplexMatrix4 diagonal(Complex d0, Complex d1, Complex d2, Complex d3);

  Complex operator()(int row, int col) const { return entries_[row * kSize + col]; }
  Complex& operator()(int row, int col) { return entries_[row * kSize + col]; }
  const Entries& entries() const { return entries_; }

  ComplexMatrix4& operator+=(const ComplexMatrix4& rhs);
  ComplexMatrix4& operator-=(const ComplexMatrix4& rhs);
  ComplexMatrix4& operator*=(Complex s);

  friend ComplexMatrix4 operator+(ComplexMatrix4 a, const ComplexMatrix4& b) { return a += b; }
  friend ComplexMatrix4 operator-(ComplexMatrix4 a, const ComplexMatrix4& b) { return a -= b; }
  friend ComplexMatrix4 operator-(ComplexMatrix4 a) { return a *= -1.0; }
  friend ComplexMatrix4 operator*(ComplexMatrix4 a, Complex s) { return a *= s; }
  friend ComplexMatrix4 operator*(Complex s, ComplexMatrix4 a) { return a *= s; }
  friend ComplexMatrix4 operator*(const ComplexMatrix4& a, const ComplexMatrix4& b);

  friend bool operator==(const ComplexMatrix4&, const ComplexMatrix4&) = default;

 private:
  Entries entries_;
};

ComplexMatrix4 adjoint(const ComplexMatrix4& m);
Complex trace(const ComplexMatrix4& m);
Complex determinant(const ComplexMatrix4& m);
/// Gauss-Jordan with partial pivoting. Throws DomainError when singular.
ComplexMatrix4 inverse(const ComplexMatrix4& m);

/// Largest entry modulus.
double max_abs(const ComplexMatrix4& m);
double distance(const ComplexMatrix4& a, const ComplexMatrix4& b);
bool is_self_adjoint(const ComplexMatrix4& m, double tol = 0.0);
bool is_diagonal(const ComplexMatrix4& m, double tol = 0.0);

/// Matrix exponential by scaling and squaring of the Taylor series.
ComplexMatrix4 expm(const ComplexMatrix4& m, double tolerance = 1e-16);

/// Row-major "re+imi" entries; entries separated by spaces, rows by newlines.
std::string to_string(const ComplexMatrix4& m);
/// Single entry, e.g. "0-1i".
std::string format_complex(Complex z);
/// Accepts 16 whitespace-separated "re+imi" entries. Throws ParseError.
ComplexMatrix4 parse_matrix(std::string_view text);

}  // namespace g41
