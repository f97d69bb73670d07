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

#include "g41/complex_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <utility>

#include "g41/errors.hpp"

namespace g41 {

ComplexMatrix4 ComplexMatrix4::identity() { return diagonal(1.0, 1.0, 1.0, 1.0); }

ComplexMatrix4 ComplexMatrix4::diagonal(std::span<const Complex, kSize> diag) {
  ComplexMatrix4 m;
  for (int k = 0; k < kSize; ++k) m(k, k) = diag[k];
  return m;
}

ComplexMatrix4 ComplexMatrix4::diagonal(Complex d0, Complex d1, Complex d2, Complex d3) {
  const std::array<Complex, kSize> d{d0, d1, d2, d3};
  return diagonal(std::span<const Complex, kSize>(d));
}

ComplexMatrix4& ComplexMatrix4::operator+=(const ComplexMatrix4& rhs) {
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

ComplexMatrix4& ComplexMatrix4::operator-=(const ComplexMatrix4& rhs) {
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

ComplexMatrix4& ComplexMatrix4::operator*=(Complex s) {
  for (Complex& z : entries_) z *= s;
  return *this;
}

ComplexMatrix4 operator*(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  ComplexMatrix4 out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      Complex s = 0.0;
      for (int k = 0; k < 4; ++k) s += a(r, k) * b(k, c);
      out(r, c) = s;
    }
  }
  return out;
}

ComplexMatrix4 adjoint(const ComplexMatrix4& m) {
  ComplexMatrix4 out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out(r, c) = std::conj(m(c, r));
  }
  return out;
}

Complex trace(const ComplexMatrix4& m) { return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3); }

Complex determinant(const ComplexMatrix4& m) {
  ComplexMatrix4 a = m;
  Complex det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    }
    if (a(pivot, col) == Complex(0.0)) return 0.0;
    if (pivot != col) {
      for (int c = 0; c < 4; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < 4; ++r) {
      const Complex f = a(r, col) / a(col, col);
      for (int c = col; c < 4; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

ComplexMatrix4 inverse(const ComplexMatrix4& m) {
  ComplexMatrix4 a = m;
  ComplexMatrix4 inv = ComplexMatrix4::identity();
  const double scale = std::max(max_abs(m), 1e-300);
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    }
    if (std::abs(a(pivot, col)) <= 1e-14 * scale) throw DomainError("inverse: matrix is singular");
    for (int c = 0; c < 4; ++c) {
      std::swap(a(pivot, c), a(col, c));
      std::swap(inv(pivot, c), inv(col, c));
    }
    const Complex p = a(col, col);
    for (int c = 0; c < 4; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const Complex f = a(r, col);
      if (f == Complex(0.0)) continue;
      for (int c = 0; c < 4; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

double max_abs(const ComplexMatrix4& m) {
  double out = 0.0;
  for (const Complex& z : m.entries()) out = std::max(out, std::abs(z));
  return out;
}

double distance(const ComplexMatrix4& a, const ComplexMatrix4& b) { return max_abs(a - b); }

bool is_self_adjoint(const ComplexMatrix4& m, double tol) { return distance(m, adjoint(m)) <= tol; }

bool is_diagonal(const ComplexMatrix4& m, double tol) {
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (r != c && std::abs(m(r, c)) > tol) return false;
    }
  }
  return true;
}

ComplexMatrix4 expm(const ComplexMatrix4& m, double tolerance) {
  const double size = max_abs(m) * 4.0;  // bounds the induced infinity norm
  const int squarings = size > 0.5 ? static_cast<int>(std::ceil(std::log2(size / 0.5))) : 0;
  const ComplexMatrix4 x = m * Complex(std::ldexp(1.0, -squarings));
  ComplexMatrix4 sum = ComplexMatrix4::identity();
  ComplexMatrix4 term = ComplexMatrix4::identity();
  bool converged = false;
  for (int n = 1; n <= 64; ++n) {
    term = term * x * Complex(1.0 / n);
    sum += term;
    if (max_abs(term) <= tolerance * max_abs(sum)) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NumericError("expm: series did not converge");
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

namespace {

std::string shortest(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of negative zero
  char buffer[32];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

Complex parse_entry(std::string_view token) {
  const auto fail = [&] { throw ParseError("matrix entry '" + std::string(token) + "' is not of the form re+imi"); };
  if (token.size() < 2 || token.back() != 'i') fail();
  const std::string_view body = token.substr(0, token.size() - 1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) fail();
  double re = 0.0;
  double im = 0.0;
  const std::string_view re_text = body.substr(0, split);
  std::string_view im_text = body.substr(split);
  const bool im_negative = im_text.front() == '-';
  im_text.remove_prefix(1);
  auto r1 = std::from_chars(re_text.data(), re_text.data() + re_text.size(), re);
  auto r2 = std::from_chars(im_text.data(), im_text.data() + im_text.size(), im);
  if (r1.ec != std::errc() || r1.ptr != re_text.data() + re_text.size() || r2.ec != std::errc() ||
      r2.ptr != im_text.data() + im_text.size()) {
    fail();
  }
  return {re, im_negative ? -im : im};
}

}  // namespace

std::string format_complex(Complex z) {
  const double im = z.imag();
  const bool negative = std::signbit(im) && im != 0.0;
  return shortest(z.real()) + (negative ? "-" : "+") + shortest(std::abs(im)) + "i";
}

std::string to_string(const ComplexMatrix4& m) {
  std::string out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (c > 0) out += ' ';
      out += format_complex(m(r, c));
    }
    out += '\n';
  }
  return out;
}

ComplexMatrix4 parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  ComplexMatrix4 m;
  std::string token;
  int count = 0;
  while (in >> token) {
    if (count == 16) throw ParseError("matrix text has more than 16 entries");
    m(count / 4, count % 4) = parse_entry(token);
    ++count;
  }
  if (count != 16) throw ParseError("matrix text needs 16 entries");
  return m;
}

}  // namespace g41
