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

#include "g41/multivector.hpp"

#include <algorithm>
#include <cmath>

#include "g41/errors.hpp"

namespace g41 {
namespace {

struct ProductTable {
  std::array<std::array<signed char, kBlades>, kBlades> sign{};
};

constexpr ProductTable make_product_table() {
  ProductTable t;
  for (unsigned a = 0; a < kBlades; ++a) {
    for (unsigned b = 0; b < kBlades; ++b) {
      t.sign[a][b] = static_cast<signed char>(blade_product(BladeIndex(a), BladeIndex(b)).sign);
    }
  }
  return t;
}

constexpr ProductTable kProductTable = make_product_table();

}  // namespace

std::string blade_name(BladeIndex blade) {
  if (blade.mask() == 0) return "1";
  std::string name = "e";
  for (int k = 0; k < kGenerators; ++k) {
    if (blade.contains(k)) name += static_cast<char>('0' + k);
  }
  return name;
}

Multivector Multivector::vector(std::span<const double, kGenerators> components) {
  Multivector m;
  for (int k = 0; k < kGenerators; ++k) m.coeffs_[1u << k] = components[k];
  return m;
}

Multivector Multivector::vector(std::initializer_list<double> components) {
  detail::require(components.size() == kGenerators, "Multivector::vector needs 5 components");
  std::array<double, kGenerators> c{};
  std::copy(components.begin(), components.end(), c.begin());
  return vector(std::span<const double, kGenerators>(c));
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  for (int k = 0; k < kBlades; ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  for (int k = 0; k < kBlades; ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

Multivector& Multivector::operator/=(double s) {
  for (double& c : coeffs_) c /= s;
  return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  Multivector out;
  for (unsigned i = 0; i < kBlades; ++i) {
    const double ai = a.coeffs_[i];
    if (ai == 0.0) continue;
    const auto& row = kProductTable.sign[i];
    for (unsigned j = 0; j < kBlades; ++j) {
      const double bj = b.coeffs_[j];
      if (bj == 0.0) continue;
      out.coeffs_[i ^ j] += row[j] * ai * bj;
    }
  }
  return out;
}

Multivector up(std::initializer_list<int> indices) {
  Multivector m = Multivector::scalar(1.0);
  for (int alpha : indices) {
    detail::require(alpha >= 0 && alpha < kGenerators, "generator index out of range");
    m = m * reciprocal_vector(alpha);
  }
  return m;
}

double max_abs(const Multivector& a) {
  double m = 0.0;
  for (double c : a.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

double magnitude(const Multivector& a) {
  double s = 0.0;
  for (double c : a.coeffs()) s += c * c;
  return std::sqrt(s);
}

double distance(const Multivector& a, const Multivector& b) { return max_abs(a - b); }

}  // namespace g41
