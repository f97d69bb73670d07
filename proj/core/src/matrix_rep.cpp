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

#include "g41/matrix_rep.hpp"

#include <array>

#include "g41/errors.hpp"

namespace g41 {
namespace {

constexpr Complex I{0.0, 1.0};

ComplexMatrix4 rows(std::array<Complex, 16> e) { return ComplexMatrix4(e); }

DiracPauliBasis make_dirac_pauli() {
  DiracPauliBasis b;
  b.alpha1 = rows({0, 0, 0, 1,  //
                   0, 0, 1, 0,  //
                   0, 1, 0, 0,  //
                   1, 0, 0, 0});
  b.alpha2 = rows({0, 0, 0, -I,  //
                   0, 0, I, 0,   //
                   0, -I, 0, 0,  //
                   I, 0, 0, 0});
  b.alpha3 = rows({0, 0, 1, 0,   //
                   0, 0, 0, -1,  //
                   1, 0, 0, 0,   //
                   0, -1, 0, 0});
  b.beta = ComplexMatrix4::diagonal(1.0, 1.0, -1.0, -1.0);
  return b;
}

struct Images {
  std::array<ComplexMatrix4, kGenerators> generators;
  std::array<ComplexMatrix4, kBlades> blades;
};

Images make_images() {
  Images im;
  for (int k = 0; k < kGenerators; ++k) {
    im.generators[k] = k == 0 ? sigma_matrix(0) : -sigma_matrix(k);
  }
  for (unsigned mask = 0; mask < kBlades; ++mask) {
    ComplexMatrix4 m = ComplexMatrix4::identity();
    for (int k = 0; k < kGenerators; ++k) {
      if ((mask >> k) & 1u) m = m * im.generators[k];
    }
    im.blades[mask] = m;
  }
  return im;
}

const Images& images() {
  static const Images kImages = make_images();
  return kImages;
}

// tr(a b) without forming the product.
Complex trace_of_product(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  Complex s = 0.0;
  for (int r = 0; r < 4; ++r) {
    for (int k = 0; k < 4; ++k) s += a(r, k) * b(k, r);
  }
  return s;
}

}  // namespace

const ComplexMatrix4& DiracPauliBasis::alpha(int m) const {
  switch (m) {
    case 1:
      return alpha1;
    case 2:
      return alpha2;
    case 3:
      return alpha3;
    default:
      throw ContractViolation("alpha index must be 1, 2 or 3");
  }
}

const DiracPauliBasis& DiracPauliBasis::standard() {
  static const DiracPauliBasis kBasis = make_dirac_pauli();
  return kBasis;
}

ComplexMatrix4 sigma_matrix(int alpha) {
  const auto& d = DiracPauliBasis::standard();
  switch (alpha) {
    case 0:
      return I * d.alpha1 * d.alpha2 * d.alpha3 * d.beta;
    case 1:
      return -I * d.alpha2 * d.alpha3 * d.beta;
    case 2:
      return I * d.alpha1 * d.alpha3 * d.beta;
    case 3:
      return -I * d.alpha1 * d.alpha2 * d.beta;
    case 4:
      return I * d.alpha1 * d.alpha2 * d.alpha3;
    default:
      throw ContractViolation("sigma_matrix: index must lie in [0, 4]");
  }
}

const ComplexMatrix4& generator_image(int alpha) {
  detail::require(alpha >= 0 && alpha < kGenerators, "generator_image: index must lie in [0, 4]");
  return images().generators[alpha];
}

const ComplexMatrix4& blade_image(BladeIndex blade) { return images().blades[blade.mask()]; }

ComplexMatrix4 phi(const Multivector& a) {
  ComplexMatrix4 out;
  for (unsigned i = 0; i < kBlades; ++i) {
    const double c = a.coeff(i);
    if (c != 0.0) out += c * images().blades[i];
  }
  return out;
}

Multivector phi_inv(const ComplexMatrix4& m) {
  Multivector out;
  const BladeIndex pseudo = BladeIndex::pseudoscalar();
  for (unsigned i = 0; i < kBlades; ++i) {
    const BladeIndex blade(i);
    if (blade.grade() > 2) continue;
    // e_A^-1 = e_A / e_A^2 and every blade squares to +-1.
    const double square = blade_product(blade, blade).sign;
    const Complex z = trace_of_product(images().blades[i], m) / (4.0 * square);
    out.coeff(i) = z.real();
    // i e_A = s e_{A'} with A' the complementary blade.
    const auto [s, dual] = blade_product(pseudo, blade);
    out.coeff(dual.mask()) = s * z.imag();
  }
  return out;
}

}  // namespace g41
