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

#include "g41/projectors.hpp"

#include <algorithm>
#include <cmath>

#include "g41/errors.hpp"
#include "g41/matrix_rep.hpp"

namespace g41 {
namespace {

constexpr Complex I{0.0, 1.0};

IdempotentSet quadruple(const Multivector& a, const Multivector& b, const std::array<std::array<int, 2>, 4>& signs,
                        IdempotentSet::Kind kind) {
  IdempotentSet set;
  set.kind = kind;
  for (std::size_t k = 0; k < 4; ++k) {
    set.elements[k] = 0.25 * ((1.0 + signs[k][0] * a) * (1.0 + signs[k][1] * b));
  }
  return set;
}

std::array<ComplexMatrix4, 15> make_generators() {
  const double s3 = 1.0 / std::sqrt(3.0);
  const double s6 = 1.0 / std::sqrt(6.0);
  std::array<ComplexMatrix4, 15> g;
  auto sym = [](int r, int c) {
    ComplexMatrix4 m;
    m(r, c) = 1.0;
    m(c, r) = 1.0;
    return m;
  };
  auto anti = [](int r, int c) {
    ComplexMatrix4 m;
    m(r, c) = -I;
    m(c, r) = I;
    return m;
  };
  g[0] = sym(0, 1);
  g[1] = anti(0, 1);
  g[2] = ComplexMatrix4::diagonal(1.0, -1.0, 0.0, 0.0);
  g[3] = sym(1, 2);
  g[4] = anti(1, 2);
  g[5] = sym(0, 2);
  g[6] = anti(0, 2);
  g[7] = ComplexMatrix4::diagonal(s3, s3, -2.0 * s3, 0.0);
  g[8] = sym(0, 3);
  g[9] = anti(0, 3);
  g[10] = sym(1, 3);
  g[11] = anti(1, 3);
  g[12] = sym(2, 3);
  g[13] = anti(2, 3);
  g[14] = ComplexMatrix4::diagonal(s6, s6, s6, -3.0 * s6);
  return g;
}

}  // namespace

IdempotentSet build_f_set() {
  return quadruple(up({3}), up({0, 4}), {{{-1, -1}, {-1, 1}, {1, 1}, {1, -1}}}, IdempotentSet::Kind::f_set);
}

IdempotentSet build_e_set() {
  return quadruple(up({0, 1, 2}), up({0, 3, 4}), {{{1, 1}, {1, -1}, {-1, -1}, {-1, 1}}},
                   IdempotentSet::Kind::e_set);
}

double IdempotentDefects::worst() const { return std::max({idempotency, orthogonality, completeness}); }

IdempotentDefects idempotent_defects(const IdempotentSet& set) {
  IdempotentDefects d;
  Multivector sum;
  for (std::size_t i = 0; i < 4; ++i) {
    const Multivector& fi = set.elements[i];
    d.idempotency = std::max(d.idempotency, distance(fi * fi, fi));
    for (std::size_t j = 0; j < 4; ++j) {
      if (i != j) d.orthogonality = std::max(d.orthogonality, max_abs(fi * set.elements[j]));
    }
    sum += fi;
  }
  d.completeness = distance(sum, Multivector::scalar(1.0));
  return d;
}

Multivector energy_idempotent(Sign sign) { return 0.5 * (1.0 + (sign == Sign::plus ? 1.0 : -1.0) * up({4, 0})); }

Multivector helicity_idempotent(Sign sign) { return 0.5 * (1.0 + (sign == Sign::plus ? 1.0 : -1.0) * up({3})); }

ComplexMatrix4 energy_project(const ComplexMatrix4& psi_bar, Sign sign) { return psi_bar * phi(energy_idempotent(sign)); }

ComplexMatrix4 helicity_project(const ComplexMatrix4& psi_bar, Sign sign) {
  return psi_bar * phi(helicity_idempotent(sign));
}

DiagonalGenerators idempotents_to_generators(const IdempotentSet& set) {
  detail::require(idempotent_defects(set).worst() <= 1e-10, "idempotents_to_generators: not an orthogonal idempotent set");
  const auto& f = set.elements;
  return {f[0] - f[1], (f[0] + f[1] - 2.0 * f[2]) / std::sqrt(3.0),
          (f[0] + f[1] + f[2] - 3.0 * f[3]) / std::sqrt(6.0)};
}

std::array<Multivector, 4> generators_to_idempotents(const DiagonalGenerators& g) {
  const double r3 = std::sqrt(3.0);
  const double r6 = std::sqrt(6.0);
  const Multivector common = g.lambda8 / (2.0 * r3) + g.lambda15 / (2.0 * r6);
  return {0.25 + g.lambda3 / 2.0 + common, 0.25 - g.lambda3 / 2.0 + common,
          0.25 - g.lambda8 / r3 + g.lambda15 / (2.0 * r6), 0.25 - 3.0 * g.lambda15 / (2.0 * r6)};
}

std::array<ComplexMatrix4, 4> generators_to_idempotents(const ComplexMatrix4& l3, const ComplexMatrix4& l8,
                                                        const ComplexMatrix4& l15) {
  const double r3 = std::sqrt(3.0);
  const double r6 = std::sqrt(6.0);
  const ComplexMatrix4 quarter = 0.25 * ComplexMatrix4::identity();
  const ComplexMatrix4 common = (1.0 / (2.0 * r3)) * l8 + (1.0 / (2.0 * r6)) * l15;
  return {quarter + 0.5 * l3 + common, quarter - 0.5 * l3 + common,
          quarter - (1.0 / r3) * l8 + (1.0 / (2.0 * r6)) * l15, quarter - (3.0 / (2.0 * r6)) * l15};
}

const ComplexMatrix4& su4_generator(int k) {
  static const std::array<ComplexMatrix4, 15> kGenerators = make_generators();
  detail::require(k >= 1 && k <= 15, "su4_generator: index must lie in [1, 15]");
  return kGenerators[static_cast<std::size_t>(k - 1)];
}

std::array<int, 4> diagonalizing_permutation(const IdempotentSet& set) {
  std::array<int, 4> perm{};
  std::array<bool, 4> used{};
  for (std::size_t i = 0; i < 4; ++i) {
    const ComplexMatrix4 m = phi(set.elements[i]);
    detail::require(is_diagonal(m), "diagonalizing_permutation: image is not diagonal");
    int slot = -1;
    for (int k = 0; k < 4; ++k) {
      if (m(k, k) == Complex(1.0)) {
        detail::require(slot < 0, "diagonalizing_permutation: image has rank above one");
        slot = k;
      } else {
        detail::require(m(k, k) == Complex(0.0), "diagonalizing_permutation: image is not a 0/1 matrix");
      }
    }
    detail::require(slot >= 0 && !used[static_cast<std::size_t>(slot)], "diagonalizing_permutation: not a permutation");
    used[static_cast<std::size_t>(slot)] = true;
    perm[i] = slot;
  }
  return perm;
}

ComplexMatrix4 permute(const ComplexMatrix4& m, const std::array<int, 4>& perm) {
  ComplexMatrix4 out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out(r, c) = m(perm[r], perm[c]);
  }
  return out;
}

bool Su4Report::ok() const {
  return std::all_of(findings.begin(), findings.end(), [](const Su4Finding& f) { return f.passed(); });
}

double Su4Report::worst_ratio() const {
  double worst = 0.0;
  for (const auto& f : findings) {
    if (f.tolerance > 0.0) {
      worst = std::max(worst, f.residual / f.tolerance);
    } else if (f.residual > 0.0) {
      return INFINITY;
    }
  }
  return worst;
}

Su4Report verify_su4_generators() {
  Su4Report report;
  auto add = [&](std::string name, double residual, double tolerance) {
    report.findings.push_back({std::move(name), residual, tolerance});
  };
  for (int k = 1; k <= 15; ++k) {
    const ComplexMatrix4& l = su4_generator(k);
    const std::string id = "lambda" + std::to_string(k);
    add(id + " self-adjoint", distance(l, adjoint(l)), 0.0);
    add(id + " traceless", std::abs(trace(l)), 0.0);
    for (double theta : {0.0, 0.3, 1.0}) {
      const ComplexMatrix4 u = expm(Complex(0.0, theta) * l);
      const std::string tag = id + " exp(i*" + std::to_string(theta).substr(0, 3) + "*lambda)";
      add(tag + " unitary", distance(adjoint(u) * u, ComplexMatrix4::identity()), 1e-12);
      add(tag + " det=1", std::abs(determinant(u) - 1.0), 1e-12);
    }
  }

  const IdempotentSet f = build_f_set();
  const auto perm = diagonalizing_permutation(f);
  const ComplexMatrix4& l3 = su4_generator(3);
  const ComplexMatrix4& l8 = su4_generator(8);
  const ComplexMatrix4& l15 = su4_generator(15);
  const auto forward = generators_to_idempotents(l3, l8, l15);
  for (std::size_t i = 0; i < 4; ++i) {
    add("f" + std::to_string(i + 1) + " from diagonal generators", distance(permute(phi(f.elements[i]), perm), forward[i]),
        1e-14);
  }
  const DiagonalGenerators back = idempotents_to_generators(f);
  add("lambda3 from f-set", distance(permute(phi(back.lambda3), perm), l3), 1e-14);
  add("lambda8 from f-set", distance(permute(phi(back.lambda8), perm), l8), 1e-14);
  add("lambda15 from f-set", distance(permute(phi(back.lambda15), perm), l15), 1e-14);
  return report;
}

}  // namespace g41
