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

#include <bit>
#include <cstdint>
#include <string>

namespace g41 {

inline constexpr int kGenerators = 5;
inline constexpr int kBlades = 32;

/// Metric sign of generator k under the (-++++) signature.
constexpr int metric_sign(int generator) { return generator == 0 ? -1 : 1; }

/// Basis blade of G(4,1) as a 5-bit set over the generators {0,1,2,3,4}.
/// Bit k set means sigma_k is a factor; factors are kept in ascending order.
class BladeIndex {
 public:
  constexpr BladeIndex() = default;
  constexpr explicit BladeIndex(unsigned mask) : mask_(static_cast<std::uint8_t>(mask & 31u)) {}

  static constexpr BladeIndex scalar() { return BladeIndex(0); }
  static constexpr BladeIndex pseudoscalar() { return BladeIndex(31); }
  static constexpr BladeIndex generator(int k) { return BladeIndex(1u << k); }

  constexpr unsigned mask() const { return mask_; }
  constexpr int grade() const { return std::popcount(static_cast<unsigned>(mask_)); }
  constexpr bool contains(int k) const { return (mask_ >> k) & 1u; }

  friend constexpr bool operator==(BladeIndex, BladeIndex) = default;
  friend constexpr auto operator<=>(BladeIndex, BladeIndex) = default;

 private:
  std::uint8_t mask_ = 0;
};

struct BladeProduct {
  int sign;
  BladeIndex blade;
};

/// sigma_a * sigma_b = sign * sigma_{a xor b}.
///
/// The sign collects one factor of -1 for every transposition needed to move
/// the factors of b past those of a into ascending order, and the metric
/// sign for every generator the two blades share.
constexpr BladeProduct blade_product(BladeIndex a, BladeIndex b) {
  unsigned am = a.mask();
  const unsigned bm = b.mask();
  int swaps = 0;
  for (am >>= 1; am != 0; am >>= 1) swaps += std::popcount(am & bm);
  int sign = (swaps & 1) ? -1 : 1;
  if (a.mask() & b.mask() & 1u) sign = -sign;
  return {sign, BladeIndex(a.mask() ^ b.mask())};
}

/// Sign picked up by reversion of a grade-r blade: (-1)^(r(r-1)/2).
constexpr int reversion_sign(int grade) { return ((grade * (grade - 1) / 2) & 1) ? -1 : 1; }

/// "1" for the scalar, otherwise "e" followed by the ascending generator indices.
std::string blade_name(BladeIndex blade);

}  // namespace g41
