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

#include <span>
#include <string>
#include <string_view>

#include "g41/field.hpp"
#include "g41/multivector.hpp"

namespace g41 {

/// Text form: a sum of terms "c*e<indices>", e.g. "1.5*e01 - 2*e4".
///
/// Terms appear in ascending blade order; unit coefficients are omitted
/// ("e01234", "-e4"), the scalar is a plain number and the zero multivector
/// prints as "0". Coefficients use the shortest representation that parses
/// back to the same double.
std::string to_string(const Multivector& a);

/// Parses the text form. Blade indices may appear in any order ("e10" is
/// -e01); repeated terms accumulate. Throws ParseError on malformed input.
Multivector parse_multivector(std::string_view text);

/// Shortest decimal text that parses back to the same double.
std::string format_real(double value);

/// One row per point: "x0 x1 x2 x3 x4 | c_0 ... c_31", coefficients in
/// ascending blade-mask order, rows terminated by newlines.
std::string format_grid(const MultivectorField& field, std::span<const Point5> points);

}  // namespace g41
