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

#include "g41/multivector_io.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "g41/errors.hpp"

namespace g41 {
namespace {

std::string shortest(double value) { return format_real(value); }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Multivector parse() {
    Multivector result;
    skip_spaces();
    if (done()) fail("empty input");
    bool first = true;
    while (!done()) {
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1.0 : 1.0;
        skip_spaces();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      const auto [coeff, blade_sign, blade] = term();
      result.coeff(blade.mask()) += sign * coeff * blade_sign;
      first = false;
      skip_spaces();
    }
    return result;
  }

 private:
  struct Term {
    double coeff;
    int blade_sign;
    BladeIndex blade;
  };

  Term term() {
    if (at_blade()) {
      const auto [sign, blade] = blade_token();
      return {1.0, sign, blade};
    }
    double value = 0.0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || !std::isfinite(value)) fail("expected a number or blade");
    pos_ += static_cast<std::size_t>(ptr - begin);
    skip_spaces();
    if (!done() && peek() == '*') {
      take();
      skip_spaces();
      if (!at_blade()) fail("expected a blade after '*'");
      const auto [sign, blade] = blade_token();
      return {value, sign, blade};
    }
    return {value, 1, BladeIndex::scalar()};
  }

  bool at_blade() const {
    return pos_ + 1 < text_.size() && text_[pos_] == 'e' && text_[pos_ + 1] >= '0' && text_[pos_ + 1] <= '4';
  }

  BladeProduct blade_token() {
    take();  // 'e'
    BladeProduct acc{1, BladeIndex::scalar()};
    while (!done() && peek() >= '0' && peek() <= '9') {
      const int k = take() - '0';
      if (k >= kGenerators) fail("generator index out of range");
      if (acc.blade.contains(k)) fail("repeated generator in blade");
      const auto step = blade_product(acc.blade, BladeIndex::generator(k));
      acc = {acc.sign * step.sign, step.blade};
    }
    return acc;
  }

  void skip_spaces() {
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("multivector text at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Multivector& a) {
  std::string out;
  for (unsigned i = 0; i < kBlades; ++i) {
    const double c = a.coeff(i);
    if (c == 0.0) continue;
    const bool negative = std::signbit(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const double mag = std::abs(c);
    if (i == 0) {
      out += shortest(mag);
    } else if (mag == 1.0) {
      out += blade_name(BladeIndex(i));
    } else {
      out += shortest(mag) + "*" + blade_name(BladeIndex(i));
    }
  }
  return out.empty() ? "0" : out;
}

Multivector parse_multivector(std::string_view text) { return Parser(text).parse(); }

std::string format_real(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of negative zero
  char buffer[32];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

std::string format_grid(const MultivectorField& field, std::span<const Point5> points) {
  std::string out;
  for (const Point5& x : points) {
    for (int alpha = 0; alpha < kGenerators; ++alpha) out += format_real(x[alpha]) + " ";
    out += "|";
    const Multivector v = field(x);
    for (double c : v.coeffs()) out += " " + format_real(c);
    out += "\n";
  }
  return out;
}

}  // namespace g41
