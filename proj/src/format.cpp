// Copyright 2026 The AetherFloat Toolkit Authors
// SPDX-License-Identifier: Apache-2.0
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

#include "aetherfloat/format.hpp"

#include <cmath>

#include "aetherfloat/error.hpp"

namespace aetherfloat {

FormatSpec FormatSpec::make(int total_bits, int exp_bits, int bias,
                            Embodiment embodiment) {
  if (total_bits < 4 || total_bits > 16) {
    throw Error(ErrorCode::kInvalidArgument,
                "total_bits must be in [4, 16], got " +
                    std::to_string(total_bits));
  }
  if (exp_bits < 1 || total_bits - 1 - exp_bits < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "need exp_bits >= 1 and mant_bits >= 2");
  }
  if (bias < 0) {
    throw Error(ErrorCode::kInvalidArgument, "bias must be non-negative");
  }
  if (embodiment == Embodiment::kPreferred && exp_bits < 2) {
    // E_max would be the only nonzero exponent, leaving no normal band.
    throw Error(ErrorCode::kInvalidArgument,
                "preferred embodiment needs exp_bits >= 2");
  }
  return FormatSpec(total_bits, exp_bits, bias, embodiment);
}

FormatSpec FormatSpec::af8(Embodiment embodiment) {
  return FormatSpec(8, 4, 7, embodiment);
}

FormatSpec FormatSpec::af16(Embodiment embodiment) {
  return FormatSpec(16, 7, 63, embodiment);
}

double FormatSpec::mant_divisor() const noexcept {
  return std::ldexp(1.0, mant_scale_log2());
}

bool FormatSpec::is_preset() const noexcept {
  return (total_bits_ == 8 && exp_bits_ == 4 && bias_ == 7) ||
         (total_bits_ == 16 && exp_bits_ == 7 && bias_ == 63);
}

std::string FormatSpec::name() const {
  std::string base;
  if (total_bits_ == 8 && exp_bits_ == 4 && bias_ == 7) {
    base = "af8";
  } else if (total_bits_ == 16 && exp_bits_ == 7 && bias_ == 63) {
    base = "af16";
  } else {
    base = "af" + std::to_string(total_bits_) + "e" +
           std::to_string(exp_bits_) + "b" + std::to_string(bias_);
  }
  return base + (embodiment_ == Embodiment::kPreferred ? "-preferred"
                                                       : "-idealized");
}

std::int32_t signed_word(Code code, const FormatSpec& spec) noexcept {
  const int shift = 32 - spec.total_bits();
  return static_cast<std::int32_t>(code.raw << shift) >> shift;
}

Code code_from_signed(std::int32_t key, const FormatSpec& spec) noexcept {
  return Code{static_cast<std::uint32_t>(key) & spec.word_mask()};
}

Unpacked unpack(Code code, const FormatSpec& spec) noexcept {
  const int n = spec.total_bits();
  const std::int32_t x = signed_word(code, spec);
  const std::int32_t mask = x >> (n - 1);
  const std::uint32_t u =
      static_cast<std::uint32_t>(x ^ mask) & spec.magnitude_mask();
  const std::uint32_t s = (code.raw & spec.word_mask()) >> (n - 1);
  return Unpacked{s, u >> spec.mant_bits(), u & spec.mant_max()};
}

Code pack(const Unpacked& u, const FormatSpec& spec) {
  if (u.sign > 1 || u.exp > spec.exp_max() || u.mant > spec.mant_max()) {
    throw Error(ErrorCode::kFieldOverflow,
                "field out of range for " + spec.name() + ": S=" +
                    std::to_string(u.sign) + " E=" + std::to_string(u.exp) +
                    " M=" + std::to_string(u.mant));
  }
  const std::uint32_t magnitude = (u.exp << spec.mant_bits()) | u.mant;
  if (u.sign == 0) return Code{magnitude};
  const std::uint32_t sign_bit = 1u << (spec.total_bits() - 1);
  return Code{sign_bit | (~magnitude & spec.magnitude_mask())};
}

Classification classify(const Unpacked& u, const FormatSpec& spec) noexcept {
  if (spec.has_specials() && u.exp == spec.exp_max()) {
    if (u.mant == 0) {
      return {u.sign ? ValueKind::kNegInf : ValueKind::kPosInf,
              Category::kInfinity, true};
    }
    return {ValueKind::kNaN, Category::kNaN, u.mant == spec.mant_max()};
  }
  if (u.exp == 0) {
    const bool canonical = u.mant < spec.leading_pair_unit();
    return {ValueKind::kFinite,
            u.mant == 0 ? Category::kZero : Category::kSubnormal, canonical};
  }
  const bool leading_pair_set = (u.mant >> spec.mant_scale_log2()) != 0;
  return {ValueKind::kFinite, Category::kNormal, leading_pair_set};
}

double field_magnitude(std::uint32_t exp, std::uint32_t mant,
                       const FormatSpec& spec) noexcept {
  // E = 0 shares the E = 1 scale.
  const int effective_exp = exp == 0 ? 1 : static_cast<int>(exp);
  return std::ldexp(static_cast<double>(mant),
                    2 * (effective_exp - spec.bias()) - spec.mant_scale_log2());
}

Value decode(Code code, const FormatSpec& spec) noexcept {
  const Unpacked u = unpack(code, spec);
  const Classification c = classify(u, spec);
  switch (c.kind) {
    case ValueKind::kPosInf:
      return {c.kind, HUGE_VAL, c.canonical};
    case ValueKind::kNegInf:
      return {c.kind, -HUGE_VAL, c.canonical};
    case ValueKind::kNaN:
      return {c.kind, std::copysign(std::nan(""), u.sign ? -1.0 : 1.0),
              c.canonical};
    case ValueKind::kFinite:
      break;
  }
  const double magnitude = field_magnitude(u.exp, u.mant, spec);
  return {ValueKind::kFinite, u.sign ? -magnitude : magnitude, c.canonical};
}

FormatConstants format_constants(const FormatSpec& spec) noexcept {
  FormatConstants k;
  k.max_finite = field_magnitude(spec.top_finite_exp(), spec.mant_max(), spec);
  k.min_normal = field_magnitude(1, spec.leading_pair_unit(), spec);
  k.min_subnormal = field_magnitude(0, 1, spec);
  return k;
}

double ulp_at(const FormatSpec& spec, double value) noexcept {
  const double mag = std::fabs(value);
  const int top = static_cast<int>(spec.top_finite_exp());
  int exp = 1;
  if (!(mag < field_magnitude(top, spec.leading_pair_unit(), spec))) {
    exp = top;
  } else {
    // Band E covers [4^(E-bias), 4^(E-bias+1)).
    while (exp < top &&
           mag >= field_magnitude(exp + 1, spec.leading_pair_unit(), spec)) {
      ++exp;
    }
  }
  return field_magnitude(exp, 1, spec);
}

bool is_canonical(Code code, const FormatSpec& spec) noexcept {
  return classify(unpack(code, spec), spec).canonical;
}

std::vector<Code> canonical_codes(const FormatSpec& spec) {
  std::vector<Code> out;
  const std::int32_t half = 1 << (spec.total_bits() - 1);
  for (std::int32_t key = -half; key < half; ++key) {
    const Code c = code_from_signed(key, spec);
    if (is_canonical(c, spec)) out.push_back(c);
  }
  return out;
}

Code make_code(const FormatSpec& spec, std::uint32_t sign, std::uint32_t exp,
               std::uint32_t mant) {
  return pack(Unpacked{sign, exp, mant}, spec);
}

Code positive_zero(const FormatSpec&) noexcept { return Code{0}; }

Code max_finite_code(const FormatSpec& spec, bool negative) noexcept {
  return pack(Unpacked{negative ? 1u : 0u, spec.top_finite_exp(),
                       spec.mant_max()},
              spec);
}

Code canonical_nan(const FormatSpec& spec, bool negative) noexcept {
  return pack(Unpacked{negative ? 1u : 0u, spec.exp_max(), spec.mant_max()},
              spec);
}

Code infinity_code(const FormatSpec& spec, bool negative) noexcept {
  return pack(Unpacked{negative ? 1u : 0u, spec.exp_max(), 0}, spec);
}

}  // namespace aetherfloat
