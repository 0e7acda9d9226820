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

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace aetherfloat {

/// Whether the top exponent band is reserved for Inf/NaN (Preferred) or is an
/// ordinary finite band (Idealized).
enum class Embodiment { kPreferred, kIdealized };

/// Parameters of one member of the base-4, explicit-mantissa family.
///
/// Layout of an N-bit word, most significant first: sign (1), exponent (e),
/// mantissa (m = N - 1 - e). The mantissa is explicit; its radix point sits
/// after the top two bits, so the mantissa divisor is 2^(m-2). Widths up to
/// 16 bits are supported; anything other than the AF8/AF16 presets is
/// experimental.
class FormatSpec {
 public:
  static FormatSpec make(int total_bits, int exp_bits, int bias,
                         Embodiment embodiment = Embodiment::kPreferred);
  static FormatSpec af8(Embodiment embodiment = Embodiment::kPreferred);
  static FormatSpec af16(Embodiment embodiment = Embodiment::kPreferred);

  int total_bits() const noexcept { return total_bits_; }
  int exp_bits() const noexcept { return exp_bits_; }
  int mant_bits() const noexcept { return total_bits_ - 1 - exp_bits_; }
  int bias() const noexcept { return bias_; }
  Embodiment embodiment() const noexcept { return embodiment_; }
  bool has_specials() const noexcept {
    return embodiment_ == Embodiment::kPreferred;
  }

  /// log2 of the mantissa divisor, i.e. m - 2.
  int mant_scale_log2() const noexcept { return mant_bits() - 2; }
  double mant_divisor() const noexcept;

  std::uint32_t exp_max() const noexcept { return (1u << exp_bits_) - 1; }
  /// Largest exponent of a finite band.
  std::uint32_t top_finite_exp() const noexcept {
    return has_specials() ? exp_max() - 1 : exp_max();
  }
  std::uint32_t mant_max() const noexcept { return (1u << mant_bits()) - 1; }
  /// Smallest mantissa with a nonzero leading pair: 2^(m-2).
  std::uint32_t leading_pair_unit() const noexcept {
    return 1u << mant_scale_log2();
  }
  std::uint32_t magnitude_mask() const noexcept {
    return (1u << (total_bits_ - 1)) - 1;
  }
  std::uint32_t word_mask() const noexcept {
    return (1u << total_bits_) - 1;
  }

  bool is_preset() const noexcept;
  std::string name() const;

  friend bool operator==(const FormatSpec&, const FormatSpec&) = default;

 private:
  FormatSpec(int total_bits, int exp_bits, int bias, Embodiment embodiment)
      : total_bits_(total_bits),
        exp_bits_(exp_bits),
        bias_(bias),
        embodiment_(embodiment) {}

  int total_bits_;
  int exp_bits_;
  int bias_;
  Embodiment embodiment_;
};

/// A stored N-bit word. Only the low total_bits() bits are meaningful.
struct Code {
  std::uint32_t raw = 0;

  friend bool operator==(const Code&, const Code&) = default;
};

struct Unpacked {
  std::uint32_t sign = 0;
  std::uint32_t exp = 0;
  std::uint32_t mant = 0;

  friend bool operator==(const Unpacked&, const Unpacked&) = default;
};

enum class ValueKind { kFinite, kPosInf, kNegInf, kNaN };
enum class Category { kZero, kSubnormal, kNormal, kInfinity, kNaN };

struct Classification {
  ValueKind kind = ValueKind::kFinite;
  Category category = Category::kZero;
  bool canonical = true;
};

/// Decoded value. `value` carries the signed binary64 result, including
/// -0.0, +-infinity and NaN for the corresponding kinds.
struct Value {
  ValueKind kind = ValueKind::kFinite;
  double value = 0.0;
  bool canonical = true;

  bool is_finite() const noexcept { return kind == ValueKind::kFinite; }
  bool is_nan() const noexcept { return kind == ValueKind::kNaN; }
};

struct FormatConstants {
  double max_finite = 0.0;
  double min_normal = 0.0;
  double min_subnormal = 0.0;
};

/// Reads the word as an N-bit two's-complement integer.
std::int32_t signed_word(Code code, const FormatSpec& spec) noexcept;
/// Inverse of signed_word for keys in [-2^(N-1), 2^(N-1)).
Code code_from_signed(std::int32_t key, const FormatSpec& spec) noexcept;

Unpacked unpack(Code code, const FormatSpec& spec) noexcept;
/// Throws Error(kFieldOverflow) when a field does not fit its width.
Code pack(const Unpacked& u, const FormatSpec& spec);

Classification classify(const Unpacked& u, const FormatSpec& spec) noexcept;
Value decode(Code code, const FormatSpec& spec) noexcept;
/// Finite magnitude of (E, M) without sign or special handling.
double field_magnitude(std::uint32_t exp, std::uint32_t mant,
                       const FormatSpec& spec) noexcept;

FormatConstants format_constants(const FormatSpec& spec) noexcept;
/// Spacing of the canonical grid in the band containing |value|. Values at or
/// beyond max_finite report the top band's spacing.
double ulp_at(const FormatSpec& spec, double value) noexcept;

bool is_canonical(Code code, const FormatSpec& spec) noexcept;
/// Every canonical code, ascending by signed word.
std::vector<Code> canonical_codes(const FormatSpec& spec);

/// Convenience: pack(S, E, M).
Code make_code(const FormatSpec& spec, std::uint32_t sign, std::uint32_t exp,
               std::uint32_t mant);
Code positive_zero(const FormatSpec& spec) noexcept;
Code max_finite_code(const FormatSpec& spec, bool negative = false) noexcept;
/// Preferred embodiment only; NaN with M = all ones.
Code canonical_nan(const FormatSpec& spec, bool negative = false) noexcept;
Code infinity_code(const FormatSpec& spec, bool negative = false) noexcept;

}  // namespace aetherfloat
