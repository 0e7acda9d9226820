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

#include "aetherfloat/baselines.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "aetherfloat/error.hpp"

namespace aetherfloat {

namespace {

// Rounds mag > 0 to nearest-even on a binary grid with `mant_bits` fraction
// bits and exponents >= min_exp (subnormal spacing below), unbounded above.
double round_binary(double mag, int mant_bits, int min_exp) noexcept {
  const int e = std::max(std::ilogb(mag), min_exp);
  const double scaled = std::ldexp(mag, mant_bits - e);
  const double lo = std::floor(scaled);
  const double frac = scaled - lo;
  double r = lo;
  if (frac > 0.5 || (frac == 0.5 && std::fmod(lo, 2.0) != 0.0)) r = lo + 1.0;
  return std::ldexp(r, e - mant_bits);
}

// Field encoding of an already representable magnitude.
std::uint32_t encode_binary(double r, int mant_bits, int bias) noexcept {
  if (r == 0.0) return 0;
  const int min_exp = 1 - bias;
  const int e = std::ilogb(r);
  if (e < min_exp) {
    return static_cast<std::uint32_t>(std::ldexp(r, mant_bits - min_exp));
  }
  const auto frac = static_cast<std::uint32_t>(std::ldexp(r, mant_bits - e)) -
                    (1u << mant_bits);
  return (static_cast<std::uint32_t>(e + bias) << mant_bits) | frac;
}

}  // namespace

Fp8E4m3Code fp8_quantize(double x, Fp8Overflow overflow) {
  const std::uint8_t sign = std::signbit(x) ? 0x80 : 0x00;
  if (std::isnan(x)) return {static_cast<std::uint8_t>(sign | 0x7F)};
  const double mag = std::fabs(x);
  if (mag == 0.0) return {sign};
  const double r = std::isinf(mag) ? HUGE_VAL : round_binary(mag, 3, -6);
  if (r > kFp8E4m3Max) {
    return {static_cast<std::uint8_t>(
        sign | (overflow == Fp8Overflow::kSaturate ? 0x7E : 0x7F))};
  }
  return {static_cast<std::uint8_t>(sign | encode_binary(r, 3, 7))};
}

bool fp8_is_nan(Fp8E4m3Code code) noexcept {
  return (code.raw & 0x7F) == 0x7F;
}

double fp8_decode(Fp8E4m3Code code) noexcept {
  const bool negative = (code.raw & 0x80) != 0;
  if (fp8_is_nan(code)) return std::copysign(std::nan(""), negative ? -1.0 : 1.0);
  const int e = (code.raw >> 3) & 0xF;
  const int m = code.raw & 0x7;
  const double mag = e == 0 ? std::ldexp(m, -9) : std::ldexp(8 + m, e - 10);
  return negative ? -mag : mag;
}

AmaxTensor amax_scale_tensor(std::span<const double> xs) {
  if (xs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "AMAX scaling of an empty tensor");
  }
  double amax = 0.0;
  for (const double x : xs) {
    if (std::isfinite(x)) amax = std::max(amax, std::fabs(x));
  }
  AmaxTensor t;
  t.codes.resize(xs.size());
  if (amax == 0.0) return t;
  t.scale = amax / kFp8E4m3Max;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    t.codes[i] = fp8_quantize(xs[i] / t.scale);
  }
  return t;
}

std::vector<double> amax_dequantize(const AmaxTensor& t) {
  std::vector<double> out(t.codes.size(), 0.0);
  if (t.scale == 0.0) return out;
  for (std::size_t i = 0; i < t.codes.size(); ++i) {
    out[i] = fp8_decode(t.codes[i]) * t.scale;
  }
  return out;
}

Bf16Code bf16_quantize(double x) noexcept {
  const std::uint16_t sign = std::signbit(x) ? 0x8000 : 0x0000;
  if (std::isnan(x)) return {static_cast<std::uint16_t>(sign | 0x7FC0)};
  const double mag = std::fabs(x);
  if (mag == 0.0) return {sign};
  const double r = std::isinf(mag) ? HUGE_VAL : round_binary(mag, 7, -126);
  if (r >= 0x1p128) return {static_cast<std::uint16_t>(sign | 0x7F80)};
  return {static_cast<std::uint16_t>(sign | encode_binary(r, 7, 127))};
}

Bf16Code bf16_from_float(float x) noexcept {
  const auto bits = std::bit_cast<std::uint32_t>(x);
  if (std::isnan(x)) {
    return {static_cast<std::uint16_t>((bits >> 16) | 0x0040)};
  }
  const std::uint32_t rounding = 0x7FFFu + ((bits >> 16) & 1u);
  return {static_cast<std::uint16_t>((bits + rounding) >> 16)};
}

double bf16_decode(Bf16Code code) noexcept {
  return static_cast<double>(
      std::bit_cast<float>(static_cast<std::uint32_t>(code.raw) << 16));
}

}  // namespace aetherfloat
