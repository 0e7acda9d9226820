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

#include <cstdint>
#include <span>
#include <vector>

namespace aetherfloat {

// FP8 E4M3, the OCP "FN" dialect: bias 7, hidden bit, subnormals at E = 0
// (M * 2^-9), no infinities, NaN only at S.1111.111. Max finite is 448.

struct Fp8E4m3Code {
  std::uint8_t raw = 0;

  friend bool operator==(const Fp8E4m3Code&, const Fp8E4m3Code&) = default;
};

inline constexpr double kFp8E4m3Max = 448.0;

enum class Fp8Overflow { kSaturate, kToNaN };

/// Round to nearest, ties to even, from binary64.
Fp8E4m3Code fp8_quantize(double x, Fp8Overflow overflow = Fp8Overflow::kSaturate);
double fp8_decode(Fp8E4m3Code code) noexcept;
bool fp8_is_nan(Fp8E4m3Code code) noexcept;

/// Per-tensor AMAX scaling: scale = max|x| / 448 over finite elements.
struct AmaxTensor {
  /// Zero when the tensor has no nonzero finite element (all-zero tensor);
  /// the codes are then all +0 and dequantize to zeros.
  double scale = 0.0;
  std::vector<Fp8E4m3Code> codes;
};

/// Throws Error(kInvalidArgument) for an empty input.
AmaxTensor amax_scale_tensor(std::span<const double> xs);
std::vector<double> amax_dequantize(const AmaxTensor& t);

// bfloat16: the top half of an IEEE binary32 word.

struct Bf16Code {
  std::uint16_t raw = 0;

  friend bool operator==(const Bf16Code&, const Bf16Code&) = default;
};

/// Round to nearest even straight from binary64 (single rounding; overflow to
/// infinity, NaN stays NaN with its sign).
Bf16Code bf16_quantize(double x) noexcept;
/// The usual binary32 -> bfloat16 rounding on the bit pattern.
Bf16Code bf16_from_float(float x) noexcept;
double bf16_decode(Bf16Code code) noexcept;

}  // namespace aetherfloat
