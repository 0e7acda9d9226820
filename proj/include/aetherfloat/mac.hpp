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
#include <optional>
#include <span>
#include <vector>

#include "aetherfloat/format.hpp"
#include "aetherfloat/quantize.hpp"

namespace aetherfloat {

/// Output of the explicit-mantissa multiplier.
///
/// value = (-1)^sign * pmant / divisor^2 * 4^pexp, where divisor is the
/// format's mantissa divisor (2 for AF8, so the product quantum is 1/4).
struct Product {
  std::uint32_t sign = 0;
  std::uint32_t pmant = 0;
  int pexp = 0;

  friend bool operator==(const Product&, const Product&) = default;
};

double product_value(const Product& p, const FormatSpec& spec) noexcept;

/// M_a * M_b on the m x m array (3 x 3 for AF8); exponents add in base 4 with
/// E = 0 operands taking the E = 1 scale. Throws Error(kSpecialOperand) for
/// Inf/NaN operands.
Product multiply(Code a, Code b, const FormatSpec& spec);

struct AccumulatorConfig {
  /// Significand width W in bits; even, in [8, 52] so that every accumulator
  /// value is exact in binary64.
  int width = 32;
  /// Largest base-4 exponent of the significand quantum before the
  /// accumulator reports overflow.
  int max_exp = 16;
};

/// Sign-magnitude accumulator with a base-4 exponent.
///
/// value = (-1)^sign * sig / divisor^2 * 4^aexp. After every update the top
/// 2-bit pair of sig sits at bits [W-2, W-1], or sig == 0. `sticky` records
/// that some nonzero residue was truncated; truncation is toward zero, so the
/// exact sum of the step lies strictly above the stored magnitude by less
/// than one quantum (4^aexp / divisor^2).
struct WideAcc {
  std::uint32_t sign = 0;
  std::uint64_t sig = 0;
  int aexp = 0;
  bool sticky = false;
  bool overflow = false;
};

double acc_value(const WideAcc& acc, const FormatSpec& spec) noexcept;
double acc_quantum(const WideAcc& acc, const FormatSpec& spec) noexcept;

struct AccumulateTrace {
  /// Right shift, in bits, that lines up the smaller operand's leading pair
  /// with the larger one's; saturates at W.
  int align_shift_bits = 0;
  /// Renormalization shift of the result, in bits (positive = right).
  int normalize_shift_bits = 0;
  /// True when the smaller operand was more than W/2 pairs below the larger
  /// and contributed only sticky.
  bool capped = false;
  /// True when this step truncated a nonzero residue.
  bool inexact = false;
};

struct AccumulateStep {
  WideAcc acc;
  AccumulateTrace trace;
};

/// Adds a product into the accumulator, aligning in 2-bit pairs and truncating
/// toward zero into the W-bit window. An operand whose leading pair is more
/// than W/2 pairs below the other's contributes only sticky.
AccumulateStep align_and_accumulate(const WideAcc& acc, const Product& p,
                                    const AccumulatorConfig& config = {});

/// Rounds the accumulator onto the format grid (Saturate on overflow). Under
/// NearestEven a set sticky bit breaks exact ties away from zero.
Code requantize(const WideAcc& acc, const FormatSpec& spec,
                RoundingMode mode = RoundingMode::kNearestEven,
                std::optional<std::uint32_t> rand = std::nullopt);

struct MacTraceRow {
  std::size_t step = 0;
  Code a;
  Code b;
  Product product;
  AccumulateTrace trace;
  WideAcc acc;
};

/// Left-to-right multiply-accumulate over two equal-length code vectors.
std::vector<MacTraceRow> mac_trace(std::span<const Code> a,
                                   std::span<const Code> b,
                                   const FormatSpec& spec,
                                   const AccumulatorConfig& config = {});

WideAcc dot(std::span<const Code> a, std::span<const Code> b,
            const FormatSpec& spec, const AccumulatorConfig& config = {});

}  // namespace aetherfloat
