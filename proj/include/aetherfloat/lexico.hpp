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
#include <span>
#include <vector>

#include "aetherfloat/format.hpp"

namespace aetherfloat {

/// The stored word read as an N-bit two's-complement integer. For canonical
/// codes, ordering keys orders values by totalOrder
/// (-NaN < -Inf < finite < +Inf < +NaN, with -0 just below +0).
using TotalOrderKey = std::int32_t;

inline TotalOrderKey order_key(Code code, const FormatSpec& spec) noexcept {
  return signed_word(code, spec);
}

std::strong_ordering int_compare(Code a, Code b,
                                 const FormatSpec& spec) noexcept;

/// Word-wise max(0, x). Any negative word, including -0, -Inf and -NaN,
/// clamps to +0; that is what an integer ALU computing max against zero does.
Code relu(Code code, const FormatSpec& spec) noexcept;

/// Word-wise max over a non-empty range (max-pooling on the integer ALU).
Code max_code(std::span<const Code> codes, const FormatSpec& spec);

/// Keeps the codes whose key lies in [key(lo), key(hi)]. With a window inside
/// [-max_finite, +max_finite] no NaN or Inf survives.
std::vector<Code> nan_threshold_filter(std::span<const Code> codes, Code lo,
                                       Code hi, const FormatSpec& spec);

struct AuditResult {
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
};

/// Draws n canonical codes (uniform over the canonical set, element i drawn
/// from a counter-based stream at index i), sorts them by integer key and
/// counts adjacent pairs whose decoded values are out of totalOrder.
AuditResult monotonicity_audit(const FormatSpec& spec, std::uint64_t n,
                               std::uint64_t seed);

/// All unordered pairs of canonical codes: a violation is a pair whose integer
/// comparison disagrees with totalOrder of the decoded values, or a pair of
/// equal values whose keys are neither equal nor adjacent.
AuditResult exhaustive_pair_audit(const FormatSpec& spec);

/// totalOrder of two binary64 values, computed from the values alone.
std::strong_ordering total_order(double a, double b) noexcept;

}  // namespace aetherfloat
