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

#include "aetherfloat/mac.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "aetherfloat/error.hpp"

namespace aetherfloat {

namespace {

using u128 = unsigned __int128;

int bit_length(u128 v) noexcept {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  if (hi != 0) return 128 - std::countl_zero(hi);
  return 64 - std::countl_zero(static_cast<std::uint64_t>(v));
}

void check_config(const AccumulatorConfig& config) {
  if (config.width < 8 || config.width > 52 || config.width % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "accumulator width must be even and in [8, 52]");
  }
}

struct Operand {
  std::uint32_t sign = 0;
  u128 sig = 0;
  int exp = 0;
};

}  // namespace

double product_value(const Product& p, const FormatSpec& spec) noexcept {
  const double mag = std::ldexp(static_cast<double>(p.pmant),
                                2 * p.pexp - 2 * spec.mant_scale_log2());
  return p.sign ? -mag : mag;
}

Product multiply(Code a, Code b, const FormatSpec& spec) {
  const Unpacked ua = unpack(a, spec);
  const Unpacked ub = unpack(b, spec);
  if (classify(ua, spec).kind != ValueKind::kFinite ||
      classify(ub, spec).kind != ValueKind::kFinite) {
    throw Error(ErrorCode::kSpecialOperand,
                "Inf/NaN operands bypass the MAC datapath");
  }
  // Subnormals share the E = 1 scale, so the same array and adder serve them.
  const int ea = ua.exp == 0 ? 1 : static_cast<int>(ua.exp);
  const int eb = ub.exp == 0 ? 1 : static_cast<int>(ub.exp);
  return Product{ua.sign ^ ub.sign, ua.mant * ub.mant,
                 ea + eb - 2 * spec.bias()};
}

double acc_value(const WideAcc& acc, const FormatSpec& spec) noexcept {
  const double mag = std::ldexp(static_cast<double>(acc.sig),
                                2 * acc.aexp - 2 * spec.mant_scale_log2());
  return acc.sign ? -mag : mag;
}

double acc_quantum(const WideAcc& acc, const FormatSpec& spec) noexcept {
  return std::ldexp(1.0, 2 * acc.aexp - 2 * spec.mant_scale_log2());
}

AccumulateStep align_and_accumulate(const WideAcc& acc, const Product& p,
                                    const AccumulatorConfig& config) {
  check_config(config);
  const int width = config.width;
  const int cap_steps = width / 2;

  AccumulateStep step{acc, {}};
  if (p.pmant == 0) return step;

  Operand prod{p.sign, p.pmant, p.pexp};
  Operand held{acc.sign, acc.sig, acc.aexp};

  // Order by magnitude: top(x) is one past the base-4 position of the leading
  // pair, so x < 4^top(x) * quantum.
  auto top = [](const Operand& o) {
    return o.sig == 0 ? std::numeric_limits<int>::min() / 2
                      : o.exp + (bit_length(o.sig) + 1) / 2;
  };
  const bool prod_is_big = held.sig == 0 || top(prod) >= top(held);
  const Operand& big = prod_is_big ? prod : held;
  Operand small = prod_is_big ? held : prod;
  const int t_big = top(big);

  bool inexact = false;
  if (small.sig != 0) {
    const int distance = t_big - top(small);
    if (distance > cap_steps) {
      // The smaller operand lies wholly below the result window. Any stand-in
      // in (0, window quantum) that is also below the larger operand's last
      // bit truncates identically, so use a single unit there.
      step.trace.capped = true;
      small.sig = 1;
      small.exp = std::min(big.exp, t_big - cap_steps - 1) - 1;
      inexact = true;
    }
    step.trace.align_shift_bits = 2 * std::min(distance, cap_steps);
  }

  // Exact sum at the lower of the two quantum exponents (at most ~104 bits).
  const int exp = small.sig == 0 ? big.exp : std::min(big.exp, small.exp);
  const u128 big_aligned = big.sig << (2 * (big.exp - exp));
  const u128 small_aligned =
      small.sig == 0 ? u128{0} : small.sig << (2 * (small.exp - exp));
  u128 mag;
  std::uint32_t sign;
  if (big.sign == small.sign || small_aligned == 0) {
    mag = big_aligned + small_aligned;
    sign = big.sign;
  } else if (big_aligned >= small_aligned) {
    mag = big_aligned - small_aligned;
    sign = big.sign;
  } else {
    mag = small_aligned - big_aligned;
    sign = small.sign;
  }

  WideAcc& out = step.acc;
  out.sticky = acc.sticky;
  out.overflow = acc.overflow;
  if (mag == 0) {
    out.sign = 0;
    out.sig = 0;
    out.aexp = 0;
    out.sticky = out.sticky || inexact;
    step.trace.inexact = inexact;
    return step;
  }

  int out_exp = exp;
  const int len = bit_length(mag);
  if (len > width) {
    const int steps = (len - width + 1) / 2;
    const u128 dropped = mag & ((u128{1} << (2 * steps)) - 1);
    inexact = inexact || dropped != 0;
    mag >>= 2 * steps;
    out_exp += steps;
    step.trace.normalize_shift_bits = 2 * steps;
  } else {
    const int steps = (width - len) / 2;
    mag <<= 2 * steps;
    out_exp -= steps;
    step.trace.normalize_shift_bits = -2 * steps;
  }

  out.sign = sign;
  out.sig = static_cast<std::uint64_t>(mag);
  out.aexp = out_exp;
  out.sticky = out.sticky || inexact;
  if (out_exp > config.max_exp) out.overflow = true;
  step.trace.inexact = inexact;
  return step;
}

Code requantize(const WideAcc& acc, const FormatSpec& spec, RoundingMode mode,
                std::optional<std::uint32_t> rand) {
  QuantizeOptions options;
  options.mode = mode;
  options.overflow = OverflowPolicy::kSaturate;
  if (acc.overflow) return max_finite_code(spec, acc.sign != 0);
  return quantize_scalar_sticky(acc_value(acc, spec), acc.sticky, spec,
                                options, rand);
}

std::vector<MacTraceRow> mac_trace(std::span<const Code> a,
                                   std::span<const Code> b,
                                   const FormatSpec& spec,
                                   const AccumulatorConfig& config) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "MAC operands must have equal length");
  }
  std::vector<MacTraceRow> rows;
  rows.reserve(a.size());
  WideAcc acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Product p = multiply(a[i], b[i], spec);
    const AccumulateStep s = align_and_accumulate(acc, p, config);
    acc = s.acc;
    rows.push_back(MacTraceRow{i, a[i], b[i], p, s.trace, acc});
  }
  return rows;
}

WideAcc dot(std::span<const Code> a, std::span<const Code> b,
            const FormatSpec& spec, const AccumulatorConfig& config) {
  const auto rows = mac_trace(a, b, spec, config);
  return rows.empty() ? WideAcc{} : rows.back().acc;
}

}  // namespace aetherfloat
