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

#include "aetherfloat/lexico.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "aetherfloat/error.hpp"
#include "aetherfloat/random.hpp"

namespace aetherfloat {

std::strong_ordering int_compare(Code a, Code b,
                                 const FormatSpec& spec) noexcept {
  return order_key(a, spec) <=> order_key(b, spec);
}

Code relu(Code code, const FormatSpec& spec) noexcept {
  return code_from_signed(std::max(order_key(code, spec), TotalOrderKey{0}),
                          spec);
}

Code max_code(std::span<const Code> codes, const FormatSpec& spec) {
  if (codes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "max_code of empty range");
  }
  TotalOrderKey best = order_key(codes.front(), spec);
  for (const Code c : codes.subspan(1)) {
    best = std::max(best, order_key(c, spec));
  }
  return code_from_signed(best, spec);
}

std::vector<Code> nan_threshold_filter(std::span<const Code> codes, Code lo,
                                       Code hi, const FormatSpec& spec) {
  const TotalOrderKey klo = order_key(lo, spec);
  const TotalOrderKey khi = order_key(hi, spec);
  if (klo > khi) {
    throw Error(ErrorCode::kInvalidArgument, "filter window has lo > hi");
  }
  std::vector<Code> out;
  for (const Code c : codes) {
    const TotalOrderKey k = order_key(c, spec);
    if (k >= klo && k <= khi) out.push_back(c);
  }
  return out;
}

std::strong_ordering total_order(double a, double b) noexcept {
  // -NaN < everything numeric < +NaN.
  auto band = [](double x) {
    if (std::isnan(x)) return std::signbit(x) ? 0 : 2;
    return 1;
  };
  const int ba = band(a);
  const int bb = band(b);
  if (ba != bb) return ba <=> bb;
  if (ba != 1) return std::strong_ordering::equal;
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  const bool na = std::signbit(a);
  const bool nb = std::signbit(b);
  if (na == nb) return std::strong_ordering::equal;
  return na ? std::strong_ordering::less : std::strong_ordering::greater;
}

AuditResult monotonicity_audit(const FormatSpec& spec, std::uint64_t n,
                               std::uint64_t seed) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "audit needs n >= 2");
  }
  const std::vector<Code> pool = canonical_codes(spec);
  std::vector<TotalOrderKey> keys(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    keys[i] = order_key(pool[counter_below(seed, 0, i, pool.size())], spec);
  }
  std::sort(keys.begin(), keys.end());

  AuditResult result{n, 0};
  double prev = decode(code_from_signed(keys[0], spec), spec).value;
  for (std::uint64_t i = 1; i < n; ++i) {
    const double cur = decode(code_from_signed(keys[i], spec), spec).value;
    if (total_order(prev, cur) == std::strong_ordering::greater) {
      ++result.violations;
    }
    prev = cur;
  }
  return result;
}

AuditResult exhaustive_pair_audit(const FormatSpec& spec) {
  const std::vector<Code> pool = canonical_codes(spec);
  const std::size_t count = pool.size();

  // Rank every code by value totalOrder alone; equal values share a rank.
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    values[i] = decode(pool[i], spec).value;
  }
  std::vector<std::size_t> by_value(count);
  std::iota(by_value.begin(), by_value.end(), std::size_t{0});
  std::stable_sort(by_value.begin(), by_value.end(),
                   [&](std::size_t a, std::size_t b) {
                     return total_order(values[a], values[b]) < 0;
                   });
  std::vector<std::uint32_t> rank(count);
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0 &&
        total_order(values[by_value[i - 1]], values[by_value[i]]) != 0) {
      ++r;
    }
    rank[by_value[i]] = r;
  }

  std::vector<TotalOrderKey> keys(count);
  for (std::size_t i = 0; i < count; ++i) keys[i] = order_key(pool[i], spec);

  AuditResult result{0, 0};
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const auto by_key = keys[i] <=> keys[j];
      const auto by_rank = rank[i] <=> rank[j];
      const bool equal_value_far =
          by_rank == 0 && std::abs(keys[i] - keys[j]) > 1;
      result.violations +=
          (by_rank != 0 && by_key != by_rank) || equal_value_far;
    }
  }
  result.samples = static_cast<std::uint64_t>(count) * (count - 1) / 2;
  return result;
}

}  // namespace aetherfloat
