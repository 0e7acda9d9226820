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

#include <gtest/gtest.h>

#include <cmath>

#include "aetherfloat/error.hpp"
#include "aetherfloat/lexico.hpp"
#include "aetherfloat/quantize.hpp"
#include "oracles.hpp"

namespace af = aetherfloat;

namespace {

af::Code enc(double x, const af::FormatSpec& s) {
  return af::quantize_scalar(x, s);
}

}  // namespace

TEST(IntCompare, Examples) {
  const auto af8 = af::FormatSpec::af8();
  EXPECT_EQ(af::int_compare(enc(1.0, af8), enc(2.0, af8), af8),
            std::strong_ordering::less);
  EXPECT_EQ(af::int_compare(enc(-3.0, af8), enc(-2.0, af8), af8),
            std::strong_ordering::less);
  const auto af16 = af::FormatSpec::af16();
  const af::Code neg_nan{0x8000};
  for (const af::Code c : af::canonical_codes(af16)) {
    if (c == neg_nan) continue;
    ASSERT_EQ(af::int_compare(neg_nan, c, af16), std::strong_ordering::less);
  }
}

TEST(IntCompare, ExhaustiveAf8AgainstOracleValues) {
  // Every canonical pair: key order agrees with totalOrder of the oracle
  // decode (NaN sign decides its side; -0 < +0).
  const auto s = af::FormatSpec::af8();
  auto rank = [](const oracle::Decoded& d) -> double {
    // Map to a double that orders like totalOrder on canonical values.
    if (d.kind == oracle::Decoded::kNan) return d.negative ? -INFINITY : INFINITY;
    if (d.kind == oracle::Decoded::kInf) return d.negative ? -1e300 : 1e300;
    if (d.value == 0.0) return d.negative ? -1e-300 : 0.0;
    return d.value;
  };
  const auto codes = af::canonical_codes(s);
  for (const af::Code a : codes) {
    for (const af::Code b : codes) {
      const double ra = rank(oracle::decode(oracle::kAf8, a.raw));
      const double rb = rank(oracle::decode(oracle::kAf8, b.raw));
      const auto expected = ra < rb   ? std::strong_ordering::less
                            : ra > rb ? std::strong_ordering::greater
                                      : std::strong_ordering::equal;
      ASSERT_EQ(af::int_compare(a, b, s), expected)
          << "a=" << a.raw << " b=" << b.raw;
    }
  }
}

TEST(Relu, Examples) {
  const auto s = af::FormatSpec::af8();
  EXPECT_EQ(af::relu(enc(-3.5, s), s), af::positive_zero(s));
  EXPECT_EQ(af::relu(enc(2.5, s), s), enc(2.5, s));
  EXPECT_EQ(af::relu(af::Code{0xFF}, s).raw, 0x00u);
  EXPECT_EQ(af::relu(af::canonical_nan(s, true), s), af::positive_zero(s));
  EXPECT_EQ(af::relu(af::infinity_code(s), s), af::infinity_code(s));
}

TEST(Relu, MatchesValueReluOnFiniteCodes) {
  const auto s = af::FormatSpec::af16();
  for (const af::Code c : af::canonical_codes(s)) {
    const af::Value v = af::decode(c, s);
    if (!v.is_finite()) continue;
    const double want = v.value > 0 ? v.value : 0.0;
    ASSERT_EQ(af::decode(af::relu(c, s), s).value, want);
  }
}

TEST(MaxCode, PicksLargestValue) {
  const auto s = af::FormatSpec::af8();
  const std::vector<af::Code> xs{enc(1.0, s), enc(-6.0, s), enc(3.5, s),
                                 enc(0.0, s)};
  EXPECT_EQ(af::max_code(xs, s), enc(3.5, s));
  EXPECT_THROW(af::max_code(std::span<const af::Code>{}, s), af::Error);
}

TEST(NanThreshold, Examples) {
  const auto s = af::FormatSpec::af16();
  const std::vector<af::Code> in{enc(1.0, s), af::Code{0x8000}, enc(2.0, s)};
  const auto out = af::nan_threshold_filter(in, af::max_finite_code(s, true),
                                            af::max_finite_code(s), s);
  EXPECT_EQ(out, (std::vector<af::Code>{enc(1.0, s), enc(2.0, s)}));
  EXPECT_TRUE(af::nan_threshold_filter({}, af::max_finite_code(s, true),
                                       af::max_finite_code(s), s)
                  .empty());
  const auto single =
      af::nan_threshold_filter(in, enc(2.0, s), enc(2.0, s), s);
  EXPECT_EQ(single, (std::vector<af::Code>{enc(2.0, s)}));
  EXPECT_THROW(af::nan_threshold_filter(in, enc(2.0, s), enc(1.0, s), s),
               af::Error);
}

TEST(NanThreshold, DropsAllSpecials) {
  const auto s = af::FormatSpec::af8();
  std::vector<af::Code> all;
  for (std::uint32_t r = 0; r < 256; ++r) all.push_back(af::Code{r});
  for (const af::Code c : af::nan_threshold_filter(
           all, af::max_finite_code(s, true), af::max_finite_code(s), s)) {
    EXPECT_TRUE(af::decode(c, s).is_finite()) << c.raw;
  }
}

TEST(Audit, MonotonicityRandomAf16) {
  const auto r = af::monotonicity_audit(af::FormatSpec::af16(), 1000012, 7);
  EXPECT_EQ(r.samples, 1000012u);
  EXPECT_EQ(r.violations, 0u);
}

TEST(Audit, TwoEqualElements) {
  // n = 2 from an eight-bit space with a seed that draws the same code twice
  // is not guaranteed; instead check the audit is violation-free at n = 2.
  EXPECT_EQ(af::monotonicity_audit(af::FormatSpec::af8(), 2, 3).violations, 0u);
  EXPECT_THROW(af::monotonicity_audit(af::FormatSpec::af8(), 1, 3), af::Error);
}

TEST(Audit, ExhaustivePairsAf8) {
  const auto s = af::FormatSpec::af8();
  const auto r = af::exhaustive_pair_audit(s);
  const std::uint64_t n = af::canonical_codes(s).size();
  EXPECT_EQ(r.samples, n * (n - 1) / 2);
  EXPECT_EQ(r.violations, 0u);
}

TEST(TotalOrder, Doubles) {
  EXPECT_EQ(af::total_order(-0.0, 0.0), std::strong_ordering::less);
  EXPECT_EQ(af::total_order(1.0, 2.0), std::strong_ordering::less);
  EXPECT_EQ(af::total_order(-NAN, -INFINITY), std::strong_ordering::less);
  EXPECT_EQ(af::total_order(NAN, INFINITY), std::strong_ordering::greater);
}
