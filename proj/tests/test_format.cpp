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
#include <set>

#include "aetherfloat/error.hpp"
#include "aetherfloat/format.hpp"
#include "oracles.hpp"

namespace af = aetherfloat;

namespace {

struct Case {
  af::FormatSpec spec;
  oracle::Layout layout;
};

std::vector<Case> all_formats() {
  using af::Embodiment;
  return {
      {af::FormatSpec::af8(), oracle::kAf8},
      {af::FormatSpec::af8(Embodiment::kIdealized), oracle::kAf8Ideal},
      {af::FormatSpec::af16(), oracle::kAf16},
      {af::FormatSpec::af16(Embodiment::kIdealized), oracle::kAf16Ideal},
  };
}

}  // namespace

TEST(FormatSpec, Presets) {
  const auto af8 = af::FormatSpec::af8();
  EXPECT_EQ(af8.mant_bits(), 3);
  EXPECT_EQ(af8.bias(), 7);
  EXPECT_EQ(af8.mant_divisor(), 2.0);
  EXPECT_EQ(af8.name(), "af8-preferred");
  const auto af16 = af::FormatSpec::af16(af::Embodiment::kIdealized);
  EXPECT_EQ(af16.mant_bits(), 8);
  EXPECT_EQ(af16.bias(), 63);
  EXPECT_EQ(af16.mant_divisor(), 64.0);
  EXPECT_EQ(af16.name(), "af16-idealized");
  EXPECT_TRUE(af16.is_preset());
}

TEST(FormatSpec, RejectsBadLayouts) {
  EXPECT_THROW(af::FormatSpec::make(17, 4, 7), af::Error);
  EXPECT_THROW(af::FormatSpec::make(8, 6, 7), af::Error);  // m = 1
  EXPECT_THROW(af::FormatSpec::make(8, 0, 0), af::Error);
  EXPECT_THROW(af::FormatSpec::make(8, 4, -1), af::Error);
  EXPECT_NO_THROW(af::FormatSpec::make(10, 5, 15));
  EXPECT_FALSE(af::FormatSpec::make(10, 5, 15).is_preset());
}

TEST(Unpack, Examples) {
  const auto af8 = af::FormatSpec::af8();
  const auto af16 = af::FormatSpec::af16();
  EXPECT_EQ(af::unpack(af::Code{0x8000}, af16), (af::Unpacked{1, 127, 255}));
  EXPECT_EQ(af::unpack(af::Code{0x0000}, af16), (af::Unpacked{0, 0, 0}));
  EXPECT_EQ(af::unpack(af::Code{0xFF}, af8), (af::Unpacked{1, 0, 0}));
  EXPECT_EQ(af::signed_word(af::Code{0x8000}, af16), -32768);
  EXPECT_EQ(af::signed_word(af::Code{0xFF}, af8), -1);
}

TEST(Pack, Examples) {
  const auto af8 = af::FormatSpec::af8();
  const auto af16 = af::FormatSpec::af16();
  EXPECT_EQ(af::pack({0, 14, 7}, af8).raw, 0x77u);
  EXPECT_EQ(af::pack({0, 0, 0}, af8).raw, 0x00u);
  EXPECT_EQ(af::pack({1, 127, 255}, af16).raw, 0x8000u);
  EXPECT_EQ(af::pack({0, 7, 2}, af8).raw, 0x3Au);
}

TEST(Pack, FieldOverflow) {
  const auto af8 = af::FormatSpec::af8();
  try {
    af::pack({0, 16, 0}, af8);
    FAIL() << "expected FieldOverflow";
  } catch (const af::Error& e) {
    EXPECT_EQ(e.code(), af::ErrorCode::kFieldOverflow);
  }
  EXPECT_THROW(af::pack({0, 0, 8}, af8), af::Error);
  EXPECT_THROW(af::pack({2, 0, 0}, af8), af::Error);
}

TEST(RoundTrip, ExhaustivePackUnpackIdentity) {
  for (const Case& c : all_formats()) {
    const std::uint32_t count = 1u << c.spec.total_bits();
    for (std::uint32_t raw = 0; raw < count; ++raw) {
      const af::Code code{raw};
      ASSERT_EQ(af::pack(af::unpack(code, c.spec), c.spec), code)
          << c.spec.name() << " raw " << raw;
      ASSERT_EQ(af::code_from_signed(af::signed_word(code, c.spec), c.spec),
                code);
    }
  }
}

TEST(Decode, ExhaustiveAgainstBitOracle) {
  for (const Case& c : all_formats()) {
    const std::uint32_t count = 1u << c.spec.total_bits();
    for (std::uint32_t raw = 0; raw < count; ++raw) {
      const af::Value v = af::decode(af::Code{raw}, c.spec);
      const oracle::Decoded o = oracle::decode(c.layout, raw);
      ASSERT_EQ(v.canonical, o.canonical) << c.spec.name() << " raw " << raw;
      switch (o.kind) {
        case oracle::Decoded::kNan:
          ASSERT_EQ(v.kind, af::ValueKind::kNaN);
          break;
        case oracle::Decoded::kInf:
          ASSERT_EQ(v.kind, o.negative ? af::ValueKind::kNegInf
                                       : af::ValueKind::kPosInf);
          break;
        case oracle::Decoded::kFinite:
          ASSERT_EQ(v.kind, af::ValueKind::kFinite);
          ASSERT_EQ(v.value, o.value) << c.spec.name() << " raw " << raw;
          ASSERT_EQ(std::signbit(v.value), o.negative);
          break;
      }
    }
  }
}

TEST(Decode, Examples) {
  const auto af8 = af::FormatSpec::af8();
  EXPECT_EQ(af::decode(af::make_code(af8, 0, 0, 1), af8).value, 0x1p-13);
  EXPECT_EQ(af::decode(af::make_code(af8, 0, 0, 1), af8).value,
            1.220703125e-4);
  EXPECT_EQ(af::decode(af::make_code(af8, 0, 14, 7), af8).value, 57344.0);
  const auto ideal = af::FormatSpec::af8(af::Embodiment::kIdealized);
  EXPECT_EQ(af::decode(af::make_code(ideal, 0, 15, 7), ideal).value, 229376.0);
  EXPECT_EQ(af::decode(af::Code{0x3A}, af8).value, 1.0);
}

TEST(Classify, Examples) {
  const auto af8 = af::FormatSpec::af8();
  auto cls = af::classify({0, 0, 1}, af8);
  EXPECT_EQ(cls.category, af::Category::kSubnormal);
  EXPECT_TRUE(cls.canonical);
  cls = af::classify({0, 5, 1}, af8);
  EXPECT_EQ(cls.kind, af::ValueKind::kFinite);
  EXPECT_FALSE(cls.canonical);
  cls = af::classify({0, 15, 0}, af8);
  EXPECT_EQ(cls.kind, af::ValueKind::kPosInf);
  EXPECT_EQ(cls.category, af::Category::kInfinity);
  cls = af::classify({1, 15, 7}, af8);
  EXPECT_EQ(cls.kind, af::ValueKind::kNaN);
  EXPECT_TRUE(cls.canonical);
  cls = af::classify({0, 15, 3}, af8);
  EXPECT_EQ(cls.kind, af::ValueKind::kNaN);
  EXPECT_FALSE(cls.canonical);
  const auto ideal = af::FormatSpec::af8(af::Embodiment::kIdealized);
  cls = af::classify({0, 15, 7}, ideal);
  EXPECT_EQ(cls.kind, af::ValueKind::kFinite);
  EXPECT_EQ(cls.category, af::Category::kNormal);
}

TEST(Constants, ExactValues) {
  const auto c8 = af::format_constants(af::FormatSpec::af8());
  EXPECT_EQ(c8.max_finite, 57344.0);
  EXPECT_EQ(c8.min_subnormal, 0x1p-13);
  EXPECT_EQ(c8.min_normal, 0x1p-12);
  EXPECT_EQ(
      af::format_constants(af::FormatSpec::af8(af::Embodiment::kIdealized))
          .max_finite,
      229376.0);
  const auto c16 = af::format_constants(af::FormatSpec::af16());
  EXPECT_EQ(c16.min_subnormal, 0x1p-130);
  EXPECT_EQ(c16.min_normal, 0x1p-124);
  EXPECT_EQ(c16.max_finite, 255.0 / 64.0 * std::ldexp(1.0, 126));
}

TEST(Constants, MatchMaxCanonicalEnumeration) {
  for (const Case& c : all_formats()) {
    double best = 0.0;
    double smallest = INFINITY;
    for (const auto& g : oracle::positive_grid(c.layout)) {
      best = std::max(best, g.value);
      if (g.value > 0) smallest = std::min(smallest, g.value);
    }
    const auto k = af::format_constants(c.spec);
    EXPECT_EQ(k.max_finite, best) << c.spec.name();
    EXPECT_EQ(k.min_subnormal, smallest) << c.spec.name();
    EXPECT_EQ(af::decode(af::max_finite_code(c.spec), c.spec).value, best);
  }
}

TEST(Canonical, FiniteValuesHaveUniqueCanonicalCodes) {
  for (const Case& c : all_formats()) {
    std::set<double> seen;
    std::size_t finite = 0;
    for (const af::Code code : af::canonical_codes(c.spec)) {
      const af::Value v = af::decode(code, c.spec);
      if (!v.is_finite()) continue;
      ++finite;
      // -0 and +0 are distinct words with equal value; key by sign too.
      const double key = v.value == 0.0 ? (std::signbit(v.value) ? -1e-300 : 0)
                                        : v.value;
      EXPECT_TRUE(seen.insert(key).second)
          << c.spec.name() << " duplicate value " << v.value;
    }
    EXPECT_EQ(seen.size(), finite);
  }
}

TEST(Canonical, CodeCounts) {
  // Per sign: 2 at E = 0, 6 per normal band, plus Inf and canonical NaN.
  EXPECT_EQ(af::canonical_codes(af::FormatSpec::af8()).size(),
            2u * (2 + 14 * 6 + 2));
  EXPECT_EQ(af::canonical_codes(af::FormatSpec::af8(af::Embodiment::kIdealized))
                .size(),
            2u * (2 + 15 * 6));
  EXPECT_EQ(af::canonical_codes(af::FormatSpec::af16()).size(),
            2u * (64 + 126 * 192 + 2));
}

TEST(Canonical, ScaleContinuityAcrossSubnormalBoundary) {
  // The E = 0 band continues the E = 1 grid with the same spacing.
  for (const Case& c : all_formats()) {
    const auto& s = c.spec;
    const double top_sub =
        af::decode(af::make_code(s, 0, 0, s.leading_pair_unit() - 1), s).value;
    const double first_normal =
        af::decode(af::make_code(s, 0, 1, s.leading_pair_unit()), s).value;
    const double q = af::format_constants(s).min_subnormal;
    EXPECT_EQ(first_normal - top_sub, q) << s.name();
    EXPECT_EQ(first_normal, af::format_constants(s).min_normal);
  }
}

TEST(Canonical, BandBoundariesAreContinuous) {
  // Top of band E and bottom of band E+1 are one band-E spacing apart.
  const auto s = af::FormatSpec::af8();
  for (std::uint32_t e = 1; e < s.top_finite_exp(); ++e) {
    const double top = af::decode(af::make_code(s, 0, e, s.mant_max()), s).value;
    const double next =
        af::decode(af::make_code(s, 0, e + 1, s.leading_pair_unit()), s).value;
    EXPECT_EQ(next - top, af::ulp_at(s, top)) << "E=" << e;
  }
}

TEST(Ulp, Values) {
  const auto s = af::FormatSpec::af8();
  EXPECT_EQ(af::ulp_at(s, 1.0), 0.5);
  EXPECT_EQ(af::ulp_at(s, 3.5), 0.5);
  EXPECT_EQ(af::ulp_at(s, 4.0), 2.0);
  EXPECT_EQ(af::ulp_at(s, 0.0), 0x1p-13);
  EXPECT_EQ(af::ulp_at(s, 1e9), 8192.0);
}

TEST(Specials, Codes) {
  const auto s = af::FormatSpec::af8();
  EXPECT_EQ(af::decode(af::infinity_code(s), s).kind, af::ValueKind::kPosInf);
  EXPECT_EQ(af::decode(af::infinity_code(s, true), s).kind,
            af::ValueKind::kNegInf);
  EXPECT_TRUE(af::decode(af::canonical_nan(s, true), s).is_nan());
  EXPECT_EQ(af::canonical_nan(s, false).raw, 0x7Fu);
  EXPECT_EQ(af::canonical_nan(s, true).raw, 0x80u);
  EXPECT_EQ(af::positive_zero(s).raw, 0u);
  EXPECT_EQ(af::max_finite_code(s, true).raw, (~0x77u) & 0xFFu);
}

TEST(Errors, NamesAreStable) {
  EXPECT_STREQ(af::error_code_name(af::ErrorCode::kBadMagic), "BadMagic");
  EXPECT_STREQ(af::error_code_name(af::ErrorCode::kFieldOverflow),
               "FieldOverflow");
}
