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

// Test-only reference models. Nothing here calls into the library; each
// oracle recomputes its answer from the bit layout by a different route
// (loops, tables, exhaustive search) so that agreement means something.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace oracle {

struct Layout {
  int bits;
  int exp_bits;
  int bias;
  bool specials;  // top exponent band reserved for Inf/NaN

  int mant_bits() const { return bits - 1 - exp_bits; }
  std::uint32_t emax() const { return (1u << exp_bits) - 1; }
};

inline constexpr Layout kAf8{8, 4, 7, true};
inline constexpr Layout kAf8Ideal{8, 4, 7, false};
inline constexpr Layout kAf16{16, 7, 63, true};
inline constexpr Layout kAf16Ideal{16, 7, 63, false};

struct Decoded {
  enum Kind { kFinite, kInf, kNan } kind = kFinite;
  bool negative = false;
  std::uint32_t exp = 0;
  std::uint32_t mant = 0;
  double value = 0.0;  // signed; -0.0 for the negative zero word
  bool canonical = true;
};

/// Scales by powers of two one step at a time so no shared helper is used.
inline double scale_pow2(double v, int k) {
  while (k > 0) {
    v *= 2.0;
    --k;
  }
  while (k < 0) {
    v *= 0.5;
    ++k;
  }
  return v;
}

inline Decoded decode(const Layout& f, std::uint32_t raw) {
  const int m = f.mant_bits();
  const std::uint32_t word = raw & ((1u << f.bits) - 1);
  const std::uint32_t low_mask = (1u << (f.bits - 1)) - 1;
  Decoded d;
  d.negative = (word >> (f.bits - 1)) != 0;
  // Negative words hold the bitwise complement of the magnitude.
  const std::uint32_t mag = d.negative ? (~word & low_mask) : (word & low_mask);
  d.exp = mag >> m;
  d.mant = mag & ((1u << m) - 1);
  if (f.specials && d.exp == f.emax()) {
    if (d.mant == 0) {
      d.kind = Decoded::kInf;
      d.value = d.negative ? -std::numeric_limits<double>::infinity()
                           : std::numeric_limits<double>::infinity();
    } else {
      d.kind = Decoded::kNan;
      d.value = std::numeric_limits<double>::quiet_NaN();
      d.canonical = d.mant == (1u << m) - 1;
    }
    return d;
  }
  const std::uint32_t top_pair = d.mant >> (m - 2);
  d.canonical = d.exp == 0 ? top_pair == 0 : top_pair != 0;
  // M / 2^(m-2), then times 4 per exponent step above the bias.
  const int e_eff = d.exp == 0 ? 1 : static_cast<int>(d.exp);
  double v = scale_pow2(static_cast<double>(d.mant), -(m - 2));
  v = scale_pow2(v, 2 * (e_eff - f.bias));
  d.value = d.negative ? -v : v;
  return d;
}

struct GridPoint {
  double value;
  std::uint32_t mant;
};

/// Every non-negative canonical finite value, ascending, with its mantissa.
inline std::vector<GridPoint> positive_grid(const Layout& f) {
  std::vector<GridPoint> grid;
  for (std::uint32_t raw = 0; raw < (1u << (f.bits - 1)); ++raw) {
    const Decoded d = decode(f, raw);
    if (d.kind == Decoded::kFinite && d.canonical) {
      grid.push_back({d.value, d.mant});
    }
  }
  std::sort(grid.begin(), grid.end(),
            [](const GridPoint& a, const GridPoint& b) {
              return a.value < b.value;
            });
  return grid;
}

/// Nearest grid value to x, ties to the even mantissa, saturating at the
/// largest finite value; zero results are +0. Finite x only.
inline double nearest_even(const std::vector<GridPoint>& grid, double x) {
  const double mag = std::fabs(x);
  const double top = grid.back().value;
  double r;
  if (mag >= top) {
    r = top;
  } else {
    const auto hi_it = std::upper_bound(
        grid.begin(), grid.end(), mag,
        [](double v, const GridPoint& g) { return v < g.value; });
    const GridPoint hi = *hi_it;
    const GridPoint lo = *(hi_it - 1);
    // Adjacent grid values are within a factor of two, so these
    // differences are exact.
    const double dlo = mag - lo.value;
    const double dhi = hi.value - mag;
    if (dlo < dhi) {
      r = lo.value;
    } else if (dhi < dlo) {
      r = hi.value;
    } else {
      r = (lo.mant % 2 == 0) ? lo.value : hi.value;
    }
  }
  if (r == 0.0) return 0.0;
  return x < 0 ? -r : r;
}

/// Probability that stochastic rounding with 24 compared bits rounds up for
/// residual fraction f: the count of 24-bit integers below f * 2^24.
inline double sr_up_probability(double fraction) {
  return std::ceil(fraction * 16777216.0) / 16777216.0;
}

// GF(2) 32x32 matrices as 32 column words; column j is the image of bit j.
using Gf2Matrix = std::array<std::uint32_t, 32>;

inline std::uint32_t apply(const Gf2Matrix& a, std::uint32_t v) {
  std::uint32_t out = 0;
  for (int j = 0; j < 32; ++j) {
    if ((v >> j) & 1u) out ^= a[j];
  }
  return out;
}

inline Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b) {
  Gf2Matrix c{};
  for (int j = 0; j < 32; ++j) c[j] = apply(a, b[j]);
  return c;
}

inline Gf2Matrix identity() {
  Gf2Matrix id{};
  for (int j = 0; j < 32; ++j) id[j] = 1u << j;
  return id;
}

/// Transition matrix of the right-shift Galois register with tap mask `taps`.
inline Gf2Matrix galois_matrix(std::uint32_t taps) {
  Gf2Matrix a{};
  a[0] = taps;  // bit 0 shifts out and injects the taps
  for (int j = 1; j < 32; ++j) a[j] = 1u << (j - 1);
  return a;
}

inline Gf2Matrix power(Gf2Matrix a, std::uint64_t e) {
  Gf2Matrix r = identity();
  while (e != 0) {
    if (e & 1u) r = multiply(r, a);
    a = multiply(a, a);
    e >>= 1;
  }
  return r;
}

/// Order 2^32 - 1 = 3 * 5 * 17 * 257 * 65537; the polynomial is primitive iff
/// A^(2^32-1) = I and A^((2^32-1)/q) != I for each prime q.
inline bool has_maximal_period(std::uint32_t taps) {
  const std::uint64_t order = 0xFFFFFFFFull;
  const Gf2Matrix a = galois_matrix(taps);
  if (power(a, order) != identity()) return false;
  for (const std::uint64_t q : {3ull, 5ull, 17ull, 257ull, 65537ull}) {
    if (power(a, order / q) == identity()) return false;
  }
  return true;
}

/// AF8 finite value times 2^13 as an exact integer (every AF8 value is a
/// multiple of 2^-13).
inline std::int64_t af8_scaled(std::uint32_t raw) {
  const Decoded d = decode(kAf8, raw);
  const int e_eff = d.exp == 0 ? 1 : static_cast<int>(d.exp);
  const std::int64_t mag = static_cast<std::int64_t>(d.mant) << (2 * e_eff - 2);
  return d.negative ? -mag : mag;
}

/// FP8 E4M3FN from its bits: bias 7, hidden one, E = 0 subnormal, S.1111.111
/// NaN, no infinities.
inline double fp8_e4m3_decode(std::uint8_t raw) {
  const bool neg = (raw & 0x80) != 0;
  const int e = (raw >> 3) & 0xF;
  const int m = raw & 0x7;
  if (e == 0xF && m == 0x7) return std::numeric_limits<double>::quiet_NaN();
  double v = e == 0 ? scale_pow2(m, -9) : scale_pow2(8 + m, e - 10);
  return neg ? -v : v;
}

}  // namespace oracle
