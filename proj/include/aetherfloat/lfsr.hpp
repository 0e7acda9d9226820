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

namespace aetherfloat {

/// Right-shift Galois tap mask for x^32 + x^22 + x^2 + x + 1, a
/// maximal-length polynomial (period 2^32 - 1). Tap t maps to bit t - 1.
inline constexpr std::uint32_t kGaloisTaps32 = 0x80200003u;

struct LfsrState {
  std::uint32_t reg = 1;
  std::uint32_t poly = kGaloisTaps32;

  friend bool operator==(const LfsrState&, const LfsrState&) = default;
};

struct LfsrStep {
  LfsrState state;
  std::uint32_t word = 0;
};

/// One Galois step: shift right; if the bit shifted out was 1, XOR the tap
/// mask. The new register is the output word. Throws Error(kZeroState) on a
/// zero register.
LfsrStep lfsr_next(LfsrState state);

/// Stateful wrapper over lfsr_next.
class GaloisLfsr {
 public:
  explicit GaloisLfsr(std::uint32_t seed, std::uint32_t poly = kGaloisTaps32);

  std::uint32_t next() noexcept {
    const std::uint32_t out = state_.reg & 1u;
    state_.reg >>= 1;
    if (out) state_.reg ^= state_.poly;
    return state_.reg;
  }

  const LfsrState& state() const noexcept { return state_; }

 private:
  LfsrState state_;
};

/// Seed of the LFSR serving lane (or chunk) k: (seed XOR (k + 1)) through the
/// murmur3 32-bit finalizer, the tap mask if that is zero, then one LFSR step.
std::uint32_t lane_seed(std::uint32_t seed, std::uint64_t lane) noexcept;

inline constexpr std::uint32_t rotl32(std::uint32_t x, unsigned r) noexcept {
  r &= 31u;
  return r == 0 ? x : (x << r) | (x >> (32u - r));
}

}  // namespace aetherfloat
