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

#include "aetherfloat/lfsr.hpp"

#include "aetherfloat/error.hpp"

namespace aetherfloat {

namespace {

constexpr std::uint32_t fmix32(std::uint32_t h) noexcept {
  h ^= h >> 16;
  h *= 0x85EBCA6Bu;
  h ^= h >> 13;
  h *= 0xC2B2AE35u;
  h ^= h >> 16;
  return h;
}

}  // namespace

LfsrStep lfsr_next(LfsrState state) {
  if (state.reg == 0) {
    throw Error(ErrorCode::kZeroState, "LFSR register is zero");
  }
  const std::uint32_t out = state.reg & 1u;
  state.reg >>= 1;
  if (out) state.reg ^= state.poly;
  return {state, state.reg};
}

GaloisLfsr::GaloisLfsr(std::uint32_t seed, std::uint32_t poly)
    : state_{seed, poly} {
  if (seed == 0) {
    throw Error(ErrorCode::kZeroState, "LFSR seed must be nonzero");
  }
}

std::uint32_t lane_seed(std::uint32_t seed, std::uint64_t lane) noexcept {
  std::uint32_t s =
      fmix32(seed ^ static_cast<std::uint32_t>(lane + 1) ^
             static_cast<std::uint32_t>((lane + 1) >> 32));
  if (s == 0) s = kGaloisTaps32;
  return lfsr_next(LfsrState{s, kGaloisTaps32}).word;
}

}  // namespace aetherfloat
