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

// Counter-based helpers: the value for index i depends only on (seed, stream,
// i), so any partitioning of the index range yields identical draws.

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                                     std::uint64_t index) noexcept {
  return splitmix64(splitmix64(seed ^ splitmix64(stream)) + index);
}

/// Uniform double in the open interval (0, 1).
constexpr double counter_uniform(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t index) noexcept {
  const std::uint64_t bits = counter_hash(seed, stream, index) >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by multiply-shift; bound > 0.
constexpr std::uint64_t counter_below(std::uint64_t seed, std::uint64_t stream,
                                      std::uint64_t index,
                                      std::uint64_t bound) noexcept {
  const unsigned __int128 wide =
      static_cast<unsigned __int128>(counter_hash(seed, stream, index)) * bound;
  return static_cast<std::uint64_t>(wide >> 64);
}

}  // namespace aetherfloat
