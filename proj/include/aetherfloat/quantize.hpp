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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "aetherfloat/format.hpp"
#include "aetherfloat/lfsr.hpp"

namespace aetherfloat {

enum class RoundingMode { kNearestEven, kStochastic, kTowardZero };

/// Saturate clamps to +-max_finite. ToInf follows IEEE overflow and is only
/// valid for the Preferred embodiment.
enum class OverflowPolicy { kSaturate, kToInf };

struct QuantizeOptions {
  RoundingMode mode = RoundingMode::kNearestEven;
  OverflowPolicy overflow = OverflowPolicy::kSaturate;
  /// Zero results are +0 unless this is set, in which case the input sign is
  /// kept (-0 is the all-ones word).
  bool preserve_zero_sign = false;
};

/// Number of random bits compared against the rounding residual.
inline constexpr int kSrThresholdBits = 24;

/// Stochastic decision: true when the top 24 bits of `rand`, read as an
/// integer, fall below fraction * 2^24. fraction is in [0, 1).
constexpr bool stochastic_round_up(double fraction, std::uint32_t rand) noexcept {
  const double threshold = fraction * static_cast<double>(1u << kSrThresholdBits);
  return static_cast<double>(rand >> (32 - kSrThresholdBits)) < threshold;
}

/// Rounds a binary64 value onto the canonical grid of `spec`. All arithmetic
/// is binary64 and exact up to the final rounding decision. Stochastic mode
/// requires `rand`.
///
/// Errors: kIdealizedSpecialInput for NaN/Inf under the Idealized embodiment,
/// kInvalidArgument for ToInf under Idealized or Stochastic without `rand`.
Code quantize_scalar(double x, const FormatSpec& spec,
                     const QuantizeOptions& options = {},
                     std::optional<std::uint32_t> rand = std::nullopt);

/// As quantize_scalar, with `sticky` telling the rounder that the true value
/// lies strictly beyond |x| in magnitude by less than any grid spacing. Under
/// NearestEven this breaks exact ties upward; other modes ignore it.
Code quantize_scalar_sticky(double x, bool sticky, const FormatSpec& spec,
                            const QuantizeOptions& options = {},
                            std::optional<std::uint32_t> rand = std::nullopt);

/// Convenience: decode(quantize_scalar(x)).value.
double round_trip(double x, const FormatSpec& spec,
                  const QuantizeOptions& options = {},
                  std::optional<std::uint32_t> rand = std::nullopt);

enum class LaneDerivation { kBroadcast, kLaneRotate };

/// Vector-shared stochastic rounding: one LFSR per chunk of lanes.
struct SrTopology {
  std::size_t chunk_size = 16;
  LaneDerivation derivation = LaneDerivation::kLaneRotate;
};

/// Stateful vector SR quantizer over a fixed number of lanes.
///
/// Lane j belongs to chunk j / chunk_size, whose LFSR is seeded with
/// lane_seed(seed, chunk). Every call to quantize() advances each chunk's LFSR
/// by exactly one step; lane i of the chunk then uses rotl(word, 2i) under
/// LaneRotate or the word itself under Broadcast. Output depends only on the
/// seed and the sequence of calls.
class VectorSrQuantizer {
 public:
  VectorSrQuantizer(const FormatSpec& spec, SrTopology topology,
                    std::uint32_t seed, std::size_t lanes,
                    OverflowPolicy overflow = OverflowPolicy::kSaturate);

  std::size_t lanes() const noexcept { return lanes_; }
  const SrTopology& topology() const noexcept { return topology_; }

  /// Random words this step would use, one per lane; advances the LFSRs.
  std::vector<std::uint32_t> draw_words();

  void quantize(std::span<const double> xs, std::span<Code> out);
  std::vector<Code> quantize(std::span<const double> xs);

 private:
  FormatSpec spec_;
  SrTopology topology_;
  std::size_t lanes_;
  QuantizeOptions options_;
  std::vector<GaloisLfsr> chunks_;
};

/// One step of a fresh VectorSrQuantizer over xs.size() lanes.
std::vector<Code> quantize_vector_sr(
    std::span<const double> xs, const FormatSpec& spec, SrTopology topology,
    std::uint32_t seed, OverflowPolicy overflow = OverflowPolicy::kSaturate);

struct SteOutput {
  double forward = 0.0;
  double backward_gain = 0.0;
};

/// Fake quantization with a clipped straight-through estimator: forward is the
/// deterministic round trip (NearestEven, Saturate); the backward gain is 1
/// inside [-max_finite, +max_finite] and 0 outside.
SteOutput ste_fake_quantize(double x, const FormatSpec& spec);

}  // namespace aetherfloat
