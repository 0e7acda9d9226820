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

#include "aetherfloat/quantize.hpp"

#include <cmath>

#include "aetherfloat/error.hpp"

namespace aetherfloat {

namespace {

int floor_div2(int v) noexcept { return v >= 0 ? v / 2 : -((1 - v) / 2); }

Code overflow_code(bool negative, const FormatSpec& spec,
                   const QuantizeOptions& options) {
  if (options.mode != RoundingMode::kTowardZero &&
      options.overflow == OverflowPolicy::kToInf) {
    return infinity_code(spec, negative);
  }
  return max_finite_code(spec, negative);
}

Code zero_code(bool negative, const FormatSpec& spec,
               const QuantizeOptions& options) {
  return options.preserve_zero_sign && negative ? Code{spec.word_mask()}
                                                : positive_zero(spec);
}

}  // namespace

Code quantize_scalar_sticky(double x, bool sticky, const FormatSpec& spec,
                            const QuantizeOptions& options,
                            std::optional<std::uint32_t> rand) {
  if (!spec.has_specials() && options.overflow == OverflowPolicy::kToInf) {
    throw Error(ErrorCode::kInvalidArgument,
                "ToInf overflow needs the preferred embodiment");
  }
  if (options.mode == RoundingMode::kStochastic && !rand) {
    throw Error(ErrorCode::kInvalidArgument,
                "stochastic rounding needs a random word");
  }
  const bool negative = std::signbit(x);
  if (std::isnan(x) || std::isinf(x)) {
    if (!spec.has_specials()) {
      throw Error(ErrorCode::kIdealizedSpecialInput,
                  "NaN/Inf input under the idealized embodiment");
    }
    if (std::isnan(x)) return canonical_nan(spec, negative);
    return options.overflow == OverflowPolicy::kToInf
               ? infinity_code(spec, negative)
               : max_finite_code(spec, negative);
  }

  const double mag = std::fabs(x);
  if (mag == 0.0) return zero_code(negative, spec, options);

  // Band E holds [4^(E-bias), 4^(E-bias+1)); below E = 1 the E = 1 quantum
  // applies.
  const int top = static_cast<int>(spec.top_finite_exp());
  const int natural_exp = floor_div2(std::ilogb(mag)) + spec.bias();
  if (natural_exp > top) return overflow_code(negative, spec, options);
  const int band = natural_exp < 1 ? 1 : natural_exp;

  const double scaled =
      std::ldexp(mag, spec.mant_scale_log2() - 2 * (band - spec.bias()));
  const double floor_scaled = std::floor(scaled);
  const double fraction = scaled - floor_scaled;
  auto mant = static_cast<std::uint32_t>(floor_scaled);

  bool up = false;
  switch (options.mode) {
    case RoundingMode::kNearestEven:
      up = fraction > 0.5 ||
           (fraction == 0.5 && ((mant & 1u) != 0 || sticky));
      break;
    case RoundingMode::kStochastic:
      up = stochastic_round_up(fraction, *rand);
      break;
    case RoundingMode::kTowardZero:
      break;
  }
  if (up) ++mant;

  auto exp = static_cast<std::uint32_t>(band);
  if (mant > spec.mant_max()) {
    // Carry out of the band: 2^m * q == 2^(m-2) * 4q.
    mant >>= 2;
    ++exp;
    if (exp > spec.top_finite_exp()) {
      return overflow_code(negative, spec, options);
    }
  }
  if (mant == 0) return zero_code(negative, spec, options);
  if (exp == 1 && mant < spec.leading_pair_unit()) exp = 0;
  return pack(Unpacked{negative ? 1u : 0u, exp, mant}, spec);
}

Code quantize_scalar(double x, const FormatSpec& spec,
                     const QuantizeOptions& options,
                     std::optional<std::uint32_t> rand) {
  return quantize_scalar_sticky(x, false, spec, options, rand);
}

double round_trip(double x, const FormatSpec& spec,
                  const QuantizeOptions& options,
                  std::optional<std::uint32_t> rand) {
  return decode(quantize_scalar(x, spec, options, rand), spec).value;
}

VectorSrQuantizer::VectorSrQuantizer(const FormatSpec& spec,
                                     SrTopology topology, std::uint32_t seed,
                                     std::size_t lanes,
                                     OverflowPolicy overflow)
    : spec_(spec), topology_(topology), lanes_(lanes) {
  if (topology_.chunk_size == 0) {
    throw Error(ErrorCode::kInvalidArgument, "chunk_size must be >= 1");
  }
  if (seed == 0) {
    throw Error(ErrorCode::kZeroState, "vector SR seed must be nonzero");
  }
  options_.mode = RoundingMode::kStochastic;
  options_.overflow = overflow;
  const std::size_t chunks =
      (lanes_ + topology_.chunk_size - 1) / topology_.chunk_size;
  chunks_.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    chunks_.emplace_back(lane_seed(seed, c));
  }
}

std::vector<std::uint32_t> VectorSrQuantizer::draw_words() {
  std::vector<std::uint32_t> words(lanes_);
  for (std::size_t c = 0; c < chunks_.size(); ++c) {
    const std::uint32_t word = chunks_[c].next();
    const std::size_t begin = c * topology_.chunk_size;
    const std::size_t end = std::min(lanes_, begin + topology_.chunk_size);
    for (std::size_t j = begin; j < end; ++j) {
      const auto lane = static_cast<unsigned>(j - begin);
      words[j] = topology_.derivation == LaneDerivation::kLaneRotate
                     ? rotl32(word, 2 * lane)
                     : word;
    }
  }
  return words;
}

void VectorSrQuantizer::quantize(std::span<const double> xs,
                                 std::span<Code> out) {
  if (xs.size() != lanes_ || out.size() != lanes_) {
    throw Error(ErrorCode::kInvalidArgument,
                "vector SR expects exactly " + std::to_string(lanes_) +
                    " lanes");
  }
  const std::vector<std::uint32_t> words = draw_words();
  for (std::size_t j = 0; j < lanes_; ++j) {
    out[j] = quantize_scalar(xs[j], spec_, options_, words[j]);
  }
}

std::vector<Code> VectorSrQuantizer::quantize(std::span<const double> xs) {
  std::vector<Code> out(xs.size());
  quantize(xs, out);
  return out;
}

std::vector<Code> quantize_vector_sr(std::span<const double> xs,
                                     const FormatSpec& spec,
                                     SrTopology topology, std::uint32_t seed,
                                     OverflowPolicy overflow) {
  VectorSrQuantizer q(spec, topology, seed, xs.size(), overflow);
  return q.quantize(xs);
}

SteOutput ste_fake_quantize(double x, const FormatSpec& spec) {
  const double forward = round_trip(x, spec);
  const double max_finite = format_constants(spec).max_finite;
  return {forward, std::fabs(x) <= max_finite ? 1.0 : 0.0};
}

}  // namespace aetherfloat
