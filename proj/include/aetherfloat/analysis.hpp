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
#include <string>
#include <string_view>
#include <vector>

#include "aetherfloat/format.hpp"
#include "aetherfloat/quantize.hpp"

namespace aetherfloat {

enum class DistKind { kLogUniform, kGaussian, kLaplace, kConstant };

/// Sampling distribution for the SQNR sweep.
///   loguniform:LO:HI  positive, log-uniform on [LO, HI]
///   gaussian:SIGMA    zero-mean normal
///   laplace:B         zero-mean Laplace with scale B
///   constant:V        every sample equals V
/// Numbers accept decimal or power-of-two form ("2^-20").
struct Distribution {
  DistKind kind = DistKind::kLogUniform;
  double a = 0x1p-20;
  double b = 0x1p20;

  static Distribution parse(std::string_view text);
  std::string describe() const;
  /// Deterministic sample i for the given seed.
  double sample(std::uint64_t seed, std::uint64_t index) const noexcept;
};

/// 10 log10(sum x^2 / sum (x - xhat)^2); +infinity when the error is zero.
double sqnr_db(std::span<const double> x, std::span<const double> xhat);

inline constexpr std::size_t kSqnrWindow = 256;

struct SqnrSummary {
  double mean_db = 0.0;
  double min_db = 0.0;
  double median_db = 0.0;
  double max_db = 0.0;
};

struct SqnrReport {
  std::string subject_name;
  std::string baseline_name;
  SqnrSummary subject;
  SqnrSummary baseline;
  /// baseline mean - subject mean; 0 when both are infinite.
  double gap_db = 0.0;
  std::size_t samples = 0;
  std::size_t windows = 0;
  std::string distribution;
  std::uint64_t seed = 0;
  std::vector<double> subject_window_db;
  std::vector<double> baseline_window_db;
};

/// Quantizes n samples with `subject` (NearestEven) and with bfloat16, and
/// summarizes SQNR over consecutive 256-sample windows (the tail window may
/// be shorter). Needs n >= 10^4; throws Error(kDegenerateSample) when every
/// sample is zero.
SqnrReport wobble_sweep(const Distribution& dist, std::size_t n,
                        std::uint64_t seed,
                        const FormatSpec& subject = FormatSpec::af16());

inline constexpr std::size_t kAblationBatches = 32;

struct AblationRow {
  LaneDerivation derivation = LaneDerivation::kLaneRotate;
  std::size_t chunk = 1;
  std::size_t lanes = 0;
  std::size_t trials = 0;
  /// Mean decoded value minus the input.
  double mean_bias = 0.0;
  /// Standard error of mean_bias from kAblationBatches batch means of
  /// consecutive trials.
  double bias_stderr = 0.0;
  /// Mean Pearson correlation of rounding decisions over lane pairs sharing a
  /// chunk; for chunk = 1, over all lane pairs.
  double pairwise_corr = 0.0;
  /// Mean correlation over lane pairs in different chunks (NaN if only one
  /// chunk).
  double cross_chunk_corr = 0.0;
};

/// Rounds `lanes` copies of `x` (default: the AF8 midpoint 1.25 between 1.0
/// and 1.5) for `trials` steps with each derivation and chunk size, and
/// reports bias and decision correlation. A stand-in for model-level
/// ablations: it measures how far shared randomness departs from independent
/// per-lane SR.
std::vector<AblationRow> sr_correlation_ablation(
    std::span<const std::size_t> chunk_sizes, std::size_t lanes,
    std::size_t trials, std::uint32_t seed,
    const FormatSpec& spec = FormatSpec::af8(), double x = 1.25);

struct UnderflowCensus {
  std::size_t total = 0;
  std::size_t nonzero = 0;
  std::size_t flushed_count = 0;
  /// flushed_count / nonzero, or 0 when there are no nonzero inputs.
  double flushed_fraction = 0.0;
  /// Smallest nonzero |x| that survived quantization.
  std::optional<double> min_survivor;
  /// Every element satisfies: flushed <=> |x| <= min_subnormal / 2.
  bool threshold_consistent = true;
};

/// Counts nonzero finite inputs that NearestEven quantization sends to zero.
UnderflowCensus underflow_census(std::span<const double> xs,
                                 const FormatSpec& spec);

}  // namespace aetherfloat
