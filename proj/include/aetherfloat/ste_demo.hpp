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
#include <span>
#include <vector>

#include "aetherfloat/format.hpp"
#include "aetherfloat/quantize.hpp"

namespace aetherfloat {

/// Synthetic least-squares problem y = X w* + noise, fully determined by the
/// seed. X is Gaussian; |w*| is log-uniform on [weight_min, weight_max] with
/// random signs.
struct ToyProblem {
  std::size_t samples = 256;
  std::size_t features = 16;
  double weight_min = 1e-5;
  double weight_max = 10.0;
  double noise_sigma = 2.0;
  double learning_rate = 0.05;
  std::size_t steps = 500;
  std::uint64_t seed = 1;

  /// Every true weight below the AF8 flush threshold (2^-14), no noise.
  static ToyProblem sub_threshold();
};

struct ToyData {
  std::size_t samples = 0;
  std::size_t features = 0;
  std::vector<double> x;  // row-major samples x features
  std::vector<double> y;
  std::vector<double> true_weights;
};

ToyData make_toy_data(const ToyProblem& problem);

/// mean((X w - y)^2)
double mse(const ToyData& data, std::span<const double> w);
/// Gradient of mse with respect to w.
std::vector<double> linear_gradient(const ToyData& data,
                                    std::span<const double> w);

struct LossPoint {
  std::size_t step = 0;
  double qat_loss = 0.0;
  double baseline_loss = 0.0;
};

struct QatResult {
  std::vector<LossPoint> curve;  // steps + 1 points, step 0 is the start
  double final_mse = 0.0;
  double baseline_mse = 0.0;
  std::vector<double> qat_weights;
  std::vector<double> baseline_weights;
  std::vector<double> true_weights;
  /// Whether each stored weight ever left its initial value.
  std::vector<bool> weight_changed;
};

/// Plain-SGD QAT on the toy problem with weights stored in `spec`.
///
/// Each step: the forward pass uses ste_fake_quantize of the stored weights;
/// the gradient passes the quantizer through the STE gain; the update
/// w - lr * g is rounded back onto the grid with NearestEven, or with
/// vector-shared SR when sr_on_grads is set. A binary64 SGD run from the same
/// start is the baseline. Throws Error(kDivergenceDetected) if either loss
/// exceeds 10^6 times its initial value.
QatResult train_qat(const ToyProblem& problem, const FormatSpec& spec,
                    bool sr_on_grads, std::uint32_t sr_seed = 1,
                    SrTopology topology = {});

}  // namespace aetherfloat
