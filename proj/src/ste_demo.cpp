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

#include "aetherfloat/ste_demo.hpp"

#include <cmath>
#include <numbers>
#include <optional>

#include "aetherfloat/error.hpp"
#include "aetherfloat/random.hpp"

namespace aetherfloat {

namespace {

enum Stream : std::uint64_t {
  kFeatures = 10,
  kFeaturesPhase = 11,
  kWeightMagnitude = 12,
  kWeightSign = 13,
  kNoise = 14,
  kNoisePhase = 15,
};

double gaussian(std::uint64_t seed, std::uint64_t stream,
                std::uint64_t phase_stream, std::uint64_t index) {
  const double u1 = counter_uniform(seed, stream, index);
  const double u2 = counter_uniform(seed, phase_stream, index);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

void check_loss(double loss, double initial, const char* which) {
  if (!std::isfinite(loss) || (initial > 0.0 && loss > 1e6 * initial)) {
    throw Error(ErrorCode::kDivergenceDetected,
                std::string(which) + " loss diverged");
  }
}

}  // namespace

ToyProblem ToyProblem::sub_threshold() {
  ToyProblem p;
  p.weight_min = 1e-5;
  p.weight_max = 5e-5;
  p.noise_sigma = 0.0;
  return p;
}

ToyData make_toy_data(const ToyProblem& problem) {
  if (problem.samples == 0 || problem.features == 0) {
    throw Error(ErrorCode::kInvalidArgument, "toy problem needs data");
  }
  if (!(problem.weight_min > 0.0) || problem.weight_max < problem.weight_min) {
    throw Error(ErrorCode::kInvalidArgument, "bad true-weight range");
  }
  ToyData d;
  d.samples = problem.samples;
  d.features = problem.features;
  const std::uint64_t seed = problem.seed;

  d.true_weights.resize(d.features);
  const double log_lo = std::log(problem.weight_min);
  const double log_hi = std::log(problem.weight_max);
  for (std::size_t j = 0; j < d.features; ++j) {
    const double u = counter_uniform(seed, kWeightMagnitude, j);
    const double mag = std::exp(log_lo + u * (log_hi - log_lo));
    const bool negative = counter_uniform(seed, kWeightSign, j) < 0.5;
    d.true_weights[j] = negative ? -mag : mag;
  }

  d.x.resize(d.samples * d.features);
  for (std::size_t k = 0; k < d.x.size(); ++k) {
    d.x[k] = gaussian(seed, kFeatures, kFeaturesPhase, k);
  }
  d.y.resize(d.samples);
  for (std::size_t i = 0; i < d.samples; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < d.features; ++j) {
      acc += d.x[i * d.features + j] * d.true_weights[j];
    }
    d.y[i] = acc + problem.noise_sigma * gaussian(seed, kNoise, kNoisePhase, i);
  }
  return d;
}

double mse(const ToyData& data, std::span<const double> w) {
  double sum = 0.0;
  for (std::size_t i = 0; i < data.samples; ++i) {
    double pred = 0.0;
    for (std::size_t j = 0; j < data.features; ++j) {
      pred += data.x[i * data.features + j] * w[j];
    }
    const double r = pred - data.y[i];
    sum += r * r;
  }
  return sum / static_cast<double>(data.samples);
}

std::vector<double> linear_gradient(const ToyData& data,
                                    std::span<const double> w) {
  std::vector<double> g(data.features, 0.0);
  for (std::size_t i = 0; i < data.samples; ++i) {
    double pred = 0.0;
    for (std::size_t j = 0; j < data.features; ++j) {
      pred += data.x[i * data.features + j] * w[j];
    }
    const double r = pred - data.y[i];
    for (std::size_t j = 0; j < data.features; ++j) {
      g[j] += r * data.x[i * data.features + j];
    }
  }
  const double scale = 2.0 / static_cast<double>(data.samples);
  for (double& v : g) v *= scale;
  return g;
}

QatResult train_qat(const ToyProblem& problem, const FormatSpec& spec,
                    bool sr_on_grads, std::uint32_t sr_seed,
                    SrTopology topology) {
  const ToyData data = make_toy_data(problem);
  const std::size_t d = data.features;
  const double lr = problem.learning_rate;

  std::vector<double> stored(d, 0.0);
  std::vector<double> baseline(d, 0.0);
  std::vector<double> effective(d);
  std::vector<double> target(d);
  std::vector<Code> codes(d);

  std::optional<VectorSrQuantizer> sr;
  if (sr_on_grads) sr.emplace(spec, topology, sr_seed, d);

  QatResult result;
  result.true_weights = data.true_weights;
  result.weight_changed.assign(d, false);

  auto forward = [&] {
    std::vector<double> gains(d);
    for (std::size_t j = 0; j < d; ++j) {
      const SteOutput s = ste_fake_quantize(stored[j], spec);
      effective[j] = s.forward;
      gains[j] = s.backward_gain;
    }
    return gains;
  };

  forward();
  const double initial_qat = mse(data, effective);
  const double initial_base = mse(data, baseline);
  result.curve.push_back({0, initial_qat, initial_base});

  for (std::size_t step = 1; step <= problem.steps; ++step) {
    const std::vector<double> gains = forward();
    std::vector<double> g = linear_gradient(data, effective);
    for (std::size_t j = 0; j < d; ++j) {
      target[j] = stored[j] - lr * gains[j] * g[j];
    }
    if (sr) {
      sr->quantize(target, codes);
    } else {
      for (std::size_t j = 0; j < d; ++j) {
        codes[j] = quantize_scalar(target[j], spec);
      }
    }
    for (std::size_t j = 0; j < d; ++j) {
      const double next = decode(codes[j], spec).value;
      if (next != stored[j]) result.weight_changed[j] = true;
      stored[j] = next;
    }

    const std::vector<double> gb = linear_gradient(data, baseline);
    for (std::size_t j = 0; j < d; ++j) baseline[j] -= lr * gb[j];

    forward();
    const LossPoint point{step, mse(data, effective), mse(data, baseline)};
    check_loss(point.qat_loss, initial_qat, "QAT");
    check_loss(point.baseline_loss, initial_base, "baseline");
    result.curve.push_back(point);
  }

  result.final_mse = result.curve.back().qat_loss;
  result.baseline_mse = result.curve.back().baseline_loss;
  result.qat_weights = stored;
  result.baseline_weights = baseline;
  return result;
}

}  // namespace aetherfloat
