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

#include "aetherfloat/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "aetherfloat/baselines.hpp"
#include "aetherfloat/error.hpp"
#include "aetherfloat/random.hpp"

namespace aetherfloat {

namespace {

double parse_number(std::string_view text) {
  auto parse_plain = [&](std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad number '" + std::string(text) + "'");
    }
    return v;
  };
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) return parse_plain(text);
  return std::pow(parse_plain(text.substr(0, caret)),
                  parse_plain(text.substr(caret + 1)));
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

SqnrSummary summarize(std::vector<double> db) {
  SqnrSummary s;
  if (db.empty()) return s;
  double sum = 0.0;
  for (const double v : db) sum += v;
  s.mean_db = sum / static_cast<double>(db.size());
  std::sort(db.begin(), db.end());
  s.min_db = db.front();
  s.max_db = db.back();
  const std::size_t mid = db.size() / 2;
  s.median_db = db.size() % 2 ? db[mid] : 0.5 * (db[mid - 1] + db[mid]);
  return s;
}

double pearson(double n, double si, double sj, double sij, double sii,
               double sjj) {
  const double cov = sij / n - (si / n) * (sj / n);
  const double vi = sii / n - (si / n) * (si / n);
  const double vj = sjj / n - (sj / n) * (sj / n);
  if (vi <= 0.0 || vj <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  return cov / std::sqrt(vi * vj);
}

}  // namespace

Distribution Distribution::parse(std::string_view text) {
  const auto parts = split(text, ':');
  const std::string_view name = parts[0];
  Distribution d;
  if (name == "loguniform" && parts.size() == 3) {
    d = {DistKind::kLogUniform, parse_number(parts[1]), parse_number(parts[2])};
    if (!(d.a > 0.0) || !(d.b >= d.a)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "loguniform needs 0 < LO <= HI");
    }
  } else if (name == "gaussian" && parts.size() == 2) {
    d = {DistKind::kGaussian, parse_number(parts[1]), 0.0};
  } else if (name == "laplace" && parts.size() == 2) {
    d = {DistKind::kLaplace, parse_number(parts[1]), 0.0};
  } else if (name == "constant" && parts.size() == 2) {
    d = {DistKind::kConstant, parse_number(parts[1]), 0.0};
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown distribution '" + std::string(text) + "'");
  }
  return d;
}

std::string Distribution::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind) {
    case DistKind::kLogUniform: os << "loguniform:" << a << ':' << b; break;
    case DistKind::kGaussian: os << "gaussian:" << a; break;
    case DistKind::kLaplace: os << "laplace:" << a; break;
    case DistKind::kConstant: os << "constant:" << a; break;
  }
  return os.str();
}

double Distribution::sample(std::uint64_t seed,
                            std::uint64_t index) const noexcept {
  const double u = counter_uniform(seed, 1, index);
  switch (kind) {
    case DistKind::kLogUniform:
      return std::exp(std::log(a) + u * (std::log(b) - std::log(a)));
    case DistKind::kGaussian: {
      const double u2 = counter_uniform(seed, 2, index);
      return a * std::sqrt(-2.0 * std::log(u)) *
             std::cos(2.0 * std::numbers::pi * u2);
    }
    case DistKind::kLaplace: {
      const double c = u - 0.5;
      return -a * std::copysign(1.0, c) * std::log1p(-2.0 * std::fabs(c));
    }
    case DistKind::kConstant:
      return a;
  }
  return 0.0;
}

double sqnr_db(std::span<const double> x, std::span<const double> xhat) {
  if (x.size() != xhat.size()) {
    throw Error(ErrorCode::kInvalidArgument, "sqnr_db size mismatch");
  }
  double signal = 0.0;
  double noise = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    signal += x[i] * x[i];
    const double e = x[i] - xhat[i];
    noise += e * e;
  }
  if (noise == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(signal / noise);
}

SqnrReport wobble_sweep(const Distribution& dist, std::size_t n,
                        std::uint64_t seed, const FormatSpec& subject) {
  if (n < 10000) {
    throw Error(ErrorCode::kInvalidArgument, "wobble sweep needs n >= 10^4");
  }
  std::vector<double> xs(n);
  bool any_nonzero = false;
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = dist.sample(seed, i);
    any_nonzero = any_nonzero || xs[i] != 0.0;
  }
  if (!any_nonzero) {
    throw Error(ErrorCode::kDegenerateSample, "every sample is zero");
  }

  SqnrReport report;
  report.subject_name = subject.name();
  report.baseline_name = "bf16";
  report.samples = n;
  report.distribution = dist.describe();
  report.seed = seed;

  std::vector<double> q_subject(kSqnrWindow);
  std::vector<double> q_baseline(kSqnrWindow);
  for (std::size_t begin = 0; begin < n; begin += kSqnrWindow) {
    const std::size_t len = std::min(kSqnrWindow, n - begin);
    const std::span<const double> window(xs.data() + begin, len);
    for (std::size_t i = 0; i < len; ++i) {
      q_subject[i] = round_trip(window[i], subject);
      q_baseline[i] = bf16_decode(bf16_quantize(window[i]));
    }
    report.subject_window_db.push_back(
        sqnr_db(window, std::span<const double>(q_subject.data(), len)));
    report.baseline_window_db.push_back(
        sqnr_db(window, std::span<const double>(q_baseline.data(), len)));
  }
  report.windows = report.subject_window_db.size();
  report.subject = summarize(report.subject_window_db);
  report.baseline = summarize(report.baseline_window_db);
  if (std::isinf(report.subject.mean_db) &&
      std::isinf(report.baseline.mean_db)) {
    report.gap_db = 0.0;
  } else {
    report.gap_db = report.baseline.mean_db - report.subject.mean_db;
  }
  return report;
}

std::vector<AblationRow> sr_correlation_ablation(
    std::span<const std::size_t> chunk_sizes, std::size_t lanes,
    std::size_t trials, std::uint32_t seed, const FormatSpec& spec,
    double x) {
  if (lanes < 2 || trials < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "ablation needs at least 2 lanes and 2 trials");
  }
  // Rounding away from the truncated grid point counts as an "up" decision.
  const double lo_v =
      round_trip(x, spec, {RoundingMode::kTowardZero, OverflowPolicy::kSaturate});
  const std::vector<double> xs(lanes, x);

  std::vector<AblationRow> rows;
  for (const LaneDerivation derivation :
       {LaneDerivation::kBroadcast, LaneDerivation::kLaneRotate}) {
    for (const std::size_t chunk : chunk_sizes) {
      if (chunk == 0) {
        throw Error(ErrorCode::kInvalidArgument, "chunk sizes must be >= 1");
      }
      VectorSrQuantizer q(spec, SrTopology{chunk, derivation}, seed, lanes);
      std::vector<double> lane_sum(lanes, 0.0);
      std::vector<double> co(lanes * lanes, 0.0);
      double total = 0.0;
      std::vector<double> trial_means(trials);
      std::vector<Code> out(lanes);
      std::vector<double> up(lanes);
      for (std::size_t t = 0; t < trials; ++t) {
        q.quantize(xs, out);
        double trial_total = 0.0;
        for (std::size_t j = 0; j < lanes; ++j) {
          const double v = decode(out[j], spec).value;
          trial_total += v;
          up[j] = v != lo_v ? 1.0 : 0.0;
          lane_sum[j] += up[j];
        }
        for (std::size_t i = 0; i < lanes; ++i) {
          if (up[i] == 0.0) continue;
          for (std::size_t j = i; j < lanes; ++j) co[i * lanes + j] += up[j];
        }
        total += trial_total;
        trial_means[t] = trial_total / static_cast<double>(lanes);
      }

      AblationRow row;
      row.derivation = derivation;
      row.chunk = chunk;
      row.lanes = lanes;
      row.trials = trials;
      const double nt = static_cast<double>(trials);
      row.mean_bias = total / (nt * static_cast<double>(lanes)) - x;
      // Batch means: successive LFSR words overlap in all but one bit, so
      // single trials are serially correlated and their spread understates
      // the error.
      const std::size_t nb = std::min<std::size_t>(trials, kAblationBatches);
      double bsum = 0.0, bsq = 0.0;
      for (std::size_t b = 0; b < nb; ++b) {
        const std::size_t lo = b * trials / nb, hi = (b + 1) * trials / nb;
        double m = 0.0;
        for (std::size_t t = lo; t < hi; ++t) m += trial_means[t];
        m /= static_cast<double>(hi - lo);
        bsum += m;
        bsq += m * m;
      }
      const double nbd = static_cast<double>(nb);
      const double bmean = bsum / nbd;
      const double bvar =
          std::max(0.0, (bsq / nbd - bmean * bmean) * nbd / (nbd - 1.0));
      row.bias_stderr = std::sqrt(bvar / nbd);

      double in_sum = 0.0, cross_sum = 0.0;
      std::size_t in_count = 0, cross_count = 0;
      for (std::size_t i = 0; i < lanes; ++i) {
        for (std::size_t j = i + 1; j < lanes; ++j) {
          // Binary decisions: sum of squares equals the sum.
          const double r =
              pearson(nt, lane_sum[i], lane_sum[j], co[i * lanes + j],
                      lane_sum[i], lane_sum[j]);
          if (std::isnan(r)) continue;
          const bool same_chunk = chunk == 1 || i / chunk == j / chunk;
          if (same_chunk) {
            in_sum += r;
            ++in_count;
          } else {
            cross_sum += r;
            ++cross_count;
          }
        }
      }
      const double nan = std::numeric_limits<double>::quiet_NaN();
      row.pairwise_corr = in_count ? in_sum / static_cast<double>(in_count) : nan;
      row.cross_chunk_corr =
          cross_count ? cross_sum / static_cast<double>(cross_count) : nan;
      rows.push_back(row);
    }
  }
  return rows;
}

UnderflowCensus underflow_census(std::span<const double> xs,
                                 const FormatSpec& spec) {
  UnderflowCensus census;
  census.total = xs.size();
  const double half_quantum = format_constants(spec).min_subnormal / 2.0;
  for (const double x : xs) {
    if (x == 0.0 || !std::isfinite(x)) continue;
    ++census.nonzero;
    const Value v = decode(quantize_scalar(x, spec), spec);
    const bool flushed = v.is_finite() && v.value == 0.0;
    if (flushed) {
      ++census.flushed_count;
    } else if (!census.min_survivor || std::fabs(x) < *census.min_survivor) {
      census.min_survivor = std::fabs(x);
    }
    if (flushed != (std::fabs(x) <= half_quantum)) {
      census.threshold_consistent = false;
    }
  }
  if (census.nonzero > 0) {
    census.flushed_fraction = static_cast<double>(census.flushed_count) /
                              static_cast<double>(census.nonzero);
  }
  return census;
}

}  // namespace aetherfloat
