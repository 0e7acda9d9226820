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

// aftool: command-line front end for the aetherfloat library.
//
// Exit status: 0 success, 1 usage error, 2 data error.

#include <CLI11.hpp>

#include <bit>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aetherfloat/analysis.hpp"
#include "aetherfloat/baselines.hpp"
#include "aetherfloat/csv.hpp"
#include "aetherfloat/error.hpp"
#include "aetherfloat/format.hpp"
#include "aetherfloat/lexico.hpp"
#include "aetherfloat/lfsr.hpp"
#include "aetherfloat/mac.hpp"
#include "aetherfloat/quantize.hpp"
#include "aetherfloat/ste_demo.hpp"
#include "aetherfloat/tensor_io.hpp"

namespace af = aetherfloat;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "af8";
  std::string embodiment = "preferred";
  std::string mode = "rne";
  std::string overflow = "saturate";
  std::string topology = "rotate";
  std::size_t chunk = 16;
  std::uint32_t seed = 1;
};

const std::map<std::string, af::Embodiment> kEmbodiments{
    {"preferred", af::Embodiment::kPreferred},
    {"idealized", af::Embodiment::kIdealized}};
const std::map<std::string, af::RoundingMode> kModes{
    {"rne", af::RoundingMode::kNearestEven},
    {"sr", af::RoundingMode::kStochastic},
    {"trunc", af::RoundingMode::kTowardZero}};
const std::map<std::string, af::OverflowPolicy> kOverflows{
    {"saturate", af::OverflowPolicy::kSaturate},
    {"inf", af::OverflowPolicy::kToInf}};
const std::map<std::string, af::LaneDerivation> kTopologies{
    {"broadcast", af::LaneDerivation::kBroadcast},
    {"rotate", af::LaneDerivation::kLaneRotate}};

bool is_af(const std::string& format) {
  return format == "af8" || format == "af16";
}

af::FormatSpec af_spec(const Options& o) {
  const af::Embodiment emb = kEmbodiments.at(o.embodiment);
  if (o.format == "af8") return af::FormatSpec::af8(emb);
  if (o.format == "af16") return af::FormatSpec::af16(emb);
  throw UsageError("--format " + o.format + " is not an AetherFloat format");
}

af::SrTopology topology(const Options& o) {
  if (o.chunk == 0) throw UsageError("--chunk must be at least 1");
  return {o.chunk, kTopologies.at(o.topology)};
}

af::Dtype code_dtype(const std::string& format) {
  if (format == "af8") return af::Dtype::kAf8;
  if (format == "af16") return af::Dtype::kAf16;
  if (format == "fp8") return af::Dtype::kFp8;
  return af::Dtype::kBf16;
}

int word_bits(const std::string& format) {
  return format == "af8" || format == "fp8" ? 8 : 16;
}

std::string hex_word(std::uint32_t w, int bits) {
  std::ostringstream os;
  os << "0x" << std::uppercase << std::hex << std::setw(bits / 4)
     << std::setfill('0') << w;
  return os.str();
}

/// Encodes values in the selected format. Stochastic AF encoding runs one
/// vector-SR step over all values, so lane i of the output is value i.
std::vector<std::uint32_t> encode_values(const std::vector<double>& xs,
                                         const Options& o) {
  std::vector<std::uint32_t> words;
  words.reserve(xs.size());
  if (is_af(o.format)) {
    const af::FormatSpec spec = af_spec(o);
    const af::RoundingMode mode = kModes.at(o.mode);
    const af::OverflowPolicy overflow = kOverflows.at(o.overflow);
    if (mode == af::RoundingMode::kStochastic) {
      for (const af::Code c :
           af::quantize_vector_sr(xs, spec, topology(o), o.seed, overflow)) {
        words.push_back(c.raw);
      }
    } else {
      for (const double x : xs) {
        words.push_back(af::quantize_scalar(x, spec, {mode, overflow}).raw);
      }
    }
    return words;
  }
  if (o.mode != "rne") {
    throw UsageError("--mode " + o.mode + " is only available for af8/af16");
  }
  for (const double x : xs) {
    if (o.format == "fp8") {
      words.push_back(af::fp8_quantize(x, o.overflow == "inf"
                                              ? af::Fp8Overflow::kToNaN
                                              : af::Fp8Overflow::kSaturate)
                          .raw);
    } else {
      words.push_back(af::bf16_quantize(x).raw);
    }
  }
  return words;
}

double decode_word(std::uint32_t w, const Options& o) {
  if (is_af(o.format)) return af::decode(af::Code{w}, af_spec(o)).value;
  if (o.format == "fp8") {
    return af::fp8_decode(af::Fp8E4m3Code{static_cast<std::uint8_t>(w)});
  }
  return af::bf16_decode(af::Bf16Code{static_cast<std::uint16_t>(w)});
}

double parse_double(const std::string& text) {
  if (text == "inf" || text == "+inf") return INFINITY;
  if (text == "-inf") return -INFINITY;
  if (text == "nan" || text == "+nan") return NAN;
  if (text == "-nan") return -NAN;
  double v = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("not a number: '" + text + "'");
  }
  return v;
}

/// Accepts 0x-prefixed hex, an unsigned word, or a negative signed word.
std::uint32_t parse_word(const std::string& text, int bits) {
  const std::uint32_t mask = (1u << bits) - 1;
  long long v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    first += 2;
    base = 16;
  }
  const auto [ptr, ec] = std::from_chars(first, last, v, base);
  if (ec != std::errc() || ptr != last) {
    throw UsageError("not a code word: '" + text + "'");
  }
  const long long lo = -(1ll << (bits - 1));
  if (v < lo || v > static_cast<long long>(mask)) {
    throw UsageError("code word out of range for " + std::to_string(bits) +
                     " bits: " + text);
  }
  return static_cast<std::uint32_t>(v) & mask;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(item));
  return out;
}

const char* kind_name(const af::Value& v, const af::Classification& c) {
  switch (v.kind) {
    case af::ValueKind::kNaN: return "nan";
    case af::ValueKind::kPosInf:
    case af::ValueKind::kNegInf: return "inf";
    case af::ValueKind::kFinite: break;
  }
  switch (c.category) {
    case af::Category::kZero: return "zero";
    case af::Category::kSubnormal: return "subnormal";
    default: return "normal";
  }
}

/// Output stream that is stdout for "-" or an empty path.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::trunc);
      if (!*file_) {
        throw af::Error(af::ErrorCode::kIoError, "cannot write " + path);
      }
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  bool to_stdout() const { return file_ == nullptr; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void add_format(CLI::App* cmd, Options& o, bool af_only) {
  std::vector<std::string> formats{"af8", "af16"};
  if (!af_only) {
    formats.push_back("fp8");
    formats.push_back("bf16");
  }
  cmd->add_option("--format", o.format, "Number format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  cmd->add_option("--embodiment", o.embodiment,
                  "Top exponent band: reserved for specials or finite")
      ->check(CLI::IsMember({"preferred", "idealized"}))
      ->capture_default_str();
}

void add_rounding(CLI::App* cmd, Options& o) {
  cmd->add_option("--mode", o.mode, "Rounding mode")
      ->check(CLI::IsMember({"rne", "sr", "trunc"}))
      ->capture_default_str();
  cmd->add_option("--overflow", o.overflow, "Overflow policy")
      ->check(CLI::IsMember({"saturate", "inf"}))
      ->capture_default_str();
}

void add_sr(CLI::App* cmd, Options& o) {
  cmd->add_option("--chunk", o.chunk, "Lanes per shared LFSR")
      ->capture_default_str();
  cmd->add_option("--topology", o.topology, "Lane word derivation")
      ->check(CLI::IsMember({"broadcast", "rotate"}))
      ->capture_default_str();
}

void add_seed(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "Seed (u32)")->capture_default_str();
}

void print_seed(std::uint32_t seed) { std::cout << "seed: " << seed << '\n'; }

std::vector<double> load_values(const std::string& path, const std::string& raw) {
  if (raw == "f32") return af::read_raw_floats(path, af::Dtype::kF32).to_f64();
  if (raw == "f64") return af::read_raw_floats(path, af::Dtype::kF64).to_f64();
  return af::read_tensor(path).to_f64();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AetherFloat toolkit: codecs, quantizers, MAC emulation and "
               "analyses for the AF8/AF16 formats"};
  app.require_subcommand(1);
  Options o;

  // encode
  std::vector<std::string> enc_values;
  auto* encode = app.add_subcommand("encode", "Quantize values to code words");
  add_format(encode, o, false);
  add_rounding(encode, o);
  add_sr(encode, o);
  add_seed(encode, o);
  encode->add_option("values", enc_values, "Values to encode")->required();

  // decode
  std::vector<std::string> dec_words;
  auto* decode = app.add_subcommand("decode", "Decode code words");
  add_format(decode, o, false);
  decode->add_option("codes", dec_words,
                     "Code words: 0x hex, unsigned, or negative signed key")
      ->required();

  // quantize / dequantize
  std::string in_path, out_path, raw_in;
  auto* quantize = app.add_subcommand(
      "quantize", "Quantize an f32/f64 tensor file into a code tensor");
  add_format(quantize, o, false);
  add_rounding(quantize, o);
  add_sr(quantize, o);
  add_seed(quantize, o);
  quantize->add_option("--in", in_path, "Input tensor")->required();
  quantize->add_option("--out", out_path, "Output code tensor")->required();
  quantize->add_option("--raw", raw_in,
                       "Treat --in as headerless little-endian floats")
      ->check(CLI::IsMember({"f32", "f64"}));

  auto* dequantize = app.add_subcommand(
      "dequantize", "Decode a code tensor into an f64 tensor");
  dequantize->add_option("--embodiment", o.embodiment)
      ->check(CLI::IsMember({"preferred", "idealized"}))
      ->capture_default_str();
  dequantize->add_option("--in", in_path, "Input code tensor")->required();
  dequantize->add_option("--out", out_path, "Output f64 tensor")->required();

  // sort-check
  std::uint64_t n = 1000012;
  bool exhaustive = false;
  auto* sort_check = app.add_subcommand(
      "sort-check", "Check integer ordering of codes against value order");
  add_format(sort_check, o, true);
  add_seed(sort_check, o);
  sort_check->add_option("--n", n, "Random canonical codes to sort")
      ->capture_default_str();
  sort_check->add_flag("--exhaustive", exhaustive,
                       "Check every pair of canonical codes instead");

  // sqnr
  std::string dist_text = "loguniform:2^-20:2^20";
  std::size_t sqnr_n = 1000000;
  auto* sqnr = app.add_subcommand(
      "sqnr", "Windowed SQNR of an AF format (default af16) against bfloat16");
  add_format(sqnr, o, true);
  add_seed(sqnr, o);
  sqnr->add_option("--dist", dist_text,
                   "loguniform:LO:HI | gaussian:SIGMA | laplace:B | constant:V")
      ->capture_default_str();
  sqnr->add_option("--n", sqnr_n, "Samples (>= 10000)")->capture_default_str();
  sqnr->add_option("--out", out_path, "Per-window CSV");

  // sr-ablation
  std::vector<std::size_t> chunks{1, 4, 16, 64};
  std::size_t lanes = 64, trials = 20000;
  double ablation_x = 1.25;
  auto* ablation = app.add_subcommand(
      "sr-ablation", "Bias and correlation of vector-shared SR by chunk size");
  add_format(ablation, o, true);
  add_seed(ablation, o);
  ablation->add_option("--chunks", chunks, "Chunk sizes")
      ->delimiter(',')
      ->capture_default_str();
  ablation->add_option("--lanes", lanes)->capture_default_str();
  ablation->add_option("--trials", trials)->capture_default_str();
  ablation->add_option("--x", ablation_x, "Input value on every lane")
      ->capture_default_str();
  ablation->add_option("--out", out_path, "CSV output");

  // underflow
  std::string uf_dist = "loguniform:2^-20:2^4";
  std::size_t uf_n = 100000;
  auto* underflow = app.add_subcommand(
      "underflow", "Count inputs that flush to zero under NearestEven");
  add_format(underflow, o, true);
  add_seed(underflow, o);
  underflow->add_option("--dist", uf_dist)->capture_default_str();
  underflow->add_option("--n", uf_n)->capture_default_str();
  underflow->add_option("--in", in_path, "Use a tensor file instead of --dist");
  underflow->add_option("--out", out_path, "CSV output");

  // mac-trace
  std::string mac_a, mac_b;
  int width = 32;
  auto* mac = app.add_subcommand(
      "mac-trace", "Step-by-step multiply-accumulate trace as CSV");
  add_format(mac, o, true);
  mac->add_option("--a", mac_a, "Comma-separated values")->required();
  mac->add_option("--b", mac_b, "Comma-separated values")->required();
  mac->add_option("--width", width, "Accumulator width W")
      ->capture_default_str();
  mac->add_option("--out", out_path, "CSV output (default stdout)");

  // ste-demo
  bool sr_grads = false, sub_threshold = false;
  std::size_t steps = 500;
  double lr = 0.05;
  auto* ste = app.add_subcommand("ste-demo",
                                 "Toy quantization-aware training with STE");
  add_format(ste, o, true);
  add_seed(ste, o);
  add_sr(ste, o);
  ste->add_flag("--sr-grads", sr_grads, "Round updates with vector SR");
  ste->add_flag("--sub-threshold", sub_threshold,
                "All true weights below the AF8 flush threshold, no noise");
  ste->add_option("--steps", steps)->capture_default_str();
  ste->add_option("--lr", lr)->capture_default_str();
  ste->add_option("--out", out_path, "Loss-curve CSV");

  // lfsr-selftest
  auto* lfsr = app.add_subcommand("lfsr-selftest",
                                  "Check the Galois LFSR against fixed facts");

  // constants
  bool csv = false;
  auto* constants =
      app.add_subcommand("constants", "Range constants of a format");
  add_format(constants, o, false);
  constants->add_flag("--csv", csv, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*encode) {
      std::vector<double> xs;
      for (const auto& t : enc_values) xs.push_back(parse_double(t));
      const auto words = encode_values(xs, o);
      if (o.mode == "sr") print_seed(o.seed);
      const int bits = word_bits(o.format);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        std::cout << enc_values[i] << ' ' << hex_word(words[i], bits);
        if (is_af(o.format)) {
          const auto u = af::unpack(af::Code{words[i]}, af_spec(o));
          std::cout << " S=" << u.sign << " E=" << u.exp << " M=" << u.mant;
        }
        std::cout << " value=" << af::format_number(decode_word(words[i], o))
                  << '\n';
      }
    } else if (*decode) {
      const int bits = word_bits(o.format);
      for (const auto& t : dec_words) {
        const std::uint32_t w = parse_word(t, bits);
        std::cout << hex_word(w, bits) << ' '
                  << af::format_number(decode_word(w, o));
        if (is_af(o.format)) {
          const af::FormatSpec spec = af_spec(o);
          const auto u = af::unpack(af::Code{w}, spec);
          const auto c = af::classify(u, spec);
          std::cout << " S=" << u.sign << " E=" << u.exp << " M=" << u.mant
                    << " key=" << af::order_key(af::Code{w}, spec) << ' '
                    << kind_name(af::decode(af::Code{w}, spec), c)
                    << (c.canonical ? "" : " non-canonical");
        }
        std::cout << '\n';
      }
    } else if (*quantize) {
      const af::TensorFile in =
          raw_in.empty() ? af::read_tensor(in_path)
                         : af::read_raw_floats(in_path, raw_in == "f32"
                                                            ? af::Dtype::kF32
                                                            : af::Dtype::kF64);
      const auto words = encode_values(in.to_f64(), o);
      if (o.mode == "sr") print_seed(o.seed);
      af::write_tensor(out_path,
                       af::TensorFile::from_words(code_dtype(o.format), in.dims,
                                                  words));
      std::cout << "wrote " << words.size() << ' ' << o.format << " codes to "
                << out_path << '\n';
    } else if (*dequantize) {
      const af::TensorFile in = af::read_tensor(in_path);
      switch (in.dtype) {
        case af::Dtype::kAf8: o.format = "af8"; break;
        case af::Dtype::kAf16: o.format = "af16"; break;
        case af::Dtype::kFp8: o.format = "fp8"; break;
        case af::Dtype::kBf16: o.format = "bf16"; break;
        default:
          throw af::Error(af::ErrorCode::kInvalidArgument,
                          "input holds floats, not codes");
      }
      std::vector<double> values;
      for (const std::uint32_t w : in.to_words()) {
        values.push_back(decode_word(w, o));
      }
      af::write_tensor(out_path, af::TensorFile::from_f64(in.dims, values));
      std::cout << "wrote " << values.size() << " f64 values to " << out_path
                << '\n';
    } else if (*sort_check) {
      const af::FormatSpec spec = af_spec(o);
      af::AuditResult r;
      if (exhaustive) {
        r = af::exhaustive_pair_audit(spec);
        std::cout << "mode: exhaustive pairs\n";
      } else {
        print_seed(o.seed);
        r = af::monotonicity_audit(spec, n, o.seed);
      }
      std::cout << "format: " << spec.name() << '\n'
                << "samples: " << r.samples << '\n'
                << "violations: " << r.violations << '\n';
      return r.violations == 0 ? 0 : 2;
    } else if (*sqnr) {
      if (sqnr->count("--format") == 0) o.format = "af16";
      print_seed(o.seed);
      const af::SqnrReport r = af::wobble_sweep(
          af::Distribution::parse(dist_text), sqnr_n, o.seed, af_spec(o));
      std::cout << "distribution: " << r.distribution << '\n'
                << "samples: " << r.samples << " windows: " << r.windows
                << " (" << af::kSqnrWindow << " samples each)\n";
      for (const auto& [name, s] :
           {std::pair{r.subject_name, r.subject},
            std::pair{r.baseline_name, r.baseline}}) {
        std::cout << name << " sqnr_db mean " << af::format_number(s.mean_db)
                  << " min " << af::format_number(s.min_db) << " median "
                  << af::format_number(s.median_db) << " max "
                  << af::format_number(s.max_db) << '\n';
      }
      std::cout << "gap_db " << af::format_number(r.gap_db) << '\n';
      if (!out_path.empty()) {
        Sink sink(out_path);
        af::CsvWriter w(sink.stream(),
                        {"window", "subject_db", "baseline_db"});
        for (std::size_t i = 0; i < r.windows; ++i) {
          w.field(i).field(r.subject_window_db[i]).field(r.baseline_window_db[i]);
          w.end_row();
        }
      }
    } else if (*ablation) {
      print_seed(o.seed);
      const auto rows = af::sr_correlation_ablation(chunks, lanes, trials,
                                                    o.seed, af_spec(o),
                                                    ablation_x);
      Sink sink(out_path);
      af::CsvWriter w(sink.stream(),
                      {"derivation", "chunk", "lanes", "trials", "mean_bias",
                       "bias_stderr", "pairwise_corr", "cross_chunk_corr"});
      for (const auto& r : rows) {
        w.field(r.derivation == af::LaneDerivation::kBroadcast ? "broadcast"
                                                                : "rotate")
            .field(r.chunk)
            .field(r.lanes)
            .field(r.trials)
            .field(r.mean_bias)
            .field(r.bias_stderr)
            .field(r.pairwise_corr)
            .field(r.cross_chunk_corr);
        w.end_row();
      }
    } else if (*underflow) {
      const af::FormatSpec spec = af_spec(o);
      std::vector<double> xs;
      std::string source;
      if (!in_path.empty()) {
        xs = af::read_tensor(in_path).to_f64();
        source = in_path;
      } else {
        print_seed(o.seed);
        const auto dist = af::Distribution::parse(uf_dist);
        xs.resize(uf_n);
        for (std::size_t i = 0; i < uf_n; ++i) xs[i] = dist.sample(o.seed, i);
        source = dist.describe();
      }
      const af::UnderflowCensus c = af::underflow_census(xs, spec);
      Sink sink(out_path);
      af::CsvWriter w(sink.stream(),
                      {"format", "source", "total", "nonzero", "flushed",
                       "flushed_fraction", "min_survivor",
                       "threshold_consistent"});
      w.field(spec.name())
          .field(source)
          .field(c.total)
          .field(c.nonzero)
          .field(c.flushed_count)
          .field(c.flushed_fraction)
          .field(c.min_survivor ? af::format_number(*c.min_survivor)
                                : std::string("none"))
          .field(c.threshold_consistent);
      w.end_row();
    } else if (*mac) {
      const af::FormatSpec spec = af_spec(o);
      const auto av = parse_list(mac_a);
      const auto bv = parse_list(mac_b);
      std::vector<af::Code> a, b;
      for (const double x : av) a.push_back(af::quantize_scalar(x, spec));
      for (const double x : bv) b.push_back(af::quantize_scalar(x, spec));
      af::AccumulatorConfig cfg;
      cfg.width = width;
      const auto rows = af::mac_trace(a, b, spec, cfg);
      Sink sink(out_path);
      af::CsvWriter w(sink.stream(),
                      {"step", "a", "b", "pmant", "pexp", "product",
                       "align_shift_bits", "normalize_shift_bits", "capped",
                       "sticky", "acc_sig", "acc_exp", "acc_value"});
      const int bits = word_bits(o.format);
      for (const auto& r : rows) {
        w.field(r.step)
            .field(hex_word(r.a.raw, bits))
            .field(hex_word(r.b.raw, bits))
            .field(r.product.pmant)
            .field(r.product.pexp)
            .field(af::product_value(r.product, spec))
            .field(r.trace.align_shift_bits)
            .field(r.trace.normalize_shift_bits)
            .field(r.trace.capped)
            .field(r.acc.sticky)
            .field(static_cast<unsigned long long>(r.acc.sig))
            .field(r.acc.aexp)
            .field(af::acc_value(r.acc, spec));
        w.end_row();
      }
      if (!rows.empty() && sink.to_stdout()) {
        const af::Code q = af::requantize(rows.back().acc, spec);
        std::cerr << "result " << hex_word(q.raw, bits) << ' '
                  << af::format_number(af::decode(q, spec).value) << '\n';
      }
    } else if (*ste) {
      af::ToyProblem p = sub_threshold ? af::ToyProblem::sub_threshold()
                                       : af::ToyProblem{};
      p.steps = steps;
      p.learning_rate = lr;
      p.seed = o.seed;
      print_seed(o.seed);
      const af::QatResult r =
          af::train_qat(p, af_spec(o), sr_grads, o.seed, topology(o));
      std::size_t changed = 0;
      for (const bool c : r.weight_changed) changed += c;
      std::cout << "format: " << af_spec(o).name()
                << (sr_grads ? " (sr on updates)" : " (rne updates)") << '\n'
                << "final_mse " << af::format_number(r.final_mse) << '\n'
                << "baseline_mse " << af::format_number(r.baseline_mse) << '\n'
                << "ratio " << af::format_number(r.final_mse / r.baseline_mse)
                << '\n'
                << "weights_changed " << changed << '/'
                << r.weight_changed.size() << '\n';
      if (!out_path.empty()) {
        Sink sink(out_path);
        af::CsvWriter w(sink.stream(), {"step", "qat_mse", "baseline_mse"});
        for (const auto& pt : r.curve) {
          w.field(pt.step).field(pt.qat_loss).field(pt.baseline_loss);
          w.end_row();
        }
      }
    } else if (*lfsr) {
      bool ok = true;
      auto check = [&](bool cond, const char* what) {
        std::cout << (cond ? "pass " : "FAIL ") << what << '\n';
        ok = ok && cond;
      };
      check(af::lfsr_next({1u, af::kGaloisTaps32}).word == af::kGaloisTaps32,
            "single-bit state steps to the tap mask");
      af::LfsrState s3{0xACE1u, af::kGaloisTaps32};
      for (int i = 0; i < 6; ++i) s3 = af::lfsr_next(s3).state;
      af::GaloisLfsr g6(0xACE1u);
      for (int i = 0; i < 6; ++i) g6.next();
      check(s3 == g6.state(), "stepwise and stateful generators agree");
      af::GaloisLfsr g(1u);
      std::uint64_t ones = 0;
      const int count = 1000000;
      for (int i = 0; i < count; ++i) ones += std::popcount(g.next());
      const double freq = static_cast<double>(ones) / (32.0 * count);
      check(freq > 0.498 && freq < 0.502, "monobit frequency of 10^6 words");
      bool zero_rejected = false;
      try {
        af::lfsr_next({0u, af::kGaloisTaps32});
      } catch (const af::Error&) {
        zero_rejected = true;
      }
      check(zero_rejected, "zero state rejected");
      std::cout << "monobit " << af::format_number(freq) << '\n'
                << "lfsr-selftest: " << (ok ? "ok" : "FAILED") << '\n';
      return ok ? 0 : 2;
    } else if (*constants) {
      double max_finite, min_normal, min_sub;
      std::string name;
      if (is_af(o.format)) {
        const af::FormatSpec spec = af_spec(o);
        const auto k = af::format_constants(spec);
        max_finite = k.max_finite;
        min_normal = k.min_normal;
        min_sub = k.min_subnormal;
        name = spec.name();
      } else if (o.format == "fp8") {
        max_finite = af::kFp8E4m3Max;
        min_normal = 0x1p-6;
        min_sub = 0x1p-9;
        name = "fp8-e4m3fn";
      } else {
        max_finite = af::bf16_decode(af::Bf16Code{0x7F7F});
        min_normal = 0x1p-126;
        min_sub = 0x1p-133;
        name = "bf16";
      }
      if (csv) {
        af::CsvWriter w(std::cout,
                        {"format", "max_finite", "min_normal", "min_subnormal"});
        w.field(name).field(max_finite).field(min_normal).field(min_sub);
        w.end_row();
      } else {
        std::cout << "format " << name << '\n'
                  << "max_finite " << af::format_number(max_finite) << '\n'
                  << "min_normal " << af::format_number(min_normal) << '\n'
                  << "min_subnormal " << af::format_number(min_sub) << '\n';
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const af::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == af::ErrorCode::kInvalidArgument ? 1 : 2;
  }
  return 0;
}
