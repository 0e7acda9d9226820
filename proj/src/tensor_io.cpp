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

#include "aetherfloat/tensor_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>

#include "aetherfloat/error.hpp"

namespace aetherfloat {

namespace {

constexpr std::uint8_t kMagic[4] = {'A', 'F', 'T', '1'};
constexpr std::size_t kFixedHeader = 7;

bool is_code_dtype(Dtype d) { return d != Dtype::kF32 && d != Dtype::kF64; }

Dtype checked_dtype(std::uint8_t v) {
  if (v < 1 || v > 6) {
    throw Error(ErrorCode::kUnknownDtype, "dtype " + std::to_string(v));
  }
  return static_cast<Dtype>(v);
}

std::uint64_t load_u64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

void store_le(std::vector<std::uint8_t>& out, std::uint64_t v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

std::uint64_t load_le(const std::uint8_t* p, std::size_t n) {
  std::uint64_t v = 0;
  for (std::size_t i = n; i-- > 0;) v = (v << 8) | p[i];
  return v;
}

// Product of dims times element size, or throws kDimOverflow.
std::uint64_t payload_bytes(const std::vector<std::uint64_t>& dims,
                            std::size_t elem) {
  std::uint64_t total = elem;
  for (const std::uint64_t d : dims) {
    if (d != 0 && total > std::numeric_limits<std::uint64_t>::max() / d) {
      throw Error(ErrorCode::kDimOverflow, "dims overflow 64 bits");
    }
    total *= d;
  }
  return total;
}

std::vector<std::uint8_t> slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

std::size_t element_size(Dtype dtype) {
  switch (dtype) {
    case Dtype::kF32: return 4;
    case Dtype::kF64: return 8;
    case Dtype::kAf8: return 1;
    case Dtype::kAf16: return 2;
    case Dtype::kFp8: return 1;
    case Dtype::kBf16: return 2;
  }
  throw Error(ErrorCode::kUnknownDtype, "unknown dtype");
}

const char* dtype_name(Dtype dtype) noexcept {
  switch (dtype) {
    case Dtype::kF32: return "f32";
    case Dtype::kF64: return "f64";
    case Dtype::kAf8: return "af8";
    case Dtype::kAf16: return "af16";
    case Dtype::kFp8: return "fp8";
    case Dtype::kBf16: return "bf16";
  }
  return "unknown";
}

std::uint64_t TensorFile::element_count() const {
  std::uint64_t n = 1;
  for (const std::uint64_t d : dims) n *= d;
  return n;
}

TensorFile TensorFile::from_f64(std::vector<std::uint64_t> dims,
                                std::span<const double> values) {
  TensorFile t{Dtype::kF64, std::move(dims), {}};
  if (t.element_count() != values.size()) {
    throw Error(ErrorCode::kInvalidArgument, "dims do not match value count");
  }
  t.payload.reserve(values.size() * 8);
  for (const double v : values) {
    store_le(t.payload, std::bit_cast<std::uint64_t>(v), 8);
  }
  return t;
}

TensorFile TensorFile::from_f32(std::vector<std::uint64_t> dims,
                                std::span<const float> values) {
  TensorFile t{Dtype::kF32, std::move(dims), {}};
  if (t.element_count() != values.size()) {
    throw Error(ErrorCode::kInvalidArgument, "dims do not match value count");
  }
  t.payload.reserve(values.size() * 4);
  for (const float v : values) {
    store_le(t.payload, std::bit_cast<std::uint32_t>(v), 4);
  }
  return t;
}

TensorFile TensorFile::from_words(Dtype dtype, std::vector<std::uint64_t> dims,
                                  std::span<const std::uint32_t> words) {
  if (!is_code_dtype(dtype)) {
    throw Error(ErrorCode::kInvalidArgument, "from_words needs a code dtype");
  }
  TensorFile t{dtype, std::move(dims), {}};
  if (t.element_count() != words.size()) {
    throw Error(ErrorCode::kInvalidArgument, "dims do not match value count");
  }
  const std::size_t elem = element_size(dtype);
  t.payload.reserve(words.size() * elem);
  for (const std::uint32_t w : words) store_le(t.payload, w, elem);
  return t;
}

std::vector<double> TensorFile::to_f64() const {
  std::vector<double> out;
  if (dtype == Dtype::kF64) {
    out.reserve(payload.size() / 8);
    for (std::size_t i = 0; i + 8 <= payload.size(); i += 8) {
      out.push_back(std::bit_cast<double>(load_le(&payload[i], 8)));
    }
  } else if (dtype == Dtype::kF32) {
    out.reserve(payload.size() / 4);
    for (std::size_t i = 0; i + 4 <= payload.size(); i += 4) {
      out.push_back(std::bit_cast<float>(
          static_cast<std::uint32_t>(load_le(&payload[i], 4))));
    }
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("tensor holds codes (") + dtype_name(dtype) +
                    "), not floats");
  }
  return out;
}

std::vector<std::uint32_t> TensorFile::to_words() const {
  if (!is_code_dtype(dtype)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("tensor holds floats (") + dtype_name(dtype) +
                    "), not codes");
  }
  const std::size_t elem = element_size(dtype);
  std::vector<std::uint32_t> out;
  out.reserve(payload.size() / elem);
  for (std::size_t i = 0; i + elem <= payload.size(); i += elem) {
    out.push_back(static_cast<std::uint32_t>(load_le(&payload[i], elem)));
  }
  return out;
}

TensorFile parse_tensor(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw Error(ErrorCode::kBadMagic, "missing AFT1 magic");
  }
  if (bytes.size() < kFixedHeader) {
    throw Error(ErrorCode::kTruncatedPayload, "header shorter than 7 bytes");
  }
  if (bytes[4] != kTensorVersion) {
    throw Error(ErrorCode::kUnsupportedVersion,
                "version " + std::to_string(bytes[4]));
  }
  TensorFile t;
  t.dtype = checked_dtype(bytes[5]);
  const std::size_t rank = bytes[6];
  const std::size_t header = kFixedHeader + 8 * rank;
  if (bytes.size() < header) {
    throw Error(ErrorCode::kTruncatedPayload, "dims truncated");
  }
  t.dims.resize(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    t.dims[i] = load_u64(&bytes[kFixedHeader + 8 * i]);
  }
  const std::uint64_t need = payload_bytes(t.dims, element_size(t.dtype));
  const std::uint64_t have = bytes.size() - header;
  if (have < need) {
    throw Error(ErrorCode::kTruncatedPayload,
                "payload has " + std::to_string(have) + " bytes, dims need " +
                    std::to_string(need));
  }
  if (have > need) {
    throw Error(ErrorCode::kTrailingBytes,
                std::to_string(have - need) + " bytes after payload");
  }
  t.payload.assign(bytes.begin() + static_cast<std::ptrdiff_t>(header),
                   bytes.end());
  return t;
}

std::vector<std::uint8_t> serialize_tensor(const TensorFile& t) {
  if (t.dims.size() > 255) {
    throw Error(ErrorCode::kDimOverflow, "rank exceeds 255");
  }
  const std::uint64_t need = payload_bytes(t.dims, element_size(t.dtype));
  if (need != t.payload.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "payload size does not match dims");
  }
  std::vector<std::uint8_t> out(kMagic, kMagic + 4);
  out.push_back(kTensorVersion);
  out.push_back(static_cast<std::uint8_t>(t.dtype));
  out.push_back(static_cast<std::uint8_t>(t.dims.size()));
  for (const std::uint64_t d : t.dims) store_le(out, d, 8);
  out.insert(out.end(), t.payload.begin(), t.payload.end());
  return out;
}

TensorFile read_tensor(const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = slurp(path);
  return parse_tensor(bytes);
}

void write_tensor(const std::filesystem::path& path, const TensorFile& t) {
  const std::vector<std::uint8_t> bytes = serialize_tensor(t);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error(ErrorCode::kIoError, "short write to " + path.string());
  }
}

TensorFile read_raw_floats(const std::filesystem::path& path, Dtype dtype) {
  if (dtype != Dtype::kF32 && dtype != Dtype::kF64) {
    throw Error(ErrorCode::kInvalidArgument, "raw input must be f32 or f64");
  }
  std::vector<std::uint8_t> bytes = slurp(path);
  const std::size_t elem = element_size(dtype);
  if (bytes.size() % elem != 0) {
    throw Error(ErrorCode::kTruncatedPayload,
                "raw file size is not a multiple of " + std::to_string(elem));
  }
  TensorFile t{dtype, {bytes.size() / elem}, std::move(bytes)};
  return t;
}

}  // namespace aetherfloat
