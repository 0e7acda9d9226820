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
#include <filesystem>
#include <span>
#include <vector>

namespace aetherfloat {

// Binary tensor container, little-endian throughout:
//
//   offset  size        field
//   0       4           magic "AFT1"
//   4       1           version (1)
//   5       1           dtype (see Dtype)
//   6       1           rank
//   7       8 * rank    dims, u64 each
//   ...     prod(dims) * element size   payload, row-major
//
// Code dtypes store the raw packed words (1 or 2 bytes) unchanged.

enum class Dtype : std::uint8_t {
  kF32 = 1,
  kF64 = 2,
  kAf8 = 3,
  kAf16 = 4,
  kFp8 = 5,
  kBf16 = 6,
};

inline constexpr std::uint8_t kTensorVersion = 1;

std::size_t element_size(Dtype dtype);
const char* dtype_name(Dtype dtype) noexcept;

struct TensorFile {
  Dtype dtype = Dtype::kF64;
  std::vector<std::uint64_t> dims;
  std::vector<std::uint8_t> payload;

  std::uint64_t element_count() const;

  static TensorFile from_f64(std::vector<std::uint64_t> dims,
                             std::span<const double> values);
  static TensorFile from_f32(std::vector<std::uint64_t> dims,
                             std::span<const float> values);
  /// Code dtypes (af8, af16, fp8, bf16); each word is truncated to the
  /// dtype's width.
  static TensorFile from_words(Dtype dtype, std::vector<std::uint64_t> dims,
                               std::span<const std::uint32_t> words);

  /// Float payloads as binary64 (kF32 is widened exactly).
  std::vector<double> to_f64() const;
  /// Code payloads as raw words.
  std::vector<std::uint32_t> to_words() const;

  friend bool operator==(const TensorFile&, const TensorFile&) = default;
};

/// Errors: kBadMagic, kUnsupportedVersion, kUnknownDtype, kDimOverflow,
/// kTruncatedPayload, kTrailingBytes.
TensorFile parse_tensor(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> serialize_tensor(const TensorFile& t);

TensorFile read_tensor(const std::filesystem::path& path);
void write_tensor(const std::filesystem::path& path, const TensorFile& t);

/// Flat little-endian binary32/binary64 file without a header, as a rank-1
/// tensor.
TensorFile read_raw_floats(const std::filesystem::path& path, Dtype dtype);

}  // namespace aetherfloat
