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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "aetherfloat/error.hpp"
#include "aetherfloat/random.hpp"
#include "aetherfloat/tensor_io.hpp"

namespace af = aetherfloat;

namespace {

af::ErrorCode parse_error(const std::vector<std::uint8_t>& bytes) {
  try {
    af::parse_tensor(bytes);
  } catch (const af::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parse succeeded";
  return af::ErrorCode::kInvalidArgument;
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST(TensorIo, FileRoundTripF64) {
  const std::vector<double> v{1.0, -2.5, 3e-300, 0.0, 1e300, -0.0};
  const auto t = af::TensorFile::from_f64({2, 3}, v);
  const auto path = temp_file("aft_roundtrip.aft");
  af::write_tensor(path, t);
  const auto back = af::read_tensor(path);
  EXPECT_EQ(back, t);
  EXPECT_EQ(back.dims, (std::vector<std::uint64_t>{2, 3}));
  EXPECT_EQ(back.to_f64(), v);
  std::filesystem::remove(path);
}

TEST(TensorIo, Af8AllCodesBytePreserved) {
  std::vector<std::uint32_t> words(256);
  for (std::uint32_t i = 0; i < 256; ++i) words[i] = i;
  const auto t = af::TensorFile::from_words(af::Dtype::kAf8, {256}, words);
  const auto bytes = af::serialize_tensor(t);
  ASSERT_EQ(bytes.size(), 7u + 8u + 256u);
  for (std::size_t i = 0; i < 256; ++i) EXPECT_EQ(bytes[15 + i], i);
  EXPECT_EQ(af::parse_tensor(bytes).to_words(), words);
}

TEST(TensorIo, HeaderLayout) {
  const std::vector<std::uint32_t> w{0x1234};
  const auto bytes = af::serialize_tensor(
      af::TensorFile::from_words(af::Dtype::kAf16, {1}, w));
  const std::vector<std::uint8_t> want{'A', 'F', 'T', '1', 1, 4, 1,
                                       1,   0,   0,   0,   0, 0, 0,
                                       0,   0x34, 0x12};
  EXPECT_EQ(bytes, want);
}

TEST(TensorIo, Errors) {
  const auto good = af::serialize_tensor(
      af::TensorFile::from_f64({2}, std::vector<double>{1.0, 2.0}));

  auto bad = good;
  bad[0] = 'X';
  bad[1] = 'X';
  bad[2] = 'X';
  bad[3] = 'X';
  EXPECT_EQ(parse_error(bad), af::ErrorCode::kBadMagic);

  bad = good;
  bad[4] = 2;
  EXPECT_EQ(parse_error(bad), af::ErrorCode::kUnsupportedVersion);

  bad = good;
  bad[5] = 9;
  EXPECT_EQ(parse_error(bad), af::ErrorCode::kUnknownDtype);

  bad = good;
  bad.pop_back();
  EXPECT_EQ(parse_error(bad), af::ErrorCode::kTruncatedPayload);

  bad = good;
  bad.push_back(0);
  EXPECT_EQ(parse_error(bad), af::ErrorCode::kTrailingBytes);

  // dims 2^40 x 2^40 overflow 64 bits once multiplied by 8-byte elements.
  std::vector<std::uint8_t> huge{'A', 'F', 'T', '1', 1, 2, 2};
  for (int d = 0; d < 2; ++d) {
    for (int i = 0; i < 8; ++i) huge.push_back(i == 5 ? 1 : 0);
  }
  EXPECT_EQ(parse_error(huge), af::ErrorCode::kDimOverflow);

  EXPECT_EQ(parse_error({'A', 'F'}), af::ErrorCode::kBadMagic);
  EXPECT_EQ(parse_error({'A', 'F', 'T', '1', 1}),
            af::ErrorCode::kTruncatedPayload);
}

TEST(TensorIo, FuzzNeverCrashes) {
  // Random mutations of a valid file either parse or raise a typed Error.
  const auto good = af::serialize_tensor(af::TensorFile::from_f32(
      {3, 2}, std::vector<float>{1, 2, 3, 4, 5, 6}));
  for (std::uint64_t i = 0; i < 20000; ++i) {
    auto bytes = good;
    const auto flips = 1 + af::counter_below(17, 0, i, 4);
    for (std::uint64_t k = 0; k < flips; ++k) {
      const auto pos = af::counter_below(17, 1 + k, i, bytes.size());
      bytes[pos] = static_cast<std::uint8_t>(af::counter_below(17, 9 + k, i, 256));
    }
    const auto cut = af::counter_below(17, 20, i, bytes.size() + 1);
    if (i % 3 == 0) bytes.resize(cut);
    try {
      const auto t = af::parse_tensor(bytes);
      EXPECT_EQ(af::serialize_tensor(t), bytes);
    } catch (const af::Error&) {
    }
  }
}

TEST(TensorIo, RawFloatImport) {
  const auto path = temp_file("aft_raw.bin");
  {
    std::ofstream out(path, std::ios::binary);
    const float v[3] = {1.5f, -2.0f, 0.25f};
    out.write(reinterpret_cast<const char*>(v), sizeof v);
  }
  const auto t = af::read_raw_floats(path, af::Dtype::kF32);
  EXPECT_EQ(t.dims, (std::vector<std::uint64_t>{3}));
  EXPECT_EQ(t.to_f64(), (std::vector<double>{1.5, -2.0, 0.25}));
  EXPECT_THROW(af::read_raw_floats(path, af::Dtype::kF64), af::Error);
  std::filesystem::remove(path);
  EXPECT_THROW(af::read_tensor(path), af::Error);
}

TEST(TensorIo, TypedAccessorsCheckDtype) {
  const auto t = af::TensorFile::from_f64({1}, std::vector<double>{1.0});
  EXPECT_THROW(t.to_words(), af::Error);
  const std::vector<std::uint32_t> w{1};
  const auto c = af::TensorFile::from_words(af::Dtype::kBf16, {1}, w);
  EXPECT_THROW(c.to_f64(), af::Error);
  EXPECT_THROW(af::TensorFile::from_f64({2}, std::vector<double>{1.0}),
               af::Error);
}
