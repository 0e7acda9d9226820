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

#include "aetherfloat/csv.hpp"

#include <charconv>
#include <cmath>

#include "aetherfloat/error.hpp"

namespace aetherfloat {

namespace {

std::string shortest(double v, std::chars_format fmt) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, fmt);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  const std::string fixed = shortest(v, std::chars_format::fixed);
  std::string sci = shortest(v, std::chars_format::scientific);
  // "1.220703125e-04" -> "1.220703125e-4"
  std::size_t digits = sci.find('e') + 1;
  if (sci[digits] == '+') {
    sci.erase(digits, 1);
  } else if (sci[digits] == '-') {
    ++digits;
  }
  while (digits + 1 < sci.size() && sci[digits] == '0') sci.erase(digits, 1);
  return sci.size() < fixed.size() ? sci : fixed;
}

CsvWriter::CsvWriter(std::ostream& out,
                     std::initializer_list<std::string_view> header)
    : out_(out), columns_(header.size()) {
  for (const std::string_view h : header) field(h);
  end_row();
}

CsvWriter& CsvWriter::field(std::string_view text) {
  if (in_row_ > 0) out_ << ',';
  out_ << text;
  ++in_row_;
  return *this;
}

CsvWriter& CsvWriter::field(double v) { return field(format_number(v)); }

CsvWriter& CsvWriter::field(long long v) { return field(std::to_string(v)); }

CsvWriter& CsvWriter::field(unsigned long long v) {
  return field(std::to_string(v));
}

void CsvWriter::end_row() {
  if (in_row_ != columns_) {
    throw Error(ErrorCode::kInvalidArgument,
                "CSV row has " + std::to_string(in_row_) + " fields, header has " +
                    std::to_string(columns_));
  }
  out_ << '\n';
  in_row_ = 0;
}

}  // namespace aetherfloat
