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

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace aetherfloat {

/// Shortest decimal that reads back to the same binary64 ("0.1", "57344",
/// "1.220703125e-4", "inf", "-inf", "nan"). Exponents carry no leading zeros.
std::string format_number(double v);

/// Minimal CSV emitter: header row first, LF line endings, '.' decimal
/// separator, numbers via format_number. Fields are written verbatim, so
/// callers must not pass commas or quotes inside text fields.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header);

  CsvWriter& field(std::string_view text);
  CsvWriter& field(double v);
  CsvWriter& field(long long v);
  CsvWriter& field(unsigned long long v);
  CsvWriter& field(int v) { return field(static_cast<long long>(v)); }
  CsvWriter& field(unsigned v) {
    return field(static_cast<unsigned long long>(v));
  }
  CsvWriter& field(unsigned long v) {
    return field(static_cast<unsigned long long>(v));
  }
  CsvWriter& field(long v) { return field(static_cast<long long>(v)); }
  CsvWriter& field(bool v) { return field(v ? "1" : "0"); }
  CsvWriter& field(const char* text) { return field(std::string_view(text)); }

  /// Ends the row; throws Error(kInvalidArgument) on a column-count mismatch.
  void end_row();

 private:
  std::ostream& out_;
  std::size_t columns_;
  std::size_t in_row_ = 0;
};

}  // namespace aetherfloat
