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

#include "aetherfloat/error.hpp"

namespace aetherfloat {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kFieldOverflow: return "FieldOverflow";
    case ErrorCode::kZeroState: return "ZeroState";
    case ErrorCode::kIdealizedSpecialInput: return "IdealizedSpecialInput";
    case ErrorCode::kSpecialOperand: return "SpecialOperand";
    case ErrorCode::kBadMagic: return "BadMagic";
    case ErrorCode::kUnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::kUnknownDtype: return "UnknownDtype";
    case ErrorCode::kDimOverflow: return "DimOverflow";
    case ErrorCode::kTruncatedPayload: return "TruncatedPayload";
    case ErrorCode::kTrailingBytes: return "TrailingBytes";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kDegenerateSample: return "DegenerateSample";
    case ErrorCode::kDivergenceDetected: return "DivergenceDetected";
  }
  return "Unknown";
}

}  // namespace aetherfloat
