// Copyright 2026 The Sublang Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sublang/error.h"

namespace sublang {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIoError:
      return "IO_ERROR";
    case ErrorCode::kSyntaxError:
      return "SYNTAX_ERROR";
    case ErrorCode::kDanglingMacro:
      return "DANGLING_MACRO";
    case ErrorCode::kMacroCycle:
      return "MACRO_CYCLE";
    case ErrorCode::kDuplicateEntry:
      return "DUPLICATE_ENTRY";
    case ErrorCode::kUnresolvableToken:
      return "UNRESOLVABLE_TOKEN";
    case ErrorCode::kTimeout:
      return "TIMEOUT";
    case ErrorCode::kBadPattern:
      return "BAD_PATTERN";
    case ErrorCode::kBadHeadIndex:
      return "BAD_HEAD_INDEX";
    case ErrorCode::kMalformedLinks:
      return "MALFORMED_LINKS";
    case ErrorCode::kReexpansionConflict:
      return "REEXPANSION_CONFLICT";
    case ErrorCode::kGoldIndexOutOfRange:
      return "GOLD_INDEX_OUT_OF_RANGE";
    case ErrorCode::kMissingBaseline:
      return "MISSING_BASELINE";
    case ErrorCode::kScoreOutOfRange:
      return "SCORE_OUT_OF_RANGE";
    case ErrorCode::kConfigError:
      return "CONFIG_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace sublang
