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

#ifndef SUBLANG_ERROR_H_
#define SUBLANG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sublang {

enum class ErrorCode {
  kIoError,
  kSyntaxError,
  kDanglingMacro,
  kMacroCycle,
  kDuplicateEntry,
  kUnresolvableToken,
  kTimeout,
  kBadPattern,
  kBadHeadIndex,
  kMalformedLinks,
  kReexpansionConflict,
  kGoldIndexOutOfRange,
  kMissingBaseline,
  kScoreOutOfRange,
  kConfigError,
};

// Stable upper-case name, e.g. "DANGLING_MACRO".
std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported by throwing Error. what() carries the
// code name followed by a human readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace sublang

#endif  // SUBLANG_ERROR_H_
