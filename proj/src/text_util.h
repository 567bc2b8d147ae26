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

// Small string helpers shared by the resource loaders. Internal header.

#ifndef SUBLANG_SRC_TEXT_UTIL_H_
#define SUBLANG_SRC_TEXT_UTIL_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace sublang::internal {

// Whole file contents. Throws IO_ERROR naming the path.
std::string ReadFile(const std::filesystem::path& path);

std::vector<std::string_view> SplitLines(std::string_view text);
std::vector<std::string_view> Split(std::string_view s, char delim);
std::vector<std::string_view> SplitWhitespace(std::string_view s);
std::string_view Trim(std::string_view s);
std::string ToLower(std::string_view s);
bool IsSpace(char c);

// Strips a trailing '#' comment, then surrounding whitespace.
std::string_view StripHashComment(std::string_view line);

}  // namespace sublang::internal

#endif  // SUBLANG_SRC_TEXT_UTIL_H_
