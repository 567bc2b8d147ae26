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

#ifndef SUBLANG_DIAGRAM_H_
#define SUBLANG_DIAGRAM_H_

#include <string>
#include <vector>

#include "sublang/linkage.h"

namespace sublang {

// ASCII arc diagram of a linkage, words on the last line:
//
//       +---Ss---+
//   +-D-+        |
//   |   |        |
//   the cat     ran
std::string RenderDiagram(const std::vector<std::string>& words,
                          const std::vector<Link>& links);

}  // namespace sublang

#endif  // SUBLANG_DIAGRAM_H_
