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

#include "sublang/diagram.h"

#include <algorithm>

namespace sublang {

std::string RenderDiagram(const std::vector<std::string>& words,
                          const std::vector<Link>& links) {
  int n = static_cast<int>(words.size());
  if (n == 0) return "";
  std::vector<Link> sorted = links;
  std::sort(sorted.begin(), sorted.end(), [](const Link& a, const Link& b) {
    return a.right - a.left < b.right - b.left;
  });

  // A link sits one level above every link nested inside it.
  std::vector<int> level(sorted.size(), 1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (sorted[i].left <= sorted[j].left &&
          sorted[j].right <= sorted[i].right) {
        level[i] = std::max(level[i], level[j] + 1);
      }
    }
  }
  int height =
      sorted.empty() ? 0 : *std::max_element(level.begin(), level.end());

  std::vector<int> x(n, 0);
  for (int i = 1; i < n; ++i) {
    x[i] = x[i - 1] + static_cast<int>(words[i - 1].size()) + 1;
  }
  for (const Link& l : sorted) {
    int need = static_cast<int>(l.label.size()) + 4;
    int deficit = need - (x[l.right] - x[l.left]);
    if (deficit > 0) {
      for (int i = l.right; i < n; ++i) x[i] += deficit;
    }
  }
  int width = x[n - 1] + static_cast<int>(words[n - 1].size());

  std::vector<std::string> rows(height + 1, std::string(width, ' '));
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Link& l = sorted[i];
    int row = height - level[i];
    int a = x[l.left];
    int b = x[l.right];
    std::string& line = rows[row];
    line[a] = '+';
    line[b] = '+';
    for (int c = a + 1; c < b; ++c) line[c] = '-';
    int start = a + 1 + (b - a - 1 - static_cast<int>(l.label.size())) / 2;
    line.replace(start, l.label.size(), l.label);
    for (int r = row + 1; r <= height; ++r) {
      if (rows[r][a] == ' ') rows[r][a] = '|';
      if (rows[r][b] == ' ') rows[r][b] = '|';
    }
  }
  std::string words_line(width, ' ');
  for (int i = 0; i < n; ++i)
    words_line.replace(x[i], words[i].size(), words[i]);

  std::string out;
  for (std::string& r : rows) {
    while (!r.empty() && r.back() == ' ') r.pop_back();
    if (r.empty()) continue;
    out += r + "\n";
  }
  out += words_line + "\n";
  return out;
}

}  // namespace sublang
