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

#ifndef SUBLANG_LINKAGE_H_
#define SUBLANG_LINKAGE_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sublang/grammar.h"

namespace sublang {

class Lexicon;

struct Link {
  int left = 0;
  int right = 0;
  std::string label;

  auto operator<=>(const Link&) const = default;
  bool operator==(const Link&) const = default;
};

// A complete parse. `disjuncts[i]` is the disjunct token i used and
// `categories[i]` the category of the lexicon entry it came from. Tokens with
// `expanded[i]` set carry a disjunct synthesized by term re-expansion rather
// than one taken from the lexicon.
struct Linkage {
  std::vector<Link> links;  // sorted
  std::vector<Disjunct> disjuncts;
  std::vector<std::string> categories;
  std::vector<bool> expanded;
  int cost = 0;

  int TotalLinkLength() const;
  bool operator==(const Linkage&) const = default;
};

// Order used to rank linkages: cost, then total link length, then the link
// sets compared lexicographically as indicator vectors (the set holding the
// smallest differing link sorts first).
bool RankLess(const Linkage& a, const Linkage& b);
int CompareLinkSets(const std::vector<Link>& a, const std::vector<Link>& b);

struct ParseResult {
  std::uint64_t linkage_count = 0;  // NbL, saturates at UINT64_MAX
  std::vector<Linkage> linkages;    // best first, at most the cap
  double parse_time_seconds = 0.0;  // PT
  bool complete = false;            // CLF
  bool timed_out = false;
};

// Checks planarity, connectivity, exclusion and disjunct satisfaction of
// `linkage` over `num_tokens` tokens. Satisfaction is checked against the
// linkage's own disjunct choice: every connector is used exactly once (a
// multi connector one or more times) in nearest-first order and each link's
// label is the resolved label of its two connectors.
bool ValidateLinkage(int num_tokens, const Linkage& linkage);

// As above, and additionally requires every non-expanded token's disjunct to
// be one the lexicon offers for that word.
bool ValidateLinkage(const std::vector<std::string>& tokens,
                     const Lexicon& lexicon, const Linkage& linkage);

}  // namespace sublang

#endif  // SUBLANG_LINKAGE_H_
