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

// Linkage counting and enumeration.
//
// Counting follows the classic span recursion of link grammar parsing: a
// memoized count over (left word, right word, unsatisfied right connectors of
// the left word, unsatisfied left connectors of the right word). Enumeration
// walks the same recursion depth-first, skipping zero-count branches and
// pruning on a per-span lower bound of (cost, link length) once the cap is
// full, so only the best `cap` linkages are ever kept.

#ifndef SUBLANG_PARSER_H_
#define SUBLANG_PARSER_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sublang/grammar.h"
#include "sublang/lexicon.h"
#include "sublang/linkage.h"

namespace sublang {

// A disjunct a token may use, with the category of the entry it came from.
struct WordDisjunct {
  Disjunct disjunct;
  std::string category;
};
using TokenDisjuncts = std::vector<WordDisjunct>;

// Expands the entries' expressions into one disjunct list. Disjuncts with the
// same connectors are merged keeping the cheapest (and its category).
TokenDisjuncts DisjunctsForEntries(const std::vector<LexiconEntry>& entries);

// Looks every token up in the lexicon. Throws UNRESOLVABLE_TOKEN(index) when
// a token has no entries or no disjuncts.
std::vector<TokenDisjuncts> ResolveTokens(
    const std::vector<std::string>& tokens, const Lexicon& lexicon);

struct ParseOptions {
  int cap = 1000;
  double timeout_seconds = 30.0;
};

// Exact number of linkages. Throws UNRESOLVABLE_TOKEN for a token without
// disjuncts and TIMEOUT when the time budget runs out.
std::uint64_t CountLinkages(std::span<const TokenDisjuncts> sentence,
                            double timeout_seconds = 30.0);
std::uint64_t CountLinkages(const std::vector<std::string>& tokens,
                            const Lexicon& lexicon);

// Counts and materializes the best `cap` linkages in RankLess order. A
// timeout does not throw: the result comes back with timed_out set,
// complete=false and a zero count.
ParseResult EnumerateLinkages(std::span<const TokenDisjuncts> sentence,
                              const ParseOptions& options = {});
ParseResult EnumerateLinkages(const std::vector<std::string>& tokens,
                              const Lexicon& lexicon,
                              const ParseOptions& options = {});

// Structural validity plus: every token not marked expanded uses one of the
// disjuncts it was offered.
bool ValidateLinkage(std::span<const TokenDisjuncts> offered,
                     const Linkage& linkage);

}  // namespace sublang

#endif  // SUBLANG_PARSER_H_
