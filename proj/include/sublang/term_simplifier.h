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

// Multiword term simplification. Known terms are replaced by their head
// before parsing; afterwards the stored internal analysis of each term is
// put back into the linkage.
//
// Term dictionary lines:
//
//   sporulation process<TAB>1<TAB>0-1:AN
//   sigma factor<TAB>1<TAB>
//
// An empty (or missing) link field chains each token to its right neighbour
// with AN links.

#ifndef SUBLANG_TERM_SIMPLIFIER_H_
#define SUBLANG_TERM_SIMPLIFIER_H_

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sublang/linkage.h"
#include "sublang/normalizer.h"

namespace sublang {

inline constexpr std::string_view kDefaultTermLabel = "AN";

struct TermRecord {
  std::vector<std::string> tokens;  // at least two
  int head = 0;
  std::vector<Link> internal_links;  // term-local positions, sorted

  int size() const { return static_cast<int>(tokens.size()); }
  bool operator==(const TermRecord&) const = default;
};

// Each token linked to its right neighbour: (i, i+1, AN).
std::vector<Link> DefaultTermLinks(int length);

class TermIndex {
 public:
  // Throws BAD_HEAD_INDEX or MALFORMED_LINKS naming the term.
  void Add(TermRecord term);

  // Errors: SYNTAX_ERROR(line), BAD_HEAD_INDEX(term), MALFORMED_LINKS(term),
  // DUPLICATE_ENTRY(term).
  static TermIndex Parse(std::string_view text,
                         std::string_view source = "<terms>");
  static TermIndex Load(const std::filesystem::path& path);

  // The longest term whose tokens match (case-insensitively) the tokens
  // starting at `pos`, or null. TERM_HEAD tokens never match.
  std::shared_ptr<const TermRecord> LongestMatch(
      const std::vector<Token>& tokens, std::size_t pos) const;

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

 private:
  std::map<std::vector<std::string>, std::shared_ptr<const TermRecord>> terms_;
  int max_length_ = 0;
};

struct Substitution {
  int begin = 0;        // original span [begin, begin + term->size())
  int replacement = 0;  // index of the TERM_HEAD token in the simplified list
  std::shared_ptr<const TermRecord> term;
};

struct Simplification {
  std::vector<Token> original;
  std::vector<Token> simplified;
  std::vector<Substitution> substitutions;  // left to right
  // Original position of every simplified token (the head's, for terms).
  std::vector<int> original_index;

  bool IsIdentity() const { return substitutions.empty(); }
};

// Leftmost-longest, non-overlapping replacement of terms by TERM_HEAD tokens.
// The TERM_HEAD surface is the head word as written; `original` keeps the
// full term text.
Simplification Simplify(const std::vector<Token>& tokens,
                        const TermIndex& index);

// Maps a linkage over the simplified tokens back onto the original tokens
// and inserts each term's internal links. Disjuncts of term tokens are
// rebuilt from their links and marked expanded. Throws REEXPANSION_CONFLICT
// when the result would cross or duplicate links, or is not a valid linkage.
Linkage Reexpand(const Linkage& linkage, const Simplification& simp);

// Category reported for the non-head tokens of an expanded term.
inline constexpr std::string_view kTermCategory = "term";

}  // namespace sublang

#endif  // SUBLANG_TERM_SIMPLIFIER_H_
