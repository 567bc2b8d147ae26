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

#include "sublang/term_simplifier.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "sublang/error.h"
#include "text_util.h"

namespace sublang {

using internal::ToLower;
using internal::Trim;

namespace {

std::string TermName(const TermRecord& term) {
  std::string name;
  for (const std::string& t : term.tokens) {
    if (!name.empty()) name += ' ';
    name += t;
  }
  return name;
}

bool IsLinkLabel(std::string_view label) {
  std::size_t i = 0;
  while (i < label.size() && label[i] >= 'A' && label[i] <= 'Z') ++i;
  if (i == 0) return false;
  for (; i < label.size(); ++i) {
    if (label[i] < 'a' || label[i] > 'z') return false;
  }
  return true;
}

bool Crosses(const Link& a, const Link& b) {
  return (a.left < b.left && b.left < a.right && a.right < b.right) ||
         (b.left < a.left && a.left < b.right && b.right < a.right);
}

// Every token reachable from `root` over `links`.
bool Connected(int n, int root, const std::vector<Link>& links) {
  std::vector<bool> seen(n, false);
  std::vector<int> stack = {root};
  seen[root] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const Link& l : links) {
      int other = l.left == x ? l.right : l.right == x ? l.left : -1;
      if (other >= 0 && !seen[other]) {
        seen[other] = true;
        stack.push_back(other);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

int ParseIndex(std::string_view s, bool* ok) {
  int value = 0;
  s = Trim(s);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  *ok = ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
  return value;
}

}  // namespace

std::vector<Link> DefaultTermLinks(int length) {
  std::vector<Link> links;
  for (int i = 0; i + 1 < length; ++i) {
    links.push_back(Link{i, i + 1, std::string(kDefaultTermLabel)});
  }
  return links;
}

void TermIndex::Add(TermRecord term) {
  int n = term.size();
  std::string name = TermName(term);
  if (n < 2) {
    throw Error(ErrorCode::kMalformedLinks,
                "term '" + name + "' needs at least two tokens");
  }
  if (term.head < 0 || term.head >= n) {
    throw Error(ErrorCode::kBadHeadIndex,
                "term '" + name + "' head " + std::to_string(term.head));
  }
  if (term.internal_links.empty()) term.internal_links = DefaultTermLinks(n);
  auto malformed = [&](const std::string& why) {
    return Error(ErrorCode::kMalformedLinks, "term '" + name + "': " + why);
  };
  std::set<std::pair<int, int>> pairs;
  for (Link& l : term.internal_links) {
    if (l.left > l.right) std::swap(l.left, l.right);
    if (l.left < 0 || l.right >= n || l.left == l.right) {
      throw malformed("link out of range");
    }
    if (!IsLinkLabel(l.label)) throw malformed("bad label '" + l.label + "'");
    if (!pairs.insert({l.left, l.right}).second) {
      throw malformed("duplicate link");
    }
  }
  for (const Link& a : term.internal_links) {
    for (const Link& b : term.internal_links) {
      if (Crosses(a, b)) throw malformed("crossing links");
    }
  }
  if (!Connected(n, term.head, term.internal_links)) {
    throw malformed("not every token is reachable from the head");
  }
  std::sort(term.internal_links.begin(), term.internal_links.end());
  std::vector<std::string> key;
  for (const std::string& t : term.tokens) key.push_back(ToLower(t));
  auto record = std::make_shared<const TermRecord>(std::move(term));
  auto [it, inserted] = terms_.emplace(key, record);
  if (!inserted && *it->second != *record) {
    throw Error(ErrorCode::kDuplicateEntry, "term '" + name + "'");
  }
  max_length_ = std::max(max_length_, n);
}

TermIndex TermIndex::Parse(std::string_view text, std::string_view source) {
  TermIndex index;
  int line_no = 0;
  for (std::string_view line : internal::SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty() || Trim(line)[0] == '#') continue;
    std::string where = std::string(source) + ":" + std::to_string(line_no);
    auto fields = internal::Split(line, '\t');
    if (fields.size() < 2 || fields.size() > 3) {
      throw Error(ErrorCode::kSyntaxError,
                  where + ": expected tokens<TAB>head<TAB>links");
    }
    TermRecord term;
    for (std::string_view t : internal::SplitWhitespace(fields[0])) {
      term.tokens.emplace_back(t);
    }
    bool ok = false;
    term.head = ParseIndex(fields[1], &ok);
    if (!ok) throw Error(ErrorCode::kSyntaxError, where + ": bad head index");
    if (fields.size() == 3) {
      for (std::string_view item : internal::Split(fields[2], ';')) {
        item = Trim(item);
        if (item.empty()) continue;
        std::size_t dash = item.find('-');
        std::size_t colon = item.find(':');
        if (dash == std::string_view::npos || colon == std::string_view::npos ||
            dash > colon) {
          throw Error(ErrorCode::kMalformedLinks,
                      where + ": link '" + std::string(item) + "'");
        }
        bool ok_i = false;
        bool ok_j = false;
        Link l;
        l.left = ParseIndex(item.substr(0, dash), &ok_i);
        l.right = ParseIndex(item.substr(dash + 1, colon - dash - 1), &ok_j);
        l.label = std::string(Trim(item.substr(colon + 1)));
        if (!ok_i || !ok_j) {
          throw Error(ErrorCode::kMalformedLinks,
                      where + ": link '" + std::string(item) + "'");
        }
        term.internal_links.push_back(std::move(l));
      }
    }
    try {
      index.Add(std::move(term));
    } catch (const Error& e) {
      throw Error(e.code(), where + ": " + e.detail());
    }
  }
  return index;
}

TermIndex TermIndex::Load(const std::filesystem::path& path) {
  return Parse(internal::ReadFile(path), path.string());
}

std::shared_ptr<const TermRecord> TermIndex::LongestMatch(
    const std::vector<Token>& tokens, std::size_t pos) const {
  int limit = std::min<int>(max_length_, static_cast<int>(tokens.size() - pos));
  std::vector<std::string> key;
  for (int k = 0; k < limit; ++k) {
    if (tokens[pos + k].kind == TokenKind::kTermHead) {
      limit = k;
      break;
    }
    key.push_back(ToLower(tokens[pos + k].surface));
  }
  for (int len = limit; len >= 2; --len) {
    key.resize(len);
    auto it = terms_.find(key);
    if (it != terms_.end()) return it->second;
  }
  return nullptr;
}

Simplification Simplify(const std::vector<Token>& tokens,
                        const TermIndex& index) {
  Simplification s;
  s.original = tokens;
  for (std::size_t i = 0; i < tokens.size();) {
    std::shared_ptr<const TermRecord> term = index.LongestMatch(tokens, i);
    if (term == nullptr) {
      s.original_index.push_back(static_cast<int>(i));
      s.simplified.push_back(tokens[i++]);
      continue;
    }
    int len = term->size();
    const Token& head = tokens[i + term->head];
    Token t;
    t.surface = head.surface;
    t.kind = TokenKind::kTermHead;
    t.begin = tokens[i].begin;
    t.end = tokens[i + len - 1].end;
    std::string text;
    for (int k = 0; k < len; ++k) {
      if (k > 0) text += ' ';
      text += tokens[i + k].original.value_or(tokens[i + k].surface);
    }
    t.original = text;
    Substitution sub;
    sub.begin = static_cast<int>(i);
    sub.replacement = static_cast<int>(s.simplified.size());
    sub.term = term;
    s.substitutions.push_back(std::move(sub));
    s.original_index.push_back(static_cast<int>(i) + term->head);
    s.simplified.push_back(std::move(t));
    i += len;
  }
  return s;
}

Linkage Reexpand(const Linkage& linkage, const Simplification& simp) {
  if (simp.IsIdentity()) return linkage;
  int n = static_cast<int>(simp.original.size());
  if (linkage.disjuncts.size() != simp.simplified.size()) {
    throw Error(ErrorCode::kReexpansionConflict,
                "linkage does not match the simplified sentence");
  }
  Linkage out;
  out.cost = linkage.cost;
  out.disjuncts.assign(n, Disjunct{});
  out.categories.assign(n, std::string(kTermCategory));
  out.expanded.assign(n, false);
  for (std::size_t s = 0; s < simp.simplified.size(); ++s) {
    int o = simp.original_index[s];
    out.disjuncts[o] = linkage.disjuncts[s];
    if (s < linkage.categories.size())
      out.categories[o] = linkage.categories[s];
  }
  for (const Link& l : linkage.links) {
    out.links.push_back(Link{simp.original_index[l.left],
                             simp.original_index[l.right], l.label});
  }
  std::vector<bool> in_term(n, false);
  for (const Substitution& sub : simp.substitutions) {
    for (int k = 0; k < sub.term->size(); ++k) in_term[sub.begin + k] = true;
    for (const Link& l : sub.term->internal_links) {
      out.links.push_back(
          Link{sub.begin + l.left, sub.begin + l.right, l.label});
    }
  }
  std::sort(out.links.begin(), out.links.end());
  for (std::size_t i = 1; i < out.links.size(); ++i) {
    if (out.links[i].left == out.links[i - 1].left &&
        out.links[i].right == out.links[i - 1].right) {
      throw Error(ErrorCode::kReexpansionConflict,
                  "duplicate link " + std::to_string(out.links[i].left) + "-" +
                      std::to_string(out.links[i].right));
    }
  }
  for (const Link& a : out.links) {
    for (const Link& b : out.links) {
      if (Crosses(a, b)) {
        throw Error(ErrorCode::kReexpansionConflict,
                    "link " + std::to_string(a.left) + "-" +
                        std::to_string(a.right) + " crosses " +
                        std::to_string(b.left) + "-" + std::to_string(b.right));
      }
    }
  }
  // Rebuild term-token disjuncts from their links, nearest first.
  for (int t = 0; t < n; ++t) {
    if (!in_term[t]) continue;
    Disjunct d;
    std::vector<std::pair<int, const Link*>> left;
    std::vector<std::pair<int, const Link*>> right;
    for (const Link& l : out.links) {
      if (l.right == t) left.push_back({t - l.left, &l});
      if (l.left == t) right.push_back({l.right - t, &l});
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    for (const auto& [dist, l] : left) {
      d.left.push_back(ConnectorFromLabel(l->label, Direction::kLeft));
    }
    for (const auto& [dist, l] : right) {
      d.right.push_back(ConnectorFromLabel(l->label, Direction::kRight));
    }
    d.cost = out.disjuncts[t].cost;
    out.disjuncts[t] = std::move(d);
    out.expanded[t] = true;
  }
  if (!ValidateLinkage(n, out)) {
    throw Error(ErrorCode::kReexpansionConflict,
                "expanded linkage is not valid");
  }
  return out;
}

}  // namespace sublang
