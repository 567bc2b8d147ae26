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

#include "sublang/linkage.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "sublang/lexicon.h"
#include "sublang/parser.h"

namespace sublang {

int Linkage::TotalLinkLength() const {
  int total = 0;
  for (const Link& l : links) total += l.right - l.left;
  return total;
}

int CompareLinkSets(const std::vector<Link>& a, const std::vector<Link>& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) continue;
    return a[i] < b[i] ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  // The longer set holds the smallest link the other one lacks.
  return a.size() < b.size() ? 1 : -1;
}

bool RankLess(const Linkage& a, const Linkage& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  int la = a.TotalLinkLength();
  int lb = b.TotalLinkLength();
  if (la != lb) return la < lb;
  return CompareLinkSets(a.links, b.links) < 0;
}

namespace {

// Every way of handing `num_links` links (nearest first) to `conns`
// (nearest first): plain connectors take exactly one, multi connectors one
// or more. Each result maps link position to connector position.
void AssignSide(const std::vector<Connector>& conns, size_t ci, int li,
                int num_links, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
  if (ci == conns.size()) {
    if (li == num_links) out.push_back(current);
    return;
  }
  int max_take = conns[ci].multi ? num_links - li : std::min(1, num_links - li);
  for (int take = 1; take <= max_take; ++take) {
    for (int k = 0; k < take; ++k) current.push_back(static_cast<int>(ci));
    AssignSide(conns, ci + 1, li + take, num_links, current, out);
    current.resize(current.size() - take);
  }
}

struct Side {
  int token;
  bool left_side;
  std::vector<int> link_ids;  // nearest first
  std::vector<std::vector<int>> options;
};

bool Satisfiable(const Linkage& linkage, std::vector<Side>& sides, size_t at,
                 std::vector<const Connector*>& left_end,
                 std::vector<const Connector*>& right_end) {
  if (at == sides.size()) return true;
  const Side& side = sides[at];
  const Disjunct& d = linkage.disjuncts[side.token];
  const std::vector<Connector>& conns = side.left_side ? d.left : d.right;
  for (const std::vector<int>& option : side.options) {
    bool ok = true;
    std::vector<int> touched;
    for (size_t k = 0; k < option.size() && ok; ++k) {
      int id = side.link_ids[k];
      const Connector* c = &conns[option[k]];
      // The token is the right end of a link on its left side.
      if (side.left_side) {
        right_end[id] = c;
      } else {
        left_end[id] = c;
      }
      touched.push_back(id);
      if (left_end[id] != nullptr && right_end[id] != nullptr) {
        const Link& link = linkage.links[id];
        if (!ConnectorMatch(*left_end[id], *right_end[id]) ||
            ResolvedLinkLabel(*left_end[id], *right_end[id]) != link.label) {
          ok = false;
        }
      }
    }
    if (ok && Satisfiable(linkage, sides, at + 1, left_end, right_end)) {
      return true;
    }
    for (int id : touched) {
      if (side.left_side) {
        right_end[id] = nullptr;
      } else {
        left_end[id] = nullptr;
      }
    }
  }
  return false;
}

}  // namespace

bool ValidateLinkage(int num_tokens, const Linkage& linkage) {
  const std::vector<Link>& links = linkage.links;
  if (static_cast<int>(linkage.disjuncts.size()) != num_tokens) return false;
  std::set<std::pair<int, int>> pairs;
  for (const Link& l : links) {
    if (l.left < 0 || l.right >= num_tokens || l.left >= l.right) return false;
    if (!pairs.insert({l.left, l.right}).second) return false;  // exclusion
  }
  for (const Link& a : links) {
    for (const Link& b : links) {
      if (a.left < b.left && b.left < a.right && a.right < b.right) {
        return false;  // crossing
      }
    }
  }
  if (num_tokens > 0) {
    std::vector<int> parent(num_tokens);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int components = num_tokens;
    for (const Link& l : links) {
      int a = find(l.left);
      int b = find(l.right);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    if (components != 1) return false;
  }

  std::vector<Side> sides;
  for (int t = 0; t < num_tokens; ++t) {
    for (bool left_side : {true, false}) {
      Side side{t, left_side, {}, {}};
      std::vector<std::pair<int, int>> by_distance;
      for (size_t i = 0; i < links.size(); ++i) {
        const Link& l = links[i];
        if (left_side && l.right == t) {
          by_distance.push_back({t - l.left, static_cast<int>(i)});
        } else if (!left_side && l.left == t) {
          by_distance.push_back({l.right - t, static_cast<int>(i)});
        }
      }
      std::sort(by_distance.begin(), by_distance.end());
      for (const auto& [dist, id] : by_distance) side.link_ids.push_back(id);
      const Disjunct& d = linkage.disjuncts[t];
      const std::vector<Connector>& conns = left_side ? d.left : d.right;
      std::vector<int> current;
      AssignSide(conns, 0, 0, static_cast<int>(side.link_ids.size()), current,
                 side.options);
      if (side.options.empty()) return false;
      sides.push_back(std::move(side));
    }
  }
  std::vector<const Connector*> left_end(links.size(), nullptr);
  std::vector<const Connector*> right_end(links.size(), nullptr);
  return Satisfiable(linkage, sides, 0, left_end, right_end);
}

bool ValidateLinkage(std::span<const TokenDisjuncts> offered,
                     const Linkage& linkage) {
  int n = static_cast<int>(offered.size());
  if (!ValidateLinkage(n, linkage)) return false;
  for (int t = 0; t < n; ++t) {
    if (t < static_cast<int>(linkage.expanded.size()) && linkage.expanded[t]) {
      continue;
    }
    bool found = false;
    for (const WordDisjunct& wd : offered[t]) {
      if (wd.disjunct.SameConnectors(linkage.disjuncts[t])) found = true;
    }
    if (!found) return false;
  }
  return true;
}

bool ValidateLinkage(const std::vector<std::string>& tokens,
                     const Lexicon& lexicon, const Linkage& linkage) {
  std::vector<TokenDisjuncts> offered;
  for (const std::string& token : tokens) {
    offered.push_back(DisjunctsForEntries(lexicon.Lookup(token)));
  }
  return ValidateLinkage(offered, linkage);
}

}  // namespace sublang
