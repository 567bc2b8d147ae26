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

#include "sublang/parser.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <unordered_map>
#include <utility>

#include "sublang/error.h"

namespace sublang {

TokenDisjuncts DisjunctsForEntries(const std::vector<LexiconEntry>& entries) {
  TokenDisjuncts out;
  for (const LexiconEntry& entry : entries) {
    for (Disjunct& d : ExpandDisjuncts(entry.expression)) {
      bool merged = false;
      for (WordDisjunct& existing : out) {
        if (existing.disjunct.SameConnectors(d)) {
          if (d.cost < existing.disjunct.cost) {
            existing.disjunct.cost = d.cost;
            existing.category = entry.category;
          }
          merged = true;
          break;
        }
      }
      if (!merged) out.push_back({std::move(d), entry.category});
    }
  }
  return out;
}

std::vector<TokenDisjuncts> ResolveTokens(
    const std::vector<std::string>& tokens, const Lexicon& lexicon) {
  std::vector<TokenDisjuncts> out;
  out.reserve(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    TokenDisjuncts d = DisjunctsForEntries(lexicon.Lookup(tokens[i]));
    if (d.empty()) {
      throw Error(ErrorCode::kUnresolvableToken,
                  "token " + std::to_string(i) + " '" + tokens[i] + "'");
    }
    out.push_back(std::move(d));
  }
  return out;
}

namespace {

using Count = std::uint64_t;
constexpr Count kSaturated = std::numeric_limits<Count>::max();

Count SatAdd(Count a, Count b) {
  return a > kSaturated - b ? kSaturated : a + b;
}
Count SatMul(Count a, Count b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

// Lexicographic (cost, total link length).
struct Score {
  int cost = 0;
  int length = 0;

  Score operator+(const Score& o) const {
    return {cost + o.cost, length + o.length};
  }
  Score operator-(const Score& o) const {
    return {cost - o.cost, length - o.length};
  }
  auto operator<=>(const Score&) const = default;
};
constexpr Score kNoScore{std::numeric_limits<int>::max() / 4,
                         std::numeric_limits<int>::max() / 4};

struct TimeoutSignal {};

// One connector position inside a token's disjunct. Lists are stored
// farthest-first so the head of a list is the connector that links to the
// word farthest away inside the current span.
struct Slot {
  const Connector* connector;
  int next;  // id of the following slot, -1 at the end of the list
};

struct PreparedToken {
  std::vector<Slot> left_slots;
  std::vector<Slot> right_slots;
  std::vector<int> left_head;   // per disjunct, -1 when empty
  std::vector<int> right_head;  // per disjunct, -1 when empty
};

// A subproblem: words strictly between `left` and `right` must be linked so
// that the left word's remaining right connectors (from slot `lslot`) and
// the right word's remaining left connectors (from `rslot`) are satisfied.
struct Span {
  int left;
  int right;
  int lslot;
  int rslot;
};

struct Alternative {
  int word;
  int disjunct;
  bool links_left;
  bool links_right;
  int left_link_slot;   // slot of the left word used by the left link
  int word_left_slot;   // slot of `word` used by the left link
  int word_right_slot;  // slot of `word` used by the right link
  int right_link_slot;  // slot of the right word used by the right link
  Span first;
  Span second;
};

class Engine {
 public:
  Engine(std::span<const TokenDisjuncts> sentence, double timeout_seconds)
      : sentence_(sentence),
        n_(static_cast<int>(sentence.size())),
        deadline_(
            std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(timeout_seconds))) {
    tokens_.resize(n_);
    for (int t = 0; t < n_; ++t) {
      if (sentence_[t].empty()) {
        throw Error(ErrorCode::kUnresolvableToken,
                    "token " + std::to_string(t) + " has no disjuncts");
      }
      PreparedToken& pt = tokens_[t];
      for (const WordDisjunct& wd : sentence_[t]) {
        pt.left_head.push_back(AddList(wd.disjunct.left, pt.left_slots));
        pt.right_head.push_back(AddList(wd.disjunct.right, pt.right_slots));
      }
    }
  }

  Count Total() {
    Count total = 0;
    if (n_ == 0) return 0;
    for (size_t d = 0; d < sentence_[0].size(); ++d) {
      if (tokens_[0].left_head[d] != -1) continue;
      total = SatAdd(total, Get({0, n_, tokens_[0].right_head[d], -1}).count);
    }
    return total;
  }

  void Enumerate(int cap, std::vector<Linkage>& out) {
    cap_ = cap;
    heap_.clear();
    choice_.assign(n_, -1);
    links_.clear();
    acc_ = {};
    pending_ = {};
    for (size_t d = 0; d < sentence_[0].size(); ++d) {
      if (tokens_[0].left_head[d] != -1) continue;
      Span top{0, n_, tokens_[0].right_head[d], -1};
      const Memo& m = Get(top);
      if (m.count == 0) continue;
      Score own{sentence_[0][d].disjunct.cost, 0};
      if (Pruned(own + m.bound)) continue;
      choice_[0] = static_cast<int>(d);
      acc_ = own;
      Generate(top, [this] { EmitLeaf(); });
      acc_ = {};
    }
    std::sort(heap_.begin(), heap_.end(), RankLess);
    out = std::move(heap_);
  }

 private:
  struct Memo {
    Count count = 0;
    Score bound = kNoScore;
  };

  static int AddList(const std::vector<Connector>& nearest_first,
                     std::vector<Slot>& slots) {
    if (nearest_first.empty()) return -1;
    int head = static_cast<int>(slots.size());
    for (size_t i = nearest_first.size(); i-- > 0;) {
      int id = static_cast<int>(slots.size());
      slots.push_back({&nearest_first[i], i == 0 ? -1 : id + 1});
    }
    return head;
  }

  const Connector& RightConn(int token, int slot) const {
    return *tokens_[token].right_slots[slot].connector;
  }
  const Connector& LeftConn(int token, int slot) const {
    return *tokens_[token].left_slots[slot].connector;
  }
  int RightNext(int token, int slot) const {
    return tokens_[token].right_slots[slot].next;
  }
  int LeftNext(int token, int slot) const {
    return tokens_[token].left_slots[slot].next;
  }

  static std::uint64_t Key(const Span& s) {
    return (static_cast<std::uint64_t>(s.left) << 52) |
           (static_cast<std::uint64_t>(s.right) << 40) |
           (static_cast<std::uint64_t>(s.lslot + 1) << 20) |
           static_cast<std::uint64_t>(s.rslot + 1);
  }

  void CheckTime() {
    if ((++ticks_ & 1023) == 0 &&
        std::chrono::steady_clock::now() > deadline_) {
      throw TimeoutSignal{};
    }
  }

  // Calls `fn` for every way of pairing a left connector slot with a right
  // one when at least one of them is a multi connector that may be reused.
  template <typename Fn>
  static void ForEachAdvance(int a, int a_next, bool a_multi, int b, int b_next,
                             bool b_multi, Fn fn) {
    fn(a_next, b_next);
    if (a_multi) fn(a, b_next);
    if (b_multi) fn(a_next, b);
    if (a_multi && b_multi) fn(a, b);
  }

  template <typename Fn>
  void ForEachAlternative(const Span& s, Fn fn) {
    for (int w = s.left + 1; w < s.right; ++w) {
      const PreparedToken& pt = tokens_[w];
      for (size_t d = 0; d < sentence_[w].size(); ++d) {
        int wl = pt.left_head[d];
        int wr = pt.right_head[d];
        bool can_left =
            s.lslot != -1 && wl != -1 &&
            ConnectorMatch(RightConn(s.left, s.lslot), LeftConn(w, wl));
        bool can_right =
            s.rslot != -1 && wr != -1 &&
            ConnectorMatch(RightConn(w, wr), LeftConn(s.right, s.rslot));
        if (can_left) {
          const Connector& lc = RightConn(s.left, s.lslot);
          const Connector& wc = LeftConn(w, wl);
          ForEachAdvance(
              s.lslot, RightNext(s.left, s.lslot), lc.multi, wl,
              LeftNext(w, wl), wc.multi, [&](int l2, int wl2) {
                Span first{s.left, w, l2, wl2};
                if (can_right) {
                  const Connector& rc = LeftConn(s.right, s.rslot);
                  const Connector& wrc = RightConn(w, wr);
                  ForEachAdvance(
                      wr, RightNext(w, wr), wrc.multi, s.rslot,
                      LeftNext(s.right, s.rslot), rc.multi,
                      [&](int wr2, int r2) {
                        fn(Alternative{w, static_cast<int>(d), true, true,
                                       s.lslot, wl, wr, s.rslot, first,
                                       Span{w, s.right, wr2, r2}});
                      });
                }
                fn(Alternative{w, static_cast<int>(d), true, false, s.lslot, wl,
                               -1, -1, first, Span{w, s.right, wr, s.rslot}});
              });
        }
        if (can_right && s.lslot == -1) {
          const Connector& rc = LeftConn(s.right, s.rslot);
          const Connector& wrc = RightConn(w, wr);
          ForEachAdvance(
              wr, RightNext(w, wr), wrc.multi, s.rslot,
              LeftNext(s.right, s.rslot), rc.multi, [&](int wr2, int r2) {
                fn(Alternative{w, static_cast<int>(d), false, true, -1, -1, wr,
                               s.rslot, Span{s.left, w, -1, wl},
                               Span{w, s.right, wr2, r2}});
              });
        }
      }
    }
  }

  Score OwnScore(const Span& s, const Alternative& a) const {
    Score sc{sentence_[a.word][a.disjunct].disjunct.cost, 0};
    if (a.links_left) sc.length += a.word - s.left;
    if (a.links_right) sc.length += s.right - a.word;
    return sc;
  }

  const Memo& Get(const Span& s) {
    static const Memo kOne{1, Score{}};
    static const Memo kZero{};
    if (s.right == s.left + 1) {
      return s.lslot == -1 && s.rslot == -1 ? kOne : kZero;
    }
    if (s.lslot == -1 && s.rslot == -1) return kZero;
    std::uint64_t key = Key(s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    CheckTime();
    Memo m;
    ForEachAlternative(s, [&](const Alternative& a) {
      const Memo& first = Get(a.first);
      if (first.count == 0) return;
      Count c1 = first.count;
      Score b1 = first.bound;
      const Memo& second = Get(a.second);
      if (second.count == 0) return;
      m.count = SatAdd(m.count, SatMul(c1, second.count));
      m.bound = std::min(m.bound, OwnScore(s, a) + b1 + second.bound);
    });
    return memo_.emplace(key, m).first->second;
  }

  bool Pruned(const Score& lower_bound) const {
    return static_cast<int>(heap_.size()) >= cap_ &&
           lower_bound >
               Score{heap_.front().cost, heap_.front().TotalLinkLength()};
  }

  void Generate(const Span& s, const std::function<void()>& done) {
    if (s.right == s.left + 1) {
      done();
      return;
    }
    CheckTime();
    // Collected first: the callback below recurses into Get/Generate.
    std::vector<Alternative> alternatives;
    ForEachAlternative(s, [&](const Alternative& a) {
      if (Get(a.first).count != 0 && Get(a.second).count != 0) {
        alternatives.push_back(a);
      }
    });
    for (const Alternative& a : alternatives) {
      Score own = OwnScore(s, a);
      Score first_bound = Get(a.first).bound;
      Score second_bound = Get(a.second).bound;
      if (Pruned(acc_ + own + first_bound + second_bound + pending_)) continue;
      choice_[a.word] = a.disjunct;
      acc_ = acc_ + own;
      size_t mark = links_.size();
      if (a.links_left) {
        links_.push_back(
            {s.left, a.word,
             ResolvedLinkLabel(RightConn(s.left, a.left_link_slot),
                               LeftConn(a.word, a.word_left_slot))});
      }
      if (a.links_right) {
        links_.push_back(
            {a.word, s.right,
             ResolvedLinkLabel(RightConn(a.word, a.word_right_slot),
                               LeftConn(s.right, a.right_link_slot))});
      }
      pending_ = pending_ + second_bound;
      Generate(a.first, [&] {
        pending_ = pending_ - second_bound;
        Generate(a.second, done);
        pending_ = pending_ + second_bound;
      });
      pending_ = pending_ - second_bound;
      links_.resize(mark);
      acc_ = acc_ - own;
      choice_[a.word] = -1;
    }
  }

  void EmitLeaf() {
    CheckTime();
    Linkage l;
    l.links = links_;
    std::sort(l.links.begin(), l.links.end());
    l.cost = acc_.cost;
    if (static_cast<int>(heap_.size()) >= cap_) {
      const Linkage& worst = heap_.front();
      if (!RankLess(l, worst)) return;
    }
    l.disjuncts.reserve(n_);
    l.categories.reserve(n_);
    for (int t = 0; t < n_; ++t) {
      const WordDisjunct& wd = sentence_[t][choice_[t]];
      l.disjuncts.push_back(wd.disjunct);
      l.categories.push_back(wd.category);
    }
    l.expanded.assign(n_, false);
    if (static_cast<int>(heap_.size()) >= cap_) {
      std::pop_heap(heap_.begin(), heap_.end(), RankLess);
      heap_.pop_back();
    }
    heap_.push_back(std::move(l));
    std::push_heap(heap_.begin(), heap_.end(), RankLess);
  }

  std::span<const TokenDisjuncts> sentence_;
  int n_;
  std::vector<PreparedToken> tokens_;
  std::unordered_map<std::uint64_t, Memo> memo_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t ticks_ = 0;

  int cap_ = 0;
  std::vector<Linkage> heap_;  // max-heap under RankLess: worst on top
  std::vector<int> choice_;
  std::vector<Link> links_;
  Score acc_;
  Score pending_;
};

}  // namespace

std::uint64_t CountLinkages(std::span<const TokenDisjuncts> sentence,
                            double timeout_seconds) {
  Engine engine(sentence, timeout_seconds);
  try {
    return engine.Total();
  } catch (const TimeoutSignal&) {
    throw Error(ErrorCode::kTimeout,
                "count exceeded " + std::to_string(timeout_seconds) + " s");
  }
}

std::uint64_t CountLinkages(const std::vector<std::string>& tokens,
                            const Lexicon& lexicon) {
  std::vector<TokenDisjuncts> resolved = ResolveTokens(tokens, lexicon);
  return CountLinkages(resolved);
}

ParseResult EnumerateLinkages(std::span<const TokenDisjuncts> sentence,
                              const ParseOptions& options) {
  auto start = std::chrono::steady_clock::now();
  ParseResult result;
  Engine engine(sentence, options.timeout_seconds);
  try {
    result.linkage_count = engine.Total();
    if (result.linkage_count > 0 && options.cap > 0) {
      engine.Enumerate(options.cap, result.linkages);
    }
    result.complete = result.linkage_count > 0;
  } catch (const TimeoutSignal&) {
    result = ParseResult{};
    result.timed_out = true;
  }
  result.parse_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

ParseResult EnumerateLinkages(const std::vector<std::string>& tokens,
                              const Lexicon& lexicon,
                              const ParseOptions& options) {
  auto start = std::chrono::steady_clock::now();
  std::vector<TokenDisjuncts> resolved = ResolveTokens(tokens, lexicon);
  ParseResult result = EnumerateLinkages(resolved, options);
  result.parse_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace sublang
