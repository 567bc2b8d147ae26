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

#include "sublang/grammar.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "toy_lexicon.h"

namespace sublang {
namespace {

Connector C(std::string_view text) { return *ParseConnector(text); }

TEST(ConnectorTest, ParsesAllParts) {
  Connector c = C("@Ss*+");
  EXPECT_EQ(c.label, "S");
  EXPECT_EQ(c.subscript, "s*");
  EXPECT_EQ(c.direction, Direction::kRight);
  EXPECT_TRUE(c.multi);
  EXPECT_EQ(ToString(c), "@Ss*+");
}

TEST(ConnectorTest, RejectsMalformed) {
  EXPECT_FALSE(ParseConnector("s+"));
  EXPECT_FALSE(ParseConnector("S"));
  EXPECT_FALSE(ParseConnector("S+x"));
  EXPECT_FALSE(ParseConnector("SA1-"));
  EXPECT_FALSE(ParseConnector(""));
}

TEST(ConnectorTest, MatchExamples) {
  EXPECT_TRUE(ConnectorMatch(C("S+"), C("S-")));
  EXPECT_FALSE(ConnectorMatch(C("S+"), C("D-")));
  EXPECT_TRUE(ConnectorMatch(C("Ss+"), C("S-")));
  EXPECT_FALSE(ConnectorMatch(C("Ss+"), C("Sp-")));
  EXPECT_TRUE(ConnectorMatch(C("S*b+"), C("Sab-")));
  EXPECT_FALSE(ConnectorMatch(C("S*b+"), C("Saa-")));
}

TEST(ConnectorTest, MatchIgnoresMultiFlag) {
  for (const char* r : {"S+", "Ss+", "S*+"}) {
    for (const char* l : {"S-", "Sp-", "Ss-", "D-"}) {
      Connector a = C(r);
      Connector b = C(l);
      bool plain = ConnectorMatch(a, b);
      a.multi = true;
      EXPECT_EQ(ConnectorMatch(a, b), plain);
      b.multi = true;
      EXPECT_EQ(ConnectorMatch(a, b), plain);
    }
  }
}

TEST(ConnectorTest, ResolvedLabels) {
  EXPECT_EQ(ResolvedLinkLabel(C("Ss+"), C("S-")), "Ss");
  EXPECT_EQ(ResolvedLinkLabel(C("S*b+"), C("Sa-")), "Sab");
  EXPECT_EQ(ResolvedLinkLabel(C("D+"), C("D-")), "D");
}

TEST(ExpandTest, SingleConnector) {
  auto ds = ExpandDisjuncts(Expression::Conn("S+"));
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_TRUE(ds[0].left.empty());
  EXPECT_EQ(ds[0].right, std::vector<Connector>{C("S+")});
  EXPECT_EQ(ds[0].cost, 0);
}

TEST(ExpandTest, OptionalAddsEmpty) {
  auto ds = ExpandDisjuncts(Expression::Optional(Expression::Conn("D-")));
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds[0], Disjunct{});
  EXPECT_EQ(ds[1].left, std::vector<Connector>{C("D-")});
}

TEST(ExpandTest, AndOfOr) {
  Expression e = Expression::And(
      {Expression::Or({Expression::Conn("A-"), Expression::Conn("B-")}),
       Expression::Conn("C+")});
  auto ds = ExpandDisjuncts(e);
  std::vector<Disjunct> expected = {
      Disjunct{{C("A-")}, {C("C+")}, 0},
      Disjunct{{C("B-")}, {C("C+")}, 0},
  };
  auto key = [](const Disjunct& d) { return ToString(d); };
  std::sort(ds.begin(), ds.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  EXPECT_EQ(ds, expected);
}

TEST(ExpandTest, CostsAccumulateAndDuplicatesMerge) {
  // [[A+]] or A+ : the cheaper copy wins.
  Expression e = Expression::Or(
      {Expression::Costed(Expression::Costed(Expression::Conn("A+"))),
       Expression::Conn("A+"), Expression::Costed(Expression::Conn("B+"))});
  auto ds = ExpandDisjuncts(e);
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds[0].cost, 0);
  EXPECT_EQ(ds[1].cost, 1);
}

TEST(ExpandTest, AndKeepsTextualOrderPerSide) {
  Expression e =
      Expression::And({Expression::Conn("A-"), Expression::Conn("X+"),
                       Expression::Conn("B-"), Expression::Conn("Y+")});
  auto ds = ExpandDisjuncts(e);
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].left, (std::vector<Connector>{C("A-"), C("B-")}));
  EXPECT_EQ(ds[0].right, (std::vector<Connector>{C("X+"), C("Y+")}));
}

// Re-expressing the expansion as an OR and expanding again gives the same set.
TEST(ExpandTest, ReExpressionIsIdempotent) {
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    testing::ToyGrammar g = testing::RandomToyGrammar(rng, 2);
    for (const auto& [word, entries] : g.lexicon.entries()) {
      auto first = ExpandDisjuncts(entries[0].expression);
      auto second = ExpandDisjuncts(DisjunctsToExpression(first));
      EXPECT_EQ(first, second);
    }
  }
}

TEST(ExpressionTest, RenderingKeepsPrecedence) {
  Expression e = Expression::Or(
      {Expression::And({Expression::Conn("A-"), Expression::Conn("B+")}),
       Expression::Costed(Expression::Conn("C+"))});
  EXPECT_EQ(ToString(e), "A- & B+ or [C+]");
  Expression f = Expression::And(
      {Expression::Or({Expression::Conn("A-"), Expression::Conn("B-")}),
       Expression::Optional(Expression::Conn("@M+"))});
  EXPECT_EQ(ToString(f), "(A- or B-) & {@M+}");
}

}  // namespace
}  // namespace sublang
