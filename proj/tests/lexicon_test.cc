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

#include "sublang/lexicon.h"

#include <gtest/gtest.h>

#include <random>

#include "sublang/error.h"
#include "toy_lexicon.h"

namespace sublang {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIoError;
}

TEST(LoadDictionaryTest, SingleEntry) {
  Lexicon lex = ParseDictionary("the: D+;");
  ASSERT_EQ(lex.size(), 1u);
  auto e = lex.Lookup("the").at(0);
  EXPECT_EQ(e.category, "any");
  EXPECT_EQ(e.expression, Expression::Conn("D+"));
  EXPECT_EQ(e.origin, EntryOrigin::kBase);
}

TEST(LoadDictionaryTest, CategorySuffixAndAnd) {
  Lexicon lex = ParseDictionary("cat.n: D- & S+;");
  auto e = lex.Lookup("cat").at(0);
  EXPECT_EQ(e.word, "cat");
  EXPECT_EQ(e.category, "n");
  EXPECT_EQ(e.expression,
            Expression::And({Expression::Conn("D-"), Expression::Conn("S+")}));
}

TEST(LoadDictionaryTest, MacroIsExpandedInPlace) {
  Lexicon lex = ParseDictionary("<mass>: {D-};  water.n: <mass> & S+;");
  Expression expected = Expression::And(
      {Expression::Optional(Expression::Conn("D-")), Expression::Conn("S+")});
  EXPECT_EQ(lex.Lookup("water").at(0).expression, expected);
  ASSERT_NE(lex.Macro("mass"), nullptr);
}

TEST(LoadDictionaryTest, OrBindsLooserThanAnd) {
  Lexicon lex = ParseDictionary("x: A- & B+ or C+ % comment\n;");
  Expression expected = Expression::Or(
      {Expression::And({Expression::Conn("A-"), Expression::Conn("B+")}),
       Expression::Conn("C+")});
  EXPECT_EQ(lex.Lookup("x").at(0).expression, expected);
}

TEST(LoadDictionaryTest, SeveralWordsShareAnEntry) {
  Lexicon lex = ParseDictionary("a an the.det: D+;");
  EXPECT_EQ(lex.size(), 3u);
  EXPECT_EQ(lex.Lookup("the").at(0).category, "det");
}

TEST(LoadDictionaryTest, LookupFallsBackToLowerCase) {
  Lexicon lex = ParseDictionary("the: D+;");
  EXPECT_EQ(lex.Lookup("The").size(), 1u);
  EXPECT_TRUE(lex.Lookup("THX").empty());
}

TEST(LoadDictionaryTest, SyntaxErrorCarriesPosition) {
  try {
    ParseDictionary("the: D+;\ncat.n: D- & s+;", "toy.dict");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
    EXPECT_NE(std::string(e.what()).find("toy.dict:2:"), std::string::npos)
        << e.what();
  }
  EXPECT_EQ(CodeOf([] { ParseDictionary("the: D+"); }),
            ErrorCode::kSyntaxError);
  EXPECT_EQ(CodeOf([] { ParseDictionary(": D+;"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(CodeOf([] { ParseDictionary("x: (A+;"); }),
            ErrorCode::kSyntaxError);
}

TEST(LoadDictionaryTest, DanglingMacro) {
  try {
    ParseDictionary("water.n: <mass> & S+;");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDanglingMacro);
    EXPECT_NE(e.detail().find("<mass>"), std::string::npos);
  }
}

TEST(LoadDictionaryTest, MacroCycle) {
  EXPECT_EQ(CodeOf([] { ParseDictionary("<a>: <b>; <b>: <a>; x: <a>;"); }),
            ErrorCode::kMacroCycle);
}

TEST(LoadDictionaryTest, DuplicateEntry) {
  EXPECT_EQ(CodeOf([] { ParseDictionary("cat.n: D-; cat.n: S+;"); }),
            ErrorCode::kDuplicateEntry);
  // Same word, different category is fine.
  EXPECT_EQ(ParseDictionary("cat.n: D-; cat.v: S+;").size(), 2u);
}

TEST(LoadDictionaryTest, MissingFileIsIoError) {
  EXPECT_EQ(CodeOf([] { LoadDictionary("/nonexistent/base.dict"); }),
            ErrorCode::kIoError);
}

TEST(OverlayTest, ShadowsWholeSurfaceForm) {
  Lexicon base = ParseDictionary(
      "<count>: D- & S+; <mass>: {D-} & S+;"
      "data.n: <count>; data.v: O+; cell.n: <count>;");
  Lexicon lex = ApplyOverlayText(base, "data.n: <mass>;");
  auto entries = lex.Lookup("data");
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].expression, *base.Macro("mass"));
  EXPECT_EQ(entries[0].origin, EntryOrigin::kOverlay);
  EXPECT_EQ(lex.Lookup("cell"), base.Lookup("cell"));
}

TEST(OverlayTest, EmptyOverlayIsIdentity) {
  Lexicon base = ParseDictionary("the: D+; cat.n: D- & S+;");
  EXPECT_EQ(ApplyOverlayText(base, ""), base);
  EXPECT_EQ(ApplyOverlayText(base, "% only a comment\n"), base);
}

TEST(OverlayTest, AddsNewWord) {
  Lexicon base = ParseDictionary("the: D+;");
  EXPECT_TRUE(base.Lookup("operon").empty());
  Lexicon lex = ApplyOverlayText(base, "operon.n: D- & S+;");
  auto entries = lex.Lookup("operon");
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].origin, EntryOrigin::kOverlay);
}

TEST(OverlayTest, IdempotentAndLastWriterWins) {
  Lexicon base = ParseDictionary("<n>: D- & S+; x.n: <n>; y.n: <n>;");
  std::string overlay = "x.n: {D-} & S+; z.adj: A+;";
  Lexicon once = ApplyOverlayText(base, overlay);
  EXPECT_EQ(ApplyOverlayText(once, overlay), once);
  Lexicon later = ApplyOverlayText(once, "x.v: O+;");
  ASSERT_EQ(later.Lookup("x").size(), 1u);
  EXPECT_EQ(later.Lookup("x")[0].category, "v");
}

TEST(OverlayTest, OverlayMacroShadowsBaseMacro) {
  Lexicon base = ParseDictionary("<n>: D- & S+; x.n: <n>;");
  Lexicon lex = ApplyOverlayText(base, "<n>: S+; y.n: <n>;");
  EXPECT_EQ(lex.Lookup("y")[0].expression, Expression::Conn("S+"));
  // Entries already resolved in the base keep their expansion.
  EXPECT_EQ(lex.Lookup("x"), base.Lookup("x"));
}

TEST(OverlayTest, DanglingMacroInOverlay) {
  Lexicon base = ParseDictionary("the: D+;");
  EXPECT_EQ(CodeOf([&] { ApplyOverlayText(base, "x.n: <nope>;"); }),
            ErrorCode::kDanglingMacro);
}

TEST(SerializeTest, RoundTripOnRandomGrammars) {
  std::mt19937 rng(11);
  for (int round = 0; round < 100; ++round) {
    testing::ToyGrammar g = testing::RandomToyGrammar(rng, 4);
    Lexicon lex = g.lexicon;
    lex.SetMacro("m", g.lexicon.Lookup("w0")[0].expression);
    std::string text = SerializeDictionary(lex);
    EXPECT_EQ(ParseDictionary(text), lex) << text;
  }
}

TEST(SerializeTest, RoundTripKeepsNesting) {
  std::string src =
      "<q>: [[A+]] & {B- or C-};\n"
      "w.n: ((A- & B-) & C+) or (D+ or E+) or ();\n"
      "v: @M+ & <q>;\n";
  Lexicon lex = ParseDictionary(src);
  EXPECT_EQ(ParseDictionary(SerializeDictionary(lex)), lex);
}

}  // namespace
}  // namespace sublang
