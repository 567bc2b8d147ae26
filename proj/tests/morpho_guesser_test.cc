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

#include "sublang/morpho_guesser.h"

#include <gtest/gtest.h>

#include "sublang/error.h"

namespace sublang {
namespace {

const char kLexicon[] =
    "<noun>: {D-} & (S+ or O-);\n"
    "<adj>: A+;\n"
    "<adj-rel>: A+ or Pa-;\n"
    "<verb>: S- & {O+};\n"
    "cat.n: <noun>;\n"
    "the: D+;\n";

const char kRules[] =
    "# suffix  category  macro\n"
    "-ase\tn\tnoun\n"
    "-al\tadj\tadj\n"
    "-ional\tadj\t<adj-rel>\n"
    "-ity\tn\tnoun\n"
    "-at\tv\tverb\n";

MorphoGuesser MakeGuesser(const Lexicon& lex) {
  return MorphoGuesser(lex, ParseGuessRules(kRules),
                       ParseFallbackClasses("n:noun,v:verb"));
}

TEST(GuessTest, SuffixRuleFires) {
  MorphoGuesser g = MakeGuesser(ParseDictionary(kLexicon));
  GuessOutcome kinase = g.Guess("kinase");
  EXPECT_EQ(kinase.status, GuessStatus::kGuessed);
  EXPECT_EQ(kinase.category, "n");
  ASSERT_EQ(kinase.entries.size(), 1u);
  EXPECT_EQ(kinase.entries[0].origin, EntryOrigin::kMorphoGuess);
  EXPECT_EQ(kinase.rule, "<rules>:2");

  GuessOutcome adj = g.Guess("structural");
  EXPECT_EQ(adj.status, GuessStatus::kGuessed);
  EXPECT_EQ(adj.category, "adj");
}

TEST(GuessTest, LexiconTakesPrecedence) {
  MorphoGuesser g = MakeGuesser(ParseDictionary(kLexicon));
  GuessOutcome cat = g.Guess("cat");  // "-at" would fire otherwise
  EXPECT_EQ(cat.status, GuessStatus::kKnown);
  EXPECT_EQ(cat.category, "n");
  EXPECT_FALSE(cat.rule.has_value());
}

TEST(GuessTest, LongestSuffixWins) {
  Lexicon lex = ParseDictionary(kLexicon);
  MorphoGuesser g = MakeGuesser(lex);
  GuessOutcome t = g.Guess("Transcriptional");
  EXPECT_EQ(t.status, GuessStatus::kGuessed);
  EXPECT_EQ(t.rule, "<rules>:4");
  EXPECT_EQ(t.entries[0].expression, *lex.Macro("adj-rel"));
}

TEST(GuessTest, StemMustBeLongEnough) {
  MorphoGuesser g = MakeGuesser(ParseDictionary(kLexicon));
  EXPECT_EQ(g.Guess("base").status, GuessStatus::kUnknownFallback);
  EXPECT_EQ(g.Guess("lease").status, GuessStatus::kGuessed);
}

TEST(GuessTest, FallbackOffersEveryClass) {
  MorphoGuesser g = MakeGuesser(ParseDictionary(kLexicon));
  GuessOutcome u = g.Guess("xyzzy");
  EXPECT_EQ(u.status, GuessStatus::kUnknownFallback);
  EXPECT_EQ(u.category, "unknown");
  ASSERT_EQ(u.entries.size(), 2u);
  EXPECT_EQ(u.entries[0].category, "n");
  EXPECT_EQ(u.entries[1].category, "v");
  EXPECT_EQ(u.entries[1].origin, EntryOrigin::kUnknownFallback);
}

TEST(GuessTest, IsDeterministic) {
  MorphoGuesser g = MakeGuesser(ParseDictionary(kLexicon));
  for (const char* w : {"kinase", "cat", "xyzzy", "regional", "acidity"}) {
    GuessOutcome a = g.Guess(w);
    GuessOutcome b = g.Guess(w);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.category, b.category);
    EXPECT_EQ(a.rule, b.rule);
    EXPECT_EQ(a.entries, b.entries);
  }
}

TEST(GuessTest, LexiconExtensionIsMonotone) {
  Lexicon base = ParseDictionary(kLexicon);
  Lexicon extended =
      ApplyOverlayText(base, "kinase.n: <noun>; xyzzy.v: <verb>;");
  MorphoGuesser before = MakeGuesser(base);
  MorphoGuesser after = MakeGuesser(extended);
  for (const char* w : {"kinase", "cat", "xyzzy", "regional", "the"}) {
    GuessStatus s0 = before.Guess(w).status;
    GuessStatus s1 = after.Guess(w).status;
    EXPECT_TRUE(s1 == s0 || s1 == GuessStatus::kKnown) << w;
  }
  EXPECT_EQ(after.Guess("xyzzy").status, GuessStatus::kKnown);
}

TEST(GuessTest, UndefinedMacroIsRejected) {
  Lexicon lex = ParseDictionary(kLexicon);
  try {
    MorphoGuesser(lex, ParseGuessRules("-ose\tn\tsugar\n"), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDanglingMacro);
  }
  EXPECT_THROW(MorphoGuesser(lex, {}, ParseFallbackClasses("n:nope")), Error);
  EXPECT_THROW(ParseFallbackClasses("n"), Error);
  EXPECT_THROW(ParseGuessRules("-ase n\n"), Error);
}

TEST(ClassifyTest, CountsOccurrences) {
  MorphoGuesser g = MakeGuesser(ParseDictionary(kLexicon));
  std::vector<std::vector<std::string>> corpus = {
      {"the", "kinase", "xyzzy"}, {"the", "kinase", "cat", "plugh"}};
  std::vector<std::vector<GuessOutcome>> outcomes;
  GuessCounts c = ClassifyCorpus(corpus, g, &outcomes);
  EXPECT_EQ(c.guessed, 2);
  EXPECT_EQ(c.unknown, 2);
  EXPECT_EQ(c.out_of_lexicon(), c.guessed + c.unknown);
  ASSERT_EQ(outcomes.size(), 2u);
  EXPECT_EQ(outcomes[1].size(), 4u);
}

}  // namespace
}  // namespace sublang
