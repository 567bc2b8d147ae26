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

// Category guessing for words the lexicon does not list, from their suffix.
//
// Rule files hold one rule per line, '#' comments:
//
//   -ase    n    noun-count
//   ity     n    noun-mass
//
// The suffix may carry a leading '-'; the third field names a lexicon macro
// (angle brackets optional) that supplies the guessed word's expression.

#ifndef SUBLANG_MORPHO_GUESSER_H_
#define SUBLANG_MORPHO_GUESSER_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sublang/lexicon.h"

namespace sublang {

struct GuessRule {
  std::string suffix;  // lower case, without '-'
  std::string category;
  std::string macro;
  std::string id;  // "<source>:<line>"
};

std::vector<GuessRule> ParseGuessRules(std::string_view text,
                                       std::string_view source = "<rules>");
std::vector<GuessRule> LoadGuessRules(const std::filesystem::path& path);

// A category offered to words that neither the lexicon nor a rule covers.
struct FallbackClass {
  std::string category;
  std::string macro;
};

// "n:unknown-noun,v:unknown-verb" -> two classes.
std::vector<FallbackClass> ParseFallbackClasses(std::string_view spec);

enum class GuessStatus { kKnown, kGuessed, kUnknownFallback };

std::string_view GuessStatusName(GuessStatus status);

inline constexpr std::string_view kUnknownCategory = "unknown";

struct GuessOutcome {
  std::string word;
  GuessStatus status = GuessStatus::kKnown;
  std::string category;
  std::optional<std::string> rule;  // id of the rule used, if guessed
  std::vector<LexiconEntry> entries;
};

// Suffixes must leave a stem of at least this many characters.
inline constexpr int kMinStemLength = 2;

class MorphoGuesser {
 public:
  // Keeps its own copy of the lexicon. Throws DANGLING_MACRO when a rule or
  // fallback class names a macro the lexicon lacks.
  MorphoGuesser(Lexicon lexicon, std::vector<GuessRule> rules,
                std::vector<FallbackClass> fallback);

  // Known words come straight from the lexicon. Otherwise the longest
  // matching suffix (case-insensitive) wins, ties going to the earlier rule.
  // Words no rule covers get every fallback class.
  GuessOutcome Guess(std::string_view word) const;

  const Lexicon& lexicon() const { return lexicon_; }
  const std::vector<GuessRule>& rules() const { return rules_; }

 private:
  Lexicon lexicon_;
  std::vector<GuessRule> rules_;  // longest suffix first
  std::vector<FallbackClass> fallback_;
};

// Token occurrences outside the lexicon, split by how they were handled.
struct GuessCounts {
  int unknown = 0;  // fallback
  int guessed = 0;
  int out_of_lexicon() const { return unknown + guessed; }
};

GuessCounts ClassifyCorpus(
    const std::vector<std::vector<std::string>>& sentences,
    const MorphoGuesser& guesser,
    std::vector<std::vector<GuessOutcome>>* outcomes = nullptr);

}  // namespace sublang

#endif  // SUBLANG_MORPHO_GUESSER_H_
