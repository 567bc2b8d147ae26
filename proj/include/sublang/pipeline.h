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

// One parser configuration with its loaded resources, applied sentence by
// sentence: normalize, simplify terms, guess unknown words, parse, and put
// the term analyses back.

#ifndef SUBLANG_PIPELINE_H_
#define SUBLANG_PIPELINE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sublang/linkage.h"
#include "sublang/morpho_guesser.h"
#include "sublang/normalizer.h"
#include "sublang/parser.h"
#include "sublang/term_simplifier.h"

namespace sublang {

inline constexpr std::string_view kPresetLp = "lp";
inline constexpr std::string_view kPresetLpBio = "lp-bio";
inline constexpr std::string_view kPresetLpBioT = "lp-bio-t";
inline constexpr std::string_view kPresetCustom = "custom";

inline constexpr std::string_view kDefaultFallback =
    "n:unknown-noun,v:unknown-verb,adj:unknown-adj";

struct ConfigSpec {
  std::string name;
  bool normalize = false;
  bool simplify = false;

  std::filesystem::path dictionary;
  std::vector<std::filesystem::path> overlays;
  std::vector<std::filesystem::path> mg_rules;
  std::string fallback = std::string(kDefaultFallback);
  std::optional<std::filesystem::path> abbreviations;
  std::optional<std::filesystem::path> norm_rules;
  std::optional<std::filesystem::path> entities;
  std::optional<std::filesystem::path> units;
  std::optional<std::filesystem::path> terms;

  ParseOptions parse;
};

struct SentenceRun {
  std::string text;
  std::vector<std::string> stages;
  std::vector<Token> tokens;          // after normalization
  Simplification simplification;      // identity unless simplifying
  std::vector<GuessOutcome> guesses;  // one per parsed token
  ParseResult parse;                  // over the simplified tokens
  std::optional<Linkage> best;        // over `tokens`
  std::optional<std::string> error;   // per-sentence failure, if any

  const std::vector<Token>& parsed_tokens() const {
    return simplification.simplified;
  }
};

class Pipeline {
 public:
  // Loads every resource the spec names. Throws the loader's Error.
  explicit Pipeline(ConfigSpec spec);

  // Never throws on sentence-level problems; they land in `error`.
  SentenceRun Run(std::string_view sentence) const;

  // Plain tokenization of the raw sentence, shared by every configuration.
  std::vector<Token> BaseTokens(std::string_view sentence) const;
  std::vector<std::string> Segment(std::string_view text) const;

  const ConfigSpec& spec() const { return spec_; }
  const Lexicon& lexicon() const { return guesser_.lexicon(); }
  const MorphoGuesser& guesser() const { return guesser_; }
  std::vector<std::string> stages() const;

 private:
  static MorphoGuesser LoadGuesser(const ConfigSpec& spec);

  ConfigSpec spec_;
  MorphoGuesser guesser_;
  WordSet abbreviations_;
  std::optional<Normalizer> normalizer_;
  TermIndex terms_;
};

}  // namespace sublang

#endif  // SUBLANG_PIPELINE_H_
