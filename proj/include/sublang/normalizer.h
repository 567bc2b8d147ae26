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

// Text normalization ahead of parsing: sentence segmentation, tokenization,
// removal of extratextual material (citations, figure references), entity
// codes for gene and species names, and folding of numeric expressions.

#ifndef SUBLANG_NORMALIZER_H_
#define SUBLANG_NORMALIZER_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sublang {

enum class TokenKind { kWord, kGeneCode, kSpeciesCode, kNumber, kTermHead };

std::string_view TokenKindName(TokenKind kind);

// Lexicon words that stand for replaced material.
inline constexpr std::string_view kGeneCode = "GENE_CODE";
inline constexpr std::string_view kSpeciesCode = "SPECIES_CODE";
inline constexpr std::string_view kNumberCode = "NUMBER";

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::kWord;
  // Character offsets [begin, end) into the sentence's raw text.
  std::size_t begin = 0;
  std::size_t end = 0;
  // Replaced text, exactly as it appears in the raw text. Set iff kind is
  // not kWord.
  std::optional<std::string> original;

  bool operator==(const Token&) const = default;
};

struct SentenceRecord {
  std::string raw_text;
  std::vector<Token> tokens;
};

std::vector<std::string> Surfaces(const std::vector<Token>& tokens);
// Tokens with made-up consecutive offsets, for callers that start from words.
std::vector<Token> TokensFromWords(const std::vector<std::string>& words);

using WordSet = std::set<std::string, std::less<>>;

// One item per line, '#' comments. Used for abbreviation and unit lists.
WordSet ParseWordList(std::string_view text);
WordSet LoadWordList(const std::filesystem::path& path);

// Splits a document on '.', '!' and '?' followed by whitespace or the end of
// text. Never splits inside parentheses or brackets, after a listed
// abbreviation (the word including its final period) or inside a decimal.
std::vector<std::string> SegmentSentences(std::string_view text,
                                          const WordSet& abbreviations);

using CharRanges = std::vector<std::pair<std::size_t, std::size_t>>;

// Splits on whitespace and punctuation. Hyphens, slashes, apostrophes and
// periods inside a word stay in it ("sigma-B", "0.5"), as do commas between
// digits. A final period is split off unless the word with it is a listed
// abbreviation. Punctuation is dropped. Only characters inside `kept` (all
// of `text` when empty) are read; offsets refer to `text`.
std::vector<Token> Tokenize(std::string_view text,
                            const WordSet& abbreviations = {},
                            const CharRanges& kept = {});

// Deletion rules: lines of the form "DELETE<TAB>regex". Blank lines and lines
// starting with '#' are ignored.
class NormalizationRules {
 public:
  struct Rule {
    std::string id;  // "<source>:<line>"
    std::string pattern;
    std::regex regex;
  };

  // Throws BAD_PATTERN naming the rule when a regex does not compile, and
  // SYNTAX_ERROR for lines that are not DELETE rules.
  static NormalizationRules Parse(std::string_view text,
                                  std::string_view source = "<rules>");
  static NormalizationRules Load(const std::filesystem::path& path);

  // Sorted, merged character ranges matched by any rule.
  CharRanges DeletedRanges(std::string_view sentence) const;
  const std::vector<Rule>& rules() const { return rules_; }

 private:
  std::vector<Rule> rules_;
};

// Removes every rule match and re-collapses whitespace.
std::string StripExtratextual(std::string_view sentence,
                              const NormalizationRules& rules);
// Complement of the deleted ranges within [0, size).
CharRanges KeptRanges(std::size_t size, const CharRanges& deleted);

enum class EntityKind { kGene, kSpecies };

// Gene and species names, possibly multiword, matched longest-first.
// Format: "surface<TAB>GENE|SPECIES" per line, '#' comments.
class EntityDictionary {
 public:
  explicit EntityDictionary(bool case_sensitive = true)
      : case_sensitive_(case_sensitive) {}

  static EntityDictionary Parse(std::string_view text,
                                std::string_view source = "<entities>",
                                bool case_sensitive = true);
  static EntityDictionary Load(const std::filesystem::path& path,
                               bool case_sensitive = true);

  // Returns false if the surface is already listed with the other kind.
  bool Add(std::string_view surface, EntityKind kind);

  // Length (in tokens) and kind of the longest entry matching the word tokens
  // starting at `pos`, or nullopt.
  std::optional<std::pair<int, EntityKind>> LongestMatch(
      const std::vector<Token>& tokens, std::size_t pos) const;

  std::size_t size() const { return entries_.size(); }

 private:
  std::string Key(std::string_view word) const;

  bool case_sensitive_;
  std::map<std::vector<std::string>, EntityKind> entries_;
  int max_length_ = 0;
};

// Longest-match, left-to-right replacement of dictionary names by one
// GENE_CODE or SPECIES_CODE token. `text` is the string the token offsets
// refer to; it supplies the exact original surface.
std::vector<Token> ReplaceEntities(const std::vector<Token>& tokens,
                                   const EntityDictionary& dict,
                                   std::string_view text);

// Folds each number, with a following unit from `units` if present, into one
// NUMBER token. Spelled-out numbers are left alone.
std::vector<Token> NormalizeNumeric(const std::vector<Token>& tokens,
                                    const WordSet& units,
                                    std::string_view text);

bool IsNumeric(std::string_view word);

// The whole normalization chain with its loaded resources. Immutable after
// construction and safe to share between threads.
class Normalizer {
 public:
  Normalizer(NormalizationRules rules, EntityDictionary entities, WordSet units,
             WordSet abbreviations)
      : rules_(std::move(rules)),
        entities_(std::move(entities)),
        units_(std::move(units)),
        abbreviations_(std::move(abbreviations)) {}

  // Strip, tokenize, replace entities and fold numbers.
  SentenceRecord Run(std::string_view sentence) const;
  // Only the token-level steps; idempotent.
  std::vector<Token> NormalizeTokens(const std::vector<Token>& tokens,
                                     std::string_view text) const;

  const WordSet& abbreviations() const { return abbreviations_; }

 private:
  NormalizationRules rules_;
  EntityDictionary entities_;
  WordSet units_;
  WordSet abbreviations_;
};

}  // namespace sublang

#endif  // SUBLANG_NORMALIZER_H_
