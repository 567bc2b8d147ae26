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

#include <algorithm>

#include "sublang/error.h"
#include "text_util.h"

namespace sublang {

using internal::Trim;

namespace {

std::string StripAngles(std::string_view name) {
  if (name.size() >= 2 && name.front() == '<' && name.back() == '>') {
    name = name.substr(1, name.size() - 2);
  }
  return std::string(name);
}

const Expression& RequireMacro(const Lexicon& lexicon, const std::string& name,
                               std::string_view user) {
  const Expression* e = lexicon.Macro(name);
  if (e == nullptr) {
    throw Error(ErrorCode::kDanglingMacro,
                "<" + name + "> used by " + std::string(user));
  }
  return *e;
}

}  // namespace

std::vector<GuessRule> ParseGuessRules(std::string_view text,
                                       std::string_view source) {
  std::vector<GuessRule> rules;
  int line_no = 0;
  for (std::string_view line : internal::SplitLines(text)) {
    ++line_no;
    line = internal::StripHashComment(line);
    if (line.empty()) continue;
    std::string id = std::string(source) + ":" + std::to_string(line_no);
    auto fields = internal::SplitWhitespace(line);
    if (fields.size() != 3) {
      throw Error(ErrorCode::kSyntaxError,
                  id + ": expected suffix, category and macro");
    }
    std::string_view suffix = fields[0];
    if (!suffix.empty() && suffix.front() == '-') suffix.remove_prefix(1);
    if (suffix.empty()) {
      throw Error(ErrorCode::kSyntaxError, id + ": empty suffix");
    }
    rules.push_back(GuessRule{internal::ToLower(suffix), std::string(fields[1]),
                              StripAngles(fields[2]), id});
  }
  return rules;
}

std::vector<GuessRule> LoadGuessRules(const std::filesystem::path& path) {
  return ParseGuessRules(internal::ReadFile(path), path.string());
}

std::vector<FallbackClass> ParseFallbackClasses(std::string_view spec) {
  std::vector<FallbackClass> out;
  for (std::string_view item : internal::Split(spec, ',')) {
    item = Trim(item);
    if (item.empty()) continue;
    std::size_t colon = item.find(':');
    if (colon == std::string_view::npos || colon == 0 ||
        colon + 1 == item.size()) {
      throw Error(
          ErrorCode::kConfigError,
          "fallback class '" + std::string(item) + "' is not category:macro");
    }
    out.push_back(FallbackClass{std::string(Trim(item.substr(0, colon))),
                                StripAngles(Trim(item.substr(colon + 1)))});
  }
  return out;
}

std::string_view GuessStatusName(GuessStatus status) {
  switch (status) {
    case GuessStatus::kKnown:
      return "KNOWN";
    case GuessStatus::kGuessed:
      return "GUESSED";
    case GuessStatus::kUnknownFallback:
      return "UNKNOWN_FALLBACK";
  }
  return "?";
}

MorphoGuesser::MorphoGuesser(Lexicon lexicon, std::vector<GuessRule> rules,
                             std::vector<FallbackClass> fallback)
    : lexicon_(std::move(lexicon)),
      rules_(std::move(rules)),
      fallback_(std::move(fallback)) {
  for (const GuessRule& r : rules_) RequireMacro(lexicon_, r.macro, r.id);
  for (const FallbackClass& f : fallback_) {
    RequireMacro(lexicon_, f.macro, "fallback class " + f.category);
  }
  std::stable_sort(rules_.begin(), rules_.end(),
                   [](const GuessRule& a, const GuessRule& b) {
                     return a.suffix.size() > b.suffix.size();
                   });
}

GuessOutcome MorphoGuesser::Guess(std::string_view word) const {
  GuessOutcome out;
  out.word = std::string(word);
  out.entries = lexicon_.Lookup(word);
  if (!out.entries.empty()) {
    out.status = GuessStatus::kKnown;
    out.category = out.entries.front().category;
    return out;
  }
  std::string lower = internal::ToLower(word);
  for (const GuessRule& r : rules_) {
    if (lower.size() < r.suffix.size() + kMinStemLength) continue;
    if (!lower.ends_with(r.suffix)) continue;
    out.status = GuessStatus::kGuessed;
    out.category = r.category;
    out.rule = r.id;
    out.entries.push_back(LexiconEntry{out.word, r.category,
                                       *lexicon_.Macro(r.macro),
                                       EntryOrigin::kMorphoGuess});
    return out;
  }
  out.status = GuessStatus::kUnknownFallback;
  out.category = std::string(kUnknownCategory);
  for (const FallbackClass& f : fallback_) {
    out.entries.push_back(LexiconEntry{out.word, f.category,
                                       *lexicon_.Macro(f.macro),
                                       EntryOrigin::kUnknownFallback});
  }
  return out;
}

GuessCounts ClassifyCorpus(
    const std::vector<std::vector<std::string>>& sentences,
    const MorphoGuesser& guesser,
    std::vector<std::vector<GuessOutcome>>* outcomes) {
  GuessCounts counts;
  if (outcomes != nullptr) outcomes->clear();
  for (const auto& sentence : sentences) {
    std::vector<GuessOutcome> row;
    for (const std::string& word : sentence) {
      GuessOutcome g = guesser.Guess(word);
      if (g.status == GuessStatus::kGuessed) ++counts.guessed;
      if (g.status == GuessStatus::kUnknownFallback) ++counts.unknown;
      if (outcomes != nullptr) row.push_back(std::move(g));
    }
    if (outcomes != nullptr) outcomes->push_back(std::move(row));
  }
  return counts;
}

}  // namespace sublang
