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

#include "sublang/normalizer.h"

#include <algorithm>
#include <cctype>

#include "sublang/error.h"
#include "text_util.h"

namespace sublang {

using internal::IsSpace;
using internal::SplitLines;
using internal::Trim;

namespace {

bool IsWordChar(char c) {
  auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalnum(u);
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool IsBreakingPunct(char c) {
  switch (c) {
    case '(':
    case ')':
    case '[':
    case ']':
    case '{':
    case '}':
    case ';':
    case ':':
    case '"':
    case '!':
    case '?':
    case '<':
    case '>':
      return true;
    default:
      return false;
  }
}

void EmitPiece(std::string_view text, std::size_t b, std::size_t e,
               const WordSet& abbreviations, std::vector<Token>& out) {
  while (b < e && !IsWordChar(text[b])) ++b;
  while (e > b && !IsWordChar(text[e - 1]) && text[e - 1] != '%') {
    if (text[e - 1] == '.' && abbreviations.contains(text.substr(b, e - b))) {
      break;
    }
    --e;
  }
  if (b == e) return;
  Token t;
  t.surface = std::string(text.substr(b, e - b));
  t.begin = b;
  t.end = e;
  out.push_back(std::move(t));
}

void TokenizeRange(std::string_view text, std::size_t begin, std::size_t end,
                   const WordSet& abbreviations, std::vector<Token>& out) {
  std::size_t i = begin;
  while (i < end) {
    while (i < end && IsSpace(text[i])) ++i;
    std::size_t start = i;
    while (i < end && !IsSpace(text[i])) {
      char c = text[i];
      bool splits = IsBreakingPunct(c);
      if (c == ',') {
        splits = !(i > start && IsDigit(text[i - 1]) && i + 1 < end &&
                   IsDigit(text[i + 1]));
      }
      if (splits) {
        EmitPiece(text, start, i, abbreviations, out);
        start = i + 1;
      }
      ++i;
    }
    if (start < i) EmitPiece(text, start, i, abbreviations, out);
  }
}

}  // namespace

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord:
      return "WORD";
    case TokenKind::kGeneCode:
      return "GENE_CODE";
    case TokenKind::kSpeciesCode:
      return "SPECIES_CODE";
    case TokenKind::kNumber:
      return "NUMBER";
    case TokenKind::kTermHead:
      return "TERM_HEAD";
  }
  return "?";
}

std::vector<std::string> Surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

std::vector<Token> TokensFromWords(const std::vector<std::string>& words) {
  std::vector<Token> out;
  std::size_t pos = 0;
  for (const std::string& w : words) {
    Token t;
    t.surface = w;
    t.begin = pos;
    t.end = pos + w.size();
    pos = t.end + 1;
    out.push_back(std::move(t));
  }
  return out;
}

WordSet ParseWordList(std::string_view text) {
  WordSet out;
  for (std::string_view line : SplitLines(text)) {
    line = Trim(line);
    if (line.empty() || line[0] == '#') continue;
    out.emplace(line);
  }
  return out;
}

WordSet LoadWordList(const std::filesystem::path& path) {
  return ParseWordList(internal::ReadFile(path));
}

std::vector<std::string> SegmentSentences(std::string_view text,
                                          const WordSet& abbreviations) {
  std::vector<std::string> out;
  auto emit = [&](std::size_t b, std::size_t e) {
    std::string_view s = Trim(text.substr(b, e - b));
    if (!s.empty()) out.emplace_back(s);
  };
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[' || c == '{') {
      ++depth;
    } else if (c == ')' || c == ']' || c == '}') {
      depth = std::max(0, depth - 1);
    }
    if ((c != '.' && c != '!' && c != '?') || depth > 0) continue;
    if (i + 1 < text.size() && !IsSpace(text[i + 1])) continue;
    if (c == '.') {
      std::size_t w = i;
      while (w > start && !IsSpace(text[w - 1])) --w;
      while (w < i && IsBreakingPunct(text[w])) ++w;
      if (abbreviations.contains(text.substr(w, i + 1 - w))) continue;
    }
    emit(start, i + 1);
    start = i + 1;
  }
  emit(start, text.size());
  return out;
}

std::vector<Token> Tokenize(std::string_view text, const WordSet& abbreviations,
                            const CharRanges& kept) {
  std::vector<Token> out;
  if (kept.empty()) {
    TokenizeRange(text, 0, text.size(), abbreviations, out);
  } else {
    for (const auto& [b, e] : kept) {
      TokenizeRange(text, b, std::min(e, text.size()), abbreviations, out);
    }
  }
  return out;
}

NormalizationRules NormalizationRules::Parse(std::string_view text,
                                             std::string_view source) {
  NormalizationRules rules;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    std::string id = std::string(source) + ":" + std::to_string(line_no);
    if (Trim(line).empty() || Trim(line)[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos ||
        Trim(line.substr(0, tab)) != "DELETE") {
      throw Error(ErrorCode::kSyntaxError,
                  id + ": expected DELETE<TAB>pattern");
    }
    Rule rule;
    rule.id = id;
    rule.pattern = std::string(line.substr(tab + 1));
    if (rule.pattern.empty()) {
      throw Error(ErrorCode::kBadPattern, id + ": empty pattern");
    }
    try {
      rule.regex = std::regex(rule.pattern, std::regex::ECMAScript);
    } catch (const std::regex_error& e) {
      throw Error(ErrorCode::kBadPattern, id + ": " + e.what());
    }
    rules.rules_.push_back(std::move(rule));
  }
  return rules;
}

NormalizationRules NormalizationRules::Load(const std::filesystem::path& path) {
  return Parse(internal::ReadFile(path), path.string());
}

CharRanges NormalizationRules::DeletedRanges(std::string_view sentence) const {
  CharRanges ranges;
  std::string s(sentence);
  for (const Rule& rule : rules_) {
    for (auto it = std::sregex_iterator(s.begin(), s.end(), rule.regex);
         it != std::sregex_iterator(); ++it) {
      if (it->length() == 0) continue;
      auto b = static_cast<std::size_t>(it->position());
      ranges.emplace_back(b, b + static_cast<std::size_t>(it->length()));
    }
  }
  std::sort(ranges.begin(), ranges.end());
  CharRanges merged;
  for (const auto& r : ranges) {
    if (!merged.empty() && r.first <= merged.back().second) {
      merged.back().second = std::max(merged.back().second, r.second);
    } else {
      merged.push_back(r);
    }
  }
  return merged;
}

CharRanges KeptRanges(std::size_t size, const CharRanges& deleted) {
  CharRanges kept;
  std::size_t pos = 0;
  for (const auto& [b, e] : deleted) {
    if (b > pos) kept.emplace_back(pos, b);
    pos = std::max(pos, e);
  }
  if (pos < size) kept.emplace_back(pos, size);
  return kept;
}

std::string StripExtratextual(std::string_view sentence,
                              const NormalizationRules& rules) {
  std::string out;
  bool pending_space = false;
  for (const auto& [b, e] :
       KeptRanges(sentence.size(), rules.DeletedRanges(sentence))) {
    for (std::size_t i = b; i < e; ++i) {
      if (IsSpace(sentence[i])) {
        pending_space = !out.empty();
        continue;
      }
      if (pending_space) out += ' ';
      pending_space = false;
      out += sentence[i];
    }
  }
  return out;
}

EntityDictionary EntityDictionary::Parse(std::string_view text,
                                         std::string_view source,
                                         bool case_sensitive) {
  EntityDictionary dict(case_sensitive);
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::string where = std::string(source) + ":" + std::to_string(line_no);
    auto fields = internal::Split(line, '\t');
    if (fields.size() != 2) {
      throw Error(ErrorCode::kSyntaxError,
                  where + ": expected surface<TAB>kind");
    }
    std::string_view kind_name = Trim(fields[1]);
    EntityKind kind;
    if (kind_name == "GENE") {
      kind = EntityKind::kGene;
    } else if (kind_name == "SPECIES") {
      kind = EntityKind::kSpecies;
    } else {
      throw Error(ErrorCode::kSyntaxError, where + ": unknown entity kind '" +
                                               std::string(kind_name) + "'");
    }
    if (Trim(fields[0]).empty()) {
      throw Error(ErrorCode::kSyntaxError, where + ": empty surface");
    }
    if (!dict.Add(Trim(fields[0]), kind)) {
      throw Error(ErrorCode::kDuplicateEntry,
                  where + ": '" + std::string(Trim(fields[0])) +
                      "' listed as both GENE and SPECIES");
    }
  }
  return dict;
}

EntityDictionary EntityDictionary::Load(const std::filesystem::path& path,
                                        bool case_sensitive) {
  return Parse(internal::ReadFile(path), path.string(), case_sensitive);
}

std::string EntityDictionary::Key(std::string_view word) const {
  if (word.size() > 1 && word.back() == '.') word.remove_suffix(1);
  return case_sensitive_ ? std::string(word) : internal::ToLower(word);
}

bool EntityDictionary::Add(std::string_view surface, EntityKind kind) {
  std::vector<std::string> key;
  for (std::string_view w : internal::SplitWhitespace(surface)) {
    key.push_back(Key(w));
  }
  if (key.empty()) return false;
  auto [it, inserted] = entries_.emplace(key, kind);
  if (!inserted && it->second != kind) return false;
  max_length_ = std::max(max_length_, static_cast<int>(key.size()));
  return true;
}

std::optional<std::pair<int, EntityKind>> EntityDictionary::LongestMatch(
    const std::vector<Token>& tokens, std::size_t pos) const {
  int limit = std::min<int>(max_length_, static_cast<int>(tokens.size() - pos));
  std::vector<std::string> key;
  for (int k = 0; k < limit; ++k) {
    if (tokens[pos + k].kind != TokenKind::kWord) {
      limit = k;
      break;
    }
    key.push_back(Key(tokens[pos + k].surface));
  }
  for (int len = limit; len >= 1; --len) {
    key.resize(len);
    auto it = entries_.find(key);
    if (it != entries_.end()) return std::make_pair(len, it->second);
  }
  return std::nullopt;
}

namespace {

Token Fold(const std::vector<Token>& tokens, std::size_t first,
           std::size_t last, TokenKind kind, std::string_view code,
           std::string_view text) {
  Token t;
  t.surface = std::string(code);
  t.kind = kind;
  t.begin = tokens[first].begin;
  t.end = tokens[last].end;
  if (t.end <= text.size()) {
    t.original = std::string(text.substr(t.begin, t.end - t.begin));
  } else {
    std::string joined;
    for (std::size_t i = first; i <= last; ++i) {
      if (i > first) joined += ' ';
      joined += tokens[i].surface;
    }
    t.original = joined;
  }
  return t;
}

}  // namespace

std::vector<Token> ReplaceEntities(const std::vector<Token>& tokens,
                                   const EntityDictionary& dict,
                                   std::string_view text) {
  std::vector<Token> out;
  for (std::size_t i = 0; i < tokens.size();) {
    auto match = dict.LongestMatch(tokens, i);
    if (!match) {
      out.push_back(tokens[i++]);
      continue;
    }
    auto [len, kind] = *match;
    bool gene = kind == EntityKind::kGene;
    out.push_back(Fold(tokens, i, i + len - 1,
                       gene ? TokenKind::kGeneCode : TokenKind::kSpeciesCode,
                       gene ? kGeneCode : kSpeciesCode, text));
    i += len;
  }
  return out;
}

bool IsNumeric(std::string_view word) {
  static const std::regex kNumber(
      R"([+-]?(\d+(,\d{3})*(\.\d+)?|\.\d+)([eE][+-]?\d+)?)"
      R"((-(\d+(\.\d+)?))?%?)");
  return std::regex_match(word.begin(), word.end(), kNumber);
}

std::vector<Token> NormalizeNumeric(const std::vector<Token>& tokens,
                                    const WordSet& units,
                                    std::string_view text) {
  std::vector<Token> out;
  for (std::size_t i = 0; i < tokens.size();) {
    const Token& t = tokens[i];
    if (t.kind != TokenKind::kWord || !IsNumeric(t.surface)) {
      out.push_back(t);
      ++i;
      continue;
    }
    std::size_t last = i;
    if (i + 1 < tokens.size() && tokens[i + 1].kind == TokenKind::kWord &&
        units.contains(tokens[i + 1].surface)) {
      last = i + 1;
    }
    out.push_back(Fold(tokens, i, last, TokenKind::kNumber, kNumberCode, text));
    i = last + 1;
  }
  return out;
}

SentenceRecord Normalizer::Run(std::string_view sentence) const {
  SentenceRecord record;
  record.raw_text = std::string(sentence);
  CharRanges kept = KeptRanges(sentence.size(), rules_.DeletedRanges(sentence));
  if (kept.empty()) return record;
  record.tokens =
      NormalizeTokens(Tokenize(sentence, abbreviations_, kept), sentence);
  return record;
}

std::vector<Token> Normalizer::NormalizeTokens(const std::vector<Token>& tokens,
                                               std::string_view text) const {
  return NormalizeNumeric(ReplaceEntities(tokens, entities_, text), units_,
                          text);
}

}  // namespace sublang
