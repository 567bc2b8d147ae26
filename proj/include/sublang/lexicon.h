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

// Dictionaries: loading, overlays and word lookup.
//
// File syntax (UTF-8, '%' starts a comment):
//
//   the a: D+;                      % several words may share an entry
//   cat.n: {@A-} & D- & (S+ or O-);  % ".n" is the category tag
//   <mass>: {D-};                    % macro definition
//   water.n: <mass> & S+;
//
// "&" binds tighter than "or"; {e} is optional, [e] adds one to the cost.

#ifndef SUBLANG_LEXICON_H_
#define SUBLANG_LEXICON_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sublang/grammar.h"

namespace sublang {

enum class EntryOrigin { kBase, kOverlay, kMorphoGuess, kUnknownFallback };

std::string_view EntryOriginName(EntryOrigin origin);

struct LexiconEntry {
  std::string word;
  std::string category;  // "any" when the file gives no suffix
  Expression expression;
  EntryOrigin origin = EntryOrigin::kBase;

  bool operator==(const LexiconEntry&) const = default;
};

inline constexpr std::string_view kAnyCategory = "any";

// A resolved, immutable-after-load lexicon. All macro references inside
// entries have been expanded.
class Lexicon {
 public:
  // Adds an entry. Throws DUPLICATE_ENTRY when (word, category) exists.
  void AddEntry(LexiconEntry entry);
  void SetMacro(std::string name, Expression expression);
  // Removes every entry for `word` (used when an overlay shadows it).
  void RemoveWord(std::string_view word);

  // Entries stored under exactly this surface form, or nullptr.
  const std::vector<LexiconEntry>* Find(std::string_view word) const;
  // Exact surface form first, then its lower-cased form. Empty if neither.
  std::vector<LexiconEntry> Lookup(std::string_view word) const;
  bool Resolves(std::string_view word) const { return !Lookup(word).empty(); }

  const Expression* Macro(std::string_view name) const;

  const std::map<std::string, std::vector<LexiconEntry>, std::less<>>& entries()
      const {
    return entries_;
  }
  const std::map<std::string, Expression, std::less<>>& macros() const {
    return macros_;
  }
  size_t size() const;

  bool operator==(const Lexicon&) const = default;

 private:
  std::map<std::string, std::vector<LexiconEntry>, std::less<>> entries_;
  std::map<std::string, Expression, std::less<>> macros_;
};

// Parses dictionary text. `source` names the input in error messages.
// Errors: SYNTAX_ERROR (with line:column), DANGLING_MACRO, MACRO_CYCLE,
// DUPLICATE_ENTRY.
Lexicon ParseDictionary(std::string_view text,
                        std::string_view source = "<string>");
Lexicon LoadDictionary(const std::filesystem::path& path);

// Entries of the overlay replace every base entry with the same surface form;
// other base entries are untouched. Overlay text may use base macros and may
// define new ones (which shadow base macros of the same name).
Lexicon ApplyOverlayText(const Lexicon& base, std::string_view text,
                         std::string_view source = "<overlay>");
Lexicon ApplyOverlay(const Lexicon& base, const std::filesystem::path& path);

// Dictionary text that ParseDictionary reads back to an equal lexicon (entry
// origins aside, which are not part of the file format).
std::string SerializeDictionary(const Lexicon& lexicon);

}  // namespace sublang

#endif  // SUBLANG_LEXICON_H_
