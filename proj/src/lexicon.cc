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

#include <set>
#include <utility>

#include "sublang/error.h"
#include "text_util.h"

namespace sublang {

std::string_view EntryOriginName(EntryOrigin origin) {
  switch (origin) {
    case EntryOrigin::kBase:
      return "BASE";
    case EntryOrigin::kOverlay:
      return "OVERLAY";
    case EntryOrigin::kMorphoGuess:
      return "MORPHO_GUESS";
    case EntryOrigin::kUnknownFallback:
      return "UNKNOWN_FALLBACK";
  }
  return "BASE";
}

void Lexicon::AddEntry(LexiconEntry entry) {
  auto& list = entries_[entry.word];
  for (const LexiconEntry& e : list) {
    if (e.category == entry.category) {
      throw Error(ErrorCode::kDuplicateEntry,
                  entry.word + "." + entry.category);
    }
  }
  // Overlay entries are listed before base ones.
  auto pos = list.end();
  if (entry.origin == EntryOrigin::kOverlay) {
    pos = list.begin();
    while (pos != list.end() && pos->origin == EntryOrigin::kOverlay) ++pos;
  }
  list.insert(pos, std::move(entry));
}

void Lexicon::SetMacro(std::string name, Expression expression) {
  macros_[std::move(name)] = std::move(expression);
}

void Lexicon::RemoveWord(std::string_view word) {
  auto it = entries_.find(word);
  if (it != entries_.end()) entries_.erase(it);
}

const std::vector<LexiconEntry>* Lexicon::Find(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<LexiconEntry> Lexicon::Lookup(std::string_view word) const {
  if (const auto* found = Find(word)) return *found;
  std::string lower = internal::ToLower(word);
  if (lower != word) {
    if (const auto* found = Find(lower)) return *found;
  }
  return {};
}

const Expression* Lexicon::Macro(std::string_view name) const {
  auto it = macros_.find(name);
  return it == macros_.end() ? nullptr : &it->second;
}

size_t Lexicon::size() const {
  size_t n = 0;
  for (const auto& [word, list] : entries_) n += list.size();
  return n;
}

namespace {

struct RawEntry {
  std::string word;
  std::string category;
  Expression expression;
  int line = 0;
};

struct RawMacro {
  std::string name;
  Expression expression;
  int line = 0;
};

struct RawDictionary {
  std::vector<RawEntry> entries;
  std::vector<RawMacro> macros;
};

class DictionaryParser {
 public:
  DictionaryParser(std::string_view text, std::string_view source)
      : text_(text), source_(source) {}

  RawDictionary Parse() {
    RawDictionary out;
    while (true) {
      SkipSpace();
      if (AtEnd()) break;
      int line = line_;
      if (Peek() == '<') {
        std::string name = ReadMacroName();
        Expect(':');
        Expression e = ParseOr();
        Expect(';');
        out.macros.push_back({std::move(name), std::move(e), line});
        continue;
      }
      std::vector<std::string> words;
      while (true) {
        SkipSpace();
        if (AtEnd()) Fail("unexpected end of input, expected ':'");
        if (Peek() == ':') break;
        words.push_back(ReadWord());
      }
      if (words.empty()) Fail("entry has no word before ':'");
      Expect(':');
      Expression e = ParseOr();
      Expect(';');
      for (const std::string& w : words) {
        RawEntry entry;
        SplitCategory(w, entry.word, entry.category);
        entry.expression = e;
        entry.line = line;
        out.entries.push_back(std::move(entry));
      }
    }
    return out;
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void SkipSpace() {
    while (!AtEnd()) {
      char c = Peek();
      if (c == '%') {
        while (!AtEnd() && Peek() != '\n') Advance();
      } else if (internal::IsSpace(c)) {
        Advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorCode::kSyntaxError,
                std::string(source_) + ":" + std::to_string(line_) + ":" +
                    std::to_string(column_) + ": " + what);
  }

  void Expect(char c) {
    SkipSpace();
    if (AtEnd() || Peek() != c) {
      Fail(std::string("expected '") + c + "'");
    }
    Advance();
  }

  static bool IsWordChar(char c) {
    return !internal::IsSpace(c) && c != ':' && c != ';' && c != '%';
  }

  std::string ReadWord() {
    size_t start = pos_;
    while (!AtEnd() && IsWordChar(Peek())) Advance();
    if (pos_ == start) Fail("expected a word");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string ReadMacroName() {
    Advance();  // '<'
    size_t start = pos_;
    while (!AtEnd() && Peek() != '>' && Peek() != '\n' && Peek() != ';') {
      Advance();
    }
    if (AtEnd() || Peek() != '>') Fail("unterminated macro name");
    std::string name(text_.substr(start, pos_ - start));
    if (name.empty()) Fail("empty macro name");
    Advance();
    return name;
  }

  static void SplitCategory(const std::string& token, std::string& word,
                            std::string& category) {
    size_t dot = token.rfind('.');
    if (dot != std::string::npos && dot > 0 && dot + 1 < token.size() &&
        token[dot + 1] >= 'a' && token[dot + 1] <= 'z') {
      bool ok = true;
      for (size_t i = dot + 1; i < token.size(); ++i) {
        char c = token[i];
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' ||
              c == '_')) {
          ok = false;
        }
      }
      if (ok) {
        word = token.substr(0, dot);
        category = token.substr(dot + 1);
        return;
      }
    }
    word = token;
    category = std::string(kAnyCategory);
  }

  bool PeekKeywordOr() {
    if (pos_ + 1 >= text_.size()) return false;
    if (text_[pos_] != 'o' || text_[pos_ + 1] != 'r') return false;
    if (pos_ + 2 < text_.size()) {
      char c = text_[pos_ + 2];
      if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
        return false;
      }
    }
    return true;
  }

  Expression ParseOr() {
    std::vector<Expression> alternatives;
    alternatives.push_back(ParseAnd());
    while (true) {
      SkipSpace();
      if (AtEnd() || !PeekKeywordOr()) break;
      Advance();
      Advance();
      alternatives.push_back(ParseAnd());
    }
    if (alternatives.size() == 1) return std::move(alternatives[0]);
    return Expression::Or(std::move(alternatives));
  }

  Expression ParseAnd() {
    std::vector<Expression> terms;
    terms.push_back(ParseTerm());
    while (true) {
      SkipSpace();
      if (AtEnd() || Peek() != '&') break;
      Advance();
      terms.push_back(ParseTerm());
    }
    if (terms.size() == 1) return std::move(terms[0]);
    return Expression::And(std::move(terms));
  }

  Expression ParseTerm() {
    SkipSpace();
    if (AtEnd()) Fail("unexpected end of input in expression");
    char c = Peek();
    if (c == '(') {
      Advance();
      SkipSpace();
      if (!AtEnd() && Peek() == ')') {
        Advance();
        return Expression::Empty();
      }
      Expression e = ParseOr();
      Expect(')');
      return e;
    }
    if (c == '{') {
      Advance();
      Expression e = ParseOr();
      Expect('}');
      return Expression::Optional(std::move(e));
    }
    if (c == '[') {
      Advance();
      Expression e = ParseOr();
      Expect(']');
      return Expression::Costed(std::move(e), 1);
    }
    if (c == '<') return Expression::MacroRef(ReadMacroName());
    size_t start = pos_;
    while (!AtEnd()) {
      char d = Peek();
      bool ok = d == '@' || d == '*' || d == '+' || d == '-' ||
                (d >= 'a' && d <= 'z') || (d >= 'A' && d <= 'Z');
      if (!ok) break;
      Advance();
      if (d == '+' || d == '-') break;
    }
    std::string_view token = text_.substr(start, pos_ - start);
    auto conn = ParseConnector(token);
    if (!conn) {
      Fail("bad connector '" + std::string(token) + "'");
    }
    return Expression::Conn(*conn);
  }

  std::string_view text_;
  std::string_view source_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// Expands macro references. Raw macros of the file being loaded take
// precedence over already-resolved macros from a base lexicon.
class MacroResolver {
 public:
  MacroResolver(const std::vector<RawMacro>& raw, const Lexicon* base,
                std::string_view source)
      : base_(base), source_(source) {
    for (const RawMacro& m : raw) {
      if (raw_.count(m.name) > 0) {
        throw Error(ErrorCode::kDuplicateEntry,
                    std::string(source) + ":" + std::to_string(m.line) +
                        ": macro <" + m.name + "> defined twice");
      }
      raw_.emplace(m.name, &m);
    }
  }

  Expression Resolve(const Expression& e, int line) {
    if (e.kind == Expression::Kind::kMacro) return ResolveMacro(e.macro, line);
    Expression out = e;
    for (Expression& child : out.children) child = Resolve(child, line);
    return out;
  }

  Expression ResolveMacro(const std::string& name, int line) {
    if (auto it = done_.find(name); it != done_.end()) return it->second;
    auto raw = raw_.find(name);
    if (raw == raw_.end()) {
      if (base_ != nullptr) {
        if (const Expression* e = base_->Macro(name)) return *e;
      }
      throw Error(ErrorCode::kDanglingMacro, "<" + name + "> referenced at " +
                                                 std::string(source_) + ":" +
                                                 std::to_string(line));
    }
    if (!active_.insert(name).second) {
      throw Error(ErrorCode::kMacroCycle,
                  "<" + name + "> at " + std::string(source_) + ":" +
                      std::to_string(raw->second->line));
    }
    Expression resolved = Resolve(raw->second->expression, raw->second->line);
    active_.erase(name);
    done_.emplace(name, resolved);
    return resolved;
  }

 private:
  const Lexicon* base_;
  std::string_view source_;
  std::map<std::string, const RawMacro*> raw_;
  std::map<std::string, Expression> done_;
  std::set<std::string> active_;
};

Lexicon Build(const RawDictionary& raw, const Lexicon* base,
              std::string_view source, EntryOrigin origin) {
  MacroResolver resolver(raw.macros, base, source);
  Lexicon lex;
  if (base != nullptr) lex = *base;
  for (const RawMacro& m : raw.macros) {
    lex.SetMacro(m.name, resolver.ResolveMacro(m.name, m.line));
  }
  // Shadow whole surface forms first so that later AddEntry calls only ever
  // see overlay entries for those words.
  std::set<std::string> shadowed;
  for (const RawEntry& e : raw.entries) {
    if (shadowed.insert(e.word).second) lex.RemoveWord(e.word);
  }
  for (const RawEntry& e : raw.entries) {
    LexiconEntry entry;
    entry.word = e.word;
    entry.category = e.category;
    entry.expression = resolver.Resolve(e.expression, e.line);
    entry.origin = origin;
    try {
      lex.AddEntry(std::move(entry));
    } catch (const Error& err) {
      throw Error(err.code(), err.detail() + " at " + std::string(source) +
                                  ":" + std::to_string(e.line));
    }
  }
  return lex;
}

}  // namespace

Lexicon ParseDictionary(std::string_view text, std::string_view source) {
  RawDictionary raw = DictionaryParser(text, source).Parse();
  return Build(raw, nullptr, source, EntryOrigin::kBase);
}

Lexicon LoadDictionary(const std::filesystem::path& path) {
  std::string text = internal::ReadFile(path);
  return ParseDictionary(text, path.string());
}

Lexicon ApplyOverlayText(const Lexicon& base, std::string_view text,
                         std::string_view source) {
  RawDictionary raw = DictionaryParser(text, source).Parse();
  return Build(raw, &base, source, EntryOrigin::kOverlay);
}

Lexicon ApplyOverlay(const Lexicon& base, const std::filesystem::path& path) {
  std::string text = internal::ReadFile(path);
  return ApplyOverlayText(base, text, path.string());
}

std::string SerializeDictionary(const Lexicon& lexicon) {
  std::string out;
  for (const auto& [name, e] : lexicon.macros()) {
    out += "<" + name + ">: " + ToString(e) + ";\n";
  }
  for (const auto& [word, list] : lexicon.entries()) {
    for (const LexiconEntry& entry : list) {
      out += entry.word;
      if (entry.category != kAnyCategory) out += "." + entry.category;
      out += ": " + ToString(entry.expression) + ";\n";
    }
  }
  return out;
}

}  // namespace sublang
