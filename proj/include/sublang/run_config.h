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

// Declarative run configuration: "key = value" lines, '#' comments. Relative
// paths are taken relative to the configuration file. A key may be scoped
// to one preset ("lp-bio.overlay = other.dict"), which then wins over the
// unscoped value for that preset.
//
//   corpus = corpus.tsv
//   presets = lp, lp-bio, lp-bio-t
//   dictionary = base.dict
//   overlay = bio_overlay.dict
//   mg_rules = base_guess.tsv
//   bio_mg_rules = bio_guess.tsv
//   fallback_macros = n:unknown-noun, v:unknown-verb
//   abbreviations = abbreviations.txt
//   norm_rules = norm_rules.txt
//   entities = entities.tsv
//   units = units.txt
//   terms = terms.tsv
//   gold_links = gold_links.txt
//   gold_categories = gold_categories.tsv
//   lp.cq = lp.cq
//   cap = 1000
//   timeout = 30
//   jobs = 4
//   out = out

#ifndef SUBLANG_RUN_CONFIG_H_
#define SUBLANG_RUN_CONFIG_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sublang/pipeline.h"

namespace sublang {

class RunConfig {
 public:
  RunConfig() = default;

  // Throws CONFIG_ERROR naming source and line for unknown keys or
  // malformed lines.
  static RunConfig Parse(std::string_view text,
                         const std::filesystem::path& base_dir,
                         std::string_view source = "<config>");
  static RunConfig Load(const std::filesystem::path& path);

  // Overrides a value (command-line flags). Throws CONFIG_ERROR for unknown
  // keys.
  void Set(std::string_view key, std::string value);

  std::optional<std::string> Get(std::string_view key) const;
  // Scoped value first, then the unscoped one.
  std::optional<std::string> Get(std::string_view preset,
                                 std::string_view key) const;
  std::optional<std::filesystem::path> Path(std::string_view preset,
                                            std::string_view key) const;
  std::optional<std::filesystem::path> Path(std::string_view key) const;

  std::vector<std::string> presets() const;
  std::filesystem::path corpus() const;
  std::filesystem::path out_dir() const;
  int jobs() const;

  // Resource paths and switches for one preset. Throws CONFIG_ERROR for an
  // unknown preset or a missing dictionary.
  ConfigSpec Spec(std::string_view preset) const;

  // Every (key, path) the run would read, for resource validation.
  std::vector<std::pair<std::string, std::filesystem::path>> Files() const;

  const std::filesystem::path& base_dir() const { return base_dir_; }

 private:
  std::filesystem::path Resolve(const std::string& value) const;
  int IntValue(std::string_view key, int fallback) const;

  std::map<std::string, std::string, std::less<>> values_;
  std::filesystem::path base_dir_ = ".";
};

}  // namespace sublang

#endif  // SUBLANG_RUN_CONFIG_H_
