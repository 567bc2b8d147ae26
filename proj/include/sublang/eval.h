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

// Corpus evaluation: per-sentence metrics for each configuration, averages,
// ratios against the baseline configuration, the out-of-lexicon category
// table and the JSON / CSV reports.
//
// Metrics per sentence:
//   NbW  tokens handed to the parser
//   NbL  number of complete linkages
//   PT   parse time in seconds
//   CLF  1 if a complete linkage was found
//   EL   links of the best linkage missing from the gold analysis
//   CQ   externally judged quality score in [0, 1]

#ifndef SUBLANG_EVAL_H_
#define SUBLANG_EVAL_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sublang/linkage.h"
#include "sublang/pipeline.h"
#include "sublang/run_config.h"

namespace sublang {

struct CorpusSentence {
  std::string id;
  std::string text;
};

// "id<TAB>text" per line, '#' comments. Ids must be unique.
std::vector<CorpusSentence> ParseCorpus(std::string_view text,
                                        std::string_view source = "<corpus>");
std::vector<CorpusSentence> LoadCorpus(const std::filesystem::path& path);

// Gold links over the plain tokenization of each raw sentence:
//
//   >s001
//   0<TAB>1<TAB>D
//   1<TAB>2<TAB>Ss
using GoldLinks = std::map<std::string, std::vector<Link>>;
GoldLinks ParseGoldLinks(std::string_view text,
                         std::string_view source = "<gold>");
GoldLinks LoadGoldLinks(const std::filesystem::path& path);

// "word<TAB>category"; words are matched lower-cased.
using GoldCategories = std::map<std::string, std::string, std::less<>>;
GoldCategories ParseGoldCategories(std::string_view text,
                                   std::string_view source = "<categories>");
GoldCategories LoadGoldCategories(const std::filesystem::path& path);

// "sentence-id<TAB>score". Throws SCORE_OUT_OF_RANGE(line) outside [0, 1].
using CqScores = std::map<std::string, double>;
CqScores ParseCqScores(std::string_view text, std::string_view source = "<cq>");
CqScores LoadCqScores(const std::filesystem::path& path);

// Same link type: equal upper-case part, subscripts compatible position by
// position.
bool LinkLabelsMatch(std::string_view a, std::string_view b);

// |best \ gold| over (left, right, label). Throws GOLD_INDEX_OUT_OF_RANGE if
// a gold link falls outside [0, num_tokens).
int CountErroneousLinks(const std::vector<Link>& best,
                        const std::vector<Link>& gold, int num_tokens);

// Moves links over pipeline tokens onto plain tokens: every token maps to the
// plain token holding its last character. Links inside one plain token are
// dropped.
std::vector<Link> MapToBaseTokens(const std::vector<Link>& links,
                                  const std::vector<Token>& tokens,
                                  const std::vector<Token>& base_tokens);

struct SentenceMetrics {
  std::string id;
  int nbw = 0;
  std::uint64_t nbl = 0;
  double pt = 0.0;
  bool clf = false;
  bool timed_out = false;
  std::optional<int> el;
  std::optional<double> cq;
  std::optional<std::string> error;
  std::vector<std::string> tokens;  // parsed tokens
  std::vector<Link> best_links;     // over the normalized tokens
};

SentenceMetrics Measure(const CorpusSentence& sentence, const SentenceRun& run,
                        const std::vector<Token>& base_tokens,
                        const GoldLinks* gold, const CqScores* cq);

struct Table1Row {
  int total = 0;
  int incorrect = 0;

  // Incorrect share in percent (0 when total is 0).
  double percent() const;
  // Integer error count recovered from a rounded percentage.
  static Table1Row FromPercent(int total, double percent);
};

struct Table1Block {
  Table1Row unknown;
  Table1Row guessed;
  Table1Row out_of_lexicon() const;
};

// Adds the sentence's out-of-lexicon assignments. The assigned category is
// the one the best linkage used, else the guesser's; it is wrong when it
// differs from the gold category of the word.
void CountAssignments(const SentenceRun& run, const GoldCategories& gold,
                      Table1Block& block);

struct Averages {
  double nbw = 0;
  double nbl = 0;
  double pt = 0;
  double clf = 0;
  std::optional<double> el;
  std::optional<double> cq;
  int sentences = 0;
  int timeouts = 0;  // excluded from the NbL and PT means
};

Averages Average(const std::vector<SentenceMetrics>& metrics);

enum class Metric { kNbW, kNbL, kPT, kCLF, kEL, kCQ };
inline constexpr Metric kAllMetrics[] = {Metric::kNbW, Metric::kNbL,
                                         Metric::kPT,  Metric::kCLF,
                                         Metric::kEL,  Metric::kCQ};
std::string_view MetricName(Metric metric);
std::optional<double> MetricValue(const Averages& averages, Metric metric);

// 100 * config / baseline, or nullopt when either side is n/a or the
// baseline is zero.
std::optional<double> RatioPercent(const Averages& config,
                                   const Averages& baseline, Metric metric);

// Half-up rounding to one decimal; values under 1 keep two decimals.
std::string FormatPercent(double percent);
// Half-up rounding of a decimal value to `digits` places.
double RoundHalfUp(double value, int digits);

struct ConfigResult {
  std::string name;
  std::vector<std::string> stages;
  std::vector<SentenceMetrics> sentences;
  Table1Block table1;
  Averages averages;
};

struct EvalReport {
  std::vector<ConfigResult> configs;  // baseline first
  int sentences = 0;

  const ConfigResult& baseline() const { return configs.front(); }
};

// Computes averages and puts the baseline first. Throws MISSING_BASELINE
// without an "lp" configuration.
EvalReport Aggregate(std::vector<ConfigResult> configs);

nlohmann::json LinkageJson(const Linkage& linkage,
                           const std::vector<std::string>& words);
nlohmann::json ReportJson(const EvalReport& report);
std::string ReportCsv(const EvalReport& report);
// Human-readable tables for standard output.
std::string ReportText(const EvalReport& report);

// Writes to a temporary file beside `path`, then renames it into place.
void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view content);

// Loads every resource, then runs each preset over the corpus with `jobs`
// worker threads. Resource errors are thrown before any sentence is parsed.
EvalReport RunEvaluation(const RunConfig& config, int jobs);

struct ResourceCheck {
  std::string what;  // config key or "preset <name>"
  std::string path;
  bool ok = true;
  std::string message;
};

// Loads each referenced file on its own, then each preset's full resource
// set. Never throws; failures are in the returned list.
std::vector<ResourceCheck> ValidateResources(const RunConfig& config);

}  // namespace sublang

#endif  // SUBLANG_EVAL_H_
