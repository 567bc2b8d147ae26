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

#include "sublang/pipeline.h"

#include <utility>

#include "sublang/error.h"

namespace sublang {

MorphoGuesser Pipeline::LoadGuesser(const ConfigSpec& spec) {
  Lexicon lexicon = LoadDictionary(spec.dictionary);
  for (const auto& overlay : spec.overlays) {
    lexicon = ApplyOverlay(lexicon, overlay);
  }
  std::vector<GuessRule> rules;
  for (const auto& path : spec.mg_rules) {
    std::vector<GuessRule> more = LoadGuessRules(path);
    rules.insert(rules.end(), more.begin(), more.end());
  }
  return MorphoGuesser(std::move(lexicon), std::move(rules),
                       ParseFallbackClasses(spec.fallback));
}

Pipeline::Pipeline(ConfigSpec spec)
    : spec_(std::move(spec)), guesser_(LoadGuesser(spec_)) {
  if (spec_.abbreviations) abbreviations_ = LoadWordList(*spec_.abbreviations);
  if (spec_.normalize) {
    NormalizationRules rules;
    EntityDictionary entities;
    WordSet units;
    if (spec_.norm_rules) rules = NormalizationRules::Load(*spec_.norm_rules);
    if (spec_.entities) entities = EntityDictionary::Load(*spec_.entities);
    if (spec_.units) units = LoadWordList(*spec_.units);
    normalizer_.emplace(std::move(rules), std::move(entities), std::move(units),
                        abbreviations_);
  }
  if (spec_.simplify && spec_.terms) terms_ = TermIndex::Load(*spec_.terms);
}

std::vector<std::string> Pipeline::stages() const {
  std::vector<std::string> out;
  if (spec_.normalize) out.push_back("normalize");
  if (spec_.simplify) out.push_back("simplify");
  out.push_back("guess");
  out.push_back("parse");
  if (spec_.simplify) out.push_back("reexpand");
  return out;
}

std::vector<Token> Pipeline::BaseTokens(std::string_view sentence) const {
  return Tokenize(sentence, abbreviations_);
}

std::vector<std::string> Pipeline::Segment(std::string_view text) const {
  return SegmentSentences(text, abbreviations_);
}

SentenceRun Pipeline::Run(std::string_view sentence) const {
  SentenceRun run;
  run.text = std::string(sentence);
  run.stages = stages();
  run.tokens =
      normalizer_ ? normalizer_->Run(sentence).tokens : BaseTokens(sentence);
  run.simplification = spec_.simplify ? Simplify(run.tokens, terms_)
                                      : Simplify(run.tokens, TermIndex());
  const std::vector<Token>& parsed = run.parsed_tokens();
  std::vector<TokenDisjuncts> disjuncts;
  for (const Token& t : parsed) {
    run.guesses.push_back(guesser_.Guess(t.surface));
    disjuncts.push_back(DisjunctsForEntries(run.guesses.back().entries));
  }
  if (parsed.empty()) {
    run.error = "empty sentence";
    return run;
  }
  try {
    run.parse = EnumerateLinkages(disjuncts, spec_.parse);
  } catch (const Error& e) {
    run.error = e.what();
    return run;
  }
  if (run.parse.timed_out) {
    run.error = std::string(ErrorCodeName(ErrorCode::kTimeout));
  }
  if (run.parse.linkages.empty()) return run;
  try {
    run.best = Reexpand(run.parse.linkages.front(), run.simplification);
  } catch (const Error& e) {
    run.error = e.what();
  }
  return run;
}

}  // namespace sublang
