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

// sublang: parse one sentence, evaluate presets over a corpus, or check the
// resources a run configuration names.
//
//   sublang parse --dict toy.dict "the cat ran"
//   sublang parse --config data/run.conf --preset lp-bio-t "sigB is active."
//   sublang eval --config data/run.conf --jobs 4 --out out
//   sublang validate --config data/run.conf
//
// Exit codes: 0 success, 1 resource or configuration error, 2 no complete
// linkage.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sublang/diagram.h"
#include "sublang/error.h"
#include "sublang/eval.h"
#include "sublang/pipeline.h"
#include "sublang/run_config.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitResource = 1;
constexpr int kExitNoParse = 2;

struct CommonFlags {
  std::string config;
  std::string presets;
  std::optional<int> cap;
  std::optional<double> timeout;
  std::optional<int> jobs;
  std::string out;
};

void AddCommonFlags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config, "Run configuration file");
  cmd->add_option("--preset", flags.presets,
                  "Comma-separated presets (lp, lp-bio, lp-bio-t, custom)");
  cmd->add_option("--cap", flags.cap, "Maximum linkages kept per sentence");
  cmd->add_option("--timeout", flags.timeout, "Per-sentence time budget (s)");
  cmd->add_option("--jobs", flags.jobs, "Worker threads");
  cmd->add_option("--out", flags.out, "Output directory");
}

sublang::RunConfig LoadConfig(const CommonFlags& flags) {
  sublang::RunConfig config;
  if (!flags.config.empty()) {
    config = sublang::RunConfig::Load(flags.config);
  }
  if (!flags.presets.empty()) config.Set("presets", flags.presets);
  if (flags.cap) config.Set("cap", std::to_string(*flags.cap));
  if (flags.timeout) config.Set("timeout", std::to_string(*flags.timeout));
  if (flags.jobs) config.Set("jobs", std::to_string(*flags.jobs));
  if (!flags.out.empty()) {
    config.Set("out", std::filesystem::absolute(flags.out).string());
  }
  return config;
}

int RunParse(const CommonFlags& flags, const std::string& dict,
             const std::string& sentence) {
  sublang::ConfigSpec spec;
  if (!dict.empty()) {
    spec.name = std::string(sublang::kPresetCustom);
    spec.dictionary = dict;
    spec.fallback.clear();
    if (flags.cap) spec.parse.cap = *flags.cap;
    if (flags.timeout) spec.parse.timeout_seconds = *flags.timeout;
  } else {
    sublang::RunConfig config = LoadConfig(flags);
    std::vector<std::string> presets = config.presets();
    spec = config.Spec(presets.back());
  }
  sublang::Pipeline pipeline(spec);
  sublang::SentenceRun run = pipeline.Run(sentence);
  if (run.error) {
    std::cerr << "error: " << *run.error << "\n";
    return kExitNoParse;
  }
  std::vector<std::string> words = sublang::Surfaces(run.tokens);
  if (!run.best || !run.parse.complete) {
    std::cout << (run.parse.timed_out ? "timeout: " : "")
              << "no complete linkage\n";
    return kExitNoParse;
  }
  std::cout << sublang::RenderDiagram(words, run.best->links);
  nlohmann::json out = {
      {"config", spec.name},
      {"stages", run.stages},
      {"nbl", run.parse.linkage_count},
      {"pt", run.parse.parse_time_seconds},
      {"best", sublang::LinkageJson(*run.best, words)},
  };
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int RunEval(const CommonFlags& flags) {
  sublang::RunConfig config = LoadConfig(flags);
  sublang::EvalReport report = sublang::RunEvaluation(config, config.jobs());
  std::filesystem::path out = config.out_dir();
  std::filesystem::create_directories(out);
  sublang::WriteFileAtomically(out / "report.json",
                               sublang::ReportJson(report).dump(2) + "\n");
  sublang::WriteFileAtomically(out / "report.csv", sublang::ReportCsv(report));
  std::cout << sublang::ReportText(report);
  std::cout << "reports written to " << out.string() << "\n";
  return kExitOk;
}

int RunValidate(const CommonFlags& flags) {
  sublang::RunConfig config = LoadConfig(flags);
  bool all_ok = true;
  for (const sublang::ResourceCheck& check :
       sublang::ValidateResources(config)) {
    all_ok = all_ok && check.ok;
    std::cout << (check.ok ? "OK    " : "ERROR ") << check.what;
    if (!check.path.empty()) std::cout << "  " << check.path;
    if (!check.ok) std::cout << "  " << check.message;
    std::cout << "\n";
  }
  return all_ok ? kExitOk : kExitResource;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link-grammar parsing and sublanguage evaluation"};
  app.require_subcommand(1);

  CommonFlags parse_flags;
  std::string dict;
  std::string sentence;
  CLI::App* parse = app.add_subcommand("parse", "Parse one sentence");
  AddCommonFlags(parse, parse_flags);
  parse->add_option("--dict", dict,
                    "Dictionary file, used alone instead of --config");
  parse->add_option("sentence", sentence, "Sentence text")->required();

  CommonFlags eval_flags;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate presets on a corpus");
  AddCommonFlags(eval, eval_flags);

  CommonFlags validate_flags;
  CLI::App* validate =
      app.add_subcommand("validate", "Check every resource loads");
  AddCommonFlags(validate, validate_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitResource;
  }

  try {
    if (*parse) {
      if (dict.empty() && parse_flags.config.empty()) {
        std::cerr << "error: parse needs --dict or --config\n";
        return kExitResource;
      }
      return RunParse(parse_flags, dict, sentence);
    }
    if (*eval) return RunEval(eval_flags);
    return RunValidate(validate_flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
}
