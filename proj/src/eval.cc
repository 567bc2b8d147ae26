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

#include "sublang/eval.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <thread>

#include "sublang/error.h"
#include "text_util.h"

namespace sublang {

using internal::Trim;

namespace {

std::string Where(std::string_view source, int line_no) {
  return std::string(source) + ":" + std::to_string(line_no);
}

bool ParseInt(std::string_view s, int* out) {
  s = Trim(s);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::vector<CorpusSentence> ParseCorpus(std::string_view text,
                                        std::string_view source) {
  std::vector<CorpusSentence> out;
  std::set<std::string> seen;
  int line_no = 0;
  for (std::string_view line : internal::SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty() || Trim(line)[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::kSyntaxError,
                  Where(source, line_no) + ": expected id<TAB>text");
    }
    CorpusSentence s{std::string(Trim(line.substr(0, tab))),
                     std::string(Trim(line.substr(tab + 1)))};
    if (s.id.empty()) {
      throw Error(ErrorCode::kSyntaxError, Where(source, line_no) + ": no id");
    }
    if (!seen.insert(s.id).second) {
      throw Error(ErrorCode::kDuplicateEntry,
                  Where(source, line_no) + ": sentence id " + s.id);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<CorpusSentence> LoadCorpus(const std::filesystem::path& path) {
  return ParseCorpus(internal::ReadFile(path), path.string());
}

GoldLinks ParseGoldLinks(std::string_view text, std::string_view source) {
  GoldLinks out;
  std::vector<Link>* current = nullptr;
  int line_no = 0;
  for (std::string_view line : internal::SplitLines(text)) {
    ++line_no;
    std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    if (trimmed[0] == '>') {
      std::string id(Trim(trimmed.substr(1)));
      if (id.empty() || out.contains(id)) {
        throw Error(ErrorCode::kSyntaxError,
                    Where(source, line_no) + ": bad or repeated id");
      }
      current = &out[id];
      continue;
    }
    auto fields = internal::Split(trimmed, '\t');
    Link l;
    if (current == nullptr || fields.size() != 3 ||
        !ParseInt(fields[0], &l.left) || !ParseInt(fields[1], &l.right)) {
      throw Error(ErrorCode::kSyntaxError,
                  Where(source, line_no) +
                      ": expected left<TAB>right<TAB>label"
                      " after a >id line");
    }
    if (l.left > l.right) std::swap(l.left, l.right);
    l.label = std::string(Trim(fields[2]));
    current->push_back(std::move(l));
  }
  for (auto& [id, links] : out) std::sort(links.begin(), links.end());
  return out;
}

GoldLinks LoadGoldLinks(const std::filesystem::path& path) {
  return ParseGoldLinks(internal::ReadFile(path), path.string());
}

GoldCategories ParseGoldCategories(std::string_view text,
                                   std::string_view source) {
  GoldCategories out;
  int line_no = 0;
  for (std::string_view line : internal::SplitLines(text)) {
    ++line_no;
    line = internal::StripHashComment(line);
    if (line.empty()) continue;
    auto fields = internal::Split(line, '\t');
    if (fields.size() != 2 || Trim(fields[0]).empty() ||
        Trim(fields[1]).empty()) {
      throw Error(ErrorCode::kSyntaxError,
                  Where(source, line_no) + ": expected word<TAB>category");
    }
    out[internal::ToLower(Trim(fields[0]))] = std::string(Trim(fields[1]));
  }
  return out;
}

GoldCategories LoadGoldCategories(const std::filesystem::path& path) {
  return ParseGoldCategories(internal::ReadFile(path), path.string());
}

CqScores ParseCqScores(std::string_view text, std::string_view source) {
  CqScores out;
  int line_no = 0;
  for (std::string_view line : internal::SplitLines(text)) {
    ++line_no;
    line = internal::StripHashComment(line);
    if (line.empty()) continue;
    auto fields = internal::Split(line, '\t');
    double score = 0;
    std::string_view value = fields.size() == 2 ? Trim(fields[1]) : "";
    auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), score);
    if (fields.size() != 2 || value.empty() || ec != std::errc() ||
        ptr != value.data() + value.size()) {
      throw Error(ErrorCode::kSyntaxError,
                  Where(source, line_no) + ": expected sentence-id<TAB>score");
    }
    if (!(score >= 0.0 && score <= 1.0)) {
      throw Error(ErrorCode::kScoreOutOfRange,
                  Where(source, line_no) + ": " + std::string(value));
    }
    out[std::string(Trim(fields[0]))] = score;
  }
  return out;
}

CqScores LoadCqScores(const std::filesystem::path& path) {
  return ParseCqScores(internal::ReadFile(path), path.string());
}

bool LinkLabelsMatch(std::string_view a, std::string_view b) {
  return ConnectorMatch(ConnectorFromLabel(a, Direction::kRight),
                        ConnectorFromLabel(b, Direction::kLeft));
}

int CountErroneousLinks(const std::vector<Link>& best,
                        const std::vector<Link>& gold, int num_tokens) {
  for (const Link& g : gold) {
    if (g.left < 0 || g.right >= num_tokens || g.left == g.right) {
      throw Error(ErrorCode::kGoldIndexOutOfRange,
                  "gold link " + std::to_string(g.left) + "-" +
                      std::to_string(g.right) + " with " +
                      std::to_string(num_tokens) + " tokens");
    }
  }
  int wrong = 0;
  for (const Link& l : best) {
    bool found = std::any_of(gold.begin(), gold.end(), [&](const Link& g) {
      return g.left == l.left && g.right == l.right &&
             LinkLabelsMatch(g.label, l.label);
    });
    if (!found) ++wrong;
  }
  return wrong;
}

std::vector<Link> MapToBaseTokens(const std::vector<Link>& links,
                                  const std::vector<Token>& tokens,
                                  const std::vector<Token>& base_tokens) {
  std::vector<int> map(tokens.size(), -1);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::size_t last = tokens[i].end - 1;
    for (std::size_t j = 0; j < base_tokens.size(); ++j) {
      if (base_tokens[j].begin <= last) map[i] = static_cast<int>(j);
      if (base_tokens[j].begin <= last && last < base_tokens[j].end) break;
    }
  }
  std::vector<Link> out;
  std::set<std::pair<int, int>> seen;
  for (const Link& l : links) {
    int a = map[l.left];
    int b = map[l.right];
    if (a < 0 || b < 0 || a == b) continue;
    if (a > b) std::swap(a, b);
    if (seen.insert({a, b}).second) out.push_back(Link{a, b, l.label});
  }
  std::sort(out.begin(), out.end());
  return out;
}

SentenceMetrics Measure(const CorpusSentence& sentence, const SentenceRun& run,
                        const std::vector<Token>& base_tokens,
                        const GoldLinks* gold, const CqScores* cq) {
  SentenceMetrics m;
  m.id = sentence.id;
  m.nbw = static_cast<int>(run.parsed_tokens().size());
  m.nbl = run.parse.linkage_count;
  m.pt = run.parse.parse_time_seconds;
  m.timed_out = run.parse.timed_out;
  m.clf = m.nbl > 0 && !m.timed_out;
  m.error = run.error;
  m.tokens = Surfaces(run.parsed_tokens());
  if (run.best) m.best_links = run.best->links;
  if (cq != nullptr) {
    auto it = cq->find(sentence.id);
    if (it != cq->end()) m.cq = it->second;
  }
  if (gold != nullptr && run.best) {
    auto it = gold->find(sentence.id);
    if (it != gold->end()) {
      try {
        m.el = CountErroneousLinks(
            MapToBaseTokens(run.best->links, run.tokens, base_tokens),
            it->second, static_cast<int>(base_tokens.size()));
      } catch (const Error& e) {
        m.error = e.what();
      }
    }
  }
  return m;
}

double Table1Row::percent() const {
  return total == 0 ? 0.0 : 100.0 * incorrect / total;
}

Table1Row Table1Row::FromPercent(int total, double percent) {
  return Table1Row{total,
                   static_cast<int>(std::lround(total * percent / 100.0))};
}

Table1Row Table1Block::out_of_lexicon() const {
  return Table1Row{unknown.total + guessed.total,
                   unknown.incorrect + guessed.incorrect};
}

void CountAssignments(const SentenceRun& run, const GoldCategories& gold,
                      Table1Block& block) {
  const Linkage* best =
      run.parse.linkages.empty() ? nullptr : &run.parse.linkages.front();
  for (std::size_t i = 0; i < run.guesses.size(); ++i) {
    const GuessOutcome& g = run.guesses[i];
    if (g.status == GuessStatus::kKnown) continue;
    Table1Row& row =
        g.status == GuessStatus::kGuessed ? block.guessed : block.unknown;
    ++row.total;
    std::string assigned = best != nullptr ? best->categories[i] : g.category;
    auto it = gold.find(internal::ToLower(g.word));
    if (it != gold.end() && it->second != assigned) ++row.incorrect;
  }
}

Averages Average(const std::vector<SentenceMetrics>& metrics) {
  Averages a;
  a.sentences = static_cast<int>(metrics.size());
  double el_sum = 0;
  double cq_sum = 0;
  int el_n = 0;
  int cq_n = 0;
  int timed = 0;
  for (const SentenceMetrics& m : metrics) {
    a.nbw += m.nbw;
    a.clf += m.clf ? 1 : 0;
    if (m.timed_out) {
      ++timed;
    } else {
      a.nbl += static_cast<double>(m.nbl);
      a.pt += m.pt;
    }
    if (m.el) {
      el_sum += *m.el;
      ++el_n;
    }
    if (m.cq) {
      cq_sum += *m.cq;
      ++cq_n;
    }
  }
  a.timeouts = timed;
  if (a.sentences > 0) {
    a.nbw /= a.sentences;
    a.clf /= a.sentences;
  }
  int timed_ok = a.sentences - timed;
  if (timed_ok > 0) {
    a.nbl /= timed_ok;
    a.pt /= timed_ok;
  }
  if (el_n > 0) a.el = el_sum / el_n;
  if (cq_n > 0) a.cq = cq_sum / cq_n;
  return a;
}

std::string_view MetricName(Metric metric) {
  switch (metric) {
    case Metric::kNbW:
      return "NbW";
    case Metric::kNbL:
      return "NbL";
    case Metric::kPT:
      return "PT";
    case Metric::kCLF:
      return "CLF";
    case Metric::kEL:
      return "EL";
    case Metric::kCQ:
      return "CQ";
  }
  return "?";
}

std::optional<double> MetricValue(const Averages& a, Metric metric) {
  switch (metric) {
    case Metric::kNbW:
      return a.nbw;
    case Metric::kNbL:
      return a.nbl;
    case Metric::kPT:
      return a.pt;
    case Metric::kCLF:
      return a.clf;
    case Metric::kEL:
      return a.el;
    case Metric::kCQ:
      return a.cq;
  }
  return std::nullopt;
}

std::optional<double> RatioPercent(const Averages& config,
                                   const Averages& baseline, Metric metric) {
  auto num = MetricValue(config, metric);
  auto den = MetricValue(baseline, metric);
  if (!num || !den || *den == 0.0) return std::nullopt;
  return 100.0 * *num / *den;
}

double RoundHalfUp(double value, int digits) {
  double scale = std::pow(10.0, digits);
  double scaled = value * scale;
  // Absorb binary representation error so decimal ties round up.
  double nudge = 1e-9 * std::max(1.0, std::fabs(scaled));
  return std::floor(scaled + 0.5 + nudge) / scale;
}

std::string FormatPercent(double percent) {
  int digits = std::fabs(percent) < 1.0 ? 2 : 1;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, RoundHalfUp(percent, digits));
  return buf;
}

EvalReport Aggregate(std::vector<ConfigResult> configs) {
  auto it =
      std::find_if(configs.begin(), configs.end(),
                   [](const ConfigResult& c) { return c.name == kPresetLp; });
  if (it == configs.end()) {
    throw Error(ErrorCode::kMissingBaseline,
                "ratios need the lp configuration");
  }
  std::rotate(configs.begin(), it, it + 1);
  EvalReport report;
  for (ConfigResult& c : configs) c.averages = Average(c.sentences);
  report.sentences = static_cast<int>(configs.front().sentences.size());
  report.configs = std::move(configs);
  return report;
}

namespace {

nlohmann::json Optional(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json LinksJson(const std::vector<Link>& links) {
  nlohmann::json out = nlohmann::json::array();
  for (const Link& l : links) out.push_back({l.left, l.right, l.label});
  return out;
}

nlohmann::json RowJson(const Table1Row& row) {
  return {{"total", row.total},
          {"incorrect", row.incorrect},
          {"percent", row.percent()}};
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, RoundHalfUp(v, digits));
  return buf;
}

std::string AverageCell(const Averages& a, Metric m) {
  auto v = MetricValue(a, m);
  return v ? Fixed(*v, m == Metric::kPT ? 6 : 2) : "n/a";
}

std::string RatioCell(const Averages& a, const Averages& base, Metric m) {
  auto r = RatioPercent(a, base, m);
  return r ? FormatPercent(*r) : "n/a";
}

}  // namespace

nlohmann::json LinkageJson(const Linkage& linkage,
                           const std::vector<std::string>& words) {
  nlohmann::json tokens = nlohmann::json::array();
  for (std::size_t i = 0; i < words.size(); ++i) {
    nlohmann::json t = {{"word", words[i]}};
    if (i < linkage.categories.size()) t["category"] = linkage.categories[i];
    if (i < linkage.disjuncts.size()) {
      t["disjunct"] = ToString(linkage.disjuncts[i]);
    }
    if (i < linkage.expanded.size()) t["expanded"] = bool(linkage.expanded[i]);
    tokens.push_back(std::move(t));
  }
  return {{"tokens", tokens},
          {"links", LinksJson(linkage.links)},
          {"cost", linkage.cost},
          {"total_link_length", linkage.TotalLinkLength()}};
}

nlohmann::json ReportJson(const EvalReport& report) {
  nlohmann::json configs = nlohmann::json::array();
  const Averages& base = report.baseline().averages;
  for (const ConfigResult& c : report.configs) {
    const Averages& a = c.averages;
    nlohmann::json ratios;
    nlohmann::json shown;
    for (Metric m : kAllMetrics) {
      std::string name(MetricName(m));
      ratios[name] = Optional(RatioPercent(a, base, m));
      shown[name] = RatioCell(a, base, m);
    }
    nlohmann::json sentences = nlohmann::json::array();
    for (const SentenceMetrics& m : c.sentences) {
      sentences.push_back({
          {"id", m.id},
          {"nbw", m.nbw},
          {"nbl", m.nbl},
          {"pt", m.pt},
          {"clf", m.clf ? 1 : 0},
          {"timed_out", m.timed_out},
          {"el", m.el ? nlohmann::json(*m.el) : nlohmann::json(nullptr)},
          {"cq", Optional(m.cq)},
          {"error",
           m.error ? nlohmann::json(*m.error) : nlohmann::json(nullptr)},
          {"tokens", m.tokens},
          {"links", LinksJson(m.best_links)},
      });
    }
    configs.push_back({
        {"name", c.name},
        {"stages", c.stages},
        {"averages",
         {{"NbW", a.nbw},
          {"NbL", a.nbl},
          {"PT", a.pt},
          {"CLF", a.clf},
          {"EL", Optional(a.el)},
          {"CQ", Optional(a.cq)}}},
        {"ratio_to_lp", ratios},
        {"ratio_to_lp_display", shown},
        {"timeouts_excluded", a.timeouts},
        {"table1",
         {{"UW", RowJson(c.table1.unknown)},
          {"GW", RowJson(c.table1.guessed)},
          {"OoL", RowJson(c.table1.out_of_lexicon())}}},
        {"sentences", sentences},
    });
  }
  return {{"sentences", report.sentences},
          {"baseline", report.baseline().name},
          {"configs", configs}};
}

std::string ReportCsv(const EvalReport& report) {
  const Averages& base = report.baseline().averages;
  std::ostringstream out;
  out << "Table 1";
  for (const ConfigResult& c : report.configs) out << ',' << c.name << ',';
  out << "\n";
  for (std::size_t i = 0; i < report.configs.size(); ++i) out << ",a,b";
  out << "\n";
  auto row = [&](std::string_view name, auto get) {
    out << name;
    for (const ConfigResult& c : report.configs) {
      Table1Row r = get(c.table1);
      out << ',' << r.total << ',' << FormatPercent(r.percent());
    }
    out << "\n";
  };
  row("UW", [](const Table1Block& b) { return b.unknown; });
  row("GW", [](const Table1Block& b) { return b.guessed; });
  row("OoL", [](const Table1Block& b) { return b.out_of_lexicon(); });
  out << "\n";
  out << "Table 2";
  for (const ConfigResult& c : report.configs) {
    out << ',' << c.name;
    if (&c != &report.baseline()) out << ',';
  }
  out << "\ncrit.";
  for (const ConfigResult& c : report.configs) {
    out << ",avg";
    if (&c != &report.baseline()) out << ",%/lp";
  }
  out << "\n";
  for (Metric m : kAllMetrics) {
    out << MetricName(m);
    for (const ConfigResult& c : report.configs) {
      out << ',' << AverageCell(c.averages, m);
      if (&c != &report.baseline())
        out << ',' << RatioCell(c.averages, base, m);
    }
    out << "\n";
  }
  return out.str();
}

std::string ReportText(const EvalReport& report) {
  const Averages& base = report.baseline().averages;
  std::ostringstream out;
  char buf[256];
  out << "Out-of-lexicon category assignments (total, % incorrect)\n";
  std::snprintf(buf, sizeof(buf), "%-6s", "");
  out << buf;
  for (const ConfigResult& c : report.configs) {
    std::snprintf(buf, sizeof(buf), "%18s", c.name.c_str());
    out << buf;
  }
  out << "\n";
  auto row = [&](const char* name, auto get) {
    std::snprintf(buf, sizeof(buf), "%-6s", name);
    out << buf;
    for (const ConfigResult& c : report.configs) {
      Table1Row r = get(c.table1);
      std::snprintf(buf, sizeof(buf), "%10d %6s%%", r.total,
                    FormatPercent(r.percent()).c_str());
      out << buf;
    }
    out << "\n";
  };
  row("UW", [](const Table1Block& b) { return b.unknown; });
  row("GW", [](const Table1Block& b) { return b.guessed; });
  row("OoL", [](const Table1Block& b) { return b.out_of_lexicon(); });
  out << "\nParsing time and quality (" << report.sentences << " sentences)\n";
  std::snprintf(buf, sizeof(buf), "%-6s", "crit.");
  out << buf;
  for (const ConfigResult& c : report.configs) {
    std::snprintf(buf, sizeof(buf), "%14s", (c.name + " avg").c_str());
    out << buf;
    if (&c != &report.baseline()) {
      std::snprintf(buf, sizeof(buf), "%9s", "%/lp");
      out << buf;
    }
  }
  out << "\n";
  for (Metric m : kAllMetrics) {
    std::snprintf(buf, sizeof(buf), "%-6s", std::string(MetricName(m)).c_str());
    out << buf;
    for (const ConfigResult& c : report.configs) {
      std::snprintf(buf, sizeof(buf), "%14s",
                    AverageCell(c.averages, m).c_str());
      out << buf;
      if (&c != &report.baseline()) {
        std::snprintf(buf, sizeof(buf), "%9s",
                      RatioCell(c.averages, base, m).c_str());
        out << buf;
      }
    }
    out << "\n";
  }
  for (const ConfigResult& c : report.configs) {
    if (c.averages.timeouts > 0) {
      out << c.name << ": " << c.averages.timeouts
          << " timed-out sentences excluded from NbL and PT\n";
    }
  }
  return out.str();
}

void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view content) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw Error(ErrorCode::kIoError, "cannot write " + tmp.string());
    }
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f.flush()) {
      throw Error(ErrorCode::kIoError, "cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError,
                "cannot rename " + tmp.string() + ": " + ec.message());
  }
}

EvalReport RunEvaluation(const RunConfig& config, int jobs) {
  std::vector<std::string> presets = config.presets();
  if (std::find(presets.begin(), presets.end(), kPresetLp) == presets.end()) {
    throw Error(ErrorCode::kMissingBaseline,
                "preset list has no lp configuration");
  }
  std::vector<std::unique_ptr<Pipeline>> pipelines;
  std::vector<std::optional<CqScores>> cq;
  for (const std::string& p : presets) {
    pipelines.push_back(std::make_unique<Pipeline>(config.Spec(p)));
    auto path = config.Path(p, "cq");
    cq.push_back(path ? std::optional(LoadCqScores(*path)) : std::nullopt);
  }
  std::vector<CorpusSentence> corpus = LoadCorpus(config.corpus());
  std::optional<GoldLinks> gold;
  if (auto p = config.Path("gold_links")) gold = LoadGoldLinks(*p);
  GoldCategories categories;
  if (auto p = config.Path("gold_categories")) {
    categories = LoadGoldCategories(*p);
  }

  std::size_t n = corpus.size();
  std::size_t tasks = presets.size() * n;
  std::vector<SentenceMetrics> metrics(tasks);
  std::vector<Table1Block> blocks(tasks);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t = next++; t < tasks; t = next++) {
      std::size_t p = t / n;
      const CorpusSentence& s = corpus[t % n];
      const Pipeline& pipeline = *pipelines[p];
      try {
        SentenceRun run = pipeline.Run(s.text);
        metrics[t] =
            Measure(s, run, pipeline.BaseTokens(s.text),
                    gold ? &*gold : nullptr, cq[p] ? &*cq[p] : nullptr);
        CountAssignments(run, categories, blocks[t]);
      } catch (const std::exception& e) {
        metrics[t].id = s.id;
        metrics[t].error = e.what();
      }
    }
  };
  int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tasks)));
  std::vector<std::thread> threads;
  for (int i = 1; i < workers; ++i) threads.emplace_back(work);
  work();
  for (std::thread& t : threads) t.join();

  std::vector<ConfigResult> results;
  for (std::size_t p = 0; p < presets.size(); ++p) {
    ConfigResult r;
    r.name = presets[p];
    r.stages = pipelines[p]->stages();
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t t = p * n + i;
      r.sentences.push_back(std::move(metrics[t]));
      r.table1.unknown.total += blocks[t].unknown.total;
      r.table1.unknown.incorrect += blocks[t].unknown.incorrect;
      r.table1.guessed.total += blocks[t].guessed.total;
      r.table1.guessed.incorrect += blocks[t].guessed.incorrect;
    }
    results.push_back(std::move(r));
  }
  return Aggregate(std::move(results));
}

std::vector<ResourceCheck> ValidateResources(const RunConfig& config) {
  std::vector<ResourceCheck> out;
  auto check = [&](std::string what, std::string path, auto&& fn) {
    ResourceCheck c{std::move(what), std::move(path), true, "OK"};
    try {
      fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.message = e.what();
    }
    out.push_back(std::move(c));
  };
  std::vector<std::pair<std::string, std::filesystem::path>> files;
  try {
    files = config.Files();
  } catch (const std::exception& e) {
    out.push_back({"config", "", false, e.what()});
    return out;
  }
  for (const auto& [key, path] : files) {
    std::string name = key.substr(key.find('.') + 1);
    std::string scope = key.find('.') == std::string::npos
                            ? "lp-bio"
                            : key.substr(0, key.find('.'));
    check(key, path.string(), [&, path = path] {
      if (name == "corpus") {
        LoadCorpus(path);
      } else if (name == "gold_links") {
        LoadGoldLinks(path);
      } else if (name == "gold_categories") {
        LoadGoldCategories(path);
      } else if (name == "dictionary") {
        LoadDictionary(path);
      } else if (name == "overlay") {
        auto base = config.Path(scope, "dictionary");
        if (!base) throw Error(ErrorCode::kConfigError, "no dictionary");
        ApplyOverlay(LoadDictionary(*base), path);
      } else if (name == "mg_rules" || name == "bio_mg_rules") {
        LoadGuessRules(path);
      } else if (name == "abbreviations" || name == "units") {
        LoadWordList(path);
      } else if (name == "norm_rules") {
        NormalizationRules::Load(path);
      } else if (name == "entities") {
        EntityDictionary::Load(path);
      } else if (name == "terms") {
        TermIndex::Load(path);
      } else if (name == "cq") {
        LoadCqScores(path);
      }
    });
  }
  std::vector<std::string> presets;
  check("presets", "", [&] { presets = config.presets(); });
  for (const std::string& p : presets) {
    check("preset " + p, "", [&] { Pipeline pipeline(config.Spec(p)); });
  }
  return out;
}

}  // namespace sublang
