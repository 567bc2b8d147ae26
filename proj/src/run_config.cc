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

#include "sublang/run_config.h"

#include <algorithm>
#include <array>
#include <charconv>

#include "sublang/error.h"
#include "text_util.h"

namespace sublang {

using internal::Trim;

namespace {

constexpr std::array<std::string_view, 20> kKeys = {
    "corpus",
    "presets",
    "dictionary",
    "overlay",
    "mg_rules",
    "bio_mg_rules",
    "fallback_macros",
    "abbreviations",
    "norm_rules",
    "entities",
    "units",
    "terms",
    "gold_links",
    "gold_categories",
    "cq",
    "cap",
    "timeout",
    "jobs",
    "out",
    "normalize",
};

constexpr std::array<std::string_view, 1> kCustomOnlyKeys = {"simplify"};

constexpr std::array<std::string_view, 4> kPresets = {
    kPresetLp, kPresetLpBio, kPresetLpBioT, kPresetCustom};

constexpr std::array<std::string_view, 10> kFileKeys = {
    "dictionary", "overlay",  "mg_rules", "bio_mg_rules", "abbreviations",
    "norm_rules", "entities", "units",    "terms",        "cq"};

bool KnownKey(std::string_view key) {
  std::size_t dot = key.find('.');
  std::string_view name = key;
  if (dot != std::string_view::npos) {
    std::string_view scope = key.substr(0, dot);
    if (std::find(kPresets.begin(), kPresets.end(), scope) == kPresets.end()) {
      return false;
    }
    name = key.substr(dot + 1);
    if (std::find(kCustomOnlyKeys.begin(), kCustomOnlyKeys.end(), name) !=
        kCustomOnlyKeys.end()) {
      return true;
    }
  }
  return std::find(kKeys.begin(), kKeys.end(), name) != kKeys.end();
}

std::vector<std::string> SplitList(std::string_view value) {
  std::vector<std::string> out;
  for (std::string_view item : internal::Split(value, ',')) {
    item = Trim(item);
    if (!item.empty()) out.emplace_back(item);
  }
  return out;
}

bool ParseBool(const std::optional<std::string>& value) {
  return value && (*value == "true" || *value == "1" || *value == "yes");
}

}  // namespace

RunConfig RunConfig::Parse(std::string_view text,
                           const std::filesystem::path& base_dir,
                           std::string_view source) {
  RunConfig config;
  config.base_dir_ = base_dir.empty() ? "." : base_dir;
  int line_no = 0;
  for (std::string_view line : internal::SplitLines(text)) {
    ++line_no;
    line = internal::StripHashComment(line);
    if (line.empty()) continue;
    std::string where = std::string(source) + ":" + std::to_string(line_no);
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kConfigError, where + ": expected key = value");
    }
    std::string key(Trim(line.substr(0, eq)));
    if (!KnownKey(key)) {
      throw Error(ErrorCode::kConfigError,
                  where + ": unknown key '" + key + "'");
    }
    config.values_[key] = std::string(Trim(line.substr(eq + 1)));
  }
  return config;
}

RunConfig RunConfig::Load(const std::filesystem::path& path) {
  return Parse(internal::ReadFile(path), path.parent_path(), path.string());
}

void RunConfig::Set(std::string_view key, std::string value) {
  if (!KnownKey(key)) {
    throw Error(ErrorCode::kConfigError,
                "unknown key '" + std::string(key) + "'");
  }
  values_[std::string(key)] = std::move(value);
}

std::optional<std::string> RunConfig::Get(std::string_view key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> RunConfig::Get(std::string_view preset,
                                          std::string_view key) const {
  if (auto scoped = Get(std::string(preset) + "." + std::string(key))) {
    return scoped;
  }
  return Get(key);
}

std::filesystem::path RunConfig::Resolve(const std::string& value) const {
  std::filesystem::path p(value);
  return p.is_absolute() ? p : base_dir_ / p;
}

std::optional<std::filesystem::path> RunConfig::Path(
    std::string_view preset, std::string_view key) const {
  auto value = Get(preset, key);
  if (!value || value->empty()) return std::nullopt;
  return Resolve(*value);
}

std::optional<std::filesystem::path> RunConfig::Path(
    std::string_view key) const {
  auto value = Get(key);
  if (!value || value->empty()) return std::nullopt;
  return Resolve(*value);
}

std::vector<std::string> RunConfig::presets() const {
  auto value = Get("presets");
  if (!value) {
    return {std::string(kPresetLp), std::string(kPresetLpBio),
            std::string(kPresetLpBioT)};
  }
  std::vector<std::string> out = SplitList(*value);
  for (const std::string& p : out) {
    if (std::find(kPresets.begin(), kPresets.end(), p) == kPresets.end()) {
      throw Error(ErrorCode::kConfigError, "unknown preset '" + p + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::kConfigError, "no presets");
  return out;
}

std::filesystem::path RunConfig::corpus() const {
  auto value = Get("corpus");
  if (!value) throw Error(ErrorCode::kConfigError, "no corpus given");
  return Resolve(*value);
}

std::filesystem::path RunConfig::out_dir() const {
  return Resolve(Get("out").value_or("out"));
}

int RunConfig::IntValue(std::string_view key, int fallback) const {
  auto value = Get(key);
  if (!value) return fallback;
  int out = 0;
  auto [ptr, ec] =
      std::from_chars(value->data(), value->data() + value->size(), out);
  if (ec != std::errc() || ptr != value->data() + value->size() || out < 1) {
    throw Error(
        ErrorCode::kConfigError,
        std::string(key) + " must be a positive integer, got '" + *value + "'");
  }
  return out;
}

int RunConfig::jobs() const { return IntValue("jobs", 1); }

ConfigSpec RunConfig::Spec(std::string_view preset) const {
  ConfigSpec spec;
  spec.name = std::string(preset);
  bool bio = preset == kPresetLpBio || preset == kPresetLpBioT;
  if (preset == kPresetCustom) {
    spec.normalize = ParseBool(Get(preset, "normalize"));
    spec.simplify = ParseBool(Get(preset, "simplify"));
  } else if (preset == kPresetLp || bio) {
    spec.normalize = bio;
    spec.simplify = preset == kPresetLpBioT;
  } else {
    throw Error(ErrorCode::kConfigError,
                "unknown preset '" + std::string(preset) + "'");
  }
  auto dictionary = Path(preset, "dictionary");
  if (!dictionary) {
    throw Error(ErrorCode::kConfigError,
                "no dictionary for preset " + spec.name);
  }
  spec.dictionary = *dictionary;
  auto add_list = [&](std::string_view key,
                      std::vector<std::filesystem::path>& out) {
    if (auto value = Get(preset, key)) {
      for (const std::string& item : SplitList(*value)) {
        out.push_back(Resolve(item));
      }
    }
  };
  // Domain rules come first so they win ties on suffix length.
  if (bio || preset == kPresetCustom) {
    add_list("overlay", spec.overlays);
    add_list("bio_mg_rules", spec.mg_rules);
  }
  add_list("mg_rules", spec.mg_rules);
  if (auto f = Get(preset, "fallback_macros")) spec.fallback = *f;
  spec.abbreviations = Path(preset, "abbreviations");
  if (spec.normalize) {
    spec.norm_rules = Path(preset, "norm_rules");
    spec.entities = Path(preset, "entities");
    spec.units = Path(preset, "units");
  }
  if (spec.simplify) spec.terms = Path(preset, "terms");
  spec.parse.cap = IntValue("cap", spec.parse.cap);
  if (auto t = Get("timeout")) {
    double seconds = 0;
    auto [ptr, ec] = std::from_chars(t->data(), t->data() + t->size(), seconds);
    if (ec != std::errc() || ptr != t->data() + t->size() || seconds <= 0) {
      throw Error(ErrorCode::kConfigError,
                  "timeout must be positive seconds, got '" + *t + "'");
    }
    spec.parse.timeout_seconds = seconds;
  }
  return spec;
}

std::vector<std::pair<std::string, std::filesystem::path>> RunConfig::Files()
    const {
  std::vector<std::pair<std::string, std::filesystem::path>> out;
  auto add = [&](const std::string& key, const std::string& value) {
    for (const std::string& item : SplitList(value)) {
      auto entry = std::make_pair(key, Resolve(item));
      if (std::find(out.begin(), out.end(), entry) == out.end()) {
        out.push_back(std::move(entry));
      }
    }
  };
  for (const char* key : {"corpus", "gold_links", "gold_categories"}) {
    if (auto v = Get(key)) add(key, *v);
  }
  for (const auto& [key, value] : values_) {
    std::size_t dot = key.find('.');
    std::string_view name = dot == std::string::npos
                                ? std::string_view(key)
                                : std::string_view(key).substr(dot + 1);
    if (std::find(kFileKeys.begin(), kFileKeys.end(), name) !=
        kFileKeys.end()) {
      add(key, value);
    }
  }
  return out;
}

}  // namespace sublang
