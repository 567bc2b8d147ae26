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

// Python bindings. Structured results cross the boundary as JSON text and
// are decoded by the package's __init__.py.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "sublang/error.h"
#include "sublang/eval.h"
#include "sublang/lexicon.h"
#include "sublang/normalizer.h"
#include "sublang/parser.h"
#include "sublang/pipeline.h"
#include "sublang/run_config.h"

namespace py = pybind11;

namespace sublang {
namespace {

nlohmann::json ParseResultJson(const ParseResult& result,
                               const std::vector<std::string>& words) {
  nlohmann::json linkages = nlohmann::json::array();
  for (const Linkage& l : result.linkages) {
    linkages.push_back(LinkageJson(l, words));
  }
  return {{"count", result.linkage_count},
          {"complete", result.complete},
          {"timed_out", result.timed_out},
          {"pt", result.parse_time_seconds},
          {"linkages", linkages}};
}

class PyLexicon {
 public:
  explicit PyLexicon(Lexicon lexicon) : lexicon_(std::move(lexicon)) {}

  static PyLexicon FromText(const std::string& text) {
    return PyLexicon(ParseDictionary(text));
  }
  static PyLexicon FromFile(const std::filesystem::path& path) {
    return PyLexicon(LoadDictionary(path));
  }

  std::uint64_t Count(const std::vector<std::string>& words) const {
    return CountLinkages(words, lexicon_);
  }

  std::string Parse(const std::vector<std::string>& words, int cap,
                    double timeout) const {
    ParseResult r =
        EnumerateLinkages(words, lexicon_, ParseOptions{cap, timeout});
    return ParseResultJson(r, words).dump();
  }

  std::string Serialize() const { return SerializeDictionary(lexicon_); }

 private:
  Lexicon lexicon_;
};

class PyPipeline {
 public:
  PyPipeline(const std::filesystem::path& config, const std::string& preset)
      : pipeline_(RunConfig::Load(config).Spec(preset)) {}

  std::string Run(const std::string& sentence) const {
    SentenceRun run = pipeline_.Run(sentence);
    std::vector<std::string> words = Surfaces(run.tokens);
    nlohmann::json out = {
        {"stages", run.stages},
        {"tokens", words},
        {"parsed_tokens", Surfaces(run.parsed_tokens())},
        {"count", run.parse.linkage_count},
        {"complete", run.parse.complete},
        {"timed_out", run.parse.timed_out},
        {"pt", run.parse.parse_time_seconds},
        {"best", run.best ? LinkageJson(*run.best, words) : nlohmann::json()},
        {"error", run.error ? nlohmann::json(*run.error) : nlohmann::json()},
    };
    return out.dump();
  }

  std::vector<std::string> Stages() const { return pipeline_.stages(); }

 private:
  Pipeline pipeline_;
};

std::string Evaluate(const std::filesystem::path& config, int jobs) {
  RunConfig rc = RunConfig::Load(config);
  EvalReport report;
  {
    py::gil_scoped_release release;
    report = RunEvaluation(rc, jobs);
  }
  return ReportJson(report).dump();
}

std::vector<std::string> TokenizeWords(const std::string& text) {
  return Surfaces(Tokenize(text));
}

}  // namespace
}  // namespace sublang

PYBIND11_MODULE(_core, m) {
  m.doc() = "Link-grammar parsing with sublanguage adaptation";

  static py::exception<sublang::Error> error(m, "SublangError",
                                             PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const sublang::Error& e) {
      py::object exc =
          py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("code") = std::string(sublang::ErrorCodeName(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<sublang::PyLexicon>(m, "Lexicon")
      .def_static("from_text", &sublang::PyLexicon::FromText, py::arg("text"))
      .def_static("from_file", &sublang::PyLexicon::FromFile, py::arg("path"))
      .def("count", &sublang::PyLexicon::Count, py::arg("words"))
      .def("_parse", &sublang::PyLexicon::Parse, py::arg("words"),
           py::arg("cap") = 1000, py::arg("timeout") = 30.0)
      .def("serialize", &sublang::PyLexicon::Serialize);

  py::class_<sublang::PyPipeline>(m, "_Pipeline")
      .def(py::init<const std::filesystem::path&, const std::string&>(),
           py::arg("config"), py::arg("preset"))
      .def("_run", &sublang::PyPipeline::Run, py::arg("sentence"))
      .def_property_readonly("stages", &sublang::PyPipeline::Stages);

  m.def("_evaluate", &sublang::Evaluate, py::arg("config"),
        py::arg("jobs") = 1);
  m.def("tokenize", &sublang::TokenizeWords, py::arg("text"));
}
