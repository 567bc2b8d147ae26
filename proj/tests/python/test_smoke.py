# Copyright 2026 The Sublang Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Smoke tests for the Python bindings."""

import pathlib

import pytest

import sublang

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"
TOY = """
the.det: D+;
cat.n: D- & S+;
ran.v: S-;
"""


def test_toy_parse():
  lex = sublang.Lexicon.from_text(TOY)
  assert lex.count(["the", "cat", "ran"]) == 1
  result = sublang.parse(lex, ["the", "cat", "ran"])
  assert result["complete"]
  assert result["linkages"][0]["links"] == [[0, 1, "D"], [1, 2, "S"]]


def test_no_parse():
  lex = sublang.Lexicon.from_text(TOY)
  assert lex.count(["ran", "the", "cat"]) == 0


def test_error_code():
  with pytest.raises(sublang.SublangError) as info:
    sublang.Lexicon.from_text("x.n: <missing>;")
  assert info.value.code == "DANGLING_MACRO"


def test_tokenize():
  assert sublang.tokenize("sigB (sigma B) is active.") == [
      "sigB", "sigma", "B", "is", "active"]


def test_pipeline_presets():
  conf = DATA / "run.conf"
  assert sublang.Pipeline(conf, "lp").stages == ["guess", "parse"]
  run = sublang.Pipeline(conf, "lp-bio-t").run(
      "The sporulation process begins.")
  assert run["parsed_tokens"] == ["The", "process", "begins"]
  assert run["complete"]
  assert len(run["best"]["tokens"]) == 4


def test_evaluate():
  report = sublang.evaluate(DATA / "run.conf", jobs=2)
  assert report["baseline"] == "lp"
  names = [c["name"] for c in report["configs"]]
  assert names == ["lp", "lp-bio", "lp-bio-t"]
