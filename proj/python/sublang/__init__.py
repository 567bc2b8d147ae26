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
"""Link-grammar parsing with sublanguage adaptation."""

import json

from sublang._core import Lexicon, SublangError, tokenize
from sublang import _core

__all__ = ["Lexicon", "Pipeline", "SublangError", "evaluate", "parse",
           "tokenize"]


def parse(lexicon, words, cap=1000, timeout=30.0):
  """Enumerates linkages of `words`; returns a dict, best linkage first."""
  return json.loads(lexicon._parse(list(words), cap, timeout))


class Pipeline:
  """One preset of a run configuration."""

  def __init__(self, config, preset):
    self._impl = _core._Pipeline(str(config), preset)

  @property
  def stages(self):
    return list(self._impl.stages)

  def run(self, sentence):
    return json.loads(self._impl._run(sentence))


def evaluate(config, jobs=1):
  """Runs every preset of `config`; returns the JSON report as a dict."""
  return json.loads(_core._evaluate(str(config), jobs))
