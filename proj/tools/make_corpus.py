#!/usr/bin/env python3
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
"""Generates the bundled evaluation corpus and its gold annotations.

Sentences are built from phrase templates over a small molecular-biology
vocabulary, so the analysis of every sentence is known by construction. The
script writes:

  corpus.tsv            id<TAB>sentence
  gold_links.txt        >id blocks of left<TAB>right<TAB>label over the plain
                        tokenization of each sentence
  gold_categories.tsv   word<TAB>category for every word form used

Output is a pure function of --seed.
"""

import argparse
import os
import random

# --- Vocabulary -------------------------------------------------------------
# word -> category. Noun sub-classes only matter for determiner choice.

COUNT_NOUNS = [
    "cell", "protein", "gene", "factor", "level", "process", "response",
    "region", "strain", "medium", "role", "step", "signal", "phase",
    "temperature", "concentration", "result", "operon", "regulon",
    "promoter", "spore", "kinase", "phosphatase", "protease", "regulator",
    "repressor", "activator", "mutant", "peptide", "genome",
]
MASS_NOUNS = [
    "growth", "heat", "stress", "shock", "expression", "sporulation",
    "transcription",
    "germination", "competence", "phosphorylation", "glucose", "xylose",
    "stability", "toxicity", "synthesis", "glutamate", "magnesium", "lysine",
    "activity", "starvation",
    "IPTG",
]
PLURAL_NOUNS = [
    "cells", "proteins", "genes", "factors", "levels", "conditions",
    "strains", "signals", "results", "spores", "mutants",
]
ADJECTIVES = [
    "active", "high", "low", "strong", "general", "specific", "essential",
    "different", "stable", "normal", "rapid", "important", "inactive",
    "transcriptional", "bacterial", "chromosomal", "environmental",
    "homologous", "exogenous", "genetic", "metabolic", "osmotic", "cellular",
    "intracellular", "regulatory", "inducible",
]
# (singular subject form, plural subject form)
TRANSITIVE = [
    ("controls", "control"), ("regulates", "regulate"),
    ("activates", "activate"), ("requires", "require"),
    ("affects", "affect"), ("contains", "contain"), ("reduces", "reduce"),
    ("blocks", "block"), ("represses", "repress"), ("encodes", "encode"),
    ("phosphorylates", "phosphorylate"), ("increases", "increase"),
]
INTRANSITIVE = [
    ("grows", "grow"), ("begins", "begin"), ("occurs", "occur"),
    ("decreases", "decrease"), ("accumulates", "accumulate"),
    ("increases", "increase"), ("sporulate", "sporulate"),
]
PARTICIPLES = [
    "induced", "required", "controlled", "regulated", "activated",
    "expressed", "observed", "reduced", "increased", "affected", "produced",
    "detected", "blocked", "repressed", "phosphorylated", "transcribed",
    "encoded", "purified",
]
ADVERBS = ["strongly", "rapidly", "also", "highly", "only", "transiently",
           "constitutively"]
PREPOSITIONS = ["of", "in", "by", "at", "with", "during", "under", "for",
                "from", "after", "on"]
GENES = ["sigB", "sigF", "spo0A", "rsbV", "rsbW", "kinA", "abrB", "sinR",
         "gerE", "comK", "degU"]
SPECIES = [["B.", "subtilis"], ["Bacillus", "subtilis"], ["E.", "coli"],
           ["Escherichia", "coli"]]
# Multiword terms: tokens, internal links (term-local, head last).
TERMS = [
    (["sigma", "factor"], [(0, 1, "AN")]),
    (["heat", "shock"], [(0, 1, "AN")]),
    (["heat", "shock", "protein"], [(0, 1, "AN"), (1, 2, "AN")]),
    (["sporulation", "process"], [(0, 1, "AN")]),
    (["cell", "division"], [(0, 1, "AN")]),
    (["cell", "wall"], [(0, 1, "AN")]),
    (["stress", "response"], [(0, 1, "AN")]),
    (["RNA", "polymerase"], [(0, 1, "AN")]),
    (["transcription", "factor"], [(0, 1, "AN")]),
    (["gene", "expression"], [(0, 1, "AN")]),
    (["growth", "phase"], [(0, 1, "AN")]),
    (["promoter", "region"], [(0, 1, "AN")]),
    (["spore", "coat", "protein"], [(0, 2, "AN"), (1, 2, "AN")]),
    (["kinase", "activity"], [(0, 1, "AN")]),
    (["transcriptional", "regulator"], [(0, 1, "A")]),
    (["regulatory", "protein"], [(0, 1, "A")]),
    (["protease", "gene"], [(0, 1, "AN")]),
    (["glucose", "starvation"], [(0, 1, "AN")]),
    (["cell", "wall", "synthesis"], [(0, 1, "AN"), (1, 2, "AN")]),
    (["RNA", "polymerase", "sigma", "factor"],
     [(0, 1, "AN"), (1, 3, "AN"), (2, 3, "AN")]),
]
# Terms whose first token is a gene name.
GENE_TERMS = ["operon", "promoter", "regulon", "mutant"]
MEASURES = [("37", "degrees"), ("30", "min"), ("2", "h"), ("10", "min"),
            ("42", "degrees"), ("50", "mM")]
DOSES = [("0.5", "mM", "IPTG"), ("1", "mM", "glucose"), ("5", "mM", "xylose"),
         ("10", "mM", "magnesium")]

CATEGORY = {}
for w in COUNT_NOUNS + MASS_NOUNS + PLURAL_NOUNS:
  CATEGORY[w] = "n"
for w in ADJECTIVES:
  CATEGORY[w] = "adj"
for pair in TRANSITIVE + INTRANSITIVE:
  for w in pair:
    CATEGORY[w] = "v"
for w in PARTICIPLES:
  CATEGORY[w] = "v"
for w in ADVERBS:
  CATEGORY[w] = "adv"
for w in PREPOSITIONS:
  CATEGORY[w] = "prep"
for w in ["the", "a", "this", "these", "its", "their"]:
  CATEGORY[w] = "det"
for w in ["is", "are", "was", "were"]:
  CATEGORY[w] = "v"
for g in GENES:
  CATEGORY[g] = "n"
for s in SPECIES:
  for w in s:
    CATEGORY[w] = "n"
for term, _ in TERMS:
  for w in term:
    CATEGORY.setdefault(w, "n")
for n, unit in MEASURES:
  CATEGORY[n] = "num"
  CATEGORY[unit] = "n"
for n, unit, head in DOSES:
  CATEGORY[n] = "num"
  CATEGORY[unit] = "n"
CATEGORY["Fig."] = "n"
CATEGORY["Table"] = "n"
CATEGORY["RNA"] = "n"
CATEGORY["coat"] = "n"
CATEGORY["shock"] = "n"
CATEGORY["wall"] = "n"
CATEGORY["division"] = "n"


class Phrase:
  """Tokens with links among them and a head position."""

  def __init__(self, tokens, links=(), head=None):
    self.tokens = list(tokens)
    self.links = list(links)
    self.head = len(self.tokens) - 1 if head is None else head

  def extend(self, other, label=None, from_pos=None):
    """Appends `other`; links from_pos (ours) to other's head with label."""
    offset = len(self.tokens)
    self.tokens += other.tokens
    self.links += [(a + offset, b + offset, l) for a, b, l in other.links]
    if label is not None:
      self.links.append((from_pos, other.head + offset, label))
    return offset


class Generator:

  def __init__(self, seed):
    self.rng = random.Random(seed)

  def pick(self, items):
    return self.rng.choice(items)

  def chance(self, p):
    return self.rng.random() < p

  # Noun phrases. Return (phrase, is_plural).

  def common_np(self, allow_pp=True, depth=0):
    kind = self.rng.random()
    if kind < 0.45:
      noun = self.pick(COUNT_NOUNS)
      det = self.pick(["the", "a", "this", "its"])
      plural = False
    elif kind < 0.75:
      noun = self.pick(MASS_NOUNS)
      det = self.pick(["the", None, None])
      plural = False
    else:
      noun = self.pick(PLURAL_NOUNS)
      det = self.pick(["the", "these", "their", None])
      plural = True
    pre = []
    links = []
    if det:
      pre.append(det)
    adj = self.pick(ADJECTIVES) if self.chance(0.35) else None
    if adj:
      pre.append(adj)
    mod = None
    if self.chance(0.2):
      mod = self.pick([n for n in MASS_NOUNS if n != noun and n != "IPTG"])
      pre.append(mod)
    tokens = pre + [noun]
    head = len(tokens) - 1
    # Left modifiers all attach to the head, nearest first.
    for i, w in enumerate(pre):
      label = "D" if w == det else ("A" if w == adj else "AN")
      links.append((i, head, label))
    p = Phrase(tokens, links, head)
    if allow_pp and depth == 0 and self.chance(0.5):
      self.attach_pp(p, p.head, "M", depth + 1)
    return p, plural

  def term_np(self):
    term, internal = self.pick(TERMS)
    det = self.pick(["the", "the", "this"])
    if term[-1] in MASS_NOUNS and self.chance(0.5):
      det = None
    tokens = []
    links = []
    if det:
      tokens.append(det)
    adj = self.pick(ADJECTIVES) if self.chance(0.25) else None
    if adj:
      tokens.append(adj)
    off = len(tokens)
    tokens += term
    head = len(tokens) - 1
    links += [(a + off, b + off, l) for a, b, l in internal]
    if det:
      links.append((0, head, "D"))
    if adj:
      links.append((1 if det else 0, head, "A"))
    p = Phrase(tokens, links, head)
    if self.chance(0.45):
      self.attach_pp(p, p.head, "M", 1)
    return p, False

  def gene_np(self):
    gene = self.pick(GENES)
    if self.chance(0.35):
      noun = self.pick(GENE_TERMS)
      return Phrase(["the", gene, noun], [(0, 2, "D"), (1, 2, "AN")], 2), False
    return Phrase([gene]), False

  def species_np(self):
    s = self.pick(SPECIES)
    return Phrase(s, [(0, 1, "AN")], 1), False

  def subject_np(self):
    r = self.rng.random()
    if r < 0.35:
      return self.common_np()
    if r < 0.7:
      return self.term_np()
    return self.gene_np()

  def object_np(self):
    r = self.rng.random()
    if r < 0.4:
      return self.common_np(allow_pp=True)[0]
    if r < 0.7:
      return self.term_np()[0]
    return self.gene_np()[0]

  def pp(self, depth):
    """Preposition plus object; head is the preposition."""
    r = self.rng.random()
    if r < 0.2:
      prep = "in"
      obj = self.species_np()[0]
    elif r < 0.35:
      prep = self.pick(["at", "for", "after"])
      n, unit = self.pick(MEASURES)
      obj = Phrase([n, unit], [(0, 1, "AN")], 1)
    elif r < 0.45:
      prep = "with"
      n, unit, head = self.pick(DOSES)
      obj = Phrase([n, unit, head], [(0, 1, "AN"), (1, 2, "AN")], 2)
    elif r < 0.6:
      prep = self.pick(["during", "under", "after"])
      obj = Phrase([self.pick(["sporulation", "stress", "germination",
                               "growth"])])
    elif r < 0.8:
      prep = self.pick(["of", "in", "from", "on"])
      obj = self.common_np(allow_pp=False, depth=depth)[0]
    else:
      prep = "of"
      obj = self.gene_np()[0]
    p = Phrase([prep], [], 0)
    p.extend(obj, "J", 0)
    return p

  def attach_pp(self, phrase, at, label, depth):
    phrase.extend(self.pp(depth), label, at)

  # Clauses.

  def clause(self):
    subj, plural = self.subject_np()
    s = Phrase(subj.tokens, subj.links, subj.head)
    kind = self.rng.random()
    if kind < 0.35:
      verb = self.pick(TRANSITIVE)[1 if plural else 0]
      adv = self.pick(ADVERBS) if self.chance(0.2) else None
      if adv:
        s.extend(Phrase([adv]))
      v = s.extend(Phrase([verb]), "S", s.head)
      if adv:
        s.links.append((v - 1, v, "E"))
      obj = self.object_np()
      s.extend(obj, "O", v)
      if self.chance(0.7):
        self.attach_pp(s, v, "MV", 1)
      if self.chance(0.3):
        self.attach_pp(s, v, "MV", 1)
    elif kind < 0.55:
      be = "are" if plural else "is"
      b = s.extend(Phrase([be]), "S", s.head)
      adv = self.pick(ADVERBS) if self.chance(0.25) else None
      if adv:
        s.extend(Phrase([adv]))
      a = s.extend(Phrase([self.pick(ADJECTIVES)]), "Pa", b)
      if adv:
        s.links.append((a - 1, a, "E"))
      if self.chance(0.8):
        self.attach_pp(s, a, "MV", 1)
      if self.chance(0.3):
        self.attach_pp(s, a, "MV", 1)
    elif kind < 0.85:
      be = self.pick(["were", "are"]) if plural else self.pick(["was", "is"])
      b = s.extend(Phrase([be]), "S", s.head)
      adv = self.pick(ADVERBS) if self.chance(0.3) else None
      if adv:
        s.extend(Phrase([adv]))
      part = s.extend(Phrase([self.pick(PARTICIPLES)]), "Pv", b)
      if adv:
        s.links.append((part - 1, part, "E"))
      if self.chance(0.7):
        agent = Phrase(["by"], [], 0)
        agent.extend(self.object_np(), "J", 0)
        s.extend(agent, "MV", part)
      if self.chance(0.7):
        self.attach_pp(s, part, "MV", 1)
    else:
      verb = self.pick(INTRANSITIVE)[1 if plural else 0]
      v = s.extend(Phrase([verb]), "S", s.head)
      if self.chance(0.8):
        self.attach_pp(s, v, "MV", 1)
      if self.chance(0.3):
        self.attach_pp(s, v, "MV", 1)
    return s

  def sentence(self):
    """Returns (text, tokens, links) with citation material mixed in."""
    c = self.clause()
    words = list(c.tokens)
    links = list(c.links)
    if words[0] not in GENES and words[0][0].islower():
      words[0] = words[0][0].upper() + words[0][1:]
    text = " ".join(words)
    extra = []
    r = self.rng.random()
    if r < 0.25:
      cite = self.pick(["[12]", "[4, 7]", "[3]", "[21-23]", "[8]"])
      text = text + " " + cite
      extra_tokens = cite.strip("[]").replace(",", " ").split()
      extra_tokens = [t for part in extra_tokens for t in part.split()]
      words += extra_tokens
    elif r < 0.35:
      ref = self.pick([("Fig.", "2"), ("Fig.", "3"), ("Table", "1")])
      text = "(" + " ".join(ref) + ") " + text
      shift = len(ref)
      links = [(a + shift, b + shift, l) for a, b, l in links]
      words = list(ref) + words
    elif r < 0.42:
      ref = self.pick([("Fig.", "4"), ("Table", "2")])
      text = text + " (" + " ".join(ref) + ")"
      words += list(ref)
    text += "."
    return text, words, sorted(links)


def planar(links):
  for a, b, _ in links:
    for c, d, _ in links:
      if a < c < b < d:
        return False
  return True


def main():
  parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
  parser.add_argument("--seed", type=int, default=2026)
  parser.add_argument("--count", type=int, default=150)
  parser.add_argument("--out", default=os.path.join(
      os.path.dirname(os.path.abspath(__file__)), "..", "data"))
  args = parser.parse_args()

  gen = Generator(args.seed)
  corpus = []
  gold = []
  seen = set()
  while len(corpus) < args.count:
    text, words, links = gen.sentence()
    if text in seen:
      continue
    seen.add(text)
    assert planar(links), text
    assert len({(a, b) for a, b, _ in links}) == len(links), text
    sid = "s%03d" % (len(corpus) + 1)
    corpus.append((sid, text))
    gold.append((sid, words, links))

  with open(os.path.join(args.out, "corpus.tsv"), "w") as f:
    f.write("# id\tsentence (generated by tools/make_corpus.py --seed %d)\n" %
            args.seed)
    for sid, text in corpus:
      f.write("%s\t%s\n" % (sid, text))
  with open(os.path.join(args.out, "gold_links.txt"), "w") as f:
    f.write("# Gold links over the plain tokenization of corpus.tsv.\n")
    for sid, words, links in gold:
      f.write(">%s\n" % sid)
      f.write("# tokens: %s\n" % " ".join(words))
      for a, b, label in links:
        f.write("%d\t%d\t%s\n" % (a, b, label))
  used = sorted({w for _, words, _ in gold for w in words},
                key=lambda w: w.lower())
  with open(os.path.join(args.out, "gold_categories.tsv"), "w") as f:
    f.write("# word\tcategory\n")
    done = set()
    for w in used:
      key = w.lower()
      if key in done:
        continue
      done.add(key)
      cat = CATEGORY.get(w)
      if cat is None:
        cat = "num" if w[0].isdigit() else "n"
      f.write("%s\t%s\n" % (key, cat))


if __name__ == "__main__":
  main()
