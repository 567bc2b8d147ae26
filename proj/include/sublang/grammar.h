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

// Link-grammar building blocks: connectors, connector expressions and the
// disjuncts they denote.

#ifndef SUBLANG_GRAMMAR_H_
#define SUBLANG_GRAMMAR_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sublang {

enum class Direction { kLeft, kRight };

// A directed half-link such as "S+", "Ds-" or "@A-". The label is upper-case
// A-Z; the subscript is lower-case a-z where '*' marks a wildcard position.
struct Connector {
  std::string label;
  std::string subscript;
  Direction direction = Direction::kRight;
  bool multi = false;

  auto operator<=>(const Connector&) const = default;
  bool operator==(const Connector&) const = default;
};

// Parses "@Ss+" style text. Returns nullopt when the text is not a connector.
std::optional<Connector> ParseConnector(std::string_view text);
std::string ToString(const Connector& c);

// True iff `right` (pointing right) can link to `left` (pointing left): equal
// labels and position-wise compatible subscripts. A missing position or '*'
// matches anything. Directions, multi flags and costs are not consulted.
bool ConnectorMatch(const Connector& right, const Connector& left);

// Label carried by the link formed by two matching connectors, e.g. Ss+ with
// S- gives "Ss", and S*a+ with Sb- gives "Sba".
std::string ResolvedLinkLabel(const Connector& right, const Connector& left);

// Splits a link label such as "Ss" into a connector with the given direction.
Connector ConnectorFromLabel(std::string_view label, Direction direction);

// Connector expression tree. kMacro nodes only exist between parsing and macro
// resolution; a loaded Lexicon never contains them.
struct Expression {
  enum class Kind { kConnector, kAnd, kOr, kOptional, kCost, kMacro };

  Kind kind = Kind::kAnd;
  Connector connector;               // kConnector
  std::vector<Expression> children;  // kAnd, kOr; single child otherwise
  int cost = 0;                      // kCost
  std::string macro;                 // kMacro

  static Expression Conn(Connector c);
  static Expression Conn(std::string_view text);  // aborts on bad text
  static Expression And(std::vector<Expression> children);
  static Expression Or(std::vector<Expression> children);
  static Expression Optional(Expression child);
  static Expression Costed(Expression child, int cost = 1);
  static Expression MacroRef(std::string name);
  // The expression with no connectors (matches nothing, satisfied trivially).
  static Expression Empty() { return And({}); }

  bool operator==(const Expression&) const = default;
};

// Renders in the dictionary syntax; the output parses back to an equal tree.
std::string ToString(const Expression& e);

// One concrete way for a word to connect. Both connector lists are ordered
// nearest-first: left[0] links to the closest word on the left, right[0] to
// the closest word on the right.
struct Disjunct {
  std::vector<Connector> left;
  std::vector<Connector> right;
  int cost = 0;

  bool operator==(const Disjunct&) const = default;
  bool SameConnectors(const Disjunct& o) const {
    return left == o.left && right == o.right;
  }
};

std::string ToString(const Disjunct& d);

// Expands an expression into the set of disjuncts it denotes. AND
// concatenates connector lists in textual order, OR unions, OPTIONAL adds the
// empty alternative and COSTED adds its cost. Disjuncts with identical
// connector lists are merged keeping the cheapest; first-seen order is kept.
std::vector<Disjunct> ExpandDisjuncts(const Expression& e);

// The OR of the given disjuncts as an expression (each one an AND of its
// connectors wrapped in the matching number of cost brackets).
Expression DisjunctsToExpression(const std::vector<Disjunct>& disjuncts);

}  // namespace sublang

#endif  // SUBLANG_GRAMMAR_H_
