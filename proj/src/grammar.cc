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

#include "sublang/grammar.h"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace sublang {

std::optional<Connector> ParseConnector(std::string_view text) {
  Connector c;
  size_t i = 0;
  if (i < text.size() && text[i] == '@') {
    c.multi = true;
    ++i;
  }
  size_t label_start = i;
  while (i < text.size() && text[i] >= 'A' && text[i] <= 'Z') ++i;
  if (i == label_start) return std::nullopt;
  c.label = std::string(text.substr(label_start, i - label_start));
  size_t sub_start = i;
  while (i < text.size() &&
         ((text[i] >= 'a' && text[i] <= 'z') || text[i] == '*')) {
    ++i;
  }
  c.subscript = std::string(text.substr(sub_start, i - sub_start));
  if (i + 1 != text.size()) return std::nullopt;
  if (text[i] == '+') {
    c.direction = Direction::kRight;
  } else if (text[i] == '-') {
    c.direction = Direction::kLeft;
  } else {
    return std::nullopt;
  }
  return c;
}

std::string ToString(const Connector& c) {
  std::string out;
  if (c.multi) out += '@';
  out += c.label;
  out += c.subscript;
  out += c.direction == Direction::kRight ? '+' : '-';
  return out;
}

bool ConnectorMatch(const Connector& right, const Connector& left) {
  if (right.label != left.label) return false;
  size_t n = std::min(right.subscript.size(), left.subscript.size());
  for (size_t i = 0; i < n; ++i) {
    char a = right.subscript[i];
    char b = left.subscript[i];
    if (a != b && a != '*' && b != '*') return false;
  }
  return true;
}

std::string ResolvedLinkLabel(const Connector& right, const Connector& left) {
  std::string label = right.label;
  const std::string& a = right.subscript;
  const std::string& b = left.subscript;
  for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    char x = i < a.size() ? a[i] : '*';
    char y = i < b.size() ? b[i] : '*';
    label += x == '*' ? y : x;
  }
  return label;
}

Connector ConnectorFromLabel(std::string_view label, Direction direction) {
  Connector c;
  c.direction = direction;
  size_t i = 0;
  while (i < label.size() && label[i] >= 'A' && label[i] <= 'Z') ++i;
  c.label = std::string(label.substr(0, i));
  c.subscript = std::string(label.substr(i));
  return c;
}

Expression Expression::Conn(Connector c) {
  Expression e;
  e.kind = Kind::kConnector;
  e.connector = std::move(c);
  return e;
}

Expression Expression::Conn(std::string_view text) {
  auto c = ParseConnector(text);
  if (!c) std::abort();
  return Conn(*c);
}

Expression Expression::And(std::vector<Expression> children) {
  Expression e;
  e.kind = Kind::kAnd;
  e.children = std::move(children);
  return e;
}

Expression Expression::Or(std::vector<Expression> children) {
  Expression e;
  e.kind = Kind::kOr;
  e.children = std::move(children);
  return e;
}

Expression Expression::Optional(Expression child) {
  Expression e;
  e.kind = Kind::kOptional;
  e.children.push_back(std::move(child));
  return e;
}

Expression Expression::Costed(Expression child, int cost) {
  Expression e;
  e.kind = Kind::kCost;
  e.cost = cost;
  e.children.push_back(std::move(child));
  return e;
}

Expression Expression::MacroRef(std::string name) {
  Expression e;
  e.kind = Kind::kMacro;
  e.macro = std::move(name);
  return e;
}

namespace {

// Precedence levels used to decide where parentheses are needed.
constexpr int kOrLevel = 0;
constexpr int kAndLevel = 1;

void Render(const Expression& e, int context, std::string& out) {
  switch (e.kind) {
    case Expression::Kind::kConnector:
      out += ToString(e.connector);
      return;
    case Expression::Kind::kMacro:
      out += '<' + e.macro + '>';
      return;
    case Expression::Kind::kOptional:
      out += '{';
      Render(e.children[0], kOrLevel, out);
      out += '}';
      return;
    case Expression::Kind::kCost:
      out.append(e.cost, '[');
      Render(e.children[0], kOrLevel, out);
      out.append(e.cost, ']');
      return;
    case Expression::Kind::kAnd: {
      if (e.children.empty()) {
        out += "()";
        return;
      }
      bool parens = e.children.size() == 1 || context > kAndLevel;
      if (parens) out += '(';
      for (size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) out += " & ";
        Render(e.children[i], kAndLevel + 1, out);
      }
      if (parens) out += ')';
      return;
    }
    case Expression::Kind::kOr: {
      bool parens = e.children.size() <= 1 || context > kOrLevel;
      if (parens) out += '(';
      if (e.children.empty()) out += "()";  // unreachable from the parser
      for (size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) out += " or ";
        Render(e.children[i], kOrLevel + 1, out);
      }
      if (parens) out += ')';
      return;
    }
  }
}

void AddDisjunct(std::vector<Disjunct>& out, Disjunct d) {
  for (Disjunct& existing : out) {
    if (existing.SameConnectors(d)) {
      existing.cost = std::min(existing.cost, d.cost);
      return;
    }
  }
  out.push_back(std::move(d));
}

}  // namespace

std::string ToString(const Expression& e) {
  std::string out;
  Render(e, kOrLevel, out);
  return out;
}

std::string ToString(const Disjunct& d) {
  std::string out = "(";
  for (size_t i = 0; i < d.left.size(); ++i) {
    if (i > 0) out += ' ';
    out += ToString(d.left[i]);
  }
  out += ")(";
  for (size_t i = 0; i < d.right.size(); ++i) {
    if (i > 0) out += ' ';
    out += ToString(d.right[i]);
  }
  out += ")";
  if (d.cost > 0) out += " cost=" + std::to_string(d.cost);
  return out;
}

std::vector<Disjunct> ExpandDisjuncts(const Expression& e) {
  std::vector<Disjunct> out;
  switch (e.kind) {
    case Expression::Kind::kConnector: {
      Disjunct d;
      if (e.connector.direction == Direction::kLeft) {
        d.left.push_back(e.connector);
      } else {
        d.right.push_back(e.connector);
      }
      out.push_back(std::move(d));
      break;
    }
    case Expression::Kind::kMacro:
      // Unresolved macros denote nothing.
      break;
    case Expression::Kind::kOptional:
      out.push_back(Disjunct{});
      for (Disjunct& d : ExpandDisjuncts(e.children[0])) {
        AddDisjunct(out, std::move(d));
      }
      break;
    case Expression::Kind::kCost:
      for (Disjunct& d : ExpandDisjuncts(e.children[0])) {
        d.cost += e.cost;
        AddDisjunct(out, std::move(d));
      }
      break;
    case Expression::Kind::kOr:
      for (const Expression& child : e.children) {
        for (Disjunct& d : ExpandDisjuncts(child)) {
          AddDisjunct(out, std::move(d));
        }
      }
      break;
    case Expression::Kind::kAnd: {
      std::vector<Disjunct> acc(1);
      for (const Expression& child : e.children) {
        std::vector<Disjunct> sub = ExpandDisjuncts(child);
        std::vector<Disjunct> next;
        for (const Disjunct& a : acc) {
          for (const Disjunct& b : sub) {
            Disjunct d = a;
            d.left.insert(d.left.end(), b.left.begin(), b.left.end());
            d.right.insert(d.right.end(), b.right.begin(), b.right.end());
            d.cost += b.cost;
            AddDisjunct(next, std::move(d));
          }
        }
        acc = std::move(next);
      }
      out = std::move(acc);
      break;
    }
  }
  return out;
}

Expression DisjunctsToExpression(const std::vector<Disjunct>& disjuncts) {
  std::vector<Expression> alternatives;
  for (const Disjunct& d : disjuncts) {
    std::vector<Expression> conns;
    for (const Connector& c : d.left) conns.push_back(Expression::Conn(c));
    for (const Connector& c : d.right) conns.push_back(Expression::Conn(c));
    Expression alt = conns.size() == 1 ? std::move(conns[0])
                                       : Expression::And(std::move(conns));
    for (int k = 0; k < d.cost; ++k) alt = Expression::Costed(std::move(alt));
    alternatives.push_back(std::move(alt));
  }
  if (alternatives.size() == 1) return std::move(alternatives[0]);
  return Expression::Or(std::move(alternatives));
}

}  // namespace sublang
