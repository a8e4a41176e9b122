// Copyright 2026 The gpt-tomo Authors
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

#include <charconv>
#include <sstream>

#include "gpt_tomo/dsl.hpp"

namespace gpt_tomo::dsl {

namespace {

// Shortest text that reads back to the same double.
std::string number(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

void print_tree(std::ostream& os, const NumTree& t) {
  if (t.leaf) {
    os << number(t.value);
    return;
  }
  os << '[';
  for (std::size_t i = 0; i < t.items.size(); ++i) {
    if (i) os << ", ";
    print_tree(os, t.items[i]);
  }
  os << ']';
}

void print_list(std::ostream& os, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
}

void print_literal(std::ostream& os, const Literal& lit) {
  switch (lit.kind) {
    case LiteralKind::MaxMix:
      os << "maxmix";
      return;
    case LiteralKind::Bell:
      os << "bell";
      return;
    case LiteralKind::BellEffect:
      os << "bell_effect";
      return;
    case LiteralKind::Unit:
      os << "unit";
      return;
    case LiteralKind::Kraus:
      os << "kraus[";
      for (std::size_t i = 0; i < lit.matrices.size(); ++i) {
        if (i) os << ", ";
        print_tree(os, lit.matrices[i]);
      }
      os << ']';
      return;
    case LiteralKind::Stoch:
      os << "stoch";
      if (!lit.matrices.empty()) print_tree(os, lit.matrices.front());
      return;
  }
}

// Sequencing is left associative and looser than "||", which is also left
// associative; parentheses are emitted only where the tree needs them.
void print_expr(std::ostream& os, const Expr& e) {
  auto wrapped = [&os](const Expr& sub, bool parens) {
    if (parens) os << '(';
    print_expr(os, sub);
    if (parens) os << ')';
  };
  switch (e.kind) {
    case ExprKind::Ref:
      os << e.name;
      return;
    case ExprKind::Identity:
      os << "id[" << e.name << ']';
      return;
    case ExprKind::Seq:
      wrapped(*e.lhs, false);
      os << " . ";
      wrapped(*e.rhs, e.rhs->kind == ExprKind::Seq);
      return;
    case ExprKind::Par:
      wrapped(*e.lhs, e.lhs->kind == ExprKind::Seq);
      os << " || ";
      wrapped(*e.rhs, e.rhs->kind == ExprKind::Seq || e.rhs->kind == ExprKind::Par);
      return;
  }
}

}  // namespace

std::string print(const Expr& e) {
  std::ostringstream os;
  print_expr(os, e);
  return os.str();
}

std::string print(const Program& p) {
  std::ostringstream os;
  for (const auto& s : p.systems) {
    os << "system " << s.name << ' ' << s.backend_word << ' ' << s.dim << ";\n";
  }
  for (const auto& a : p.atoms) {
    switch (a.kind) {
      case AtomKind::State:
        os << "state " << a.name << " on ";
        print_list(os, a.output);
        break;
      case AtomKind::Effect:
        os << "effect " << a.name << " on ";
        print_list(os, a.input);
        break;
      case AtomKind::Proc:
        os << "proc " << a.name << " on ";
        print_list(os, a.input);
        os << " -> ";
        print_list(os, a.output);
        break;
    }
    os << " = ";
    print_literal(os, a.literal);
    os << ";\n";
  }
  if (p.run) os << "run " << print(*p.run) << '\n';
  return os.str();
}

}  // namespace gpt_tomo::dsl
