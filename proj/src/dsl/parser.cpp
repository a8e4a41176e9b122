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
#include <fstream>
#include <set>
#include <sstream>

#include "dsl/lexer.hpp"
#include "gpt_tomo/dsl.hpp"

namespace gpt_tomo::dsl {

std::string Diagnostic::str() const {
  return file + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + message;
}

DslError::DslError(Diagnostic d) : Error(d.str()), diag_(std::move(d)) {}

namespace {

const std::set<std::string, std::less<>> kReserved = {
    "system", "state", "effect", "proc", "on", "run", "id",
    "maxmix", "bell", "bell_effect", "unit", "kraus", "stoch"};

std::optional<Backend> backend_alias(std::string_view w) {
  if (w == "quantum" || w == "qubit" || w == "complex") return Backend::Quantum;
  if (w == "real" || w == "rebit") return Backend::Real;
  if (w == "classical" || w == "cbit") return Backend::Classical;
  return std::nullopt;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::string file)
      : toks_(std::move(toks)), file_(std::move(file)) {}

  Program program() {
    Program p;
    p.file = file_;
    while (true) {
      const Token& t = peek();
      if (is_word(t, "system")) {
        p.systems.push_back(system_decl());
      } else if (is_word(t, "state") || is_word(t, "effect") || is_word(t, "proc")) {
        p.atoms.push_back(atom_decl());
      } else if (is_word(t, "run")) {
        advance();
        p.run = expr();
        if (peek().kind == Tok::Semi) advance();
        expect(Tok::End, "end of input after the run expression");
        return p;
      } else {
        fail(t, "expected a declaration or 'run'");
      }
    }
  }

 private:
  static bool is_word(const Token& t, std::string_view w) {
    return t.kind == Tok::Ident && t.text == w;
  }

  const Token& peek() const { return toks_[i_]; }
  const Token& advance() {
    const Token& t = toks_[i_];
    if (t.kind != Tok::End) ++i_;
    return t;
  }

  [[noreturn]] void fail(const Token& t, const std::string& expected) const {
    throw DslError({file_, t.pos, "syntax error: unexpected " + describe(t) + ", " + expected});
  }
  [[noreturn]] void error(Position pos, const std::string& msg) const {
    throw DslError({file_, pos, msg});
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(peek(), "expected " + what);
    return advance();
  }
  void expect_word(std::string_view w) {
    if (!is_word(peek(), w)) fail(peek(), "expected '" + std::string(w) + "'");
    advance();
  }

  const Token& new_name() {
    const Token& t = expect(Tok::Ident, "a name");
    if (kReserved.count(t.text)) error(t.pos, "'" + t.text + "' is a reserved word");
    if (!names_.insert(t.text).second) error(t.pos, "duplicate declaration of '" + t.text + "'");
    return t;
  }

  SystemDecl system_decl() {
    SystemDecl d;
    d.pos = advance().pos;
    d.name = new_name().text;
    const Token& b = expect(Tok::Ident, "a backend name");
    const auto backend = backend_alias(b.text);
    if (!backend) error(b.pos, "unknown backend '" + b.text + "'");
    d.backend_word = b.text;
    d.backend = *backend;
    const Token& n = expect(Tok::Number, "a dimension");
    int dim = 0;
    const auto [end, ec] = std::from_chars(n.text.data(), n.text.data() + n.text.size(), dim);
    if (ec != std::errc() || end != n.text.data() + n.text.size() || dim < 1) {
      error(n.pos, "dimension must be a positive integer, got '" + n.text + "'");
    }
    d.dim = dim;
    expect(Tok::Semi, "';'");
    systems_.insert(d.name);
    return d;
  }

  std::vector<std::string> syslist() {
    std::vector<std::string> out;
    while (true) {
      const Token& t = expect(Tok::Ident, "a system name");
      if (!systems_.count(t.text)) error(t.pos, "unknown system '" + t.text + "'");
      out.push_back(t.text);
      if (peek().kind != Tok::Comma) return out;
      advance();
    }
  }

  AtomDecl atom_decl() {
    AtomDecl d;
    const Token& kw = advance();
    d.pos = kw.pos;
    d.kind = kw.text == "state" ? AtomKind::State
             : kw.text == "effect" ? AtomKind::Effect
                                   : AtomKind::Proc;
    d.name = new_name().text;
    expect_word("on");
    if (d.kind == AtomKind::State) {
      d.output = syslist();
    } else if (d.kind == AtomKind::Effect) {
      d.input = syslist();
    } else {
      d.input = syslist();
      expect(Tok::Arrow, "'->'");
      d.output = syslist();
    }
    expect(Tok::Equals, "'='");
    d.literal = literal();
    expect(Tok::Semi, "';'");
    atoms_.insert(d.name);
    return d;
  }

  Literal literal() {
    const Token& t = expect(Tok::Ident, "a literal");
    Literal lit;
    lit.pos = t.pos;
    if (t.text == "maxmix") {
      lit.kind = LiteralKind::MaxMix;
    } else if (t.text == "bell") {
      lit.kind = LiteralKind::Bell;
    } else if (t.text == "bell_effect") {
      lit.kind = LiteralKind::BellEffect;
    } else if (t.text == "unit") {
      lit.kind = LiteralKind::Unit;
    } else if (t.text == "kraus") {
      lit.kind = LiteralKind::Kraus;
      expect(Tok::LBracket, "'[' after 'kraus'");
      while (true) {
        lit.matrices.push_back(array());
        if (peek().kind != Tok::Comma) break;
        advance();
      }
      expect(Tok::RBracket, "']' or ','");
    } else if (t.text == "stoch") {
      lit.kind = LiteralKind::Stoch;
      lit.matrices.push_back(array());
    } else {
      error(t.pos, "unknown literal '" + t.text + "'");
    }
    return lit;
  }

  // Bounds recursion so that hostile input cannot exhaust the stack.
  struct DepthGuard {
    Parser& p;
    DepthGuard(Parser& parser, Position pos) : p(parser) {
      if (++p.depth_ > kMaxDepth) p.error(pos, "nesting too deep");
    }
    ~DepthGuard() { --p.depth_; }
  };

  NumTree array() {
    DepthGuard guard(*this, peek().pos);
    NumTree node;
    node.leaf = false;
    node.pos = expect(Tok::LBracket, "'['").pos;
    while (true) {
      if (peek().kind == Tok::LBracket) {
        node.items.push_back(array());
      } else {
        const Token& n = expect(Tok::Number, "a number or '['");
        NumTree leaf;
        leaf.pos = n.pos;
        // from_chars does not accept a leading '+'.
        const char* first = n.text.data() + (n.text[0] == '+' ? 1 : 0);
        const char* last = n.text.data() + n.text.size();
        const auto [end, ec] = std::from_chars(first, last, leaf.value);
        if (ec != std::errc() || end != last) error(n.pos, "invalid number '" + n.text + "'");
        node.items.push_back(leaf);
      }
      if (peek().kind != Tok::Comma) break;
      advance();
    }
    expect(Tok::RBracket, "']' or ','");
    return node;
  }

  ExprPtr expr() {
    ExprPtr lhs = par();
    while (peek().kind == Tok::Dot) {
      const Position pos = advance().pos;
      ExprPtr rhs = par();
      lhs = std::make_shared<const Expr>(Expr{ExprKind::Seq, "", lhs, rhs, pos});
    }
    return lhs;
  }

  ExprPtr par() {
    ExprPtr lhs = primary();
    while (peek().kind == Tok::Bar2) {
      const Position pos = advance().pos;
      ExprPtr rhs = primary();
      lhs = std::make_shared<const Expr>(Expr{ExprKind::Par, "", lhs, rhs, pos});
    }
    return lhs;
  }

  ExprPtr primary() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      DepthGuard guard(*this, t.pos);
      advance();
      ExprPtr inner = expr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (is_word(t, "id")) {
      advance();
      expect(Tok::LBracket, "'[' after 'id'");
      const Token& s = expect(Tok::Ident, "a system name");
      if (!systems_.count(s.text)) error(s.pos, "unknown system '" + s.text + "'");
      expect(Tok::RBracket, "']'");
      return std::make_shared<const Expr>(Expr{ExprKind::Identity, s.text, nullptr, nullptr, t.pos});
    }
    if (t.kind == Tok::Ident && !kReserved.count(t.text)) {
      advance();
      if (!atoms_.count(t.text)) {
        error(t.pos, systems_.count(t.text)
                         ? "'" + t.text + "' is a system; use id[" + t.text + "] for its wire"
                         : "unknown identifier '" + t.text + "'");
      }
      return std::make_shared<const Expr>(Expr{ExprKind::Ref, t.text, nullptr, nullptr, t.pos});
    }
    fail(t, "expected an expression");
  }

  static constexpr int kMaxDepth = 200;

  std::vector<Token> toks_;
  std::string file_;
  std::size_t i_ = 0;
  int depth_ = 0;
  std::set<std::string> names_;
  std::set<std::string> systems_;
  std::set<std::string> atoms_;
};

bool same_tree(const NumTree& a, const NumTree& b) {
  if (a.leaf != b.leaf) return false;
  if (a.leaf) return a.value == b.value;
  if (a.items.size() != b.items.size()) return false;
  for (std::size_t i = 0; i < a.items.size(); ++i) {
    if (!same_tree(a.items[i], b.items[i])) return false;
  }
  return true;
}

bool same_expr(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return a->kind == b->kind && a->name == b->name && same_expr(a->lhs, b->lhs) &&
         same_expr(a->rhs, b->rhs);
}

}  // namespace

Program parse(std::string_view text, const std::string& file) {
  return Parser(lex(text, file), file).program();
}

Program parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DslError({path, {1, 1}, "cannot open file"});
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

bool same_structure(const Program& a, const Program& b) {
  if (a.systems.size() != b.systems.size() || a.atoms.size() != b.atoms.size()) return false;
  for (std::size_t i = 0; i < a.systems.size(); ++i) {
    const auto& x = a.systems[i];
    const auto& y = b.systems[i];
    if (x.name != y.name || x.backend_word != y.backend_word || x.dim != y.dim) return false;
  }
  for (std::size_t i = 0; i < a.atoms.size(); ++i) {
    const auto& x = a.atoms[i];
    const auto& y = b.atoms[i];
    if (x.kind != y.kind || x.name != y.name || x.input != y.input || x.output != y.output ||
        x.literal.kind != y.literal.kind ||
        x.literal.matrices.size() != y.literal.matrices.size()) {
      return false;
    }
    for (std::size_t m = 0; m < x.literal.matrices.size(); ++m) {
      if (!same_tree(x.literal.matrices[m], y.literal.matrices[m])) return false;
    }
  }
  return same_expr(a.run, b.run);
}

}  // namespace gpt_tomo::dsl
