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

// A small language for circuits of states, effects and processes.
//
//   program := decl* "run" expr [";"]
//   decl    := "system" ID backend INT ";"
//            | "state"  ID "on" syslist "=" lit ";"
//            | "effect" ID "on" syslist "=" lit ";"
//            | "proc"   ID "on" syslist "->" syslist "=" lit ";"
//   syslist := ID ("," ID)*
//   expr    := par ("." par)*          f . g applies g first
//   par     := prim ("||" prim)*       binds tighter than "."
//   prim    := "(" expr ")" | "id" "[" ID "]" | ID
//   lit     := "maxmix" | "bell" | "bell_effect" | "unit"
//            | "kraus" "[" matrix ("," matrix)* "]"
//            | "stoch" matrix
//   matrix  := "[" row ("," row)* "]"
//   row     := "[" entry ("," entry)* "]"
//   entry   := NUMBER | "[" NUMBER "," NUMBER "]"     (re, im)
//
// backend is one of quantum, qubit, complex, real, rebit, classical, cbit.
// '#' starts a comment that runs to the end of the line.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gpt_tomo/core.hpp"

namespace gpt_tomo::dsl {

struct Position {
  int line = 1;
  int col = 1;
};

struct Diagnostic {
  std::string file;
  Position pos;
  std::string message;

  /// "file:line:col: message"
  std::string str() const;
};

class DslError : public Error {
 public:
  explicit DslError(Diagnostic d);
  const Diagnostic& diagnostic() const { return diag_; }

 private:
  Diagnostic diag_;
};

/// Nested numeric arrays as written in literals.
struct NumTree {
  bool leaf = true;
  double value = 0.0;
  std::vector<NumTree> items;
  Position pos;
};

enum class LiteralKind { MaxMix, Bell, BellEffect, Unit, Kraus, Stoch };

struct Literal {
  LiteralKind kind = LiteralKind::MaxMix;
  /// One matrix per Kraus operator, or the single stochastic matrix.
  std::vector<NumTree> matrices;
  Position pos;
};

struct SystemDecl {
  std::string name;
  std::string backend_word;
  Backend backend = Backend::Quantum;
  int dim = 0;
  Position pos;
};

enum class AtomKind { State, Effect, Proc };

struct AtomDecl {
  AtomKind kind = AtomKind::State;
  std::string name;
  std::vector<std::string> input;
  std::vector<std::string> output;
  Literal literal;
  Position pos;
};

enum class ExprKind { Seq, Par, Ref, Identity };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind = ExprKind::Ref;
  /// Atom name for Ref, system name for Identity.
  std::string name;
  ExprPtr lhs;
  ExprPtr rhs;
  Position pos;
};

struct Program {
  std::string file;
  std::vector<SystemDecl> systems;
  std::vector<AtomDecl> atoms;
  ExprPtr run;
};

/// Structural equality, ignoring source positions and file names.
bool same_structure(const Program& a, const Program& b);

/// Syntax, duplicate declarations and unknown identifiers are reported as
/// DslError. Never throws anything else on any input.
Program parse(std::string_view text, const std::string& file = "<input>");

Program parse_file(const std::string& path);

/// Canonical source text; parse(print(p)) has the same structure as p.
std::string print(const Program& p);
std::string print(const Expr& e);

/// Input and output wires as lists of system names.
struct WireType {
  std::vector<std::string> input;
  std::vector<std::string> output;

  bool operator==(const WireType&) const = default;
};

std::string to_string(const std::vector<std::string>& wires);

struct TypedProgram {
  Program program;
  Backend backend = Backend::Quantum;
  std::map<std::string, int> dims;
  std::map<const Expr*, WireType> types;
  WireType run_type;
};

/// Checks literal shapes against their declarations and wire types of every
/// composition.
TypedProgram typecheck(const Program& p);

enum class ResultKind { Scalar, State, Effect, Process };

std::string_view to_string(ResultKind k);

struct EvalResult {
  ResultKind kind = ResultKind::Scalar;
  WireType type;
  LinearMap map;

  /// Value of a closed diagram.
  double scalar() const;
  /// Operator of a state (diagonal for classical).
  CMatrix state_operator() const;
};

EvalResult evaluate(const TypedProgram& p);

/// parse, typecheck and evaluate.
EvalResult run(std::string_view text, const std::string& file = "<input>");

}  // namespace gpt_tomo::dsl
