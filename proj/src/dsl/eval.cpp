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

#include <optional>

#include "gpt_tomo/backends.hpp"
#include "gpt_tomo/dsl.hpp"

namespace gpt_tomo::dsl {

std::string to_string(const std::vector<std::string>& wires) {
  if (wires.empty()) return "(I)";
  std::string s = "(";
  for (std::size_t i = 0; i < wires.size(); ++i) s += (i ? ", " : "") + wires[i];
  return s + ")";
}

std::string_view to_string(ResultKind k) {
  switch (k) {
    case ResultKind::Scalar:
      return "scalar";
    case ResultKind::State:
      return "state";
    case ResultKind::Effect:
      return "effect";
    case ResultKind::Process:
      return "process";
  }
  return "unknown";
}

double EvalResult::scalar() const {
  if (kind != ResultKind::Scalar) throw InvalidArgument("result is not a scalar");
  return map.matrix(0, 0).real();
}

CMatrix EvalResult::state_operator() const {
  if (kind != ResultKind::State) throw InvalidArgument("result is not a state");
  const int m = map.output.dim();
  if (!is_quantum_family(map.output.backend())) return map.matrix.col(0).asDiagonal();
  return linalg::unvec(map.matrix.col(0), m, m);
}

namespace {

std::string_view literal_name(LiteralKind k) {
  switch (k) {
    case LiteralKind::MaxMix:
      return "maxmix";
    case LiteralKind::Bell:
      return "bell";
    case LiteralKind::BellEffect:
      return "bell_effect";
    case LiteralKind::Unit:
      return "unit";
    case LiteralKind::Kraus:
      return "kraus";
    case LiteralKind::Stoch:
      return "stoch";
  }
  return "?";
}

std::string_view atom_word(AtomKind k) {
  switch (k) {
    case AtomKind::State:
      return "state";
    case AtomKind::Effect:
      return "effect";
    case AtomKind::Proc:
      return "proc";
  }
  return "?";
}

class Checker {
 public:
  explicit Checker(const Program& p) : p_(p) {}

  [[noreturn]] void error(Position pos, const std::string& msg) const {
    throw DslError({p_.file, pos, msg});
  }

  // Reads a literal matrix; complex entries are [re, im] pairs.
  CMatrix matrix(const NumTree& t, bool allow_complex) const {
    if (t.leaf) error(t.pos, "expected a matrix");
    const auto rows = static_cast<Eigen::Index>(t.items.size());
    Eigen::Index cols = -1;
    CMatrix m;
    for (Eigen::Index i = 0; i < rows; ++i) {
      const NumTree& row = t.items[i];
      if (row.leaf) error(row.pos, "expected a matrix row '[...]'");
      if (cols < 0) {
        cols = static_cast<Eigen::Index>(row.items.size());
        m.resize(rows, cols);
      } else if (static_cast<Eigen::Index>(row.items.size()) != cols) {
        error(row.pos, "ragged matrix: row " + std::to_string(i + 1) + " has " +
                           std::to_string(row.items.size()) + " entries, expected " +
                           std::to_string(cols));
      }
      for (Eigen::Index j = 0; j < cols; ++j) {
        const NumTree& e = row.items[j];
        if (e.leaf) {
          m(i, j) = e.value;
        } else if (e.items.size() == 2 && e.items[0].leaf && e.items[1].leaf) {
          if (!allow_complex) error(e.pos, "complex entry in a real matrix");
          m(i, j) = Complex(e.items[0].value, e.items[1].value);
        } else {
          error(e.pos, "matrix entry must be a number or a [re, im] pair");
        }
      }
    }
    return m;
  }

  int dim_of(const std::vector<std::string>& names) const {
    int d = 1;
    for (const auto& n : names) d *= dims_.at(n);
    return d;
  }

  System system_of(const std::vector<std::string>& names) const {
    std::vector<int> f;
    for (const auto& n : names) f.push_back(dims_.at(n));
    return System(backend_, f);
  }

  TypedProgram check() {
    for (const auto& s : p_.systems) {
      if (dims_.empty()) {
        backend_ = s.backend;
      } else if (s.backend != backend_) {
        error(s.pos, "system '" + s.name + "' uses backend " +
                         std::string(gpt_tomo::to_string(s.backend)) + " but '" +
                         p_.systems.front().name + "' uses " +
                         std::string(gpt_tomo::to_string(backend_)));
      }
      dims_[s.name] = s.dim;
    }
    for (const auto& a : p_.atoms) {
      check_atom(a);
      atom_types_[a.name] = WireType{a.input, a.output};
    }
    TypedProgram t{p_, backend_, dims_, {}, {}};
    t.run_type = type_of(*p_.run, t.types);
    return t;
  }

 private:
  void check_halves(const AtomDecl& a, const std::vector<std::string>& wires) const {
    const std::size_t k = wires.size() / 2;
    bool ok = wires.size() % 2 == 0 && k > 0;
    for (std::size_t i = 0; ok && i < k; ++i) ok = dims_.at(wires[i]) == dims_.at(wires[k + i]);
    if (!ok) {
      error(a.literal.pos, std::string(literal_name(a.literal.kind)) +
                               " needs two halves of equal dimensions, got " + to_string(wires));
    }
  }

  void check_atom(const AtomDecl& a) const {
    const LiteralKind lk = a.literal.kind;
    auto wrong_kind = [&] {
      error(a.literal.pos, "literal '" + std::string(literal_name(lk)) + "' cannot define " +
                               std::string(atom_word(a.kind)) + " '" + a.name + "'");
    };
    switch (lk) {
      case LiteralKind::MaxMix:
        if (a.kind != AtomKind::State) wrong_kind();
        return;
      case LiteralKind::Bell:
        if (a.kind != AtomKind::State) wrong_kind();
        check_halves(a, a.output);
        return;
      case LiteralKind::BellEffect:
        if (a.kind != AtomKind::Effect) wrong_kind();
        check_halves(a, a.input);
        return;
      case LiteralKind::Unit:
        if (a.kind != AtomKind::Effect) wrong_kind();
        return;
      case LiteralKind::Kraus:
      case LiteralKind::Stoch:
        break;
    }
    const bool classical = backend_ == Backend::Classical;
    if (classical && lk == LiteralKind::Kraus) {
      error(a.literal.pos, "classical systems take 'stoch' literals, not 'kraus'");
    }
    if (!classical && lk == LiteralKind::Stoch) {
      error(a.literal.pos, "quantum systems take 'kraus' literals, not 'stoch'");
    }
    const int n = dim_of(a.input);
    const int m = dim_of(a.output);
    for (const auto& t : a.literal.matrices) {
      const CMatrix k = matrix(t, !classical);
      if (k.rows() != m || k.cols() != n) {
        error(t.pos, "matrix for '" + a.name + "' must be " + std::to_string(m) + "x" +
                         std::to_string(n) + ", got " + std::to_string(k.rows()) + "x" +
                         std::to_string(k.cols()));
      }
    }
  }

  WireType type_of(const Expr& e, std::map<const Expr*, WireType>& out) const {
    WireType t;
    switch (e.kind) {
      case ExprKind::Ref:
        t = atom_types_.at(e.name);
        break;
      case ExprKind::Identity:
        t = WireType{{e.name}, {e.name}};
        break;
      case ExprKind::Seq: {
        const WireType f = type_of(*e.lhs, out);
        const WireType g = type_of(*e.rhs, out);
        if (f.input != g.output) {
          error(e.pos, "wire mismatch in '" + print(e) + "': '" + print(*e.lhs) + "' expects " +
                           to_string(f.input) + " but '" + print(*e.rhs) + "' produces " +
                           to_string(g.output));
        }
        t = WireType{g.input, f.output};
        break;
      }
      case ExprKind::Par: {
        const WireType f = type_of(*e.lhs, out);
        const WireType g = type_of(*e.rhs, out);
        t = f;
        t.input.insert(t.input.end(), g.input.begin(), g.input.end());
        t.output.insert(t.output.end(), g.output.begin(), g.output.end());
        break;
      }
    }
    out[&e] = t;
    return t;
  }

  const Program& p_;
  Backend backend_ = Backend::Quantum;
  std::map<std::string, int> dims_;
  std::map<std::string, WireType> atom_types_;
};

class Evaluator {
 public:
  explicit Evaluator(const TypedProgram& t) : t_(t), checker_(t.program) {
    for (const auto& a : t.program.atoms) atoms_.emplace(a.name, build(a));
  }

  LinearMap eval(const Expr& e) const {
    switch (e.kind) {
      case ExprKind::Ref:
        return atoms_.at(e.name);
      case ExprKind::Identity:
        return LinearMap::identity(system({e.name}));
      case ExprKind::Seq:
        return eval(*e.lhs).after(eval(*e.rhs));
      case ExprKind::Par:
        return tensor(eval(*e.lhs), eval(*e.rhs));
    }
    throw Error("unreachable expression kind");
  }

 private:
  System system(const std::vector<std::string>& names) const {
    std::vector<int> f;
    for (const auto& n : names) f.push_back(t_.dims.at(n));
    return System(t_.backend, f);
  }

  LinearMap build(const AtomDecl& a) const {
    const System in = system(a.input);
    const System out = system(a.output);
    const bool classical = t_.backend == Backend::Classical;
    try {
      switch (a.literal.kind) {
        case LiteralKind::MaxMix:
          return Process::preparation(complete_state(out)).to_map();
        case LiteralKind::Bell:
          return Process::preparation(maximally_entangled(half(out))).to_map();
        case LiteralKind::Unit:
          return Process::measurement(Effect::unit(in)).to_map();
        case LiteralKind::BellEffect:
          return Process::measurement(maximally_entangled_effect(half(in))).to_map();
        case LiteralKind::Kraus: {
          KrausList k;
          for (const auto& m : a.literal.matrices) k.ops.push_back(checker_.matrix(m, true));
          return Process(in, out, std::move(k)).to_map();
        }
        case LiteralKind::Stoch: {
          const RMatrix m = checker_.matrix(a.literal.matrices.front(), !classical).real();
          return Process(in, out, StochasticMatrix{m}).to_map();
        }
      }
    } catch (const DslError&) {
      throw;
    } catch (const Error& err) {
      checker_.error(a.literal.pos, "invalid " + std::string(atom_word(a.kind)) + " '" +
                                        a.name + "': " + err.what());
    }
    throw Error("unreachable literal kind");
  }

  static System half(const System& s) {
    return s.slice(0, static_cast<int>(s.factors().size()) / 2);
  }

  const TypedProgram& t_;
  Checker checker_;
  std::map<std::string, LinearMap> atoms_;
};

}  // namespace

TypedProgram typecheck(const Program& p) {
  if (!p.run) throw DslError({p.file, {1, 1}, "program has no run expression"});
  return Checker(p).check();
}

EvalResult evaluate(const TypedProgram& p) {
  const Evaluator ev(p);
  LinearMap map = ev.eval(*p.program.run);
  const bool closed_in = p.run_type.input.empty();
  const bool closed_out = p.run_type.output.empty();
  const ResultKind kind = closed_in && closed_out ? ResultKind::Scalar
                          : closed_in             ? ResultKind::State
                          : closed_out            ? ResultKind::Effect
                                                  : ResultKind::Process;
  return EvalResult{kind, p.run_type, std::move(map)};
}

EvalResult run(std::string_view text, const std::string& file) {
  return evaluate(typecheck(parse(text, file)));
}

}  // namespace gpt_tomo::dsl
