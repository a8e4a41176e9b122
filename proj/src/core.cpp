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

#include "gpt_tomo/core.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gpt_tomo {

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::Classical:
      return "classical";
    case Backend::Quantum:
      return "quantum";
    case Backend::Real:
      return "real";
  }
  return "unknown";
}

std::optional<Backend> parse_backend(std::string_view name) {
  if (name == "classical") return Backend::Classical;
  if (name == "quantum") return Backend::Quantum;
  if (name == "real") return Backend::Real;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

System::System(Backend backend, std::vector<int> factors)
    : backend_(backend), factors_(std::move(factors)) {
  for (int d : factors_) {
    if (d < 1) throw InvalidArgument("system factor dimension must be positive");
  }
}

int System::dim() const { return linalg::product(factors_); }

int System::state_dim() const {
  const int n = dim();
  switch (backend_) {
    case Backend::Classical:
      return n;
    case Backend::Quantum:
      return n * n;
    case Backend::Real:
      return n * (n + 1) / 2;
  }
  return 0;
}

System System::slice(int first, int count) const {
  if (first < 0 || count < 0 || first + count > static_cast<int>(factors_.size())) {
    throw std::out_of_range("System::slice out of range");
  }
  return System(backend_, std::vector<int>(factors_.begin() + first,
                                           factors_.begin() + first + count));
}

std::string System::str() const {
  std::ostringstream os;
  os << to_string(backend_) << '(';
  if (factors_.empty()) os << 'I';
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << 'x';
    os << factors_[i];
  }
  os << ')';
  return os.str();
}

System tensor_systems(const System& a, const System& b) {
  if (a.backend() != b.backend()) {
    throw BackendMismatch("cannot compose " + a.str() + " with " + b.str());
  }
  std::vector<int> f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return System(a.backend(), std::move(f));
}

System remainder(const System& composite, const System& head) {
  const int k = static_cast<int>(head.factors().size());
  const int total = static_cast<int>(composite.factors().size());
  if (composite.backend() != head.backend()) {
    throw BackendMismatch(composite.str() + " does not extend " + head.str());
  }
  if (k > total || !(composite.slice(0, k) == head)) {
    throw SystemMismatch(composite.str() + " does not start with " + head.str());
  }
  return composite.slice(k, total - k);
}

// ---------------------------------------------------------------------------

namespace {

// Rounding noise below this is treated as zero when a probability is formed.
constexpr double kNegativeNoise = 1e-12;

void require_same_system(const System& a, const System& b, std::string_view what) {
  if (!(a == b)) {
    throw SystemMismatch(std::string(what) + ": " + a.str() + " vs " + b.str());
  }
}

void require_same_backend(const System& a, const System& b, std::string_view what) {
  if (a.backend() != b.backend()) {
    throw BackendMismatch(std::string(what) + ": " + a.str() + " vs " + b.str());
  }
}

CMatrix clean_operator(const System& sys, const CMatrix& op, double tol,
                       std::string_view what) {
  const int n = sys.dim();
  if (op.rows() != n || op.cols() != n) {
    throw SystemMismatch(std::string(what) + ": operator size does not match " + sys.str());
  }
  if (!linalg::is_hermitian(op, tol)) {
    throw InvalidArgument(std::string(what) + ": operator is not Hermitian");
  }
  CMatrix h = 0.5 * (op + op.adjoint());
  switch (sys.backend()) {
    case Backend::Real:
      if (!linalg::is_real(h, tol)) {
        throw InvalidArgument(std::string(what) + ": real backend requires a real matrix");
      }
      h = h.real().cast<Complex>();
      break;
    case Backend::Classical: {
      CMatrix off = h;
      off.diagonal().setZero();
      if (off.size() > 0 && off.cwiseAbs().maxCoeff() > tol) {
        throw InvalidArgument(std::string(what) + ": classical element must be diagonal");
      }
      RVector d = h.diagonal().real();
      h = d.cast<Complex>().asDiagonal();
      break;
    }
    case Backend::Quantum:
      break;
  }
  return h;
}

RVector backend_coords(const System& sys, const CMatrix& op) {
  switch (sys.backend()) {
    case Backend::Classical:
      return op.diagonal().real();
    case Backend::Quantum:
      return linalg::operator_coords(op, false);
    case Backend::Real:
      return linalg::operator_coords(op, true);
  }
  return {};
}

}  // namespace

Scalar::Scalar(double v) : value(v) {
  if (!(v >= -kNegativeNoise)) throw InvalidArgument("scalar must be nonnegative");
  if (value < 0.0) value = 0.0;
}

ProbVector::ProbVector(std::vector<double> e, double tol) : entries(std::move(e)) {
  if (entries.empty()) throw InvalidArgument("probability vector is empty");
  double total = 0.0;
  for (double p : entries) {
    if (!(p >= 0.0)) throw InvalidArgument("probability entries must be nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > tol) {
    throw InvalidArgument("probabilities must sum to one");
  }
}

// ---------------------------------------------------------------------------

State::State(System system, CMatrix op, double tol)
    : system_(std::move(system)), kind_(StateKind::Subnormalized) {
  op_ = clean_operator(system_, op, tol, "state");
  if (linalg::min_eigenvalue(op_) < -tol) {
    throw InvalidArgument("state is not positive semidefinite");
  }
  const double tr = op_.trace().real();
  if (tr > 1.0 + tol) throw InvalidArgument("state trace exceeds one");
  if (std::abs(tr - 1.0) <= tol) kind_ = StateKind::Deterministic;
}

State State::from_probabilities(System system, const RVector& probs, double tol) {
  return State(std::move(system), probs.cast<Complex>().asDiagonal().toDenseMatrix(), tol);
}

State State::from_vector(System system, const CVector& psi, double tol) {
  return State(std::move(system), psi * psi.adjoint(), tol);
}

RVector State::coords() const { return backend_coords(system_, op_); }

State State::scaled(double p) const {
  if (p < 0.0) throw InvalidArgument("state scale must be nonnegative");
  return State(system_, p * op_);
}

Effect::Effect(System system, CMatrix op, double tol)
    : system_(std::move(system)), kind_(EffectKind::General) {
  op_ = clean_operator(system_, op, tol, "effect");
  auto [vals, vecs] = linalg::eigh(op_);
  if (vals.size() > 0) {
    if (vals.minCoeff() < -tol) throw InvalidArgument("effect is not positive semidefinite");
    if (vals.maxCoeff() > 1.0 + tol) throw InvalidArgument("effect exceeds the unit effect");
  }
  const CMatrix id = CMatrix::Identity(op_.rows(), op_.cols());
  if (op_.size() == 0 || (op_ - id).cwiseAbs().maxCoeff() <= tol) {
    kind_ = EffectKind::Deterministic;
  }
}

Effect Effect::unit(const System& system) {
  return Effect(system, CMatrix::Identity(system.dim(), system.dim()));
}

RVector Effect::coords() const { return backend_coords(system_, op_); }

Scalar pair(const Effect& e, const State& s) {
  require_same_system(e.system(), s.system(), "pair");
  return Scalar((e.op() * s.op()).trace().real());
}

// The coordinate bases are orthonormal for the trace inner product.
double pair_coords(const Effect& e, const State& s) {
  require_same_system(e.system(), s.system(), "pair_coords");
  return e.coords().dot(s.coords());
}

State tensor(const State& a, const State& b) {
  return State(tensor_systems(a.system(), b.system()), linalg::kron(a.op(), b.op()));
}

Effect tensor(const Effect& a, const Effect& b) {
  return Effect(tensor_systems(a.system(), b.system()), linalg::kron(a.op(), b.op()));
}

State marginal(const State& g, std::span<const int> keep, const Effect& e) {
  const auto& dims = g.system().factors();
  const int k = static_cast<int>(dims.size());
  std::vector<bool> kept(k, false);
  std::vector<int> kept_dims;
  for (int f : keep) {
    if (f < 0 || f >= k || kept[f]) {
      throw std::out_of_range("marginal: subsystem selector out of range");
    }
    kept[f] = true;
    kept_dims.push_back(dims[f]);
  }
  std::vector<int> dropped_dims;
  for (int f = 0; f < k; ++f) {
    if (!kept[f]) dropped_dims.push_back(dims[f]);
  }
  require_same_system(e.system(), System(g.system().backend(), dropped_dims),
                      "marginal effect");
  CMatrix out = linalg::partial_contract(g.op(), dims, keep, e.op());
  return State(System(g.system().backend(), kept_dims), out);
}

State marginal(const State& g, std::span<const int> keep) {
  const auto& dims = g.system().factors();
  std::vector<int> dropped;
  std::vector<bool> kept(dims.size(), false);
  for (int f : keep) {
    if (f < 0 || f >= static_cast<int>(dims.size())) {
      throw std::out_of_range("marginal: subsystem selector out of range");
    }
    kept[f] = true;
  }
  for (std::size_t f = 0; f < dims.size(); ++f) {
    if (!kept[f]) dropped.push_back(dims[f]);
  }
  return marginal(g, keep, Effect::unit(System(g.system().backend(), dropped)));
}

// ---------------------------------------------------------------------------

LinearMap LinearMap::identity(const System& sys) {
  const int n = sys.dim();
  const int size = is_quantum_family(sys.backend()) ? n * n : n;
  return LinearMap{sys, sys, CMatrix::Identity(size, size)};
}

CMatrix LinearMap::apply(const CMatrix& op) const {
  const int n = input.dim();
  const int m = output.dim();
  if (op.rows() != n || op.cols() != n) {
    throw SystemMismatch("LinearMap::apply: operator does not match " + input.str());
  }
  if (is_quantum_family(input.backend())) {
    return linalg::unvec(matrix * linalg::vec(op), m, m);
  }
  CVector p = matrix * op.diagonal();
  return p.asDiagonal();
}

LinearMap LinearMap::after(const LinearMap& before) const {
  require_same_system(before.output, input, "sequential composition");
  return LinearMap{before.input, output, matrix * before.matrix};
}

LinearMap LinearMap::operator+(const LinearMap& other) const {
  require_same_system(input, other.input, "map sum input");
  require_same_system(output, other.output, "map sum output");
  return LinearMap{input, output, matrix + other.matrix};
}

LinearMap LinearMap::operator-(const LinearMap& other) const {
  return *this + other * -1.0;
}

LinearMap LinearMap::operator*(double s) const {
  return LinearMap{input, output, matrix * s};
}

LinearMap tensor(const LinearMap& f, const LinearMap& g) {
  System in = tensor_systems(f.input, g.input);
  System out = tensor_systems(f.output, g.output);
  if (!is_quantum_family(in.backend())) {
    return LinearMap{in, out, linalg::kron(f.matrix, g.matrix)};
  }
  return LinearMap{in, out,
                   linalg::superop_tensor(f.matrix, f.input.dim(), f.output.dim(),
                                          g.matrix, g.input.dim(), g.output.dim())};
}

LinearMap lift(const LinearMap& f, const System& anc) {
  return tensor(f, LinearMap::identity(anc));
}

CMatrix apply_lifted(const LinearMap& f, const CMatrix& op, const System& anc) {
  require_same_backend(f.input, anc, "apply_lifted");
  const int n = f.input.dim();
  const int m = f.output.dim();
  const int c = anc.dim();
  if (op.rows() != n * c || op.cols() != n * c) {
    throw SystemMismatch("apply_lifted: operator does not match " +
                         tensor_systems(f.input, anc).str());
  }
  if (!is_quantum_family(f.input.backend())) {
    CVector p = op.diagonal();
    CVector q = CVector::Zero(m * c);
    for (int r = 0; r < c; ++r) {
      CVector block(n);
      for (int a = 0; a < n; ++a) block(a) = p(a * c + r);
      CVector out = f.matrix * block;
      for (int b = 0; b < m; ++b) q(b * c + r) = out(b);
    }
    return q.asDiagonal();
  }
  CMatrix result = CMatrix::Zero(m * c, m * c);
  CMatrix block(n, n);
  for (int r = 0; r < c; ++r) {
    for (int s = 0; s < c; ++s) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) block(a, b) = op(a * c + r, b * c + s);
      }
      const CMatrix out = linalg::unvec(f.matrix * linalg::vec(block), m, m);
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) result(a * c + r, b * c + s) = out(a, b);
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

Process::Process(System input, System output, ProcessRepr repr, double tol)
    : input_(std::move(input)), output_(std::move(output)), repr_(std::move(repr)) {
  require_same_backend(input_, output_, "process");
  const int n = input_.dim();
  const int m = output_.dim();
  if (is_quantum_family(input_.backend())) {
    auto* kraus = std::get_if<KrausList>(&repr_);
    if (kraus == nullptr) {
      throw InvalidArgument("quantum processes require a Kraus representation");
    }
    CMatrix gram = CMatrix::Zero(n, n);
    for (auto& k : kraus->ops) {
      if (k.rows() != m || k.cols() != n) {
        throw InvalidArgument("Kraus operator shape does not match " + input_.str() +
                              " -> " + output_.str());
      }
      if (input_.backend() == Backend::Real) {
        if (linalg::is_real(k, tol)) {
          k = k.real().cast<Complex>();
        } else if (linalg::is_imaginary(k, tol)) {
          k = Complex(0.0, 1.0) * k.imag().cast<Complex>();
        } else {
          throw InvalidArgument(
              "real backend Kraus operators must be entrywise real or entrywise imaginary");
        }
      }
      gram += k.adjoint() * k;
    }
    if (linalg::max_eigenvalue(gram) > 1.0 + tol) {
      throw InvalidArgument("Kraus operators are not trace non-increasing");
    }
    deterministic_ = (gram - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() <= tol ||
                     (n == 0);
    if (deterministic_ && kraus->ops.size() == 1 && n == m) {
      const CMatrix& u = kraus->ops.front();
      reversible_ = (u * u.adjoint() - CMatrix::Identity(m, m)).cwiseAbs().maxCoeff() <= tol;
    }
  } else {
    auto* stoch = std::get_if<StochasticMatrix>(&repr_);
    if (stoch == nullptr) {
      throw InvalidArgument("classical processes require a stochastic matrix");
    }
    const RMatrix& mat = stoch->matrix;
    if (mat.rows() != m || mat.cols() != n) {
      throw InvalidArgument("stochastic matrix shape does not match " + input_.str() +
                            " -> " + output_.str());
    }
    if (mat.size() > 0 && mat.minCoeff() < -tol) {
      throw InvalidArgument("stochastic matrix has negative entries");
    }
    stoch->matrix = mat.cwiseMax(0.0);
    RVector col = stoch->matrix.colwise().sum();
    if (col.size() > 0 && col.maxCoeff() > 1.0 + tol) {
      throw InvalidArgument("stochastic matrix columns exceed one");
    }
    deterministic_ = col.size() == 0 || (col.array() - 1.0).abs().maxCoeff() <= tol;
    if (deterministic_ && n == m) {
      bool perm = true;
      for (Eigen::Index i = 0; i < stoch->matrix.size() && perm; ++i) {
        const double v = stoch->matrix.data()[i];
        perm = std::abs(v) <= tol || std::abs(v - 1.0) <= tol;
      }
      reversible_ = perm && (stoch->matrix.rowwise().sum().array() - 1.0).abs().maxCoeff() <= tol;
    }
  }
}

Process Process::identity(const System& sys) {
  const int n = sys.dim();
  if (is_quantum_family(sys.backend())) {
    return Process(sys, sys, KrausList{{CMatrix::Identity(n, n)}});
  }
  return Process(sys, sys, StochasticMatrix{RMatrix::Identity(n, n)});
}

Process Process::preparation(const State& s) {
  const System& sys = s.system();
  System trivial = System::trivial(sys.backend());
  if (!is_quantum_family(sys.backend())) {
    return Process(trivial, sys, StochasticMatrix{s.op().diagonal().real()});
  }
  auto [vals, vecs] = linalg::eigh(s.op(), sys.backend() == Backend::Real);
  KrausList kraus;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) > 0.0) kraus.ops.push_back(std::sqrt(vals(i)) * vecs.col(i));
  }
  return Process(trivial, sys, std::move(kraus));
}

Process Process::measurement(const Effect& e) {
  const System& sys = e.system();
  System trivial = System::trivial(sys.backend());
  if (!is_quantum_family(sys.backend())) {
    return Process(sys, trivial,
                   StochasticMatrix{e.op().diagonal().real().transpose()});
  }
  auto [vals, vecs] = linalg::eigh(e.op(), sys.backend() == Backend::Real);
  KrausList kraus;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) > 0.0) kraus.ops.push_back(std::sqrt(vals(i)) * vecs.col(i).adjoint());
  }
  return Process(sys, trivial, std::move(kraus));
}

LinearMap Process::to_map() const {
  const int n = input_.dim();
  const int m = output_.dim();
  if (const auto* kraus = std::get_if<KrausList>(&repr_)) {
    CMatrix s = CMatrix::Zero(static_cast<Eigen::Index>(m) * m,
                              static_cast<Eigen::Index>(n) * n);
    for (const auto& k : kraus->ops) s += linalg::kron(CMatrix(k.conjugate()), k);
    return LinearMap{input_, output_, s};
  }
  return LinearMap{input_, output_,
                   std::get<StochasticMatrix>(repr_).matrix.cast<Complex>()};
}

Process Process::scaled(double p) const {
  if (p < 0.0 || p > 1.0) throw InvalidArgument("process scale must lie in [0, 1]");
  if (const auto* kraus = std::get_if<KrausList>(&repr_)) {
    KrausList out;
    const double r = std::sqrt(p);
    for (const auto& k : kraus->ops) out.ops.push_back(r * k);
    return Process(input_, output_, std::move(out));
  }
  return Process(input_, output_,
                 StochasticMatrix{p * std::get<StochasticMatrix>(repr_).matrix});
}

State apply(const Process& p, const State& s) {
  require_same_system(p.input(), s.system(), "apply");
  if (const auto* kraus = std::get_if<KrausList>(&p.repr())) {
    const int m = p.output().dim();
    CMatrix out = CMatrix::Zero(m, m);
    for (const auto& k : kraus->ops) out += k * s.op() * k.adjoint();
    return State(p.output(), out);
  }
  const RMatrix& mat = std::get<StochasticMatrix>(p.repr()).matrix;
  return State::from_probabilities(p.output(), mat * s.op().diagonal().real());
}

Process lift(const Process& p, const System& anc) {
  require_same_backend(p.input(), anc, "lift");
  const int c = anc.dim();
  System in = tensor_systems(p.input(), anc);
  System out = tensor_systems(p.output(), anc);
  if (const auto* kraus = std::get_if<KrausList>(&p.repr())) {
    KrausList lifted;
    const CMatrix id = CMatrix::Identity(c, c);
    for (const auto& k : kraus->ops) lifted.ops.push_back(linalg::kron(k, id));
    return Process(in, out, std::move(lifted));
  }
  const RMatrix& mat = std::get<StochasticMatrix>(p.repr()).matrix;
  return Process(in, out, StochasticMatrix{linalg::kron(mat, RMatrix(RMatrix::Identity(c, c)))});
}

Process tensor(const Process& a, const Process& b) {
  System in = tensor_systems(a.input(), b.input());
  System out = tensor_systems(a.output(), b.output());
  if (const auto* ka = std::get_if<KrausList>(&a.repr())) {
    const auto& kb = std::get<KrausList>(b.repr());
    KrausList ops;
    for (const auto& x : ka->ops) {
      for (const auto& y : kb.ops) ops.ops.push_back(linalg::kron(x, y));
    }
    return Process(in, out, std::move(ops));
  }
  return Process(in, out,
                 StochasticMatrix{linalg::kron(std::get<StochasticMatrix>(a.repr()).matrix,
                                               std::get<StochasticMatrix>(b.repr()).matrix)});
}

Process compose(const Process& after, const Process& before) {
  require_same_system(before.output(), after.input(), "compose");
  if (const auto* ka = std::get_if<KrausList>(&after.repr())) {
    const auto& kb = std::get<KrausList>(before.repr());
    KrausList ops;
    for (const auto& x : ka->ops) {
      for (const auto& y : kb.ops) ops.ops.push_back(x * y);
    }
    return Process(before.input(), after.output(), std::move(ops));
  }
  return Process(before.input(), after.output(),
                 StochasticMatrix{std::get<StochasticMatrix>(after.repr()).matrix *
                                  std::get<StochasticMatrix>(before.repr()).matrix});
}

Process sum(const Process& a, const Process& b) {
  require_same_system(a.input(), b.input(), "coarse-graining input");
  require_same_system(a.output(), b.output(), "coarse-graining output");
  if (const auto* ka = std::get_if<KrausList>(&a.repr())) {
    KrausList ops = *ka;
    const auto& kb = std::get<KrausList>(b.repr());
    ops.ops.insert(ops.ops.end(), kb.ops.begin(), kb.ops.end());
    return Process(a.input(), a.output(), std::move(ops));
  }
  return Process(a.input(), a.output(),
                 StochasticMatrix{std::get<StochasticMatrix>(a.repr()).matrix +
                                  std::get<StochasticMatrix>(b.repr()).matrix});
}

State prepared_state(const Process& prep) {
  if (!prep.input().is_trivial()) {
    throw InvalidArgument("prepared_state: process input is not the trivial system");
  }
  return apply(prep, State(prep.input(), CMatrix::Identity(1, 1)));
}

// ---------------------------------------------------------------------------

Test::Test(std::vector<Branch> branches, double tol) : branches_(std::move(branches)) {
  if (branches_.empty()) throw InvalidArgument("a test needs at least one outcome");
  std::set<std::string> labels;
  for (const auto& b : branches_) {
    require_same_system(b.process.input(), input(), "test branch input");
    require_same_system(b.process.output(), output(), "test branch output");
    if (!labels.insert(b.label).second) {
      throw InvalidArgument("duplicate outcome label '" + b.label + "'");
    }
  }
  Process t = total();
  // Re-check with the caller's tolerance; total() used the default one.
  if (const auto* kraus = std::get_if<KrausList>(&t.repr())) {
    const int n = input().dim();
    CMatrix gram = CMatrix::Zero(n, n);
    for (const auto& k : kraus->ops) gram += k.adjoint() * k;
    if ((gram - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > tol) {
      throw InvalidArgument("test outcomes do not coarse-grain to a deterministic process");
    }
  } else if (!t.is_deterministic()) {
    throw InvalidArgument("test outcomes do not coarse-grain to a deterministic process");
  }
}

Process Test::total() const {
  Process acc = branches_.front().process;
  for (std::size_t i = 1; i < branches_.size(); ++i) acc = sum(acc, branches_[i].process);
  return acc;
}

Test coarse_grain(const Test& t, const std::vector<std::vector<std::string>>& partition) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < t.branches().size(); ++i) index[t.branches()[i].label] = i;
  std::set<std::string> seen;
  std::vector<Branch> out;
  for (const auto& block : partition) {
    if (block.empty()) throw InvalidArgument("partition block is empty");
    std::optional<Process> acc;
    std::string label;
    for (const auto& l : block) {
      auto it = index.find(l);
      if (it == index.end()) throw InvalidArgument("partition names unknown outcome '" + l + "'");
      if (!seen.insert(l).second) {
        throw InvalidArgument("partition blocks overlap at outcome '" + l + "'");
      }
      const Process& p = t.branches()[it->second].process;
      acc = acc ? sum(*acc, p) : p;
      label += (label.empty() ? "" : "+") + l;
    }
    out.push_back(Branch{label, *acc});
  }
  if (seen.size() != index.size()) throw InvalidArgument("partition does not cover every outcome");
  return Test(std::move(out));
}

Test randomize(const std::vector<Test>& tests, const ProbVector& probs) {
  if (tests.size() != probs.size()) {
    throw InvalidArgument("randomize: number of tests and probabilities differ");
  }
  std::vector<Branch> out;
  for (std::size_t i = 0; i < tests.size(); ++i) {
    for (const auto& b : tests[i].branches()) {
      out.push_back(Branch{std::to_string(i) + ":" + b.label, b.process.scaled(probs.entries[i])});
    }
  }
  return Test(std::move(out));
}

Test make_source(const std::vector<State>& states, double tol) {
  std::vector<Branch> branches;
  for (std::size_t i = 0; i < states.size(); ++i) {
    branches.push_back(Branch{std::to_string(i), Process::preparation(states[i])});
  }
  return Test(std::move(branches), tol);
}

}  // namespace gpt_tomo
