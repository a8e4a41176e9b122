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

#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gpt_tomo/linalg.hpp"

namespace gpt_tomo {

/// Pass/fail tolerance used when callers do not supply one.
inline constexpr double kDefaultTolerance = 1e-9;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different systems.
class SystemMismatch : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different theories.
class BackendMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The backend has no construction for the requested object.
class Unsupported : public Error {
 public:
  using Error::Error;
};

enum class Backend { Classical, Quantum, Real };

std::string_view to_string(Backend b);
std::optional<Backend> parse_backend(std::string_view name);

/// True for the complex and real Hilbert-space theories.
inline bool is_quantum_family(Backend b) { return b != Backend::Classical; }

// ---------------------------------------------------------------------------
// Systems

/// A physical system: a backend together with an ordered list of atomic local
/// dimensions. The empty list is the trivial system I.
class System {
 public:
  System(Backend backend, std::vector<int> factors);

  static System trivial(Backend backend) { return System(backend, {}); }
  static System atomic(Backend backend, int dim) { return System(backend, {dim}); }

  Backend backend() const { return backend_; }
  const std::vector<int>& factors() const { return factors_; }
  bool is_trivial() const { return factors_.empty(); }

  /// Hilbert-space (quantum) or sample-space (classical) dimension.
  int dim() const;

  /// Dimension of the real span of states:
  /// classical n, complex quantum n^2, real quantum n(n+1)/2.
  int state_dim() const;
  int effect_dim() const { return state_dim(); }

  /// The subsystem made of factors [first, first + count).
  System slice(int first, int count) const;

  std::string str() const;

  bool operator==(const System&) const = default;

 private:
  Backend backend_;
  std::vector<int> factors_;
};

System tensor_systems(const System& a, const System& b);

/// The factors of `composite` that follow a leading copy of `head`. Throws
/// SystemMismatch when `composite` does not start with `head`.
System remainder(const System& composite, const System& head);

// ---------------------------------------------------------------------------
// Scalars

struct Scalar {
  double value = 0.0;

  Scalar() = default;
  explicit Scalar(double v);

  /// p x = p y implies x = y for every positive probability.
  bool cancellative() const { return value > 0.0; }
};

struct ProbVector {
  std::vector<double> entries;

  explicit ProbVector(std::vector<double> entries, double tol = kDefaultTolerance);
  std::size_t size() const { return entries.size(); }
};

// ---------------------------------------------------------------------------
// States and effects
//
// Every element is held as an operator on the system's (Hilbert or sample)
// space: density matrices for the quantum backends and diagonal matrices for
// the classical one. Coordinates over the orthonormal operator basis of
// linalg::operator_basis_element are available through coords(); for the real
// backend the symmetric part of that basis is used, for the classical backend
// the diagonal.

enum class StateKind { Deterministic, Subnormalized };
enum class EffectKind { Deterministic, General };

class State {
 public:
  /// Validates cone membership (PSD, real for the real backend, diagonal for
  /// the classical backend, trace at most one).
  State(System system, CMatrix op, double tol = kDefaultTolerance);

  static State from_probabilities(System system, const RVector& probs,
                                  double tol = kDefaultTolerance);
  static State from_vector(System system, const CVector& psi,
                           double tol = kDefaultTolerance);

  const System& system() const { return system_; }
  const CMatrix& op() const { return op_; }
  StateKind kind() const { return kind_; }
  bool is_deterministic() const { return kind_ == StateKind::Deterministic; }
  double trace() const { return op_.trace().real(); }
  RVector coords() const;

  State scaled(double p) const;

 private:
  System system_;
  CMatrix op_;
  StateKind kind_;
};

class Effect {
 public:
  /// Validates 0 <= E <= I within `tol`.
  Effect(System system, CMatrix op, double tol = kDefaultTolerance);

  /// The unique deterministic effect (trace / marginalisation).
  static Effect unit(const System& system);

  const System& system() const { return system_; }
  const CMatrix& op() const { return op_; }
  EffectKind kind() const { return kind_; }
  bool is_deterministic() const { return kind_ == EffectKind::Deterministic; }
  RVector coords() const;

 private:
  System system_;
  CMatrix op_;
  EffectKind kind_;
};

/// Probability of the closed diagram effect . state.
Scalar pair(const Effect& e, const State& s);

/// Real-bilinear extension of pair to arbitrary coordinates; no cone checks.
double pair_coords(const Effect& e, const State& s);

State tensor(const State& a, const State& b);
Effect tensor(const Effect& a, const Effect& b);

/// Contraction of the factors not in `keep` with `e` (an effect on those
/// factors, in their original order). The result lives on the kept factors in
/// the order listed.
State marginal(const State& g, std::span<const int> keep, const Effect& e);

/// Partial trace version of marginal.
State marginal(const State& g, std::span<const int> keep);

// ---------------------------------------------------------------------------
// Linear maps
//
// The real-linear span of transformations. For quantum backends `matrix` is
// the superoperator acting on column-major vectorised operators; for the
// classical backend it acts on probability vectors.

struct LinearMap {
  System input;
  System output;
  CMatrix matrix;

  static LinearMap identity(const System& sys);

  /// Acts on a raw operator of the input system.
  CMatrix apply(const CMatrix& op) const;

  /// this . before
  LinearMap after(const LinearMap& before) const;

  LinearMap operator+(const LinearMap& other) const;
  LinearMap operator-(const LinearMap& other) const;
  LinearMap operator*(double s) const;
};

LinearMap tensor(const LinearMap& f, const LinearMap& g);

/// f (x) id_anc
LinearMap lift(const LinearMap& f, const System& anc);

/// (f (x) id_anc) applied to `op`, an operator on f.input (x) anc, without
/// forming the lifted superoperator.
CMatrix apply_lifted(const LinearMap& f, const CMatrix& op, const System& anc);

// ---------------------------------------------------------------------------
// Processes

struct KrausList {
  std::vector<CMatrix> ops;
};

struct StochasticMatrix {
  RMatrix matrix;
};

using ProcessRepr = std::variant<KrausList, StochasticMatrix>;

/// A physical transformation. Quantum-family processes carry Kraus operators
/// (each one entrywise real or entrywise imaginary on the real backend);
/// classical processes carry a substochastic matrix.
class Process {
 public:
  Process(System input, System output, ProcessRepr repr,
          double tol = kDefaultTolerance);

  static Process identity(const System& sys);
  static Process preparation(const State& s);
  static Process measurement(const Effect& e);

  const System& input() const { return input_; }
  const System& output() const { return output_; }
  const ProcessRepr& repr() const { return repr_; }
  bool is_deterministic() const { return deterministic_; }
  bool is_reversible() const { return reversible_; }

  LinearMap to_map() const;

  /// p . this, with p in [0, 1].
  Process scaled(double p) const;

 private:
  System input_;
  System output_;
  ProcessRepr repr_;
  bool deterministic_ = false;
  bool reversible_ = false;
};

State apply(const Process& p, const State& s);

/// First-factor lift: P (x) id_anc.
Process lift(const Process& p, const System& anc);
Process tensor(const Process& a, const Process& b);

/// after . before
Process compose(const Process& after, const Process& before);

/// Coarse-grained sum of two transformations of the same type.
Process sum(const Process& a, const Process& b);

/// The state prepared by a process with trivial input.
State prepared_state(const Process& prep);

// ---------------------------------------------------------------------------
// Tests

struct Branch {
  std::string label;
  Process process;
};

class Test {
 public:
  /// Branches share input/output, labels are distinct and the coarse-graining
  /// over all outcomes is deterministic.
  explicit Test(std::vector<Branch> branches, double tol = kDefaultTolerance);

  const std::vector<Branch>& branches() const { return branches_; }
  const System& input() const { return branches_.front().process.input(); }
  const System& output() const { return branches_.front().process.output(); }
  std::size_t size() const { return branches_.size(); }

  /// Coarse-graining over every outcome.
  Process total() const;

 private:
  std::vector<Branch> branches_;
};

/// Joins outcomes per block of `partition`; blocks must be disjoint and cover
/// every label. The new label of a block is its labels joined with '+'.
Test coarse_grain(const Test& t, const std::vector<std::vector<std::string>>& partition);

/// Outcome "i:label" carries probs[i] times branch `label` of test i.
Test randomize(const std::vector<Test>& tests, const ProbVector& probs);

/// Builds a source (preparation test) from subnormalised states.
Test make_source(const std::vector<State>& states, double tol = kDefaultTolerance);

}  // namespace gpt_tomo
