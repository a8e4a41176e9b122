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

#include "gpt_tomo/backends.hpp"

#include <cmath>
#include <random>

namespace gpt_tomo {

namespace {

enum class Salt : std::uint64_t {
  State = 0x5157,
  PureState,
  Process,
  Operation,
  Basis,
};

class Sampler {
 public:
  Sampler(std::uint64_t seed, Salt salt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(salt)};
    engine_.seed(seq);
  }

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }

  CMatrix gaussian(int rows, int cols, bool real) {
    CMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j) {
      for (int i = 0; i < rows; ++i) {
        const double re = normal();
        const double im = real ? 0.0 : normal();
        m(i, j) = Complex(re, im);
      }
    }
    return m;
  }

  RVector dirichlet(int n) {
    RVector v(n);
    for (int i = 0; i < n; ++i) v(i) = -std::log(1.0 - uniform());
    return v / v.sum();
  }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

CMatrix hermitian_unit_basis(int n) {
  const int size = n * n;
  CMatrix u(size, size);
  for (int i = 0; i < size; ++i) u.col(i) = linalg::vec(linalg::operator_basis_element(n, i));
  return u;
}

void require_quantum(const System& sys, const char* what) {
  if (!is_quantum_family(sys.backend())) {
    throw Unsupported(std::string(what) + " is not available on the classical backend");
  }
}

}  // namespace

std::vector<State> spanning_states(const System& sys) {
  const int n = sys.dim();
  std::vector<State> out;
  if (sys.backend() == Backend::Classical) {
    for (int k = 0; k < n; ++k) {
      RVector p = RVector::Zero(n);
      p(k) = 1.0;
      out.push_back(State::from_probabilities(sys, p));
    }
    return out;
  }
  const double r = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < n; ++k) {
    CVector v = CVector::Zero(n);
    v(k) = 1.0;
    out.push_back(State::from_vector(sys, v));
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      CVector v = CVector::Zero(n);
      v(j) = r;
      v(k) = r;
      out.push_back(State::from_vector(sys, v));
    }
  }
  if (sys.backend() == Backend::Quantum) {
    for (int j = 0; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        CVector v = CVector::Zero(n);
        v(j) = r;
        v(k) = Complex(0.0, r);
        out.push_back(State::from_vector(sys, v));
      }
    }
  }
  return out;
}

std::vector<Effect> spanning_effects(const System& sys) {
  std::vector<Effect> out;
  for (const auto& s : spanning_states(sys)) out.emplace_back(sys, s.op());
  return out;
}

State complete_state(const System& sys) {
  const int n = sys.dim();
  return State(sys, CMatrix::Identity(n, n) / static_cast<double>(n));
}

State purify(const State& rho) {
  const System& a = rho.system();
  require_quantum(a, "purification");
  const int n = a.dim();
  const System ar = tensor_systems(a, a);
  auto [vals, vecs] = linalg::eigh(rho.op(), a.backend() == Backend::Real);
  int rank = 0;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) > kDefaultTolerance) ++rank;
  }
  if (rank <= 1) {
    CMatrix ref = CMatrix::Zero(n, n);
    ref(0, 0) = 1.0;
    return State(ar, linalg::kron(rho.op(), ref));
  }
  const CMatrix root = linalg::psd_sqrt(rho.op(), a.backend() == Backend::Real);
  CVector psi(n * n);
  for (int x = 0; x < n; ++x) {
    for (int k = 0; k < n; ++k) psi(x * n + k) = root(x, k);
  }
  return State::from_vector(ar, psi);
}

CVector pure_vector(const State& s, double tol) {
  auto [vals, vecs] = linalg::eigh(s.op(), s.system().backend() != Backend::Quantum);
  const Eigen::Index top = vals.size() - 1;
  if (top >= 1 && vals(top - 1) > tol) {
    throw InvalidArgument("pure_vector: state is not rank one");
  }
  CVector v = vecs.col(top) * std::sqrt(std::max(vals(top), 0.0));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > tol) {
      v *= std::conj(v(i)) / std::abs(v(i));
      break;
    }
  }
  return v;
}

State maximally_entangled(const System& a) {
  const int n = a.dim();
  const System aa = tensor_systems(a, a);
  if (a.backend() == Backend::Classical) {
    RVector p = RVector::Zero(n * n);
    for (int k = 0; k < n; ++k) p(k * n + k) = 1.0 / n;
    return State::from_probabilities(aa, p);
  }
  CVector psi = CVector::Zero(n * n);
  for (int k = 0; k < n; ++k) psi(k * n + k) = 1.0 / std::sqrt(static_cast<double>(n));
  return State::from_vector(aa, psi);
}

Effect maximally_entangled_effect(const System& a) {
  const int n = a.dim();
  const System aa = tensor_systems(a, a);
  if (a.backend() == Backend::Classical) {
    CMatrix e = CMatrix::Zero(n * n, n * n);
    for (int k = 0; k < n; ++k) e(k * n + k, k * n + k) = 1.0;
    return Effect(aa, e);
  }
  return Effect(aa, maximally_entangled(a).op());
}

// ---------------------------------------------------------------------------

RVector process_coordinates(const LinearMap& map) {
  if (!is_quantum_family(map.input.backend())) {
    RMatrix m = map.matrix.real();
    return Eigen::Map<const RVector>(m.data(), m.size());
  }
  const CMatrix u_in = hermitian_unit_basis(map.input.dim());
  const CMatrix u_out = hermitian_unit_basis(map.output.dim());
  RMatrix t = (u_out.adjoint() * map.matrix * u_in).real();
  return Eigen::Map<const RVector>(t.data(), t.size());
}

LinearMap map_from_coordinates(const System& input, const System& output,
                               const RVector& coords) {
  if (input.backend() != output.backend()) {
    throw BackendMismatch("map_from_coordinates: " + input.str() + " vs " + output.str());
  }
  if (!is_quantum_family(input.backend())) {
    const int n = input.dim();
    const int m = output.dim();
    if (coords.size() != n * m) throw InvalidArgument("coordinate length mismatch");
    RMatrix mat = Eigen::Map<const RMatrix>(coords.data(), m, n);
    return LinearMap{input, output, mat.cast<Complex>()};
  }
  const int n2 = input.dim() * input.dim();
  const int m2 = output.dim() * output.dim();
  if (coords.size() != n2 * m2) throw InvalidArgument("coordinate length mismatch");
  RMatrix t = Eigen::Map<const RMatrix>(coords.data(), m2, n2);
  const CMatrix u_in = hermitian_unit_basis(input.dim());
  const CMatrix u_out = hermitian_unit_basis(output.dim());
  return LinearMap{input, output, u_out * t.cast<Complex>() * u_in.adjoint()};
}

LinearMap ProcessSpaceBasis::element_map(std::size_t i) const {
  return map_from_coordinates(input, output, elements.at(i));
}

ProcessSpaceBasis process_space_basis(const System& input, const System& output,
                                      std::uint64_t seed) {
  if (input.backend() != output.backend()) {
    throw BackendMismatch("process_space_basis: " + input.str() + " vs " + output.str());
  }
  ProcessSpaceBasis basis{input, output, {}, 0};
  const int n = input.dim();
  const int m = output.dim();
  int total = 0;
  switch (input.backend()) {
    case Backend::Classical:
      total = n * m;
      break;
    case Backend::Quantum:
      total = n * n * m * m;
      break;
    case Backend::Real: {
      // Span of K rho K^T over real K, sampled. Imaginary Kraus operators
      // iK give the same maps, so alternate them for coverage of the class.
      Sampler rng(seed, Salt::Basis);
      const int samples = n * n * m * m + 4;
      RMatrix columns(n * n * m * m, samples);
      for (int s = 0; s < samples; ++s) {
        CMatrix k = rng.gaussian(m, n, true);
        if (s % 2 == 1) k *= Complex(0.0, 1.0);
        Process p(input, output, KrausList{{k / (1.0 + k.norm())}});
        columns.col(s) = process_coordinates(p.to_map());
      }
      const RMatrix span = linalg::column_span_basis(columns);
      for (Eigen::Index c = 0; c < span.cols(); ++c) basis.elements.push_back(span.col(c));
      basis.dim = static_cast<int>(span.cols());
      return basis;
    }
  }
  for (int i = 0; i < total; ++i) basis.elements.push_back(RVector::Unit(total, i));
  basis.dim = total;
  return basis;
}

// ---------------------------------------------------------------------------

State random_state(const System& sys, std::uint64_t seed) {
  Sampler rng(seed, Salt::State);
  const int n = sys.dim();
  if (sys.backend() == Backend::Classical) {
    return State::from_probabilities(sys, rng.dirichlet(n));
  }
  const CMatrix g = rng.gaussian(n, n, sys.backend() == Backend::Real);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return State(sys, rho);
}

State random_pure_state(const System& sys, std::uint64_t seed) {
  Sampler rng(seed, Salt::PureState);
  const int n = sys.dim();
  if (sys.backend() == Backend::Classical) {
    RVector p = RVector::Zero(n);
    p(static_cast<int>(rng.uniform() * n) % n) = 1.0;
    return State::from_probabilities(sys, p);
  }
  CVector v = rng.gaussian(n, 1, sys.backend() == Backend::Real).col(0);
  v.normalize();
  return State::from_vector(sys, v);
}

Process random_process(const System& input, const System& output, std::uint64_t seed) {
  Sampler rng(seed, Salt::Process);
  const int n = input.dim();
  const int m = output.dim();
  if (input.backend() == Backend::Classical) {
    RMatrix mat(m, n);
    for (int j = 0; j < n; ++j) mat.col(j) = rng.dirichlet(m);
    return Process(input, output, StochasticMatrix{mat});
  }
  // An environment of size n m gives generic channels and m env >= n.
  const int env = n * m;
  const CMatrix g = rng.gaussian(m * env, n, input.backend() == Backend::Real);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(m * env, n);
  KrausList kraus;
  for (int j = 0; j < env; ++j) {
    CMatrix k(m, n);
    for (int b = 0; b < m; ++b) k.row(b) = q.row(b * env + j);
    kraus.ops.push_back(k);
  }
  return Process(input, output, std::move(kraus));
}

Process random_operation(const System& input, const System& output, std::uint64_t seed) {
  Sampler rng(seed, Salt::Operation);
  const int n = input.dim();
  const int m = output.dim();
  if (input.backend() == Backend::Classical) {
    RMatrix mat(m, n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < m; ++i) mat(i, j) = rng.uniform();
    }
    const double worst = mat.colwise().sum().maxCoeff();
    return Process(input, output, StochasticMatrix{mat * (rng.uniform() / worst)});
  }
  CMatrix k = rng.gaussian(m, n, input.backend() == Backend::Real);
  Eigen::JacobiSVD<CMatrix> svd(k);
  k *= std::sqrt(rng.uniform()) / svd.singularValues()(0);
  return Process(input, output, KrausList{{k}});
}

}  // namespace gpt_tomo
