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

#include "gpt_tomo/tomography.hpp"

#include <algorithm>
#include <cmath>

namespace gpt_tomo {

namespace {

// A containment weight this close to one is reported as exactly one.
constexpr double kUnitSlack = 1e-13;
constexpr int kBisectionSteps = 60;
constexpr int kSampledExtensions = 3;

void require_same_type(const Process& p, const Process& p2, const char* what) {
  if (!(p.input() == p2.input()) || !(p.output() == p2.output())) {
    throw SystemMismatch(std::string(what) + ": processes have different types");
  }
}

void require_deterministic(const State& s, const char* what) {
  if (!s.is_deterministic()) {
    throw InvalidArgument(std::string(what) + ": state must be deterministic");
  }
}

RVector output_coords(const System& sys, const CMatrix& op) {
  if (!is_quantum_family(sys.backend())) return op.diagonal().real();
  return linalg::operator_coords(op, false);
}

bool agree_on(const Process& p, const Process& p2, const State& s, double tol) {
  return max_deviation(apply_lifted(p, s), apply_lifted(p2, s)) <= tol;
}

// (id_A (x) T) g, for g on A (x) R and T: R -> E.
State apply_second(const State& g, const System& a, const Process& t) {
  const LinearMap m = tensor(LinearMap::identity(a), t.to_map());
  return State(tensor_systems(a, t.output()), m.apply(g.op()));
}

}  // namespace

double max_deviation(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument("max_deviation: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

CMatrix apply_lifted(const Process& p, const State& state) {
  const System anc = remainder(state.system(), p.input());
  return apply_lifted(p.to_map(), state.op(), anc);
}

// ---------------------------------------------------------------------------

bool equal_on_source(const Process& p, const Process& p2, const Test& source, double tol) {
  require_same_type(p, p2, "equal_on_source");
  if (!source.input().is_trivial() || !(source.output() == p.input())) {
    throw SystemMismatch("equal_on_source: source does not prepare " + p.input().str());
  }
  for (const auto& branch : source.branches()) {
    const State s = prepared_state(branch.process);
    if (!agree_on(p, p2, s, tol)) return false;
  }
  return true;
}

bool equal_upon_input(const Process& p, const Process& p2, const State& rho, double tol) {
  require_same_type(p, p2, "equal_upon_input");
  require_deterministic(rho, "equal_upon_input");
  for (const auto& s : face_spanning_states(rho, tol)) {
    if (!agree_on(p, p2, s, tol)) return false;
  }
  return true;
}

bool equal_on_extensions(const Process& p, const Process& p2, const State& rho, double tol) {
  require_same_type(p, p2, "equal_on_extensions");
  require_deterministic(rho, "equal_on_extensions");
  const State dominant = is_quantum_family(rho.system().backend()) ? purify(rho)
                                                                    : copy_extension(rho);
  if (!agree_on(p, p2, dominant, tol)) return false;
  for (int k = 0; k < kSampledExtensions; ++k) {
    if (!agree_on(p, p2, random_extension(rho, 0x9e37 + k), tol)) return false;
  }
  return true;
}

bool equal_processes(const Process& p, const Process& p2, double tol) {
  require_same_type(p, p2, "equal_processes");
  return agree_on(p, p2, find_faithful_state(p.input()), tol);
}

// ---------------------------------------------------------------------------

std::optional<Containment> contains(const State& rho, const State& sigma, double tol) {
  if (!(rho.system() == sigma.system())) {
    throw SystemMismatch("contains: " + rho.system().str() + " vs " + sigma.system().str());
  }
  require_deterministic(rho, "contains");
  require_deterministic(sigma, "contains");
  const System& sys = rho.system();

  double p = 0.0;
  if (!is_quantum_family(sys.backend())) {
    const RVector r = rho.op().diagonal().real();
    const RVector s = sigma.op().diagonal().real();
    p = 1.0;
    for (Eigen::Index i = 0; i < r.size(); ++i) {
      if (s(i) <= 0.0) continue;
      if (r(i) <= tol) return std::nullopt;
      p = std::min(p, r(i) / s(i));
    }
  } else {
    auto [vals, vecs] = linalg::eigh(rho.op());
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
      if (vals(i) > tol) {
        support.push_back(i);
        continue;
      }
      const Complex leak = vecs.col(i).adjoint() * sigma.op() * vecs.col(i);
      if (leak.real() > tol) return std::nullopt;
    }
    // Work on the support of rho, where rho is strictly positive, so that
    // rounding noise in its kernel cannot make every p look infeasible.
    CMatrix v(vecs.rows(), static_cast<Eigen::Index>(support.size()));
    for (std::size_t j = 0; j < support.size(); ++j) v.col(j) = vecs.col(support[j]);
    const CMatrix r_face = v.adjoint() * rho.op() * v;
    const CMatrix s_face = v.adjoint() * sigma.op() * v;
    auto feasible = [&](double q) {
      return linalg::min_eigenvalue(r_face - q * s_face) >= 0.0;
    };
    if (feasible(1.0)) {
      p = 1.0;
    } else {
      double lo = 0.0;
      double hi = 1.0;
      for (int it = 0; it < kBisectionSteps; ++it) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? lo : hi) = mid;
      }
      p = lo;
    }
  }
  if (p <= 0.0) return std::nullopt;
  if (p >= 1.0 - kUnitSlack) return Containment{Scalar(1.0), rho};
  const CMatrix tau = (rho.op() - p * sigma.op()) / (1.0 - p);
  return Containment{Scalar(p), State(sys, tau, tol)};
}

bool is_complete(const State& rho, double tol) {
  require_deterministic(rho, "is_complete");
  if (!is_quantum_family(rho.system().backend())) {
    return rho.op().diagonal().real().minCoeff() > tol;
  }
  return linalg::min_eigenvalue(rho.op()) > tol;
}

std::vector<State> face_spanning_states(const State& rho, double tol) {
  const System& sys = rho.system();
  const int n = sys.dim();
  std::vector<State> out;
  if (!is_quantum_family(sys.backend())) {
    for (int i = 0; i < n; ++i) {
      if (rho.op()(i, i).real() <= tol) continue;
      RVector e = RVector::Zero(n);
      e(i) = 1.0;
      out.push_back(State::from_probabilities(sys, e));
    }
    return out;
  }
  auto [vals, vecs] = linalg::eigh(rho.op(), sys.backend() == Backend::Real);
  std::vector<CVector> support;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) > tol) support.push_back(vecs.col(i));
  }
  const double r = 1.0 / std::sqrt(2.0);
  for (const auto& v : support) out.push_back(State::from_vector(sys, v));
  for (std::size_t j = 0; j < support.size(); ++j) {
    for (std::size_t k = j + 1; k < support.size(); ++k) {
      out.push_back(State::from_vector(sys, r * (support[j] + support[k])));
      if (sys.backend() == Backend::Quantum) {
        out.push_back(State::from_vector(sys, r * (support[j] + Complex(0, 1) * support[k])));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

State copy_extension(const State& rho) {
  const System& a = rho.system();
  if (is_quantum_family(a.backend())) {
    throw Unsupported("copy_extension is defined for the classical backend");
  }
  const int n = a.dim();
  RVector p = RVector::Zero(n * n);
  for (int i = 0; i < n; ++i) p(i * n + i) = rho.op()(i, i).real();
  return State::from_probabilities(tensor_systems(a, a), p);
}

State random_extension(const State& rho, std::uint64_t seed) {
  require_deterministic(rho, "random_extension");
  const System& a = rho.system();
  const Backend b = a.backend();
  const int family = static_cast<int>(seed % 3);
  const System e = System::atomic(b, 2 + static_cast<int>((seed / 3) % 2));
  if (family == 2) return tensor(rho, random_state(e, seed));

  const State root = is_quantum_family(b) ? purify(rho) : copy_extension(rho);
  if (family == 0 || !is_quantum_family(b)) {
    return apply_second(root, a, random_process(a, e, seed));
  }
  // Measure the purifying system with a random instrument and record the
  // outcome in E.
  const Process inst = random_process(a, System::atomic(b, 1), seed);
  const auto& ks = std::get<KrausList>(inst.repr()).ops;
  const int outcomes = static_cast<int>(ks.size());
  const System rec = System::atomic(b, outcomes);
  KrausList kraus;
  for (int j = 0; j < outcomes; ++j) {
    CMatrix k = CMatrix::Zero(outcomes, a.dim());
    k.row(j) = ks[j].row(0);
    kraus.ops.push_back(k);
  }
  return apply_second(root, a, Process(a, rec, std::move(kraus)));
}

// ---------------------------------------------------------------------------

RMatrix lifting_matrix(const State& phi, const ProcessSpaceBasis& basis) {
  const System anc = remainder(phi.system(), basis.input);
  const System out = tensor_systems(basis.output, anc);
  const int rows = is_quantum_family(out.backend()) ? out.dim() * out.dim() : out.dim();
  RMatrix m(rows, basis.dim);
  for (int i = 0; i < basis.dim; ++i) {
    const CMatrix y = apply_lifted(basis.element_map(i), phi.op(), anc);
    m.col(i) = output_coords(out, y);
  }
  return m;
}

bool tomographically_geq(const State& phi, const State& psi, const System& a, const System& b,
                         std::uint64_t seed) {
  const ProcessSpaceBasis basis = process_space_basis(a, b, seed);
  const RMatrix m_phi = lifting_matrix(phi, basis);
  const RMatrix m_psi = lifting_matrix(psi, basis);
  RMatrix stacked(m_phi.rows() + m_psi.rows(), basis.dim);
  stacked << m_phi, m_psi;
  return linalg::numerical_rank(stacked) == linalg::numerical_rank(m_phi);
}

FaithfulnessRank faithfulness_rank(const State& phi, const System& a, const System& b,
                                   std::uint64_t seed) {
  const ProcessSpaceBasis basis = process_space_basis(a, b, seed);
  FaithfulnessRank r;
  r.rank = linalg::numerical_rank(lifting_matrix(phi, basis));
  r.process_dim = basis.dim;
  r.ancilla_dim = phi.system().dim() / a.dim();
  return r;
}

bool is_dynamically_faithful(const State& phi, const System& a, const System& b,
                             std::uint64_t seed) {
  return faithfulness_rank(phi, a, b, seed).faithful();
}

State find_faithful_state(const System& a) {
  if (!is_quantum_family(a.backend())) return maximally_entangled(a);
  return purify(complete_state(a));
}

CheckReport is_locally_tomographic(const System& a, const System& b, double tol) {
  const System ab = tensor_systems(a, b);
  const auto ea = spanning_effects(a);
  const auto eb = spanning_effects(b);
  RMatrix products(ab.effect_dim(), static_cast<Eigen::Index>(ea.size() * eb.size()));
  Eigen::Index c = 0;
  for (const auto& x : ea) {
    for (const auto& y : eb) products.col(c++) = tensor(x, y).coords();
  }
  const int rank = linalg::numerical_rank(products);
  CheckReport report;
  report.check = "local-tomo";
  report.tolerance = tol;
  report.pass = rank == ab.effect_dim();
  report.details["backend"] = std::string(to_string(a.backend()));
  report.details["system_a"] = a.str();
  report.details["system_b"] = b.str();
  report.details["dim_a"] = a.state_dim();
  report.details["dim_b"] = b.state_dim();
  report.details["dim_composite"] = ab.state_dim();
  report.details["dim_product"] = rank;
  return report;
}

}  // namespace gpt_tomo
