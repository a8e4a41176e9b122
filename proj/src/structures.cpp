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

#include "gpt_tomo/structures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gpt_tomo/backends.hpp"
#include "gpt_tomo/tomography.hpp"

namespace gpt_tomo {

namespace {

// Eigencomponents below this weight are dropped when building Kraus
// operators from spectral decompositions.
constexpr double kSpectralCutoff = 1e-14;

bool is_real_backend(const System& s) { return s.backend() == Backend::Real; }

// Unnormalised eigenvectors sqrt(lambda_i) v_i of a PSD operator.
std::vector<CVector> weighted_eigenvectors(const CMatrix& op, bool real) {
  auto [vals, vecs] = linalg::eigh(op, real);
  std::vector<CVector> out;
  for (Eigen::Index i = vals.size() - 1; i >= 0; --i) {
    if (vals(i) > kSpectralCutoff) out.push_back(std::sqrt(vals(i)) * vecs.col(i));
  }
  return out;
}

// A-marginal of an operator on a (x) rest.
CMatrix a_marginal(const CMatrix& op, int da) {
  const int rest = static_cast<int>(op.rows()) / da;
  const int dims[2] = {da, rest};
  const int keep[1] = {0};
  return linalg::partial_trace(op, dims, keep);
}

// (I_A (x) T) applied to an operator on a (x) T.input.
CMatrix apply_on_second(const CMatrix& op, const System& a, const Process& t) {
  return tensor(LinearMap::identity(a), t.to_map()).apply(op);
}

// Coefficient matrix C(a, r) = psi[a * dr + r].
CMatrix coefficients(const CVector& psi, int da, int dr) {
  CMatrix c(da, dr);
  for (int x = 0; x < da; ++x) {
    for (int r = 0; r < dr; ++r) c(x, r) = psi(x * dr + r);
  }
  return c;
}

// Unitary U on the second factor with (I (x) U) psi = psi2, or nothing when
// the first-factor marginals differ. Solves C U^T = C2 as an orthogonal
// Procrustes problem.
std::optional<CMatrix> connect_vectors(const CVector& psi, const CVector& psi2, int da,
                                       bool real, double tol) {
  const int dr = static_cast<int>(psi.size()) / da;
  CMatrix c = coefficients(psi, da, dr);
  CMatrix c2 = coefficients(psi2, da, dr);
  if (real) {
    c = c.real().cast<Complex>();
    c2 = c2.real().cast<Complex>();
  }
  if (max_deviation(c * c.adjoint(), c2 * c2.adjoint()) > tol) return std::nullopt;
  const CMatrix x = linalg::closest_unitary(c.adjoint() * c2);
  if (max_deviation(c * x, c2) > tol) return std::nullopt;
  return CMatrix(x.transpose());
}

}  // namespace

// ---------------------------------------------------------------------------

TeleportationWitness teleportation_witness(const System& a) {
  const double d = a.dim();
  const double p = is_quantum_family(a.backend()) ? 1.0 / (d * d) : 1.0 / d;
  TeleportationWitness w{maximally_entangled(a), maximally_entangled_effect(a), Scalar(p)};
  const double residual = teleportation_residual(w.phi, w.effect, p, a);
  if (residual > kDefaultTolerance) {
    throw Error("teleportation witness failed its own check");
  }
  return w;
}

LinearMap teleportation_map(const State& phi, const Effect& effect, const System& a) {
  const System r = remainder(phi.system(), a);
  if (!(effect.system() == tensor_systems(r, a))) {
    throw SystemMismatch("teleportation effect must live on " + tensor_systems(r, a).str());
  }
  const int n = a.dim();
  const int dims[3] = {n, r.dim(), n};
  const int keep[1] = {0};
  if (!is_quantum_family(a.backend())) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      CMatrix e = CMatrix::Zero(n, n);
      e(i, i) = 1.0;
      const CMatrix y = linalg::kron(phi.op(), e);
      m.col(i) = linalg::partial_contract(y, dims, keep, effect.op()).diagonal();
    }
    return LinearMap{a, a, m};
  }
  CMatrix m(n * n, n * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      CMatrix e = CMatrix::Zero(n, n);
      e(i, j) = 1.0;
      const CMatrix y = linalg::kron(phi.op(), e);
      m.col(i + n * j) = linalg::vec(linalg::partial_contract(y, dims, keep, effect.op()));
    }
  }
  return LinearMap{a, a, m};
}

double teleportation_residual(const State& phi, const Effect& effect, double p,
                              const System& a) {
  const LinearMap map = teleportation_map(phi, effect, a);
  double worst = 0.0;
  for (const auto& s : spanning_states(a)) {
    worst = std::max(worst, linalg::trace_norm(map.apply(s.op()) - p * s.op()));
  }
  return worst;
}

bool verify_teleportation(const State& phi, const Effect& effect, double p, const System& a,
                          double tol) {
  return p > 0.0 && teleportation_residual(phi, effect, p, a) <= tol;
}

State chi_state(const State& phi, const State& omega, const Effect& t) {
  const System& a = omega.system();
  const System r = remainder(phi.system(), a);
  if (!(t.system() == tensor_systems(r, a))) {
    throw SystemMismatch("chi_state: effect must live on " + tensor_systems(r, a).str());
  }
  const int dims[3] = {a.dim(), r.dim(), a.dim()};
  const int keep[1] = {0};
  const CMatrix y = linalg::kron(phi.op(), omega.op());
  return State(a, linalg::partial_contract(y, dims, keep, t.op()));
}

// ---------------------------------------------------------------------------

ExtensionWitness extension_from_teleportation(const TeleportationWitness& w,
                                              const State& gamma, const System& a) {
  const System r = remainder(w.phi.system(), a);
  const System e = remainder(gamma.system(), a);
  const int da = a.dim();
  const int dr = r.dim();
  const int de = e.dim();

  std::optional<Process> t;
  if (!is_quantum_family(a.backend())) {
    // M(e', r) = sum_a E(r, a) Gamma(a, e')
    RMatrix m = RMatrix::Zero(de, dr);
    for (int x = 0; x < dr; ++x) {
      for (int y = 0; y < da; ++y) {
        const double ev = w.effect.op()(x * da + y, x * da + y).real();
        for (int z = 0; z < de; ++z) m(z, x) += ev * gamma.op()(y * de + z, y * de + z).real();
      }
    }
    t.emplace(r, e, StochasticMatrix{m});
  } else {
    // K_{i,j} = (<eps_i| (x) I_E)(I_R (x) |gamma_j>)
    const bool real = is_real_backend(a);
    KrausList kraus;
    for (const auto& eps : weighted_eigenvectors(w.effect.op(), real)) {
      for (const auto& g : weighted_eigenvectors(gamma.op(), real)) {
        CMatrix k = CMatrix::Zero(de, dr);
        for (int x = 0; x < dr; ++x) {
          for (int y = 0; y < da; ++y) {
            const Complex c = std::conj(eps(x * da + y));
            for (int z = 0; z < de; ++z) k(z, x) += c * g(y * de + z);
          }
        }
        kraus.ops.push_back(k);
      }
    }
    t.emplace(r, e, std::move(kraus));
  }
  const double p = w.p.value;
  const double dev = linalg::trace_norm(apply_on_second(w.phi.op(), a, *t) - p * gamma.op());
  if (dev > kDefaultTolerance) throw Error("extension witness failed its own check");
  return ExtensionWitness{w.p, *t};
}

bool verify_universal_extension(const State& psi, const State& rho, const State& gamma,
                                double p, const Process& t, double tol) {
  const System& a = rho.system();
  const int da = a.dim();
  if (!(p > 0.0)) return false;
  if (!(t.input() == remainder(psi.system(), a)) ||
      !(t.output() == remainder(gamma.system(), a))) {
    return false;
  }
  if (max_deviation(a_marginal(psi.op(), da), rho.op()) > tol) return false;
  if (max_deviation(a_marginal(gamma.op(), da), rho.op()) > tol) return false;
  return linalg::trace_norm(apply_on_second(psi.op(), a, t) - p * gamma.op()) <= tol;
}

// ---------------------------------------------------------------------------

std::optional<Process> connect_purifications(const State& psi, const State& psi2,
                                             const System& a, double tol) {
  if (!is_quantum_family(a.backend())) {
    throw Unsupported("purifications are not available on the classical backend");
  }
  if (!(psi.system() == psi2.system())) {
    throw SystemMismatch("connect_purifications: " + psi.system().str() + " vs " +
                         psi2.system().str());
  }
  const System r = remainder(psi.system(), a);
  auto u = connect_vectors(pure_vector(psi, tol), pure_vector(psi2, tol), a.dim(),
                           is_real_backend(a), tol);
  if (!u) return std::nullopt;
  Process out(r, r, KrausList{{*u}}, tol);
  if (max_deviation(apply_on_second(psi.op(), a, out), psi2.op()) > tol) return std::nullopt;
  return out;
}

Process channel_from_purification(const State& psi, const State& gamma, const System& a,
                                  double tol) {
  if (!is_quantum_family(a.backend())) {
    throw Unsupported("purifications are not available on the classical backend");
  }
  const Backend backend = a.backend();
  const System r = remainder(psi.system(), a);
  const System e = remainder(gamma.system(), a);
  const int da = a.dim();
  const int dr = r.dim();
  const int de = e.dim();
  if (max_deviation(a_marginal(psi.op(), da), a_marginal(gamma.op(), da)) > tol) {
    throw InvalidArgument("channel_from_purification: marginals on " + a.str() + " differ");
  }

  // Purify gamma on A (x) E (x) F, then embed both pure states in
  // A (x) S with S = R (x) E (x) F and connect them by a unitary on S.
  const CVector g = pure_vector(purify(gamma), tol);
  const CVector v = pure_vector(psi, tol);
  const int df = da * de;
  const int ds = dr * de * df;
  CVector v_big = CVector::Zero(da * ds);
  CVector g_big = CVector::Zero(da * ds);
  for (int x = 0; x < da; ++x) {
    for (int y = 0; y < dr; ++y) v_big(x * ds + y * de * df) = v(x * dr + y);
    for (int z = 0; z < de * df; ++z) g_big(x * ds + z) = g(x * de * df + z);
  }
  const auto u = connect_vectors(v_big, g_big, da, backend == Backend::Real, tol);
  if (!u) throw Error("channel_from_purification: purifications could not be connected");

  // T(X) = Tr_{R F}[U (X (x) |0><0|_{E F}) U^dagger]
  KrausList kraus;
  for (int y2 = 0; y2 < dr; ++y2) {
    for (int f = 0; f < df; ++f) {
      CMatrix k(de, dr);
      for (int z = 0; z < de; ++z) {
        for (int y = 0; y < dr; ++y) k(z, y) = (*u)(y2 * de * df + z * df + f, y * de * df);
      }
      kraus.ops.push_back(k);
    }
  }
  Process t(r, e, std::move(kraus), tol);
  if (linalg::trace_norm(apply_on_second(psi.op(), a, t) - gamma.op()) > tol) {
    throw Error("channel from purification failed its own check");
  }
  return t;
}

// ---------------------------------------------------------------------------

PreparationWitness preparationally_faithful_witness(const State& phi, const State& target,
                                                    const System& a, double tol) {
  if (max_deviation(phi.op(), maximally_entangled(a).op()) > tol) {
    throw InvalidArgument("preparational witness needs the maximally entangled state on " +
                          a.str());
  }
  const System b = remainder(target.system(), a);
  const int da = a.dim();
  const int db = b.dim();

  std::optional<Process> s;
  double norm = 0.0;
  if (!is_quantum_family(a.backend())) {
    // S(e_a) = sum_b P(a, b) e_b / N with N the largest row sum.
    RMatrix m(db, da);
    for (int x = 0; x < da; ++x) {
      for (int y = 0; y < db; ++y) m(y, x) = target.op()(x * db + y, x * db + y).real();
    }
    norm = m.colwise().sum().maxCoeff();
    if (norm <= 0.0) throw InvalidArgument("preparational witness: zero target");
    s.emplace(a, b, StochasticMatrix{m / norm});
  } else {
    // Each weighted eigenvector c_i of the target gives K_i = c_i^T; the
    // common factor N = ||sum K_i^dagger K_i|| keeps the branch physical.
    std::vector<CMatrix> ks;
    CMatrix total = CMatrix::Zero(da, da);
    for (const auto& c : weighted_eigenvectors(target.op(), is_real_backend(a))) {
      CMatrix k = coefficients(c, da, db).transpose();
      total += k.adjoint() * k;
      ks.push_back(std::move(k));
    }
    norm = ks.empty() ? 0.0 : linalg::max_eigenvalue(total);
    if (norm <= 0.0) throw InvalidArgument("preparational witness: zero target");
    for (auto& k : ks) k /= std::sqrt(norm);
    s.emplace(a, b, KrausList{std::move(ks)}, tol);
  }
  const double p = 1.0 / (da * norm);
  const double residual =
      linalg::trace_norm(apply_on_second(phi.op(), a, *s) - p * target.op());
  if (residual > tol) throw Error("preparational witness failed its own check");
  return PreparationWitness{Scalar(p), *s, residual};
}

CheckReport is_doubly_preparationally_faithful(const System& a, const System& b, int samples,
                                               std::uint64_t seed, double tol) {
  const State phi = maximally_entangled(a);
  double worst = 0.0;
  double min_p = std::numeric_limits<double>::infinity();
  int generated = 0;
  bool ok = true;
  for (const System& other : {a, b}) {
    const System target_sys = tensor_systems(a, other);
    for (int k = 0; k < samples; ++k) {
      for (const State& target : {random_pure_state(target_sys, seed + k),
                                  random_state(target_sys, seed + k)}) {
        try {
          const auto w = preparationally_faithful_witness(phi, target, a, tol);
          worst = std::max(worst, w.residual);
          min_p = std::min(min_p, w.p.value);
          ++generated;
        } catch (const Error&) {
          ok = false;
        }
      }
    }
  }
  const CheckReport local = is_locally_tomographic(a, b, tol);
  CheckReport report;
  report.check = "prep-faithful";
  report.tolerance = tol;
  report.seed = seed;
  report.pass = ok && (a.backend() != Backend::Quantum || local.pass);
  report.details["backend"] = std::string(to_string(a.backend()));
  report.details["system_a"] = a.str();
  report.details["system_b"] = b.str();
  report.details["targets"] = generated;
  report.details["max_residual"] = worst;
  report.details["min_p"] = generated ? min_p : 0.0;
  report.details["local_tomography"] = local.pass;
  report.details["dim_composite"] = local.details["dim_composite"];
  report.details["dim_product"] = local.details["dim_product"];
  return report;
}

}  // namespace gpt_tomo
