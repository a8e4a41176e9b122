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

#include "gpt_tomo/casestudies.hpp"

#include <algorithm>
#include <cmath>

#include "gpt_tomo/backends.hpp"
#include "gpt_tomo/tomography.hpp"

namespace gpt_tomo {

namespace {

constexpr char kPauliNames[4] = {'I', 'X', 'Y', 'Z'};

const System& rebit() {
  static const System s = System::atomic(Backend::Real, 2);
  return s;
}

double spectral_norm(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

}  // namespace

CMatrix pauli(char name) {
  CMatrix m = CMatrix::Zero(2, 2);
  switch (name) {
    case 'I':
      m(0, 0) = m(1, 1) = 1.0;
      break;
    case 'X':
      m(0, 1) = m(1, 0) = 1.0;
      break;
    case 'Y':
      m(0, 1) = Complex(0, -1);
      m(1, 0) = Complex(0, 1);
      break;
    case 'Z':
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    default:
      throw InvalidArgument(std::string("unknown Pauli matrix '") + name + "'");
  }
  return m;
}

RVector pauli_components(const CMatrix& op) {
  int n = 0;
  while ((Eigen::Index{1} << n) < op.rows()) ++n;
  if ((Eigen::Index{1} << n) != op.rows() || op.rows() != op.cols()) {
    throw InvalidArgument("pauli_components: operator is not on qubits");
  }
  const int count = 1 << (2 * n);
  RVector out(count);
  const double norm = std::pow(2.0, -0.5 * n);
  for (int idx = 0; idx < count; ++idx) {
    CMatrix basis = CMatrix::Identity(1, 1);
    for (int f = n - 1; f >= 0; --f) {
      basis = linalg::kron(basis, pauli(kPauliNames[(idx >> (2 * f)) & 3]));
    }
    out(idx) = norm * (basis * op).trace().real();
  }
  return out;
}

double odd_y_weight(const CMatrix& op) {
  const RVector c = pauli_components(op);
  int n = 0;
  while ((1 << (2 * n)) < c.size()) ++n;
  double worst = 0.0;
  for (int idx = 0; idx < c.size(); ++idx) {
    int ys = 0;
    for (int f = 0; f < n; ++f) ys += ((idx >> (2 * f)) & 3) == 2;
    if (ys % 2 == 1) worst = std::max(worst, std::abs(c(idx)));
  }
  return worst;
}

RebitPair rebit_processes() {
  const double r = 1.0 / std::sqrt(2.0);
  Process p(rebit(), rebit(), KrausList{{r * pauli('I'), r * pauli('Y')}});
  Process p_prime(rebit(), rebit(), KrausList{{r * pauli('X'), r * pauli('Z')}});
  return {p, p_prime};
}

std::pair<State, State> wootters_pair() {
  const System two = tensor_systems(rebit(), rebit());
  const CMatrix ii = CMatrix::Identity(4, 4);
  const CMatrix yy = linalg::kron(pauli('Y'), pauli('Y'));
  return {State(two, 0.25 * (ii - yy)), State(two, 0.25 * (ii + yy))};
}

bool CounterexampleReport::pass() const {
  return max_local_deviation <= tolerance && output_deviation <= tolerance &&
         orthogonality_gap <= tolerance && std::abs(trace_distance - 1.0) <= tolerance &&
         local_stats_max_gap <= tolerance && odd_y <= tolerance &&
         faithful_rank == process_dim;
}

CheckReport CounterexampleReport::to_report() const {
  CheckReport r;
  r.check = "demo-rebit";
  r.pass = pass();
  r.tolerance = tolerance;
  r.seed = seed;
  r.details["random_states"] = random_states;
  r.details["max_local_deviation"] = max_local_deviation;
  r.details["output1_pauli"] = to_json(pauli_components(output1.op()));
  r.details["output2_pauli"] = to_json(pauli_components(output2.op()));
  r.details["output_deviation"] = output_deviation;
  r.details["orthogonality_gap"] = orthogonality_gap;
  r.details["trace_distance"] = trace_distance;
  r.details["product_effects"] = product_effects;
  r.details["local_stats_max_gap"] = local_stats_max_gap;
  r.details["odd_y_weight"] = odd_y;
  r.details["faithful_rank"] = faithful_rank;
  r.details["process_dim"] = process_dim;
  return r;
}

CounterexampleReport counterexample_report(double tol, std::uint64_t seed, int random_states) {
  const auto [p, p_prime] = rebit_processes();
  const CMatrix half = CMatrix::Identity(2, 2) / 2.0;

  std::vector<State> inputs = spanning_states(rebit());
  for (int k = 0; k < random_states; ++k) inputs.push_back(random_state(rebit(), seed + k));
  double local = 0.0;
  for (const auto& s : inputs) {
    local = std::max(local, linalg::trace_norm(apply(p, s).op() - half));
    local = std::max(local, linalg::trace_norm(apply(p_prime, s).op() - half));
  }

  const State phi = maximally_entangled(rebit());
  const System two = phi.system();
  const State out1(two, apply_lifted(p, phi));
  const State out2(two, apply_lifted(p_prime, phi));
  const auto [w1, w2] = wootters_pair();

  double gap = 0.0;
  int products = 0;
  for (const auto& a : spanning_effects(rebit())) {
    for (const auto& b : spanning_effects(rebit())) {
      const Effect ab = tensor(a, b);
      gap = std::max(gap, std::abs(pair(ab, out1).value - pair(ab, out2).value));
      ++products;
    }
  }

  const FaithfulnessRank rank = faithfulness_rank(phi, rebit(), rebit(), seed);

  CounterexampleReport r{tol, seed, random_states, local, out1, out2};
  r.output_deviation =
      std::max(max_deviation(out1.op(), w1.op()), max_deviation(out2.op(), w2.op()));
  r.orthogonality_gap = spectral_norm(out1.op() * out2.op());
  r.trace_distance = 0.5 * linalg::trace_norm(out1.op() - out2.op());
  r.local_stats_max_gap = gap;
  r.product_effects = products;
  r.odd_y = std::max(odd_y_weight(out1.op()), odd_y_weight(out2.op()));
  r.faithful_rank = rank.rank;
  r.process_dim = rank.process_dim;
  return r;
}

}  // namespace gpt_tomo
