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

#include <cstdint>
#include <utility>

#include "gpt_tomo/core.hpp"
#include "gpt_tomo/report.hpp"

namespace gpt_tomo {

/// Pauli matrices; Y is the only one with imaginary entries.
CMatrix pauli(char name);

/// Coefficients of `op` on the normalised product basis
/// (s_i (x) s_j (x) ...)/sqrt(2)^n, s in {I, X, Y, Z}, first factor most
/// significant. `op` must act on n qubits.
RVector pauli_components(const CMatrix& op);

/// Largest modulus among the components with an odd number of Y factors.
/// These vanish for every real symmetric operator.
double odd_y_weight(const CMatrix& op);

/// Two deterministic rebit channels that act identically on every single
/// rebit state: P with Kraus {I, Y}/sqrt2 and P' with Kraus {X, Z}/sqrt2.
struct RebitPair {
  Process p;
  Process p_prime;
};

RebitPair rebit_processes();

/// (1/4)(I (x) I - Y (x) Y) and (1/4)(I (x) I + Y (x) Y): the outputs of P and
/// P' on the maximally entangled rebit pair.
std::pair<State, State> wootters_pair();

struct CounterexampleReport {
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 0;
  int random_states = 0;

  /// max ||P(rho) - I/2||_1 and ||P'(rho) - I/2||_1 over spanning and random
  /// single rebit states.
  double max_local_deviation = 0.0;
  State output1;
  State output2;
  /// Entrywise distance of the outputs from the closed forms above.
  double output_deviation = 0.0;
  /// Spectral norm of output1 * output2.
  double orthogonality_gap = 0.0;
  double trace_distance = 0.0;
  /// Largest gap between the outputs over products of spanning rebit effects.
  double local_stats_max_gap = 0.0;
  int product_effects = 0;
  /// Largest odd-Y Pauli component in either output.
  double odd_y = 0.0;
  int faithful_rank = 0;
  int process_dim = 0;

  bool pass() const;
  CheckReport to_report() const;
};

CounterexampleReport counterexample_report(double tol = kDefaultTolerance,
                                           std::uint64_t seed = 0, int random_states = 100);

}  // namespace gpt_tomo
