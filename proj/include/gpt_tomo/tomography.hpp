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
#include <optional>
#include <vector>

#include "gpt_tomo/backends.hpp"
#include "gpt_tomo/core.hpp"
#include "gpt_tomo/report.hpp"

namespace gpt_tomo {

/// Largest entrywise modulus of a - b.
double max_deviation(const CMatrix& a, const CMatrix& b);

/// Output of P (x) id_R on `state`, where the state lives on P.input (x) R and
/// R is whatever follows the input factors.
CMatrix apply_lifted(const Process& p, const State& state);

// ---------------------------------------------------------------------------
// Four levels of equality

/// P and P2 agree on every state of the source.
bool equal_on_source(const Process& p, const Process& p2, const Test& source,
                     double tol = kDefaultTolerance);

/// P and P2 agree on every state in the face of rho.
bool equal_upon_input(const Process& p, const Process& p2, const State& rho,
                      double tol = kDefaultTolerance);

/// P and P2 agree on every extension of rho. Decided on a purification (the
/// copy extension for the classical backend) and cross-checked on a few
/// sampled extensions.
bool equal_on_extensions(const Process& p, const Process& p2, const State& rho,
                         double tol = kDefaultTolerance);

/// P and P2 are the same process: lifted actions agree on a faithful state.
bool equal_processes(const Process& p, const Process& p2, double tol = kDefaultTolerance);

// ---------------------------------------------------------------------------
// Containment

struct Containment {
  Scalar p;
  State tau;
};

/// Largest p > 0 with rho = p sigma + (1 - p) tau for a deterministic tau, or
/// nothing when sigma is not contained in rho.
std::optional<Containment> contains(const State& rho, const State& sigma,
                                    double tol = kDefaultTolerance);

/// rho contains every deterministic state: full rank or full support.
bool is_complete(const State& rho, double tol = kDefaultTolerance);

/// Pure states (point masses for classical) spanning the face of rho.
std::vector<State> face_spanning_states(const State& rho, double tol = kDefaultTolerance);

// ---------------------------------------------------------------------------
// Extensions

/// A deterministic extension of rho on rho.system() (x) E, drawn from one of
/// three families chosen by the seed: channel applied to the purifying system,
/// measure-and-record ensemble, or product with a random state.
State random_extension(const State& rho, std::uint64_t seed);

/// The copy extension sum_i rho_i e_i (x) e_i of a classical state.
State copy_extension(const State& rho);

// ---------------------------------------------------------------------------
// Tomographic ordering and faithfulness

/// Columns are the operator coordinates of (T_i (x) id) phi over the basis of
/// transformations a -> b. phi must live on a (x) R.
RMatrix lifting_matrix(const State& phi, const ProcessSpaceBasis& basis);

/// Every pair of processes a -> b that phi cannot tell apart, psi cannot tell
/// apart either: ker M_phi is contained in ker M_psi.
bool tomographically_geq(const State& phi, const State& psi, const System& a,
                         const System& b, std::uint64_t seed = 0);

struct FaithfulnessRank {
  int rank = 0;
  int process_dim = 0;
  int ancilla_dim = 0;
  bool faithful() const { return rank == process_dim; }
};

FaithfulnessRank faithfulness_rank(const State& phi, const System& a, const System& b,
                                   std::uint64_t seed = 0);

bool is_dynamically_faithful(const State& phi, const System& a, const System& b,
                             std::uint64_t seed = 0);

/// Purification of the complete state; the perfect-copy state for classical.
State find_faithful_state(const System& a);

/// Compares the span of product effects with the composite effect space.
CheckReport is_locally_tomographic(const System& a, const System& b,
                                   double tol = kDefaultTolerance);

}  // namespace gpt_tomo
