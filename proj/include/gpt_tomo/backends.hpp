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
#include <vector>

#include "gpt_tomo/core.hpp"

namespace gpt_tomo {

/// Physical states whose real span is the whole state space of `sys`:
/// |k><k|, then |j>+|k> and (complex backend only) |j>+i|k>, normalised.
std::vector<State> spanning_states(const System& sys);

/// The same projectors read as effects.
std::vector<Effect> spanning_effects(const System& sys);

/// Maximally mixed (uniform) state.
State complete_state(const System& sys);

/// Pure state on A (x) R, R a copy of A, whose A-marginal is `rho`. Rank-one
/// inputs come back as rho (x) |0><0|; otherwise the purification is
/// sum_k sqrt(rho)|k> (x) |k>. Throws Unsupported on the classical backend.
State purify(const State& rho);

/// Unnormalised vector psi with |psi><psi| = s; the first entry of modulus
/// above `tol` is made real positive. Throws InvalidArgument if s is not rank one.
CVector pure_vector(const State& s, double tol = kDefaultTolerance);

/// |Phi+><Phi+| on A (x) A, or the perfectly correlated uniform distribution
/// for the classical backend.
State maximally_entangled(const System& a);

/// |Phi+><Phi+| as an effect on A (x) A, or the classical equality effect
/// sum_k e_k (x) e_k.
Effect maximally_entangled_effect(const System& a);

// ---------------------------------------------------------------------------
// Process coordinates
//
// Quantum-family maps are coordinatised by their transfer matrix over the full
// Hermitian operator basis of the input and output spaces (complex backend
// basis even for the real backend, so that maps agreeing on real symmetric
// matrices but not on antisymmetric ones still get distinct coordinates).
// Classical maps use their matrix entries. Both are flattened column-major.

RVector process_coordinates(const LinearMap& map);
LinearMap map_from_coordinates(const System& input, const System& output,
                               const RVector& coords);

struct ProcessSpaceBasis {
  System input;
  System output;
  std::vector<RVector> elements;
  int dim = 0;

  LinearMap element_map(std::size_t i) const;
};

/// Basis of the real span of transformations input -> output.
/// Complex quantum: all Hermitian-preserving maps (d_in^2 d_out^2).
/// Classical: all real matrices (d_in d_out).
/// Real quantum: computed numerically from random maps of the real Kraus
/// class; `seed` only affects this case.
ProcessSpaceBasis process_space_basis(const System& input, const System& output,
                                      std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Seeded generators. Output is a pure function of the arguments.

/// Normalised Wishart sample (Dirichlet for the classical backend).
State random_state(const System& sys, std::uint64_t seed);

/// Haar-like random pure state (random point mass for the classical backend).
State random_pure_state(const System& sys, std::uint64_t seed);

/// Deterministic channel from a random Stinespring isometry (random
/// column-stochastic matrix for the classical backend).
Process random_process(const System& input, const System& output, std::uint64_t seed);

/// Non-deterministic single-outcome transformation: one random Kraus
/// operator rescaled to norm at most one (substochastic for classical).
Process random_operation(const System& input, const System& output, std::uint64_t seed);

}  // namespace gpt_tomo
