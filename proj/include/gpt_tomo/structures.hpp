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

#include "gpt_tomo/core.hpp"
#include "gpt_tomo/report.hpp"

namespace gpt_tomo {

// Witnesses returned from this header are re-checked by an independent
// contraction before they are handed back; a failed check throws Error.

// ---------------------------------------------------------------------------
// Conclusive teleportation
//
// The protocol: a shared state Phi on A (x) R, a fresh input on A', and an
// effect E on R (x) A'. The induced map A' -> A is
//   rho |-> Tr_{R A'}[(I_A (x) E)(Phi (x) rho)].

struct TeleportationWitness {
  State phi;
  Effect effect;
  Scalar p;
};

/// Maximally entangled state and effect with p = 1/d^2 (quantum backends),
/// perfect copy and equality effect with p = 1/d (classical).
TeleportationWitness teleportation_witness(const System& a);

LinearMap teleportation_map(const State& phi, const Effect& effect, const System& a);

/// Largest deviation of the teleportation map from p * identity over the
/// spanning states of `a`, measured in trace norm.
double teleportation_residual(const State& phi, const Effect& effect, double p,
                              const System& a);

bool verify_teleportation(const State& phi, const Effect& effect, double p, const System& a,
                          double tol = kDefaultTolerance);

/// Tr_{R A'}[(I_A (x) t)(Phi (x) omega)]; with t deterministic this is the
/// A-marginal of phi.
State chi_state(const State& phi, const State& omega, const Effect& t);

// ---------------------------------------------------------------------------
// Universal extensions

struct ExtensionWitness {
  Scalar p;
  Process t;
};

/// T: R -> E with (I_A (x) T) phi = p gamma, built by teleporting the A part
/// of gamma into phi. Works for every gamma on A (x) E.
ExtensionWitness extension_from_teleportation(const TeleportationWitness& w,
                                              const State& gamma, const System& a);

/// (I_A (x) T) psi == p gamma within `tol` (trace norm), with psi and gamma
/// both extensions of rho and p > 0.
bool verify_universal_extension(const State& psi, const State& rho, const State& gamma,
                                double p, const Process& t, double tol = kDefaultTolerance);

// ---------------------------------------------------------------------------
// Purifications

/// Reversible U on R with (I_A (x) U) psi == psi2, or nothing when the
/// A-marginals differ. Both states must be pure on a (x) R.
std::optional<Process> connect_purifications(const State& psi, const State& psi2,
                                             const System& a,
                                             double tol = kDefaultTolerance);

/// Deterministic T: R -> E with (I_A (x) T) psi == gamma, for psi a
/// purification of rho on a (x) R and gamma an extension of rho on a (x) E.
Process channel_from_purification(const State& psi, const State& gamma, const System& a,
                                  double tol = kDefaultTolerance);

// ---------------------------------------------------------------------------
// Preparational faithfulness

struct PreparationWitness {
  Scalar p;
  Process s;
  double residual = 0.0;
};

/// S: A -> B with (I_A (x) S) phi == p target, phi the maximally entangled
/// state (perfect copy for classical) on A (x) A and target on A (x) B.
PreparationWitness preparationally_faithful_witness(const State& phi, const State& target,
                                                    const System& a,
                                                    double tol = kDefaultTolerance);

/// Generates witnesses from one fixed phi for sampled pure and mixed targets
/// on A (x) A and A (x) B. Also reports whether the local tomography law
/// holds, which decides whether single-system tomography suffices.
CheckReport is_doubly_preparationally_faithful(const System& a, const System& b,
                                               int samples = 10, std::uint64_t seed = 0,
                                               double tol = kDefaultTolerance);

}  // namespace gpt_tomo
