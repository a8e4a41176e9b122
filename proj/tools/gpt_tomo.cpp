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

// gpt-tomo: command line front end. Reports go to stdout (JSON with --json),
// diagnostics to stderr. Exit status 0 on pass, 1 on fail, 2 on usage errors.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpt_tomo/backends.hpp"
#include "gpt_tomo/casestudies.hpp"
#include "gpt_tomo/dsl.hpp"
#include "gpt_tomo/report.hpp"
#include "gpt_tomo/structures.hpp"
#include "gpt_tomo/tomography.hpp"

namespace {

using namespace gpt_tomo;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Globals {
  double tol = kDefaultTolerance;
  std::uint64_t seed = 0;
  bool json = false;
};

System atomic(const std::string& backend, int d) {
  return System::atomic(*parse_backend(backend), d);
}

CMatrix on_second(const State& g, const System& a, const Process& t) {
  return tensor(LinearMap::identity(a), t.to_map()).apply(g.op());
}

// Polar factor of a random matrix: orthogonal for the real backend.
CMatrix random_unitary(const System& r, std::uint64_t seed) {
  const CMatrix x = random_state(r, seed).op();
  const CMatrix y = random_state(r, seed + 0x5bd1).op();
  const CMatrix m = r.backend() == Backend::Real ? CMatrix(x - y * y)
                                                 : CMatrix(x + Complex(0, 1) * (y - x * y));
  return linalg::closest_unitary(m);
}

void emit(const CheckReport& r, const Globals& g) {
  if (g.json) {
    std::cout << r.to_json().dump(2) << '\n';
    return;
  }
  const Json j = r.to_json();
  std::cout << "check      " << r.check << '\n';
  std::cout << "result     " << (r.pass ? "PASS" : "FAIL") << '\n';
  std::cout << "tolerance  " << j["tolerance"].dump() << '\n';
  std::cout << "seed       " << r.seed << '\n';
  for (const auto& [key, value] : j["details"].items()) {
    std::cout << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
              << '\n';
  }
}

int finish(const CheckReport& r, const Globals& g) {
  emit(r, g);
  return r.pass ? kExitPass : kExitFail;
}

CheckReport base(const std::string& check, const Globals& g) {
  CheckReport r;
  r.check = check;
  r.tolerance = g.tol;
  r.seed = g.seed;
  return r;
}

// ---------------------------------------------------------------------------

int check_local_tomo(const std::string& backend, const std::vector<int>& dims, const Globals& g) {
  CheckReport r = is_locally_tomographic(atomic(backend, dims[0]), atomic(backend, dims[1]), g.tol);
  r.seed = g.seed;
  return finish(r, g);
}

int check_faithful(const std::string& backend, int din, int dout, const Globals& g) {
  const System a = atomic(backend, din);
  const System b = atomic(backend, dout);
  const State phi = find_faithful_state(a);
  const FaithfulnessRank f = faithfulness_rank(phi, a, b, g.seed);
  Json dims_by_seed = Json::array();
  bool stable = true;
  for (std::uint64_t k = 0; k < 5; ++k) {
    const int dim = process_space_basis(a, b, g.seed + k).dim;
    dims_by_seed.push_back(dim);
    stable = stable && dim == f.process_dim;
  }
  CheckReport r = base("faithful", g);
  r.pass = f.faithful() && stable;
  r.details["backend"] = backend;
  r.details["din"] = din;
  r.details["dout"] = dout;
  r.details["rank"] = f.rank;
  r.details["process_dim"] = f.process_dim;
  r.details["process_dim_by_seed"] = dims_by_seed;
  r.details["ancilla_dim"] = f.ancilla_dim;
  return finish(r, g);
}

int demo_rebit(const Globals& g) {
  return finish(counterexample_report(g.tol, g.seed).to_report(), g);
}

int verify_teleport(const std::string& backend, int d, const Globals& g) {
  const System a = atomic(backend, d);
  const TeleportationWitness w = teleportation_witness(a);
  const double residual = teleportation_residual(w.phi, w.effect, w.p.value, a);
  CheckReport r = base("teleport", g);
  r.pass = verify_teleportation(w.phi, w.effect, w.p.value, a, g.tol);
  r.details["backend"] = backend;
  r.details["d"] = d;
  r.details["p"] = w.p.value;
  r.details["residual"] = residual;
  return finish(r, g);
}

int verify_universal_extension_cmd(const std::string& backend, int d, int samples,
                                   const Globals& g) {
  const System a = atomic(backend, d);
  const State omega = complete_state(a);
  const TeleportationWitness w = teleportation_witness(a);
  const bool quantum = is_quantum_family(a.backend());
  const State psi = quantum ? purify(omega) : w.phi;
  double worst_pur = 0.0;
  double worst_tel = 0.0;
  int verified = 0;
  for (int k = 0; k < samples; ++k) {
    const State gamma = random_extension(omega, g.seed + k);
    bool ok = true;
    if (quantum) {
      const Process t = channel_from_purification(psi, gamma, a, g.tol);
      worst_pur = std::max(worst_pur, linalg::trace_norm(on_second(psi, a, t) - gamma.op()));
      ok = ok && t.is_deterministic() && verify_universal_extension(psi, omega, gamma, 1.0, t, g.tol);
    }
    const ExtensionWitness x = extension_from_teleportation(w, gamma, a);
    worst_tel = std::max(
        worst_tel, linalg::trace_norm(on_second(w.phi, a, x.t) - x.p.value * gamma.op()));
    ok = ok && verify_universal_extension(w.phi, omega, gamma, x.p.value, x.t, g.tol);
    verified += ok;
  }
  CheckReport r = base("universal-extension", g);
  r.pass = verified == samples;
  r.details["backend"] = backend;
  r.details["d"] = d;
  r.details["samples"] = samples;
  r.details["verified"] = verified;
  r.details["p_teleportation"] = w.p.value;
  if (quantum) r.details["max_residual_purification"] = worst_pur;
  r.details["max_residual_teleportation"] = worst_tel;
  return finish(r, g);
}

int verify_purification(const std::string& backend, int d, int samples, const Globals& g) {
  const System a = atomic(backend, d);
  CheckReport r = base("purification", g);
  r.details["backend"] = backend;
  r.details["d"] = d;
  if (!is_quantum_family(a.backend())) {
    r.pass = false;
    r.details["error"] = "the classical backend has no purifications";
    return finish(r, g);
  }
  double worst_connect = 0.0;
  double worst_channel = 0.0;
  int verified = 0;
  for (int k = 0; k < samples; ++k) {
    const State rho = random_state(a, g.seed + k);
    const State psi = purify(rho);
    const Process u_true(a, a, KrausList{{random_unitary(a, g.seed + k)}});
    const State psi2(psi.system(), on_second(psi, a, u_true));
    bool ok = false;
    if (auto u = connect_purifications(psi, psi2, a, g.tol)) {
      worst_connect = std::max(worst_connect, linalg::trace_norm(on_second(psi, a, *u) - psi2.op()));
      ok = u->is_reversible();
    }
    const State gamma = random_extension(rho, g.seed + k);
    const Process t = channel_from_purification(psi, gamma, a, g.tol);
    worst_channel = std::max(worst_channel, linalg::trace_norm(on_second(psi, a, t) - gamma.op()));
    ok = ok && t.is_deterministic();
    verified += ok;
  }
  r.pass = verified == samples && worst_connect <= g.tol && worst_channel <= g.tol;
  r.details["samples"] = samples;
  r.details["verified"] = verified;
  r.details["max_residual_connect"] = worst_connect;
  r.details["max_residual_channel"] = worst_channel;
  return finish(r, g);
}

Json matrix_json(const CMatrix& m, bool imag) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(imag ? m(i, j).imag() : m(i, j).real());
    rows.push_back(row);
  }
  return rows;
}

int run_file(const std::string& path, const Globals& g) {
  dsl::EvalResult result = [&] {
    try {
      return dsl::evaluate(dsl::typecheck(dsl::parse_file(path)));
    } catch (const dsl::DslError& e) {
      std::cerr << e.diagnostic().str() << '\n';
      throw;
    }
  }();
  CheckReport r = base("run", g);
  r.pass = true;
  r.details["file"] = path;
  r.details["kind"] = std::string(dsl::to_string(result.kind));
  r.details["input"] = dsl::to_string(result.type.input);
  r.details["output"] = dsl::to_string(result.type.output);
  if (result.kind == dsl::ResultKind::Scalar) {
    const double v = result.scalar();
    r.details["value"] = v;
    r.pass = v >= -g.tol && v <= 1.0 + g.tol;
  } else if (result.kind == dsl::ResultKind::State) {
    const CMatrix op = result.state_operator();
    r.details["real"] = matrix_json(op, false);
    if (op.imag().size() && op.imag().cwiseAbs().maxCoeff() > 0.0) {
      r.details["imag"] = matrix_json(op, true);
    }
  } else {
    r.details["matrix_rows"] = result.map.matrix.rows();
    r.details["matrix_cols"] = result.map.matrix.cols();
  }
  return finish(r, g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Process tomography checks for operational probabilistic theories", "gpt-tomo"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  if (const char* env = std::getenv("GPT_TOMO_TOL")) {
    try {
      g.tol = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "gpt-tomo: ignoring unparsable GPT_TOMO_TOL='" << env << "'\n";
    }
  }
  app.add_option("--tol", g.tol, "Pass/fail tolerance (default 1e-9, or GPT_TOMO_TOL)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for sampled inputs");
  app.add_flag("--json", g.json, "Print the report as JSON");

  const std::vector<std::string> backends{"classical", "quantum", "real"};
  std::string backend;
  std::vector<int> dims;
  int d = 2;
  int din = 2;
  int dout = 2;
  int samples = 50;
  std::string file;

  auto* check = app.add_subcommand("check", "Structural checks")->require_subcommand(1);
  auto* local = check->add_subcommand("local-tomo", "Local tomography dimension law");
  local->add_option("--backend", backend)->required()->check(CLI::IsMember(backends));
  local->add_option("--dims", dims)->required()->expected(2)->check(CLI::PositiveNumber);
  auto* faithful = check->add_subcommand("faithful", "Dynamical faithfulness rank test");
  faithful->add_option("--backend", backend)->required()->check(CLI::IsMember(backends));
  faithful->add_option("--din", din)->required()->check(CLI::Range(1, 16));
  faithful->add_option("--dout", dout)->required()->check(CLI::Range(1, 16));

  auto* demo = app.add_subcommand("demo", "Worked examples")->require_subcommand(1);
  auto* rebit = demo->add_subcommand("rebit", "Real-vector-space counterexample");

  auto* verify = app.add_subcommand("verify", "Constructive witnesses")->require_subcommand(1);
  auto* tele = verify->add_subcommand("teleport", "Conclusive teleportation identity");
  tele->add_option("--backend", backend)->required()->check(CLI::IsMember(backends));
  tele->add_option("--d", d)->required()->check(CLI::Range(1, 16));
  auto* uni = verify->add_subcommand("universal-extension", "Universal extension witnesses");
  uni->add_option("--backend", backend)->required()->check(CLI::IsMember(backends));
  uni->add_option("--d", d)->required()->check(CLI::Range(1, 16));
  uni->add_option("--samples", samples)->check(CLI::Range(1, 100000));
  auto* pur = verify->add_subcommand("purification", "Purification symmetry and channels");
  pur->add_option("--backend", backend)->required()->check(CLI::IsMember(backends));
  pur->add_option("--d", d)->required()->check(CLI::Range(1, 16));
  pur->add_option("--samples", samples)->check(CLI::Range(1, 100000));

  auto* run = app.add_subcommand("run", "Evaluate a circuit file");
  run->add_option("file", file, "Circuit file (.opt)")->required();

  for (auto* sub : {check, local, faithful, demo, rebit, verify, tele, uni, pur, run}) {
    sub->fallthrough();
  }

  app.failure_message(CLI::FailureMessage::help);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*local) return check_local_tomo(backend, dims, g);
    if (*faithful) return check_faithful(backend, din, dout, g);
    if (*rebit) return demo_rebit(g);
    if (*tele) return verify_teleport(backend, d, g);
    if (*uni) return verify_universal_extension_cmd(backend, d, samples, g);
    if (*pur) return verify_purification(backend, d, samples, g);
    if (*run) return run_file(file, g);
  } catch (const dsl::DslError&) {
    return kExitFail;
  } catch (const Error& e) {
    std::cerr << "gpt-tomo: " << e.what() << '\n';
    return kExitFail;
  }
  std::cerr << app.help();
  return kExitUsage;
}
