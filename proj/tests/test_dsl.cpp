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

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "gpt_tomo/backends.hpp"
#include "gpt_tomo/dsl.hpp"

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace gpt_tomo;
using namespace gpt_tomo::dsl;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::filesystem::path> corpus() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(GPT_TOMO_CORPUS_DIR)) {
    if (e.path().extension() == ".opt") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Value of a "# <key>: ..." header line, or empty.
std::string header(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  const std::string tag = "# " + key + ":";
  while (std::getline(in, line)) {
    if (line.rfind(tag, 0) == 0) return line.substr(tag.size() + 1);
  }
  return "";
}

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string matrix_literal(const CMatrix& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += "[" + num(m(i, j).real()) + ", " + num(m(i, j).imag()) + "]";
    }
    s += "]";
  }
  return s + "]";
}

std::string kraus_literal(const Process& p) {
  std::string s = "kraus[";
  const auto& ks = std::get<KrausList>(p.repr()).ops;
  for (std::size_t i = 0; i < ks.size(); ++i) s += (i ? ", " : "") + matrix_literal(ks[i]);
  return s + "]";
}

// Random well-typed atoms f, g on A and h, k on B, plus closing state and effect.
std::string random_program(std::uint64_t seed, const std::string& run) {
  const System a = System::atomic(Backend::Quantum, 2);
  const System b = System::atomic(Backend::Quantum, 3);
  const System triv = System::trivial(Backend::Quantum);
  std::string s = "system A qubit 2;\nsystem B qubit 3;\n";
  s += "proc f on A -> A = " + kraus_literal(random_process(a, a, seed)) + ";\n";
  s += "proc g on A -> A = " + kraus_literal(random_operation(a, a, seed + 1)) + ";\n";
  s += "proc h on B -> B = " + kraus_literal(random_process(b, b, seed + 2)) + ";\n";
  s += "proc k on B -> B = " + kraus_literal(random_operation(b, b, seed + 3)) + ";\n";
  s += "state s on A, B = " + kraus_literal(random_process(triv, System(Backend::Quantum, {2, 3}), seed)) + ";\n";
  s += "effect e on A, B = " + kraus_literal(random_operation(System(Backend::Quantum, {2, 3}), triv, seed)) + ";\n";
  return s + "run " + run + "\n";
}

void expect_diagnostic(const std::string& text, int line, int col, const std::string& fragment) {
  try {
    run(text, "t.opt");
    ADD_FAILURE() << "no diagnostic for:\n" << text;
  } catch (const DslError& e) {
    EXPECT_EQ(e.diagnostic().pos.line, line) << e.what();
    EXPECT_EQ(e.diagnostic().pos.col, col) << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    EXPECT_EQ(std::string(e.what()).rfind("t.opt:" + std::to_string(line) + ":", 0), 0u);
  }
}

}  // namespace

TEST(dsl, golden_corpus) {
  const auto files = corpus();
  ASSERT_GE(files.size(), 11u);
  int good = 0;
  int bad = 0;
  for (const auto& f : files) {
    const std::string text = slurp(f);
    const std::string expect = header(text, "expect");
    const std::string expect_error = header(text, "expect-error");
    ASSERT_TRUE(!expect.empty() || !expect_error.empty()) << f;
    if (!expect.empty()) {
      const EvalResult r = run(text, f.string());
      ASSERT_EQ(r.kind, ResultKind::Scalar) << f;
      ASSERT_NEAR(r.scalar(), std::stod(expect), 1e-9) << f;
      ++good;
    } else {
      try {
        run(text, f.string());
        FAIL() << f << " evaluated without error";
      } catch (const DslError& e) {
        const auto& d = e.diagnostic();
        ASSERT_EQ(std::to_string(d.pos.line) + ":" + std::to_string(d.pos.col), expect_error);
        ASSERT_EQ(std::string(e.what()).rfind(f.string() + ":" + expect_error + ": ", 0), 0u);
      }
      ++bad;
    }
  }
  ASSERT_GE(good, 10);
  ASSERT_GE(bad, 1);
}

TEST(dsl, print_round_trips_the_corpus) {
  for (const auto& f : corpus()) {
    const std::string text = slurp(f);
    if (!header(text, "expect-error").empty()) continue;
    const Program p = parse(text);
    const Program q = parse(print(p));
    ASSERT_TRUE(same_structure(p, q)) << f << "\n" << print(p);
    ASSERT_EQ(print(p), print(q));
  }
}

TEST(dsl, print_round_trips_random_programs) {
  const char* runs[] = {"e . (f || h) . s", "e . ((f . g) || id[B]) . s",
                        "(e . (f || k)) . (id[A] || h) . s", "e . ((f || h) . (g || k)) . s"};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Program p = parse(random_program(seed, runs[seed % 4]));
    ASSERT_TRUE(same_structure(p, parse(print(p))));
  }
  // Associativity and precedence survive printing.
  const std::string base = "system A qubit 2;\nproc f on A -> A = kraus[[[1, 0], [0, 1]]];\n";
  for (const char* e : {"f . (f . f)", "(f . f) . f", "(f || f) || f", "f || (f || f)",
                        "(f . f) || f", "f . f || f"}) {
    const Program p = parse(base + "run " + e);
    ASSERT_TRUE(same_structure(p, parse(print(p)))) << e << " -> " << print(*p.run);
  }
}

TEST(dsl, interchange_law) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const EvalResult lhs = run(random_program(seed, "(f . g) || (h . k)"));
    const EvalResult rhs = run(random_program(seed, "(f || h) . (g || k)"));
    ASSERT_EQ(lhs.kind, ResultKind::Process);
    ASSERT_EQ(lhs.type, rhs.type);
    ASSERT_LT(oracle::max_abs(lhs.map.matrix - rhs.map.matrix), 1e-12);
  }
}

TEST(dsl, closed_diagrams_are_probabilities) {
  const char* runs[] = {"e . (f || h) . s", "e . ((f . g) || k) . s", "e . s",
                        "e . ((f . f . g) || (h . k . k)) . s"};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const EvalResult r = run(random_program(seed, runs[seed % 4]));
    ASSERT_EQ(r.kind, ResultKind::Scalar);
    ASSERT_GE(r.scalar(), -1e-12);
    ASSERT_LE(r.scalar(), 1.0 + 1e-9);
  }
}

TEST(dsl, result_kinds) {
  const std::string base =
      "system A qubit 2;\nstate m on A = maxmix;\neffect u on A = unit;\n"
      "proc f on A -> A = kraus[[[0, 1], [1, 0]]];\n";
  ASSERT_EQ(run(base + "run f . m").kind, ResultKind::State);
  ASSERT_EQ(run(base + "run u . f").kind, ResultKind::Effect);
  ASSERT_EQ(run(base + "run f").kind, ResultKind::Process);
  ASSERT_NEAR(run(base + "run u . f . m;").scalar(), 1.0, 1e-15);
  ASSERT_LT(oracle::max_abs(run(base + "run f . m").state_operator() - oracle::maxmix(2)), 1e-15);
  ASSERT_EQ(run(base + "run id[A] || f").type.input, (std::vector<std::string>{"A", "A"}));
}

TEST(dsl, classical_programs) {
  const std::string text =
      "system C cbit 2;\nstate s on C = stoch[[0.25], [0.75]];\n"
      "proc flip on C -> C = stoch[[0, 1], [1, 0]];\neffect zero on C = stoch[[1, 0]];\n"
      "run zero . flip . s\n";
  ASSERT_NEAR(run(text).scalar(), 0.75, 1e-15);
}

TEST(dsl, diagnostics) {
  const std::string q = "system A qubit 2;\n";
  expect_diagnostic(q + "run . ;", 2, 5, "syntax error: unexpected '.', expected an expression");
  expect_diagnostic(q + "run g", 2, 5, "unknown identifier 'g'");
  expect_diagnostic(q + "run A", 2, 5, "use id[A]");
  expect_diagnostic(q + "system A qubit 3;\nrun id[A]", 2, 8, "duplicate declaration of 'A'");
  expect_diagnostic(q + "system B rebit 2;\nrun id[A]", 2, 1, "uses backend");
  expect_diagnostic("system A qutrit 2;\nrun id[A]", 1, 10, "unknown backend");
  expect_diagnostic(q + "system B qubit 3;\nproc f on A -> A = kraus[[[1, 0], [0, 1]]];\n"
                        "run id[B] . f",
                    4, 11, "wire mismatch in 'id[B] . f': 'id[B]' expects (B) but 'f' produces (A)");
  expect_diagnostic(q + "proc f on A -> A = kraus[[[1, 0], [0, 1], [0, 0]]];\nrun f", 2, 26,
                    "must be 2x2, got 3x2");
  expect_diagnostic(q + "proc f on A -> A = kraus[[[1, 0], [0]]];\nrun f", 2, 35, "ragged matrix");
  expect_diagnostic(q + "proc f on A -> A = kraus[[[2, 0], [0, 2]]];\nrun f", 2, 20,
                    "invalid proc 'f'");
  expect_diagnostic(q + "proc f on A -> A = stoch[[1, 0], [0, 1]];\nrun f", 2, 20,
                    "quantum systems take 'kraus'");
  expect_diagnostic("system C cbit 2;\nstate s on C = kraus[[[1], [0]]];\nrun s", 2, 16,
                    "classical systems take 'stoch'");
  expect_diagnostic(q + "effect e on A = maxmix;\nrun e", 2, 17, "cannot define effect");
  expect_diagnostic(q + "system B qubit 3;\nstate b on A, B = bell;\nrun b", 3, 19,
                    "two halves of equal dimensions");
  expect_diagnostic(q + "run id[A] extra", 2, 11, "expected end of input");
  expect_diagnostic("system A qubit 0;\nrun id[A]", 1, 16, "dimension must be a positive integer");
  expect_diagnostic(q + "state state on A = maxmix;\nrun id[A]", 2, 7, "reserved word");
}

TEST(dsl, nesting_is_bounded) {
  std::string deep = "system A qubit 2;\nrun ";
  for (int i = 0; i < 100000; ++i) deep += "(";
  ASSERT_THROW(parse(deep), DslError);
  std::string arrays = "system A qubit 2;\nstate s on A = kraus[";
  for (int i = 0; i < 100000; ++i) arrays += "[";
  ASSERT_THROW(parse(arrays), DslError);
}

TEST(dsl, total_on_garbage) {
  std::vector<std::string> seeds;
  for (const auto& f : corpus()) seeds.push_back(slurp(f));
  std::mt19937_64 rng(1234);
  const std::string alphabet = "[](),.;|-># \n\tabcdefqrstuvxyz0123456789.eE+";
  int diagnostics = 0;
  for (int iter = 0; iter < 3000; ++iter) {
    std::string text = seeds[iter % seeds.size()];
    const int edits = 1 + static_cast<int>(rng() % 6);
    for (int e = 0; e < edits && !text.empty(); ++e) {
      const std::size_t at = rng() % text.size();
      switch (rng() % 3) {
        case 0:
          text.erase(at, 1 + rng() % 4);
          break;
        case 1:
          text.insert(at, 1, alphabet[rng() % alphabet.size()]);
          break;
        default:
          text[at] = static_cast<char>(rng() % 256);
          break;
      }
    }
    try {
      run(text, "fuzz.opt");
    } catch (const DslError& e) {
      ++diagnostics;
      ASSERT_EQ(std::string(e.what()).rfind("fuzz.opt:", 0), 0u);
    } catch (const std::exception& e) {
      FAIL() << "non-diagnostic exception: " << e.what() << "\n" << text;
    }
  }
  ASSERT_GT(diagnostics, 1000);
}

TEST(dsl, parse_file_reports_missing_files) {
  try {
    parse_file("/nonexistent/x.opt");
    FAIL();
  } catch (const DslError& e) {
    ASSERT_EQ(e.diagnostic().file, "/nonexistent/x.opt");
  }
}
