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

#include <random>

#include "gpt_tomo/linalg.hpp"

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace gpt_tomo;

namespace {

CMatrix random_matrix(int r, int c, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> n;
  CMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Complex(n(rng), n(rng));
  return m;
}

CMatrix random_hermitian(int d, std::uint32_t seed) {
  CMatrix a = random_matrix(d, d, seed);
  return a + a.adjoint();
}

}  // namespace

TEST(linalg, kron_matches_loops) {
  CMatrix a = random_matrix(2, 3, 1);
  CMatrix b = random_matrix(3, 2, 2);
  ASSERT_LT(oracle::max_abs(linalg::kron(a, b) - oracle::kron(a, b)), 1e-14);
}

TEST(linalg, partial_trace_matches_loops) {
  CMatrix h = random_hermitian(6, 3);
  const std::vector<int> dims = {2, 3};
  const std::vector<int> first = {0};
  const std::vector<int> second = {1};
  ASSERT_LT(oracle::max_abs(linalg::partial_trace(h, dims, first) - oracle::trace_second(h, 2, 3)),
            1e-13);
  ASSERT_LT(oracle::max_abs(linalg::partial_trace(h, dims, second) - oracle::trace_first(h, 2, 3)),
            1e-13);
}

TEST(linalg, permute_swaps_factors) {
  CMatrix a = random_matrix(2, 2, 4);
  CMatrix b = random_matrix(3, 3, 5);
  const std::vector<int> dims = {2, 3};
  const std::vector<int> order = {1, 0};
  ASSERT_LT(oracle::max_abs(linalg::permute_subsystems(oracle::kron(a, b), dims, order) -
                            oracle::kron(b, a)),
            1e-14);
}

TEST(linalg, operator_coords_round_trip) {
  for (int d = 1; d <= 4; ++d) {
    CMatrix h = random_hermitian(d, 10 + d);
    ASSERT_EQ(linalg::operator_basis_size(d, false), d * d);
    ASSERT_EQ(linalg::operator_basis_size(d, true), d * (d + 1) / 2);
    RVector c = linalg::operator_coords(h, false);
    ASSERT_LT(oracle::max_abs(linalg::from_operator_coords(c, d) - h), 1e-13);
    CMatrix s = h.real().cast<Complex>();
    RVector cs = linalg::operator_coords(s, true);
    ASSERT_EQ(cs.size(), d * (d + 1) / 2);
    ASSERT_LT(oracle::max_abs(linalg::from_operator_coords(cs, d) - s), 1e-13);
  }
}

TEST(linalg, numerical_rank) {
  RMatrix m(3, 3);
  m << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  ASSERT_EQ(linalg::numerical_rank(m), 2);
  ASSERT_EQ(linalg::numerical_rank(RMatrix::Zero(4, 4)), 0);
  ASSERT_EQ(linalg::numerical_rank(RMatrix::Identity(5, 5)), 5);
  ASSERT_EQ(linalg::column_span_basis(m).cols(), 2);
}

TEST(linalg, spectral_helpers) {
  CMatrix h = random_hermitian(4, 7);
  ASSERT_NEAR(linalg::trace_norm(h), oracle::trace_norm(h), 1e-12);
  CMatrix psd = h * h;
  CMatrix r = linalg::psd_sqrt(psd);
  ASSERT_LT(oracle::max_abs(r * r - psd), 1e-10);
  ASSERT_TRUE(linalg::is_psd(psd, 1e-12));
  ASSERT_FALSE(linalg::is_psd(-psd, 1e-12));
  ASSERT_LE(linalg::min_eigenvalue(h), linalg::max_eigenvalue(h));
}

TEST(linalg, predicates) {
  CMatrix y = oracle::pauli('Y');
  ASSERT_TRUE(linalg::is_hermitian(y, 1e-15));
  ASSERT_TRUE(linalg::is_imaginary(y, 1e-15));
  ASSERT_FALSE(linalg::is_real(y, 1e-15));
  ASSERT_TRUE(linalg::is_real(oracle::pauli('X'), 1e-15));
}

TEST(linalg, vec_is_column_major) {
  CMatrix m = random_matrix(2, 3, 8);
  CVector v = linalg::vec(m);
  ASSERT_EQ(v(1), m(1, 0));
  ASSERT_EQ(v(2), m(0, 1));
  ASSERT_EQ(linalg::unvec(v, 2, 3), m);
}

TEST(linalg, closest_unitary) {
  CMatrix m = random_matrix(3, 3, 9);
  CMatrix u = linalg::closest_unitary(m);
  ASSERT_LT(oracle::max_abs(u * u.adjoint() - CMatrix::Identity(3, 3)), 1e-12);
  CMatrix r = m.real().cast<Complex>();
  CMatrix o = linalg::closest_unitary(r);
  ASSERT_TRUE(linalg::is_real(o, 1e-14));
  ASSERT_LT(oracle::max_abs(o * o.adjoint() - CMatrix::Identity(3, 3)), 1e-12);
}

TEST(linalg, superop_tensor_acts_on_products) {
  // vec(A X B) = (B^T ⊗ A) vec(X) for column-major vec.
  CMatrix a = random_matrix(2, 2, 11);
  CMatrix b = random_matrix(3, 3, 12);
  CMatrix fa = oracle::kron(a.conjugate(), a);
  CMatrix fb = oracle::kron(b.conjugate(), b);
  CMatrix f = linalg::superop_tensor(fa, 2, 2, fb, 3, 3);
  CMatrix x = random_hermitian(2, 13);
  CMatrix y = random_hermitian(3, 14);
  CMatrix expect = oracle::kron(a * x * a.adjoint(), b * y * b.adjoint());
  CMatrix got = linalg::unvec(f * linalg::vec(oracle::kron(x, y)), 6, 6);
  ASSERT_LT(oracle::max_abs(got - expect), 1e-12);
}
