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

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace gpt_tomo {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

namespace linalg {

CMatrix kron(const CMatrix& a, const CMatrix& b);
RMatrix kron(const RMatrix& a, const RMatrix& b);

int product(std::span<const int> dims);

/// Number of singular values above `rel_tol` times the largest one.
int numerical_rank(const RMatrix& m, double rel_tol = 1e-9);

/// Orthonormal columns spanning the column space of `m`.
RMatrix column_span_basis(const RMatrix& m, double rel_tol = 1e-9);

bool is_hermitian(const CMatrix& m, double tol);
bool is_real(const CMatrix& m, double tol);
bool is_imaginary(const CMatrix& m, double tol);

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending. When
/// `real_vectors` is set the input is treated as real symmetric and the
/// eigenvectors come back with zero imaginary part.
std::pair<RVector, CMatrix> eigh(const CMatrix& h, bool real_vectors = false);

double min_eigenvalue(const CMatrix& h);
double max_eigenvalue(const CMatrix& h);
bool is_psd(const CMatrix& h, double tol);
CMatrix psd_sqrt(const CMatrix& h, bool real_vectors = false);
double trace_norm(const CMatrix& h);

// Operator basis on C^n, orthonormal for the Hilbert-Schmidt product:
//   index [0, n)                 E_kk
//   next n(n-1)/2 (j<k, row-major) (E_jk + E_kj) / sqrt2
//   next n(n-1)/2 (j<k, row-major) i (E_kj - E_jk) / sqrt2
// The first n(n+1)/2 elements span the real symmetric matrices.
int operator_basis_size(int n, bool symmetric_only);
CMatrix operator_basis_element(int n, int index);
RVector operator_coords(const CMatrix& h, bool symmetric_only);
CMatrix from_operator_coords(const RVector& coords, int n);

/// Column-major vectorisation, matching Eigen storage: vec(X)[i + n j] = X(i, j).
CVector vec(const CMatrix& m);
CMatrix unvec(const CVector& v, Eigen::Index rows, Eigen::Index cols);

/// Reorders the tensor factors of a square operator. Factor 0 is the most
/// significant index. New factor i is old factor order[i].
CMatrix permute_subsystems(const CMatrix& op, std::span<const int> dims,
                           std::span<const int> order);

/// Tr_D[(I_K (x) effect) op] where K are the factors in `keep` (result in
/// that order) and D the remaining factors in their original order.
CMatrix partial_contract(const CMatrix& op, std::span<const int> dims,
                         std::span<const int> keep, const CMatrix& effect);

CMatrix partial_trace(const CMatrix& op, std::span<const int> dims,
                      std::span<const int> keep);

/// Superoperator of f (x) g for column-major vectorised superoperators.
/// `in_f`/`out_f` are the Hilbert dimensions of f's input and output.
CMatrix superop_tensor(const CMatrix& f, int in_f, int out_f, const CMatrix& g,
                       int in_g, int out_g);

/// Unitary closest to `m` in Frobenius norm (polar factor). Exactly real
/// input gives a real orthogonal result.
CMatrix closest_unitary(const CMatrix& m);

}  // namespace linalg
}  // namespace gpt_tomo
