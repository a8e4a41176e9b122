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

#include "gpt_tomo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gpt_tomo::linalg {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

RMatrix kron(const RMatrix& a, const RMatrix& b) {
  RMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

int product(std::span<const int> dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

int numerical_rank(const RMatrix& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<RMatrix> svd(m);
  const RVector& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * s(0)) ++rank;
  }
  return rank;
}

RMatrix column_span_basis(const RMatrix& m, double rel_tol) {
  if (m.size() == 0) return RMatrix(m.rows(), 0);
  Eigen::BDCSVD<RMatrix> svd(m, Eigen::ComputeThinU);
  const RVector& s = svd.singularValues();
  int rank = 0;
  if (s.size() > 0 && s(0) > 0.0) {
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      if (s(i) > rel_tol * s(0)) ++rank;
    }
  }
  return svd.matrixU().leftCols(rank);
}

bool is_hermitian(const CMatrix& m, double tol) {
  return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_real(const CMatrix& m, double tol) {
  return m.size() == 0 || m.imag().cwiseAbs().maxCoeff() <= tol;
}

bool is_imaginary(const CMatrix& m, double tol) {
  return m.size() == 0 || m.real().cwiseAbs().maxCoeff() <= tol;
}

std::pair<RVector, CMatrix> eigh(const CMatrix& h, bool real_vectors) {
  if (real_vectors) {
    const RMatrix sym = 0.5 * (h.real() + h.real().transpose());
    Eigen::SelfAdjointEigenSolver<RMatrix> es(sym);
    return {es.eigenvalues(), es.eigenvectors().cast<Complex>()};
  }
  const CMatrix herm = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
  return {es.eigenvalues(), es.eigenvectors()};
}

double min_eigenvalue(const CMatrix& h) {
  if (h.size() == 0) return 0.0;
  return eigh(h).first.minCoeff();
}

double max_eigenvalue(const CMatrix& h) {
  if (h.size() == 0) return 0.0;
  return eigh(h).first.maxCoeff();
}

bool is_psd(const CMatrix& h, double tol) {
  return is_hermitian(h, tol) && min_eigenvalue(h) >= -tol;
}

CMatrix psd_sqrt(const CMatrix& h, bool real_vectors) {
  auto [vals, vecs] = eigh(h, real_vectors);
  RVector roots = vals.cwiseMax(0.0).cwiseSqrt();
  return vecs * roots.cast<Complex>().asDiagonal() * vecs.adjoint();
}

double trace_norm(const CMatrix& h) {
  return eigh(h).first.cwiseAbs().sum();
}

int operator_basis_size(int n, bool symmetric_only) {
  return symmetric_only ? n * (n + 1) / 2 : n * n;
}

namespace {

// Maps an off-diagonal position p in [0, n(n-1)/2) to the pair (j, k), j < k.
std::pair<int, int> off_diagonal_pair(int n, int p) {
  for (int j = 0; j < n; ++j) {
    const int row = n - 1 - j;
    if (p < row) return {j, j + 1 + p};
    p -= row;
  }
  throw std::out_of_range("operator basis index");
}

}  // namespace

CMatrix operator_basis_element(int n, int index) {
  const int pairs = n * (n - 1) / 2;
  CMatrix b = CMatrix::Zero(n, n);
  const double r = 1.0 / std::sqrt(2.0);
  if (index < n) {
    b(index, index) = 1.0;
  } else if (index < n + pairs) {
    auto [j, k] = off_diagonal_pair(n, index - n);
    b(j, k) = r;
    b(k, j) = r;
  } else if (index < n + 2 * pairs) {
    auto [j, k] = off_diagonal_pair(n, index - n - pairs);
    b(k, j) = Complex(0.0, r);
    b(j, k) = Complex(0.0, -r);
  } else {
    throw std::out_of_range("operator basis index");
  }
  return b;
}

RVector operator_coords(const CMatrix& h, bool symmetric_only) {
  const int n = static_cast<int>(h.rows());
  const int pairs = n * (n - 1) / 2;
  RVector c(operator_basis_size(n, symmetric_only));
  const double s2 = std::sqrt(2.0);
  for (int k = 0; k < n; ++k) c(k) = h(k, k).real();
  int p = 0;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k, ++p) {
      // Tr(B h) for the symmetric and antisymmetric elements of this pair.
      c(n + p) = ((h(j, k) + h(k, j)) / s2).real();
      if (!symmetric_only) {
        c(n + pairs + p) = (Complex(0.0, 1.0) * (h(j, k) - h(k, j)) / s2).real();
      }
    }
  }
  return c;
}

CMatrix from_operator_coords(const RVector& coords, int n) {
  CMatrix h = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < coords.size(); ++i) {
    if (coords(i) != 0.0) h += coords(i) * operator_basis_element(n, static_cast<int>(i));
  }
  return h;
}

CVector vec(const CMatrix& m) {
  return Eigen::Map<const CVector>(m.data(), m.size());
}

CMatrix unvec(const CVector& v, Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

namespace {

std::vector<int> permutation_of_indices(std::span<const int> dims,
                                        std::span<const int> order) {
  const int k = static_cast<int>(dims.size());
  const int total = product(dims);
  std::vector<int> new_dims(k);
  for (int i = 0; i < k; ++i) new_dims[i] = dims[order[i]];
  std::vector<int> new_strides(k, 1);
  for (int i = k - 2; i >= 0; --i) new_strides[i] = new_strides[i + 1] * new_dims[i + 1];
  // position of old factor f in the new ordering
  std::vector<int> where(k);
  for (int i = 0; i < k; ++i) where[order[i]] = i;

  std::vector<int> perm(total);
  std::vector<int> digits(k);
  for (int idx = 0; idx < total; ++idx) {
    int rest = idx;
    for (int f = k - 1; f >= 0; --f) {
      digits[f] = rest % dims[f];
      rest /= dims[f];
    }
    int out = 0;
    for (int f = 0; f < k; ++f) out += digits[f] * new_strides[where[f]];
    perm[idx] = out;
  }
  return perm;
}

}  // namespace

CMatrix permute_subsystems(const CMatrix& op, std::span<const int> dims,
                           std::span<const int> order) {
  if (dims.size() != order.size()) {
    throw std::invalid_argument("permute_subsystems: order length mismatch");
  }
  const int total = product(dims);
  if (op.rows() != total || op.cols() != total) {
    throw std::invalid_argument("permute_subsystems: operator size mismatch");
  }
  const auto perm = permutation_of_indices(dims, order);
  CMatrix out(total, total);
  for (int r = 0; r < total; ++r) {
    for (int c = 0; c < total; ++c) out(perm[r], perm[c]) = op(r, c);
  }
  return out;
}

CMatrix partial_contract(const CMatrix& op, std::span<const int> dims,
                         std::span<const int> keep, const CMatrix& effect) {
  const int k = static_cast<int>(dims.size());
  std::vector<bool> kept(k, false);
  std::vector<int> order;
  for (int f : keep) {
    if (f < 0 || f >= k || kept[f]) {
      throw std::out_of_range("partial_contract: invalid subsystem selector");
    }
    kept[f] = true;
    order.push_back(f);
  }
  int keep_dim = 1;
  int drop_dim = 1;
  for (int f = 0; f < k; ++f) {
    if (kept[f]) {
      keep_dim *= dims[f];
    } else {
      order.push_back(f);
      drop_dim *= dims[f];
    }
  }
  if (effect.rows() != drop_dim || effect.cols() != drop_dim) {
    throw std::invalid_argument("partial_contract: effect size mismatch");
  }
  const CMatrix y = permute_subsystems(op, dims, order);
  CMatrix out = CMatrix::Zero(keep_dim, keep_dim);
  for (int a = 0; a < keep_dim; ++a) {
    for (int b = 0; b < keep_dim; ++b) {
      Complex acc = 0.0;
      for (int d = 0; d < drop_dim; ++d) {
        for (int e = 0; e < drop_dim; ++e) {
          acc += effect(d, e) * y(a * drop_dim + e, b * drop_dim + d);
        }
      }
      out(a, b) = acc;
    }
  }
  return out;
}

CMatrix partial_trace(const CMatrix& op, std::span<const int> dims,
                      std::span<const int> keep) {
  int drop_dim = product(dims);
  for (int f : keep) {
    if (f < 0 || f >= static_cast<int>(dims.size())) {
      throw std::out_of_range("partial_trace: invalid subsystem selector");
    }
    drop_dim /= dims[f];
  }
  return partial_contract(op, dims, keep, CMatrix::Identity(drop_dim, drop_dim));
}

CMatrix superop_tensor(const CMatrix& f, int in_f, int out_f, const CMatrix& g,
                       int in_g, int out_g) {
  const int m = out_f * out_g;
  const int n = in_f * in_g;
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(m) * m,
                              static_cast<Eigen::Index>(n) * n);
  for (int l1 = 0; l1 < in_f; ++l1)
    for (int k1 = 0; k1 < in_f; ++k1)
      for (int j1 = 0; j1 < out_f; ++j1)
        for (int i1 = 0; i1 < out_f; ++i1) {
          const Complex fv = f(i1 + out_f * j1, k1 + in_f * l1);
          if (fv == 0.0) continue;
          for (int l2 = 0; l2 < in_g; ++l2)
            for (int k2 = 0; k2 < in_g; ++k2) {
              const int col = (k1 * in_g + k2) + n * (l1 * in_g + l2);
              for (int j2 = 0; j2 < out_g; ++j2)
                for (int i2 = 0; i2 < out_g; ++i2) {
                  const int row = (i1 * out_g + i2) + m * (j1 * out_g + j2);
                  out(row, col) += fv * g(i2 + out_g * j2, k2 + in_g * l2);
                }
            }
        }
  return out;
}

CMatrix closest_unitary(const CMatrix& m) {
  if (m.size() > 0 && m.imag().cwiseAbs().maxCoeff() == 0.0) {
    // Stay in real arithmetic so that real inputs give orthogonal factors.
    Eigen::JacobiSVD<RMatrix> svd(m.real(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    return (svd.matrixU() * svd.matrixV().transpose()).cast<Complex>();
  }
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace gpt_tomo::linalg
