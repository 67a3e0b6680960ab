// Copyright 2026 The spacetime-swap Authors
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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spacetime/linalg.hpp"

namespace spacetime {

inline constexpr double kTolDichotomic = 1e-9;

// ---------------------------------------------------------------------------
// Partial operations on bipartite matrices. All of them work on any dense
// Eigen expression; A is the left tensor factor.

/// (Tr_B X)_ij = Tr X_ij.
template <typename Derived>
Matrix<typename Derived::Scalar> partial_trace_b(
    const Eigen::MatrixBase<Derived>& x, BlockStructure bs) {
  require_blocks(x, bs, "partial_trace_b");
  const Index n = bs.dim_b;
  Matrix<typename Derived::Scalar> out(bs.dim_a, bs.dim_a);
  for (Index i = 0; i < bs.dim_a; ++i)
    for (Index j = 0; j < bs.dim_a; ++j)
      out(i, j) = x.block(i * n, j * n, n, n).trace();
  return out;
}

/// Tr_A X = sum_i X_ii.
template <typename Derived>
Matrix<typename Derived::Scalar> partial_trace_a(
    const Eigen::MatrixBase<Derived>& x, BlockStructure bs) {
  require_blocks(x, bs, "partial_trace_a");
  const Index n = bs.dim_b;
  Matrix<typename Derived::Scalar> out =
      Matrix<typename Derived::Scalar>::Zero(n, n);
  for (Index i = 0; i < bs.dim_a; ++i) out += x.block(i * n, i * n, n, n);
  return out;
}

/// Transposes every block in place: block (i,j) becomes X_ij^T.
template <typename Derived>
Matrix<typename Derived::Scalar> partial_transpose_b(
    const Eigen::MatrixBase<Derived>& x, BlockStructure bs) {
  require_blocks(x, bs, "partial_transpose_b");
  const Index n = bs.dim_b;
  Matrix<typename Derived::Scalar> out(bs.total(), bs.total());
  for (Index i = 0; i < bs.dim_a; ++i)
    for (Index j = 0; j < bs.dim_a; ++j)
      out.block(i * n, j * n, n, n) = x.block(i * n, j * n, n, n).transpose();
  return out;
}

/// Swaps blocks: block (i,j) becomes X_ji.
template <typename Derived>
Matrix<typename Derived::Scalar> partial_transpose_a(
    const Eigen::MatrixBase<Derived>& x, BlockStructure bs) {
  require_blocks(x, bs, "partial_transpose_a");
  const Index n = bs.dim_b;
  Matrix<typename Derived::Scalar> out(bs.total(), bs.total());
  for (Index i = 0; i < bs.dim_a; ++i)
    for (Index j = 0; j < bs.dim_a; ++j)
      out.block(i * n, j * n, n, n) = x.block(j * n, i * n, n, n);
  return out;
}

/// A matrix tagged with its bipartite layout.
struct BipartiteOperator {
  ComplexMatrix matrix;
  BlockStructure bs;

  BipartiteOperator(ComplexMatrix m, BlockStructure structure)
      : matrix(std::move(m)), bs(structure) {
    require_blocks(matrix, bs, "BipartiteOperator");
  }
};

inline ComplexMatrix partial_trace_b(const BipartiteOperator& x) {
  return partial_trace_b(x.matrix, x.bs);
}
inline ComplexMatrix partial_trace_a(const BipartiteOperator& x) {
  return partial_trace_a(x.matrix, x.bs);
}
inline BipartiteOperator partial_transpose_b(const BipartiteOperator& x) {
  return {partial_transpose_b(x.matrix, x.bs), x.bs};
}
inline BipartiteOperator partial_transpose_a(const BipartiteOperator& x) {
  return {partial_transpose_a(x.matrix, x.bs), x.bs};
}

// ---------------------------------------------------------------------------
// States and observables.

/// Hermitian, unit-trace, positive semi-definite matrix. Checked on
/// construction.
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix m, double tol_zero = kTolZero);

  const ComplexMatrix& matrix() const { return matrix_; }
  Index dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

/// sigma_{a1} (x) ... (x) sigma_{am}, letters in {0,1,2,3} = {I,X,Y,Z}.
class PauliWord {
 public:
  PauliWord() = default;
  explicit PauliWord(std::vector<std::uint8_t> letters);
  /// Parses "IXYZ"-style text; also accepts the digits 0-3.
  static PauliWord parse(std::string_view text);
  /// Word whose letters are the base-4 digits of `index`, first letter most
  /// significant.
  static PauliWord from_index(std::size_t index, int qubits);

  int qubits() const { return static_cast<int>(letters_.size()); }
  const std::vector<std::uint8_t>& letters() const { return letters_; }
  std::size_t index() const;
  std::string str() const;
  bool is_identity() const;

  friend bool operator==(const PauliWord&, const PauliWord&) = default;

 private:
  std::vector<std::uint8_t> letters_;
};

/// The single-qubit Pauli matrix sigma_k, k in {0,1,2,3}.
ComplexMatrix pauli(int k);
ComplexMatrix pauli_matrix(const PauliWord& w);
/// All 4^m words on m qubits, in index order.
std::vector<PauliWord> all_pauli_words(int qubits);

/// Hermitian observable with spectrum in {+1,-1}, i.e. O^2 = 1.
class DichotomicObservable {
 public:
  explicit DichotomicObservable(ComplexMatrix m, double tol = kTolDichotomic);
  explicit DichotomicObservable(const PauliWord& w);

  const ComplexMatrix& matrix() const { return matrix_; }
  Index dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

struct Projectors {
  ComplexMatrix plus;
  ComplexMatrix minus;
};

/// Pi+- = (1 +- O)/2. The identity observable gives (1, 0).
Projectors projectors(const DichotomicObservable& obs);

/// Coefficients c_alpha = Tr(X sigma_alpha) / 2^m, indexed by word index.
RealVector pauli_basis_expand(const ComplexMatrix& x);
ComplexMatrix pauli_basis_reconstruct(const RealVector& coeffs, int qubits);

/// Number of qubits m with 2^m == side, or -1.
int qubit_count(Index side);

}  // namespace spacetime
