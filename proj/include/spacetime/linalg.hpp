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

// Dense matrix primitives shared by every module: block access on bipartite
// matrices, Hermitian eigendecomposition, PSD tests and the block-diagonal
// Sylvester solver used by channel synthesis.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <unsupported/Eigen/KroneckerProduct>

#include "spacetime/errors.hpp"

namespace spacetime {

using Index = Eigen::Index;
using Complex = std::complex<double>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using ComplexMatrix = Matrix<Complex>;
using RealMatrix = Matrix<double>;
using RealVector = Eigen::VectorXd;

// Default tolerances.
inline constexpr double kTolHerm = 1e-10;
inline constexpr double kTolZero = 1e-10;
inline constexpr double kTolResid = 1e-8;
inline constexpr double kTolCptp = 1e-9;

/// Bipartite index layout: A is the slow (left) tensor factor of side
/// `dim_a`, B the fast factor of side `dim_b`.
struct BlockStructure {
  Index dim_a = 0;
  Index dim_b = 0;

  constexpr Index total() const { return dim_a * dim_b; }
  friend bool operator==(const BlockStructure&, const BlockStructure&) = default;
};

template <typename Scalar>
struct EigDecomposition {
  RealVector eigenvalues;    // ascending
  Matrix<Scalar> unitary;    // columns are eigenvectors
};

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch(
        std::string(what) + ": expected a square matrix, got " +
        std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

template <typename Derived>
void require_blocks(const Eigen::MatrixBase<Derived>& m, BlockStructure bs,
                    const char* what) {
  require_square(m, what);
  if (bs.dim_a <= 0 || bs.dim_b <= 0 || m.rows() != bs.total()) {
    throw DimensionMismatch(
        std::string(what) + ": side " + std::to_string(m.rows()) +
        " does not match block structure " + std::to_string(bs.dim_a) + "x" +
        std::to_string(bs.dim_b));
  }
}

template <typename A, typename B>
Matrix<typename Eigen::ScalarBinaryOpTraits<typename A::Scalar,
                                            typename B::Scalar>::ReturnType>
kron(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return Eigen::kroneckerProduct(a.eval(), b.eval());
}

template <typename Scalar = Complex>
Matrix<Scalar> identity(Index d) {
  return Matrix<Scalar>::Identity(d, d);
}

/// Matrix unit E_ij of side d.
template <typename Scalar = Complex>
Matrix<Scalar> matrix_unit(Index d, Index i, Index j) {
  Matrix<Scalar> e = Matrix<Scalar>::Zero(d, d);
  e(i, j) = Scalar(1);
  return e;
}

/// The n x n block X_ij in X = sum_ij E_ij (x) X_ij.
template <typename Derived>
Matrix<typename Derived::Scalar> block(const Eigen::MatrixBase<Derived>& x,
                                       BlockStructure bs, Index i, Index j) {
  require_blocks(x, bs, "block");
  if (i < 0 || j < 0 || i >= bs.dim_a || j >= bs.dim_a) {
    throw DimensionMismatch("block: index out of range");
  }
  const Index n = bs.dim_b;
  return x.block(i * n, j * n, n, n);
}

template <typename A, typename B>
double frobenius_distance(const Eigen::MatrixBase<A>& a,
                          const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("frobenius_distance: shapes differ");
  }
  return (a - b).norm();
}

/// ||M - M^dagger||_F.
template <typename Derived>
double hermiticity_residual(const Eigen::MatrixBase<Derived>& m) {
  require_square(m, "hermiticity_residual");
  return (m - m.adjoint()).norm();
}

template <typename Derived>
void require_hermitian(const Eigen::MatrixBase<Derived>& m, double tol_herm,
                       const char* what) {
  const double r = hermiticity_residual(m);
  if (r > tol_herm * m.norm()) {
    throw NotHermitian(std::string(what) +
                       ": matrix is not Hermitian (residual " +
                       std::to_string(r) + ")");
  }
}

template <typename Derived>
EigDecomposition<typename Derived::Scalar> hermitian_eig(
    const Eigen::MatrixBase<Derived>& m, double tol_herm = kTolHerm) {
  require_hermitian(m, tol_herm, "hermitian_eig");
  using Scalar = typename Derived::Scalar;
  // Symmetrize so rounding noise in the strict upper triangle is not ignored.
  const Matrix<Scalar> sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

template <typename Derived>
RealVector eigenvalues_hermitian(const Eigen::MatrixBase<Derived>& m,
                                 double tol_herm = kTolHerm) {
  require_hermitian(m, tol_herm, "eigenvalues_hermitian");
  using Scalar = typename Derived::Scalar;
  const Matrix<Scalar> sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(sym,
                                                       Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

template <typename Derived>
double min_eigenvalue(const Eigen::MatrixBase<Derived>& m,
                      double tol_herm = kTolHerm) {
  return eigenvalues_hermitian(m, tol_herm).minCoeff();
}

/// True iff the smallest eigenvalue is >= -tol * max(1, ||M||_F).
template <typename Derived>
bool is_psd(const Eigen::MatrixBase<Derived>& m, double tol = kTolZero) {
  if (m.size() == 0) return true;
  return min_eigenvalue(m) >= -tol * std::max(1.0, m.norm());
}

/// Eigenvalues at or below tol_zero are treated as exactly zero.
inline RealVector clamp_null_eigenvalues(const RealVector& lambdas,
                                         double tol_zero) {
  return lambdas.unaryExpr(
      [tol_zero](double v) { return v <= tol_zero ? 0.0 : v; });
}

/// Threshold multiplier for blocks of D that must vanish. A diagonal block
/// whose eigenvalue was rounded to zero keeps trace up to 2*tol_zero.
inline constexpr double kSylvesterConsistencyFactor = 4.0;

/// Solves (L (x) 1) Z + Z (L (x) 1) = D for L = diag(lambdas) >= 0 and D
/// block-structured by `bs`. Blocks with lambda_i + lambda_j nonzero (after
/// clamping) are D_ij / (lambda_i + lambda_j). Off-diagonal null blocks are zero and
/// each null diagonal block is fixed to 1/n, which keeps Z positive with
/// unit-trace diagonal blocks.
template <typename Derived>
Matrix<typename Derived::Scalar> solve_diagonal_sylvester(
    const RealVector& lambdas, const Eigen::MatrixBase<Derived>& d,
    BlockStructure bs, double tol_zero = kTolZero) {
  using Scalar = typename Derived::Scalar;
  require_blocks(d, bs, "solve_diagonal_sylvester");
  if (lambdas.size() != bs.dim_a) {
    throw DimensionMismatch(
        "solve_diagonal_sylvester: need one eigenvalue per A index");
  }
  require_hermitian(d, kTolHerm, "solve_diagonal_sylvester");
  for (Index i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas(i) >= -tol_zero)) {
      throw InconsistentSystem(
          "solve_diagonal_sylvester: eigenvalue " + std::to_string(lambdas(i)) +
          " is negative");
    }
  }
  const RealVector lam = clamp_null_eigenvalues(lambdas, tol_zero);
  const Index n = bs.dim_b;
  const double consistency_tol =
      kSylvesterConsistencyFactor * tol_zero * std::max(1.0, d.norm());

  Matrix<Scalar> z = Matrix<Scalar>::Zero(bs.total(), bs.total());
  for (Index i = 0; i < bs.dim_a; ++i) {
    for (Index j = 0; j < bs.dim_a; ++j) {
      const double denom = lam(i) + lam(j);
      auto dij = d.block(i * n, j * n, n, n);
      if (denom > 0.0) {
        z.block(i * n, j * n, n, n) = dij / denom;
        continue;
      }
      if (dij.norm() > consistency_tol) {
        throw InconsistentSystem(
            "solve_diagonal_sylvester: block (" + std::to_string(i) + "," +
            std::to_string(j) + ") has norm " + std::to_string(dij.norm()) +
            " but both eigenvalues vanish");
      }
      if (i == j) {
        z.block(i * n, i * n, n, n) =
            Matrix<Scalar>::Identity(n, n) / static_cast<double>(n);
      }
    }
  }
  return z;
}

/// Frobenius norm of (L (x) 1) Z + Z (L (x) 1) - D over the blocks that are
/// not null after clamping.
template <typename DZ, typename DD>
double sylvester_residual(const RealVector& lambdas,
                          const Eigen::MatrixBase<DZ>& z,
                          const Eigen::MatrixBase<DD>& d, BlockStructure bs,
                          double tol_zero = kTolZero) {
  require_blocks(z, bs, "sylvester_residual");
  require_blocks(d, bs, "sylvester_residual");
  const RealVector lam = clamp_null_eigenvalues(lambdas, tol_zero);
  const Index n = bs.dim_b;
  double sq = 0.0;
  for (Index i = 0; i < bs.dim_a; ++i) {
    for (Index j = 0; j < bs.dim_a; ++j) {
      const double denom = lam(i) + lam(j);
      if (denom == 0.0) continue;
      sq += (z.block(i * n, j * n, n, n) * denom -
             d.block(i * n, j * n, n, n))
                .squaredNorm();
    }
  }
  return std::sqrt(sq);
}

}  // namespace spacetime
