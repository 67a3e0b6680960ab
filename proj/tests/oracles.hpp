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

// Independent reference computations for the unit tests. Nothing here calls
// the block helpers of the library; everything is written with explicit
// index arithmetic or a dense linear solve.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Eigen::Index;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// (Tr_B X)(i,j) = sum_k X(i n + k, j n + k).
inline Mat partial_trace_b(const Mat& x, Index d, Index n) {
  Mat out = Mat::Zero(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < n; ++k) out(i, j) += x(i * n + k, j * n + k);
  return out;
}

inline Mat partial_trace_a(const Mat& x, Index d, Index n) {
  Mat out = Mat::Zero(n, n);
  for (Index k = 0; k < n; ++k)
    for (Index l = 0; l < n; ++l)
      for (Index i = 0; i < d; ++i) out(k, l) += x(i * n + k, i * n + l);
  return out;
}

/// <i k| X^{T_B} |j l> = <i l| X |j k>.
inline Mat partial_transpose_b(const Mat& x, Index d, Index n) {
  Mat out(d * n, d * n);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < n; ++k)
        for (Index l = 0; l < n; ++l)
          out(i * n + k, j * n + l) = x(i * n + l, j * n + k);
  return out;
}

/// <i k| X^{T_A} |j l> = <j k| X |i l>.
inline Mat partial_transpose_a(const Mat& x, Index d, Index n) {
  Mat out(d * n, d * n);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < n; ++k)
        for (Index l = 0; l < n; ++l)
          out(i * n + k, j * n + l) = x(j * n + k, i * n + l);
  return out;
}

/// SWAP |i j> = |j i> on C^d (x) C^d.
inline Mat swap(Index d) {
  Mat s = Mat::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) s(j * d + i, i * d + j) = 1.0;
  return s;
}

/// |Phi+><Phi+| with |Phi+> = (|00> + |11>)/sqrt2.
inline Mat bell_projector() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v * v.adjoint();
}

/// (1 + sum_i a_i sigma_i (x) sigma_i) / 4 written out entrywise.
inline Mat bell_diagonal(double a1, double a2, double a3) {
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = m(3, 3) = (1.0 + a3) / 4.0;
  m(1, 1) = m(2, 2) = (1.0 - a3) / 4.0;
  m(0, 3) = m(3, 0) = (a1 - a2) / 4.0;
  m(1, 2) = m(2, 1) = (a1 + a2) / 4.0;
  return m;
}

/// sum_ij E_ij (x) map(E_ij).
inline Mat choi_of(Index d_in, Index d_out,
                   const std::function<Mat(const Mat&)>& map) {
  Mat c = Mat::Zero(d_in * d_out, d_in * d_out);
  for (Index i = 0; i < d_in; ++i)
    for (Index j = 0; j < d_in; ++j) {
      Mat e = Mat::Zero(d_in, d_in);
      e(i, j) = 1.0;
      c += kron(e, map(e));
    }
  return c;
}

/// Solves (L (x) 1) Z + Z (L (x) 1) = D as one dense linear system on
/// vec(Z): (1 (x) M + M^T (x) 1) vec(Z) = vec(D) with M = diag(lambdas) (x) 1.
inline Mat brute_force_sylvester(const Eigen::VectorXd& lambdas, const Mat& d,
                                 Index n) {
  const Index side = lambdas.size() * n;
  Mat m = Mat::Zero(side, side);
  for (Index i = 0; i < lambdas.size(); ++i)
    for (Index k = 0; k < n; ++k) m(i * n + k, i * n + k) = lambdas(i);
  const Mat id = Mat::Identity(side, side);
  const Mat op = kron(id, m) + kron(m.transpose(), id);
  const Eigen::VectorXcd rhs = Eigen::Map<const Eigen::VectorXcd>(d.data(), d.size());
  const Eigen::VectorXcd z = op.fullPivLu().solve(rhs);
  return Eigen::Map<const Mat>(z.data(), side, side);
}

/// Composite Simpson approximation of int_0^T e^{-tL} D e^{-tL} dt with
/// L = diag(lambdas) (x) 1.
inline Mat sylvester_integral(const Eigen::VectorXd& lambdas, const Mat& d,
                              Index n, double t_max, int intervals) {
  const Index side = lambdas.size() * n;
  auto integrand = [&](double t) {
    Eigen::VectorXcd decay(side);
    for (Index i = 0; i < lambdas.size(); ++i)
      for (Index k = 0; k < n; ++k) decay(i * n + k) = std::exp(-t * lambdas(i));
    return Mat(decay.asDiagonal() * d * decay.asDiagonal());
  };
  const double h = t_max / intervals;
  Mat acc = integrand(0.0) + integrand(t_max);
  for (int k = 1; k < intervals; ++k)
    acc += (k % 2 == 1 ? 4.0 : 2.0) * integrand(k * h);
  return acc * (h / 3.0);
}

}  // namespace oracle
