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

#include "spacetime/channels.hpp"

#include <limits>

namespace spacetime {

Channel::Channel(ComplexMatrix choi, Index dim_in, Index dim_out)
    : choi_(std::move(choi)), dim_in_(dim_in), dim_out_(dim_out) {
  require_blocks(choi_, block_structure(), "Channel");
}

Channel Channel::checked(ComplexMatrix choi, Index dim_in, Index dim_out,
                         double tol) {
  Channel ch(std::move(choi), dim_in, dim_out);
  const CptpVerdict v = is_cptp(ch, tol);
  if (!v.completely_positive) {
    throw InvalidChannel("Choi matrix is not positive (min eigenvalue " +
                         std::to_string(v.min_choi_eigenvalue) + ")");
  }
  if (!v.trace_preserving) {
    throw InvalidChannel("channel is not trace preserving (residual " +
                         std::to_string(v.tp_residual) + ")");
  }
  return ch;
}

PseudoDensityOperator::PseudoDensityOperator(ComplexMatrix m, BlockStructure bs,
                                             double tol)
    : matrix_(std::move(m)), bs_(bs) {
  require_blocks(matrix_, bs_, "PseudoDensityOperator");
  if (hermiticity_residual(matrix_) > tol) {
    throw InvalidState("pseudo-density operator is not Hermitian");
  }
  if (std::abs(matrix_.trace() - Complex(1.0)) > tol) {
    throw InvalidState("pseudo-density operator does not have unit trace");
  }
}

Channel identity_channel(Index d) {
  return channel_from_map(d, d, [](const ComplexMatrix& e) { return e; });
}

Channel unitary_channel(const ComplexMatrix& u) {
  require_square(u, "unitary_channel");
  return channel_from_map(u.cols(), u.rows(), [&u](const ComplexMatrix& e) {
    return ComplexMatrix(u * e * u.adjoint());
  });
}

Channel replace_channel(const ComplexMatrix& sigma, Index dim_in) {
  require_square(sigma, "replace_channel");
  return channel_from_map(dim_in, sigma.rows(), [&sigma](const ComplexMatrix& e) {
    return ComplexMatrix(e.trace() * sigma);
  });
}

Channel depolarizing_channel(Index dim_in, Index dim_out) {
  return replace_channel(
      ComplexMatrix::Identity(dim_out, dim_out) / static_cast<double>(dim_out),
      dim_in);
}

ComplexMatrix jamiolkowski(const Channel& ch) {
  return partial_transpose_a(ch.choi(), ch.block_structure());
}

Channel from_jamiolkowski(const ComplexMatrix& j, Index dim_in,
                          Index dim_out) {
  return Channel(partial_transpose_a(j, BlockStructure{dim_in, dim_out}),
                 dim_in, dim_out);
}

ComplexMatrix apply_channel(const Channel& ch, const ComplexMatrix& rho) {
  if (rho.rows() != ch.dim_in() || rho.cols() != ch.dim_in()) {
    throw DimensionMismatch("apply: input has side " +
                            std::to_string(rho.rows()) + ", channel expects " +
                            std::to_string(ch.dim_in()));
  }
  // sum_ij rho_ij E(E_ij), the same as Tr_A[(rho^T (x) 1) C].
  const Index n = ch.dim_out();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < ch.dim_in(); ++i)
    for (Index j = 0; j < ch.dim_in(); ++j)
      if (rho(i, j) != Complex(0.0))
        out += rho(i, j) * ch.choi().block(i * n, j * n, n, n);
  return out;
}

Channel conjugate(const Channel& ch) {
  return Channel(ch.choi().transpose(), ch.dim_in(), ch.dim_out());
}

CptpVerdict is_cptp(const ComplexMatrix& choi, BlockStructure bs, double tol) {
  require_blocks(choi, bs, "is_cptp");
  CptpVerdict v;
  if (hermiticity_residual(choi) > tol * std::max(1.0, choi.norm())) {
    v.min_choi_eigenvalue = -std::numeric_limits<double>::infinity();
  } else {
    v.min_choi_eigenvalue = min_eigenvalue(choi, tol);
  }
  v.completely_positive = v.min_choi_eigenvalue >= -tol;
  v.tp_residual =
      (partial_trace_b(choi, bs) - ComplexMatrix::Identity(bs.dim_a, bs.dim_a))
          .norm();
  v.trace_preserving = v.tp_residual <= tol;
  return v;
}

ComplexMatrix star_product_matrix(const Channel& ch, const ComplexMatrix& rho) {
  if (rho.rows() != ch.dim_in() || rho.cols() != ch.dim_in()) {
    throw DimensionMismatch("star_product: state side does not match channel");
  }
  const ComplexMatrix lifted =
      kron(rho, ComplexMatrix::Identity(ch.dim_out(), ch.dim_out()));
  const ComplexMatrix j = jamiolkowski(ch);
  return (lifted * j + j * lifted) / 2.0;
}

PseudoDensityOperator star_product(const Channel& ch, const ComplexMatrix& rho) {
  return PseudoDensityOperator(star_product_matrix(ch, rho),
                               ch.block_structure());
}

RealMatrix pauli_transfer_matrix(const Channel& ch) {
  const int m = qubit_count(ch.dim_in());
  if (m < 0 || ch.dim_in() != ch.dim_out()) {
    throw DimensionMismatch(
        "pauli_transfer_matrix: channel must act on a qubit register");
  }
  const auto words = all_pauli_words(m);
  std::vector<ComplexMatrix> paulis;
  paulis.reserve(words.size());
  for (const auto& w : words) paulis.push_back(pauli_matrix(w));
  const auto count = static_cast<Index>(words.size());
  RealMatrix r(count, count);
  for (Index b = 0; b < count; ++b) {
    const ComplexMatrix out = apply_channel(ch, paulis[static_cast<std::size_t>(b)]);
    for (Index a = 0; a < count; ++a)
      r(a, b) = (paulis[static_cast<std::size_t>(a)] * out).trace().real() /
                static_cast<double>(ch.dim_out());
  }
  return r;
}

}  // namespace spacetime
