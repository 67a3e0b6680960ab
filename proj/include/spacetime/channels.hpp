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

// Quantum channels stored as Choi matrices C[E] = sum_ij E_ij (x) E(E_ij).

#pragma once

#include "spacetime/operators.hpp"

namespace spacetime {

class Channel {
 public:
  /// Only the shape is checked; use `checked` to also demand CPTP.
  Channel(ComplexMatrix choi, Index dim_in, Index dim_out);
  static Channel checked(ComplexMatrix choi, Index dim_in, Index dim_out,
                         double tol = kTolCptp);

  const ComplexMatrix& choi() const { return choi_; }
  Index dim_in() const { return dim_in_; }
  Index dim_out() const { return dim_out_; }
  BlockStructure block_structure() const { return {dim_in_, dim_out_}; }

 private:
  ComplexMatrix choi_;
  Index dim_in_;
  Index dim_out_;
};

/// Hermitian unit-trace bipartite operator; may have negative eigenvalues.
class PseudoDensityOperator {
 public:
  PseudoDensityOperator(ComplexMatrix m, BlockStructure bs,
                        double tol = kTolCptp);

  const ComplexMatrix& matrix() const { return matrix_; }
  BlockStructure block_structure() const { return bs_; }

 private:
  ComplexMatrix matrix_;
  BlockStructure bs_;
};

struct CptpVerdict {
  bool completely_positive = false;
  bool trace_preserving = false;
  double min_choi_eigenvalue = 0.0;
  double tp_residual = 0.0;  // ||Tr_B C - 1||_F

  bool cptp() const { return completely_positive && trace_preserving; }
};

Channel identity_channel(Index d);
/// rho -> U rho U^dagger.
Channel unitary_channel(const ComplexMatrix& u);
/// rho -> Tr(rho) sigma.
Channel replace_channel(const ComplexMatrix& sigma, Index dim_in);
/// rho -> Tr(rho) 1/dim_out.
Channel depolarizing_channel(Index dim_in, Index dim_out);
/// Choi matrix of an arbitrary linear map given by its action on matrix
/// units.
template <typename Map>
Channel channel_from_map(Index dim_in, Index dim_out, Map&& map) {
  ComplexMatrix choi = ComplexMatrix::Zero(dim_in * dim_out, dim_in * dim_out);
  for (Index i = 0; i < dim_in; ++i)
    for (Index j = 0; j < dim_in; ++j)
      choi.block(i * dim_out, j * dim_out, dim_out, dim_out) =
          map(matrix_unit(dim_in, i, j));
  return Channel(std::move(choi), dim_in, dim_out);
}

/// J[E] = sum_ij E_ij (x) E(E_ji) = T_A(C[E]).
ComplexMatrix jamiolkowski(const Channel& ch);
Channel from_jamiolkowski(const ComplexMatrix& j, Index dim_in, Index dim_out);

/// E(rho) = Tr_A[(rho^T (x) 1) C[E]].
ComplexMatrix apply_channel(const Channel& ch, const ComplexMatrix& rho);

/// T o E o T, whose Choi matrix is C[E]^T.
Channel conjugate(const Channel& ch);

CptpVerdict is_cptp(const ComplexMatrix& choi, BlockStructure bs,
                    double tol = kTolCptp);
inline CptpVerdict is_cptp(const Channel& ch, double tol = kTolCptp) {
  return is_cptp(ch.choi(), ch.block_structure(), tol);
}

/// E * rho = {rho (x) 1, J[E]} / 2.
PseudoDensityOperator star_product(const Channel& ch, const ComplexMatrix& rho);
/// Same product without the Hermitian/unit-trace checks on the result.
ComplexMatrix star_product_matrix(const Channel& ch, const ComplexMatrix& rho);

/// Pauli transfer matrix R_ab = Tr(sigma_a E(sigma_b)) / 2^m for qubit
/// channels (dim_in == dim_out == 2^m).
RealMatrix pauli_transfer_matrix(const Channel& ch);

}  // namespace spacetime
