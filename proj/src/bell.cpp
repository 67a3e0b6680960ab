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

#include "spacetime/bell.hpp"

#include <cmath>

namespace spacetime {

DensityOperator bell_diagonal(double a1, double a2, double a3) {
  const std::array<double, 3> a{a1, a2, a3};
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  for (int i = 1; i <= 3; ++i) m += a[static_cast<std::size_t>(i - 1)] * kron(pauli(i), pauli(i));
  m /= 4.0;
  const double lo = min_eigenvalue(m);
  if (lo < -kTolZero) {
    throw NotAState("Bell-diagonal coefficients do not give a state (min eigenvalue " +
                    std::to_string(lo) + ")");
  }
  return DensityOperator(std::move(m));
}

ChshSetting standard_chsh_setting() {
  const double root2 = std::sqrt(2.0);
  return {DichotomicObservable(pauli(3)), DichotomicObservable(pauli(1)),
          DichotomicObservable(ComplexMatrix(-(pauli(3) + pauli(1)) / root2)),
          DichotomicObservable(ComplexMatrix((pauli(3) - pauli(1)) / root2))};
}

ComplexMatrix chsh_operator(const ChshSetting& c) {
  return kron(c.q.matrix(), c.s.matrix()) + kron(c.r.matrix(), c.s.matrix()) +
         kron(c.r.matrix(), c.t.matrix()) - kron(c.q.matrix(), c.t.matrix());
}

double chsh_spatial(const ComplexMatrix& rho_ab, const ChshSetting& setting) {
  const ComplexMatrix o = chsh_operator(setting);
  if (rho_ab.rows() != o.rows() || rho_ab.cols() != o.cols()) {
    throw DimensionMismatch("chsh_spatial: state does not match setting");
  }
  return (rho_ab * o).trace().real();
}

ChshCorrelators temporal_correlators(const DensityOperator& rho_a,
                                     const Channel& ch,
                                     const ChshSetting& c) {
  auto corr = [&](const DichotomicObservable& x, const DichotomicObservable& y) {
    return correlator_direct(TpsmScenario(rho_a, ch, x, y));
  };
  return {corr(c.q, c.s), corr(c.r, c.s), corr(c.r, c.t), corr(c.q, c.t)};
}

double chsh_temporal(const DensityOperator& rho_a, const Channel& ch,
                     const ChshSetting& setting) {
  return temporal_correlators(rho_a, ch, setting).value();
}

SwapReport swap_report(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const double a = static_cast<double>(sign);
  const DensityOperator rho = bell_diagonal(a, -1.0, a);
  const BlockStructure bs{2, 2};
  const ChshSetting setting = standard_chsh_setting();
  const DichotomicObservable yy(pauli(2));

  SwapReport rep{sign,
                 rho.matrix(),
                 chsh_spatial(rho.matrix(), setting),
                 synthesize_channel(rho, bs),
                 RealMatrix(),
                 ChshCorrelators{},
                 0.0,
                 0.0,
                 0.0,
                 NegativityWitness{},
                 RealVector(),
                 0.0};
  rep.pauli_transfer = pauli_transfer_matrix(rep.synthesis.channel);

  const DensityOperator rho_a(partial_trace_b(rho.matrix(), bs));
  rep.temporal = temporal_correlators(rho_a, rep.synthesis.channel, setting);

  const ComplexMatrix pt_b = partial_transpose_b(rho.matrix(), bs);
  rep.temporal_via_pdm = (pt_b * chsh_operator(setting)).trace().real();
  rep.yy_before = correlator_via_pdm(rho.matrix(), yy, yy);
  rep.yy_after = correlator_direct(TpsmScenario(rho_a, rep.synthesis.channel, yy, yy));
  rep.witness = negativity_witness(pt_b);
  rep.pt_spectrum = eigenvalues_hermitian(pt_b);
  rep.pt_b_minus_pt_a = frobenius_distance(pt_b, partial_transpose_a(rho.matrix(), bs));
  return rep;
}

}  // namespace spacetime
