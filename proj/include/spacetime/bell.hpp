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

// CHSH scenarios on two qubits: the Bell-diagonal family, spatial and
// temporal CHSH values, and the comparison between a state and its partial
// transpose.

#pragma once

#include <array>

#include "spacetime/synthesis.hpp"
#include "spacetime/tpsm.hpp"

namespace spacetime {

/// (1 (x) 1 + sum_i a_i sigma_i (x) sigma_i) / 4. Throws NotAState when the
/// coefficients leave the state tetrahedron.
DensityOperator bell_diagonal(double a1, double a2, double a3);

struct ChshSetting {
  DichotomicObservable q;  // Alice
  DichotomicObservable r;  // Alice
  DichotomicObservable s;  // Bob
  DichotomicObservable t;  // Bob
};

/// Q = Z, R = X, S = -(Z + X)/sqrt2, T = (Z - X)/sqrt2.
ChshSetting standard_chsh_setting();

/// Q (x) S + R (x) S + R (x) T - Q (x) T.
ComplexMatrix chsh_operator(const ChshSetting& setting);

double chsh_spatial(const ComplexMatrix& rho_ab, const ChshSetting& setting);

struct ChshCorrelators {
  double qs = 0.0;
  double rs = 0.0;
  double rt = 0.0;
  double qt = 0.0;

  double value() const { return qs + rs + rt - qt; }
};

ChshCorrelators temporal_correlators(const DensityOperator& rho_a,
                                     const Channel& ch,
                                     const ChshSetting& setting);
double chsh_temporal(const DensityOperator& rho_a, const Channel& ch,
                     const ChshSetting& setting);

struct SwapReport {
  int sign = 1;  // a1 = a3 = sign, a2 = -1
  ComplexMatrix state;
  double spatial = 0.0;
  SynthesisResult synthesis;
  RealMatrix pauli_transfer;  // R_ab = Tr(sigma_a E(sigma_b)) / 2
  ChshCorrelators temporal;
  double temporal_via_pdm = 0.0;  // Tr[rho^{T_B} O]
  double yy_before = 0.0;         // Tr[rho (Y (x) Y)]
  double yy_after = 0.0;          // two-time <Y, Y> over (rho_A, E)
  NegativityWitness witness;      // of rho^{T_B}
  RealVector pt_spectrum;
  double pt_b_minus_pt_a = 0.0;   // ||rho^{T_B} - rho^{T_A}||_F
};

SwapReport swap_report(int sign);

}  // namespace spacetime
