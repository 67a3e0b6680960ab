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

// Channel synthesis for partial transposes: given a bipartite density
// operator rho on A (x) B, build the channel E : A -> B with
//
//   rho^{T_B} = E * rho_A     and     rho^{T_A} = conj(E) * rho_A^T,
//
// where rho_A = Tr_B rho and * is the star product. The Jamiolkowski
// operator X = J[E] solves (rho_A (x) 1) X + X (rho_A (x) 1) = 2 rho^{T_B};
// in the eigenbasis of rho_A that equation is block diagonal and is solved
// by solve_diagonal_sylvester.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spacetime/channels.hpp"

namespace spacetime {

struct SynthesisOptions {
  double tol_zero = kTolZero;    // eigenvalues of rho_A at or below are null
  double tol_resid = kTolResid;  // bound on both theorem residuals
};

/// Intermediate values of the synthesis pipeline.
struct SynthesisSteps {
  ComplexMatrix marginal;           // rho_A
  EigDecomposition<Complex> eig;    // rho_A = V diag(raw) V^dagger
  RealVector lambdas;               // clamped eigenvalues
  ComplexMatrix rhs;                // D = 2 (V^T (x) 1) rho^T (conj(V) (x) 1)
  ComplexMatrix solution;           // Z
  ComplexMatrix choi;               // (conj(V) (x) 1) Z (V^T (x) 1)
  std::vector<Index> gauge_blocks;  // indices with lambda_i == 0
};

struct SynthesisResult {
  Channel channel;
  double residual_tb = 0.0;
  double residual_ta = 0.0;
  bool rank_deficient = false;
  std::vector<Index> gauge_blocks;
};

SynthesisSteps synthesis_steps(const DensityOperator& rho, BlockStructure bs,
                               const SynthesisOptions& opts = {});

/// ||E * rho_A - rho^{T_B}||_F.
double residual_tb(const ComplexMatrix& rho, BlockStructure bs,
                   const Channel& ch);
/// ||conj(E) * rho_A^T - rho^{T_A}||_F, using only the T_B channel.
double residual_ta(const ComplexMatrix& rho, BlockStructure bs,
                   const Channel& ch);

/// Throws SynthesisFailure if either residual exceeds opts.tol_resid.
SynthesisResult synthesize_channel(const DensityOperator& rho,
                                   BlockStructure bs,
                                   const SynthesisOptions& opts = {});

struct TheoremCheck {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;
  bool all_passed() const;
  const TheoremCheck& find(const std::string& name) const;
};

/// Recomputes the residuals and CPTP margins of `result.channel` from
/// scratch. Never throws on failing checks.
TheoremReport verify_theorem(const DensityOperator& rho, BlockStructure bs,
                             const SynthesisResult& result,
                             const SynthesisOptions& opts = {},
                             double cptp_tol = kTolCptp);
TheoremReport verify_theorem(const DensityOperator& rho, BlockStructure bs,
                             const Channel& channel,
                             const SynthesisOptions& opts = {},
                             double cptp_tol = kTolCptp);

/// Re-synthesizes from (V (x) 1) rho (V^dagger (x) 1) for Haar-random V,
/// maps each channel back to the original frame and returns the largest
/// pairwise Choi distance. Requires a full-rank marginal.
double uniqueness_check(const DensityOperator& rho, BlockStructure bs,
                        int trials, std::uint64_t seed,
                        const SynthesisOptions& opts = {});

struct DualStateVerdict {
  bool dual = false;  // certified through positivity of rho^{T_B}
  std::optional<Channel> channel;
  double min_pt_eigenvalue = 0.0;
  double residual = 0.0;  // ||E' * rho_A - rho||_F when certified
};

/// A PPT state is reproduced by E' * rho_A, with E' synthesized from the
/// state rho^{T_B}. NPT inputs are reported as not certified.
DualStateVerdict is_dual_state(const DensityOperator& rho, BlockStructure bs,
                               double tol = kTolZero,
                               const SynthesisOptions& opts = {});

}  // namespace spacetime
