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

// Two-point sequential measurements: prepare rho, measure a dichotomic
// observable, send the collapsed state through a channel, measure again.

#pragma once

#include <cstdint>
#include <string>

#include "spacetime/channels.hpp"

namespace spacetime {

struct TpsmScenario {
  DensityOperator rho;
  Channel channel;
  DichotomicObservable obs_a;
  DichotomicObservable obs_b;

  TpsmScenario(DensityOperator rho, Channel channel, DichotomicObservable obs_a,
               DichotomicObservable obs_b);
};

/// sum_{a=+-} a Tr[E(Pi_a rho Pi_a) obs_b].
double correlator_direct(const TpsmScenario& s);

/// Tr[pdm (obs_a (x) obs_b)].
double correlator_via_pdm(const ComplexMatrix& pdm,
                          const DichotomicObservable& obs_a,
                          const DichotomicObservable& obs_b);
inline double correlator_via_pdm(const PseudoDensityOperator& pdm,
                                 const DichotomicObservable& obs_a,
                                 const DichotomicObservable& obs_b) {
  return correlator_via_pdm(pdm.matrix(), obs_a, obs_b);
}

/// Correlators for every pair of Pauli words, rows indexed by Alice's word
/// and columns by Bob's (see PauliWord::index).
class CorrelatorTable {
 public:
  /// Throws IncompleteTable unless `values` is 4^m x 4^n with no NaNs.
  CorrelatorTable(RealMatrix values, int qubits_a, int qubits_b);

  const RealMatrix& values() const { return values_; }
  int qubits_a() const { return qubits_a_; }
  int qubits_b() const { return qubits_b_; }
  double at(const PauliWord& a, const PauliWord& b) const;

 private:
  RealMatrix values_;
  int qubits_a_;
  int qubits_b_;
};

/// Table of correlator_direct over all Pauli pairs for (rho, channel).
CorrelatorTable correlator_table(const DensityOperator& rho, const Channel& ch);
/// Table of Tr[x (sigma_a (x) sigma_b)] over all Pauli pairs.
CorrelatorTable correlator_table(const ComplexMatrix& x, int qubits_a,
                                 int qubits_b);

/// sum_{ab} table[a,b] sigma_a (x) sigma_b / 2^{m+n}.
PseudoDensityOperator pdm_from_correlators(const CorrelatorTable& table);

struct SampleEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

/// Name of the pseudo-random engine behind simulate_tpsm.
inline constexpr const char* kSamplerEngine = "std::mt19937_64";

/// Monte Carlo estimate of the correlator with projective (Lueders) updates.
/// Branches with probability below 1e-12 are never sampled.
SampleEstimate simulate_tpsm(const TpsmScenario& s, std::uint64_t shots,
                             std::uint64_t seed);

struct NegativityWitness {
  double min_eigenvalue = 0.0;
  double negativity = 0.0;  // sum of |negative eigenvalues|
};

NegativityWitness negativity_witness(const ComplexMatrix& pdm,
                                     double tol = kTolZero);

/// True iff ||E(rho+) - E(rho-)||_F <= tol, where rho+- are the normalized
/// post-measurement states. A branch that is never sampled contributes 0.
bool time_locality_check(const TpsmScenario& s, double tol = kTolZero);

}  // namespace spacetime
