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

#include "spacetime/tpsm.hpp"

#include <array>
#include <cmath>
#include <algorithm>
#include <random>

#include "spacetime/random.hpp"

namespace spacetime {

namespace {

constexpr double kNeverSampled = 1e-12;

double trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.cwiseProduct(b.transpose()).sum().real();
}

}  // namespace

TpsmScenario::TpsmScenario(DensityOperator rho_, Channel channel_,
                           DichotomicObservable obs_a_,
                           DichotomicObservable obs_b_)
    : rho(std::move(rho_)),
      channel(std::move(channel_)),
      obs_a(std::move(obs_a_)),
      obs_b(std::move(obs_b_)) {
  if (rho.dim() != channel.dim_in() || obs_a.dim() != channel.dim_in()) {
    throw DimensionMismatch("TPSM scenario: Alice's side does not match channel input");
  }
  if (obs_b.dim() != channel.dim_out()) {
    throw DimensionMismatch("TPSM scenario: Bob's observable does not match channel output");
  }
}

double correlator_direct(const TpsmScenario& s) {
  const Projectors p = projectors(s.obs_a);
  const ComplexMatrix& rho = s.rho.matrix();
  const ComplexMatrix plus = apply_channel(s.channel, p.plus * rho * p.plus);
  const ComplexMatrix minus = apply_channel(s.channel, p.minus * rho * p.minus);
  return trace_product(plus, s.obs_b.matrix()) -
         trace_product(minus, s.obs_b.matrix());
}

double correlator_via_pdm(const ComplexMatrix& pdm,
                          const DichotomicObservable& obs_a,
                          const DichotomicObservable& obs_b) {
  if (pdm.rows() != obs_a.dim() * obs_b.dim() || pdm.cols() != pdm.rows()) {
    throw DimensionMismatch("correlator_via_pdm: observables do not match operator");
  }
  return trace_product(pdm, kron(obs_a.matrix(), obs_b.matrix()));
}

CorrelatorTable::CorrelatorTable(RealMatrix values, int qubits_a, int qubits_b)
    : values_(std::move(values)), qubits_a_(qubits_a), qubits_b_(qubits_b) {
  if (qubits_a < 0 || qubits_b < 0 ||
      values_.rows() != (Index{1} << (2 * qubits_a)) ||
      values_.cols() != (Index{1} << (2 * qubits_b))) {
    throw IncompleteTable("correlator table must cover all 4^m x 4^n pairs");
  }
  if (values_.hasNaN()) {
    throw IncompleteTable("correlator table has missing (NaN) entries");
  }
}

double CorrelatorTable::at(const PauliWord& a, const PauliWord& b) const {
  if (a.qubits() != qubits_a_ || b.qubits() != qubits_b_) {
    throw DimensionMismatch("CorrelatorTable::at: word lengths do not match");
  }
  return values_(static_cast<Index>(a.index()), static_cast<Index>(b.index()));
}

CorrelatorTable correlator_table(const DensityOperator& rho, const Channel& ch) {
  const int m = qubit_count(ch.dim_in());
  const int n = qubit_count(ch.dim_out());
  if (m < 0 || n < 0) {
    throw DimensionMismatch("correlator_table: dimensions must be powers of two");
  }
  const auto words_a = all_pauli_words(m);
  const auto words_b = all_pauli_words(n);
  std::vector<ComplexMatrix> paulis_b;
  for (const auto& w : words_b) paulis_b.push_back(pauli_matrix(w));

  RealMatrix values(static_cast<Index>(words_a.size()),
                    static_cast<Index>(words_b.size()));
  for (std::size_t a = 0; a < words_a.size(); ++a) {
    const Projectors p = projectors(DichotomicObservable(words_a[a]));
    const ComplexMatrix diff =
        apply_channel(ch, p.plus * rho.matrix() * p.plus) -
        apply_channel(ch, p.minus * rho.matrix() * p.minus);
    for (std::size_t b = 0; b < words_b.size(); ++b)
      values(static_cast<Index>(a), static_cast<Index>(b)) =
          trace_product(diff, paulis_b[b]);
  }
  return CorrelatorTable(std::move(values), m, n);
}

CorrelatorTable correlator_table(const ComplexMatrix& x, int qubits_a,
                                 int qubits_b) {
  const Index side = Index{1} << (qubits_a + qubits_b);
  if (x.rows() != side || x.cols() != side) {
    throw DimensionMismatch("correlator_table: operator side does not match qubit counts");
  }
  const auto words_a = all_pauli_words(qubits_a);
  const auto words_b = all_pauli_words(qubits_b);
  std::vector<ComplexMatrix> paulis_b;
  for (const auto& w : words_b) paulis_b.push_back(pauli_matrix(w));

  RealMatrix values(static_cast<Index>(words_a.size()),
                    static_cast<Index>(words_b.size()));
  for (std::size_t a = 0; a < words_a.size(); ++a) {
    const ComplexMatrix pa = pauli_matrix(words_a[a]);
    for (std::size_t b = 0; b < words_b.size(); ++b)
      values(static_cast<Index>(a), static_cast<Index>(b)) =
          trace_product(x, kron(pa, paulis_b[b]));
  }
  return CorrelatorTable(std::move(values), qubits_a, qubits_b);
}

PseudoDensityOperator pdm_from_correlators(const CorrelatorTable& table) {
  const int m = table.qubits_a();
  const int n = table.qubits_b();
  const Index side = Index{1} << (m + n);
  ComplexMatrix x = ComplexMatrix::Zero(side, side);
  const auto words_a = all_pauli_words(m);
  const auto words_b = all_pauli_words(n);
  for (std::size_t a = 0; a < words_a.size(); ++a) {
    const ComplexMatrix pa = pauli_matrix(words_a[a]);
    for (std::size_t b = 0; b < words_b.size(); ++b) {
      const double c =
          table.values()(static_cast<Index>(a), static_cast<Index>(b));
      if (c != 0.0) x += c * kron(pa, pauli_matrix(words_b[b]));
    }
  }
  x /= static_cast<double>(side);
  return PseudoDensityOperator(std::move(x),
                               BlockStructure{Index{1} << m, Index{1} << n});
}

SampleEstimate simulate_tpsm(const TpsmScenario& s, std::uint64_t shots,
                             std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("simulate_tpsm: shots must be >= 1");

  // The outcome distribution is fixed by the scenario, so the branch and
  // conditional probabilities are computed once and shots only draw from them.
  const Projectors pa = projectors(s.obs_a);
  const Projectors pb = projectors(s.obs_b);
  std::array<double, 2> p_a{};           // P(a = +1), P(a = -1)
  std::array<double, 2> p_b_plus{};      // P(b = +1 | a)
  const std::array<const ComplexMatrix*, 2> alice{&pa.plus, &pa.minus};
  for (std::size_t k = 0; k < 2; ++k) {
    const ComplexMatrix branch = *alice[k] * s.rho.matrix() * *alice[k];
    p_a[k] = std::clamp(branch.trace().real(), 0.0, 1.0);
    if (p_a[k] < kNeverSampled) {
      p_a[k] = 0.0;
      continue;
    }
    const ComplexMatrix out = apply_channel(s.channel, branch / p_a[k]);
    p_b_plus[k] = std::clamp(trace_product(pb.plus, out), 0.0, 1.0);
  }
  const double prob_a_plus = p_a[0] / (p_a[0] + p_a[1]);

  Rng engine(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const std::size_t k = uniform(engine) < prob_a_plus ? 0 : 1;
    const double a = k == 0 ? 1.0 : -1.0;
    const double b = uniform(engine) < p_b_plus[k] ? 1.0 : -1.0;
    const double ab = a * b;
    sum += ab;
    sum_sq += ab * ab;
  }
  const auto n = static_cast<double>(shots);
  SampleEstimate est;
  est.estimate = sum / n;
  est.shots = shots;
  est.seed = seed;
  if (shots > 1) {
    const double var = std::max(0.0, (sum_sq - n * est.estimate * est.estimate) / (n - 1.0));
    est.standard_error = std::sqrt(var / n);
  }
  return est;
}

NegativityWitness negativity_witness(const ComplexMatrix& pdm, double tol) {
  const RealVector ev = eigenvalues_hermitian(pdm);
  NegativityWitness w;
  w.min_eigenvalue = ev.minCoeff();
  const double cut = tol * std::max(1.0, pdm.norm());
  for (Index k = 0; k < ev.size(); ++k)
    if (ev(k) < -cut) w.negativity -= ev(k);
  return w;
}

bool time_locality_check(const TpsmScenario& s, double tol) {
  const Projectors p = projectors(s.obs_a);
  const ComplexMatrix& rho = s.rho.matrix();
  auto branch = [&](const ComplexMatrix& proj) -> ComplexMatrix {
    const ComplexMatrix collapsed = proj * rho * proj;
    const double prob = collapsed.trace().real();
    const Index d = s.channel.dim_out();
    if (prob < kNeverSampled) return ComplexMatrix::Zero(d, d);
    return apply_channel(s.channel, collapsed) / prob;
  };
  return (branch(p.plus) - branch(p.minus)).norm() <= tol;
}

}  // namespace spacetime
