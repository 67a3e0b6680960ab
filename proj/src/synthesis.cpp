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

#include "spacetime/synthesis.hpp"

#include <algorithm>

#include "spacetime/random.hpp"

namespace spacetime {

namespace {

ComplexMatrix lift_a(const ComplexMatrix& u, Index dim_b) {
  return kron(u, ComplexMatrix::Identity(dim_b, dim_b));
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return (m + m.adjoint()) / 2.0;
}

}  // namespace

SynthesisSteps synthesis_steps(const DensityOperator& rho, BlockStructure bs,
                               const SynthesisOptions& opts) {
  require_blocks(rho.matrix(), bs, "synthesize_channel");
  SynthesisSteps s;
  s.marginal = hermitian_part(partial_trace_b(rho.matrix(), bs));
  s.eig = hermitian_eig(s.marginal);

  const double scale = s.marginal.trace().real();
  const double tol_zero = opts.tol_zero * scale;
  if (s.eig.eigenvalues.minCoeff() < -tol_zero) {
    throw InvalidState("marginal has a negative eigenvalue");
  }
  s.lambdas = clamp_null_eigenvalues(s.eig.eigenvalues, tol_zero);
  for (Index i = 0; i < s.lambdas.size(); ++i)
    if (s.lambdas(i) == 0.0) s.gauge_blocks.push_back(i);

  // With U = V^dagger (so U rho_A U^dagger = diag), conj(U) = V^T and
  // U^T = conj(V).
  const ComplexMatrix left = lift_a(s.eig.unitary.transpose(), bs.dim_b);
  s.rhs = hermitian_part(2.0 * left * rho.matrix().transpose() * left.adjoint());
  s.solution = solve_diagonal_sylvester(s.lambdas, s.rhs, bs, tol_zero);
  s.choi = hermitian_part(left.adjoint() * s.solution * left);
  return s;
}

double residual_tb(const ComplexMatrix& rho, BlockStructure bs,
                   const Channel& ch) {
  const ComplexMatrix rho_a = partial_trace_b(rho, bs);
  return (star_product_matrix(ch, rho_a) - partial_transpose_b(rho, bs)).norm();
}

double residual_ta(const ComplexMatrix& rho, BlockStructure bs,
                   const Channel& ch) {
  const ComplexMatrix rho_a = partial_trace_b(rho, bs);
  return (star_product_matrix(conjugate(ch), rho_a.transpose()) -
          partial_transpose_a(rho, bs))
      .norm();
}

SynthesisResult synthesize_channel(const DensityOperator& rho,
                                   BlockStructure bs,
                                   const SynthesisOptions& opts) {
  SynthesisSteps s = synthesis_steps(rho, bs, opts);
  const bool rank_deficient = !s.gauge_blocks.empty();
  SynthesisResult r{Channel(std::move(s.choi), bs.dim_a, bs.dim_b), 0.0, 0.0,
                    rank_deficient, std::move(s.gauge_blocks)};
  r.residual_tb = residual_tb(rho.matrix(), bs, r.channel);
  r.residual_ta = residual_ta(rho.matrix(), bs, r.channel);
  if (!(r.residual_tb <= opts.tol_resid) || !(r.residual_ta <= opts.tol_resid)) {
    throw SynthesisFailure("synthesis residuals " +
                           std::to_string(r.residual_tb) + " / " +
                           std::to_string(r.residual_ta) + " exceed " +
                           std::to_string(opts.tol_resid));
  }
  return r;
}

bool TheoremReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const TheoremCheck& c) { return c.passed; });
}

const TheoremCheck& TheoremReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no theorem check named " + name);
}

TheoremReport verify_theorem(const DensityOperator& rho, BlockStructure bs,
                             const Channel& channel,
                             const SynthesisOptions& opts, double cptp_tol) {
  require_blocks(rho.matrix(), bs, "verify_theorem");
  if (channel.block_structure() != bs) {
    throw DimensionMismatch("verify_theorem: channel does not match state");
  }
  TheoremReport report;
  const double tb = residual_tb(rho.matrix(), bs, channel);
  const double ta = residual_ta(rho.matrix(), bs, channel);
  report.checks.push_back({"residual_TB", tb, opts.tol_resid, tb <= opts.tol_resid});
  report.checks.push_back({"residual_TA", ta, opts.tol_resid, ta <= opts.tol_resid});
  const CptpVerdict v = is_cptp(channel, cptp_tol);
  report.checks.push_back({"choi_min_eigenvalue", v.min_choi_eigenvalue,
                           cptp_tol, v.completely_positive});
  report.checks.push_back(
      {"tp_residual", v.tp_residual, cptp_tol, v.trace_preserving});
  return report;
}

TheoremReport verify_theorem(const DensityOperator& rho, BlockStructure bs,
                             const SynthesisResult& result,
                             const SynthesisOptions& opts, double cptp_tol) {
  return verify_theorem(rho, bs, result.channel, opts, cptp_tol);
}

double uniqueness_check(const DensityOperator& rho, BlockStructure bs,
                        int trials, std::uint64_t seed,
                        const SynthesisOptions& opts) {
  if (trials < 2) throw std::invalid_argument("uniqueness_check: trials < 2");
  require_blocks(rho.matrix(), bs, "uniqueness_check");
  const ComplexMatrix rho_a = partial_trace_b(rho.matrix(), bs);
  const RealVector lambdas = eigenvalues_hermitian(rho_a);
  if (lambdas.minCoeff() <= opts.tol_zero * rho_a.trace().real()) {
    throw RankDeficient("uniqueness_check: marginal is not full rank");
  }

  Rng rng(seed);
  std::vector<ComplexMatrix> chois;
  chois.push_back(synthesize_channel(rho, bs, opts).channel.choi());
  for (int t = 0; t < trials; ++t) {
    const ComplexMatrix v = lift_a(random_unitary(bs.dim_a, rng), bs.dim_b);
    const DensityOperator rotated(hermitian_part(v * rho.matrix() * v.adjoint()));
    const Channel ch = synthesize_channel(rotated, bs, opts).channel;
    // J transforms like the state: J' = (V (x) 1) J (V^dagger (x) 1).
    const ComplexMatrix j_back = v.adjoint() * jamiolkowski(ch) * v;
    chois.push_back(partial_transpose_a(j_back, bs));
  }
  double worst = 0.0;
  for (std::size_t a = 0; a < chois.size(); ++a)
    for (std::size_t b = a + 1; b < chois.size(); ++b)
      worst = std::max(worst, frobenius_distance(chois[a], chois[b]));
  return worst;
}

DualStateVerdict is_dual_state(const DensityOperator& rho, BlockStructure bs,
                               double tol, const SynthesisOptions& opts) {
  require_blocks(rho.matrix(), bs, "is_dual_state");
  DualStateVerdict verdict;
  const ComplexMatrix sigma =
      hermitian_part(partial_transpose_b(rho.matrix(), bs));
  verdict.min_pt_eigenvalue = min_eigenvalue(sigma);
  if (verdict.min_pt_eigenvalue < -tol * std::max(1.0, sigma.norm())) {
    return verdict;
  }
  const DensityOperator sigma_state(sigma, tol);
  Channel ch = synthesize_channel(sigma_state, bs, opts).channel;
  const ComplexMatrix rho_a = partial_trace_b(rho.matrix(), bs);
  verdict.residual = (star_product_matrix(ch, rho_a) - rho.matrix()).norm();
  verdict.dual = true;
  verdict.channel = std::move(ch);
  return verdict;
}

}  // namespace spacetime
