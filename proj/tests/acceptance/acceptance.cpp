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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "../random_states.hpp"
#include "commands.hpp"
#include "spacetime/bell.hpp"
#include "spacetime/synthesis.hpp"
#include "spacetime/tpsm.hpp"

namespace {

using namespace spacetime;
using nlohmann::json;

const double kRoot8 = 2.0 * std::sqrt(2.0);

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%+.10f", x);
  return buf;
}

json chsh_report(std::vector<std::string> args) {
  std::istringstream in;
  std::ostringstream out;
  std::ostringstream err;
  args.insert(args.begin(), "--no-timing");
  const int code = cli::run(args, in, out, err, std::nullopt);
  if (code != cli::kExitOk) throw std::runtime_error("chsh exited with " + std::to_string(code));
  return json::parse(out.str());
}

double max_abs(const RealMatrix& m) { return m.cwiseAbs().maxCoeff(); }

Outcome criterion_1() {
  const json plus = chsh_report({"chsh", "--sign", "+1", "--mode", "both"})["results"];
  const json minus = chsh_report({"chsh", "--sign", "-1", "--mode", "both"})["results"];
  const double ps = plus["spatial"]["value"];
  const double pt = plus["temporal"]["value"];
  const double ms = minus["spatial"]["value"];
  const double mt = minus["temporal"]["value"];
  Outcome o;
  o.passed = std::abs(ps - kRoot8) < 1e-9 && std::abs(pt - kRoot8) < 1e-9 &&
             std::abs(ms + kRoot8) < 1e-9 && std::abs(mt + kRoot8) < 1e-9;
  o.detail = "sign +1: spatial " + fixed(ps) + ", temporal " + fixed(pt) + "; sign -1: spatial " +
             fixed(ms) + ", temporal " + fixed(mt) + "; expected +1 -> " + fixed(kRoot8) +
             ", -1 -> " + fixed(-kRoot8);
  return o;
}

Outcome criterion_2() {
  const SynthesisResult res = synthesize_channel(bell_diagonal(1, -1, 1), {2, 2});
  const double dist = frobenius_distance(res.channel.choi(), identity_channel(2).choi());
  return {dist < 1e-8, "Choi distance to identity " + fmt(dist)};
}

Outcome criterion_3() {
  const SynthesisResult res = synthesize_channel(bell_diagonal(-1, -1, -1), {2, 2});
  double worst = 0.0;
  for (int i = 1; i <= 3; ++i) {
    const double sign = i == 2 ? 1.0 : -1.0;
    worst = std::max(worst, frobenius_distance(apply_channel(res.channel, pauli(i)),
                                               ComplexMatrix(sign * pauli(i))));
  }
  return {worst < 1e-8, "max ||E(sigma_i) -+ sigma_i|| " + fmt(worst)};
}

struct SynthesisBounds {
  double tb = 0.0;
  double ta = 0.0;
  double min_eig = std::numeric_limits<double>::infinity();
  double tp = 0.0;
  int failures = 0;

  void add(const ComplexMatrix& rho, BlockStructure bs) {
    const DensityOperator state(rho);
    const SynthesisResult res = synthesize_channel(state, bs);
    const CptpVerdict v = is_cptp(res.channel);
    tb = std::max(tb, res.residual_tb);
    ta = std::max(ta, res.residual_ta);
    min_eig = std::min(min_eig, v.min_choi_eigenvalue);
    tp = std::max(tp, v.tp_residual);
    if (!(res.residual_tb < 1e-8 && res.residual_ta < 1e-8 && v.min_choi_eigenvalue > -1e-9 &&
          v.tp_residual < 1e-9)) {
      ++failures;
    }
  }
};

Outcome criterion_4() {
  Rng rng(2024);
  SynthesisBounds full;
  SynthesisBounds deficient;
  int generic = 0;
  int low_rank = 0;
  for (int k = 0; k < 200; ++k, ++generic) {
    const BlockStructure bs{2 + k % 3, 2 + (k / 3) % 3};
    full.add(fixtures::random_bipartite_state(bs, rng), bs);
  }
  for (int k = 0; k < 50; ++k, ++low_rank) {
    const BlockStructure bs{2 + k % 3, 2 + (k / 3) % 3};
    if (k % 2 == 0) {
      deficient.add(fixtures::pure_marginal_product(bs, rng), bs);
    } else {
      const Index rank = 1 + (k / 2) % (bs.dim_a - 1);
      deficient.add(fixtures::restricted_support_state(bs, rank, rng), bs);
    }
  }
  Outcome o;
  o.passed = full.failures == 0 && deficient.failures == 0;
  o.detail = std::to_string(generic) + " full-rank + " + std::to_string(low_rank) +
             " rank-deficient states, failures " +
             std::to_string(full.failures + deficient.failures) + "; worst TB " +
             fmt(std::max(full.tb, deficient.tb)) + ", TA " + fmt(std::max(full.ta, deficient.ta)) +
             ", Choi min eig " + fmt(std::min(full.min_eig, deficient.min_eig)) + ", TP " +
             fmt(std::max(full.tp, deficient.tp));
  return o;
}

struct IdentityGaps {
  double tb = 0.0;
  double ta = 0.0;
  int pairs = 0;
};

IdentityGaps correlator_identity_gaps() {
  Rng rng(77);
  IdentityGaps gaps;
  for (int qa = 1; qa <= 2; ++qa) {
    const BlockStructure bs{Index{1} << qa, 2};
    for (int k = 0; k < 50; ++k, ++gaps.pairs) {
      const DensityOperator rho(fixtures::random_bipartite_state(bs, rng));
      const Channel ch = synthesize_channel(rho, bs).channel;
      const ComplexMatrix marginal = partial_trace_b(rho.matrix(), bs);
      const DensityOperator rho_a(marginal);
      const DensityOperator rho_a_t(ComplexMatrix(marginal.transpose()));

      const RealMatrix forward = correlator_table(rho_a, ch).values();
      const RealMatrix pt_b = correlator_table(partial_transpose_b(rho.matrix(), bs), qa, 1).values();
      gaps.tb = std::max(gaps.tb, max_abs(forward - pt_b));

      const RealMatrix backward = correlator_table(rho_a_t, conjugate(ch)).values();
      const RealMatrix pt_a = correlator_table(partial_transpose_a(rho.matrix(), bs), qa, 1).values();
      gaps.ta = std::max(gaps.ta, max_abs(backward - pt_a));
    }
  }
  return gaps;
}

Outcome criterion_5() {
  const IdentityGaps g = correlator_identity_gaps();
  return {g.tb < 1e-8, std::to_string(g.pairs) + " pairs on 1+1 and 2+1 qubits, max gap " +
                           fmt(g.tb)};
}

Outcome criterion_6() {
  const IdentityGaps g = correlator_identity_gaps();
  return {g.ta < 1e-8, std::to_string(g.pairs) + " pairs on 1+1 and 2+1 qubits, max gap " +
                           fmt(g.ta)};
}

Outcome criterion_7() {
  Rng rng(7);
  int failures = 0;
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const BlockStructure bs{2, 2 + k % 2};
    const DensityOperator rho(fixtures::random_ppt_state(bs, rng));
    const DualStateVerdict v = is_dual_state(rho, bs);
    worst = std::max(worst, v.residual);
    if (!v.dual || !(v.residual < 1e-8)) ++failures;
  }
  return {failures == 0, "50 PPT states on 2x2 and 2x3, failures " + std::to_string(failures) +
                             ", worst ||E' * rho_A - rho|| " + fmt(worst)};
}

Outcome criterion_8() {
  const ComplexMatrix bell = bell_diagonal(1, -1, 1).matrix();
  const RealVector spectrum = eigenvalues_hermitian(partial_transpose_b(bell, {2, 2}));
  RealVector expected(4);
  expected << -0.5, 0.5, 0.5, 0.5;
  const double spec_gap = (spectrum - expected).cwiseAbs().maxCoeff();

  const DichotomicObservable yy(pauli(2));
  const double before = correlator_via_pdm(bell, yy, yy);
  const DensityOperator rho_a(partial_trace_b(bell, {2, 2}));
  const Channel ch = synthesize_channel(bell_diagonal(1, -1, 1), {2, 2}).channel;
  const double after = correlator_direct(TpsmScenario(rho_a, ch, yy, yy));
  const double yy_gap = std::max(std::abs(before + 1.0), std::abs(after - 1.0));
  return {spec_gap < 1e-10 && yy_gap < 1e-10,
          "PT spectrum gap " + fmt(spec_gap) + "; YY " + fixed(before) + " -> " + fixed(after)};
}

Outcome criterion_9() {
  Rng rng(9);
  std::uniform_int_distribution<int> side(2, 3);
  int ladder = 0;
  int zero_block = 0;
  int anti = 0;
  int commute = 0;
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const BlockStructure bs{side(rng), side(rng)};
    const Index n = bs.dim_b;

    // Leading block submatrices of a PSD matrix are PSD.
    const ComplexMatrix x = random_density(bs.total(), 1 + k % bs.total(), rng);
    bool ok = true;
    for (Index r = 1; r <= bs.dim_a; ++r) {
      const double e = min_eigenvalue(ComplexMatrix(x.topLeftCorner(r * n, r * n)));
      worst = std::max(worst, -e);
      ok = ok && e >= -1e-10;
    }
    ladder += ok;

    // X = P^dagger Y P with P removing block k has X_kk = 0 and X_ki = X_ik = 0.
    const Index killed = k % bs.dim_a;
    ComplexMatrix p = identity(bs.total());
    p.block(killed * n, killed * n, n, n).setZero();
    const ComplexMatrix y = random_density(bs.total(), bs.total(), rng);
    const ComplexMatrix z = p.adjoint() * y * p;
    double off = block(z, bs, killed, killed).norm();
    for (Index i = 0; i < bs.dim_a; ++i) {
      off = std::max({off, block(z, bs, killed, i).norm(), block(z, bs, i, killed).norm()});
    }
    worst = std::max(worst, off);
    zero_block += is_psd(z) && off <= 1e-10;

    // T_A((rho (x) 1) X) = T_A(X) (rho^T (x) 1).
    const ComplexMatrix rho = random_density(bs.dim_a, bs.dim_a, rng);
    const ComplexMatrix g = random_ginibre(bs.total(), bs.total(), rng);
    const ComplexMatrix lhs = partial_transpose_a(ComplexMatrix(kron(rho, identity(n)) * g), bs);
    const ComplexMatrix rhs =
        partial_transpose_a(g, bs) * kron(ComplexMatrix(rho.transpose()), identity(n));
    const double anti_gap = frobenius_distance(lhs, rhs);
    worst = std::max(worst, anti_gap);
    anti += anti_gap <= 1e-10;

    // Tr_B commutes with A-unitaries, with T_A and with the full transpose.
    const ComplexMatrix u = random_unitary(bs.dim_a, rng);
    const ComplexMatrix ua = kron(u, identity(n));
    const ComplexMatrix tr = partial_trace_b(g, bs);
    const double c1 = frobenius_distance(partial_trace_b(ComplexMatrix(ua * g * ua.adjoint()), bs),
                                         ComplexMatrix(u * tr * u.adjoint()));
    const double c2 = frobenius_distance(partial_trace_b(partial_transpose_a(g, bs), bs),
                                         ComplexMatrix(tr.transpose()));
    const double c3 = frobenius_distance(partial_trace_b(ComplexMatrix(g.transpose()), bs),
                                         ComplexMatrix(tr.transpose()));
    worst = std::max({worst, c1, c2, c3});
    commute += std::max({c1, c2, c3}) <= 1e-10;
  }
  const bool passed = ladder == 100 && zero_block == 100 && anti == 100 && commute == 100;
  return {passed, "ladder " + std::to_string(ladder) + "/100, zero blocks " +
                      std::to_string(zero_block) + "/100, T_A antihomomorphism " +
                      std::to_string(anti) + "/100, Tr_B commutation " + std::to_string(commute) +
                      "/100; worst " + fmt(worst)};
}

Outcome criterion_10() {
  Outcome o;
  int within = 0;
  int total = 0;
  double worst_sigma = 0.0;
  bool reproducible = true;
  for (const char* sign : {"+1", "-1"}) {
    const std::vector<std::string> args = {"chsh",    "--sign", sign,   "--mode",
                                           "temporal", "--shots", "1000000", "--seed", "42"};
    const json first = chsh_report(args)["results"]["monte_carlo"];
    const json second = chsh_report(args)["results"]["monte_carlo"];
    for (const char* name : {"QS", "RS", "RT", "QT"}) {
      const json& c = first["correlators"][name];
      const double est = c["estimate"];
      const double se = c["standard_error"];
      const double exact = c["exact"];
      const double again = second["correlators"][name]["estimate"];
      reproducible = reproducible && std::memcmp(&est, &again, sizeof est) == 0;
      ++total;
      if (std::abs(est - exact) <= 5.0 * se) ++within;
      if (se > 0.0) worst_sigma = std::max(worst_sigma, std::abs(est - exact) / se);
    }
  }
  o.passed = within == total && reproducible;
  o.detail = std::to_string(within) + "/" + std::to_string(total) +
             " correlators within 5 sigma (worst " + fmt(worst_sigma) + " sigma), " +
             (reproducible ? "bit-reproducible" : "NOT reproducible");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;  // 0: none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "CHSH values +-2sqrt2 from the chsh command", 1.0, criterion_1},
      {2, "identity channel recovered from a1=a3=+1", 1.0, criterion_2},
      {3, "sigma_y conjugation recovered from a1=a3=-1", 0.0, criterion_3},
      {4, "synthesis property suite", 60.0, criterion_4},
      {5, "two-time correlators match Tr[rho^{T_B} (sigma x sigma)]", 0.0, criterion_5},
      {6, "conjugate channel matches Tr[rho^{T_A} (sigma x sigma)]", 0.0, criterion_6},
      {7, "PPT states are dual states", 0.0, criterion_7},
      {8, "negativity witness and YY sign flip", 0.0, criterion_8},
      {9, "block-structure property suite", 0.0, criterion_9},
      {10, "Monte Carlo CHSH correlators", 30.0, criterion_10},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = fmt(elapsed) + " s";
    if (c.time_limit_s > 0.0) {
      timing += " (limit " + fmt(c.time_limit_s) + " s)";
      if (elapsed >= c.time_limit_s) o.passed = false;
    }
    if (!o.passed) ++failed;
    std::printf("%s criterion %2d: %s -- %s [%s]\n", o.passed ? "PASS" : "FAIL", c.id, c.title,
                o.detail.c_str(), timing.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
