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

#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "spacetime/bell.hpp"
#include "spacetime/errors.hpp"
#include "spacetime/synthesis.hpp"
#include "spacetime/tpsm.hpp"

namespace spacetime::cli {

using nlohmann::json;

namespace {

json to_json(const RealVector& v) {
  json out = json::array();
  for (Index k = 0; k < v.size(); ++k) out.push_back(v(k));
  return out;
}

json to_json(const RealMatrix& m) {
  json out = json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(to_json(RealVector(m.row(i).transpose())));
  return out;
}

json words_json(int qubits) {
  json out = json::array();
  for (const PauliWord& w : all_pauli_words(qubits)) out.push_back(w.str());
  return out;
}

json matrix_json(const ComplexMatrix& m, std::vector<Index> dims, std::string label) {
  return matrix_file_to_json(MatrixFile{std::move(dims), m, std::move(label)});
}

/// Accumulates the common report fields.
class Report {
 public:
  Report(std::string command, const Context& ctx)
      : ctx_(ctx), start_(std::chrono::steady_clock::now()) {
    doc_["schema"] = kReportSchema;
    doc_["version"] = kVersion;
    doc_["command"] = std::move(command);
    doc_["argv"] = ctx.argv;
    doc_["inputs"] = json::array();
    doc_["tolerances"] = {{"tol_zero", ctx.tol.tol_zero},
                          {"tol_resid", ctx.tol.tol_resid},
                          {"tol_cptp", ctx.tol.tol_cptp}};
    doc_["results"] = json::object();
    doc_["checks"] = json::array();
  }

  MatrixFile load(const std::string& role, const std::string& path) {
    const std::string bytes = read_input(path, *ctx_.in);
    doc_["inputs"].push_back({{"role", role}, {"path", path}, {"sha256", sha256_hex(bytes)}});
    return parse_matrix_file(bytes);
  }

  json& results() { return doc_["results"]; }

  void check(const std::string& name, double value, double tolerance, bool passed) {
    doc_["checks"].push_back(
        {{"name", name}, {"value", value}, {"tolerance", tolerance}, {"passed", passed}});
  }
  void check_below(const std::string& name, double value, double tolerance) {
    check(name, value, tolerance, value <= tolerance);
  }
  void check(const TheoremReport& theorem) {
    for (const TheoremCheck& c : theorem.checks) check(c.name, c.value, c.tolerance, c.passed);
  }

  void rng(std::uint64_t seed) { doc_["rng"] = {{"engine", kSamplerEngine}, {"seed", seed}}; }

  CommandResult finish() {
    bool passed = true;
    for (const json& c : doc_["checks"]) passed = passed && c["passed"].get<bool>();
    doc_["passed"] = passed;
    if (ctx_.timing) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      doc_["wall_time_s"] = elapsed.count();
    }
    return CommandResult{doc_, passed ? kExitOk : kExitNumeric};
  }

 private:
  const Context& ctx_;
  std::chrono::steady_clock::time_point start_;
  json doc_;
};

SynthesisOptions synthesis_options(const Context& ctx) {
  return SynthesisOptions{ctx.tol.tol_zero, ctx.tol.tol_resid};
}

/// Synthesis that reports failures through the residuals instead of throwing.
SynthesisResult synthesize_unchecked(const DensityOperator& rho, BlockStructure bs,
                                     const SynthesisOptions& opts) {
  SynthesisSteps steps = synthesis_steps(rho, bs, opts);
  Channel ch(steps.choi, bs.dim_a, bs.dim_b);
  const double tb = residual_tb(rho.matrix(), bs, ch);
  const double ta = residual_ta(rho.matrix(), bs, ch);
  const bool deficient = !steps.gauge_blocks.empty();
  return SynthesisResult{std::move(ch), tb, ta, deficient, std::move(steps.gauge_blocks)};
}

int qubits_of(Index side, const char* what) {
  const int q = qubit_count(side);
  if (q < 1) {
    throw InputError(std::string(what) + " dimension " + std::to_string(side) +
                     " is not a power of two");
  }
  return q;
}

json table_json(const CorrelatorTable& t) { return to_json(t.values()); }

}  // namespace

Tolerances parse_tolerance_env(const std::string& text, Tolerances base) {
  auto number = [](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw InputError("SPACETIME_SWAP_TOL: cannot parse '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v) || v <= 0.0) {
      throw InputError("SPACETIME_SWAP_TOL: invalid tolerance '" + s + "'");
    }
    return v;
  };

  if (text.find('=') == std::string::npos) {
    base.tol_resid = number(text);
    return base;
  }
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw InputError("SPACETIME_SWAP_TOL: expected key=value");
    const std::string key = item.substr(0, eq);
    const double value = number(item.substr(eq + 1));
    if (key == "tol_zero") {
      base.tol_zero = value;
    } else if (key == "tol_resid") {
      base.tol_resid = value;
    } else if (key == "tol_cptp") {
      base.tol_cptp = value;
    } else {
      throw InputError("SPACETIME_SWAP_TOL: unknown key '" + key + "'");
    }
  }
  return base;
}

CommandResult cmd_synthesize(const SynthesizeArgs& args, const Context& ctx) {
  Report report("synthesize", ctx);
  const MatrixFile file = report.load("state", args.input);
  const BlockStructure bs = file.block_structure();
  const DensityOperator rho(file.matrix, ctx.tol.tol_zero);

  const SynthesisOptions opts = synthesis_options(ctx);
  const SynthesisResult result = synthesize_unchecked(rho, bs, opts);
  const TheoremReport theorem = verify_theorem(rho, bs, result, opts, ctx.tol.tol_cptp);
  const CptpVerdict cptp = is_cptp(result.channel, ctx.tol.tol_cptp);

  json& r = report.results();
  r["dims"] = file.dims;
  r["marginal_eigenvalues"] = to_json(eigenvalues_hermitian(partial_trace_b(rho.matrix(), bs)));
  r["rank_deficient"] = result.rank_deficient;
  r["gauge_blocks"] = result.gauge_blocks;
  r["residual_TB"] = result.residual_tb;
  r["residual_TA"] = result.residual_ta;
  r["choi_min_eigenvalue"] = cptp.min_choi_eigenvalue;
  r["tp_residual"] = cptp.tp_residual;
  r["completely_positive"] = cptp.completely_positive;
  r["trace_preserving"] = cptp.trace_preserving;
  r["choi"] = matrix_json(result.channel.choi(), file.dims, "choi");
  r["output"] = args.out ? json(*args.out) : json(nullptr);
  report.check(theorem);

  if (args.out) {
    write_output(*args.out, serialize_matrix_file(
                                MatrixFile{file.dims, result.channel.choi(), std::string("choi")}));
  }
  return report.finish();
}

CommandResult cmd_chsh(const ChshArgs& args, const Context& ctx) {
  if (args.sign != 1 && args.sign != -1) throw InputError("--sign must be +1 or -1");
  const bool spatial = args.mode == "spatial" || args.mode == "both";
  const bool temporal = args.mode == "temporal" || args.mode == "both";
  if (!spatial && !temporal) throw InputError("--mode must be spatial, temporal or both");
  if (args.shots && !temporal) throw InputError("--shots needs --mode temporal or both");
  if (args.shots && *args.shots < 1) throw InputError("--shots must be positive");

  Report report("chsh", ctx);
  const SwapReport swap = swap_report(args.sign);
  const ChshSetting setting = standard_chsh_setting();
  const double root8 = 2.0 * std::sqrt(2.0);

  json& r = report.results();
  r["sign"] = args.sign;
  r["mode"] = args.mode;
  r["state"] = {{"a1", static_cast<double>(args.sign)},
                {"a2", -1.0},
                {"a3", static_cast<double>(args.sign)}};

  if (spatial) {
    const ComplexMatrix& rho = swap.state;
    r["spatial"] = {{"value", swap.spatial},
                    {"correlators",
                     {{"QS", correlator_via_pdm(rho, setting.q, setting.s)},
                      {"RS", correlator_via_pdm(rho, setting.r, setting.s)},
                      {"RT", correlator_via_pdm(rho, setting.r, setting.t)},
                      {"QT", correlator_via_pdm(rho, setting.q, setting.t)}}}};
    report.check_below("tsirelson_spatial", std::abs(swap.spatial), root8 + kTolDichotomic);
  }

  if (temporal) {
    const ChshCorrelators& c = swap.temporal;
    r["temporal"] = {{"value", c.value()},
                     {"correlators", {{"QS", c.qs}, {"RS", c.rs}, {"RT", c.rt}, {"QT", c.qt}}},
                     {"via_pdm", swap.temporal_via_pdm}};
    r["channel"] = {{"pauli_transfer", to_json(swap.pauli_transfer)},
                    {"residual_TB", swap.synthesis.residual_tb},
                    {"residual_TA", swap.synthesis.residual_ta}};
    r["yy_before"] = swap.yy_before;
    r["yy_after"] = swap.yy_after;
    r["pt_spectrum"] = to_json(swap.pt_spectrum);
    r["pt_min_eigenvalue"] = swap.witness.min_eigenvalue;
    r["negativity"] = swap.witness.negativity;
    r["pt_b_minus_pt_a"] = swap.pt_b_minus_pt_a;
    report.check_below("residual_TB", swap.synthesis.residual_tb, ctx.tol.tol_resid);
    report.check_below("residual_TA", swap.synthesis.residual_ta, ctx.tol.tol_resid);
    report.check_below("temporal_vs_pdm", std::abs(c.value() - swap.temporal_via_pdm),
                       kTolZero);
  }
  if (spatial && temporal) {
    report.check_below("temporal_vs_spatial", std::abs(swap.temporal.value() - swap.spatial),
                       kTolDichotomic);
  }

  if (args.shots) {
    const DensityOperator rho_a(partial_trace_b(swap.state, {2, 2}));
    const Channel& ch = swap.synthesis.channel;
    struct Pair {
      const char* name;
      const DichotomicObservable* a;
      const DichotomicObservable* b;
      double sign;
    };
    const Pair pairs[] = {{"QS", &setting.q, &setting.s, 1.0},
                          {"RS", &setting.r, &setting.s, 1.0},
                          {"RT", &setting.r, &setting.t, 1.0},
                          {"QT", &setting.q, &setting.t, -1.0}};
    json mc = {{"shots", *args.shots}, {"correlators", json::object()}};
    double value = 0.0;
    double variance = 0.0;
    std::uint64_t offset = 0;
    for (const Pair& p : pairs) {
      const TpsmScenario scenario(rho_a, ch, *p.a, *p.b);
      const SampleEstimate est =
          simulate_tpsm(scenario, static_cast<std::uint64_t>(*args.shots), args.seed + offset++);
      const double exact = correlator_direct(scenario);
      const double deviation = std::abs(est.estimate - exact);
      mc["correlators"][p.name] = {{"estimate", est.estimate},
                                   {"standard_error", est.standard_error},
                                   {"exact", exact},
                                   {"seed", est.seed}};
      report.check(std::string("mc_") + p.name + "_within_5_sigma", deviation,
                   5.0 * est.standard_error, deviation <= 5.0 * est.standard_error);
      value += p.sign * est.estimate;
      variance += est.standard_error * est.standard_error;
    }
    mc["value"] = value;
    mc["standard_error"] = std::sqrt(variance);
    r["monte_carlo"] = std::move(mc);
    report.rng(args.seed);
  }
  return report.finish();
}

CommandResult cmd_spectrum(const SpectrumArgs& args, const Context& ctx) {
  if (args.pt != "none" && args.pt != "A" && args.pt != "B") {
    throw InputError("--pt must be none, A or B");
  }
  Report report("spectrum", ctx);
  const MatrixFile file = report.load("matrix", args.input);
  require_hermitian(file.matrix, kTolHerm, "spectrum");

  ComplexMatrix m = file.matrix;
  if (args.pt == "A") m = partial_transpose_a(m, file.block_structure());
  if (args.pt == "B") m = partial_transpose_b(m, file.block_structure());

  const NegativityWitness w = negativity_witness(m, ctx.tol.tol_zero);
  json& r = report.results();
  r["dims"] = file.dims;
  r["pt"] = args.pt;
  r["eigenvalues"] = to_json(eigenvalues_hermitian(m));
  r["min_eigenvalue"] = w.min_eigenvalue;
  r["negativity"] = w.negativity;
  r["psd"] = w.negativity == 0.0;
  if (file.dims.size() == 2) {
    const ComplexMatrix pt = partial_transpose_b(file.matrix, file.block_structure());
    r["ppt"] = negativity_witness(pt, ctx.tol.tol_zero).negativity == 0.0;
  } else {
    r["ppt"] = nullptr;
  }
  return report.finish();
}

CommandResult cmd_correlators(const CorrelatorsArgs& args, const Context& ctx) {
  const bool state_mode = args.state.has_value();
  if (state_mode == (args.rho.has_value() || args.choi.has_value()) ||
      (!state_mode && !(args.rho && args.choi))) {
    throw InputError("give either a state file or both --rho and --choi");
  }

  Report report("correlators", ctx);
  json& r = report.results();
  const SynthesisOptions opts = synthesis_options(ctx);
  auto check_qubits = [&](int qa, int qb) {
    if (args.qubits && *args.qubits != std::make_pair(qa, qb)) {
      throw InputError("--qubits does not match the input dimensions");
    }
    r["qubits"] = {qa, qb};
    r["words_a"] = words_json(qa);
    r["words_b"] = words_json(qb);
  };

  if (state_mode) {
    const MatrixFile file = report.load("state", *args.state);
    const BlockStructure bs = file.block_structure();
    const int qa = qubits_of(bs.dim_a, "A");
    const int qb = qubits_of(bs.dim_b, "B");
    check_qubits(qa, qb);
    const DensityOperator rho(file.matrix, ctx.tol.tol_zero);
    const SynthesisResult syn = synthesize_unchecked(rho, bs, opts);
    const DensityOperator rho_a(partial_trace_b(rho.matrix(), bs));

    const CorrelatorTable spatial = correlator_table(rho.matrix(), qa, qb);
    const CorrelatorTable pdm = correlator_table(partial_transpose_b(rho.matrix(), bs), qa, qb);
    const CorrelatorTable direct = correlator_table(rho_a, syn.channel);
    const double gap = (pdm.values() - direct.values()).cwiseAbs().maxCoeff();

    r["mode"] = "state";
    r["spatial"] = table_json(spatial);
    r["temporal_pdm"] = table_json(pdm);
    r["temporal_direct"] = table_json(direct);
    r["max_discrepancy"] = gap;
    report.check_below("residual_TB", syn.residual_tb, ctx.tol.tol_resid);
    report.check_below("residual_TA", syn.residual_ta, ctx.tol.tol_resid);
    report.check_below("max_discrepancy", gap, ctx.tol.tol_resid);
  } else {
    const MatrixFile rho_file = report.load("rho", *args.rho);
    const MatrixFile choi_file = report.load("choi", *args.choi);
    const BlockStructure bs = choi_file.block_structure();
    if (rho_file.matrix.rows() != bs.dim_a) {
      throw InputError("state dimension does not match the channel input");
    }
    const int qa = qubits_of(bs.dim_a, "A");
    const int qb = qubits_of(bs.dim_b, "B");
    check_qubits(qa, qb);
    const DensityOperator rho(rho_file.matrix, ctx.tol.tol_zero);
    const Channel ch(choi_file.matrix, bs.dim_a, bs.dim_b);
    const CptpVerdict cptp = is_cptp(ch, ctx.tol.tol_cptp);

    const CorrelatorTable direct = correlator_table(rho, ch);
    const CorrelatorTable pdm = correlator_table(star_product_matrix(ch, rho.matrix()), qa, qb);
    const double gap = (pdm.values() - direct.values()).cwiseAbs().maxCoeff();

    r["mode"] = "channel";
    r["direct"] = table_json(direct);
    r["pdm"] = table_json(pdm);
    r["max_discrepancy"] = gap;
    report.check("choi_min_eigenvalue", cptp.min_choi_eigenvalue, -ctx.tol.tol_cptp,
                 cptp.completely_positive);
    report.check_below("tp_residual", cptp.tp_residual, ctx.tol.tol_cptp);
    report.check_below("max_discrepancy", gap, ctx.tol.tol_resid);
  }
  return report.finish();
}

CommandResult cmd_verify(const VerifyArgs& args, const Context& ctx) {
  if (args.uniqueness_trials == 1 || args.uniqueness_trials < 0) {
    throw InputError("--uniqueness needs at least 2 trials");
  }
  Report report("verify", ctx);
  const MatrixFile file = report.load("state", args.input);
  const BlockStructure bs = file.block_structure();
  const DensityOperator rho(file.matrix, ctx.tol.tol_zero);
  const SynthesisOptions opts = synthesis_options(ctx);

  json& r = report.results();
  r["dims"] = file.dims;
  std::optional<Channel> channel;
  if (args.choi) {
    const MatrixFile choi = report.load("choi", *args.choi);
    if (choi.block_structure() != bs) {
      throw InputError("channel dimensions do not match the state");
    }
    channel.emplace(choi.matrix, bs.dim_a, bs.dim_b);
    r["channel_source"] = "file";
  } else {
    channel.emplace(synthesize_unchecked(rho, bs, opts).channel);
    r["channel_source"] = "synthesized";
  }

  const TheoremReport theorem = verify_theorem(rho, bs, *channel, opts, ctx.tol.tol_cptp);
  json checks = json::object();
  for (const TheoremCheck& c : theorem.checks) checks[c.name] = c.value;
  r["theorem"] = std::move(checks);
  report.check(theorem);

  const DualStateVerdict dual = is_dual_state(rho, bs, ctx.tol.tol_zero, opts);
  r["dual_state"] = {{"certified", dual.dual},
                     {"min_pt_eigenvalue", dual.min_pt_eigenvalue},
                     {"residual", dual.residual}};

  if (args.uniqueness_trials >= 2) {
    const double spread = uniqueness_check(rho, bs, args.uniqueness_trials, args.seed, opts);
    r["uniqueness"] = {{"trials", args.uniqueness_trials}, {"max_choi_distance", spread}};
    report.check_below("uniqueness", spread, ctx.tol.tol_resid);
    report.rng(args.seed);
  }
  return report.finish();
}

int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out,
        std::ostream& err, const std::optional<std::string>& env_tol) {
  CLI::App app{"Channel synthesis and two-time correlations for bipartite states",
               "spacetime-swap"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  std::optional<double> tol_zero;
  std::optional<double> tol_resid;
  std::optional<double> tol_cptp;
  bool no_timing = false;
  app.add_option("--tol-zero", tol_zero, "Null-eigenvalue threshold")->check(CLI::PositiveNumber);
  app.add_option("--tol-resid", tol_resid, "Bound on synthesis residuals")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-cptp", tol_cptp, "Bound on CPTP margins")->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", no_timing, "Omit wall time for byte-identical reports");

  SynthesizeArgs synth;
  CLI::App* synth_cmd = app.add_subcommand("synthesize", "Synthesize the T_B channel of a state");
  synth_cmd->add_option("input", synth.input, "State matrix file or -")->required();
  synth_cmd->add_option("--out", synth.out, "Write the Choi matrix here");

  ChshArgs chsh;
  CLI::App* chsh_cmd = app.add_subcommand("chsh", "Spatial and temporal CHSH for a1=a3=sign");
  chsh_cmd->add_option("--sign", chsh.sign, "+1 or -1")->required()->check(
      CLI::IsMember({1, -1}));
  chsh_cmd->add_option("--mode", chsh.mode, "spatial, temporal or both")
      ->check(CLI::IsMember({"spatial", "temporal", "both"}));
  chsh_cmd->add_option("--shots", chsh.shots, "Monte Carlo shots per setting");
  chsh_cmd->add_option("--seed", chsh.seed, "Monte Carlo seed");

  SpectrumArgs spec;
  CLI::App* spec_cmd = app.add_subcommand("spectrum", "Eigenvalues, optionally partially transposed");
  spec_cmd->add_option("input", spec.input, "Matrix file or -")->required();
  spec_cmd->add_option("--pt", spec.pt, "none, A or B")->check(CLI::IsMember({"none", "A", "B"}));

  CorrelatorsArgs corr;
  std::string qubits;
  CLI::App* corr_cmd = app.add_subcommand("correlators", "Pauli correlator tables");
  corr_cmd->add_option("state", corr.state, "Bipartite state file or -");
  corr_cmd->add_option("--rho", corr.rho, "Initial state file");
  corr_cmd->add_option("--choi", corr.choi, "Channel Choi matrix file");
  corr_cmd->add_option("--qubits", qubits, "Expected qubit counts mA,mB");

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check the partial-transpose identities");
  verify_cmd->add_option("input", verify.input, "State matrix file or -")->required();
  verify_cmd->add_option("--choi", verify.choi, "Channel to check instead of synthesizing");
  verify_cmd->add_option("--uniqueness", verify.uniqueness_trials,
                         "Re-synthesize in this many random frames");
  verify_cmd->add_option("--seed", verify.seed, "Seed for --uniqueness");

  try {
    app.parse(std::vector<std::string>(argv.rbegin(), argv.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    Context ctx;
    ctx.argv = argv;
    ctx.in = &in;
    ctx.timing = !no_timing;
    if (env_tol) ctx.tol = parse_tolerance_env(*env_tol);
    if (tol_zero) ctx.tol.tol_zero = *tol_zero;
    if (tol_resid) ctx.tol.tol_resid = *tol_resid;
    if (tol_cptp) ctx.tol.tol_cptp = *tol_cptp;

    if (!qubits.empty()) {
      int qa = 0;
      int qb = 0;
      char comma = 0;
      std::istringstream parse(qubits);
      if (!(parse >> qa >> comma >> qb) || comma != ',' || !parse.eof() || qa < 1 || qb < 1) {
        throw InputError("--qubits expects mA,mB");
      }
      corr.qubits = std::make_pair(qa, qb);
    }

    CommandResult result;
    if (*synth_cmd) {
      result = cmd_synthesize(synth, ctx);
    } else if (*chsh_cmd) {
      result = cmd_chsh(chsh, ctx);
    } else if (*spec_cmd) {
      result = cmd_spectrum(spec, ctx);
    } else if (*corr_cmd) {
      result = cmd_correlators(corr, ctx);
    } else {
      result = cmd_verify(verify, ctx);
    }
    out << result.report.dump(2) << "\n";
    if (result.exit_code != kExitOk) err << "error: verification failed\n";
    return result.exit_code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const SynthesisFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const InconsistentSystem& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const RankDeficient& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace spacetime::cli
