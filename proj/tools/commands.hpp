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

// Subcommands of the spacetime-swap tool. Every command produces a run report
// (a JSON document described by schemas/run_report.schema.json) and an exit
// code: 0 success, 1 input or usage error, 2 numeric or verification failure.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "io.hpp"

namespace spacetime::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitNumeric = 2;

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "spacetime-swap/run-report/v1";

struct Tolerances {
  double tol_zero = kTolZero;
  double tol_resid = kTolResid;
  double tol_cptp = kTolCptp;
};

/// Parses SPACETIME_SWAP_TOL: either a bare number (sets tol_resid) or a
/// comma-separated list of key=value with keys tol_zero, tol_resid, tol_cptp.
Tolerances parse_tolerance_env(const std::string& text, Tolerances base = {});

/// Shared state for one invocation.
struct Context {
  std::vector<std::string> argv;
  Tolerances tol;
  bool timing = true;
  std::istream* in = nullptr;
};

struct CommandResult {
  nlohmann::json report;
  int exit_code = kExitOk;
};

struct SynthesizeArgs {
  std::string input;
  std::optional<std::string> out;
};

struct ChshArgs {
  int sign = 1;
  std::string mode = "both";  // spatial | temporal | both
  std::optional<long long> shots;
  std::uint64_t seed = 42;
};

struct SpectrumArgs {
  std::string input;
  std::string pt = "none";  // none | A | B
};

struct CorrelatorsArgs {
  std::optional<std::string> state;
  std::optional<std::string> rho;
  std::optional<std::string> choi;
  std::optional<std::pair<int, int>> qubits;
};

struct VerifyArgs {
  std::string input;
  std::optional<std::string> choi;
  int uniqueness_trials = 0;
  std::uint64_t seed = 42;
};

CommandResult cmd_synthesize(const SynthesizeArgs& args, const Context& ctx);
CommandResult cmd_chsh(const ChshArgs& args, const Context& ctx);
CommandResult cmd_spectrum(const SpectrumArgs& args, const Context& ctx);
CommandResult cmd_correlators(const CorrelatorsArgs& args, const Context& ctx);
CommandResult cmd_verify(const VerifyArgs& args, const Context& ctx);

/// Full command-line entry point. The report goes to `out`, diagnostics to
/// `err`. `env_tol` is the value of SPACETIME_SWAP_TOL, if set.
int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out,
        std::ostream& err, const std::optional<std::string>& env_tol);

}  // namespace spacetime::cli
