/* Copyright 2026 The hypzeta Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
 // Command line front end: argument handling, subcommand dispatch and the verification suite.

#ifndef HYPZETA_TOOLS_CLI_HPP
#define HYPZETA_TOOLS_CLI_HPP

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hypzeta/scattering.hpp"
#include "hypzeta/special_functions.hpp"
#include "hypzeta/surface.hpp"
#include "report.hpp"

namespace hypzeta::cli {

    enum ExitCode : int { kOk = 0, kUsage = 1, kNumerical = 2, kVerifyFailed = 3 };

    /* Runs one invocation. The report (or CSV for `spectrum` without --json) goes to `out`,
     * diagnostics to `err`. Returns an ExitCode. */
    int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

    // "RE,IM" or "RE".
    Complex parse_complex(std::string_view text);

    /* key = value lines with keys rel_tol, gamma2_cutoff, euler_max_trace; '#' starts a
     * comment. Throws InvalidArgumentError on unknown keys or unreadable values. */
    EvalOptions read_config(const std::filesystem::path& path, EvalOptions base = {});

    /* "modular", "trivial", or "auto" (modular for 0,1,2:3, trivial otherwise). Throws
     * MismatchError when the modular model is paired with a surface that is not one-cusped. */
    ScatteringModel resolve_model(std::string_view group, const Signature& sig);

    // Full invariant suite plus the modular-group reproduction. Deterministic apart from the timestamp.
    Report verify_report(double tolerance, const EvalOptions& opts);

}  // namespace hypzeta::cli

#endif  // HYPZETA_TOOLS_CLI_HPP
