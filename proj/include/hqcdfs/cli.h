// Copyright 2026 The hqcdfs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HQCDFS_CLI_H
#define HQCDFS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace hqcdfs {

inline constexpr const char* kToolVersion = "hqcdfs 0.1.0";
inline constexpr const char* kToleranceScaleEnv = "HQC_DFS_TOLERANCE_SCALE";

enum ExitStatus : int {
    kExitOk = 0,
    /// A computed defect or distance exceeded its tolerance; the report lists violations.
    kExitViolations = 1,
    /// Unparseable arguments or input documents; no report is written.
    kExitInputError = 2,
    /// An internal contract failed.
    kExitInternalError = 3,
};

/// Documented tolerances, each multiplied by the scale from HQC_DFS_TOLERANCE_SCALE.
struct Tolerances {
    double scale = 1;
    double gate_distance() const { return 1e-10 * scale; }
    double invariance() const { return 1e-10 * scale; }
    double invariant_block() const { return 1e-10 * scale; }
    double cyclicity() const { return 1e-10 * scale; }
    double transport() const { return 1e-12 * scale; }
    double reconstruction() const { return 1e-3 * scale; }
    double fidelity_loss() const { return 1e-10 * scale; }

    /// Reads HQC_DFS_TOLERANCE_SCALE; ConfigError when set but not a positive number.
    static Tolerances from_environment();
};

/// Runs one command line (argv[0] is the program name). Reports go to the --out file
/// when given, otherwise to `out`; diagnostics go to `err`. Returns an ExitStatus.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hqcdfs

#endif  // HQCDFS_CLI_H
