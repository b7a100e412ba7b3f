// Copyright 2026 The WRE Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace wre::cli {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitResource = 3,
    kExitEstimator = 4,
};

/// Runs the tool with argv[1..] in `args`. Never throws; every failure is
/// reported on `err` and mapped to an exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

enum class VerifyLevel { quick, full };

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::quick;
    std::uint64_t seed = 20260101;
    /// Replaces the protocol pair gate; used to confirm the suite catches a
    /// broken gate. Empty means the library gate.
    std::optional<Eigen::Matrix4cd> gate_override;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The invariant suite behind `wre verify`.
std::vector<CheckResult> run_verify(const VerifyOptions &opts);

}  // namespace wre::cli
