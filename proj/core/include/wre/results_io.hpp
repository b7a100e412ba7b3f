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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wre/estimate.hpp"
#include "wre/qstate.hpp"

namespace wre {

/// Reads {"n_qubits": N, "amplitudes": [[re, im], ...]}.
/// Throws StateFileError with kind io, parse, amplitude_count or norm.
PureState load_state_file(const std::filesystem::path &path);
void save_state_file(const PureState &psi, const std::filesystem::path &path);

/// Everything needed to re-derive a reported number.
struct RunRecord {
    std::string tool_version;
    std::string timestamp;
    std::string state_descriptor;
    std::size_t n_qubits = 0;
    Method method = Method::analytic;
    double value_nats = 0.0;
    double second_moment = 0.0;
    double std_error = 0.0;
    std::uint64_t samples_or_shots = 0;
    std::optional<std::uint64_t> seed;
    double wall_time_s = 0.0;

    bool operator==(const RunRecord &) const = default;
};

/// Version string baked in at build time.
std::string tool_version();
/// Current time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

/// Fills the estimate-derived fields of a record.
RunRecord make_run_record(const WreEstimate &estimate, std::string state_descriptor, std::size_t n_qubits,
                          double wall_time_s);

/// Throws Error (with the path) on I/O failure and InvalidArgument on
/// non-finite fields.
void write_result_json(const RunRecord &record, const std::filesystem::path &path);
RunRecord read_result_json(const std::filesystem::path &path);

struct SweepRow {
    std::string state_kind;
    std::size_t n = 0;
    double wre = 0.0;
    double wre_per_qubit = 0.0;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
};

inline constexpr const char *kSweepCsvHeader = "state,n,wre,wre_per_qubit,lower_bound,upper_bound";

/// Header plus one row per entry, numbers printed with 17 significant digits.
void write_sweep_csv(std::span<const SweepRow> rows, const std::filesystem::path &path);
std::vector<SweepRow> read_sweep_csv(const std::filesystem::path &path);

}  // namespace wre
