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

#include "wre/results_io.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wre/errors.hpp"

#ifndef WRE_VERSION_STRING
#define WRE_VERSION_STRING "unknown"
#endif

namespace wre {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw StateFileError(StateFileErrorKind::io, path.string(), "cannot open for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::ofstream open_for_write(const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

void finish_write(std::ofstream &out, const std::filesystem::path &path) {
    out.flush();
    if (!out) {
        throw Error("failed writing '" + path.string() + "'");
    }
}

void require_finite(double x, const char *field) {
    if (!std::isfinite(x)) {
        throw InvalidArgument(std::string("run record field '") + field + "' is not finite");
    }
}

}  // namespace

PureState load_state_file(const std::filesystem::path &path) {
    std::string text = read_file(path);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw StateFileError(StateFileErrorKind::parse, path.string(), e.what());
    }
    std::size_t n = 0;
    std::vector<Complex> amps;
    try {
        if (!doc.is_object() || !doc.contains("n_qubits") || !doc.contains("amplitudes")) {
            throw StateFileError(StateFileErrorKind::parse, path.string(),
                                 "expected an object with 'n_qubits' and 'amplitudes'");
        }
        const auto &nq = doc.at("n_qubits");
        if (!nq.is_number_unsigned() || nq.get<std::size_t>() == 0 || nq.get<std::size_t>() > 30) {
            throw StateFileError(StateFileErrorKind::parse, path.string(), "'n_qubits' must be an integer in [1, 30]");
        }
        n = nq.get<std::size_t>();
        const auto &arr = doc.at("amplitudes");
        if (!arr.is_array()) {
            throw StateFileError(StateFileErrorKind::parse, path.string(), "'amplitudes' must be an array");
        }
        amps.reserve(arr.size());
        for (const auto &entry : arr) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
                throw StateFileError(StateFileErrorKind::parse, path.string(),
                                     "each amplitude must be a [re, im] pair of numbers");
            }
            amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
        }
    } catch (const json::exception &e) {
        throw StateFileError(StateFileErrorKind::parse, path.string(), e.what());
    }
    std::size_t expected = std::size_t{1} << n;
    if (amps.size() != expected) {
        throw StateFileError(StateFileErrorKind::amplitude_count, path.string(),
                             "expected " + std::to_string(expected) + " amplitudes for " + std::to_string(n) +
                                 " qubits, found " + std::to_string(amps.size()));
    }
    double norm2 = 0.0;
    for (const auto &a : amps) {
        norm2 += std::norm(a);
    }
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kNormTolerance) {
        throw StateFileError(StateFileErrorKind::norm, path.string(),
                             "squared norm is " + std::to_string(norm2) + ", expected 1");
    }
    return PureState::from_amplitudes(n, std::move(amps));
}

void save_state_file(const PureState &psi, const std::filesystem::path &path) {
    json amps = json::array();
    for (const auto &a : psi.amplitudes()) {
        amps.push_back({a.real(), a.imag()});
    }
    json doc = {{"n_qubits", psi.n_qubits()}, {"amplitudes", std::move(amps)}};
    auto out = open_for_write(path);
    out << doc.dump(2) << '\n';
    finish_write(out, path);
}

std::string tool_version() { return WRE_VERSION_STRING; }

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

RunRecord make_run_record(const WreEstimate &estimate, std::string state_descriptor, std::size_t n_qubits,
                          double wall_time_s) {
    RunRecord r;
    r.tool_version = tool_version();
    r.timestamp = utc_timestamp();
    r.state_descriptor = std::move(state_descriptor);
    r.n_qubits = n_qubits;
    r.method = estimate.method;
    r.value_nats = estimate.value;
    r.second_moment = estimate.second_moment;
    r.std_error = estimate.std_error_value;
    r.samples_or_shots = estimate.samples;
    r.seed = estimate.seed;
    r.wall_time_s = wall_time_s;
    return r;
}

void write_result_json(const RunRecord &record, const std::filesystem::path &path) {
    require_finite(record.value_nats, "value_nats");
    require_finite(record.second_moment, "second_moment");
    require_finite(record.std_error, "std_error");
    require_finite(record.wall_time_s, "wall_time_s");
    json doc = {
        {"tool_version", record.tool_version},
        {"timestamp", record.timestamp},
        {"state_descriptor", record.state_descriptor},
        {"n_qubits", record.n_qubits},
        {"method", to_string(record.method)},
        {"value_nats", record.value_nats},
        {"second_moment", record.second_moment},
        {"std_error", record.std_error},
        {"samples_or_shots", record.samples_or_shots},
        {"seed", record.seed ? json(*record.seed) : json(nullptr)},
        {"wall_time_s", record.wall_time_s},
    };
    auto out = open_for_write(path);
    out << doc.dump(2) << '\n';
    finish_write(out, path);
}

RunRecord read_result_json(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path.string() + "' for reading");
    }
    try {
        json doc = json::parse(in);
        RunRecord r;
        r.tool_version = doc.at("tool_version").get<std::string>();
        r.timestamp = doc.at("timestamp").get<std::string>();
        r.state_descriptor = doc.at("state_descriptor").get<std::string>();
        r.n_qubits = doc.at("n_qubits").get<std::size_t>();
        r.method = parse_method(doc.at("method").get<std::string>());
        r.value_nats = doc.at("value_nats").get<double>();
        r.second_moment = doc.at("second_moment").get<double>();
        r.std_error = doc.at("std_error").get<double>();
        r.samples_or_shots = doc.at("samples_or_shots").get<std::uint64_t>();
        if (!doc.at("seed").is_null()) {
            r.seed = doc.at("seed").get<std::uint64_t>();
        }
        r.wall_time_s = doc.at("wall_time_s").get<double>();
        return r;
    } catch (const json::exception &e) {
        throw Error("malformed run record '" + path.string() + "': " + e.what());
    }
}

void write_sweep_csv(std::span<const SweepRow> rows, const std::filesystem::path &path) {
    auto out = open_for_write(path);
    out << kSweepCsvHeader << '\n';
    out << std::setprecision(17);
    for (const auto &r : rows) {
        out << r.state_kind << ',' << r.n << ',' << r.wre << ',' << r.wre_per_qubit << ',' << r.lower_bound << ','
            << r.upper_bound << '\n';
    }
    finish_write(out, path);
}

std::vector<SweepRow> read_sweep_csv(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path.string() + "' for reading");
    }
    std::string line;
    if (!std::getline(in, line) || line != kSweepCsvHeader) {
        throw Error("'" + path.string() + "' does not start with the sweep header");
    }
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(fields, cell, ',')) {
            cells.push_back(cell);
        }
        if (cells.size() != 6) {
            throw Error("malformed sweep row in '" + path.string() + "': " + line);
        }
        try {
            rows.push_back(SweepRow{cells[0], std::stoul(cells[1]), std::stod(cells[2]), std::stod(cells[3]),
                                    std::stod(cells[4]), std::stod(cells[5])});
        } catch (const std::exception &) {
            throw Error("malformed sweep row in '" + path.string() + "': " + line);
        }
    }
    return rows;
}

}  // namespace wre
