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

#include "cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cli/state_spec.hpp"
#include "wre/wre.hpp"

namespace wre::cli {

namespace {

struct StateFlags {
    std::string state;
    std::optional<std::size_t> n;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> state_seed;
    std::string out;
    bool verbose = false;

    std::uint64_t haar_seed() const { return state_seed.value_or(seed); }
};

struct ComputeFlags : StateFlags {
    std::string method;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> shots;
    unsigned workers = 1;
};

struct ProtocolFlags : StateFlags {
    std::uint64_t shots = 100000;
};

struct SweepFlags {
    std::string states = "ghz,w,pbell,haar-mean";
    std::string range = "2:12";
    std::string out;
};

struct VerifyFlags {
    std::string level = "quick";
    std::uint64_t seed = VerifyOptions{}.seed;
    std::string inject_fault;
};

constexpr std::uint64_t kDefaultSamples = 100000;
constexpr std::uint64_t kDefaultShots = 100000;

void add_state_flags(CLI::App *cmd, StateFlags &f) {
    cmd->add_option("--state", f.state, "ghz | w | pbell | product | haar | basis:BITS | file:PATH")->required();
    cmd->add_option("--n", f.n, "number of qubits");
    cmd->add_option("--seed", f.seed, "seed for all random streams");
    cmd->add_option("--state-seed", f.state_seed, "seed for haar state preparation (default: --seed)");
    cmd->add_option("--out", f.out, "write a JSON run record to this path");
    cmd->add_flag("-v,--verbose", f.verbose, "also print wall time and the record path");
}

/// Runs fn and converts library exceptions to exit codes.
int guarded(std::ostream &err, const std::function<int()> &fn) {
    try {
        return fn();
    } catch (const InsufficientShots &e) {
        err << "error: " << e.what() << '\n';
        return kExitEstimator;
    } catch (const EstimatorFailure &e) {
        err << "error: " << e.what() << '\n';
        return kExitEstimator;
    } catch (const ResourceLimit &e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const InvalidArgument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const StateFileError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::bad_alloc &) {
        err << "error: out of memory\n";
        return kExitResource;
    }
}

void print_field(std::ostream &out, const char *name, const std::string &value) {
    out << std::left << std::setw(20) << name << value << '\n';
}

std::string fmt_double(double x) {
    std::ostringstream s;
    s << std::setprecision(15) << x;
    return s.str();
}

void print_estimate(std::ostream &out, const std::string &descriptor, std::size_t n, const WreEstimate &e) {
    WreBounds b = wre_bounds(n);
    print_field(out, "state", descriptor);
    print_field(out, "n_qubits", std::to_string(n));
    print_field(out, "method", to_string(e.method));
    print_field(out, "wre_nats", fmt_double(e.value));
    print_field(out, "std_error", fmt_double(e.std_error_value));
    print_field(out, "wre_per_qubit", fmt_double(e.value / static_cast<double>(n)));
    print_field(out, "second_moment", fmt_double(e.second_moment));
    print_field(out, "bounds", "[" + fmt_double(b.lower) + ", " + fmt_double(b.upper) + "]");
    print_field(out, "samples", std::to_string(e.samples));
    print_field(out, "seed", e.seed ? std::to_string(*e.seed) : std::string("-"));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void finish(std::ostream &out, const StateFlags &f, const WreEstimate &e, const std::string &descriptor,
            std::size_t n, std::chrono::steady_clock::time_point t0) {
    double wall = seconds_since(t0);
    if (!f.out.empty()) {
        write_result_json(make_run_record(e, descriptor, n, wall), f.out);
    }
    if (f.verbose) {
        print_field(out, "wall_time_s", fmt_double(wall));
        if (!f.out.empty()) {
            print_field(out, "record", f.out);
        }
    }
}

ClosedFormKind closed_form_for(const StateSpec &spec) {
    switch (spec.source) {
        case StateSpec::Source::haar:
            return ClosedFormKind::haar_mean;
        case StateSpec::Source::file:
            throw InvalidArgument("analytic method needs a named state, not a file");
        case StateSpec::Source::named:
            break;
    }
    switch (spec.kind) {
        case NamedKind::ghz:
            return ClosedFormKind::ghz;
        case NamedKind::w:
            return ClosedFormKind::w;
        case NamedKind::pbell:
            return ClosedFormKind::pbell;
        case NamedKind::product:
        case NamedKind::basis:
            return ClosedFormKind::product;
    }
    throw InvalidArgument("no closed form for this state");
}

int cmd_compute(const ComputeFlags &f, std::ostream &out) {
    auto t0 = std::chrono::steady_clock::now();
    Method method = parse_method(f.method);
    bool sampling = method == Method::mc_husimi || method == Method::twirl;
    if (f.samples && !sampling) {
        throw InvalidArgument("--samples only applies to mc-husimi and twirl");
    }
    if (f.shots && method != Method::protocol) {
        throw InvalidArgument("--shots only applies to the protocol method");
    }
    if (f.workers == 0) {
        throw InvalidArgument("--workers must be at least 1");
    }
    StateSpec spec = StateSpec::parse(f.state);
    std::string descriptor = spec.descriptor(f.haar_seed());

    if (method == Method::analytic) {
        std::size_t n = spec.kind == NamedKind::basis && spec.source == StateSpec::Source::named ? spec.bits.size()
                                                                                                : f.n.value_or(0);
        if (n == 0) {
            throw InvalidArgument("--n is required");
        }
        WreEstimate e = WreEstimate::exact_from_value(wre_closed_form(closed_form_for(spec), n), Method::analytic);
        print_estimate(out, descriptor, n, e);
        if (spec.source == StateSpec::Source::haar) {
            out << "note: analytic value for haar is the annealed Haar average, not this draw\n";
        }
        finish(out, f, e, descriptor, n, t0);
        return kExitOk;
    }

    ResourceCaps caps = ResourceCaps::from_env();
    PureState psi = spec.build(f.n, f.haar_seed());
    std::size_t n = psi.n_qubits();
    SamplingOptions opts{f.samples.value_or(kDefaultSamples), f.seed, f.workers};
    WreEstimate e;
    switch (method) {
        case Method::exact_swap:
            e = wre_exact(psi, ExactMethod::swap_contraction, caps, f.workers);
            break;
        case Method::subset_enum:
            e = wre_exact(psi, ExactMethod::subset_enum, caps, f.workers);
            break;
        case Method::mc_husimi:
            e = wre_mc(psi, opts);
            break;
        case Method::twirl:
            e = wre_twirl(psi, opts);
            break;
        case Method::protocol:
            e = wre_protocol(psi, f.shots.value_or(kDefaultShots), f.seed, caps).wre;
            break;
        case Method::analytic:
            break;
    }
    print_estimate(out, descriptor, n, e);
    finish(out, f, e, descriptor, n, t0);
    return kExitOk;
}

int cmd_protocol(const ProtocolFlags &f, std::ostream &out) {
    auto t0 = std::chrono::steady_clock::now();
    if (f.shots == 0) {
        throw InvalidArgument("--shots must be at least 1");
    }
    StateSpec spec = StateSpec::parse(f.state);
    std::string descriptor = spec.descriptor(f.haar_seed());
    ResourceCaps caps = ResourceCaps::from_env();
    PureState psi = spec.build(f.n, f.haar_seed());
    ProtocolEstimate p = wre_protocol(psi, f.shots, f.seed, caps);
    print_field(out, "state", descriptor);
    print_field(out, "n_qubits", std::to_string(psi.n_qubits()));
    print_field(out, "shots", std::to_string(p.shots.shots));
    print_field(out, "seed", std::to_string(p.shots.seed));
    print_field(out, "successes", std::to_string(p.shots.successes));
    print_field(out, "mean_o", fmt_double(p.shots.mean_o));
    print_field(out, "exact_p", p.exact_p ? fmt_double(*p.exact_p) : std::string("-"));
    print_field(out, "wre_nats", fmt_double(p.wre.value));
    print_field(out, "std_error", fmt_double(p.wre.std_error_value));
    print_field(out, "var_empirical", fmt_double(p.shots.sample_variance));
    print_field(out, "var_predicted", fmt_double(p.variance_predicted));
    finish(out, f, p.wre, descriptor, psi.n_qubits(), t0);
    return kExitOk;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string &text) {
    auto parse_count = [&](const std::string &s) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &pos);
        } catch (const std::exception &) {
            pos = 0;
        }
        if (s.empty() || pos != s.size() || s[0] == '-' || s[0] == '+') {
            throw InvalidArgument("malformed range '" + text + "': expected LO:HI");
        }
        return static_cast<std::size_t>(v);
    };
    auto colon = text.find(':');
    std::size_t lo = 0;
    std::size_t hi = 0;
    if (colon == std::string::npos) {
        lo = hi = parse_count(text);
    } else {
        lo = parse_count(text.substr(0, colon));
        hi = parse_count(text.substr(colon + 1));
    }
    if (lo < 1 || hi < lo || hi > 1000) {
        throw InvalidArgument("malformed range '" + text + "': need 1 <= LO <= HI <= 1000");
    }
    return {lo, hi};
}

int cmd_sweep(const SweepFlags &f, std::ostream &out) {
    auto [lo, hi] = parse_range(f.range);
    std::vector<ClosedFormKind> kinds;
    std::stringstream list(f.states);
    std::string item;
    while (std::getline(list, item, ',')) {
        kinds.push_back(parse_closed_form_kind(item));
    }
    if (kinds.empty()) {
        throw InvalidArgument("--states is empty");
    }
    std::vector<SweepRow> rows;
    for (ClosedFormKind kind : kinds) {
        for (std::size_t n = lo; n <= hi; ++n) {
            if (kind == ClosedFormKind::pbell && n % 2 != 0) {
                continue;
            }
            double v = wre_closed_form(kind, n);
            WreBounds b = wre_bounds(n);
            rows.push_back({to_string(kind), n, v, v / static_cast<double>(n), b.lower, b.upper});
        }
    }
    if (f.out.empty()) {
        out << kSweepCsvHeader << '\n' << std::setprecision(17);
        for (const auto &r : rows) {
            out << r.state_kind << ',' << r.n << ',' << r.wre << ',' << r.wre_per_qubit << ',' << r.lower_bound
                << ',' << r.upper_bound << '\n';
        }
    } else {
        write_sweep_csv(rows, f.out);
        out << "wrote " << rows.size() << " rows to " << f.out << '\n';
    }
    return kExitOk;
}

int cmd_verify(const VerifyFlags &f, std::ostream &out) {
    VerifyOptions opts;
    if (f.level == "quick") {
        opts.level = VerifyLevel::quick;
    } else if (f.level == "full") {
        opts.level = VerifyLevel::full;
    } else {
        throw InvalidArgument("--level must be quick or full");
    }
    opts.seed = f.seed;
    if (f.inject_fault == "gate-sign") {
        // exp(+i V T) instead of exp(-i V T).
        opts.gate_override = pair_gate().adjoint();
    } else if (!f.inject_fault.empty()) {
        throw InvalidArgument("unknown fault '" + f.inject_fault + "'");
    }
    auto results = run_verify(opts);
    std::size_t failed = 0;
    for (const auto &r : results) {
        out << std::left << std::setw(30) << r.name << std::setw(6) << (r.pass ? "PASS" : "FAIL") << r.detail << '\n';
        if (!r.pass) {
            ++failed;
        }
    }
    if (failed > 0) {
        out << failed << " of " << results.size() << " checks failed:";
        for (const auto &r : results) {
            if (!r.pass) {
                out << ' ' << r.name;
            }
        }
        out << '\n';
        return kExitCheckFailed;
    }
    out << "all " << results.size() << " checks passed\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Wehrl-Renyi entropy of N-qubit states"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version());

    ComputeFlags compute;
    auto *compute_cmd = app.add_subcommand("compute", "compute the WRE of a state with one method");
    add_state_flags(compute_cmd, compute);
    compute_cmd
        ->add_option("--method", compute.method, "exact-swap | subset-enum | mc-husimi | twirl | protocol | analytic")
        ->required();
    compute_cmd->add_option("--samples", compute.samples, "Monte Carlo samples (mc-husimi, twirl)");
    compute_cmd->add_option("--shots", compute.shots, "protocol shots");
    compute_cmd->add_option("--workers", compute.workers, "worker threads");

    ProtocolFlags protocol;
    auto *protocol_cmd = app.add_subcommand("protocol", "simulate the two-copy measurement protocol");
    add_state_flags(protocol_cmd, protocol);
    protocol_cmd->add_option("--shots", protocol.shots, "number of shots");

    SweepFlags sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "closed-form WRE against system size, as CSV");
    sweep_cmd->add_option("--states", sweep.states, "comma-separated: ghz,w,pbell,haar-mean,product");
    sweep_cmd->add_option("--n", sweep.range, "inclusive range LO:HI");
    sweep_cmd->add_option("--out", sweep.out, "CSV path (default: stdout)");

    VerifyFlags verify;
    auto *verify_cmd = app.add_subcommand("verify", "run the invariant and cross-method checks");
    verify_cmd->add_option("--level", verify.level, "quick | full");
    verify_cmd->add_option("--seed", verify.seed, "base seed");
    verify_cmd->add_option("--inject-fault", verify.inject_fault, "")->group("");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    return guarded(err, [&] {
        if (*compute_cmd) return cmd_compute(compute, out);
        if (*protocol_cmd) return cmd_protocol(protocol, out);
        if (*sweep_cmd) return cmd_sweep(sweep, out);
        return cmd_verify(verify, out);
    });
}

}  // namespace wre::cli
