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

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "cli/commands.hpp"
#include "wre/wre.hpp"

namespace wre::cli {

namespace {

struct Plan {
    std::size_t haar_max_n;
    std::size_t haar_states_per_n;
    std::size_t closed_form_max_n;
    std::size_t lu_dressings;
    std::uint64_t moment_samples;
    std::uint64_t mc_samples;
    std::uint64_t shots;
    std::size_t protocol_max_n;
};

Plan make_plan(VerifyLevel level, const ResourceCaps &caps) {
    Plan p = level == VerifyLevel::quick ? Plan{8, 5, 8, 5, 100000, 100000, 100000, 6}
                                         : Plan{10, 20, 12, 20, 1000000, 1000000, 1000000, 10};
    p.haar_max_n = std::min({p.haar_max_n, caps.enum_qubits, caps.swap_qubits});
    p.closed_form_max_n = std::min({p.closed_form_max_n, caps.swap_qubits, caps.dense_qubits});
    p.protocol_max_n = std::min({p.protocol_max_n, caps.swap_qubits});
    return p;
}

// Stream ids keep the checks independent of each other and of run order.
enum Stream : std::uint64_t {
    kStreamHaarStates = 1,
    kStreamLocalUnitaries,
    kStreamMixed,
    kStreamMoments,
    kStreamNormalization,
    kStreamProtocol,
    kStreamCross,
    kStreamProbe,
};

std::string sci(double x) {
    std::ostringstream s;
    s << std::setprecision(3) << std::scientific << x;
    return s.str();
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

/// |a - b| in units of the combined standard error; 0 when both errors vanish and a == b.
double sigmas(double a, double sa, double b, double sb) {
    double se = std::hypot(sa, sb);
    double d = std::abs(a - b);
    if (se == 0.0) {
        return d == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return d / se;
}

constexpr double kSigmaThreshold = 4.0;
constexpr double kExactTolerance = 1e-10;

std::vector<CheckResult> haar_state_checks(const VerifyOptions &opts, const Plan &plan, const ResourceCaps &caps) {
    Rng rng = derive_stream(opts.seed, kStreamHaarStates);
    double worst_rel = 0.0;
    double worst_bound = -std::numeric_limits<double>::infinity();
    std::size_t count = 0;
    for (std::size_t n = 2; n <= plan.haar_max_n; ++n) {
        WreBounds b = wre_bounds(n);
        for (std::size_t k = 0; k < plan.haar_states_per_n; ++k) {
            PureState psi = sample_haar_state(n, rng);
            double swap = purity_sum_swap(psi, caps).sum;
            double en = purity_sum_enum(psi, caps).sum;
            worst_rel = std::max(worst_rel, rel_diff(swap, en));
            double s = static_cast<double>(n) * std::log(6.0 * std::numbers::pi) - std::log(swap);
            // Positive means outside [lower, upper].
            worst_bound = std::max({worst_bound, b.lower - s, s - b.upper});
            ++count;
        }
    }
    std::string scope = std::to_string(count) + " haar states, n=2.." + std::to_string(plan.haar_max_n);
    return {
        {"oracle-equivalence", worst_rel <= 1e-12, scope + ", max rel diff " + sci(worst_rel)},
        {"bounds", worst_bound <= 1e-12, scope + ", max excursion " + sci(worst_bound)},
    };
}

CheckResult closed_forms_check(const Plan &plan, const ResourceCaps &caps) {
    double worst = 0.0;
    for (std::size_t n = 2; n <= plan.closed_form_max_n; ++n) {
        worst = std::max(worst, std::abs(wre_exact(make_ghz(n), ExactMethod::automatic, caps).value -
                                         wre_closed_form(ClosedFormKind::ghz, n)));
        worst = std::max(worst, std::abs(wre_exact(make_w(n), ExactMethod::automatic, caps).value -
                                         wre_closed_form(ClosedFormKind::w, n)));
        if (n % 2 == 0) {
            worst = std::max(worst, std::abs(wre_exact(make_pbell(n), ExactMethod::automatic, caps).value -
                                             wre_closed_form(ClosedFormKind::pbell, n)));
        }
    }
    return {"closed-forms", worst <= kExactTolerance,
            "ghz/w/pbell n=2.." + std::to_string(plan.closed_form_max_n) + ", max abs diff " + sci(worst)};
}

CheckResult lu_invariance_check(const VerifyOptions &opts, const Plan &plan, const ResourceCaps &caps) {
    constexpr std::size_t n = 6;
    Rng rng = derive_stream(opts.seed, kStreamLocalUnitaries);
    PureState ghz = make_ghz(n);
    double base = wre_exact(ghz, ExactMethod::automatic, caps).value;
    double worst = 0.0;
    for (std::size_t k = 0; k < plan.lu_dressings; ++k) {
        std::vector<SingleQubitUnitary> units;
        for (std::size_t q = 0; q < n; ++q) {
            units.push_back(sample_su2(rng));
        }
        double v = wre_exact(apply_local_unitaries(ghz, units), ExactMethod::automatic, caps).value;
        worst = std::max(worst, std::abs(v - base));
    }
    return {"lu-invariance", worst < kExactTolerance,
            std::to_string(plan.lu_dressings) + " dressings of ghz(6), max shift " + sci(worst)};
}

DensityMatrix random_rank2(std::size_t n, Rng &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double w = u(rng);
    MixedEnsemble e = make_ensemble({w, 1.0 - w}, {sample_haar_state(n, rng), sample_haar_state(n, rng)});
    return to_density_matrix(e);
}

std::vector<CheckResult> mixed_state_checks(const VerifyOptions &opts, const Plan &plan, const ResourceCaps &caps) {
    Rng rng = derive_stream(opts.seed, kStreamMixed);
    double worst_sigma = 0.0;
    double worst_protocol = 0.0;
    std::size_t count = 0;
    for (std::size_t n = 2; n <= 3; ++n) {
        for (std::size_t k = 0; k < 3; ++k) {
            DensityMatrix rho = random_rank2(n, rng);
            PuritySumResult sum = purity_sum_dm(rho, caps);
            WreEstimate exact = wre_exact(rho, caps);
            SamplingOptions so{plan.mc_samples, opts.seed + count, 1};
            WreEstimate mc = wre_mc(rho, so);
            worst_sigma = std::max(worst_sigma, sigmas(exact.value, 0.0, mc.value, mc.std_error_value));
            double p = exact_success_probability(ensemble_from_density_matrix(rho), caps);
            worst_protocol = std::max(worst_protocol, std::abs(p - std::ldexp(sum.sum, -static_cast<int>(n))));
            ++count;
        }
    }
    return {{"mixed-state-identity", worst_sigma <= kSigmaThreshold && worst_protocol <= kExactTolerance,
             std::to_string(count) + " rank-2 states, max mc deviation " + sci(worst_sigma) +
                 " sigma, protocol p diff " + sci(worst_protocol)}};
}

std::vector<CheckResult> moment_checks(const VerifyOptions &opts, const Plan &plan) {
    std::vector<CheckResult> out;
    Rng probe_rng = derive_stream(opts.seed, kStreamProbe);
    std::normal_distribution<double> g;
    Eigen::MatrixXcd probe(4, 4);
    for (Eigen::Index i = 0; i < probe.size(); ++i) {
        probe(i) = Complex(g(probe_rng), g(probe_rng));
    }
    const MomentKind kinds[] = {MomentKind::two_point, MomentKind::four_point_state, MomentKind::weingarten_channel};
    std::uint64_t offset = 0;
    for (MomentKind kind : kinds) {
        SamplingOptions so{plan.moment_samples, opts.seed * 4 + kStreamMoments + offset++, 1};
        std::optional<Eigen::MatrixXcd> p;
        if (kind == MomentKind::weingarten_channel) {
            p = probe;
        }
        MomentCheckReport r = haar_moment_check(kind, so, p);
        out.push_back({std::string("haar-") + to_string(kind), r.pass,
                       std::to_string(r.samples) + " samples, max " + sci(r.per_entry_sigma) + " sigma"});
    }
    return out;
}

CheckResult normalization_check(const VerifyOptions &opts, const Plan &plan) {
    double worst = 0.0;
    std::uint64_t stream = opts.seed * 16 + kStreamNormalization;
    for (PureState psi : {make_ghz(3), make_w(3), make_pbell(4)}) {
        MomentEstimate m = mc_normalization_check(psi, {plan.mc_samples, stream++, 1});
        worst = std::max(worst, sigmas(m.mean, m.std_error, 1.0, 0.0));
    }
    return {"husimi-normalization", worst <= kSigmaThreshold,
            "ghz(3), w(3), pbell(4), max " + sci(worst) + " sigma from 1"};
}

CheckResult protocol_identity_check(const VerifyOptions &opts, const Plan &plan, const ResourceCaps &caps) {
    Eigen::Matrix4cd gate = opts.gate_override.value_or(pair_gate());
    Rng rng = derive_stream(opts.seed, kStreamProtocol);
    double worst = 0.0;
    for (std::size_t n = 1; n <= plan.protocol_max_n; ++n) {
        std::vector<PureState> states = {sample_haar_state(n, rng), make_ghz(n), make_w(n)};
        for (const PureState &psi : states) {
            TwoCopyState two = TwoCopyState::product(psi, psi, caps);
            apply_pair_gates(two, gate);
            double p = success_probability(two);
            double expected = std::ldexp(purity_sum_swap(psi, caps).sum, -static_cast<int>(n));
            worst = std::max(worst, std::abs(p - expected));
        }
    }
    return {"protocol-identity", worst <= kExactTolerance,
            "n=1.." + std::to_string(plan.protocol_max_n) + ", max |p - sum/2^n| " + sci(worst)};
}

CheckResult singlet_mapping_check(const VerifyOptions &opts) {
    Eigen::Matrix4cd gate = opts.gate_override.value_or(pair_gate());
    double overlap = singlet_flag_overlap(gate);
    return {"singlet-mapping", std::abs(overlap - 1.0) <= 1e-12, "|<down,up|G|singlet>| = " + sci(overlap)};
}

CheckResult cross_method_check(const VerifyOptions &opts, const Plan &plan, const ResourceCaps &caps) {
    double worst_exact = 0.0;
    double worst_sigma = 0.0;
    std::string worst_case = "-";
    std::uint64_t stream = opts.seed * 64 + kStreamCross;
    for (NamedKind kind : {NamedKind::ghz, NamedKind::w, NamedKind::pbell}) {
        for (std::size_t n : {2, 4, 6}) {
            PureState psi = make_named_state(kind, n);
            ClosedFormKind cf = parse_closed_form_kind(to_string(kind));
            std::vector<WreEstimate> exact = {
                wre_exact(psi, ExactMethod::swap_contraction, caps),
                wre_exact(psi, ExactMethod::subset_enum, caps),
                WreEstimate::exact_from_value(wre_closed_form(cf, n), Method::analytic),
            };
            std::vector<WreEstimate> sampled = {
                wre_mc(psi, {plan.mc_samples, stream++, 1}),
                wre_twirl(psi, {plan.mc_samples, stream++, 1}),
                wre_protocol(psi, plan.shots, stream++, caps).wre,
            };
            std::string label = std::string(to_string(kind)) + "(" + std::to_string(n) + ")";
            for (std::size_t i = 0; i < exact.size(); ++i) {
                for (std::size_t j = i + 1; j < exact.size(); ++j) {
                    worst_exact = std::max(worst_exact, std::abs(exact[i].value - exact[j].value));
                }
            }
            std::vector<const WreEstimate *> all;
            for (const auto &e : exact) all.push_back(&e);
            for (const auto &e : sampled) all.push_back(&e);
            for (std::size_t i = 0; i < all.size(); ++i) {
                for (std::size_t j = i + 1; j < all.size(); ++j) {
                    if (is_exact(all[i]->method) && is_exact(all[j]->method)) {
                        continue;
                    }
                    double s = sigmas(all[i]->value, all[i]->std_error_value, all[j]->value,
                                      all[j]->std_error_value);
                    if (s > worst_sigma) {
                        worst_sigma = s;
                        worst_case = label + " " + to_string(all[i]->method) + "/" + to_string(all[j]->method);
                    }
                }
            }
        }
    }
    return {"cross-method-agreement", worst_exact <= kExactTolerance && worst_sigma <= kSigmaThreshold,
            "exact spread " + sci(worst_exact) + ", worst sampled " + sci(worst_sigma) + " sigma (" + worst_case +
                ")"};
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions &opts) {
    ResourceCaps caps = ResourceCaps::from_env();
    Plan plan = make_plan(opts.level, caps);
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> rs) { out.insert(out.end(), rs.begin(), rs.end()); };
    append(haar_state_checks(opts, plan, caps));
    out.push_back(closed_forms_check(plan, caps));
    out.push_back(lu_invariance_check(opts, plan, caps));
    append(mixed_state_checks(opts, plan, caps));
    append(moment_checks(opts, plan));
    out.push_back(normalization_check(opts, plan));
    out.push_back(protocol_identity_check(opts, plan, caps));
    out.push_back(singlet_mapping_check(opts));
    out.push_back(cross_method_check(opts, plan, caps));
    return out;
}

}  // namespace wre::cli
