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

#include "wre/protocol.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wre/errors.hpp"
#include "wre/sampling.hpp"

namespace wre {

namespace {

constexpr double kPi = std::numbers::pi;

/// Moves bit k of v to bit 2k.
std::size_t spread_bits(std::size_t v) {
    std::size_t out = 0;
    for (std::size_t k = 0; v != 0; ++k, v >>= 1) {
        out |= (v & 1u) << (2 * k);
    }
    return out;
}

std::size_t odd_bit_mask(std::size_t n_sites) {
    std::size_t m = 0;
    for (std::size_t k = 0; k < n_sites; ++k) {
        m |= std::size_t{2} << (2 * k);
    }
    return m;
}

/// True if some site reads copy I down (odd bit set) and copy II up (even bit clear).
inline bool flagged(std::size_t index, std::size_t odd_mask) { return (index & ~(index << 1) & odd_mask) != 0; }

class ShotSampler {
   public:
    ShotSampler(std::span<const Complex> amps, std::size_t odd_mask, Rng &rng)
        : amps_(amps), odd_mask_(odd_mask), rng_(rng) {}

    /// Splits `count` shots over [offset, offset + len) and returns how many
    /// landed on unflagged outcomes.
    std::uint64_t descend(std::size_t offset, std::size_t len, std::uint64_t count) {
        if (count == 0) {
            return 0;
        }
        if (len == 1) {
            return flagged(offset, odd_mask_) ? 0 : count;
        }
        std::size_t half = len / 2;
        double left = weight(offset, half);
        double right = weight(offset + half, half);
        double p_left = left + right > 0.0 ? left / (left + right) : 0.5;
        std::binomial_distribution<std::uint64_t> split(count, std::clamp(p_left, 0.0, 1.0));
        std::uint64_t n_left = split(rng_);
        std::uint64_t ok = descend(offset, half, n_left);
        return ok + descend(offset + half, half, count - n_left);
    }

   private:
    double weight(std::size_t offset, std::size_t len) const {
        double s = 0.0;
        for (std::size_t i = offset; i < offset + len; ++i) {
            s += std::norm(amps_[i]);
        }
        return s;
    }

    std::span<const Complex> amps_;
    std::size_t odd_mask_;
    Rng &rng_;
};

ShotSummary summarize(std::uint64_t shots, std::uint64_t successes, std::uint64_t seed) {
    ShotSummary s;
    s.shots = shots;
    s.successes = successes;
    s.mean_o = static_cast<double>(successes) / static_cast<double>(shots);
    // o is 0 or 1, so (1/S) sum o^2 = mean_o.
    s.sample_variance = std::clamp(s.mean_o - s.mean_o * s.mean_o, 0.0, 0.25);
    s.seed = seed;
    return s;
}

void require_shots(std::uint64_t shots) {
    if (shots == 0) {
        throw InvalidArgument("shots must be at least 1");
    }
}

ProtocolEstimate estimate_from(const ShotSummary &summary, std::size_t n, std::optional<double> exact_p) {
    ProtocolEstimate out;
    out.shots = summary;
    out.exact_p = exact_p;
    double p = exact_p.value_or(summary.mean_o);
    out.variance_predicted = p - p * p;
    double log_3pi = std::log(3.0 * kPi);
    if (summary.successes == 0) {
        double alpha = 1.0 - kInsufficientShotsConfidence;
        double p_upper = 1.0 - std::pow(alpha, 1.0 / static_cast<double>(summary.shots));
        throw InsufficientShots(summary.shots, kInsufficientShotsConfidence, p_upper,
                                static_cast<double>(n) * log_3pi - std::log(p_upper));
    }
    WreEstimate e = WreEstimate::exact_from_value(static_cast<double>(n) * log_3pi - std::log(summary.mean_o),
                                                  Method::protocol);
    e.std_error_value =
        std::sqrt(summary.sample_variance / static_cast<double>(summary.shots)) / summary.mean_o;
    e.samples = summary.shots;
    e.seed = summary.seed;
    out.wre = e;
    return out;
}

}  // namespace

TwoCopyState TwoCopyState::product(const PureState &copy_one, const PureState &copy_two, const ResourceCaps &caps) {
    std::size_t n = copy_one.n_qubits();
    if (copy_two.n_qubits() != n) {
        throw InvalidArgument("two-copy state needs copies with equal qubit counts");
    }
    require_within_cap(n, caps.swap_qubits, "two-copy state");
    std::size_t dim = copy_one.dim();
    std::vector<std::size_t> spread(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        spread[i] = spread_bits(i);
    }
    std::vector<Complex> amps(dim * dim);
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            amps[(spread[a] << 1) | spread[b]] = copy_one[a] * copy_two[b];
        }
    }
    return TwoCopyState(n, std::move(amps));
}

Eigen::Matrix4cd coupling_operator() {
    Eigen::Matrix2cd sx, sy;
    sx << 0, 1, 1, 0;
    sy << 0, Complex(0, -1), Complex(0, 1), 0;
    auto kron = [](const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b) {
        Eigen::Matrix4cd k;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        return k;
    };
    return kron(sx, sy) - kron(sy, sx);
}

Eigen::Matrix4cd pair_gate() {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(coupling_operator());
    Eigen::Matrix4cd g = Eigen::Matrix4cd::Zero();
    for (int k = 0; k < 4; ++k) {
        Eigen::Vector4cd v = solver.eigenvectors().col(k);
        g += std::exp(Complex(0.0, -solver.eigenvalues()[k] * kCouplingTime)) * (v * v.adjoint());
    }
    return g;
}

void apply_pair_gates(TwoCopyState &state, const Eigen::Matrix4cd &gate, unsigned workers) {
    std::size_t n = state.n_sites();
    auto amps = state.mutable_amplitudes();
    for (std::size_t site = 0; site < n; ++site) {
        std::size_t lo = std::size_t{1} << (2 * (n - 1 - site));
        std::size_t hi = lo << 1;
        std::size_t n_blocks = amps.size() / (4 * lo);
        parallel_for(n_blocks, workers, [&](std::size_t begin, std::size_t end) {
            for (std::size_t blk = begin; blk < end; ++blk) {
                std::size_t start = blk * 4 * lo;
                for (std::size_t base = start; base < start + lo; ++base) {
                    Eigen::Vector4cd v(amps[base], amps[base | lo], amps[base | hi], amps[base | hi | lo]);
                    Eigen::Vector4cd r = gate * v;
                    amps[base] = r[0];
                    amps[base | lo] = r[1];
                    amps[base | hi] = r[2];
                    amps[base | hi | lo] = r[3];
                }
            }
        });
    }
}

TwoCopyState evolve_two_copies(const PureState &psi, const ResourceCaps &caps, unsigned workers) {
    TwoCopyState state = TwoCopyState::product(psi, psi, caps);
    apply_pair_gates(state, pair_gate(), workers);
    return state;
}

double success_probability(const TwoCopyState &state) {
    std::size_t mask = odd_bit_mask(state.n_sites());
    auto amps = state.amplitudes();
    CompensatedSum total;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (!flagged(i, mask)) {
            total.add(std::norm(amps[i]));
        }
    }
    return total.value();
}

double exact_success_probability(const PureState &psi, const ResourceCaps &caps) {
    return success_probability(evolve_two_copies(psi, caps));
}

double exact_success_probability(const MixedEnsemble &ensemble, const ResourceCaps &caps) {
    Eigen::Matrix4cd gate = pair_gate();
    CompensatedSum total;
    for (std::size_t i = 0; i < ensemble.states.size(); ++i) {
        for (std::size_t k = 0; k < ensemble.states.size(); ++k) {
            TwoCopyState state = TwoCopyState::product(ensemble.states[i], ensemble.states[k], caps);
            apply_pair_gates(state, gate);
            total.add(ensemble.weights[i] * ensemble.weights[k] * success_probability(state));
        }
    }
    return total.value();
}

double singlet_flag_overlap(const Eigen::Matrix4cd &gate) {
    Eigen::Vector4cd singlet(0.0, -M_SQRT1_2, M_SQRT1_2, 0.0);
    return std::abs((gate * singlet)[2]);
}

ShotSummary sample_shots(const PureState &psi, std::uint64_t shots, std::uint64_t seed, const ResourceCaps &caps) {
    require_shots(shots);
    TwoCopyState state = evolve_two_copies(psi, caps);
    Rng rng = derive_stream(seed, 0);
    ShotSampler sampler(state.amplitudes(), odd_bit_mask(state.n_sites()), rng);
    return summarize(shots, sampler.descend(0, state.amplitudes().size(), shots), seed);
}

ShotSummary sample_shots(const MixedEnsemble &ensemble, std::uint64_t shots, std::uint64_t seed,
                         const ResourceCaps &caps) {
    require_shots(shots);
    std::size_t m = ensemble.states.size();
    Rng rng = derive_stream(seed, 0);
    Eigen::Matrix4cd gate = pair_gate();
    // Multinomial split of the shots over (copy I member, copy II member).
    std::uint64_t remaining = shots;
    double remaining_weight = 1.0;
    std::uint64_t successes = 0;
    for (std::size_t pair = 0; pair < m * m && remaining > 0; ++pair) {
        std::size_t i = pair / m;
        std::size_t k = pair % m;
        double w = ensemble.weights[i] * ensemble.weights[k];
        std::uint64_t count = remaining;
        if (pair + 1 < m * m) {
            double p = remaining_weight > 0.0 ? std::clamp(w / remaining_weight, 0.0, 1.0) : 0.0;
            count = std::binomial_distribution<std::uint64_t>(remaining, p)(rng);
        }
        remaining -= count;
        remaining_weight -= w;
        if (count == 0) {
            continue;
        }
        TwoCopyState state = TwoCopyState::product(ensemble.states[i], ensemble.states[k], caps);
        apply_pair_gates(state, gate);
        ShotSampler sampler(state.amplitudes(), odd_bit_mask(state.n_sites()), rng);
        successes += sampler.descend(0, state.amplitudes().size(), count);
    }
    return summarize(shots, successes, seed);
}

ProtocolEstimate wre_protocol(const PureState &psi, std::uint64_t shots, std::uint64_t seed,
                              const ResourceCaps &caps) {
    require_shots(shots);
    TwoCopyState state = evolve_two_copies(psi, caps);
    double exact_p = success_probability(state);
    Rng rng = derive_stream(seed, 0);
    ShotSampler sampler(state.amplitudes(), odd_bit_mask(state.n_sites()), rng);
    ShotSummary summary = summarize(shots, sampler.descend(0, state.amplitudes().size(), shots), seed);
    return estimate_from(summary, psi.n_qubits(), exact_p);
}

ProtocolEstimate wre_protocol(const MixedEnsemble &ensemble, std::uint64_t shots, std::uint64_t seed,
                              const ResourceCaps &caps) {
    ShotSummary summary = sample_shots(ensemble, shots, seed, caps);
    return estimate_from(summary, ensemble.n_qubits(), exact_success_probability(ensemble, caps));
}

}  // namespace wre
