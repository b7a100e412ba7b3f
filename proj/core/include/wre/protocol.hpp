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
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "wre/config.hpp"
#include "wre/estimate.hpp"
#include "wre/qstate.hpp"

namespace wre {

/// Two copies of an N-qubit register, 2N qubits interleaved as
/// (site 0 copy I, site 0 copy II, site 1 copy I, ...), most significant first.
/// Site j occupies index bits 2(N-1-j)+1 (copy I) and 2(N-1-j) (copy II).
class TwoCopyState {
   public:
    std::size_t n_sites() const { return n_sites_; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::span<Complex> mutable_amplitudes() { return amplitudes_; }

    /// |a> (x) |b> in interleaved order.
    static TwoCopyState product(const PureState &copy_one, const PureState &copy_two,
                                const ResourceCaps &caps = {});

   private:
    TwoCopyState(std::size_t n, std::vector<Complex> a) : n_sites_(n), amplitudes_(std::move(a)) {}
    std::size_t n_sites_;
    std::vector<Complex> amplitudes_;
};

/// V = sigma^x_I sigma^y_II - sigma^y_I sigma^x_II on one site pair, basis
/// order |s_I s_II> = 2 s_I + s_II.
Eigen::Matrix4cd coupling_operator();

/// Evolution time of the coupling.
inline constexpr double kCouplingTime = 0.39269908169872414;  // pi / 8

/// exp(-i V pi/8), built from the eigendecomposition of V. Identity on
/// |00> and |11>; maps the singlet to |10> (copy I down, copy II up).
Eigen::Matrix4cd pair_gate();

/// Applies `gate` to every (copy I, copy II) pair of sites.
void apply_pair_gates(TwoCopyState &state, const Eigen::Matrix4cd &gate, unsigned workers = 1);

/// psi (x) psi followed by the pair gate on every site.
TwoCopyState evolve_two_copies(const PureState &psi, const ResourceCaps &caps = {}, unsigned workers = 1);

/// Squared norm of the amplitudes where no site reads (copy I down, copy II up).
double success_probability(const TwoCopyState &state);

/// <Psi(T)| P |Psi(T)> for the two-copy protocol state of psi.
double exact_success_probability(const PureState &psi, const ResourceCaps &caps = {});
/// Same for rho (x) rho, rho given as an ensemble.
double exact_success_probability(const MixedEnsemble &ensemble, const ResourceCaps &caps = {});

/// |<bra|gate|ket>| for the singlet mapped to |10>. 1 for a correct gate.
double singlet_flag_overlap(const Eigen::Matrix4cd &gate);

struct ShotSummary {
    std::uint64_t shots = 0;
    std::uint64_t successes = 0;
    double mean_o = 0.0;
    /// (1/S) sum o^2 - mean_o^2, always in [0, 1/4].
    double sample_variance = 0.0;
    std::uint64_t seed = 0;
};

/// Samples computational-basis outcomes of the evolved two-copy state and
/// counts o = 1 (no site in (down, up)).
///
/// Outcomes are drawn bit by bit from the most significant end: the shots
/// sharing a prefix are split between the two extensions with a binomial
/// draw on the conditional probability, which is exact sampling of all
/// shots at once.
ShotSummary sample_shots(const PureState &psi, std::uint64_t shots, std::uint64_t seed,
                         const ResourceCaps &caps = {});
/// Mixed input: each shot draws copy I and copy II independently from the
/// ensemble.
ShotSummary sample_shots(const MixedEnsemble &ensemble, std::uint64_t shots, std::uint64_t seed,
                         const ResourceCaps &caps = {});

struct ProtocolEstimate {
    WreEstimate wre;
    std::optional<double> exact_p;
    /// p - p^2 with p = exact_p if known, else mean_o.
    double variance_predicted = 0.0;
    ShotSummary shots;
};

/// Confidence used for the one-sided bound when no shot succeeds.
inline constexpr double kInsufficientShotsConfidence = 0.95;

/// WRE = N ln(3 pi) - ln(mean_o). Throws InsufficientShots when mean_o = 0.
/// exact_p is filled in when N fits caps.swap_qubits.
ProtocolEstimate wre_protocol(const PureState &psi, std::uint64_t shots, std::uint64_t seed,
                              const ResourceCaps &caps = {});
ProtocolEstimate wre_protocol(const MixedEnsemble &ensemble, std::uint64_t shots, std::uint64_t seed,
                              const ResourceCaps &caps = {});

}  // namespace wre
