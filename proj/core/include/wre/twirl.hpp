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

#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "wre/estimate.hpp"
#include "wre/qstate.hpp"

namespace wre {

/// Haar-random element of SU(2).
///
/// A 2x2 complex Gaussian matrix is orthonormalized by Gram-Schmidt (which
/// leaves the R factor with a positive diagonal, so the result is Haar on
/// U(2)), then divided by a square root of its determinant.
SingleQubitUnitary sample_su2(Rng &rng);

/// pi^{-N} E[<0...0|U^dagger rho U|0...0>^2] over independent Haar u_j,
/// estimated by Monte Carlo. Equal in expectation to mc_second_moment.
MomentEstimate twirl_second_moment(const PureState &psi, const SamplingOptions &opts);
MomentEstimate twirl_second_moment(const DensityMatrix &rho, const SamplingOptions &opts);

/// -ln(twirl_second_moment), tagged twirl.
WreEstimate wre_twirl(const PureState &psi, const SamplingOptions &opts);
WreEstimate wre_twirl(const DensityMatrix &rho, const SamplingOptions &opts);

/// The SWAP operator on two qubits, basis order |s s'> = 2 s + s'.
Eigen::Matrix4cd swap_operator();

/// Gram matrix Q_{pi,pi'} = Tr(pi pi') over pi, pi' in {I, W} for d = 2.
Eigen::Matrix2d permutation_gram_matrix();

/// Weingarten matrix C = Q^{-1}.
Eigen::Matrix2d weingarten_matrix();

/// sum_{sigma,pi} C_{sigma pi} Tr(X pi) sigma, the exact Haar twirl
/// int du (u (x) u) X (u (x) u)^dagger.
Eigen::Matrix4cd weingarten_channel(const Eigen::Matrix4cd &x);

enum class MomentKind { two_point, four_point_state, weingarten_channel };

const char *to_string(MomentKind kind);
MomentKind parse_moment_kind(std::string_view name);

/// Outcome of a Monte Carlo check of a Haar integral.
///
/// Complex entries are compared through their real and imaginary parts
/// separately. An entry passes when |deviation| <= 4 se + kMomentFloor; the
/// floor only matters for entries whose sampled value is constant (se = 0).
struct MomentCheckReport {
    MomentKind kind = MomentKind::two_point;
    double max_abs_deviation = 0.0;
    /// Largest |deviation| / se over entries with se > 0.
    double per_entry_sigma = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    bool pass = false;
};

inline constexpr double kMomentSigmaThreshold = 4.0;
inline constexpr double kMomentFloor = 1e-12;

/// Checks one of
///  - two-point:  int du (u^dagger)_{ab} u_{cd}  against  delta_ad delta_bc / 2
///  - four-point-state:  int du (u|0>)^{(x)2} (<0|u^dagger)^{(x)2}  against (I + W)/6
///  - weingarten-channel: int du (u (x) u) X (u (x) u)^dagger against
///    weingarten_channel(X), with X = `probe`.
/// Requires samples >= 1000. `probe` must be a 4x4 matrix and is required
/// for weingarten-channel only.
MomentCheckReport haar_moment_check(MomentKind kind, const SamplingOptions &opts,
                                    const std::optional<Eigen::MatrixXcd> &probe = std::nullopt);

}  // namespace wre
