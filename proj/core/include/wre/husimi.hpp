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

#include <array>
#include <span>
#include <vector>

#include "wre/estimate.hpp"
#include "wre/qstate.hpp"

namespace wre {

/// Point on the Bloch sphere, theta in [0, pi], phi in [0, 2pi).
struct BlochDirection {
    double theta = 0.0;
    double phi = 0.0;

    /// Throws InvalidArgument if outside the ranges above.
    void validate() const;
};

/// One direction per qubit.
using CoherentConfig = std::vector<BlochDirection>;

/// Single-qubit spinor (amplitude of |up>, amplitude of |down>).
using Spinor = std::array<Complex, 2>;

/// Spin coherent state (cos(theta/2), e^{i phi} sin(theta/2)), the +1
/// eigenvector of n.sigma.
Spinor coherent_amplitudes(const BlochDirection &dir);

/// <c_0 (x) ... (x) c_{N-1} | psi> by contracting one qubit at a time from the
/// least significant end. `scratch` is reused between calls to avoid
/// reallocating; it is resized to 2^(N-1).
Complex product_overlap(std::span<const Complex> amplitudes, std::span<const Spinor> spinors,
                        std::vector<Complex> &scratch);

/// <c|rho|c> for the product vector c = c_0 (x) ... (x) c_{N-1}.
double product_expectation(const DensityMatrix &rho, std::span<const Spinor> spinors);

/// <n|psi> for the product coherent state |n>.
Complex coherent_overlap(const PureState &psi, std::span<const BlochDirection> config);

/// Husimi function (2 pi)^{-N} <n|rho|n>.
double husimi_value(const PureState &psi, std::span<const BlochDirection> config);
double husimi_value(const DensityMatrix &rho, std::span<const BlochDirection> config);

/// Uniform direction on S^2: cos(theta) = 1 - 2u, phi = 2 pi v.
BlochDirection sample_direction(Rng &rng);

/// Monte Carlo estimate of the second moment M = int dn P_H(n)^2, with dn
/// the product of solid-angle measures, as (4 pi)^N times the sample mean of
/// P_H^2 under uniform directions. Requires samples >= 2.
MomentEstimate mc_second_moment(const PureState &psi, const SamplingOptions &opts);
MomentEstimate mc_second_moment(const DensityMatrix &rho, const SamplingOptions &opts);

/// Monte Carlo estimate of int dn P_H(n), which is 1 for every state.
MomentEstimate mc_normalization_check(const PureState &psi, const SamplingOptions &opts);
MomentEstimate mc_normalization_check(const DensityMatrix &rho, const SamplingOptions &opts);

/// -ln(mc_second_moment), tagged mc-husimi.
WreEstimate wre_mc(const PureState &psi, const SamplingOptions &opts);
WreEstimate wre_mc(const DensityMatrix &rho, const SamplingOptions &opts);

}  // namespace wre
