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

// Shared Monte Carlo driver for estimators whose integrand is a power of
// <c|rho|c> over random product spinors c.

#include <cmath>
#include <string>
#include <vector>

#include "wre/errors.hpp"
#include "wre/husimi.hpp"
#include "wre/sampling.hpp"

namespace wre::detail {

/// Expectation <c|psi><psi|c> for a pure state.
struct PureExpectation {
    const PureState &psi;
    std::vector<Complex> scratch;

    double operator()(std::span<const Spinor> spinors) {
        return std::norm(product_overlap(psi.amplitudes(), spinors, scratch));
    }
};

struct MixedExpectation {
    const DensityMatrix &rho;

    double operator()(std::span<const Spinor> spinors) const { return product_expectation(rho, spinors); }
};

inline void require_samples(const SamplingOptions &opts, std::uint64_t minimum) {
    if (opts.samples < minimum) {
        throw InvalidArgument("need at least " + std::to_string(minimum) + " samples, got " +
                              std::to_string(opts.samples));
    }
}

/// Mean of scale * <c|rho|c>^power, where draw(rng, spinors) fills one
/// spinor per qubit and make_expectation() returns a per-chunk functor.
template <class Draw, class MakeExpectation>
MomentEstimate sample_expectation_power(std::size_t n_qubits, const SamplingOptions &opts, int power, double scale,
                                        Draw draw, MakeExpectation make_expectation) {
    StatAccumulator acc = run_chunked<StatAccumulator>(opts, [&](Rng &rng, std::uint64_t count, StatAccumulator &out) {
        auto expectation = make_expectation();
        std::vector<Spinor> spinors(n_qubits);
        for (std::uint64_t s = 0; s < count; ++s) {
            draw(rng, spinors);
            double e = expectation(spinors);
            double x = power == 1 ? e : e * e;
            out.add(scale * x);
        }
    });
    if (!std::isfinite(acc.mean())) {
        throw EstimatorFailure("Monte Carlo integrand is not finite");
    }
    return MomentEstimate{acc.mean(), acc.std_error(), acc.count(), opts.seed};
}

}  // namespace wre::detail
