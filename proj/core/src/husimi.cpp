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

#include "wre/husimi.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "overlap_sampling.hpp"
#include "wre/errors.hpp"

namespace wre {

namespace {

constexpr double kPi = std::numbers::pi;

void require_config(std::size_t n_qubits, std::span<const BlochDirection> config) {
    if (config.size() != n_qubits) {
        throw InvalidArgument("coherent configuration has " + std::to_string(config.size()) +
                              " directions for a " + std::to_string(n_qubits) + "-qubit state");
    }
}

std::vector<Spinor> spinors_for(std::span<const BlochDirection> config) {
    std::vector<Spinor> out;
    out.reserve(config.size());
    for (const auto &d : config) {
        d.validate();
        out.push_back(coherent_amplitudes(d));
    }
    return out;
}

void draw_coherent(Rng &rng, std::vector<Spinor> &spinors) {
    for (auto &s : spinors) {
        s = coherent_amplitudes(sample_direction(rng));
    }
}

}  // namespace

void BlochDirection::validate() const {
    if (!(theta >= 0.0 && theta <= kPi) || !(phi >= 0.0 && phi < 2.0 * kPi)) {
        throw InvalidArgument("Bloch direction (" + std::to_string(theta) + ", " + std::to_string(phi) +
                              ") is outside [0, pi] x [0, 2pi)");
    }
}

Spinor coherent_amplitudes(const BlochDirection &dir) {
    return {Complex(std::cos(dir.theta / 2), 0.0), std::polar(std::sin(dir.theta / 2), dir.phi)};
}

Complex product_overlap(std::span<const Complex> amplitudes, std::span<const Spinor> spinors,
                        std::vector<Complex> &scratch) {
    std::size_t n = spinors.size();
    if (amplitudes.size() != (std::size_t{1} << n)) {
        throw InvalidArgument("product_overlap: amplitude count does not match spinor count");
    }
    std::size_t half = amplitudes.size() / 2;
    scratch.resize(half);
    // The last qubit sits on index bit 0; contract it first.
    Complex c0 = std::conj(spinors[n - 1][0]);
    Complex c1 = std::conj(spinors[n - 1][1]);
    for (std::size_t i = 0; i < half; ++i) {
        scratch[i] = c0 * amplitudes[2 * i] + c1 * amplitudes[2 * i + 1];
    }
    for (std::size_t q = n - 1; q-- > 0;) {
        half /= 2;
        c0 = std::conj(spinors[q][0]);
        c1 = std::conj(spinors[q][1]);
        for (std::size_t i = 0; i < half; ++i) {
            scratch[i] = c0 * scratch[2 * i] + c1 * scratch[2 * i + 1];
        }
    }
    return scratch[0];
}

double product_expectation(const DensityMatrix &rho, std::span<const Spinor> spinors) {
    std::size_t n = spinors.size();
    if (rho.n_qubits() != n) {
        throw InvalidArgument("product_expectation: density matrix has " + std::to_string(rho.n_qubits()) +
                              " qubits, got " + std::to_string(n) + " spinors");
    }
    Eigen::VectorXcd c(Eigen::Index{1} << n);
    c[0] = 1.0;
    Eigen::Index len = 1;
    for (std::size_t q = 0; q < n; ++q) {
        // Qubit q becomes the new least significant bit.
        for (Eigen::Index i = len; i-- > 0;) {
            Complex v = c[i];
            c[2 * i] = v * spinors[q][0];
            c[2 * i + 1] = v * spinors[q][1];
        }
        len *= 2;
    }
    return (c.adjoint() * rho.matrix() * c)(0, 0).real();
}

Complex coherent_overlap(const PureState &psi, std::span<const BlochDirection> config) {
    require_config(psi.n_qubits(), config);
    std::vector<Complex> scratch;
    return product_overlap(psi.amplitudes(), spinors_for(config), scratch);
}

double husimi_value(const PureState &psi, std::span<const BlochDirection> config) {
    double n = static_cast<double>(psi.n_qubits());
    return std::norm(coherent_overlap(psi, config)) / std::pow(2.0 * kPi, n);
}

double husimi_value(const DensityMatrix &rho, std::span<const BlochDirection> config) {
    require_config(rho.n_qubits(), config);
    double n = static_cast<double>(rho.n_qubits());
    return product_expectation(rho, spinors_for(config)) / std::pow(2.0 * kPi, n);
}

BlochDirection sample_direction(Rng &rng) {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    double u = uniform(rng);
    double v = uniform(rng);
    double theta = std::acos(1.0 - 2.0 * u);
    double phi = 2.0 * kPi * v;
    if (phi >= 2.0 * kPi) {
        phi = 0.0;
    }
    return {theta, phi};
}

// With P_H = <n|rho|n> / (2pi)^N, the weighted integrands are
//   (4pi)^N P_H^2 = <n|rho|n>^2 / pi^N   and   (4pi)^N P_H = 2^N <n|rho|n>.

MomentEstimate mc_second_moment(const PureState &psi, const SamplingOptions &opts) {
    detail::require_samples(opts, 2);
    std::size_t n = psi.n_qubits();
    return detail::sample_expectation_power(n, opts, 2, std::pow(kPi, -static_cast<double>(n)), draw_coherent,
                                            [&] { return detail::PureExpectation{psi, {}}; });
}

MomentEstimate mc_second_moment(const DensityMatrix &rho, const SamplingOptions &opts) {
    detail::require_samples(opts, 2);
    std::size_t n = rho.n_qubits();
    return detail::sample_expectation_power(n, opts, 2, std::pow(kPi, -static_cast<double>(n)), draw_coherent,
                                            [&] { return detail::MixedExpectation{rho}; });
}

MomentEstimate mc_normalization_check(const PureState &psi, const SamplingOptions &opts) {
    detail::require_samples(opts, 2);
    std::size_t n = psi.n_qubits();
    return detail::sample_expectation_power(n, opts, 1, std::ldexp(1.0, static_cast<int>(n)), draw_coherent,
                                            [&] { return detail::PureExpectation{psi, {}}; });
}

MomentEstimate mc_normalization_check(const DensityMatrix &rho, const SamplingOptions &opts) {
    detail::require_samples(opts, 2);
    std::size_t n = rho.n_qubits();
    return detail::sample_expectation_power(n, opts, 1, std::ldexp(1.0, static_cast<int>(n)), draw_coherent,
                                            [&] { return detail::MixedExpectation{rho}; });
}

WreEstimate wre_mc(const PureState &psi, const SamplingOptions &opts) {
    return WreEstimate::from_moment(mc_second_moment(psi, opts), Method::mc_husimi);
}

WreEstimate wre_mc(const DensityMatrix &rho, const SamplingOptions &opts) {
    return WreEstimate::from_moment(mc_second_moment(rho, opts), Method::mc_husimi);
}

}  // namespace wre
