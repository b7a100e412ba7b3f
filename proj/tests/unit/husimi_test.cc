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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles/oracles.hpp"
#include "wre/analytic.hpp"
#include "wre/errors.hpp"
#include "wre/husimi.hpp"
#include "wre/purities.hpp"

namespace wre {

namespace {

constexpr double kPi = std::numbers::pi;

double sigmas_from(double value, double expected, double se) { return std::abs(value - expected) / se; }

}  // namespace

TEST(coherent_state, x_direction) {
    Spinor s = coherent_amplitudes({kPi / 2, 0.0});
    EXPECT_NEAR(s[0].real(), M_SQRT1_2, 1e-15);
    EXPECT_NEAR(s[1].real(), M_SQRT1_2, 1e-15);
    EXPECT_NEAR(s[1].imag(), 0.0, 1e-15);
}

TEST(coherent_state, is_plus_one_eigenvector_of_n_dot_sigma) {
    Rng rng(1);
    for (int i = 0; i < 50; ++i) {
        BlochDirection d = sample_direction(rng);
        Spinor s = coherent_amplitudes(d);
        double nx = std::sin(d.theta) * std::cos(d.phi);
        double ny = std::sin(d.theta) * std::sin(d.phi);
        double nz = std::cos(d.theta);
        Eigen::Matrix2cd ns;
        ns << nz, Complex(nx, -ny), Complex(nx, ny), -nz;
        Eigen::Vector2cd v(s[0], s[1]);
        EXPECT_LT((ns * v - v).norm(), 1e-14);
    }
}

TEST(coherent_state, poles) {
    Spinor north = coherent_amplitudes({0.0, 0.0});
    Spinor south = coherent_amplitudes({kPi, 0.0});
    EXPECT_EQ(north[0], Complex(1.0));
    EXPECT_EQ(north[1], Complex(0.0));
    EXPECT_NEAR(std::abs(south[0]), 0.0, 1e-15);
    EXPECT_NEAR(south[1].real(), 1.0, 1e-15);
}

TEST(coherent_state, direction_validation) {
    EXPECT_THROW((BlochDirection{-0.1, 0.0}.validate()), InvalidArgument);
    EXPECT_THROW((BlochDirection{kPi + 1e-9, 0.0}.validate()), InvalidArgument);
    EXPECT_THROW((BlochDirection{1.0, 2 * kPi}.validate()), InvalidArgument);
    EXPECT_NO_THROW((BlochDirection{kPi, 0.0}.validate()));
    CoherentConfig bad = {{1.0, -0.5}};
    EXPECT_THROW(coherent_overlap(make_ghz(1), bad), InvalidArgument);
}

TEST(sample_direction, uniform_moments) {
    Rng rng(8);
    StatAccumulator z, x;
    for (int i = 0; i < 200000; ++i) {
        BlochDirection d = sample_direction(rng);
        z.add(std::cos(d.theta));
        x.add(std::sin(d.theta) * std::cos(d.phi));
    }
    // Uniform on the sphere: each coordinate has mean 0 and variance 1/3.
    EXPECT_LT(std::abs(z.mean()) / z.std_error(), 4.0);
    EXPECT_LT(std::abs(x.mean()) / x.std_error(), 4.0);
    EXPECT_NEAR(z.variance(), 1.0 / 3.0, 0.01);
}

TEST(husimi_value, matches_kronecker_oracle) {
    Rng rng(4);
    for (std::size_t n = 1; n <= 4; ++n) {
        PureState psi = sample_haar_state(n, rng);
        auto rho = wre_test::outer(wre_test::to_vector(psi));
        DensityMatrix dm = to_density_matrix(psi);
        for (int k = 0; k < 10; ++k) {
            CoherentConfig cfg;
            std::vector<double> th, ph;
            for (std::size_t q = 0; q < n; ++q) {
                cfg.push_back(sample_direction(rng));
                th.push_back(cfg.back().theta);
                ph.push_back(cfg.back().phi);
            }
            double expected = wre_test::coherent_expectation(rho, th, ph) / std::pow(2 * kPi, n);
            EXPECT_NEAR(husimi_value(psi, cfg), expected, 1e-15);
            EXPECT_NEAR(husimi_value(dm, cfg), expected, 1e-15);
            EXPECT_NEAR(std::norm(coherent_overlap(psi, cfg)), expected * std::pow(2 * kPi, n), 1e-13);
        }
    }
}

TEST(husimi_value, rejects_wrong_config_length) {
    CoherentConfig cfg(2);
    EXPECT_THROW(husimi_value(make_ghz(3), cfg), InvalidArgument);
}

// The central identity, checked against deterministic quadrature of the
// Husimi function without touching the library's purity code.
TEST(second_moment, quadrature_equals_purity_sum) {
    Rng rng(21);
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<PureState> states = {sample_haar_state(n, rng), make_ghz(n), make_w(n), make_product(n)};
        for (const auto &psi : states) {
            auto rho = wre_test::outer(wre_test::to_vector(psi));
            double quad = wre_test::quadrature_second_moment(rho, n, 8, 8);
            double identity = wre_test::purity_sum(rho, n) / std::pow(6 * kPi, n);
            EXPECT_NEAR(quad / identity, 1.0, 1e-12) << "n=" << n;
        }
    }
}

TEST(second_moment, quadrature_on_mixed_state) {
    Rng rng(22);
    MixedEnsemble e = make_ensemble({0.25, 0.75}, {sample_haar_state(2, rng), sample_haar_state(2, rng)});
    auto rho = to_density_matrix(e).matrix();
    double quad = wre_test::quadrature_second_moment(rho, 2, 10, 6);
    EXPECT_NEAR(quad / (wre_test::purity_sum(rho, 2) / std::pow(6 * kPi, 2)), 1.0, 1e-12);
}

TEST(mc_second_moment, ghz3_within_four_sigma) {
    PureState psi = make_ghz(3);
    MomentEstimate m = mc_second_moment(psi, {400000, 5, 1});
    double exact = std::exp(-wre_closed_form(ClosedFormKind::ghz, 3));
    EXPECT_LT(sigmas_from(m.mean, exact, m.std_error), 4.0);
    EXPECT_EQ(m.samples, 400000u);
    EXPECT_EQ(m.seed, 5u);

    WreEstimate e = wre_mc(psi, {400000, 5, 1});
    EXPECT_EQ(e.method, Method::mc_husimi);
    EXPECT_NEAR(e.value, -std::log(m.mean), 1e-15);
    EXPECT_NEAR(e.std_error_value, m.std_error / m.mean, 1e-15);
}

TEST(mc_second_moment, deterministic_across_workers) {
    PureState psi = make_w(4);
    MomentEstimate a = mc_second_moment(psi, {50000, 77, 1, 4096});
    MomentEstimate b = mc_second_moment(psi, {50000, 77, 3, 4096});
    MomentEstimate c = mc_second_moment(psi, {50000, 78, 1, 4096});
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.std_error, b.std_error);
    EXPECT_NE(a.mean, c.mean);
}

TEST(mc_second_moment, density_matrix_path_agrees) {
    Rng rng(6);
    PureState psi = sample_haar_state(3, rng);
    MomentEstimate pure = mc_second_moment(psi, {20000, 9, 1});
    MomentEstimate mixed = mc_second_moment(to_density_matrix(psi), {20000, 9, 1});
    EXPECT_NEAR(pure.mean / mixed.mean, 1.0, 1e-12);
}

TEST(mc_second_moment, needs_two_samples) {
    EXPECT_THROW(mc_second_moment(make_ghz(2), {1, 1, 1}), InvalidArgument);
    EXPECT_THROW(mc_normalization_check(make_ghz(2), {0, 1, 1}), InvalidArgument);
}

TEST(normalization, within_four_sigma_of_one) {
    Rng rng(10);
    std::vector<PureState> states = {make_ghz(4), make_w(3), sample_haar_state(5, rng)};
    std::uint64_t seed = 100;
    for (const auto &psi : states) {
        MomentEstimate m = mc_normalization_check(psi, {200000, seed++, 1});
        EXPECT_LT(sigmas_from(m.mean, 1.0, m.std_error), 4.0);
    }
    MixedEnsemble e = make_ensemble({0.5, 0.5}, {make_ghz(3), make_w(3)});
    MomentEstimate m = mc_normalization_check(to_density_matrix(e), {200000, seed, 1});
    EXPECT_LT(sigmas_from(m.mean, 1.0, m.std_error), 4.0);
}

TEST(wre_mc, product_state_near_lower_bound) {
    WreEstimate e = wre_mc(make_product(2), {200000, 3, 1});
    EXPECT_LT(sigmas_from(e.value, 2 * std::log(3 * kPi), e.std_error_value), 4.0);
}

}  // namespace wre
