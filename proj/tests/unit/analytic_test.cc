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

#include "wre/analytic.hpp"
#include "wre/errors.hpp"
#include "wre/purities.hpp"

namespace wre {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLog3Pi = std::log(3 * kPi);
const double kLog4Pi = std::log(4 * kPi);

double per_qubit(ClosedFormKind k, std::size_t n) { return wre_closed_form(k, n) / static_cast<double>(n); }

}  // namespace

TEST(closed_form, two_qubit_states_coincide) {
    double expected = 2 * std::log(2.0) + std::log(3.0) + 2 * std::log(kPi);
    EXPECT_NEAR(wre_closed_form(ClosedFormKind::ghz, 2), expected, 1e-12);
    EXPECT_NEAR(wre_closed_form(ClosedFormKind::w, 2), expected, 1e-12);
    EXPECT_NEAR(wre_closed_form(ClosedFormKind::pbell, 2), expected, 1e-12);
}

TEST(closed_form, values_from_subset_counting) {
    // GHZ: every proper subset has purity 1/2; W: purity of k qubits is
    // ((N-k)^2 + k^2) / N^2.
    for (std::size_t n = 2; n <= 30; ++n) {
        double ghz_sum = 2.0 + (std::ldexp(1.0, static_cast<int>(n)) - 2.0) / 2.0;
        double w_sum = 0.0;
        double binom = 1.0;
        for (std::size_t k = 0; k <= n; ++k) {
            double nk = static_cast<double>(n - k), kk = static_cast<double>(k), nn = static_cast<double>(n);
            w_sum += binom * (nk * nk + kk * kk) / (nn * nn);
            binom = binom * nk / (kk + 1);
        }
        double base = n * std::log(6 * kPi);
        EXPECT_NEAR(wre_closed_form(ClosedFormKind::ghz, n), base - std::log(ghz_sum), 1e-10) << n;
        EXPECT_NEAR(wre_closed_form(ClosedFormKind::w, n), base - std::log(w_sum), 1e-10) << n;
        EXPECT_NEAR(wre_closed_form(ClosedFormKind::product, n), n * kLog3Pi, 1e-12);
        if (n % 2 == 0) {
            EXPECT_NEAR(per_qubit(ClosedFormKind::pbell, n), std::log(2 * std::sqrt(3.0) * kPi), 1e-12);
        }
    }
    EXPECT_NEAR(wre_closed_form(ClosedFormKind::ghz, 3), 7.200030152798266, 1e-12);
}

TEST(closed_form, argument_errors) {
    EXPECT_THROW(wre_closed_form(ClosedFormKind::pbell, 3), InvalidArgument);
    EXPECT_THROW(wre_closed_form(ClosedFormKind::ghz, 0), InvalidArgument);
    EXPECT_THROW(parse_closed_form_kind("haar"), InvalidArgument);
    EXPECT_EQ(parse_closed_form_kind("haar-mean"), ClosedFormKind::haar_mean);
    EXPECT_EQ(std::string(to_string(ClosedFormKind::pbell)), "pbell");
}

TEST(closed_form, within_bounds) {
    for (std::size_t n = 1; n <= 60; ++n) {
        WreBounds b = wre_bounds(n);
        EXPECT_NEAR(b.lower, n * kLog3Pi, 1e-12);
        EXPECT_NEAR(b.upper, n * kLog4Pi, 1e-12);
        for (ClosedFormKind k : {ClosedFormKind::haar_mean, ClosedFormKind::ghz, ClosedFormKind::w,
                                 ClosedFormKind::product, ClosedFormKind::pbell}) {
            if (k == ClosedFormKind::pbell && n % 2) continue;
            double v = wre_closed_form(k, n);
            EXPECT_GE(v, b.lower - 1e-12);
            EXPECT_LE(v, b.upper + 1e-12);
        }
    }
}

TEST(closed_form, asymptotic_classes) {
    for (std::size_t n = 2; n < 40; ++n) {
        EXPECT_LT(per_qubit(ClosedFormKind::w, n + 1), per_qubit(ClosedFormKind::w, n)) << n;
        EXPECT_GT(per_qubit(ClosedFormKind::haar_mean, n + 1), per_qubit(ClosedFormKind::haar_mean, n)) << n;
        if (n >= 3) {
            EXPECT_LT(per_qubit(ClosedFormKind::ghz, n + 1), per_qubit(ClosedFormKind::ghz, n)) << n;
        }
    }
    // GHZ rises once, from N = 2 to N = 3, before it decreases.
    EXPECT_GT(per_qubit(ClosedFormKind::ghz, 3), per_qubit(ClosedFormKind::ghz, 2));
    EXPECT_NEAR(per_qubit(ClosedFormKind::ghz, 4), per_qubit(ClosedFormKind::ghz, 2), 1e-12);
    EXPECT_NEAR(per_qubit(ClosedFormKind::ghz, 400), kLog3Pi, 2e-3);
    EXPECT_NEAR(per_qubit(ClosedFormKind::w, 400), kLog3Pi, 2e-3);
    EXPECT_NEAR(per_qubit(ClosedFormKind::haar_mean, 400), kLog4Pi, 2e-3);
}

TEST(closed_form, large_n_is_finite) {
    for (std::size_t n : {200u, 1100u, 5000u}) {
        double v = wre_closed_form(ClosedFormKind::haar_mean, n);
        EXPECT_TRUE(std::isfinite(v));
        EXPECT_NEAR(v, n * kLog4Pi - std::log(2.0), 1e-9);
        EXPECT_NEAR(wre_closed_form(ClosedFormKind::ghz, n), n * kLog3Pi + std::log(2.0), 1e-9);
        EXPECT_GE(haar_mean_second_moment(n), 0.0);
    }
}

TEST(haar_mean, second_moment_matches_purity_average) {
    // E Tr(rho_A^2) = (d_A + d_B) / (d + 1) summed over subsets.
    for (std::size_t n = 1; n <= 20; ++n) {
        double d = std::ldexp(1.0, static_cast<int>(n));
        double mean_sum = 2.0 * std::pow(3.0, n) / (d + 1.0);
        EXPECT_NEAR(haar_mean_second_moment(n) / second_moment_from_purity_sum(mean_sum, n), 1.0, 1e-12);
        EXPECT_NEAR(-std::log(haar_mean_second_moment(n)), wre_closed_form(ClosedFormKind::haar_mean, n), 1e-10);
    }
    EXPECT_NEAR(haar_mean_second_moment(4), 2.0 / (17.0 * 16.0 * std::pow(kPi, 4)), 1e-18);
}

TEST(haar_mean, sampled_states_average) {
    Rng rng(70);
    constexpr std::size_t n = 3;
    StatAccumulator acc;
    for (int i = 0; i < 4000; ++i) acc.add(wre_exact(sample_haar_state(n, rng)).second_moment);
    EXPECT_LT(std::abs(acc.mean() - haar_mean_second_moment(n)) / acc.std_error(), 4.0);
}

}  // namespace wre
