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

#include <bit>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "oracles/oracles.hpp"
#include "wre/errors.hpp"
#include "wre/purities.hpp"
#include "wre/twirl.hpp"

namespace wre {

namespace {

std::vector<std::size_t> qubits_of(const SubsetMask &m) {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < m.n_qubits(); ++q)
        if (m.contains(q)) out.push_back(q);
    return out;
}

}  // namespace

TEST(partial_trace, pure_and_mixed_match_oracle) {
    Rng rng(31);
    PureState psi = sample_haar_state(4, rng);
    auto rho = wre_test::outer(wre_test::to_vector(psi));
    DensityMatrix dm = to_density_matrix(psi);
    for (std::uint64_t bits : {0b0001u, 0b0110u, 0b1011u, 0b1111u}) {
        SubsetMask m(4, bits);
        auto expected = wre_test::reduce(rho, 4, qubits_of(m));
        EXPECT_LT((partial_trace_pure(psi, m).matrix() - expected).norm(), 1e-14) << bits;
        EXPECT_LT((partial_trace(dm, m).matrix() - expected).norm(), 1e-14) << bits;
    }
    DensityMatrix empty = partial_trace_pure(psi, SubsetMask::empty(4));
    EXPECT_EQ(empty.n_qubits(), 0u);
    EXPECT_NEAR(empty.matrix()(0, 0).real(), 1.0, 1e-14);
}

TEST(partial_trace, rejects_mismatched_mask) {
    EXPECT_THROW(partial_trace_pure(make_ghz(3), SubsetMask(4, 1)), InvalidArgument);
    EXPECT_THROW(purity(make_ghz(3), SubsetMask(2, 1)), InvalidArgument);
}

TEST(purity, complementarity) {
    Rng rng(32);
    for (std::size_t n = 2; n <= 6; ++n) {
        PureState psi = sample_haar_state(n, rng);
        for (std::uint64_t bits = 0; bits < (1u << n); ++bits) {
            SubsetMask m(n, bits);
            EXPECT_NEAR(purity(psi, m), purity(psi, m.complement()), 1e-13);
            double p = purity(psi, m);
            EXPECT_GE(p, std::pow(2.0, -static_cast<double>(std::min(m.size(), n - m.size()))) - 1e-13);
            EXPECT_LE(p, 1.0 + 1e-13);
        }
    }
}

TEST(purity, trivial_subsets_are_one) {
    Rng rng(33);
    PureState psi = sample_haar_state(3, rng);
    EXPECT_EQ(purity(psi, SubsetMask::empty(3)), 1.0);
    EXPECT_EQ(purity(psi, SubsetMask::full(3)), 1.0);
}

TEST(purity_sum, all_methods_match_brute_force) {
    Rng rng(34);
    for (std::size_t n = 1; n <= 6; ++n) {
        PureState psi = sample_haar_state(n, rng);
        DensityMatrix dm = to_density_matrix(psi);
        double oracle = wre_test::purity_sum(dm.matrix(), n);
        EXPECT_NEAR(purity_sum_enum(psi).sum / oracle, 1.0, 1e-12) << n;
        EXPECT_NEAR(purity_sum_swap(psi).sum / oracle, 1.0, 1e-12) << n;
        EXPECT_NEAR(purity_sum_dm(dm).sum / oracle, 1.0, 1e-12) << n;
    }
}

TEST(purity_sum, mixed_state_matches_brute_force) {
    Rng rng(35);
    for (std::size_t n = 1; n <= 4; ++n) {
        MixedEnsemble e = make_ensemble({0.2, 0.3, 0.5}, {sample_haar_state(n, rng), sample_haar_state(n, rng),
                                                          sample_haar_state(n, rng)});
        DensityMatrix dm = to_density_matrix(e);
        double oracle = wre_test::purity_sum(dm.matrix(), n);
        PuritySumResult r = purity_sum_dm(dm);
        EXPECT_NEAR(r.sum / oracle, 1.0, 1e-12);
        EXPECT_EQ(r.method, PurityMethod::dm_enum);
        EXPECT_EQ(r.n_qubits, n);
    }
}

TEST(purity_sum, pure_state_range) {
    // Each of the 2^N purities lies in [2^-min(|A|,|B|), 1].
    Rng rng(36);
    for (std::size_t n = 1; n <= 8; ++n) {
        double lower = 0.0;
        for (std::uint64_t bits = 0; bits < (1u << n); ++bits) {
            std::size_t a = std::popcount(bits);
            lower += std::pow(2.0, -static_cast<double>(std::min(a, n - a)));
        }
        for (const PureState &psi : {sample_haar_state(n, rng), make_ghz(n), make_w(n)}) {
            double s = purity_sum_swap(psi).sum;
            EXPECT_GE(s, lower - 1e-12);
            EXPECT_LE(s, std::ldexp(1.0, static_cast<int>(n)) + 1e-12);
        }
    }
}

TEST(purity_sum, product_state_is_two_to_the_n) {
    for (std::size_t n = 1; n <= 8; ++n) {
        EXPECT_NEAR(purity_sum_swap(make_product(n)).sum, std::ldexp(1.0, static_cast<int>(n)), 1e-12);
        EXPECT_NEAR(purity_sum_enum(make_basis(std::string(n, '1'))).sum, std::ldexp(1.0, static_cast<int>(n)),
                    1e-12);
    }
}

TEST(purity_sum, workers_do_not_change_result) {
    Rng rng(37);
    PureState psi = sample_haar_state(9, rng);
    EXPECT_EQ(purity_sum_enum(psi, {}, 1).sum, purity_sum_enum(psi, {}, 4).sum);
    EXPECT_EQ(purity_sum_swap(psi, {}, 1).sum, purity_sum_swap(psi, {}, 4).sum);
}

TEST(purity_sum, respects_caps) {
    ResourceCaps caps;
    caps.enum_qubits = 3;
    caps.swap_qubits = 3;
    caps.mixed_qubits = 2;
    PureState psi = make_ghz(4);
    EXPECT_THROW(purity_sum_enum(psi, caps), ResourceLimit);
    EXPECT_THROW(purity_sum_swap(psi, caps), ResourceLimit);
    EXPECT_THROW(purity_sum_dm(to_density_matrix(make_ghz(3)), caps), ResourceLimit);
    // automatic falls back to enumeration past the swap cap.
    caps.enum_qubits = 4;
    WreEstimate e = wre_exact(psi, ExactMethod::automatic, caps);
    EXPECT_EQ(e.method, Method::subset_enum);
}

TEST(purity_sum, caps_from_environment) {
    ::setenv("WRE_CAP_SWAP", "5", 1);
    ResourceCaps caps = ResourceCaps::from_env();
    ::unsetenv("WRE_CAP_SWAP");
    EXPECT_EQ(caps.swap_qubits, 5u);
    EXPECT_EQ(ResourceCaps::from_env().swap_qubits, ResourceCaps{}.swap_qubits);
    ::setenv("WRE_CAP_ENUM", "many", 1);
    EXPECT_THROW(ResourceCaps::from_env(), InvalidArgument);
    ::unsetenv("WRE_CAP_ENUM");
}

TEST(wre_exact, value_and_tags) {
    PureState psi = make_ghz(3);
    double oracle = 3 * std::log(6 * std::numbers::pi) - std::log(wre_test::purity_sum(
                                                            wre_test::outer(wre_test::to_vector(psi)), 3));
    WreEstimate swap = wre_exact(psi, ExactMethod::swap_contraction);
    WreEstimate en = wre_exact(psi, ExactMethod::subset_enum);
    EXPECT_NEAR(swap.value, oracle, 1e-12);
    EXPECT_NEAR(en.value, oracle, 1e-12);
    EXPECT_EQ(swap.method, Method::exact_swap);
    EXPECT_EQ(en.method, Method::subset_enum);
    EXPECT_EQ(swap.std_error_value, 0.0);
    EXPECT_EQ(swap.samples, 0u);
    EXPECT_FALSE(swap.seed.has_value());
    EXPECT_NEAR(swap.second_moment, std::exp(-oracle), 1e-15);
    EXPECT_NEAR(second_moment_from_purity_sum(6.0, 3), 6.0 / std::pow(6 * std::numbers::pi, 3), 1e-18);
}

TEST(wre_exact, local_unitary_invariance) {
    Rng rng(38);
    PureState psi = sample_haar_state(5, rng);
    double base = wre_exact(psi).value;
    for (int k = 0; k < 10; ++k) {
        std::vector<SingleQubitUnitary> us;
        for (int q = 0; q < 5; ++q) us.push_back(sample_su2(rng));
        EXPECT_NEAR(wre_exact(apply_local_unitaries(psi, us)).value, base, 1e-10);
    }
}

TEST(wre_exact, mixed_state_variant) {
    Rng rng(39);
    MixedEnsemble e = make_ensemble({0.6, 0.4}, {sample_haar_state(3, rng), sample_haar_state(3, rng)});
    DensityMatrix dm = to_density_matrix(e);
    double oracle = 3 * std::log(6 * std::numbers::pi) - std::log(wre_test::purity_sum(dm.matrix(), 3));
    EXPECT_NEAR(wre_exact(dm).value, oracle, 1e-12);
}

}  // namespace wre
