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

#include <cstddef>

#include "wre/config.hpp"
#include "wre/estimate.hpp"
#include "wre/qstate.hpp"

namespace wre {

enum class PurityMethod { subset_enum, swap_contraction, dm_enum };

const char *to_string(PurityMethod method);

/// Sum over all 2^N subsystems A of Tr(rho_A^2), with Tr(rho_empty^2) = 1.
struct PuritySumResult {
    double sum = 0.0;
    PurityMethod method = PurityMethod::subset_enum;
    std::size_t n_qubits = 0;
};

/// Reduced state on A. psi is viewed as a 2^|A| x 2^(N-|A|) matrix M and the
/// result is M M^dagger. Throws ResourceLimit if |A| > caps.dense_qubits.
DensityMatrix partial_trace_pure(const PureState &psi, const SubsetMask &mask, const ResourceCaps &caps = {});

/// Reduced state of a density matrix on A.
DensityMatrix partial_trace(const DensityMatrix &rho, const SubsetMask &mask);

/// Tr(rho_A^2) for rho = |psi><psi|, evaluated on the smaller side of the
/// bipartition (purity of A equals purity of its complement).
double purity(const PureState &psi, const SubsetMask &mask);

/// Brute-force sum of purity() over every mask. Throws ResourceLimit above
/// caps.enum_qubits. Masks may be split across `workers`; the sum is
/// accumulated in mask order so the result does not depend on the split.
PuritySumResult purity_sum_enum(const PureState &psi, const ResourceCaps &caps = {}, unsigned workers = 1);

/// <psi psi| prod_j (I + W_j) |psi psi>, where W_j swaps qubit j between
/// the two copies. O(N 4^N) time, O(4^N) memory; throws ResourceLimit above
/// caps.swap_qubits.
PuritySumResult purity_sum_swap(const PureState &psi, const ResourceCaps &caps = {}, unsigned workers = 1);

/// Subset enumeration with explicit partial traces of rho. Throws
/// ResourceLimit above caps.mixed_qubits.
PuritySumResult purity_sum_dm(const DensityMatrix &rho, const ResourceCaps &caps = {});

enum class ExactMethod { subset_enum, swap_contraction, automatic };

/// N ln(6 pi) - ln(sum_A Tr(rho_A^2)).
///
/// `automatic` picks swap contraction when N fits caps.swap_qubits and falls
/// back to subset enumeration otherwise.
WreEstimate wre_exact(const PureState &psi, ExactMethod method = ExactMethod::automatic,
                      const ResourceCaps &caps = {}, unsigned workers = 1);
/// Mixed-state variant; always uses purity_sum_dm (tagged subset-enum).
WreEstimate wre_exact(const DensityMatrix &rho, const ResourceCaps &caps = {});

/// Second moment (6 pi)^{-N} * sum.
double second_moment_from_purity_sum(double sum, std::size_t n_qubits);

}  // namespace wre
