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

namespace wre {

/// Upper limits on qubit counts for the exponential-memory code paths.
///
/// Defaults can be overridden through the environment:
///   WRE_CAP_ENUM   subset enumeration of pure-state purities (default 12)
///   WRE_CAP_SWAP   4^N two-copy vectors: swap contraction and protocol (default 13)
///   WRE_CAP_MIXED  density-matrix subset enumeration (default 8)
///   WRE_CAP_DENSE  dense 2^N x 2^N matrices (default 12)
struct ResourceCaps {
    std::size_t enum_qubits = 12;
    std::size_t swap_qubits = 13;
    std::size_t mixed_qubits = 8;
    std::size_t dense_qubits = 12;

    /// Defaults, overridden by any WRE_CAP_* variable that is set.
    /// Throws InvalidArgument if a variable is not a non-negative integer.
    static ResourceCaps from_env();
};

/// Throws ResourceLimit naming `what` if n > cap.
void require_within_cap(std::size_t n, std::size_t cap, const char *what);

}  // namespace wre
