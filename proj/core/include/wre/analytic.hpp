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
#include <string_view>

namespace wre {

enum class ClosedFormKind { haar_mean, ghz, w, pbell, product };

const char *to_string(ClosedFormKind kind);
/// Accepts "haar-mean", "ghz", "w", "pbell", "product".
ClosedFormKind parse_closed_form_kind(std::string_view name);

/// Closed-form WRE in nats:
///   haar-mean  N ln(4 pi) - ln 2 + ln(1 + 2^-N)   (annealed: -ln E_U[M])
///   ghz        N ln(3 pi) + ln 2 - ln(1 + 2^(1-N))
///   w          N ln(3 pi) + ln 2 - ln(1 + 1/N)
///   pbell      N ln(2 sqrt(3) pi)                  (even N)
///   product    N ln(3 pi)
/// Throws InvalidArgument for n = 0 or odd n with pbell.
double wre_closed_form(ClosedFormKind kind, std::size_t n);

/// E_U[M] over Haar-random N-qubit states: 2 / ((2^N + 1) 2^N pi^N).
double haar_mean_second_moment(std::size_t n);

struct WreBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// (N ln(3 pi), N ln(4 pi)), valid for every N-qubit state.
WreBounds wre_bounds(std::size_t n);

}  // namespace wre
