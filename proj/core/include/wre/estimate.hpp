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

#include <cstdint>
#include <optional>
#include <string_view>

namespace wre {

/// How a Wehrl-Renyi entropy value was obtained.
enum class Method { exact_swap, subset_enum, mc_husimi, twirl, protocol, analytic };

const char *to_string(Method method);
/// Inverse of to_string; throws InvalidArgument for unknown tags.
Method parse_method(std::string_view tag);
bool is_exact(Method method);

/// Result of a Monte Carlo integral.
struct MomentEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Second Renyi entropy of the Husimi function, in nats.
///
/// value is always -ln(second_moment). For sampled methods std_error_value
/// is the first-order (delta method) error std_error(M) / M, which is only
/// reliable once M is resolved to a few percent.
struct WreEstimate {
    double value = 0.0;
    double second_moment = 0.0;
    double std_error_value = 0.0;
    Method method = Method::analytic;
    std::uint64_t samples = 0;
    std::optional<std::uint64_t> seed;

    static WreEstimate exact(double second_moment, Method method);
    static WreEstimate exact_from_value(double value, Method method);
    /// Throws EstimatorFailure if the moment is not a positive finite number.
    static WreEstimate from_moment(const MomentEstimate &moment, Method method);
};

}  // namespace wre
