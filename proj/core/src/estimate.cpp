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

#include "wre/estimate.hpp"

#include <cmath>
#include <string>

#include "wre/errors.hpp"

namespace wre {

const char *to_string(Method method) {
    switch (method) {
        case Method::exact_swap:
            return "exact-swap";
        case Method::subset_enum:
            return "subset-enum";
        case Method::mc_husimi:
            return "mc-husimi";
        case Method::twirl:
            return "twirl";
        case Method::protocol:
            return "protocol";
        case Method::analytic:
            return "analytic";
    }
    return "unknown";
}

Method parse_method(std::string_view tag) {
    for (Method m : {Method::exact_swap, Method::subset_enum, Method::mc_husimi, Method::twirl, Method::protocol,
                     Method::analytic}) {
        if (tag == to_string(m)) {
            return m;
        }
    }
    throw InvalidArgument("unknown method '" + std::string(tag) + "'");
}

bool is_exact(Method method) {
    return method == Method::exact_swap || method == Method::subset_enum || method == Method::analytic;
}

WreEstimate WreEstimate::exact(double second_moment, Method method) {
    WreEstimate e;
    e.second_moment = second_moment;
    e.value = -std::log(second_moment);
    e.method = method;
    return e;
}

WreEstimate WreEstimate::exact_from_value(double value, Method method) {
    WreEstimate e;
    e.value = value;
    e.second_moment = std::exp(-value);
    e.method = method;
    return e;
}

WreEstimate WreEstimate::from_moment(const MomentEstimate &moment, Method method) {
    if (!std::isfinite(moment.mean) || !(moment.mean > 0.0)) {
        throw EstimatorFailure("second-moment estimate " + std::to_string(moment.mean) + " from " +
                               std::to_string(moment.samples) + " samples is not positive; increase samples");
    }
    WreEstimate e;
    e.second_moment = moment.mean;
    e.value = -std::log(moment.mean);
    e.std_error_value = moment.std_error / moment.mean;
    e.method = method;
    e.samples = moment.samples;
    e.seed = moment.seed;
    return e;
}

}  // namespace wre
