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

#include "wre/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wre/errors.hpp"

namespace wre {

namespace {

constexpr double kPi = std::numbers::pi;

void require_n(std::size_t n) {
    if (n == 0) {
        throw InvalidArgument("closed forms need n >= 1");
    }
}

}  // namespace

const char *to_string(ClosedFormKind kind) {
    switch (kind) {
        case ClosedFormKind::haar_mean:
            return "haar-mean";
        case ClosedFormKind::ghz:
            return "ghz";
        case ClosedFormKind::w:
            return "w";
        case ClosedFormKind::pbell:
            return "pbell";
        case ClosedFormKind::product:
            return "product";
    }
    return "unknown";
}

ClosedFormKind parse_closed_form_kind(std::string_view name) {
    for (ClosedFormKind k : {ClosedFormKind::haar_mean, ClosedFormKind::ghz, ClosedFormKind::w,
                             ClosedFormKind::pbell, ClosedFormKind::product}) {
        if (name == to_string(k)) {
            return k;
        }
    }
    throw InvalidArgument("unknown closed-form kind '" + std::string(name) + "'");
}

double wre_closed_form(ClosedFormKind kind, std::size_t n) {
    require_n(n);
    double nn = static_cast<double>(n);
    switch (kind) {
        case ClosedFormKind::haar_mean:
            return nn * std::log(4.0 * kPi) - std::log(2.0) + std::log1p(std::ldexp(1.0, -static_cast<int>(n)));
        case ClosedFormKind::ghz:
            return nn * std::log(3.0 * kPi) + std::log(2.0) - std::log1p(std::ldexp(1.0, 1 - static_cast<int>(n)));
        case ClosedFormKind::w:
            return nn * std::log(3.0 * kPi) + std::log(2.0) - std::log1p(1.0 / nn);
        case ClosedFormKind::pbell:
            if (n % 2 != 0) {
                throw InvalidArgument("pbell closed form needs even n, got " + std::to_string(n));
            }
            return nn * std::log(2.0 * std::sqrt(3.0) * kPi);
        case ClosedFormKind::product:
            return nn * std::log(3.0 * kPi);
    }
    throw InvalidArgument("unknown closed-form kind");
}

double haar_mean_second_moment(std::size_t n) {
    require_n(n);
    double nn = static_cast<double>(n);
    double log_m = std::log(2.0) - std::log1p(std::ldexp(1.0, static_cast<int>(n))) - nn * std::log(2.0) -
                   nn * std::log(kPi);
    return std::exp(log_m);
}

WreBounds wre_bounds(std::size_t n) {
    require_n(n);
    double nn = static_cast<double>(n);
    return {nn * std::log(3.0 * kPi), nn * std::log(4.0 * kPi)};
}

}  // namespace wre
