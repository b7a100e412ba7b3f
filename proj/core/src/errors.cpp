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

#include "wre/errors.hpp"

#include <sstream>

namespace wre {

namespace {

std::string insufficient_message(std::size_t shots, double confidence, double p_upper, double wre_lower) {
    std::ostringstream out;
    out << "insufficient shots: 0 of " << shots << " shots succeeded; at " << confidence * 100
        << "% confidence p <= " << p_upper << ", so WRE >= " << wre_lower << " nats";
    return out.str();
}

}  // namespace

InsufficientShots::InsufficientShots(std::size_t shots, double confidence, double p_upper, double wre_lower)
    : EstimatorFailure(insufficient_message(shots, confidence, p_upper, wre_lower)),
      shots_(shots),
      confidence_(confidence),
      p_upper_(p_upper),
      wre_lower_(wre_lower) {}

const char *to_string(StateFileErrorKind kind) {
    switch (kind) {
        case StateFileErrorKind::io:
            return "io";
        case StateFileErrorKind::parse:
            return "parse";
        case StateFileErrorKind::amplitude_count:
            return "wrong amplitude count";
        case StateFileErrorKind::norm:
            return "norm violation";
    }
    return "unknown";
}

StateFileError::StateFileError(StateFileErrorKind kind, const std::string &path, const std::string &detail)
    : Error(std::string(to_string(kind)) + " in state file '" + path + "': " + detail), kind_(kind) {}

}  // namespace wre
