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

#include <optional>
#include <stdexcept>
#include <string>

namespace wre {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad n, malformed bitstring, ...).
class InvalidArgument : public Error {
   public:
    using Error::Error;
};

/// A configured size cap would be exceeded.
class ResourceLimit : public Error {
   public:
    using Error::Error;
};

/// A stochastic estimator could not produce a finite value.
class EstimatorFailure : public Error {
   public:
    using Error::Error;
};

/// The protocol saw no successful shot, so -ln(mean_o) is undefined.
///
/// Carries a one-sided Clopper-Pearson upper bound on the success probability
/// and the lower bound on the entropy it implies.
class InsufficientShots : public EstimatorFailure {
   public:
    InsufficientShots(std::size_t shots, double confidence, double p_upper, double wre_lower);

    std::size_t shots() const { return shots_; }
    double confidence() const { return confidence_; }
    double p_upper() const { return p_upper_; }
    double wre_lower_bound() const { return wre_lower_; }

   private:
    std::size_t shots_;
    double confidence_;
    double p_upper_;
    double wre_lower_;
};

enum class StateFileErrorKind { io, parse, amplitude_count, norm };

const char *to_string(StateFileErrorKind kind);

class StateFileError : public Error {
   public:
    StateFileError(StateFileErrorKind kind, const std::string &path, const std::string &detail);

    StateFileErrorKind kind() const { return kind_; }

   private:
    StateFileErrorKind kind_;
};

}  // namespace wre
