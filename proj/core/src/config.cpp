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

#include "wre/config.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "wre/errors.hpp"

namespace wre {

namespace {

void override_from(const char *name, std::size_t &field) {
    const char *raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') {
        return;
    }
    std::string_view text(raw);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InvalidArgument(std::string(name) + " must be a non-negative integer, got '" + raw + "'");
    }
    field = value;
}

}  // namespace

ResourceCaps ResourceCaps::from_env() {
    ResourceCaps caps;
    override_from("WRE_CAP_ENUM", caps.enum_qubits);
    override_from("WRE_CAP_SWAP", caps.swap_qubits);
    override_from("WRE_CAP_MIXED", caps.mixed_qubits);
    override_from("WRE_CAP_DENSE", caps.dense_qubits);
    return caps;
}

void require_within_cap(std::size_t n, std::size_t cap, const char *what) {
    if (n > cap) {
        throw ResourceLimit(std::string(what) + ": " + std::to_string(n) + " qubits exceeds the cap of " +
                            std::to_string(cap));
    }
}

}  // namespace wre
