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

#include "wre/sampling.hpp"

#include <atomic>
#include <thread>

namespace wre {

Rng derive_stream(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      0x57524531u};
    return Rng(seq);
}

void StatAccumulator::merge(const StatAccumulator &other) {
    if (other.count_ == 0) {
        return;
    }
    if (count_ == 0) {
        *this = other;
        return;
    }
    auto na = static_cast<double>(count_);
    auto nb = static_cast<double>(other.count_);
    double delta = other.mean_ - mean_;
    std::uint64_t total = count_ + other.count_;
    auto n = static_cast<double>(total);
    mean_ += delta * nb / n;
    m2_ += other.m2_ + delta * delta * na * nb / n;
    count_ = total;
}

void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t, std::size_t)> &body) {
    if (workers <= 1 || n < 2) {
        body(0, n);
        return;
    }
    std::size_t w = std::min<std::size_t>(workers, n);
    std::size_t block = (n + w - 1) / w;
    std::vector<std::jthread> threads;
    threads.reserve(w);
    for (std::size_t t = 0; t < w; ++t) {
        std::size_t begin = t * block;
        std::size_t end = std::min(n, begin + block);
        if (begin >= end) {
            break;
        }
        threads.emplace_back([&body, begin, end] { body(begin, end); });
    }
}

namespace detail {

void run_chunks(std::uint64_t n_chunks, unsigned workers, const std::function<void(std::uint64_t)> &task) {
    if (workers <= 1 || n_chunks < 2) {
        for (std::uint64_t c = 0; c < n_chunks; ++c) {
            task(c);
        }
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> threads;
    unsigned w = static_cast<unsigned>(std::min<std::uint64_t>(workers, n_chunks));
    threads.reserve(w);
    for (unsigned t = 0; t < w; ++t) {
        threads.emplace_back([&] {
            for (std::uint64_t c = next++; c < n_chunks; c = next++) {
                task(c);
            }
        });
    }
}

}  // namespace detail

}  // namespace wre
