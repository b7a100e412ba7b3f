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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace wre {

using Rng = std::mt19937_64;

/// Independent generator for sub-stream `stream` of a run seeded with `seed`.
Rng derive_stream(std::uint64_t seed, std::uint64_t stream);

/// Welford accumulator for mean and variance; merge() uses the pairwise update.
class StatAccumulator {
   public:
    void add(double x) {
        ++count_;
        double delta = x - mean_;
        mean_ += delta / static_cast<double>(count_);
        m2_ += delta * (x - mean_);
    }

    void merge(const StatAccumulator &other);

    std::uint64_t count() const { return count_; }
    double mean() const { return mean_; }
    /// Unbiased sample variance (0 for fewer than two samples).
    double variance() const { return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0; }
    double std_error() const {
        return count_ > 0 ? std::sqrt(variance() / static_cast<double>(count_)) : 0.0;
    }

   private:
    std::uint64_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

/// Neumaier-compensated summation.
class CompensatedSum {
   public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

   private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

/// How a Monte Carlo run is split up.
///
/// Samples are cut into fixed-size chunks; chunk c draws from
/// derive_stream(seed, c) and chunk results are merged in chunk order. The
/// result therefore depends only on (samples, seed, chunk_size), not on the
/// number of workers.
struct SamplingOptions {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::uint64_t chunk_size = 1u << 14;
};

/// Calls body(begin, end) over [0, n) split into contiguous blocks, one per
/// worker. Blocks never overlap, so element-wise kernels stay deterministic.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t, std::size_t)> &body);

namespace detail {
void run_chunks(std::uint64_t n_chunks, unsigned workers, const std::function<void(std::uint64_t)> &task);
}

/// Runs `fill(rng, count, acc)` once per chunk and merges the per-chunk
/// accumulators in chunk order. Acc must be default-constructible and provide
/// merge(const Acc&).
template <class Acc, class Fill>
Acc run_chunked(const SamplingOptions &opts, Fill &&fill) {
    std::uint64_t chunk = std::max<std::uint64_t>(opts.chunk_size, 1);
    std::uint64_t n_chunks = (opts.samples + chunk - 1) / chunk;
    std::vector<Acc> parts(n_chunks);
    detail::run_chunks(n_chunks, opts.workers, [&](std::uint64_t c) {
        Rng rng = derive_stream(opts.seed, c);
        std::uint64_t begin = c * chunk;
        std::uint64_t count = std::min(chunk, opts.samples - begin);
        fill(rng, count, parts[c]);
    });
    Acc total{};
    for (const auto &p : parts) {
        total.merge(p);
    }
    return total;
}

}  // namespace wre
