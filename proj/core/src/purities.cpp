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

#include "wre/purities.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "wre/errors.hpp"
#include "wre/sampling.hpp"

namespace wre {

namespace {

/// For a subsystem given by its sorted qubit list, maps every local index
/// (first listed qubit most significant) to the bits it occupies in a full
/// N-qubit basis index.
std::vector<std::size_t> scatter_table(std::size_t n, const std::vector<std::size_t> &qubits) {
    std::size_t m = qubits.size();
    std::vector<std::size_t> table(std::size_t{1} << m);
    for (std::size_t local = 0; local < table.size(); ++local) {
        std::size_t index = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if ((local >> (m - 1 - j)) & 1u) {
                index |= std::size_t{1} << index_bit(n, qubits[j]);
            }
        }
        table[local] = index;
    }
    return table;
}

std::vector<std::size_t> qubits_of(const SubsetMask &mask) {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < mask.n_qubits(); ++q) {
        if (mask.contains(q)) {
            out.push_back(q);
        }
    }
    return out;
}

/// psi reshaped so that rows run over `rows` and columns over its complement.
Eigen::MatrixXcd reshape(const PureState &psi, const SubsetMask &rows) {
    std::size_t n = psi.n_qubits();
    auto row_table = scatter_table(n, qubits_of(rows));
    auto col_table = scatter_table(n, qubits_of(rows.complement()));
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(row_table.size()), static_cast<Eigen::Index>(col_table.size()));
    for (std::size_t c = 0; c < col_table.size(); ++c) {
        for (std::size_t r = 0; r < row_table.size(); ++r) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = psi[row_table[r] | col_table[c]];
        }
    }
    return m;
}

void require_mask_matches(std::size_t n, const SubsetMask &mask) {
    if (mask.n_qubits() != n) {
        throw InvalidArgument("subset mask is for " + std::to_string(mask.n_qubits()) + " qubits, state has " +
                              std::to_string(n));
    }
}

constexpr std::size_t kSumBlock = std::size_t{1} << 16;

}  // namespace

const char *to_string(PurityMethod method) {
    switch (method) {
        case PurityMethod::subset_enum:
            return "subset-enum";
        case PurityMethod::swap_contraction:
            return "swap-contraction";
        case PurityMethod::dm_enum:
            return "dm-enum";
    }
    return "unknown";
}

DensityMatrix partial_trace_pure(const PureState &psi, const SubsetMask &mask, const ResourceCaps &caps) {
    require_mask_matches(psi.n_qubits(), mask);
    require_within_cap(mask.size(), caps.dense_qubits, "partial_trace_pure");
    Eigen::MatrixXcd m = reshape(psi, mask);
    Eigen::MatrixXcd rho = m * m.adjoint();
    return DensityMatrix::from_trusted(mask.size(), std::move(rho));
}

DensityMatrix partial_trace(const DensityMatrix &rho, const SubsetMask &mask) {
    std::size_t n = rho.n_qubits();
    require_mask_matches(n, mask);
    auto keep = scatter_table(n, qubits_of(mask));
    auto traced = scatter_table(n, qubits_of(mask.complement()));
    auto dim = static_cast<Eigen::Index>(keep.size());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    const auto &full = rho.matrix();
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            Complex s = 0.0;
            for (std::size_t b : traced) {
                s += full(static_cast<Eigen::Index>(keep[i] | b), static_cast<Eigen::Index>(keep[j] | b));
            }
            out(i, j) = s;
        }
    }
    return DensityMatrix::from_trusted(mask.size(), std::move(out));
}

double purity(const PureState &psi, const SubsetMask &mask) {
    require_mask_matches(psi.n_qubits(), mask);
    SubsetMask small = mask.size() * 2 <= mask.n_qubits() ? mask : mask.complement();
    if (small.size() == 0) {
        return 1.0;
    }
    Eigen::MatrixXcd m = reshape(psi, small);
    Eigen::MatrixXcd gram = m * m.adjoint();
    return gram.cwiseAbs2().sum();
}

PuritySumResult purity_sum_enum(const PureState &psi, const ResourceCaps &caps, unsigned workers) {
    std::size_t n = psi.n_qubits();
    require_within_cap(n, caps.enum_qubits, "purity_sum_enum");
    std::size_t n_masks = std::size_t{1} << n;
    std::vector<double> values(n_masks);
    parallel_for(n_masks, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t bits = begin; bits < end; ++bits) {
            values[bits] = purity(psi, SubsetMask(n, bits));
        }
    });
    CompensatedSum total;
    for (double v : values) {
        total.add(v);
    }
    return {total.value(), PurityMethod::subset_enum, n};
}

PuritySumResult purity_sum_swap(const PureState &psi, const ResourceCaps &caps, unsigned workers) {
    std::size_t n = psi.n_qubits();
    require_within_cap(n, caps.swap_qubits, "purity_sum_swap");
    std::size_t dim = psi.dim();
    std::size_t dim2 = dim * dim;
    auto amps = psi.amplitudes();

    // Copy-major layout: index = a * 2^N + b for copy one in a, copy two in b.
    std::vector<Complex> v(dim2);
    parallel_for(dim, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t a = begin; a < end; ++a) {
            for (std::size_t b = 0; b < dim; ++b) {
                v[a * dim + b] = amps[a] * amps[b];
            }
        }
    });

    // (I + W_j): W_j exchanges index bit p of copy two with bit p + N of copy one.
    for (std::size_t q = 0; q < n; ++q) {
        std::size_t low = std::size_t{1} << index_bit(n, q);
        std::size_t high = low << n;
        parallel_for(dim2, workers, [&](std::size_t begin, std::size_t end) {
            for (std::size_t x = begin; x < end; ++x) {
                bool bl = (x & low) != 0;
                bool bh = (x & high) != 0;
                if (bl == bh) {
                    v[x] *= 2.0;
                } else if (bl) {
                    std::size_t y = x ^ low ^ high;
                    Complex s = v[x] + v[y];
                    v[x] = s;
                    v[y] = s;
                }
            }
        });
    }

    // <psi psi | v>, in fixed blocks merged in order.
    std::size_t n_blocks = (dim2 + kSumBlock - 1) / kSumBlock;
    std::vector<CompensatedSum> partial(n_blocks);
    parallel_for(n_blocks, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t blk = begin; blk < end; ++blk) {
            std::size_t stop = std::min(dim2, (blk + 1) * kSumBlock);
            for (std::size_t x = blk * kSumBlock; x < stop; ++x) {
                Complex bra = std::conj(amps[x / dim] * amps[x % dim]);
                partial[blk].add((bra * v[x]).real());
            }
        }
    });
    CompensatedSum total;
    for (const auto &p : partial) {
        total.add(p.value());
    }
    return {total.value(), PurityMethod::swap_contraction, n};
}

PuritySumResult purity_sum_dm(const DensityMatrix &rho, const ResourceCaps &caps) {
    std::size_t n = rho.n_qubits();
    if (n == 0) {
        throw InvalidArgument("purity_sum_dm needs at least one qubit");
    }
    require_within_cap(n, caps.mixed_qubits, "purity_sum_dm");
    CompensatedSum total;
    total.add(1.0);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        total.add(partial_trace(rho, SubsetMask(n, bits)).purity());
    }
    return {total.value(), PurityMethod::dm_enum, n};
}

double second_moment_from_purity_sum(double sum, std::size_t n_qubits) {
    return std::exp(std::log(sum) - static_cast<double>(n_qubits) * std::log(6.0 * std::numbers::pi));
}

namespace {

WreEstimate from_purity_sum(const PuritySumResult &r, Method tag) {
    double value = static_cast<double>(r.n_qubits) * std::log(6.0 * std::numbers::pi) - std::log(r.sum);
    WreEstimate e = WreEstimate::exact_from_value(value, tag);
    return e;
}

}  // namespace

WreEstimate wre_exact(const PureState &psi, ExactMethod method, const ResourceCaps &caps, unsigned workers) {
    if (method == ExactMethod::automatic) {
        method = psi.n_qubits() <= caps.swap_qubits ? ExactMethod::swap_contraction : ExactMethod::subset_enum;
    }
    if (method == ExactMethod::swap_contraction) {
        return from_purity_sum(purity_sum_swap(psi, caps, workers), Method::exact_swap);
    }
    return from_purity_sum(purity_sum_enum(psi, caps, workers), Method::subset_enum);
}

WreEstimate wre_exact(const DensityMatrix &rho, const ResourceCaps &caps) {
    return from_purity_sum(purity_sum_dm(rho, caps), Method::subset_enum);
}

}  // namespace wre
