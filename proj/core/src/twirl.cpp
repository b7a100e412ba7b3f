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

#include "wre/twirl.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "overlap_sampling.hpp"
#include "wre/errors.hpp"

namespace wre {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Vector2cd gaussian_column(Rng &rng, std::normal_distribution<double> &gauss) {
    Eigen::Vector2cd v;
    v[0] = Complex(gauss(rng), gauss(rng));
    v[1] = Complex(gauss(rng), gauss(rng));
    return v;
}

void draw_twirled(Rng &rng, std::vector<Spinor> &spinors) {
    for (auto &s : spinors) {
        Eigen::Matrix2cd u = sample_su2(rng).matrix();
        s = {u(0, 0), u(1, 0)};
    }
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b) {
    Eigen::Matrix4cd k;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return k;
}

/// 16 complex entries tracked as 32 real accumulators (re, im interleaved).
struct EntryAccumulator {
    std::array<StatAccumulator, 32> parts;

    void add(const Eigen::Matrix4cd &m) {
        for (int i = 0; i < 16; ++i) {
            Complex z = m(i / 4, i % 4);
            parts[2 * i].add(z.real());
            parts[2 * i + 1].add(z.imag());
        }
    }
    void merge(const EntryAccumulator &other) {
        for (std::size_t k = 0; k < parts.size(); ++k) {
            parts[k].merge(other.parts[k]);
        }
    }
};

MomentCheckReport compare(MomentKind kind, const SamplingOptions &opts, const EntryAccumulator &acc,
                          const Eigen::Matrix4cd &expected) {
    MomentCheckReport report;
    report.kind = kind;
    report.samples = acc.parts[0].count();
    report.seed = opts.seed;
    report.pass = true;
    for (int i = 0; i < 16; ++i) {
        Complex z = expected(i / 4, i % 4);
        for (int part = 0; part < 2; ++part) {
            const StatAccumulator &a = acc.parts[2 * i + part];
            double dev = std::abs(a.mean() - (part == 0 ? z.real() : z.imag()));
            double se = a.std_error();
            report.max_abs_deviation = std::max(report.max_abs_deviation, dev);
            if (se > 0.0) {
                report.per_entry_sigma = std::max(report.per_entry_sigma, dev / se);
            }
            if (dev > kMomentSigmaThreshold * se + kMomentFloor) {
                report.pass = false;
            }
        }
    }
    return report;
}

}  // namespace

SingleQubitUnitary sample_su2(Rng &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Vector2cd c0 = gaussian_column(rng, gauss);
    Eigen::Vector2cd c1 = gaussian_column(rng, gauss);
    c0.normalize();
    // Two projection passes keep the columns orthogonal to rounding even when
    // the Gaussian columns are nearly parallel.
    for (int pass = 0; pass < 2; ++pass) {
        c1 -= c0.dot(c1) * c0;
    }
    c1.normalize();
    Eigen::Matrix2cd u;
    u.col(0) = c0;
    u.col(1) = c1;
    Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    u /= std::sqrt(det);
    return SingleQubitUnitary::from_matrix(u);
}

MomentEstimate twirl_second_moment(const PureState &psi, const SamplingOptions &opts) {
    detail::require_samples(opts, 2);
    std::size_t n = psi.n_qubits();
    return detail::sample_expectation_power(n, opts, 2, std::pow(kPi, -static_cast<double>(n)), draw_twirled,
                                            [&] { return detail::PureExpectation{psi, {}}; });
}

MomentEstimate twirl_second_moment(const DensityMatrix &rho, const SamplingOptions &opts) {
    detail::require_samples(opts, 2);
    std::size_t n = rho.n_qubits();
    return detail::sample_expectation_power(n, opts, 2, std::pow(kPi, -static_cast<double>(n)), draw_twirled,
                                            [&] { return detail::MixedExpectation{rho}; });
}

WreEstimate wre_twirl(const PureState &psi, const SamplingOptions &opts) {
    return WreEstimate::from_moment(twirl_second_moment(psi, opts), Method::twirl);
}

WreEstimate wre_twirl(const DensityMatrix &rho, const SamplingOptions &opts) {
    return WreEstimate::from_moment(twirl_second_moment(rho, opts), Method::twirl);
}

Eigen::Matrix4cd swap_operator() {
    Eigen::Matrix4cd w = Eigen::Matrix4cd::Zero();
    w(0, 0) = 1.0;
    w(1, 2) = 1.0;
    w(2, 1) = 1.0;
    w(3, 3) = 1.0;
    return w;
}

Eigen::Matrix2d permutation_gram_matrix() {
    const std::array<Eigen::Matrix4cd, 2> perms{Eigen::Matrix4cd::Identity(), swap_operator()};
    Eigen::Matrix2d q;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            q(i, j) = (perms[i] * perms[j]).trace().real();
        }
    }
    return q;
}

Eigen::Matrix2d weingarten_matrix() { return permutation_gram_matrix().inverse(); }

Eigen::Matrix4cd weingarten_channel(const Eigen::Matrix4cd &x) {
    const std::array<Eigen::Matrix4cd, 2> perms{Eigen::Matrix4cd::Identity(), swap_operator()};
    Eigen::Matrix2d c = weingarten_matrix();
    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    for (int s = 0; s < 2; ++s) {
        for (int p = 0; p < 2; ++p) {
            out += c(s, p) * (x * perms[p]).trace() * perms[s];
        }
    }
    return out;
}

const char *to_string(MomentKind kind) {
    switch (kind) {
        case MomentKind::two_point:
            return "two-point";
        case MomentKind::four_point_state:
            return "four-point-state";
        case MomentKind::weingarten_channel:
            return "weingarten-channel";
    }
    return "unknown";
}

MomentKind parse_moment_kind(std::string_view name) {
    for (MomentKind k : {MomentKind::two_point, MomentKind::four_point_state, MomentKind::weingarten_channel}) {
        if (name == to_string(k)) {
            return k;
        }
    }
    throw InvalidArgument("unknown moment kind '" + std::string(name) + "'");
}

MomentCheckReport haar_moment_check(MomentKind kind, const SamplingOptions &opts,
                                    const std::optional<Eigen::MatrixXcd> &probe) {
    detail::require_samples(opts, 1000);
    switch (kind) {
        case MomentKind::two_point: {
            // Entry (2a + b, 2c + d) holds (u^dagger)_{ab} u_{cd}.
            auto acc = run_chunked<EntryAccumulator>(opts, [](Rng &rng, std::uint64_t count, EntryAccumulator &out) {
                for (std::uint64_t s = 0; s < count; ++s) {
                    Eigen::Matrix2cd u = sample_su2(rng).matrix();
                    Eigen::Matrix2cd ud = u.adjoint();
                    Eigen::Matrix4cd m;
                    for (int a = 0; a < 2; ++a)
                        for (int b = 0; b < 2; ++b)
                            for (int c = 0; c < 2; ++c)
                                for (int d = 0; d < 2; ++d) m(2 * a + b, 2 * c + d) = ud(a, b) * u(c, d);
                    out.add(m);
                }
            });
            Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) expected(2 * a + b, 2 * b + a) = 0.5;
            return compare(kind, opts, acc, expected);
        }
        case MomentKind::four_point_state: {
            auto acc = run_chunked<EntryAccumulator>(opts, [](Rng &rng, std::uint64_t count, EntryAccumulator &out) {
                for (std::uint64_t s = 0; s < count; ++s) {
                    Eigen::Matrix2cd u = sample_su2(rng).matrix();
                    Eigen::Vector4cd cc;
                    for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 2; ++j) cc[2 * i + j] = u(i, 0) * u(j, 0);
                    out.add(cc * cc.adjoint());
                }
            });
            Eigen::Matrix4cd expected = (Eigen::Matrix4cd::Identity() + swap_operator()) / 6.0;
            return compare(kind, opts, acc, expected);
        }
        case MomentKind::weingarten_channel: {
            if (!probe) {
                throw InvalidArgument("weingarten-channel check needs a probe matrix");
            }
            if (probe->rows() != 4 || probe->cols() != 4) {
                throw InvalidArgument("probe must be 4x4, got " + std::to_string(probe->rows()) + "x" +
                                      std::to_string(probe->cols()));
            }
            Eigen::Matrix4cd x = *probe;
            auto acc = run_chunked<EntryAccumulator>(opts, [&x](Rng &rng, std::uint64_t count, EntryAccumulator &out) {
                for (std::uint64_t s = 0; s < count; ++s) {
                    Eigen::Matrix2cd u = sample_su2(rng).matrix();
                    Eigen::Matrix4cd uu = kron(u, u);
                    out.add(uu * x * uu.adjoint());
                }
            });
            return compare(kind, opts, acc, weingarten_channel(x));
        }
    }
    throw InvalidArgument("unknown moment kind");
}

}  // namespace wre
