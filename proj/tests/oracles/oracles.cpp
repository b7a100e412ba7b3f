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

#include "oracles/oracles.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wre_test {

namespace {

std::size_t bit_of(std::size_t index, std::size_t n, std::size_t qubit) { return (index >> (n - 1 - qubit)) & 1u; }

}  // namespace

CVec to_vector(const wre::PureState &psi) {
    CVec v(static_cast<Eigen::Index>(psi.dim()));
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        v(static_cast<Eigen::Index>(i)) = psi[i];
    }
    return v;
}

wre::PureState from_vector(std::size_t n, const CVec &v) {
    return wre::PureState::from_amplitudes(n, std::vector<Complex>(v.data(), v.data() + v.size()));
}

CMat outer(const CVec &psi) { return psi * psi.adjoint(); }

CMat reduce(const CMat &rho, std::size_t n, const std::vector<std::size_t> &keep) {
    std::vector<std::size_t> rest;
    for (std::size_t q = 0; q < n; ++q) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
            rest.push_back(q);
        }
    }
    std::size_t dk = std::size_t{1} << keep.size();
    std::size_t dr = std::size_t{1} << rest.size();
    // Full index from (kept index, rest index), each read most significant first.
    auto compose = [&](std::size_t k, std::size_t r) {
        std::size_t full = 0;
        for (std::size_t i = 0; i < keep.size(); ++i) {
            std::size_t b = (k >> (keep.size() - 1 - i)) & 1u;
            full |= b << (n - 1 - keep[i]);
        }
        for (std::size_t i = 0; i < rest.size(); ++i) {
            std::size_t b = (r >> (rest.size() - 1 - i)) & 1u;
            full |= b << (n - 1 - rest[i]);
        }
        return static_cast<Eigen::Index>(full);
    };
    CMat out = CMat::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
    for (std::size_t i = 0; i < dk; ++i) {
        for (std::size_t j = 0; j < dk; ++j) {
            Complex s = 0.0;
            for (std::size_t e = 0; e < dr; ++e) {
                s += rho(compose(i, e), compose(j, e));
            }
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s;
        }
    }
    return out;
}

double purity_sum(const CMat &rho, std::size_t n) {
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::size_t> keep;
        for (std::size_t q = 0; q < n; ++q) {
            if ((mask >> q) & 1u) {
                keep.push_back(q);
            }
        }
        CMat r = reduce(rho, n, keep);
        total += (r * r).trace().real();
    }
    return total;
}

double coherent_expectation(const CMat &rho, const std::vector<double> &theta, const std::vector<double> &phi) {
    CVec v = CVec::Ones(1);
    for (std::size_t q = 0; q < theta.size(); ++q) {
        CVec s(2);
        s << std::cos(theta[q] / 2), std::polar(std::sin(theta[q] / 2), phi[q]);
        CVec next(v.size() * 2);
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            next(2 * i) = v(i) * s(0);
            next(2 * i + 1) = v(i) * s(1);
        }
        v = next;
    }
    return (v.adjoint() * rho * v)(0, 0).real();
}

double quadrature_second_moment(const CMat &rho, std::size_t n, std::size_t gauss_points, std::size_t phi_points) {
    // Boost stores only the non-negative half of each symmetric rule.
    std::vector<double> nodes;
    std::vector<double> weights;
    auto collect = [&](const auto &rule) {
        const auto &a = rule.abscissa();
        const auto &w = rule.weights();
        for (std::size_t i = 0; i < a.size(); ++i) {
            nodes.push_back(a[i]);
            weights.push_back(w[i]);
            if (a[i] != 0.0) {
                nodes.push_back(-a[i]);
                weights.push_back(w[i]);
            }
        }
    };
    using boost::math::quadrature::gauss;
    switch (gauss_points) {
        case 8:
            collect(gauss<double, 8>());
            break;
        case 10:
            collect(gauss<double, 10>());
            break;
        case 20:
            collect(gauss<double, 20>());
            break;
        default:
            throw std::invalid_argument("gauss_points must be 8, 10 or 20");
    }
    std::size_t g = nodes.size();
    std::size_t per_qubit = g * phi_points;
    std::size_t total = 1;
    for (std::size_t q = 0; q < n; ++q) {
        total *= per_qubit;
    }
    double dphi = 2.0 * std::numbers::pi / static_cast<double>(phi_points);
    double norm = std::pow(2.0 * std::numbers::pi, static_cast<double>(n));
    double sum = 0.0;
    std::vector<double> theta(n);
    std::vector<double> phi(n);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        double w = 1.0;
        for (std::size_t q = 0; q < n; ++q) {
            std::size_t k = rem % per_qubit;
            rem /= per_qubit;
            std::size_t gi = k / phi_points;
            std::size_t pi = k % phi_points;
            theta[q] = std::acos(nodes[gi]);
            phi[q] = dphi * static_cast<double>(pi);
            w *= weights[gi] * dphi;
        }
        double p = coherent_expectation(rho, theta, phi) / norm;
        sum += w * p * p;
    }
    return sum;
}

CMat haar_unitary_qr(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    auto d = static_cast<Eigen::Index>(dim);
    CMat z(d, d);
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        z(i) = Complex(g(rng), g(rng));
    }
    Eigen::HouseholderQR<CMat> qr(z);
    CMat q = qr.householderQ() * CMat::Identity(d, d);
    CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < d; ++i) {
        Complex ph = r(i, i) / std::abs(r(i, i));
        q.col(i) *= ph;
    }
    return q;
}

CMat taylor_expm(const CMat &h, double t) {
    CMat a = Complex(0.0, -t) * h;
    int squarings = 0;
    double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    while (norm > 0.5) {
        norm /= 2;
        ++squarings;
    }
    a /= std::pow(2.0, squarings);
    CMat term = CMat::Identity(h.rows(), h.cols());
    CMat sum = term;
    for (int k = 1; k < 30; ++k) {
        term = term * a / static_cast<double>(k);
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) {
        sum = sum * sum;
    }
    return sum;
}

CVec two_copy_interleaved(const CVec &a, const CVec &b, std::size_t n) {
    std::size_t total = 2 * n;
    CVec copy_major(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        for (Eigen::Index j = 0; j < b.size(); ++j) {
            copy_major(i * b.size() + j) = a(i) * b(j);
        }
    }
    // Copy-major qubit k is I_k for k < n and II_{k-n} otherwise; its
    // interleaved position is 2k or 2(k-n)+1.
    std::vector<std::size_t> target(total);
    for (std::size_t k = 0; k < total; ++k) {
        target[k] = k < n ? 2 * k : 2 * (k - n) + 1;
    }
    CVec out = CVec::Zero(copy_major.size());
    for (Eigen::Index idx = 0; idx < copy_major.size(); ++idx) {
        std::size_t dst = 0;
        for (std::size_t k = 0; k < total; ++k) {
            dst |= bit_of(static_cast<std::size_t>(idx), total, k) << (total - 1 - target[k]);
        }
        out(static_cast<Eigen::Index>(dst)) = copy_major(idx);
    }
    return out;
}

CMat kron_power(const CMat &gate, std::size_t n) {
    CMat out = CMat::Identity(1, 1);
    for (std::size_t k = 0; k < n; ++k) {
        CMat next(out.rows() * gate.rows(), out.cols() * gate.cols());
        for (Eigen::Index i = 0; i < out.rows(); ++i) {
            for (Eigen::Index j = 0; j < out.cols(); ++j) {
                next.block(i * gate.rows(), j * gate.cols(), gate.rows(), gate.cols()) = out(i, j) * gate;
            }
        }
        out = next;
    }
    return out;
}

double no_flag_probability(const CVec &two_copy, std::size_t n) {
    double p = 0.0;
    for (Eigen::Index idx = 0; idx < two_copy.size(); ++idx) {
        bool flagged = false;
        for (std::size_t site = 0; site < n; ++site) {
            std::size_t copy_one = bit_of(static_cast<std::size_t>(idx), 2 * n, 2 * site);
            std::size_t copy_two = bit_of(static_cast<std::size_t>(idx), 2 * n, 2 * site + 1);
            flagged = flagged || (copy_one == 1 && copy_two == 0);
        }
        if (!flagged) {
            p += std::norm(two_copy(idx));
        }
    }
    return p;
}

}  // namespace wre_test
