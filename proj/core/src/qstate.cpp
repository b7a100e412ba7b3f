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

#include "wre/qstate.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "wre/errors.hpp"

namespace wre {

namespace {

constexpr std::size_t kMaxQubits = 30;

void require_positive_n(std::size_t n) {
    if (n == 0) {
        throw InvalidArgument("number of qubits must be at least 1");
    }
    if (n > kMaxQubits) {
        throw ResourceLimit(std::to_string(n) + " qubits exceeds the statevector limit of " +
                            std::to_string(kMaxQubits));
    }
}

double squared_norm(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto &a : v) {
        s += std::norm(a);
    }
    return s;
}

}  // namespace

PureState PureState::from_amplitudes(std::size_t n_qubits, std::vector<Complex> amplitudes) {
    require_positive_n(n_qubits);
    std::size_t dim = std::size_t{1} << n_qubits;
    if (amplitudes.size() != dim) {
        throw InvalidArgument("expected " + std::to_string(dim) + " amplitudes for " + std::to_string(n_qubits) +
                              " qubits, got " + std::to_string(amplitudes.size()));
    }
    for (const auto &a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw InvalidArgument("state has non-finite amplitudes");
        }
    }
    double norm2 = squared_norm(amplitudes);
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw InvalidArgument("state is not normalized: squared norm " + std::to_string(norm2));
    }
    return PureState(n_qubits, std::move(amplitudes));
}

DensityMatrix DensityMatrix::from_matrix(Eigen::MatrixXcd entries) {
    auto rows = static_cast<std::size_t>(entries.rows());
    if (rows == 0 || entries.rows() != entries.cols() || !std::has_single_bit(rows)) {
        throw InvalidArgument("density matrix must be square with a power-of-two dimension");
    }
    std::size_t n = static_cast<std::size_t>(std::countr_zero(rows));
    if (!entries.allFinite()) {
        throw InvalidArgument("density matrix has non-finite entries");
    }
    double herm = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-10) {
        throw InvalidArgument("density matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
    }
    Complex tr = entries.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > 1e-10) {
        throw InvalidArgument("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
    }
    Eigen::MatrixXcd hermitian_part = 0.5 * (entries + entries.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian_part, Eigen::EigenvaluesOnly);
    double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -1e-8) {
        throw InvalidArgument("density matrix is not positive semidefinite (eigenvalue " + std::to_string(min_eig) +
                              ")");
    }
    return DensityMatrix(n, std::move(entries));
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    return entries_.cwiseAbs2().sum();
}

SingleQubitUnitary SingleQubitUnitary::from_matrix(const Eigen::Matrix2cd &m) {
    if (!m.allFinite()) {
        throw InvalidArgument("unitary has non-finite entries");
    }
    double dev = (m.adjoint() * m - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
    if (dev > kUnitaryTolerance) {
        throw InvalidArgument("matrix is not unitary (deviation " + std::to_string(dev) + ")");
    }
    return SingleQubitUnitary(m);
}

SingleQubitUnitary SingleQubitUnitary::compose(const SingleQubitUnitary &other) const {
    return SingleQubitUnitary(m_ * other.m_);
}

SubsetMask::SubsetMask(std::size_t n_qubits, std::uint64_t bits) : n_qubits_(n_qubits), bits_(bits) {
    if (n_qubits > 63 || (bits >> n_qubits) != 0) {
        throw InvalidArgument("subset mask " + std::to_string(bits) + " is out of range for " +
                              std::to_string(n_qubits) + " qubits");
    }
}

SubsetMask SubsetMask::full(std::size_t n_qubits) { return {n_qubits, (std::uint64_t{1} << n_qubits) - 1}; }

std::size_t SubsetMask::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

SubsetMask SubsetMask::complement() const { return {n_qubits_, ~bits_ & ((std::uint64_t{1} << n_qubits_) - 1)}; }

std::uint64_t SubsetMask::index_mask() const {
    std::uint64_t out = 0;
    for (std::size_t q = 0; q < n_qubits_; ++q) {
        if (contains(q)) {
            out |= std::uint64_t{1} << index_bit(n_qubits_, q);
        }
    }
    return out;
}

NamedKind parse_named_kind(std::string_view name) {
    for (NamedKind k : {NamedKind::ghz, NamedKind::w, NamedKind::pbell, NamedKind::basis, NamedKind::product}) {
        if (name == to_string(k)) {
            return k;
        }
    }
    throw InvalidArgument("unknown state kind '" + std::string(name) + "'");
}

const char *to_string(NamedKind kind) {
    switch (kind) {
        case NamedKind::ghz:
            return "ghz";
        case NamedKind::w:
            return "w";
        case NamedKind::pbell:
            return "pbell";
        case NamedKind::basis:
            return "basis";
        case NamedKind::product:
            return "product";
    }
    return "unknown";
}

PureState make_ghz(std::size_t n) {
    require_positive_n(n);
    std::vector<Complex> a(std::size_t{1} << n);
    a.front() = M_SQRT1_2;
    a.back() = M_SQRT1_2;
    return PureState::from_amplitudes(n, std::move(a));
}

PureState make_w(std::size_t n) {
    require_positive_n(n);
    std::vector<Complex> a(std::size_t{1} << n);
    double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t q = 0; q < n; ++q) {
        a[std::size_t{1} << index_bit(n, q)] = amp;
    }
    return PureState::from_amplitudes(n, std::move(a));
}

PureState make_pbell(std::size_t n) {
    require_positive_n(n);
    if (n % 2 != 0) {
        throw InvalidArgument("pbell needs an even number of qubits, got " + std::to_string(n));
    }
    std::size_t pairs = n / 2;
    std::vector<Complex> a(std::size_t{1} << n);
    double amp = std::pow(M_SQRT1_2, static_cast<double>(pairs));
    // Each pair is either 00 or 11; choice bit k selects 11 on pair k.
    for (std::size_t choice = 0; choice < (std::size_t{1} << pairs); ++choice) {
        std::size_t index = 0;
        for (std::size_t k = 0; k < pairs; ++k) {
            if ((choice >> k) & 1u) {
                index |= std::size_t{1} << index_bit(n, 2 * k);
                index |= std::size_t{1} << index_bit(n, 2 * k + 1);
            }
        }
        a[index] = amp;
    }
    return PureState::from_amplitudes(n, std::move(a));
}

PureState make_basis(std::string_view bitstring) {
    std::size_t n = bitstring.size();
    require_positive_n(n);
    std::size_t index = 0;
    for (std::size_t q = 0; q < n; ++q) {
        char c = bitstring[q];
        if (c != '0' && c != '1') {
            throw InvalidArgument("malformed bitstring '" + std::string(bitstring) + "': expected only 0 and 1");
        }
        if (c == '1') {
            index |= std::size_t{1} << index_bit(n, q);
        }
    }
    std::vector<Complex> a(std::size_t{1} << n);
    a[index] = 1.0;
    return PureState::from_amplitudes(n, std::move(a));
}

PureState make_product(std::size_t n) {
    require_positive_n(n);
    std::vector<Complex> a(std::size_t{1} << n);
    a[0] = 1.0;
    return PureState::from_amplitudes(n, std::move(a));
}

PureState make_named_state(NamedKind kind, std::size_t n, std::string_view bitstring) {
    switch (kind) {
        case NamedKind::ghz:
            return make_ghz(n);
        case NamedKind::w:
            return make_w(n);
        case NamedKind::pbell:
            return make_pbell(n);
        case NamedKind::product:
            return make_product(n);
        case NamedKind::basis:
            if (bitstring.size() != n) {
                throw InvalidArgument("bitstring '" + std::string(bitstring) + "' does not have length " +
                                      std::to_string(n));
            }
            return make_basis(bitstring);
    }
    throw InvalidArgument("unknown state kind");
}

PureState sample_haar_state(std::size_t n, Rng &rng) {
    require_positive_n(n);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> a(std::size_t{1} << n);
    double norm2 = 0.0;
    for (auto &x : a) {
        double re = gauss(rng);
        double im = gauss(rng);
        x = {re, im};
        norm2 += re * re + im * im;
    }
    double scale = 1.0 / std::sqrt(norm2);
    for (auto &x : a) {
        x *= scale;
    }
    return PureState::from_amplitudes(n, std::move(a));
}

PureState apply_local_unitaries(const PureState &psi, std::span<const SingleQubitUnitary> units) {
    std::size_t n = psi.n_qubits();
    if (units.size() != n) {
        throw InvalidArgument("expected " + std::to_string(n) + " single-qubit unitaries, got " +
                              std::to_string(units.size()));
    }
    std::vector<Complex> a(psi.amplitudes().begin(), psi.amplitudes().end());
    std::size_t dim = a.size();
    for (std::size_t q = 0; q < n; ++q) {
        const Eigen::Matrix2cd &u = units[q].matrix();
        std::size_t stride = std::size_t{1} << index_bit(n, q);
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t i = base; i < base + stride; ++i) {
                Complex a0 = a[i];
                Complex a1 = a[i + stride];
                a[i] = u(0, 0) * a0 + u(0, 1) * a1;
                a[i + stride] = u(1, 0) * a0 + u(1, 1) * a1;
            }
        }
    }
    return PureState::from_amplitudes(n, std::move(a));
}

DensityMatrix to_density_matrix(const PureState &psi, const ResourceCaps &caps) {
    require_within_cap(psi.n_qubits(), caps.dense_qubits, "to_density_matrix");
    Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(), static_cast<Eigen::Index>(psi.dim()));
    return DensityMatrix::from_trusted(psi.n_qubits(), v * v.adjoint());
}

MixedEnsemble make_ensemble(std::vector<double> weights, std::vector<PureState> states) {
    if (weights.empty() || weights.size() != states.size()) {
        throw InvalidArgument("ensemble needs one weight per state and at least one state");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw InvalidArgument("ensemble weights must be finite and non-negative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > kNormTolerance) {
        throw InvalidArgument("ensemble weights sum to " + std::to_string(total) + ", expected 1");
    }
    for (const auto &s : states) {
        if (s.n_qubits() != states.front().n_qubits()) {
            throw InvalidArgument("ensemble states have different qubit counts");
        }
    }
    return MixedEnsemble{std::move(weights), std::move(states)};
}

MixedEnsemble ensemble_from_density_matrix(const DensityMatrix &rho, double cutoff) {
    if (rho.n_qubits() == 0) {
        throw InvalidArgument("cannot build an ensemble for a zero-qubit state");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix());
    std::vector<double> weights;
    std::vector<PureState> states;
    const auto &vals = solver.eigenvalues();
    double kept = 0.0;
    for (Eigen::Index k = 0; k < vals.size(); ++k) {
        if (vals[k] > cutoff) {
            kept += vals[k];
        }
    }
    for (Eigen::Index k = 0; k < vals.size(); ++k) {
        if (vals[k] <= cutoff) {
            continue;
        }
        Eigen::VectorXcd v = solver.eigenvectors().col(k);
        v.normalize();
        states.push_back(PureState::from_amplitudes(rho.n_qubits(), std::vector<Complex>(v.data(), v.data() + v.size())));
        weights.push_back(vals[k] / kept);
    }
    return make_ensemble(std::move(weights), std::move(states));
}

DensityMatrix to_density_matrix(const MixedEnsemble &ensemble, const ResourceCaps &caps) {
    std::size_t n = ensemble.n_qubits();
    require_within_cap(n, caps.dense_qubits, "to_density_matrix");
    auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t k = 0; k < ensemble.states.size(); ++k) {
        Eigen::Map<const Eigen::VectorXcd> v(ensemble.states[k].amplitudes().data(), dim);
        rho.noalias() += ensemble.weights[k] * (v * v.adjoint());
    }
    return DensityMatrix::from_trusted(n, std::move(rho));
}

}  // namespace wre
