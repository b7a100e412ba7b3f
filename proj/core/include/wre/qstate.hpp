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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "wre/config.hpp"
#include "wre/sampling.hpp"

namespace wre {

using Complex = std::complex<double>;

/// Tolerance on |<psi|psi> - 1| accepted at construction.
inline constexpr double kNormTolerance = 1e-10;
/// Tolerance on max |u^dagger u - 1| accepted for single-qubit unitaries.
inline constexpr double kUnitaryTolerance = 1e-12;

/// Index convention used everywhere: qubit 0 (the first qubit) is the most
/// significant bit of a basis index, bit value 0 is |up> and 1 is |down>.
constexpr std::size_t index_bit(std::size_t n_qubits, std::size_t qubit) { return n_qubits - 1 - qubit; }

/// Normalized N-qubit pure state. Immutable once constructed.
class PureState {
   public:
    /// Validates length 2^n and unit norm; does not renormalize.
    static PureState from_amplitudes(std::size_t n_qubits, std::vector<Complex> amplitudes);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }

   private:
    PureState(std::size_t n, std::vector<Complex> a) : n_qubits_(n), amplitudes_(std::move(a)) {}

    std::size_t n_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite 2^N x 2^N matrix.
///
/// n_qubits may be 0 for the 1x1 reduced state of an empty subsystem.
class DensityMatrix {
   public:
    /// Validates dimensions, hermiticity, trace and positivity.
    static DensityMatrix from_matrix(Eigen::MatrixXcd entries);
    /// Skips validation. For matrices produced by this library (outer
    /// products, partial traces) whose invariants hold by construction.
    static DensityMatrix from_trusted(std::size_t n_qubits, Eigen::MatrixXcd entries) {
        return DensityMatrix(n_qubits, std::move(entries));
    }

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    const Eigen::MatrixXcd &matrix() const { return entries_; }
    double purity() const;

   private:
    DensityMatrix(std::size_t n, Eigen::MatrixXcd m) : n_qubits_(n), entries_(std::move(m)) {}

    std::size_t n_qubits_;
    Eigen::MatrixXcd entries_;
};

class SingleQubitUnitary {
   public:
    static SingleQubitUnitary from_matrix(const Eigen::Matrix2cd &m);
    static SingleQubitUnitary identity() { return SingleQubitUnitary(Eigen::Matrix2cd::Identity()); }

    const Eigen::Matrix2cd &matrix() const { return m_; }
    /// Product this * other, i.e. `other` acts first.
    SingleQubitUnitary compose(const SingleQubitUnitary &other) const;

   private:
    explicit SingleQubitUnitary(const Eigen::Matrix2cd &m) : m_(m) {}
    Eigen::Matrix2cd m_;
};

/// Subsystem A of an N-qubit register. Bit q of `bits` set means qubit q is in A.
class SubsetMask {
   public:
    SubsetMask(std::size_t n_qubits, std::uint64_t bits);

    static SubsetMask empty(std::size_t n_qubits) { return {n_qubits, 0}; }
    static SubsetMask full(std::size_t n_qubits);

    std::size_t n_qubits() const { return n_qubits_; }
    std::uint64_t bits() const { return bits_; }
    std::size_t size() const;
    bool contains(std::size_t qubit) const { return (bits_ >> qubit) & 1u; }
    SubsetMask complement() const;
    /// Bits of basis-state indices that belong to A (index_bit convention).
    std::uint64_t index_mask() const;

   private:
    std::size_t n_qubits_;
    std::uint64_t bits_;
};

enum class NamedKind { ghz, w, pbell, basis, product };

/// Parses "ghz", "w", "pbell", "product"; throws InvalidArgument otherwise.
NamedKind parse_named_kind(std::string_view name);
const char *to_string(NamedKind kind);

/// (|0...0> + |1...1>)/sqrt(2).
PureState make_ghz(std::size_t n);
/// Equal superposition of the n single-flip states.
PureState make_w(std::size_t n);
/// Bell pairs (|00> + |11>)/sqrt(2) on qubits (0,1), (2,3), ...; n must be even.
PureState make_pbell(std::size_t n);
/// Computational basis state from a string of '0' (up) and '1' (down).
PureState make_basis(std::string_view bitstring);
/// |up ... up>.
PureState make_product(std::size_t n);

/// Dispatches to the constructors above. `bitstring` is used only for basis.
PureState make_named_state(NamedKind kind, std::size_t n, std::string_view bitstring = {});

/// Haar-random pure state: a normalized vector of i.i.d. standard complex
/// Gaussians, which has the same law as U|0...0> for Haar U.
PureState sample_haar_state(std::size_t n, Rng &rng);

/// (u_0 (x) u_1 (x) ... (x) u_{N-1}) |psi>.
PureState apply_local_unitaries(const PureState &psi, std::span<const SingleQubitUnitary> units);

/// Outer product |psi><psi|; throws ResourceLimit above caps.dense_qubits.
DensityMatrix to_density_matrix(const PureState &psi, const ResourceCaps &caps = {});

/// Convex mixture of pure states, the form used for two-copy sampling of
/// mixed inputs.
struct MixedEnsemble {
    std::vector<double> weights;
    std::vector<PureState> states;

    std::size_t n_qubits() const { return states.front().n_qubits(); }
};

/// Validates weights (non-negative, sum 1) and matching qubit counts.
MixedEnsemble make_ensemble(std::vector<double> weights, std::vector<PureState> states);
/// Spectral decomposition of rho, dropping eigenvalues below `cutoff`.
MixedEnsemble ensemble_from_density_matrix(const DensityMatrix &rho, double cutoff = 1e-12);
DensityMatrix to_density_matrix(const MixedEnsemble &ensemble, const ResourceCaps &caps = {});

}  // namespace wre
