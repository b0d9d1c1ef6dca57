// Copyright 2026 The vbsq Authors
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

// Dense state-vector simulation.
//
// Qubit i addresses bit i of the basis index (little-endian): in a two-qubit
// state the amplitude at index 1 belongs to |q1 q0> = |0 1>, i.e. qubit 0 set.
// Every multi-qubit ket passed to this module over a qubit list `qs` uses the
// same convention locally: bit j of the ket index belongs to qs[j].

#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "vbsq/graph.hpp"
#include "vbsq/linalg.hpp"

namespace vbsq {

/// Default cap on simultaneously live qubits for dense simulation.
inline constexpr std::size_t kDenseQubitCap = 20;
/// Hard allocation limit; no dense state is ever larger than this.
inline constexpr std::size_t kMaxDenseQubits = 24;

using Rng = std::mt19937_64;
/// Measurement outcome source: a forced outcome index, or a seeded generator.
using OutcomeSource = std::variant<std::size_t, std::reference_wrapper<Rng>>;

/// Uniform double in [0, 1) using the top 53 bits of one draw; identical on
/// every platform for a given generator state.
double uniform01(Rng &rng);

using Ket = std::vector<Complex>;

class StateVector {
   public:
    /// The zero-qubit state (a single amplitude 1).
    StateVector();

    /// Wraps raw amplitudes; normalizes them. Throws InvalidDimension when the
    /// length is not 2^n and DegenerateProjection for a zero vector.
    static StateVector from_amplitudes(std::size_t n, std::vector<Complex> amps);

    std::size_t num_qubits() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return amps_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    Complex amplitude(std::size_t index) const { return amps_.at(index); }
    double norm() const;

    /// U on qubit q. Throws NotUnitary (tol 1e-10) or QubitOutOfRange.
    void apply_1q(const Mat2 &u, std::size_t q);
    void apply_cz(std::size_t q1, std::size_t q2);
    void apply_cnot(std::size_t control, std::size_t target);

    /// Tensor `other` onto this state; its qubits take indices n..n+m-1.
    void append(const StateVector &other);
    /// Moves qubit `from` to position `to`, shifting the qubits in between.
    void move_qubit(std::size_t from, std::size_t to);

   private:
    StateVector(std::size_t n, std::vector<Complex> amps) : n_(n), amps_(std::move(amps)) {}
    void check_qubit(std::size_t q) const;

    std::size_t n_;
    std::vector<Complex> amps_;
};

/// |+>^n; throws InvalidDimension for n = 0.
StateVector plus_state(std::size_t n);
/// Computational basis ket; bits[i] is the value of qubit i.
StateVector basis_state(std::span<const int> bits);
StateVector basis_state(std::initializer_list<int> bits);
StateVector tensor(const StateVector &low, const StateVector &high);

/// |+>^n followed by one CZ per edge. Throws TooLarge when n > cap.
StateVector graph_state(const Graph &g, std::size_t cap = kDenseQubitCap);

struct Measurement {
    std::size_t outcome;
    double probability;
    StateVector state;
};

/// Forced outcomes with probability below this are rejected as impossible.
inline constexpr double kImpossibleBranch = 1e-12;

/// Projective measurement of qubits `qs` in an orthonormal basis of the
/// 2^|qs| dimensional subspace. The returned state keeps all qubits, with qs
/// collapsed onto the observed basis ket. Throws BadBasis when the kets are not
/// orthonormal and complete (tol 1e-10), ZeroProbabilityBranch for an
/// impossible forced outcome.
Measurement measure_in_basis(const StateVector &s, std::span<const std::size_t> qs, std::span<const Ket> basis,
                             OutcomeSource source);

/// As measure_in_basis, but the measured qubits are removed afterwards; the
/// surviving qubits keep their relative order.
Measurement measure_and_discard(const StateVector &s, std::span<const std::size_t> qs,
                                std::span<const Ket> basis, OutcomeSource source);

/// (<bra| on qs (x) 1) |s>, renormalized, plus the branch probability. Throws
/// ZeroProbabilityBranch when the projection is below kImpossibleBranch.
Measurement project_out(const StateVector &s, std::span<const std::size_t> qs, const Ket &bra);

/// |<a|b>|^2. Throws DimensionMismatch on differing qubit counts.
double fidelity_up_to_phase(const StateVector &a, const StateVector &b);
/// Entrywise comparison within tol.
bool equal_exact(const StateVector &a, const StateVector &b, double tol);

struct DensityMatrix {
    std::vector<std::size_t> qubits;  // bit j of a row/column index is qubits[j]
    Eigen::MatrixXcd rho;
};

/// Partial trace onto `subset`. Throws InvalidSubset for an empty, full, or
/// repeating subset.
DensityMatrix reduced_density(const StateVector &s, std::span<const std::size_t> subset);

/// Eigenvalues of a density matrix, clipped at 0, ascending.
std::vector<double> spectrum(const DensityMatrix &dm);

/// Von Neumann entropy in bits of the reduced state on `subset`. For a pure
/// state both sides of a bipartition share a spectrum, so the smaller side is
/// diagonalized.
double entropy_bits(const StateVector &s, std::span<const std::size_t> subset);

/// Applies the full 2^n x 2^n operator (little-endian indices) to the state.
StateVector apply_matrix(const StateVector &s, const Eigen::MatrixXcd &op);

}  // namespace vbsq
