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

// Stabilizer-state simulation over GF(2).
//
// A Tableau is defined by its n commuting, independent generators. A matching
// set of destabilizers is kept alongside (each destabilizer anticommutes with
// exactly its own generator) so that Pauli measurements run in O(n^2 / 64);
// they are an implementation detail and never compared.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vbsq/graph.hpp"
#include "vbsq/pauli.hpp"
#include "vbsq/statevec.hpp"

namespace vbsq {

enum class CliffordGate { H, S, Sdg, X, Y, Z, CZ, CNOT };

/// Number of target qubits a gate takes (1 or 2).
std::size_t gate_arity(CliffordGate g);
/// The 2x2 matrix of a single-qubit Clifford gate.
Mat2 gate_matrix(CliffordGate g);

class Tableau {
   public:
    /// |0>^n.
    explicit Tableau(std::size_t n = 0);

    /// Builds the tableau stabilized by `generators`. Throws BadPhase for a
    /// non-Hermitian generator and InvalidTableau unless there are exactly n
    /// pairwise commuting, independent generators on n qubits.
    static Tableau from_generators(std::vector<PauliString> generators);

    std::size_t num_qubits() const noexcept { return n_; }
    const PauliString &generator(std::size_t i) const { return stab_.at(i); }
    const std::vector<PauliString> &generators() const noexcept { return stab_; }
    bool x(std::size_t row, std::size_t q) const { return stab_.at(row).x(q); }
    bool z(std::size_t row, std::size_t q) const { return stab_.at(row).z(q); }
    int sign(std::size_t row) const { return stab_.at(row).sign(); }

    void apply(CliffordGate gate, std::span<const std::size_t> targets);
    void apply(CliffordGate gate, std::size_t q);
    void apply(CliffordGate gate, std::size_t a, std::size_t b);

    struct Outcome {
        int bit;             // eigenvalue (-1)^bit of the measured operator
        bool deterministic;  // true when the state was already an eigenstate
    };

    /// Measures the Hermitian Pauli `p` (sign included) and collapses the state.
    /// The source forces a bit (0 or 1) or draws one from the generator.
    /// Throws BadPhase for an imaginary phase, BadForcedOutcomes for a forced
    /// value other than 0/1, ZeroProbabilityBranch when a deterministic
    /// outcome contradicts the forced one.
    Outcome measure(const PauliString &p, OutcomeSource source);

    /// Commutation and independence of the generators, and the destabilizer pairing.
    bool is_valid() const;

    /// Generator-by-generator equality, signs included. Use canonical_form for state equality.
    bool operator==(const Tableau &other) const { return stab_ == other.stab_; }

   private:
    void check_qubit(std::size_t q) const;

    std::size_t n_;
    std::vector<PauliString> destab_;
    std::vector<PauliString> stab_;
};

/// Generator a = X_a prod_{b ~ a} Z_b, sign +1, for each vertex a.
Tableau tableau_graph_state(const Graph &g);

/// Conjugates every generator by `gate` on `targets`.
Tableau apply_clifford(Tableau t, CliffordGate gate, std::span<const std::size_t> targets);

struct PauliMeasurement {
    int bit;
    bool deterministic;
    Tableau tableau;
};

PauliMeasurement measure_pauli(Tableau t, const PauliString &p, OutcomeSource source);

/// Reduced row-echelon form of the generator matrix over GF(2), columns ordered
/// X_0..X_{n-1} then Z_0..Z_{n-1}. Two tableaux describe the same state iff
/// their canonical forms are equal, signs included.
Tableau canonical_form(const Tableau &t);
bool same_state(const Tableau &a, const Tableau &b);

/// Entanglement entropy (bits) of region A: rank of the generators restricted
/// to A, minus |A|. For a graph state this is rank_GF(2) of Gamma[A, not A].
/// Throws InvalidSubset unless A is nonempty, proper and repetition-free.
std::size_t entropy_of_region(const Tableau &t, std::span<const std::size_t> region);

/// Stabilizer state on `qubits` (in the given order), provided the state is a
/// product between `qubits` and the rest. Throws InvalidSubset otherwise.
Tableau restrict_to(const Tableau &t, std::span<const std::size_t> qubits);

/// Dense amplitudes of a stabilizer state (n <= kDenseQubitCap), obtained by
/// projecting a fixed generic reference vector onto the +1 eigenspace of
/// every generator.
StateVector to_state_vector(const Tableau &t);

/// p |s> for a Pauli string on all qubits of s (phase included).
StateVector apply_pauli(const StateVector &s, const PauliString &p);

enum class PauliBasis { X, Y, Z };

struct PauliMeasureCommand {
    Vertex vertex;
    PauliBasis basis;
    friend bool operator==(const PauliMeasureCommand &, const PauliMeasureCommand &) = default;
};

/// Local Pauli measurements that leave a maximally entangled pair on {a, b}:
/// X on the interior vertices of `path`, Z on every vertex off the path.
/// Throws NoPath unless `path` is a simple path a -> b along edges of g.
std::vector<PauliMeasureCommand> extract_bell_pattern(const Graph &g, Vertex a, Vertex b,
                                                      std::span<const Vertex> path);

/// Executes single-qubit Pauli measurements in order.
Tableau run_pauli_measurements(Tableau t, std::span<const PauliMeasureCommand> commands, Rng &rng);

/// Graph form of a stabilizer state: state = (prod_q C_q) graph_state(graph),
/// where local[q] lists single-qubit gates applied to qubit q in order.
struct GraphForm {
    Graph graph;
    std::vector<std::vector<CliffordGate>> local;
};

GraphForm tableau_to_graph(const Tableau &t);
/// Tableau of (prod_q C_q) |graph>.
Tableau graph_form_tableau(const GraphForm &form);

}  // namespace vbsq
