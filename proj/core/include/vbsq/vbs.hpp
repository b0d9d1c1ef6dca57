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

// Valence-bond-solid picture of graph states.
//
// Every edge carries a bond |H> = (|00> + |01> + |10> - |11>) / 2 between two
// virtual qubits; every site owns one virtual qubit per incident edge and maps
// them to one physical qubit with P_n = |0~><0...0| + |1~><1...1|.

#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "vbsq/graph.hpp"
#include "vbsq/statevec.hpp"

namespace vbsq {

/// P_n as a 2 x 2^n matrix. Row 0 is <0...0|, row 1 is <1...1|.
struct Projector {
    std::size_t arity;
    Eigen::MatrixXcd matrix;
};

/// Throws InvalidArity for n = 0.
Projector projector(std::size_t n);

/// Normalization of the absorption identities:
/// P_n (1^{(n-1)} (x) |+>) = kAbsorbScale * P_{n-1} and
/// P_n (1^{(n-1)} (x) |->) = kAbsorbScale * sigma_z P_{n-1}.
inline constexpr double kAbsorbScale = kInvSqrt2;

/// P_n (1^{(n-1)} (x) |ket>) computed as an explicit matrix product. The ket
/// is attached to the last Kronecker factor.
Eigen::MatrixXcd attach_virtual(const Projector &p, const Ket &ket);

/// Projector left after a |+> replaces one virtual qubit. Throws CannotAbsorb
/// for arity 1.
Projector absorb_plus(const Projector &p);

struct MinusAbsorption {
    bool sigma_z;  // a sigma_z acts on the physical output
    Projector projector;
};

/// Projector left after a |-> replaces one virtual qubit, with its sigma_z
/// byproduct. Throws CannotAbsorb for arity 1.
MinusAbsorption absorb_minus(const Projector &p);

/// Normalized bond |H> = CZ |++>.
StateVector bond_state();
/// (|01> - |10>) / sqrt(2).
StateVector singlet_state();

/// Virtual-qubit bookkeeping for a graph.
struct VbsSpec {
    Graph graph;
    /// Virtual qubits per site: the degree, or 1 for an isolated vertex.
    std::vector<std::size_t> site_arity;
    /// For edge k = graph.edges()[k] = (u, v): (slot at u, slot at v).
    std::vector<std::pair<std::size_t, std::size_t>> edge_slots;
    /// First virtual-qubit index of each site; virtual index = offset + slot.
    std::vector<std::size_t> site_offset;

    std::size_t num_virtual() const;
    std::size_t virtual_index(Vertex v, std::size_t slot) const { return site_offset.at(v) + slot; }
};

/// Slots are assigned per site in ascending order of the other endpoint.
VbsSpec make_vbs_spec(const Graph &g);
/// Degree sum, slot bijection and offset consistency.
bool is_valid(const VbsSpec &spec);

/// Distributes the bonds and projects every site, one bond at a time: a site's
/// virtual qubits are folded into its physical qubit as each bond arrives,
/// using P_k = P_2 (P_{k-1} (x) 1). An isolated site holds one virtual qubit in
/// |+>. Live qubits never exceed n + 2; throws TooLarge when that exceeds `cap`.
StateVector materialize(const VbsSpec &spec, std::size_t cap = kDenseQubitCap);

/// Literal construction: the full tensor product of all bonds over every
/// virtual qubit, then each site's P_n applied to its slots. Throws TooLarge
/// when the virtual register exceeds `cap`.
StateVector materialize_direct(const VbsSpec &spec, std::size_t cap = kDenseQubitCap);

struct SiteMeasurement {
    double probability;
    StateVector state;  // the measured site removed; later sites shift down
};

/// Projects physical site `site` onto |outcome~> and removes it.
/// Throws ZeroProbabilityBranch for an impossible outcome.
SiteMeasurement z_measure_site(const StateVector &state, std::size_t site, int outcome);

/// sigma . sigma + 3 * identity on two qubits (Pauli vector, not spin-1/2).
Eigen::Matrix4d edge_hamiltonian();

inline constexpr std::size_t kToyModelMaxVirtual = 12;

struct ToyModelReport {
    std::size_t virtual_qubits = 0;
    std::vector<double> edge_spectrum;    // ascending
    double edge_kernel_singlet_fidelity = 0;
    double singlet_product_energy = 0;    // <psi|H|psi> of the singlet product
    double ground_energy = 0;
    double first_excited_energy = 0;      // next eigenvalue above the ground state
    bool unique_ground_state = false;
    double ground_singlet_fidelity = 0;   // |<ground|singlet product>|^2
    bool passed = false;
};

/// Each site carries one qubit per incident edge; every edge applies
/// edge_hamiltonian() to its two slots. Checks the edge term, the energy of
/// the singlet product, and that exact diagonalization finds a unique
/// zero-energy ground state equal to it. Throws TooLarge above
/// kToyModelMaxVirtual virtual qubits and InvalidDimension for a patch with
/// an isolated vertex or no edges.
ToyModelReport toy_model_check(const Graph &patch);

/// Singlet product on the virtual register of `spec` (slot u first per edge).
StateVector singlet_product(const VbsSpec &spec);

/// Matrix-free application of the patch Hamiltonian to a real vector.
std::vector<double> apply_patch_hamiltonian(const VbsSpec &spec, const std::vector<double> &v);

}  // namespace vbsq
