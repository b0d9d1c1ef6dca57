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

// Gates by teleportation through |H> bonds, and Pauli-frame bookkeeping.
//
// Wires are qubit indices of the threaded StateVector. A frame entry (x, z)
// on a wire means the physical qubit holds X^x Z^z |logical>, up to phase.

#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "vbsq/linalg.hpp"
#include "vbsq/statevec.hpp"

namespace vbsq {

struct ByproductFrame {
    std::vector<PauliBits> wires;

    ByproductFrame() = default;
    explicit ByproductFrame(std::size_t n) : wires(n) {}
    bool is_identity() const;
    friend bool operator==(const ByproductFrame &, const ByproductFrame &) = default;
};

/// The kets (U^dagger sigma_alpha (x) 1)|H> / 2 for alpha = 0..3. The operator
/// factor acts on ket qubit 0. Throws NotUnitary.
std::vector<Ket> bell_basis_for(const Mat2 &u);

struct TeleportResult {
    StateVector state;
    std::size_t alpha;
    ByproductFrame frame;
};

/// Teleports `wire` through a fresh bond while applying U. The Bell
/// measurement basis is bell_basis_for(U F) where F is the frame Pauli already
/// on the wire, so the output carries sigma_alpha U |logical> whatever F was
/// and the wire's frame entry becomes alpha. The output qubit takes the
/// wire's index. A forced outcome is alpha itself.
TeleportResult teleport_1q(const StateVector &s, std::size_t wire, const Mat2 &u, OutcomeSource source,
                           const ByproductFrame &frame);
/// Same, starting from an empty frame.
TeleportResult teleport_1q(const StateVector &s, std::size_t wire, const Mat2 &u, OutcomeSource source);

/// GHZ-type basis index k = 4 i + 2 j + s: the ket
/// (X^i (x) X^j (x) 1)(|000> + (-1)^s |111>) / sqrt(2), X^i on ket qubit 0.
/// Both measurements use the same basis, so the two lists are identical.
std::array<std::vector<Ket>, 2> ghz_bases();

/// How the three bonds of the two-qubit gate are joined. Bonds are
/// (a1, a2), (b1, b2), (c1, c2); the first measurement acts on
/// (wire1, a1, b1), the second on (wire2, b2, c1); a2 and c2 carry the outputs.
struct PhaseGateWiring {
    // Qubit roles by position within each measured triple and output pair,
    // as indices into {wire1, wire2, a1, a2, b1, b2, c1, c2} = 0..7.
    std::array<std::size_t, 3> first;
    std::array<std::size_t, 3> second;
    std::array<std::size_t, 2> outputs;
    // Bonds as pairs of role indices.
    std::array<std::pair<std::size_t, std::size_t>, 3> bonds;

    friend bool operator==(const PhaseGateWiring &, const PhaseGateWiring &) = default;
};

/// The wiring used by teleport_phase_gate.
PhaseGateWiring phase_gate_wiring();

using PairOutcomeSource = std::variant<std::pair<std::size_t, std::size_t>, std::reference_wrapper<Rng>>;

struct PhaseGateResult {
    StateVector state;
    std::pair<std::size_t, std::size_t> outcomes;
    ByproductFrame frame;
};

/// Runs the two GHZ-type measurements of a given wiring and returns the
/// surviving pair moved to (wire1, wire2). The frame is left untouched.
PhaseGateResult run_phase_wiring(const StateVector &s, std::size_t wire1, std::size_t wire2,
                                 const PhaseGateWiring &wiring, PairOutcomeSource source);

/// Pauli on (wire1, wire2) left by outcomes (k1, k2) of the frozen wiring.
std::array<PauliBits, 2> phase_gate_byproduct(std::size_t k1, std::size_t k2);

/// Applies (H (x) H) U_ph to (wire1, wire2) by three bonds and two 3-qubit
/// measurements. The incoming frame on the two wires is pushed through the
/// gate and combined with the measured byproduct.
PhaseGateResult teleport_phase_gate(const StateVector &s, std::size_t wire1, std::size_t wire2,
                                    PairOutcomeSource source, const ByproductFrame &frame);
PhaseGateResult teleport_phase_gate(const StateVector &s, std::size_t wire1, std::size_t wire2,
                                    PairOutcomeSource source);

/// Frame after a single-qubit gate U on `wire`: U F = F' U up to phase.
/// Throws CannotPush when U is not Clifford, QubitOutOfRange for a bad wire.
ByproductFrame push_pauli(const ByproductFrame &frame, const Mat2 &u, std::size_t wire);
/// Frame after CZ on (a, b): an x bit on one wire toggles z on the other.
ByproductFrame push_pauli_cz(const ByproductFrame &frame, std::size_t a, std::size_t b);

}  // namespace vbsq
