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

#include "vbsq/teleport.hpp"

#include <algorithm>
#include <string>

#include "vbsq/error.hpp"

namespace vbsq {

namespace {

void check_wire(const ByproductFrame &frame, std::size_t wire) {
    if (wire >= frame.wires.size()) {
        throw Error(ErrorCode::QubitOutOfRange, "wire " + std::to_string(wire) + " outside the frame");
    }
}

void check_wiring(const PhaseGateWiring &w) {
    std::array<int, 8> seen{};
    for (auto r : w.first) ++seen.at(r);
    for (auto r : w.second) ++seen.at(r);
    for (auto r : w.outputs) ++seen.at(r);
    std::array<int, 8> bonded{};
    for (auto [p, q] : w.bonds) {
        ++bonded.at(p);
        ++bonded.at(q);
    }
    for (std::size_t r = 0; r < 8; ++r) {
        const bool ok = seen[r] == 1 && bonded[r] == (r < 2 ? 0 : 1);
        if (!ok) throw Error(ErrorCode::InvalidDimension, "phase-gate wiring must use every role exactly once");
    }
}

}  // namespace

bool ByproductFrame::is_identity() const {
    return std::all_of(wires.begin(), wires.end(), [](PauliBits p) { return !p.x && !p.z; });
}

std::vector<Ket> bell_basis_for(const Mat2 &u) {
    if (!is_unitary(u)) throw Error(ErrorCode::NotUnitary, "bell_basis_for needs a unitary");
    const double h[4] = {0.5, 0.5, 0.5, -0.5};  // index b0 | b1 << 1
    std::vector<Ket> basis;
    for (int alpha = 0; alpha < 4; ++alpha) {
        const Mat2 m = dagger(u) * gates::pauli(alpha);
        Ket ket(4, Complex{0, 0});
        for (int b0 = 0; b0 < 2; ++b0) {
            for (int b1 = 0; b1 < 2; ++b1) {
                for (int k = 0; k < 2; ++k) ket[b0 | (b1 << 1)] += m(b0, k) * h[k | (b1 << 1)];
            }
        }
        basis.push_back(std::move(ket));
    }
    return basis;
}

TeleportResult teleport_1q(const StateVector &s, std::size_t wire, const Mat2 &u, OutcomeSource source,
                           const ByproductFrame &frame) {
    const std::size_t n = s.num_qubits();
    if (wire >= n) throw Error(ErrorCode::QubitOutOfRange, "wire " + std::to_string(wire) + " out of range");
    if (frame.wires.size() != n) throw Error(ErrorCode::DimensionMismatch, "frame size differs from the register");
    if (!is_unitary(u)) throw Error(ErrorCode::NotUnitary, "teleport_1q needs a unitary");
    if (n + 2 > kMaxDenseQubits) throw Error(ErrorCode::TooLarge, "no room for the teleportation bond");

    // The physical wire holds F|psi>; measuring for U F leaves sigma_alpha U |psi>.
    const Mat2 effective = u * pauli_matrix(frame.wires[wire]);
    const auto basis = bell_basis_for(effective);
    StateVector work = s;
    StateVector bond = plus_state(2);
    bond.apply_cz(0, 1);
    work.append(bond);
    const std::size_t qs[2] = {wire, n};
    Measurement m = measure_and_discard(work, qs, basis, source);
    m.state.move_qubit(n - 1, wire);

    ByproductFrame out = frame;
    out.wires[wire] = pauli_bits(static_cast<int>(m.outcome));
    return {std::move(m.state), m.outcome, std::move(out)};
}

TeleportResult teleport_1q(const StateVector &s, std::size_t wire, const Mat2 &u, OutcomeSource source) {
    return teleport_1q(s, wire, u, source, ByproductFrame(s.num_qubits()));
}

std::array<std::vector<Ket>, 2> ghz_bases() {
    std::vector<Ket> basis;
    for (std::size_t k = 0; k < 8; ++k) {
        const std::size_t i = (k >> 2) & 1, j = (k >> 1) & 1, sgn = k & 1;
        Ket ket(8, Complex{0, 0});
        const std::size_t flip = i | (j << 1);
        ket[0 ^ flip] = kInvSqrt2;
        ket[7 ^ flip] = sgn ? -kInvSqrt2 : kInvSqrt2;
        basis.push_back(std::move(ket));
    }
    return {basis, basis};
}

PhaseGateWiring phase_gate_wiring() {
    // Roles: 0 wire1, 1 wire2, 2 a1, 3 a2, 4 b1, 5 b2, 6 c1, 7 c2.
    return {{0, 2, 4}, {1, 5, 6}, {3, 7}, {{{2, 3}, {4, 5}, {6, 7}}}};
}

PhaseGateResult run_phase_wiring(const StateVector &s, std::size_t wire1, std::size_t wire2,
                                 const PhaseGateWiring &wiring, PairOutcomeSource source) {
    const std::size_t n = s.num_qubits();
    if (wire1 >= n || wire2 >= n) throw Error(ErrorCode::QubitOutOfRange, "phase-gate wire out of range");
    if (wire1 == wire2) throw Error(ErrorCode::QubitOutOfRange, "phase-gate wires must differ");
    if (n + 6 > kMaxDenseQubits) throw Error(ErrorCode::TooLarge, "no room for the phase-gate bonds");
    check_wiring(wiring);

    auto physical = [&](std::size_t role) { return role == 0 ? wire1 : role == 1 ? wire2 : n + role - 2; };
    StateVector work = s;
    StateVector ancilla = plus_state(6);
    for (auto [p, q] : wiring.bonds) ancilla.apply_cz(p - 2, q - 2);
    work.append(ancilla);

    const auto bases = ghz_bases();
    std::array<std::size_t, 3> q1{}, q2{};
    for (std::size_t k = 0; k < 3; ++k) {
        q1[k] = physical(wiring.first[k]);
        q2[k] = physical(wiring.second[k]);
    }
    OutcomeSource src1 = std::size_t{0}, src2 = std::size_t{0};
    if (const auto *forced = std::get_if<std::pair<std::size_t, std::size_t>>(&source)) {
        src1 = forced->first;
        src2 = forced->second;
    } else {
        src1 = src2 = std::get<std::reference_wrapper<Rng>>(source);
    }
    Measurement m1 = measure_in_basis(work, q1, bases[0], src1);
    Measurement m2 = measure_in_basis(m1.state, q2, bases[1], src2);

    // Remove the six measured qubits; they are in a known product state.
    std::vector<std::size_t> measured(q1.begin(), q1.end());
    measured.insert(measured.end(), q2.begin(), q2.end());
    Ket bra(64, Complex{0, 0});
    for (std::size_t a = 0; a < 8; ++a) {
        for (std::size_t b = 0; b < 8; ++b) bra[a | (b << 3)] = bases[0][m1.outcome][a] * bases[1][m2.outcome][b];
    }
    Measurement rest = project_out(m2.state, measured, bra);

    // Survivors: the other original qubits, then the two outputs by ascending index.
    StateVector out = std::move(rest.state);
    const std::size_t o1 = physical(wiring.outputs[0]), o2 = physical(wiring.outputs[1]);
    std::size_t pos1 = o1 < o2 ? n - 2 : n - 1;
    std::size_t pos2 = o1 < o2 ? n - 1 : n - 2;
    if (wire1 < wire2) {
        out.move_qubit(pos1, wire1);
        if (pos2 < pos1) ++pos2;
        out.move_qubit(pos2, wire2);
    } else {
        out.move_qubit(pos2, wire2);
        if (pos1 < pos2) ++pos1;
        out.move_qubit(pos1, wire1);
    }
    return {std::move(out), {m1.outcome, m2.outcome}, ByproductFrame(n)};
}

std::array<PauliBits, 2> phase_gate_byproduct(std::size_t k1, std::size_t k2) {
    const bool i1 = (k1 >> 2) & 1, j1 = (k1 >> 1) & 1, s1 = k1 & 1;
    const bool i2 = (k2 >> 2) & 1, j2 = (k2 >> 1) & 1, s2 = k2 & 1;
    return {PauliBits{static_cast<bool>(s1 ^ j2 ^ i2), static_cast<bool>(i1 ^ j1)},
            PauliBits{static_cast<bool>(s2 ^ i1), i2}};
}

PhaseGateResult teleport_phase_gate(const StateVector &s, std::size_t wire1, std::size_t wire2,
                                    PairOutcomeSource source, const ByproductFrame &frame) {
    if (frame.wires.size() != s.num_qubits()) {
        throw Error(ErrorCode::DimensionMismatch, "frame size differs from the register");
    }
    PhaseGateResult r = run_phase_wiring(s, wire1, wire2, phase_gate_wiring(), source);
    ByproductFrame pushed = push_pauli_cz(frame, wire1, wire2);
    pushed = push_pauli(pushed, gates::hadamard(), wire1);
    pushed = push_pauli(pushed, gates::hadamard(), wire2);
    const auto byproduct = phase_gate_byproduct(r.outcomes.first, r.outcomes.second);
    pushed.wires[wire1] ^= byproduct[0];
    pushed.wires[wire2] ^= byproduct[1];
    r.frame = std::move(pushed);
    return r;
}

PhaseGateResult teleport_phase_gate(const StateVector &s, std::size_t wire1, std::size_t wire2,
                                    PairOutcomeSource source) {
    return teleport_phase_gate(s, wire1, wire2, source, ByproductFrame(s.num_qubits()));
}

ByproductFrame push_pauli(const ByproductFrame &frame, const Mat2 &u, std::size_t wire) {
    check_wire(frame, wire);
    if (!is_unitary(u)) throw Error(ErrorCode::NotUnitary, "push_pauli needs a unitary");
    const auto images = clifford_images(u);
    if (!images) throw Error(ErrorCode::CannotPush, "gate is not Clifford; adapt the next measurement instead");
    ByproductFrame out = frame;
    const PauliBits p = frame.wires[wire];
    PauliBits q;
    if (p.x) q ^= (*images)[0];
    if (p.z) q ^= (*images)[1];
    out.wires[wire] = q;
    return out;
}

ByproductFrame push_pauli_cz(const ByproductFrame &frame, std::size_t a, std::size_t b) {
    check_wire(frame, a);
    check_wire(frame, b);
    if (a == b) throw Error(ErrorCode::QubitOutOfRange, "CZ needs two distinct wires");
    ByproductFrame out = frame;
    out.wires[b].z ^= frame.wires[a].x;
    out.wires[a].z ^= frame.wires[b].x;
    return out;
}

}  // namespace vbsq
