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

#include "vbsq/circuit.hpp"

#include <algorithm>
#include <optional>

#include "text_util.hpp"
#include "vbsq/error.hpp"

namespace vbsq {

Circuit::Circuit(std::size_t wires) : wires_(wires) {
    if (wires == 0) throw Error(ErrorCode::InvalidCircuit, "a circuit needs at least one wire");
}

Circuit &Circuit::add_1q(std::size_t wire, const Mat2 &u) {
    if (wire >= wires_) throw Error(ErrorCode::QubitOutOfRange, "wire " + std::to_string(wire) + " out of range");
    if (!is_unitary(u)) throw Error(ErrorCode::NotUnitary, "gate on wire " + std::to_string(wire) + " is not unitary");
    gates_.push_back({Gate::Kind::OneQubit, wire, wire, u});
    return *this;
}

Circuit &Circuit::add_cz(std::size_t a, std::size_t b) {
    if (a >= wires_ || b >= wires_) {
        throw Error(ErrorCode::QubitOutOfRange, "cz wires " + std::to_string(a) + ", " + std::to_string(b) +
                                                    " out of range");
    }
    if (a + 1 != b && b + 1 != a) throw Error(ErrorCode::InvalidCircuit, "cz only acts on neighboring wires");
    gates_.push_back({Gate::Kind::CZ, a, b, gates::identity()});
    return *this;
}

Circuit parse_circuit(std::string_view text) {
    using detail::parse_fail;
    auto lines = detail::tokenize_lines(text);
    if (lines.empty()) parse_fail(1, "empty circuit; expected 'wires <n>'");
    if (lines[0].tokens[0] != "wires") parse_fail(lines[0].number, "first statement must be 'wires <n>'");
    detail::expect_arity(lines[0], 2);
    const std::size_t wires = detail::parse_index(lines[0].tokens[1], lines[0].number);
    if (wires == 0) throw Error(ErrorCode::InvalidCircuit, "line " + std::to_string(lines[0].number) +
                                                               ": a circuit needs at least one wire",
                                lines[0].number);
    Circuit c(wires);

    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto &line = lines[k];
        const std::string_view op = line.tokens[0];
        std::optional<Mat2> fixed;
        if (op == "h") fixed = gates::hadamard();
        else if (op == "x") fixed = gates::pauli_x();
        else if (op == "y") fixed = gates::pauli_y();
        else if (op == "z") fixed = gates::pauli_z();
        else if (op == "s") fixed = gates::phase_s();

        try {
            if (fixed) {
                detail::expect_arity(line, 2);
                c.add_1q(detail::parse_index(line.tokens[1], line.number), *fixed);
            } else if (op == "rz" || op == "rx") {
                detail::expect_arity(line, 3);
                const std::size_t w = detail::parse_index(line.tokens[1], line.number);
                const double angle = detail::parse_real(line.tokens[2], line.number);
                c.add_1q(w, op == "rz" ? gates::rz(angle) : gates::rx(angle));
            } else if (op == "u") {
                detail::expect_arity(line, 10);
                const std::size_t w = detail::parse_index(line.tokens[1], line.number);
                Mat2 u;
                for (int e = 0; e < 4; ++e) {
                    u.m[static_cast<std::size_t>(e)] = {detail::parse_real(line.tokens[2 + 2 * e], line.number),
                                                        detail::parse_real(line.tokens[3 + 2 * e], line.number)};
                }
                c.add_1q(w, u);
            } else if (op == "cz") {
                detail::expect_arity(line, 3);
                c.add_cz(detail::parse_index(line.tokens[1], line.number),
                         detail::parse_index(line.tokens[2], line.number));
            } else if (op == "wires") {
                parse_fail(line.number, "'wires' may appear only once");
            } else {
                parse_fail(line.number, "unknown gate '" + std::string(op) + "'");
            }
        } catch (const Error &e) {
            if (e.code() == ErrorCode::ParseError) throw;
            throw Error(ErrorCode::InvalidCircuit, "line " + std::to_string(line.number) + ": " + e.what(),
                        line.number);
        }
    }
    return c;
}

StateVector simulate(const Circuit &c, const StateVector &input) {
    if (input.num_qubits() != c.num_wires()) {
        throw Error(ErrorCode::DimensionMismatch, "input state does not match the circuit width");
    }
    StateVector s = input;
    for (const Gate &g : c.gates()) {
        if (g.kind == Gate::Kind::OneQubit) s.apply_1q(g.u, g.a);
        else s.apply_cz(g.a, g.b);
    }
    return s;
}

bool is_clifford(const Circuit &c) {
    return std::all_of(c.gates().begin(), c.gates().end(), [](const Gate &g) {
        return g.kind == Gate::Kind::CZ || clifford_images(g.u).has_value();
    });
}

}  // namespace vbsq
