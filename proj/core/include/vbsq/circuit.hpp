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

// Logical circuits of single-qubit unitaries and nearest-neighbor CZ gates.
//
// Text format, one statement per line, `#` starts a comment:
//
//     wires 2
//     h 0            # also x, y, z, s
//     rz 1 0.25      # rx likewise; angle in radians
//     u 0 1 0 0 0 0 0 1 0   # row-major (re, im) pairs
//     cz 0 1

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vbsq/linalg.hpp"
#include "vbsq/statevec.hpp"

namespace vbsq {

struct Gate {
    enum class Kind { OneQubit, CZ };
    Kind kind;
    std::size_t a;  // the wire of a 1q gate, or the first CZ wire
    std::size_t b;  // second CZ wire
    Mat2 u;         // 1q gates only
};

class Circuit {
   public:
    explicit Circuit(std::size_t wires = 1);

    std::size_t num_wires() const noexcept { return wires_; }
    const std::vector<Gate> &gates() const noexcept { return gates_; }

    /// Throws QubitOutOfRange for a bad wire and NotUnitary for a bad matrix.
    Circuit &add_1q(std::size_t wire, const Mat2 &u);
    /// Throws QubitOutOfRange, or InvalidCircuit unless |a - b| = 1.
    Circuit &add_cz(std::size_t a, std::size_t b);

   private:
    std::size_t wires_;
    std::vector<Gate> gates_;
};

/// Throws ParseError for malformed text and InvalidCircuit for well-formed
/// statements that break the circuit rules (wire out of range, non-adjacent CZ).
Circuit parse_circuit(std::string_view text);

/// Direct gate-by-gate simulation on the wires of `input` (qubit w = wire w).
StateVector simulate(const Circuit &c, const StateVector &input);

/// True when every 1q gate is a Clifford.
bool is_clifford(const Circuit &c);

}  // namespace vbsq
