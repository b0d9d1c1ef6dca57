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

// One-way computation: measurement patterns on graph states, the circuit
// compiler, the dense and stabilizer executors, and the equivalence harness.
//
// An XY measurement with angle xi projects onto (|0> + (-1)^k e^{i xi}|1>)/sqrt(2)
// for outcome k. On a chain site this teleports M(xi) = X^k H diag(1, e^{-i xi})
// onto the next site.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vbsq/circuit.hpp"
#include "vbsq/graph.hpp"
#include "vbsq/linalg.hpp"
#include "vbsq/stabilizer.hpp"
#include "vbsq/statevec.hpp"
#include "vbsq/teleport.hpp"

namespace vbsq {

/// X^k H diag(1, e^{-i xi}).
Mat2 xy_measurement_unitary(double xi, int k);

/// U = e^{i phase} Rx(a) Rz(b) Rx(c), angles in (-2 pi, 2 pi]. Clifford
/// inputs get angles that are multiples of pi / 2. Throws NotUnitary.
struct EulerXZX {
    double phase, a, b, c;
};
EulerXZX euler_xzx(const Mat2 &u);

/// Four measurement angles on consecutive chain sites. With no incoming frame
/// and measurement j adapted by s_deps[j] / t_deps[j] (indices into the same
/// four measurements), the output carries X^{x} Z^{z} U where x and z are
/// the outcome parities over out_x / out_z.
struct OneQubitProgram {
    std::array<double, 4> angles;
    std::array<std::vector<std::size_t>, 4> s_deps;
    std::array<std::vector<std::size_t>, 4> t_deps;
    std::vector<std::size_t> out_x;
    std::vector<std::size_t> out_z;
};
OneQubitProgram compile_1q(const Mat2 &u);

struct MeasurementCommand {
    enum class Kind { XY, Z };
    Vertex site;
    Kind kind;
    double angle;                // XY only
    std::vector<Vertex> s_deps;  // sites whose outcome parity flips the angle's sign
    std::vector<Vertex> t_deps;  // sites whose outcome parity adds pi
};

struct Correction {
    Vertex output;
    std::vector<Vertex> x_deps;
    std::vector<Vertex> z_deps;
};

struct MeasurementPattern {
    Graph graph;
    std::vector<Vertex> inputs;
    std::vector<Vertex> outputs;
    std::vector<MeasurementCommand> commands;
    std::vector<Correction> corrections;
};

/// Throws InvalidPattern unless the commands measure every non-output vertex
/// exactly once, dependencies point strictly backwards, Z commands have no
/// dependencies, and corrections target outputs.
void validate(const MeasurementPattern &p);

/// Builds the pattern of a circuit: input site w for wire w, four chain sites
/// per single-qubit gate, a vertical edge per CZ.
MeasurementPattern compile_circuit(const Circuit &c);

/// Forced outcomes (one bit per command) or a generator.
using PatternOutcomes = std::variant<std::vector<int>, std::reference_wrapper<Rng>>;

struct PatternRunResult {
    std::vector<int> outcomes;   // per command
    std::vector<double> probabilities;  // of each outcome, given the earlier ones
    StateVector logical_state;   // on the outputs, in pattern output order, corrected
    ByproductFrame frame;        // the Pauli that the corrections removed, per output
};

/// Effective XY angle (-1)^s xi + t pi for the given outcome parities.
double effective_angle(const MeasurementCommand &cmd, const std::vector<int> &outcome_by_site);

/// Largest number of simultaneously live qubits run_pattern needs.
std::size_t dense_width(const MeasurementPattern &p);

/// Dense execution. Sites join the register lazily (in |+>, entangled with
/// their live neighbors) just before a neighbor is measured, so the width is
/// dense_width(p), not the site count. Throws TooLarge above `cap`,
/// DimensionMismatch for a wrong input size, BadForcedOutcomes for a wrong
/// outcome count, ZeroProbabilityBranch for an impossible forced branch.
PatternRunResult run_pattern(const MeasurementPattern &p, const StateVector &input, PatternOutcomes outcomes,
                             std::size_t cap = kDenseQubitCap);

/// True when every XY angle is a multiple of pi / 2.
bool is_clifford(const MeasurementPattern &p);

struct StabilizerRunResult {
    std::vector<int> outcomes;
    Tableau logical_state;
    ByproductFrame frame;
};

/// Tableau execution over all sites at once. Throws NotClifford for an angle
/// off the pi / 2 grid.
StabilizerRunResult run_pattern_stabilizer(const MeasurementPattern &p, const Tableau &input,
                                           PatternOutcomes outcomes);

struct BranchRecord {
    std::vector<int> outcomes;
    double fidelity;
};

struct VerifyOptions {
    std::size_t budget = 4096;       // exhaustive when 2^commands <= budget
    std::size_t samples = 256;       // branches drawn otherwise
    bool force_exhaustive = false;   // enumerate regardless of budget (commands <= 24)
    std::uint64_t seed = 0;          // branch b samples with Rng(seed ^ b)
};

inline constexpr double kVerifyTolerance = 1e-9;

struct VerifyReport {
    std::size_t commands = 0;
    bool exhaustive = false;
    std::size_t branches = 0;          // executed
    std::size_t skipped = 0;           // zero-probability forced branches
    double min_fidelity = 1;
    double mean_fidelity = 1;
    bool passed = false;
    std::vector<BranchRecord> records;
};

/// Compiles c, runs the pattern over exhaustive or sampled branches and
/// compares each output with direct simulation. Passes iff the minimum
/// fidelity is at least 1 - kVerifyTolerance.
VerifyReport verify_equivalence(const Circuit &c, const StateVector &input, const VerifyOptions &options);

/// Pattern text document; see the README for the grammar.
std::string serialize_pattern(const MeasurementPattern &p);
/// Throws ParseError with a line number, or InvalidPattern.
MeasurementPattern parse_pattern(std::string_view text);

}  // namespace vbsq
