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

#include "vbsq/mbqc.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>

#include "vbsq/error.hpp"

namespace vbsq {

namespace {

constexpr double kHalfPi = kPi / 2;
constexpr std::size_t kNotLive = static_cast<std::size_t>(-1);

/// Maps an angle into (-pi, pi]; a rotation by 2 pi is -1, a global phase.
double wrap_pi(double t) {
    t = std::remainder(t, 2 * kPi);
    if (t <= -kPi + 1e-15) t += 2 * kPi;
    return std::abs(t) < 1e-13 ? 0.0 : t;
}

int nonzero_count(double a, double b, double c) { return (a != 0) + (b != 0) + (c != 0); }

bool on_quarter_grid(double t) { return std::abs(t / kHalfPi - std::round(t / kHalfPi)) < 1e-9; }

Mat2 euler_product(double a, double b, double c) { return gates::rx(a) * gates::rz(b) * gates::rx(c); }

double phase_between(const Mat2 &r, const Mat2 &u) {
    Complex overlap{0, 0};
    for (std::size_t i = 0; i < 4; ++i) overlap += std::conj(r.m[i]) * u.m[i];
    return std::arg(overlap);
}

/// Sorted parity set of sites.
using SiteSet = std::vector<Vertex>;

SiteSet symmetric_difference(const SiteSet &a, const SiteSet &b) {
    SiteSet out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

int parity(const std::vector<Vertex> &deps, const std::vector<int> &outcome_by_site) {
    int p = 0;
    for (Vertex v : deps) p ^= outcome_by_site.at(v) & 1;
    return p;
}

std::vector<Ket> xy_basis(double xi) {
    const Complex e = std::polar(kInvSqrt2, xi);
    return {Ket{kInvSqrt2, e}, Ket{kInvSqrt2, -e}};
}

std::vector<Ket> z_basis() { return {Ket{1, 0}, Ket{0, 1}}; }

const std::vector<int> *forced_outcomes(const PatternOutcomes &outcomes, std::size_t commands) {
    const auto *forced = std::get_if<std::vector<int>>(&outcomes);
    if (forced) {
        if (forced->size() != commands) {
            throw Error(ErrorCode::BadForcedOutcomes, "expected " + std::to_string(commands) + " forced outcomes, got " +
                                                          std::to_string(forced->size()));
        }
        for (int b : *forced) {
            if (b != 0 && b != 1) throw Error(ErrorCode::BadForcedOutcomes, "forced outcomes must be 0 or 1");
        }
    }
    return forced;
}

OutcomeSource source_for(const PatternOutcomes &outcomes, const std::vector<int> *forced, std::size_t k) {
    if (forced) return static_cast<std::size_t>((*forced)[k]);
    return std::get<std::reference_wrapper<Rng>>(outcomes);
}

/// Replays the lazy activation schedule of run_pattern. `on_activate` and
/// `on_measure` see each event in order.
template <class Activate, class Measure>
void schedule(const MeasurementPattern &p, Activate on_activate, Measure on_measure) {
    const Graph &g = p.graph;
    std::vector<std::uint8_t> status(g.num_vertices(), 0);  // 0 dormant, 1 live, 2 measured
    for (Vertex v : p.inputs) status[v] = 1;
    auto activate = [&](Vertex v) {
        if (status[v] != 0) return;
        status[v] = 1;
        on_activate(v);
    };
    for (std::size_t k = 0; k < p.commands.size(); ++k) {
        const Vertex site = p.commands[k].site;
        activate(site);
        for (Vertex nb : g.neighbors(site)) activate(nb);
        status[site] = 2;
        on_measure(k);
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) activate(v);
}

}  // namespace

Mat2 xy_measurement_unitary(double xi, int k) {
    Mat2 m = gates::hadamard() * gates::phase(-xi);
    return (k & 1) ? gates::pauli_x() * m : m;
}

EulerXZX euler_xzx(const Mat2 &u) {
    if (!is_unitary(u)) throw Error(ErrorCode::NotUnitary, "euler_xzx needs a unitary");
    // Conjugating by H turns X-Z-X into Z-X-Z, whose angles read off directly.
    const Mat2 h = gates::hadamard();
    const Mat2 v = h * u * h;
    const Mat2 w = std::exp(Complex{0, -std::arg(det(v)) / 2}) * v;
    const double cos_half = std::abs(w(0, 0)), sin_half = std::abs(w(1, 0));
    double a = 0, b = 2 * std::atan2(sin_half, cos_half), c = 0;
    if (sin_half < 1e-12) {
        a = 2 * std::arg(w(1, 1));
    } else if (cos_half < 1e-12) {
        a = 2 * std::arg(Complex{0, 1} * w(1, 0));
    } else {
        const double sum = 2 * std::arg(w(1, 1));
        const double diff = 2 * std::arg(Complex{0, 1} * w(1, 0));
        a = (sum + diff) / 2;
        c = (sum - diff) / 2;
    }
    a = wrap_pi(a);
    b = wrap_pi(b);
    c = wrap_pi(c);
    // Z conjugation flips X: Rx(a) Rz(b) Rx(c) ~ Rx(a - pi) Rz(-b) Rx(c + pi). Keep the sparser one.
    const double a2 = wrap_pi(a - kPi), b2 = wrap_pi(-b), c2 = wrap_pi(c + kPi);
    if (nonzero_count(a2, b2, c2) < nonzero_count(a, b, c)) {
        a = a2;
        b = b2;
        c = c2;
    }

    if (clifford_images(u) && !(on_quarter_grid(a) && on_quarter_grid(b) && on_quarter_grid(c))) {
        // Another splitting of the same rotation sits on the pi/2 grid.
        for (int i = 0; i < 64; ++i) {
            const double ga = (i & 3) * kHalfPi, gb = ((i >> 2) & 3) * kHalfPi, gc = ((i >> 4) & 3) * kHalfPi;
            if (equal_up_to_phase(euler_product(ga, gb, gc), u, 1e-9)) {
                a = ga;
                b = gb;
                c = gc;
                break;
            }
        }
    }
    return {phase_between(euler_product(a, b, c), u), a, b, c};
}

OneQubitProgram compile_1q(const Mat2 &u) {
    const EulerXZX e = euler_xzx(u);
    // M(xi4) M(xi3) M(xi2) M(0) = [H P(-xi4) H] P(-xi3) [H P(-xi2) H] ~ Rx(-xi4) Rz(-xi3) Rx(-xi2).
    OneQubitProgram prog;
    prog.angles = {0.0, -e.c, -e.b, -e.a};
    for (double &xi : prog.angles) xi = xi == 0 ? 0.0 : xi;  // no negative zero
    // Measurement j sees X from outcome j-1 and Z from outcome j-2.
    prog.s_deps = {std::vector<std::size_t>{}, {0}, {1}, {2}};
    prog.t_deps = {std::vector<std::size_t>{}, {}, {0}, {1}};
    prog.out_x = {3};
    prog.out_z = {2};
    return prog;
}

void validate(const MeasurementPattern &p) {
    const std::size_t n = p.graph.num_vertices();
    auto fail = [](const std::string &what) { throw Error(ErrorCode::InvalidPattern, what); };
    std::vector<std::uint8_t> is_input(n, 0), is_output(n, 0);
    for (Vertex v : p.inputs) {
        if (v >= n) fail("input site " + std::to_string(v) + " out of range");
        if (is_input[v]++) fail("input site " + std::to_string(v) + " repeated");
    }
    for (Vertex v : p.outputs) {
        if (v >= n) fail("output site " + std::to_string(v) + " out of range");
        if (is_output[v]++) fail("output site " + std::to_string(v) + " repeated");
    }
    std::vector<std::size_t> order(n, kNotLive);
    for (std::size_t k = 0; k < p.commands.size(); ++k) {
        const auto &cmd = p.commands[k];
        if (cmd.site >= n) fail("command site " + std::to_string(cmd.site) + " out of range");
        if (is_output[cmd.site]) fail("output site " + std::to_string(cmd.site) + " is measured");
        if (order[cmd.site] != kNotLive) fail("site " + std::to_string(cmd.site) + " measured twice");
        if (cmd.kind == MeasurementCommand::Kind::Z && (!cmd.s_deps.empty() || !cmd.t_deps.empty())) {
            fail("Z command on site " + std::to_string(cmd.site) + " has dependencies");
        }
        for (const auto *deps : {&cmd.s_deps, &cmd.t_deps}) {
            for (Vertex d : *deps) {
                if (d >= n || order[d] == kNotLive) {
                    fail("site " + std::to_string(cmd.site) + " depends on a site not measured before it");
                }
            }
        }
        order[cmd.site] = k;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!is_output[v] && order[v] == kNotLive) fail("site " + std::to_string(v) + " is never measured");
    }
    std::vector<std::uint8_t> corrected(n, 0);
    for (const auto &corr : p.corrections) {
        if (corr.output >= n || !is_output[corr.output]) fail("correction targets a non-output site");
        if (corrected[corr.output]++) fail("output " + std::to_string(corr.output) + " corrected twice");
        for (const auto *deps : {&corr.x_deps, &corr.z_deps}) {
            for (Vertex d : *deps) {
                if (d >= n || order[d] == kNotLive) fail("correction depends on an unmeasured site");
            }
        }
    }
}

MeasurementPattern compile_circuit(const Circuit &c) {
    const std::size_t wires = c.num_wires();
    std::vector<Edge> edges;
    std::vector<MeasurementCommand> commands;
    std::vector<Vertex> frontier(wires);
    std::vector<SiteSet> fx(wires), fz(wires);
    std::vector<bool> pending_h(wires, false);
    Vertex next = wires;
    for (std::size_t w = 0; w < wires; ++w) frontier[w] = w;

    // Measures the wire's current site and moves the logical qubit one step
    // along the chain, applying M(xi) and updating the symbolic frame.
    auto step = [&](std::size_t w, double xi) {
        const Vertex site = frontier[w];
        const Vertex fresh = next++;
        edges.emplace_back(site, fresh);
        commands.push_back({site, MeasurementCommand::Kind::XY, xi, fx[w], fz[w]});
        fz[w] = fx[w];
        fx[w] = {site};
        frontier[w] = fresh;
    };

    for (const Gate &gate : c.gates()) {
        if (gate.kind == Gate::Kind::OneQubit) {
            // A pending H from an earlier CZ is undone inside this gate.
            const Mat2 u = pending_h[gate.a] ? gate.u * gates::hadamard() : gate.u;
            pending_h[gate.a] = false;
            for (double xi : compile_1q(u).angles) step(gate.a, xi);
            continue;
        }
        for (std::size_t w : {gate.a, gate.b}) {
            if (pending_h[w]) step(w, 0.0);  // M(0) = H cancels the pending H
            pending_h[w] = false;
        }
        edges.emplace_back(frontier[gate.a], frontier[gate.b]);
        const SiteSet xa = fx[gate.a], xb = fx[gate.b];
        fz[gate.a] = symmetric_difference(fz[gate.a], xb);
        fz[gate.b] = symmetric_difference(fz[gate.b], xa);
        step(gate.a, 0.0);
        step(gate.b, 0.0);
        pending_h[gate.a] = pending_h[gate.b] = true;
    }
    for (std::size_t w = 0; w < wires; ++w) {
        if (pending_h[w]) step(w, 0.0);
    }

    MeasurementPattern p{Graph(next, edges), {}, frontier, std::move(commands), {}};
    for (std::size_t w = 0; w < wires; ++w) {
        p.inputs.push_back(w);
        p.corrections.push_back({frontier[w], fx[w], fz[w]});
    }
    validate(p);
    return p;
}

double effective_angle(const MeasurementCommand &cmd, const std::vector<int> &outcome_by_site) {
    const double sign = parity(cmd.s_deps, outcome_by_site) ? -1.0 : 1.0;
    return sign * cmd.angle + (parity(cmd.t_deps, outcome_by_site) ? kPi : 0.0);
}

std::size_t dense_width(const MeasurementPattern &p) {
    std::size_t live = p.inputs.size(), peak = live;
    schedule(
        p,
        [&](Vertex) { peak = std::max(peak, ++live); },
        [&](std::size_t) { --live; });
    return peak;
}

PatternRunResult run_pattern(const MeasurementPattern &p, const StateVector &input, PatternOutcomes outcomes,
                             std::size_t cap) {
    validate(p);
    if (input.num_qubits() != p.inputs.size()) {
        throw Error(ErrorCode::DimensionMismatch, "input state has " + std::to_string(input.num_qubits()) +
                                                      " qubits, pattern has " + std::to_string(p.inputs.size()) +
                                                      " inputs");
    }
    const auto *forced = forced_outcomes(outcomes, p.commands.size());
    const std::size_t width = dense_width(p);
    if (width > std::min(cap, kMaxDenseQubits)) {
        throw Error(ErrorCode::TooLarge, "pattern needs " + std::to_string(width) + " live qubits, cap is " +
                                             std::to_string(cap));
    }

    const Graph &g = p.graph;
    std::vector<std::size_t> position(g.num_vertices(), kNotLive);
    std::vector<Vertex> live(p.inputs);
    for (std::size_t j = 0; j < live.size(); ++j) position[live[j]] = j;
    StateVector state = input;
    for (const auto &[u, v] : g.edges()) {
        if (position[u] != kNotLive && position[v] != kNotLive) state.apply_cz(position[u], position[v]);
    }
    const StateVector plus = plus_state(1);
    std::vector<int> outcome_by_site(g.num_vertices(), -1);
    PatternRunResult result{{}, {}, StateVector(), ByproductFrame(p.outputs.size())};

    schedule(
        p,
        [&](Vertex v) {
            state.append(plus);
            const std::size_t q = live.size();
            for (Vertex nb : g.neighbors(v)) {
                if (position[nb] != kNotLive) state.apply_cz(position[nb], q);
            }
            position[v] = q;
            live.push_back(v);
        },
        [&](std::size_t k) {
            const auto &cmd = p.commands[k];
            const auto basis = cmd.kind == MeasurementCommand::Kind::XY
                                   ? xy_basis(effective_angle(cmd, outcome_by_site))
                                   : z_basis();
            const std::size_t qs[1] = {position[cmd.site]};
            Measurement m = measure_and_discard(state, qs, basis, source_for(outcomes, forced, k));
            state = std::move(m.state);
            live.erase(live.begin() + static_cast<std::ptrdiff_t>(qs[0]));
            position[cmd.site] = kNotLive;
            for (std::size_t j = qs[0]; j < live.size(); ++j) position[live[j]] = j;
            outcome_by_site[cmd.site] = static_cast<int>(m.outcome);
            result.outcomes.push_back(static_cast<int>(m.outcome));
            result.probabilities.push_back(m.probability);
        });

    // Put the outputs in pattern order.
    for (std::size_t i = 0; i < p.outputs.size(); ++i) {
        const std::size_t from = position[p.outputs[i]];
        state.move_qubit(from, i);
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(from));
        live.insert(live.begin() + static_cast<std::ptrdiff_t>(i), p.outputs[i]);
        for (std::size_t j = 0; j < live.size(); ++j) position[live[j]] = j;
    }
    for (const auto &corr : p.corrections) {
        const std::size_t i = static_cast<std::size_t>(
            std::find(p.outputs.begin(), p.outputs.end(), corr.output) - p.outputs.begin());
        PauliBits f{parity(corr.x_deps, outcome_by_site) != 0, parity(corr.z_deps, outcome_by_site) != 0};
        if (f.x) state.apply_1q(gates::pauli_x(), i);
        if (f.z) state.apply_1q(gates::pauli_z(), i);
        result.frame.wires[i] = f;
    }
    result.logical_state = std::move(state);
    return result;
}

bool is_clifford(const MeasurementPattern &p) {
    return std::all_of(p.commands.begin(), p.commands.end(), [](const MeasurementCommand &cmd) {
        return cmd.kind == MeasurementCommand::Kind::Z || on_quarter_grid(cmd.angle);
    });
}

StabilizerRunResult run_pattern_stabilizer(const MeasurementPattern &p, const Tableau &input,
                                           PatternOutcomes outcomes) {
    validate(p);
    if (input.num_qubits() != p.inputs.size()) {
        throw Error(ErrorCode::DimensionMismatch, "input tableau does not match the pattern inputs");
    }
    if (!is_clifford(p)) throw Error(ErrorCode::NotClifford, "pattern has an angle off the pi/2 grid");
    const auto *forced = forced_outcomes(outcomes, p.commands.size());

    const Graph &g = p.graph;
    const std::size_t n = g.num_vertices();
    std::vector<std::uint8_t> is_input(n, 0);
    std::vector<PauliString> gens;
    for (const auto &gen : input.generators()) {
        PauliString full(n);
        for (std::size_t j = 0; j < p.inputs.size(); ++j) full.set_bits(p.inputs[j], gen.x(j), gen.z(j));
        full.set_phase(gen.phase());
        gens.push_back(std::move(full));
    }
    for (Vertex v : p.inputs) is_input[v] = 1;
    for (Vertex v = 0; v < n; ++v) {
        if (!is_input[v]) gens.push_back(PauliString::single(n, v, 'X'));
    }
    Tableau t = Tableau::from_generators(std::move(gens));
    for (const auto &[u, v] : g.edges()) t.apply(CliffordGate::CZ, u, v);

    std::vector<int> outcome_by_site(n, -1);
    StabilizerRunResult result{{}, Tableau(), ByproductFrame(p.outputs.size())};
    for (std::size_t k = 0; k < p.commands.size(); ++k) {
        const auto &cmd = p.commands[k];
        PauliString obs = PauliString::single(n, cmd.site, 'Z');
        if (cmd.kind == MeasurementCommand::Kind::XY) {
            // Quarter turns: +X, +Y, -X, -Y.
            const long quarter = std::lround(effective_angle(cmd, outcome_by_site) / kHalfPi);
            const long m = ((quarter % 4) + 4) % 4;
            obs = PauliString::single(n, cmd.site, m % 2 == 0 ? 'X' : 'Y');
            if (m >= 2) obs.negate();
        }
        const auto outcome = t.measure(obs, source_for(outcomes, forced, k));
        outcome_by_site[cmd.site] = outcome.bit;
        result.outcomes.push_back(outcome.bit);
    }
    for (const auto &corr : p.corrections) {
        const std::size_t i = static_cast<std::size_t>(
            std::find(p.outputs.begin(), p.outputs.end(), corr.output) - p.outputs.begin());
        PauliBits f{parity(corr.x_deps, outcome_by_site) != 0, parity(corr.z_deps, outcome_by_site) != 0};
        if (f.x) t.apply(CliffordGate::X, corr.output);
        if (f.z) t.apply(CliffordGate::Z, corr.output);
        result.frame.wires[i] = f;
    }
    result.logical_state = p.outputs.empty() ? Tableau(0) : restrict_to(t, p.outputs);
    return result;
}

}  // namespace vbsq
