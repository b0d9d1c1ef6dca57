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

// Canonical forms, region entropy, restriction, Bell-pair extraction and the
// graph form of stabilizer states.

#include <algorithm>
#include <functional>
#include <string>

#include "gf2.hpp"
#include "vbsq/error.hpp"
#include "vbsq/stabilizer.hpp"

namespace vbsq {

namespace {

/// Column c of the generator matrix under a caller-chosen column order.
using ColumnBit = std::function<bool(const PauliString &, std::size_t)>;

/// Reduced row echelon form using phase-tracking Pauli products, so every row
/// stays an element of the same stabilizer group. Returns the pivot columns.
std::vector<std::size_t> reduce_generators(std::vector<PauliString> &rows, std::size_t cols, const ColumnBit &bit) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !bit(rows[p], c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && bit(rows[i], c)) rows[i] *= rows[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::uint8_t> region_mask(std::size_t n, std::span<const std::size_t> region, bool allow_full) {
    std::vector<std::uint8_t> mask(n, 0);
    for (std::size_t q : region) {
        if (q >= n) throw Error(ErrorCode::InvalidSubset, "region qubit " + std::to_string(q) + " out of range");
        if (mask[q]) throw Error(ErrorCode::InvalidSubset, "region qubit " + std::to_string(q) + " repeated");
        mask[q] = 1;
    }
    if (region.empty() || (!allow_full && region.size() == n)) {
        throw Error(ErrorCode::InvalidSubset, "region must be nonempty and proper");
    }
    return mask;
}

void conjugate_all(std::vector<PauliString> &rows, CliffordGate gate, std::size_t q) {
    for (auto &row : rows) {
        switch (gate) {
            case CliffordGate::H: row.conjugate_h(q); break;
            case CliffordGate::Sdg: row.conjugate_sdg(q); break;
            case CliffordGate::Z: row.conjugate_z(q); break;
            default: throw Error(ErrorCode::NotClifford, "unexpected gate in graph-form reduction");
        }
    }
}

}  // namespace

Tableau canonical_form(const Tableau &t) {
    const std::size_t n = t.num_qubits();
    std::vector<PauliString> rows = t.generators();
    reduce_generators(rows, 2 * n, [n](const PauliString &p, std::size_t c) { return c < n ? p.x(c) : p.z(c - n); });
    return Tableau::from_generators(std::move(rows));
}

bool same_state(const Tableau &a, const Tableau &b) {
    if (a.num_qubits() != b.num_qubits()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::size_t entropy_of_region(const Tableau &t, std::span<const std::size_t> region) {
    const std::size_t n = t.num_qubits();
    region_mask(n, region, false);
    std::vector<detail::BitRow> rows(n, detail::BitRow(2 * region.size()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < region.size(); ++j) {
            rows[i].set(2 * j, t.x(i, region[j]));
            rows[i].set(2 * j + 1, t.z(i, region[j]));
        }
    }
    return detail::rank(std::move(rows), 2 * region.size()) - region.size();
}

Tableau restrict_to(const Tableau &t, std::span<const std::size_t> qubits) {
    const std::size_t n = t.num_qubits();
    auto mask = region_mask(n, qubits, true);
    // Columns: X/Z of every discarded qubit first, then X/Z of the kept ones.
    std::vector<std::size_t> order;
    for (std::size_t q = 0; q < n; ++q) {
        if (!mask[q]) order.push_back(q);
    }
    const std::size_t discarded = order.size();
    order.insert(order.end(), qubits.begin(), qubits.end());
    std::vector<PauliString> rows = t.generators();
    auto pivots = reduce_generators(rows, 2 * n, [&order](const PauliString &p, std::size_t c) {
        return c % 2 == 0 ? p.x(order[c / 2]) : p.z(order[c / 2]);
    });

    std::vector<PauliString> kept;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] < 2 * discarded) continue;
        PauliString g(qubits.size());
        for (std::size_t j = 0; j < qubits.size(); ++j) g.set_bits(j, rows[r].x(qubits[j]), rows[r].z(qubits[j]));
        g.set_phase(rows[r].phase());
        kept.push_back(std::move(g));
    }
    if (kept.size() != qubits.size()) {
        throw Error(ErrorCode::InvalidSubset, "selected qubits are entangled with the rest of the register");
    }
    return Tableau::from_generators(std::move(kept));
}

std::vector<PauliMeasureCommand> extract_bell_pattern(const Graph &g, Vertex a, Vertex b,
                                                      std::span<const Vertex> path) {
    const std::size_t n = g.num_vertices();
    if (a >= n || b >= n) throw Error(ErrorCode::VertexOutOfRange, "path endpoint out of range");
    if (a == b || path.size() < 2 || path.front() != a || path.back() != b) {
        throw Error(ErrorCode::NoPath, "path must run from a to b with a != b");
    }
    std::vector<std::size_t> position(n, n);
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] >= n) throw Error(ErrorCode::NoPath, "path vertex out of range");
        if (position[path[i]] != n) throw Error(ErrorCode::NoPath, "path revisits a vertex");
        position[path[i]] = i;
        if (i > 0 && !g.adjacent(path[i - 1], path[i])) {
            throw Error(ErrorCode::NoPath, "no edge between path vertices " + std::to_string(path[i - 1]) + " and " +
                                               std::to_string(path[i]));
        }
    }

    // Shortcut chords so the X-measured wire is an induced path of g.
    std::vector<Vertex> wire{path.front()};
    for (std::size_t i = 0; i + 1 < path.size();) {
        std::size_t next = i + 1;
        for (Vertex w : g.neighbors(path[i])) {
            if (position[w] != n && position[w] > next) next = position[w];
        }
        wire.push_back(path[next]);
        i = next;
    }

    std::vector<std::uint8_t> on_wire(n, 0);
    for (Vertex v : wire) on_wire[v] = 1;
    std::vector<PauliMeasureCommand> commands;
    for (Vertex v = 0; v < n; ++v) {
        if (!on_wire[v]) commands.push_back({v, PauliBasis::Z});
    }
    for (std::size_t i = 1; i + 1 < wire.size(); ++i) commands.push_back({wire[i], PauliBasis::X});
    return commands;
}

Tableau run_pauli_measurements(Tableau t, std::span<const PauliMeasureCommand> commands, Rng &rng) {
    for (const auto &cmd : commands) {
        char letter = cmd.basis == PauliBasis::X ? 'X' : cmd.basis == PauliBasis::Y ? 'Y' : 'Z';
        t.measure(PauliString::single(t.num_qubits(), cmd.vertex, letter), std::ref(rng));
    }
    return t;
}

GraphForm tableau_to_graph(const Tableau &t) {
    const std::size_t n = t.num_qubits();
    std::vector<PauliString> rows = t.generators();
    auto x_column = [](const PauliString &p, std::size_t c) { return p.x(c); };

    // Qubits outside the X-part pivots get a Hadamard; the X part is then invertible.
    std::vector<bool> applied_h(n, false), applied_sdg(n, false), applied_z(n, false);
    auto pivots = reduce_generators(rows, n, x_column);
    std::vector<std::uint8_t> is_pivot(n, 0);
    for (std::size_t c : pivots) is_pivot[c] = 1;
    for (std::size_t q = 0; q < n; ++q) {
        if (!is_pivot[q]) {
            conjugate_all(rows, CliffordGate::H, q);
            applied_h[q] = true;
        }
    }
    if (reduce_generators(rows, n, x_column).size() != n) {
        throw Error(ErrorCode::InvalidTableau, "X block did not reach full rank");
    }

    // Row i is now +-X_i prod Z^{Gamma_i}, with Y where the diagonal is set.
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].z(i)) {
            conjugate_all(rows, CliffordGate::Sdg, i);
            applied_sdg[i] = true;
        }
        if (rows[i].sign() < 0) {
            conjugate_all(rows, CliffordGate::Z, i);
            applied_z[i] = true;
        }
    }

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rows[i].z(j) != rows[j].z(i)) throw Error(ErrorCode::InvalidTableau, "graph form is not symmetric");
            if (rows[i].z(j)) edges.emplace_back(i, j);
        }
    }

    // The applied sequence maps the state to |G>; the local Cliffords undo it.
    GraphForm form{Graph(n, edges), std::vector<std::vector<CliffordGate>>(n)};
    for (std::size_t q = 0; q < n; ++q) {
        if (applied_z[q]) form.local[q].push_back(CliffordGate::Z);
        if (applied_sdg[q]) form.local[q].push_back(CliffordGate::S);
        if (applied_h[q]) form.local[q].push_back(CliffordGate::H);
    }
    return form;
}

Tableau graph_form_tableau(const GraphForm &form) {
    Tableau t = tableau_graph_state(form.graph);
    for (std::size_t q = 0; q < form.local.size(); ++q) {
        for (CliffordGate g : form.local[q]) t.apply(g, q);
    }
    return t;
}

}  // namespace vbsq
