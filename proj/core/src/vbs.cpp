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

#include "vbsq/vbs.hpp"

#include <algorithm>
#include <string>

#include "vbsq/error.hpp"

namespace vbsq {

namespace {

/// Removes the bits at `positions` (ascending) from `index`, packing the rest.
std::size_t drop_bits(std::size_t index, const std::vector<std::size_t> &positions) {
    std::size_t out = 0, w = 0;
    for (std::size_t b = 0, p = 0; (index >> b) != 0; ++b) {
        if (p < positions.size() && positions[p] == b) {
            ++p;
            continue;
        }
        out |= ((index >> b) & 1) << w++;
    }
    return out;
}

/// Maps the qubits `qs` of an n-qubit amplitude vector through a 2 x 2^|qs|
/// matrix; the output qubit is appended above the untouched ones.
std::vector<Complex> fold(const std::vector<Complex> &amps, std::size_t n, const std::vector<std::size_t> &qs,
                          const Eigen::MatrixXcd &p) {
    const std::size_t k = qs.size();
    const std::size_t rest = n - k;
    std::vector<std::size_t> sorted = qs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Complex> out(std::size_t{1} << (rest + 1), Complex{0, 0});
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (amps[i] == Complex{0, 0}) continue;
        std::size_t m = 0;
        for (std::size_t j = 0; j < k; ++j) m |= ((i >> qs[j]) & 1) << j;
        const std::size_t r = drop_bits(i, sorted);
        for (std::size_t b = 0; b < 2; ++b) {
            const Complex c = p(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(m));
            if (c != Complex{0, 0}) out[r | (b << rest)] += c * amps[i];
        }
    }
    return out;
}

std::vector<Complex> bond_amplitudes() { return {0.5, 0.5, 0.5, -0.5}; }

}  // namespace

Projector projector(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArity, "projector arity must be at least 1");
    if (n > kMaxDenseQubits) throw Error(ErrorCode::TooLarge, "projector arity " + std::to_string(n) + " too large");
    const Eigen::Index cols = Eigen::Index{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, cols);
    m(0, 0) = 1;
    m(1, cols - 1) = 1;
    return {n, std::move(m)};
}

Eigen::MatrixXcd attach_virtual(const Projector &p, const Ket &ket) {
    if (p.arity < 1 || ket.size() != 2) throw Error(ErrorCode::InvalidDimension, "attach_virtual needs a one-qubit ket");
    const Eigen::Index keep = Eigen::Index{1} << (p.arity - 1);
    // 1_{2^(n-1)} (x) |ket>: the ket is the last Kronecker factor (lowest bit).
    Eigen::MatrixXcd embed = Eigen::MatrixXcd::Zero(2 * keep, keep);
    for (Eigen::Index c = 0; c < keep; ++c) {
        embed(2 * c, c) = ket[0];
        embed(2 * c + 1, c) = ket[1];
    }
    return p.matrix * embed;
}

Projector absorb_plus(const Projector &p) {
    if (p.arity < 2) throw Error(ErrorCode::CannotAbsorb, "cannot absorb a virtual qubit into P_1");
    return projector(p.arity - 1);
}

MinusAbsorption absorb_minus(const Projector &p) {
    if (p.arity < 2) throw Error(ErrorCode::CannotAbsorb, "cannot absorb a virtual qubit into P_1");
    return {true, projector(p.arity - 1)};
}

StateVector bond_state() { return StateVector::from_amplitudes(2, bond_amplitudes()); }

StateVector singlet_state() { return StateVector::from_amplitudes(2, {0, kInvSqrt2, -kInvSqrt2, 0}); }

std::size_t VbsSpec::num_virtual() const {
    std::size_t total = 0;
    for (std::size_t a : site_arity) total += a;
    return total;
}

VbsSpec make_vbs_spec(const Graph &g) {
    const std::size_t n = g.num_vertices();
    VbsSpec spec{g, std::vector<std::size_t>(n), {}, std::vector<std::size_t>(n)};
    std::size_t offset = 0;
    for (Vertex v = 0; v < n; ++v) {
        spec.site_arity[v] = std::max<std::size_t>(1, g.degree(v));
        spec.site_offset[v] = offset;
        offset += spec.site_arity[v];
    }
    auto slot_of = [&g](Vertex v, Vertex other) {
        auto nb = g.neighbors(v);
        return static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), other) - nb.begin());
    };
    for (const auto &[u, v] : g.edges()) spec.edge_slots.emplace_back(slot_of(u, v), slot_of(v, u));
    return spec;
}

bool is_valid(const VbsSpec &spec) {
    const Graph &g = spec.graph;
    const std::size_t n = g.num_vertices();
    if (spec.site_arity.size() != n || spec.site_offset.size() != n || spec.edge_slots.size() != g.num_edges()) {
        return false;
    }
    std::size_t offset = 0, degree_sum = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (spec.site_arity[v] != std::max<std::size_t>(1, g.degree(v))) return false;
        if (spec.site_offset[v] != offset) return false;
        offset += spec.site_arity[v];
        degree_sum += g.degree(v);
    }
    if (degree_sum != 2 * g.num_edges()) return false;
    // Every slot of a site with edges is used exactly once.
    std::vector<std::uint8_t> used(offset, 0);
    for (std::size_t k = 0; k < g.num_edges(); ++k) {
        const auto [u, v] = g.edges()[k];
        const auto [su, sv] = spec.edge_slots[k];
        if (su >= spec.site_arity[u] || sv >= spec.site_arity[v]) return false;
        if (used[spec.virtual_index(u, su)]++ || used[spec.virtual_index(v, sv)]++) return false;
    }
    return true;
}

StateVector materialize(const VbsSpec &spec, std::size_t cap) {
    if (!is_valid(spec)) throw Error(ErrorCode::InvalidDimension, "inconsistent VBS bookkeeping");
    const Graph &g = spec.graph;
    const std::size_t n = g.num_vertices();
    if (n == 0) throw Error(ErrorCode::InvalidDimension, "graph has no vertices");
    const std::size_t peak = n + 2;
    if (peak > std::min(cap, kMaxDenseQubits)) {
        throw Error(ErrorCode::TooLarge, "materialization needs " + std::to_string(peak) + " live qubits, cap is " +
                                             std::to_string(cap));
    }
    const Projector p2 = projector(2);
    const Projector p1 = projector(1);

    // order[j] = site whose physical qubit currently sits at position j.
    std::vector<Vertex> order;
    std::vector<std::size_t> position(n, n);
    std::vector<Complex> amps{1.0};
    std::size_t live = 0;

    auto reindex = [&](std::size_t removed_low, std::size_t removed_high) {
        // Drop two positions from order and fix position[] afterwards.
        order.erase(order.begin() + static_cast<std::ptrdiff_t>(removed_high));
        order.erase(order.begin() + static_cast<std::ptrdiff_t>(removed_low));
        for (std::size_t j = 0; j < order.size(); ++j) {
            if (order[j] != n) position[order[j]] = j;
        }
    };

    auto fold_endpoint = [&](Vertex w, std::size_t virtual_pos) {
        if (position[w] == n) {
            // First slot of w: P_1 is the identity, the virtual qubit becomes w's qubit.
            amps = fold(amps, live, {virtual_pos}, p1.matrix);
        } else {
            amps = fold(amps, live, {position[w], virtual_pos}, p2.matrix);
        }
        std::size_t low = virtual_pos, high = virtual_pos;
        if (position[w] != n) {
            low = std::min(position[w], virtual_pos);
            high = std::max(position[w], virtual_pos);
        }
        if (low == high) {
            order.erase(order.begin() + static_cast<std::ptrdiff_t>(low));
            for (std::size_t j = 0; j < order.size(); ++j) {
                if (order[j] != n) position[order[j]] = j;
            }
        } else {
            reindex(low, high);
            --live;
        }
        order.push_back(w);
        position[w] = order.size() - 1;
    };

    // Virtual qubits carry a placeholder owner n while they are unfolded.
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != 0) continue;
        std::vector<Complex> plus(2 * amps.size());
        for (std::size_t i = 0; i < amps.size(); ++i) plus[i] = plus[i + amps.size()] = amps[i] * kInvSqrt2;
        amps = std::move(plus);
        order.push_back(n);
        ++live;
        fold_endpoint(v, live - 1);
    }
    for (const auto &[u, v] : g.edges()) {
        const auto bond = bond_amplitudes();
        std::vector<Complex> next(4 * amps.size());
        for (std::size_t i = 0; i < amps.size(); ++i) {
            for (std::size_t b = 0; b < 4; ++b) next[i + b * amps.size()] = amps[i] * bond[b];
        }
        amps = std::move(next);
        order.push_back(n);
        order.push_back(n);
        live += 2;
        // Virtual qubit of u sits at live-2, that of v at live-1; folding u
        // moves v's virtual qubit down by one or two places.
        fold_endpoint(u, live - 2);
        fold_endpoint(v, live - 2);
    }

    StateVector state = StateVector::from_amplitudes(live, std::move(amps));
    // Sort physical qubits into site order.
    for (Vertex v = 0; v < n; ++v) {
        std::size_t from = std::find(order.begin(), order.end(), v) - order.begin();
        state.move_qubit(from, v);
        order.erase(order.begin() + static_cast<std::ptrdiff_t>(from));
        order.insert(order.begin() + static_cast<std::ptrdiff_t>(v), v);
    }
    return state;
}

StateVector materialize_direct(const VbsSpec &spec, std::size_t cap) {
    if (!is_valid(spec)) throw Error(ErrorCode::InvalidDimension, "inconsistent VBS bookkeeping");
    const Graph &g = spec.graph;
    const std::size_t n = g.num_vertices();
    if (n == 0) throw Error(ErrorCode::InvalidDimension, "graph has no vertices");
    const std::size_t nv = spec.num_virtual();
    if (nv > std::min(cap, kMaxDenseQubits)) {
        throw Error(ErrorCode::TooLarge, "virtual register of " + std::to_string(nv) + " qubits exceeds cap " +
                                             std::to_string(cap));
    }

    // Tensor product of every bond (and |+> on isolated sites) over the
    // virtual register.
    std::vector<Complex> amps(std::size_t{1} << nv);
    const auto bond = bond_amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        Complex a = 1.0;
        for (std::size_t k = 0; k < g.num_edges(); ++k) {
            const auto [u, v] = g.edges()[k];
            const std::size_t bu = (i >> spec.virtual_index(u, spec.edge_slots[k].first)) & 1;
            const std::size_t bv = (i >> spec.virtual_index(v, spec.edge_slots[k].second)) & 1;
            a *= bond[bu | (bv << 1)];
        }
        for (Vertex v = 0; v < n; ++v) {
            if (g.degree(v) == 0) a *= kInvSqrt2;
        }
        amps[i] = a;
    }

    // Fold site 0, 1, ... in turn; each fold removes that site's slots and
    // appends its physical qubit on top, so the survivors end in site order.
    std::size_t live = nv;
    for (Vertex v = 0; v < n; ++v) {
        // Earlier sites' slots are gone, so this site's slots start at 0.
        std::vector<std::size_t> qs;
        for (std::size_t s = 0; s < spec.site_arity[v]; ++s) qs.push_back(s);
        amps = fold(amps, live, qs, projector(spec.site_arity[v]).matrix);
        live = live - qs.size() + 1;
    }
    return StateVector::from_amplitudes(n, std::move(amps));
}

SiteMeasurement z_measure_site(const StateVector &state, std::size_t site, int outcome) {
    if (outcome != 0 && outcome != 1) throw Error(ErrorCode::BadForcedOutcomes, "Z outcome must be 0 or 1");
    if (site >= state.num_qubits()) throw Error(ErrorCode::QubitOutOfRange, "site out of range");
    const std::size_t qs[1] = {site};
    Ket bra = outcome == 0 ? Ket{1, 0} : Ket{0, 1};
    auto m = project_out(state, qs, bra);
    return {m.probability, std::move(m.state)};
}

}  // namespace vbsq
