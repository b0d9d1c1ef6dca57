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

#include "vbsq/stabilizer.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "gf2.hpp"
#include "vbsq/error.hpp"

namespace vbsq {

namespace {

/// Destabilizers for independent commuting generators: D_i anticommutes with
/// S_i only, and the D_i commute with each other.
std::vector<PauliString> complete_destabilizers(const std::vector<PauliString> &stab) {
    const std::size_t n = stab.size();
    // Row j encodes d -> <S_j, d> over columns (d.x | d.z), augmented with e_j.
    std::vector<detail::BitRow> rows(n, detail::BitRow(3 * n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t q = 0; q < n; ++q) {
            rows[j].set(q, stab[j].z(q));
            rows[j].set(n + q, stab[j].x(q));
        }
        rows[j].set(2 * n + j, true);
    }
    auto pivots = detail::row_reduce(rows, 2 * n);
    if (pivots.size() != n) throw Error(ErrorCode::InvalidTableau, "generators are not independent");

    std::vector<PauliString> destab(n, PauliString(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < n; ++r) {
            if (!rows[r].get(2 * n + i)) continue;
            std::size_t c = pivots[r];
            std::size_t q = c % n;
            bool xb = destab[i].x(q), zb = destab[i].z(q);
            if (c < n) {
                xb = !xb;
            } else {
                zb = !zb;
            }
            destab[i].set_bits(q, xb, zb);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (!destab[i].commutes_with(destab[j])) destab[i].xor_bits(stab[j]);
        }
        destab[i].set_phase(0);
    }
    return destab;
}

void check_targets(std::size_t n, std::span<const std::size_t> targets, std::size_t arity) {
    if (targets.size() != arity) {
        throw Error(ErrorCode::QubitOutOfRange,
                    "gate expects " + std::to_string(arity) + " target(s), got " + std::to_string(targets.size()));
    }
    for (std::size_t q : targets) {
        if (q >= n) {
            throw Error(ErrorCode::QubitOutOfRange, "qubit " + std::to_string(q) + " outside " + std::to_string(n));
        }
    }
    if (arity == 2 && targets[0] == targets[1]) {
        throw Error(ErrorCode::QubitOutOfRange, "two-qubit gate needs distinct targets");
    }
}

void conjugate(PauliString &p, CliffordGate gate, std::span<const std::size_t> t) {
    switch (gate) {
        case CliffordGate::H: p.conjugate_h(t[0]); break;
        case CliffordGate::S: p.conjugate_s(t[0]); break;
        case CliffordGate::Sdg: p.conjugate_sdg(t[0]); break;
        case CliffordGate::X: p.conjugate_x(t[0]); break;
        case CliffordGate::Y: p.conjugate_y(t[0]); break;
        case CliffordGate::Z: p.conjugate_z(t[0]); break;
        case CliffordGate::CZ: p.conjugate_cz(t[0], t[1]); break;
        case CliffordGate::CNOT: p.conjugate_cnot(t[0], t[1]); break;
    }
}

}  // namespace

std::size_t gate_arity(CliffordGate g) { return g == CliffordGate::CZ || g == CliffordGate::CNOT ? 2 : 1; }

Mat2 gate_matrix(CliffordGate g) {
    switch (g) {
        case CliffordGate::H: return gates::hadamard();
        case CliffordGate::S: return gates::phase_s();
        case CliffordGate::Sdg: return gates::phase_sdg();
        case CliffordGate::X: return gates::pauli_x();
        case CliffordGate::Y: return gates::pauli_y();
        case CliffordGate::Z: return gates::pauli_z();
        default: throw Error(ErrorCode::InvalidArity, "two-qubit gate has no 2x2 matrix");
    }
}

Tableau::Tableau(std::size_t n) : n_(n) {
    for (std::size_t q = 0; q < n; ++q) {
        destab_.push_back(PauliString::single(n, q, 'X'));
        stab_.push_back(PauliString::single(n, q, 'Z'));
    }
}

Tableau Tableau::from_generators(std::vector<PauliString> generators) {
    const std::size_t n = generators.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (generators[i].num_qubits() != n) {
            throw Error(ErrorCode::InvalidTableau, "expected " + std::to_string(n) + " generators on " +
                                                       std::to_string(n) + " qubits");
        }
        if (!generators[i].hermitian()) {
            throw Error(ErrorCode::BadPhase, "generator " + std::to_string(i) + " has an imaginary phase");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (!generators[i].commutes_with(generators[j])) {
                throw Error(ErrorCode::InvalidTableau,
                            "generators " + std::to_string(j) + " and " + std::to_string(i) + " anticommute");
            }
        }
    }
    Tableau t(0);
    t.n_ = n;
    t.destab_ = complete_destabilizers(generators);
    t.stab_ = std::move(generators);
    return t;
}

void Tableau::check_qubit(std::size_t q) const {
    if (q >= n_) throw Error(ErrorCode::QubitOutOfRange, "qubit " + std::to_string(q) + " outside " + std::to_string(n_));
}

void Tableau::apply(CliffordGate gate, std::span<const std::size_t> targets) {
    check_targets(n_, targets, gate_arity(gate));
    for (auto &row : destab_) conjugate(row, gate, targets);
    for (auto &row : stab_) conjugate(row, gate, targets);
}

void Tableau::apply(CliffordGate gate, std::size_t q) {
    const std::size_t t[1] = {q};
    apply(gate, t);
}

void Tableau::apply(CliffordGate gate, std::size_t a, std::size_t b) {
    const std::size_t t[2] = {a, b};
    apply(gate, t);
}

Tableau::Outcome Tableau::measure(const PauliString &p, OutcomeSource source) {
    if (p.num_qubits() != n_) throw Error(ErrorCode::DimensionMismatch, "Pauli length does not match tableau");
    if (!p.hermitian()) throw Error(ErrorCode::BadPhase, "measured Pauli must have a real phase");
    int forced = -1;
    if (std::holds_alternative<std::size_t>(source)) {
        std::size_t value = std::get<std::size_t>(source);
        if (value > 1) throw Error(ErrorCode::BadForcedOutcomes, "forced Pauli outcome must be 0 or 1");
        forced = static_cast<int>(value);
    }

    std::size_t pivot = n_;
    for (std::size_t i = 0; i < n_; ++i) {
        if (!stab_[i].commutes_with(p)) {
            pivot = i;
            break;
        }
    }

    if (pivot < n_) {
        int bit = forced >= 0 ? forced : static_cast<int>(std::get<std::reference_wrapper<Rng>>(source).get()() >> 63);
        for (std::size_t i = 0; i < n_; ++i) {
            if (i != pivot && !destab_[i].commutes_with(p)) destab_[i] *= stab_[pivot];
            if (i != pivot && !stab_[i].commutes_with(p)) stab_[i] *= stab_[pivot];
        }
        destab_[pivot] = stab_[pivot];
        stab_[pivot] = p;
        if (bit) stab_[pivot].negate();
        return {bit, false};
    }

    // p (up to sign) is in the stabilizer group: the product of the generators
    // whose destabilizers anticommute with p.
    PauliString product(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (!destab_[i].commutes_with(p)) product *= stab_[i];
    }
    int bit = product.sign() == p.sign() ? 0 : 1;
    if (forced >= 0 && forced != bit) {
        throw Error(ErrorCode::ZeroProbabilityBranch, "outcome of " + p.str() + " is deterministically " +
                                                          std::to_string(bit));
    }
    return {bit, true};
}

bool Tableau::is_valid() const {
    for (std::size_t i = 0; i < n_; ++i) {
        if (!stab_[i].hermitian()) return false;
        for (std::size_t j = 0; j < n_; ++j) {
            if (j < i && !stab_[i].commutes_with(stab_[j])) return false;
            if (j < i && !destab_[i].commutes_with(destab_[j])) return false;
            if (destab_[i].commutes_with(stab_[j]) != (i != j)) return false;
        }
    }
    // The pairing above already forces independence; check rank anyway.
    std::vector<detail::BitRow> rows(n_, detail::BitRow(2 * n_));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t q = 0; q < n_; ++q) {
            rows[i].set(q, stab_[i].x(q));
            rows[i].set(n_ + q, stab_[i].z(q));
        }
    }
    return detail::rank(rows, 2 * n_) == n_;
}

Tableau tableau_graph_state(const Graph &g) {
    const std::size_t n = g.num_vertices();
    std::vector<PauliString> gens;
    for (Vertex a = 0; a < n; ++a) {
        PauliString p = PauliString::single(n, a, 'X');
        for (Vertex b : g.neighbors(a)) p.set(b, 'Z');
        gens.push_back(std::move(p));
    }
    return Tableau::from_generators(std::move(gens));
}

Tableau apply_clifford(Tableau t, CliffordGate gate, std::span<const std::size_t> targets) {
    t.apply(gate, targets);
    return t;
}

PauliMeasurement measure_pauli(Tableau t, const PauliString &p, OutcomeSource source) {
    auto outcome = t.measure(p, source);
    return {outcome.bit, outcome.deterministic, std::move(t)};
}

StateVector apply_pauli(const StateVector &s, const PauliString &p) {
    if (p.num_qubits() != s.num_qubits()) throw Error(ErrorCode::DimensionMismatch, "Pauli length mismatch");
    std::size_t xmask = 0, zmask = 0;
    int ys = 0;
    for (std::size_t q = 0; q < p.num_qubits(); ++q) {
        if (p.x(q)) xmask |= std::size_t{1} << q;
        if (p.z(q)) zmask |= std::size_t{1} << q;
        ys += p.x(q) && p.z(q);
    }
    static const Complex kPowers[4] = {1.0, Complex(0, 1), -1.0, Complex(0, -1)};
    const Complex global = kPowers[(p.phase() + ys) & 3];
    std::vector<Complex> out(s.dimension());
    auto amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        double sign = (std::popcount(i & zmask) & 1) ? -1.0 : 1.0;
        out[i ^ xmask] = global * sign * amps[i];
    }
    return StateVector::from_amplitudes(s.num_qubits(), std::move(out));
}

StateVector to_state_vector(const Tableau &t) {
    const std::size_t n = t.num_qubits();
    if (n > kDenseQubitCap) throw Error(ErrorCode::TooLarge, "tableau too large for dense conversion");
    if (n == 0) return StateVector();
    // Generic reference vector; its overlap with any fixed state is nonzero.
    std::vector<Complex> ref(std::size_t{1} << n);
    for (std::size_t i = 0; i < ref.size(); ++i) {
        double a = 0.61803398874989 * static_cast<double>(i + 1);
        ref[i] = Complex(std::cos(7.0 * a) + 1.5, std::sin(3.0 * a + 0.25));
    }
    StateVector v = StateVector::from_amplitudes(n, std::move(ref));
    for (const auto &g : t.generators()) {
        StateVector gv = apply_pauli(v, g);
        std::vector<Complex> sum(v.dimension());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = v.amplitudes()[i] + gv.amplitudes()[i];
        v = StateVector::from_amplitudes(n, std::move(sum));
    }
    return v;
}

}  // namespace vbsq
