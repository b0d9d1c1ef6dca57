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

#include "vbsq/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vbsq/error.hpp"

namespace vbsq {

namespace {

/// Splits basis indices of an n-qubit register into (local bits over qs,
/// remaining bits in ascending qubit order).
struct IndexSplit {
    std::size_t n;
    std::vector<std::size_t> qs;
    std::vector<std::size_t> rest;

    IndexSplit(std::size_t n_, std::span<const std::size_t> qs_) : n(n_), qs(qs_.begin(), qs_.end()) {
        std::vector<std::uint8_t> in(n, 0);
        for (std::size_t q : qs) {
            if (q >= n) {
                throw Error(ErrorCode::QubitOutOfRange,
                            "qubit " + std::to_string(q) + " outside register of " + std::to_string(n));
            }
            if (in[q]) throw Error(ErrorCode::InvalidSubset, "qubit " + std::to_string(q) + " listed twice");
            in[q] = 1;
        }
        for (std::size_t q = 0; q < n; ++q) {
            if (!in[q]) rest.push_back(q);
        }
    }

    /// Full index from (local, remaining) parts.
    std::size_t join(std::size_t local, std::size_t remaining) const {
        std::size_t full = 0;
        for (std::size_t j = 0; j < qs.size(); ++j) full |= ((local >> j) & 1) << qs[j];
        for (std::size_t j = 0; j < rest.size(); ++j) full |= ((remaining >> j) & 1) << rest[j];
        return full;
    }
};

void check_register_size(std::size_t n) {
    if (n > kMaxDenseQubits) {
        throw Error(ErrorCode::TooLarge, std::to_string(n) + " qubits exceeds the dense limit of " +
                                             std::to_string(kMaxDenseQubits));
    }
}

double squared_norm(std::span<const Complex> v) {
    double total = 0;
    for (const auto &a : v) total += std::norm(a);
    return total;
}

void check_basis(std::size_t k, std::span<const Ket> basis) {
    const std::size_t dim = std::size_t{1} << k;
    if (basis.size() != dim) {
        throw Error(ErrorCode::BadBasis, "basis over " + std::to_string(k) + " qubit(s) needs " +
                                             std::to_string(dim) + " kets, got " + std::to_string(basis.size()));
    }
    for (std::size_t a = 0; a < dim; ++a) {
        if (basis[a].size() != dim) throw Error(ErrorCode::BadBasis, "basis ket has wrong dimension");
        for (std::size_t b = a; b < dim; ++b) {
            Complex overlap = 0;
            for (std::size_t i = 0; i < dim; ++i) overlap += std::conj(basis[a][i]) * basis[b][i];
            Complex expected = a == b ? 1.0 : 0.0;
            if (std::abs(overlap - expected) > 1e-10) {
                throw Error(ErrorCode::BadBasis, "basis kets " + std::to_string(a) + " and " + std::to_string(b) +
                                                     " are not orthonormal");
            }
        }
    }
}

/// Unnormalized (<bra| (x) 1)|s> over the remaining qubits.
std::vector<Complex> contract(const StateVector &s, const IndexSplit &split, const Ket &bra) {
    const std::size_t local_dim = std::size_t{1} << split.qs.size();
    const std::size_t rest_dim = std::size_t{1} << split.rest.size();
    std::vector<Complex> out(rest_dim, 0.0);
    auto amps = s.amplitudes();
    for (std::size_t r = 0; r < rest_dim; ++r) {
        Complex acc = 0;
        for (std::size_t l = 0; l < local_dim; ++l) acc += std::conj(bra[l]) * amps[split.join(l, r)];
        out[r] = acc;
    }
    return out;
}

std::vector<Complex> embed(const IndexSplit &split, const Ket &ket, std::span<const Complex> rest) {
    std::vector<Complex> out(std::size_t{1} << split.n, 0.0);
    for (std::size_t r = 0; r < rest.size(); ++r) {
        for (std::size_t l = 0; l < ket.size(); ++l) out[split.join(l, r)] = ket[l] * rest[r];
    }
    return out;
}

Measurement measure_impl(const StateVector &s, std::span<const std::size_t> qs, std::span<const Ket> basis,
                         OutcomeSource source, bool discard) {
    IndexSplit split(s.num_qubits(), qs);
    check_basis(qs.size(), basis);

    std::size_t chosen = 0;
    std::vector<Complex> branch;
    double probability = 0;
    if (std::holds_alternative<std::size_t>(source)) {
        chosen = std::get<std::size_t>(source);
        if (chosen >= basis.size()) {
            throw Error(ErrorCode::ZeroProbabilityBranch, "forced outcome " + std::to_string(chosen) +
                                                              " outside basis of size " +
                                                              std::to_string(basis.size()));
        }
        branch = contract(s, split, basis[chosen]);
        probability = squared_norm(branch);
        if (probability < kImpossibleBranch) {
            throw Error(ErrorCode::ZeroProbabilityBranch,
                        "forced outcome " + std::to_string(chosen) + " has probability " + std::to_string(probability));
        }
    } else {
        Rng &rng = std::get<std::reference_wrapper<Rng>>(source).get();
        std::vector<std::vector<Complex>> branches;
        std::vector<double> probs;
        for (const auto &ket : basis) {
            branches.push_back(contract(s, split, ket));
            probs.push_back(squared_norm(branches.back()));
        }
        double total = 0;
        for (double p : probs) total += p;
        double r = uniform01(rng) * total;
        chosen = basis.size();
        for (std::size_t i = 0; i < probs.size(); ++i) {
            if (probs[i] < kImpossibleBranch) continue;
            chosen = i;
            if (r < probs[i]) break;
            r -= probs[i];
        }
        branch = std::move(branches[chosen]);
        probability = probs[chosen];
    }

    std::vector<Complex> amps;
    std::size_t n_out = s.num_qubits();
    if (discard) {
        amps = std::move(branch);
        n_out -= qs.size();
    } else {
        amps = embed(split, basis[chosen], branch);
    }
    return {chosen, probability, StateVector::from_amplitudes(n_out, std::move(amps))};
}

}  // namespace

double uniform01(Rng &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

StateVector::StateVector() : n_(0), amps_{1.0} {}

StateVector StateVector::from_amplitudes(std::size_t n, std::vector<Complex> amps) {
    check_register_size(n);
    if (amps.size() != (std::size_t{1} << n)) {
        throw Error(ErrorCode::InvalidDimension,
                    std::to_string(amps.size()) + " amplitudes do not describe " + std::to_string(n) + " qubits");
    }
    double nrm = std::sqrt(squared_norm(amps));
    if (!(nrm > 0) || !std::isfinite(nrm)) throw Error(ErrorCode::DegenerateProjection, "zero or non-finite state");
    for (auto &a : amps) a /= nrm;
    return StateVector(n, std::move(amps));
}

double StateVector::norm() const { return std::sqrt(squared_norm(amps_)); }

void StateVector::check_qubit(std::size_t q) const {
    if (q >= n_) {
        throw Error(ErrorCode::QubitOutOfRange,
                    "qubit " + std::to_string(q) + " outside register of " + std::to_string(n_));
    }
}

void StateVector::apply_1q(const Mat2 &u, std::size_t q) {
    check_qubit(q);
    if (!is_unitary(u)) throw Error(ErrorCode::NotUnitary, "single-qubit gate is not unitary");
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        Complex a0 = amps_[i], a1 = amps_[i | bit];
        amps_[i] = u(0, 0) * a0 + u(0, 1) * a1;
        amps_[i | bit] = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

void StateVector::apply_cz(std::size_t q1, std::size_t q2) {
    check_qubit(q1);
    check_qubit(q2);
    if (q1 == q2) throw Error(ErrorCode::QubitOutOfRange, "CZ needs two distinct qubits");
    const std::size_t mask = (std::size_t{1} << q1) | (std::size_t{1} << q2);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == mask) amps_[i] = -amps_[i];
    }
}

void StateVector::apply_cnot(std::size_t control, std::size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) throw Error(ErrorCode::QubitOutOfRange, "CNOT needs two distinct qubits");
    const std::size_t cbit = std::size_t{1} << control, tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
    }
}

void StateVector::append(const StateVector &other) {
    check_register_size(n_ + other.n_);
    std::vector<Complex> out(amps_.size() * other.amps_.size());
    for (std::size_t hi = 0; hi < other.amps_.size(); ++hi) {
        for (std::size_t lo = 0; lo < amps_.size(); ++lo) out[(hi << n_) | lo] = other.amps_[hi] * amps_[lo];
    }
    amps_ = std::move(out);
    n_ += other.n_;
}

void StateVector::move_qubit(std::size_t from, std::size_t to) {
    check_qubit(from);
    check_qubit(to);
    if (from == to) return;
    // order[new position] = old qubit
    std::vector<std::size_t> order;
    for (std::size_t q = 0; q < n_; ++q) {
        if (q != from) order.push_back(q);
    }
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(to), from);
    std::vector<Complex> out(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        std::size_t j = 0;
        for (std::size_t p = 0; p < n_; ++p) j |= ((i >> order[p]) & 1) << p;
        out[j] = amps_[i];
    }
    amps_ = std::move(out);
}

StateVector plus_state(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidDimension, "plus_state needs at least one qubit");
    check_register_size(n);
    return StateVector::from_amplitudes(n, std::vector<Complex>(std::size_t{1} << n, 1.0));
}

StateVector basis_state(std::span<const int> bits) {
    if (bits.empty()) throw Error(ErrorCode::InvalidDimension, "basis_state needs at least one qubit");
    check_register_size(bits.size());
    std::size_t index = 0;
    for (std::size_t q = 0; q < bits.size(); ++q) {
        if (bits[q] != 0 && bits[q] != 1) throw Error(ErrorCode::InvalidDimension, "basis bits must be 0 or 1");
        index |= static_cast<std::size_t>(bits[q]) << q;
    }
    std::vector<Complex> amps(std::size_t{1} << bits.size(), 0.0);
    amps[index] = 1.0;
    return StateVector::from_amplitudes(bits.size(), std::move(amps));
}

StateVector basis_state(std::initializer_list<int> bits) {
    return basis_state(std::span<const int>(bits.begin(), bits.size()));
}

StateVector tensor(const StateVector &low, const StateVector &high) {
    StateVector out = low;
    out.append(high);
    return out;
}

StateVector graph_state(const Graph &g, std::size_t cap) {
    if (g.num_vertices() > cap) {
        throw Error(ErrorCode::TooLarge, "graph with " + std::to_string(g.num_vertices()) +
                                             " vertices exceeds the dense cap of " + std::to_string(cap));
    }
    if (g.num_vertices() == 0) return StateVector();
    StateVector s = plus_state(g.num_vertices());
    for (auto [u, v] : g.edges()) s.apply_cz(u, v);
    return s;
}

Measurement measure_in_basis(const StateVector &s, std::span<const std::size_t> qs, std::span<const Ket> basis,
                             OutcomeSource source) {
    return measure_impl(s, qs, basis, source, false);
}

Measurement measure_and_discard(const StateVector &s, std::span<const std::size_t> qs,
                                std::span<const Ket> basis, OutcomeSource source) {
    return measure_impl(s, qs, basis, source, true);
}

Measurement project_out(const StateVector &s, std::span<const std::size_t> qs, const Ket &bra) {
    IndexSplit split(s.num_qubits(), qs);
    if (bra.size() != (std::size_t{1} << qs.size())) throw Error(ErrorCode::BadBasis, "bra has wrong dimension");
    auto branch = contract(s, split, bra);
    double probability = squared_norm(branch);
    if (probability < kImpossibleBranch) {
        throw Error(ErrorCode::ZeroProbabilityBranch, "projection has probability " + std::to_string(probability));
    }
    return {0, probability, StateVector::from_amplitudes(s.num_qubits() - qs.size(), std::move(branch))};
}

double fidelity_up_to_phase(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw Error(ErrorCode::DimensionMismatch, std::to_string(a.num_qubits()) + " vs " +
                                                      std::to_string(b.num_qubits()) + " qubits");
    }
    Complex overlap = 0;
    auto x = a.amplitudes(), y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) overlap += std::conj(x[i]) * y[i];
    return std::min(1.0, std::norm(overlap));
}

bool equal_exact(const StateVector &a, const StateVector &b, double tol) {
    if (a.num_qubits() != b.num_qubits()) {
        throw Error(ErrorCode::DimensionMismatch, std::to_string(a.num_qubits()) + " vs " +
                                                      std::to_string(b.num_qubits()) + " qubits");
    }
    auto x = a.amplitudes(), y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::abs(x[i] - y[i]) > tol) return false;
    }
    return true;
}

DensityMatrix reduced_density(const StateVector &s, std::span<const std::size_t> subset) {
    if (subset.empty() || subset.size() >= s.num_qubits()) {
        throw Error(ErrorCode::InvalidSubset, "subset must be nonempty and proper");
    }
    IndexSplit split(s.num_qubits(), subset);
    const std::size_t local_dim = std::size_t{1} << subset.size();
    const std::size_t rest_dim = std::size_t{1} << split.rest.size();
    Eigen::MatrixXcd m(local_dim, rest_dim);
    auto amps = s.amplitudes();
    for (std::size_t r = 0; r < rest_dim; ++r) {
        for (std::size_t l = 0; l < local_dim; ++l) m(l, r) = amps[split.join(l, r)];
    }
    return {std::vector<std::size_t>(subset.begin(), subset.end()), m * m.adjoint()};
}

std::vector<double> spectrum(const DensityMatrix &dm) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dm.rho, Eigen::EigenvaluesOnly);
    std::vector<double> values;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) values.push_back(std::max(0.0, solver.eigenvalues()(i)));
    return values;
}

double entropy_bits(const StateVector &s, std::span<const std::size_t> subset) {
    if (subset.empty() || subset.size() >= s.num_qubits()) {
        throw Error(ErrorCode::InvalidSubset, "subset must be nonempty and proper");
    }
    IndexSplit split(s.num_qubits(), subset);
    std::span<const std::size_t> side = subset;
    if (split.rest.size() < subset.size()) side = split.rest;
    double entropy = 0;
    for (double p : spectrum(reduced_density(s, side))) {
        if (p > 0) entropy -= p * std::log2(p);
    }
    return std::max(0.0, entropy);
}

StateVector apply_matrix(const StateVector &s, const Eigen::MatrixXcd &op) {
    const auto dim = static_cast<Eigen::Index>(s.dimension());
    if (op.rows() != dim || op.cols() != dim) {
        throw Error(ErrorCode::DimensionMismatch, "operator does not match the register dimension");
    }
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = s.amplitudes()[static_cast<std::size_t>(i)];
    Eigen::VectorXcd w = op * v;
    return StateVector::from_amplitudes(s.num_qubits(), std::vector<Complex>(w.data(), w.data() + w.size()));
}

}  // namespace vbsq
