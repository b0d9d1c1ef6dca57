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

// Two-body parent Hamiltonian on the virtual register and its exact
// diagonalization (Lanczos with full reorthogonalization).

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numeric>
#include <string>

#include "vbsq/error.hpp"
#include "vbsq/vbs.hpp"

namespace vbsq {

namespace {

using RealVec = std::vector<double>;

double dot(const RealVec &a, const RealVec &b) { return std::inner_product(a.begin(), a.end(), b.begin(), 0.0); }

void axpy(double s, const RealVec &x, RealVec &y) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += s * x[i];
}

void orthogonalize(RealVec &w, const std::vector<RealVec> &basis) {
    for (const auto &b : basis) axpy(-dot(b, w), b, w);
}

bool normalize(RealVec &v) {
    const double nrm = std::sqrt(dot(v, v));
    if (nrm < 1e-14) return false;
    for (double &x : v) x /= nrm;
    return true;
}

struct EigenPair {
    double value;
    RealVec vector;
};

/// Lowest eigenpair of the operator restricted to the orthogonal complement of
/// `deflate` (orthonormal vectors).
template <class Apply>
EigenPair lanczos_lowest(const Apply &apply, std::size_t dim, const std::vector<RealVec> &deflate) {
    RealVec start(dim);
    Rng rng(0x5eed);
    for (double &x : start) x = uniform01(rng) - 0.5;

    EigenPair best{0, {}};
    for (int restart = 0; restart < 20; ++restart) {
        orthogonalize(start, deflate);
        if (!normalize(start)) throw Error(ErrorCode::InvalidDimension, "deflated space is empty");
        const std::size_t max_steps = std::min<std::size_t>(dim - deflate.size(), 200);

        std::vector<RealVec> basis{start};
        std::vector<double> alpha, beta;
        for (std::size_t j = 0; j < max_steps; ++j) {
            RealVec w = apply(basis[j]);
            orthogonalize(w, deflate);
            alpha.push_back(dot(basis[j], w));
            // Two passes of Gram-Schmidt against the whole Krylov basis.
            orthogonalize(w, basis);
            orthogonalize(w, basis);
            orthogonalize(w, deflate);
            const double b = std::sqrt(dot(w, w));
            if (j + 1 == max_steps || b < 1e-12) break;
            beta.push_back(b);
            for (double &x : w) x /= b;
            basis.push_back(std::move(w));
        }

        const auto m = static_cast<Eigen::Index>(alpha.size());
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
        for (Eigen::Index i = 0; i < m; ++i) {
            t(i, i) = alpha[static_cast<std::size_t>(i)];
            if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
        const Eigen::VectorXd coeffs = solver.eigenvectors().col(0);
        RealVec ritz(dim, 0.0);
        for (Eigen::Index i = 0; i < m; ++i) axpy(coeffs(i), basis[static_cast<std::size_t>(i)], ritz);
        orthogonalize(ritz, deflate);
        normalize(ritz);

        RealVec residual = apply(ritz);
        orthogonalize(residual, deflate);
        const double theta = dot(ritz, residual);
        axpy(-theta, ritz, residual);
        best = {theta, ritz};
        if (std::sqrt(dot(residual, residual)) < 1e-10) break;
        start = std::move(ritz);
    }
    return best;
}

RealVec singlet_product_real(const VbsSpec &spec) {
    const std::size_t nv = spec.num_virtual();
    RealVec amps(std::size_t{1} << nv);
    const double singlet[4] = {0, kInvSqrt2, -kInvSqrt2, 0};
    for (std::size_t i = 0; i < amps.size(); ++i) {
        double a = 1;
        for (std::size_t k = 0; k < spec.graph.num_edges() && a != 0; ++k) {
            const auto [u, v] = spec.graph.edges()[k];
            const std::size_t bu = (i >> spec.virtual_index(u, spec.edge_slots[k].first)) & 1;
            const std::size_t bv = (i >> spec.virtual_index(v, spec.edge_slots[k].second)) & 1;
            a *= singlet[bu | (bv << 1)];
        }
        amps[i] = a;
    }
    return amps;
}

}  // namespace

Eigen::Matrix4d edge_hamiltonian() {
    Eigen::Matrix4cd h = Eigen::Matrix4cd::Identity() * 3.0;
    for (int alpha = 1; alpha <= 3; ++alpha) {
        const Mat2 s = gates::pauli(alpha);
        // Little-endian: row/column index = b0 | b1 << 1.
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) h(r, c) += s(r & 1, c & 1) * s(r >> 1, c >> 1);
        }
    }
    return h.real();
}

StateVector singlet_product(const VbsSpec &spec) {
    if (spec.num_virtual() > kMaxDenseQubits) throw Error(ErrorCode::TooLarge, "virtual register too large");
    auto real = singlet_product_real(spec);
    return StateVector::from_amplitudes(spec.num_virtual(), std::vector<Complex>(real.begin(), real.end()));
}

std::vector<double> apply_patch_hamiltonian(const VbsSpec &spec, const std::vector<double> &v) {
    const Eigen::Matrix4d h = edge_hamiltonian();
    RealVec out(v.size(), 0.0);
    for (std::size_t k = 0; k < spec.graph.num_edges(); ++k) {
        const auto [u, w] = spec.graph.edges()[k];
        const std::size_t ma = std::size_t{1} << spec.virtual_index(u, spec.edge_slots[k].first);
        const std::size_t mb = std::size_t{1} << spec.virtual_index(w, spec.edge_slots[k].second);
        for (std::size_t base = 0; base < v.size(); ++base) {
            if (base & (ma | mb)) continue;
            const std::size_t idx[4] = {base, base | ma, base | mb, base | ma | mb};
            for (int r = 0; r < 4; ++r) {
                double acc = 0;
                for (int c = 0; c < 4; ++c) acc += h(r, c) * v[idx[c]];
                out[idx[r]] += acc;
            }
        }
    }
    return out;
}

ToyModelReport toy_model_check(const Graph &patch) {
    if (patch.num_edges() == 0) throw Error(ErrorCode::InvalidDimension, "patch has no edges");
    for (Vertex v = 0; v < patch.num_vertices(); ++v) {
        if (patch.degree(v) == 0) {
            throw Error(ErrorCode::InvalidDimension, "patch vertex " + std::to_string(v) + " is isolated");
        }
    }
    const VbsSpec spec = make_vbs_spec(patch);
    ToyModelReport report;
    report.virtual_qubits = spec.num_virtual();
    if (report.virtual_qubits > kToyModelMaxVirtual) {
        throw Error(ErrorCode::TooLarge, "patch has " + std::to_string(report.virtual_qubits) +
                                             " virtual qubits, limit is " + std::to_string(kToyModelMaxVirtual));
    }

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> edge(edge_hamiltonian());
    for (int i = 0; i < 4; ++i) report.edge_spectrum.push_back(edge.eigenvalues()(i));
    const Eigen::Vector4d kernel = edge.eigenvectors().col(0);
    const double overlap = kernel(1) * kInvSqrt2 - kernel(2) * kInvSqrt2;
    report.edge_kernel_singlet_fidelity = overlap * overlap;

    const std::size_t dim = std::size_t{1} << report.virtual_qubits;
    auto apply = [&spec](const RealVec &v) { return apply_patch_hamiltonian(spec, v); };
    const RealVec singlets = singlet_product_real(spec);
    report.singlet_product_energy = dot(singlets, apply(singlets));

    const EigenPair ground = lanczos_lowest(apply, dim, {});
    report.ground_energy = ground.value;
    const double g_overlap = dot(ground.vector, singlets);
    report.ground_singlet_fidelity = g_overlap * g_overlap;
    if (dim > 1) {
        report.first_excited_energy = lanczos_lowest(apply, dim, {ground.vector}).value;
    }
    report.unique_ground_state = report.first_excited_energy - report.ground_energy > 1e-6;

    constexpr double tol = 1e-9;
    const double expected[4] = {0, 4, 4, 4};
    bool edge_ok = report.edge_kernel_singlet_fidelity > 1 - tol;
    for (int i = 0; i < 4; ++i) edge_ok = edge_ok && std::abs(report.edge_spectrum[i] - expected[i]) < tol;
    report.passed = edge_ok && std::abs(report.singlet_product_energy) < tol && std::abs(report.ground_energy) < tol &&
                    report.unique_ground_state && report.ground_singlet_fidelity > 1 - tol;
    return report;
}

}  // namespace vbsq
