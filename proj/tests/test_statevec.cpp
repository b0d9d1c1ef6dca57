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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "testing.hpp"
#include "vbsq/statevec.hpp"

namespace vbsq {
namespace {

using testing::error_of;
using testing::to_eigen;

constexpr double kTol = 1e-12;

void expect_amplitudes(const StateVector &s, std::vector<Complex> want, double tol = kTol) {
    ASSERT_EQ(s.dimension(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_LT(std::abs(s.amplitude(i) - want[i]), tol) << i;
}

const StateVector &bond() {
    static const StateVector h = StateVector::from_amplitudes(2, {0.5, 0.5, 0.5, -0.5});
    return h;
}

TEST(StateVector, PlusAndBasisStates) {
    expect_amplitudes(plus_state(1), {kInvSqrt2, kInvSqrt2});
    expect_amplitudes(plus_state(2), {0.5, 0.5, 0.5, 0.5});
    expect_amplitudes(basis_state({1, 0}), {0, 1, 0, 0});
    EXPECT_EQ(error_of([] { plus_state(0); }), ErrorCode::InvalidDimension);
}

TEST(StateVector, CzOnPlusPairIsBondState) {
    StateVector s = plus_state(2);
    s.apply_cz(0, 1);
    EXPECT_TRUE(equal_exact(s, bond(), kTol));
}

TEST(StateVector, HadamardMapsZeroToPlus) {
    StateVector s = basis_state({0});
    s.apply_1q(gates::hadamard(), 0);
    EXPECT_TRUE(equal_exact(s, plus_state(1), kTol));
    // H = |+><0| + |-><1|
    const Mat2 h = gates::hadamard();
    EXPECT_NEAR(h(0, 1).real(), kInvSqrt2, kTol);
    EXPECT_NEAR(h(1, 1).real(), -kInvSqrt2, kTol);
}

TEST(StateVector, IdentityIsExact) {
    Rng rng(3);
    StateVector s = testing::random_state(3, rng);
    StateVector t = s;
    t.apply_1q(gates::identity(), 1);
    EXPECT_TRUE(equal_exact(s, t, 0.0));
}

TEST(StateVector, GateErrors) {
    StateVector s = plus_state(2);
    Mat2 bad = gates::identity();
    bad(0, 0) = 2;
    EXPECT_EQ(error_of([&] { s.apply_1q(bad, 0); }), ErrorCode::NotUnitary);
    EXPECT_EQ(error_of([&] { s.apply_1q(gates::hadamard(), 2); }), ErrorCode::QubitOutOfRange);
    EXPECT_EQ(error_of([&] { s.apply_cz(1, 1); }), ErrorCode::QubitOutOfRange);
}

// Gate kernels against explicit Kronecker-product operators.
TEST(StateVector, GatesMatchDenseOperators) {
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        StateVector s = testing::random_state(n, rng);
        Eigen::VectorXcd v = to_eigen(s);
        for (int step = 0; step < 6; ++step) {
            if (n > 1 && rng() % 3 == 0) {
                std::size_t a = rng() % n, b = rng() % n;
                if (a == b) b = (a + 1) % n;
                s.apply_cz(a, b);
                v = testing::cz_matrix(a, b, n) * v;
            } else {
                const std::size_t q = rng() % n;
                const Mat2 u = testing::random_unitary(rng);
                s.apply_1q(u, q);
                v = testing::lift_1q(u, q, n) * v;
            }
            EXPECT_NEAR(s.norm(), 1.0, 1e-10);
        }
        for (std::size_t i = 0; i < s.dimension(); ++i) {
            EXPECT_LT(std::abs(s.amplitude(i) - v(static_cast<Eigen::Index>(i))), 1e-10);
        }
    }
}

TEST(GraphState, Examples) {
    EXPECT_TRUE(equal_exact(graph_state(Graph(2, {{0, 1}})), bond(), kTol));
    EXPECT_TRUE(equal_exact(graph_state(Graph(2, {})), plus_state(2), kTol));
    EXPECT_EQ(error_of([] { graph_state(chain(21)); }), ErrorCode::TooLarge);
}

// K_a = X_a prod_{b~a} Z_b fixes the state, checked with dense operators.
TEST(GraphState, StabilizedByVertexOperators) {
    Rng rng(2);
    std::vector<Graph> graphs{chain(3), grid(2, 3), honeycomb(1, 1)};
    for (int i = 0; i < 10; ++i) graphs.push_back(testing::random_graph(2 + rng() % 5, 0.5, rng));
    for (const Graph &g : graphs) {
        const std::size_t n = g.num_vertices();
        const Eigen::VectorXcd psi = to_eigen(graph_state(g));
        for (Vertex a = 0; a < n; ++a) {
            Eigen::MatrixXcd k = testing::lift_1q(gates::pauli_x(), a, n);
            for (Vertex b : g.neighbors(a)) k = testing::lift_1q(gates::pauli_z(), b, n) * k;
            EXPECT_LT((k * psi - psi).norm(), 1e-12);
        }
    }
}

TEST(GraphState, CzOrderIrrelevant) {
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testing::random_graph(6, 0.5, rng);
        auto edges = g.edges();
        StateVector a = plus_state(6), b = plus_state(6);
        for (auto [u, v] : edges) a.apply_cz(u, v);
        std::shuffle(edges.begin(), edges.end(), rng);
        for (auto [u, v] : edges) b.apply_cz(v, u);
        EXPECT_TRUE(equal_exact(a, b, 1e-12));
        EXPECT_TRUE(equal_exact(a, graph_state(g), 1e-12));
    }
}

std::vector<Ket> z_basis() { return {{1, 0}, {0, 1}}; }
std::vector<Ket> x_basis() { return {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}; }

TEST(Measure, PlusInZBasis) {
    const std::vector<std::size_t> qs{0};
    auto basis = z_basis();
    for (std::size_t k = 0; k < 2; ++k) {
        Measurement m = measure_in_basis(plus_state(1), qs, basis, k);
        EXPECT_NEAR(m.probability, 0.5, kTol);
        EXPECT_TRUE(equal_exact(m.state, basis_state({static_cast<int>(k)}), kTol));
    }
}

TEST(Measure, BondStateInItsOwnBellBasis) {
    // Basis kets (sigma_alpha (x) 1)|H>, built here by hand.
    std::vector<Ket> basis;
    const Eigen::VectorXcd h = to_eigen(bond());
    for (int alpha = 0; alpha < 4; ++alpha) {
        Eigen::VectorXcd k = testing::lift_1q(gates::pauli(alpha), 0, 2) * h;
        basis.emplace_back(k.data(), k.data() + 4);
    }
    const std::vector<std::size_t> qs{0, 1};
    Measurement m = measure_in_basis(bond(), qs, basis, std::size_t{0});
    EXPECT_NEAR(m.probability, 1.0, kTol);
    for (std::size_t k = 1; k < 4; ++k) {
        EXPECT_EQ(error_of([&] { measure_in_basis(bond(), qs, basis, k); }), ErrorCode::ZeroProbabilityBranch);
    }
}

TEST(Measure, ForcedMinusCollapses) {
    const std::vector<std::size_t> qs{0};
    auto basis = x_basis();
    Measurement m = measure_in_basis(basis_state({0, 0}), qs, basis, std::size_t{1});
    EXPECT_NEAR(m.probability, 0.5, kTol);
    expect_amplitudes(m.state, {kInvSqrt2, -kInvSqrt2, 0, 0});
}

TEST(Measure, BadBasisRejected) {
    const std::vector<std::size_t> qs{0};
    std::vector<Ket> not_orthogonal{{1, 0}, {kInvSqrt2, kInvSqrt2}};
    std::vector<Ket> incomplete{{1, 0}};
    EXPECT_EQ(error_of([&] { measure_in_basis(plus_state(1), qs, not_orthogonal, std::size_t{0}); }), ErrorCode::BadBasis);
    EXPECT_EQ(error_of([&] { measure_in_basis(plus_state(1), qs, incomplete, std::size_t{0}); }), ErrorCode::BadBasis);
}

TEST(Measure, ProbabilitiesSumToOne) {
    Rng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        StateVector s = testing::random_state(4, rng);
        // random single-qubit basis: columns of a Haar unitary
        const Mat2 u = testing::random_unitary(rng);
        std::vector<Ket> basis{{u(0, 0), u(1, 0)}, {u(0, 1), u(1, 1)}};
        const std::vector<std::size_t> qs{rng() % 4};
        double total = 0;
        for (std::size_t k = 0; k < 2; ++k) {
            Measurement m = measure_in_basis(s, qs, basis, k);
            total += m.probability;
            EXPECT_NEAR(m.state.norm(), 1.0, 1e-10);
        }
        EXPECT_NEAR(total, 1.0, 1e-10);
    }
}

TEST(Measure, RandomOutcomeFrequencies) {
    Rng rng(99);
    const std::vector<std::size_t> qs{0};
    auto basis = z_basis();
    StateVector s = StateVector::from_amplitudes(1, {std::sqrt(0.2), std::sqrt(0.8)});
    int ones = 0;
    const int trials = 4000;
    for (int i = 0; i < trials; ++i) ones += measure_in_basis(s, qs, basis, std::ref(rng)).outcome == 1;
    EXPECT_NEAR(ones / double(trials), 0.8, 0.03);
}

TEST(Fidelity, Examples) {
    const StateVector zero = basis_state({0});
    for (double theta : {0.0, 0.7, 2.0, -3.1}) {
        StateVector t = StateVector::from_amplitudes(1, {std::polar(1.0, theta), 0});
        EXPECT_NEAR(fidelity_up_to_phase(zero, t), 1.0, kTol);
    }
    EXPECT_NEAR(fidelity_up_to_phase(zero, basis_state({1})), 0.0, kTol);
    EXPECT_NEAR(fidelity_up_to_phase(plus_state(1), zero), 0.5, kTol);
    EXPECT_EQ(error_of([&] { fidelity_up_to_phase(zero, plus_state(2)); }), ErrorCode::DimensionMismatch);
}

TEST(Entropy, Examples) {
    const std::vector<std::size_t> a{0};
    EXPECT_NEAR(entropy_bits(bond(), a), 1.0, 1e-10);
    EXPECT_NEAR(entropy_bits(basis_state({0, 0}), a), 0.0, 1e-10);
    const std::vector<std::size_t> mid{1};
    EXPECT_NEAR(entropy_bits(graph_state(chain(3)), mid), 1.0, 1e-10);
    EXPECT_NEAR(testing::brute_entropy(graph_state(chain(3)), {1}), 1.0, 1e-10);
}

TEST(Entropy, SubsetErrors) {
    const StateVector s = plus_state(2);
    const std::vector<std::size_t> none, all{0, 1}, twice{0, 0};
    EXPECT_EQ(error_of([&] { entropy_bits(s, none); }), ErrorCode::InvalidSubset);
    EXPECT_EQ(error_of([&] { entropy_bits(s, all); }), ErrorCode::InvalidSubset);
    EXPECT_EQ(error_of([&] { reduced_density(s, twice); }), ErrorCode::InvalidSubset);
}

TEST(Entropy, MatchesPartialTraceAndComplement) {
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng() % 5;
        StateVector s = testing::random_state(n, rng);
        auto region = testing::random_region(n, rng);
        std::vector<std::size_t> rest;
        for (std::size_t q = 0; q < n; ++q) {
            if (std::find(region.begin(), region.end(), q) == region.end()) rest.push_back(q);
        }
        const double h = entropy_bits(s, region);
        EXPECT_NEAR(h, testing::brute_entropy(s, region), 1e-8);
        EXPECT_NEAR(h, entropy_bits(s, rest), 1e-8);
    }
}

TEST(DensityMatrix, HermitianUnitTracePsd) {
    Rng rng(6);
    StateVector s = testing::random_state(4, rng);
    const std::vector<std::size_t> sub{2, 0};
    DensityMatrix dm = reduced_density(s, sub);
    EXPECT_LT((dm.rho - dm.rho.adjoint()).norm(), 1e-10);
    EXPECT_NEAR(dm.rho.trace().real(), 1.0, 1e-10);
    for (double p : spectrum(dm)) EXPECT_GE(p, -1e-10);
}

}  // namespace
}  // namespace vbsq
