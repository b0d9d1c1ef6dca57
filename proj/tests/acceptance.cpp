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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <fmt/core.h>
#include <fmt/ranges.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "testing.hpp"
#include "vbsq/cli.hpp"
#include "vbsq/mbqc.hpp"
#include "vbsq/stabilizer.hpp"
#include "vbsq/teleport.hpp"
#include "vbsq/vbs.hpp"

namespace vbsq {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

// 1. Cluster-VBS identity.
Verdict cluster_identity() {
    Verdict v;
    const auto start = Clock::now();
    std::vector<Graph> graphs;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (auto &g : testing::connected_graphs_up_to_iso(n)) graphs.push_back(std::move(g));
    }
    const std::size_t exhaustive = graphs.size();
    Rng rng(101);
    for (int i = 0; i < 100; ++i) graphs.push_back(testing::random_graph(1 + rng() % 8, 0.4, rng));
    double worst = 1;
    for (const Graph &g : graphs) {
        worst = std::min(worst, fidelity_up_to_phase(materialize(make_vbs_spec(g)), graph_state(g)));
    }
    const double secs = seconds_since(start);
    v.require(exhaustive == 143, fmt::format("{} connected graphs enumerated, expected 143", exhaustive));
    v.require(worst >= 1 - 1e-10, fmt::format("min fidelity {:.3e}", worst));
    v.require(secs < 30, fmt::format("took {:.1f} s", secs));
    if (v.pass) v.detail = fmt::format("{} graphs, min fidelity 1-{:.1e}, {:.2f} s", graphs.size(), 1 - worst, secs);
    return v;
}

// 2. Projector algebra, with P_n built entry by entry.
Verdict projector_algebra() {
    Verdict v;
    double worst = 0;
    for (std::size_t n = 2; n <= 6; ++n) {
        const Eigen::Index dim = Eigen::Index{1} << n, half = dim / 2;
        Eigen::MatrixXcd pn = Eigen::MatrixXcd::Zero(2, dim), pm = Eigen::MatrixXcd::Zero(2, half);
        pn(0, 0) = pn(1, dim - 1) = 1;
        pm(0, 0) = pm(1, half - 1) = 1;
        for (int sign : {1, -1}) {
            // 1^{(n-1)} (x) |+-> as a dim x half matrix, ket on the low factor
            Eigen::MatrixXcd embed = Eigen::MatrixXcd::Zero(dim, half);
            for (Eigen::Index j = 0; j < half; ++j) {
                embed(2 * j, j) = kInvSqrt2;
                embed(2 * j + 1, j) = sign * kInvSqrt2;
            }
            Eigen::MatrixXcd rhs = kInvSqrt2 * pm;
            rhs.row(1) *= sign;
            worst = std::max(worst, (pn * embed - rhs).cwiseAbs().maxCoeff());

            const Ket ket{kInvSqrt2, sign * kInvSqrt2};
            Eigen::MatrixXcd lib = kAbsorbScale * projector(n - 1).matrix;
            if (sign < 0) {
                const auto m = absorb_minus(projector(n));
                v.require(m.sigma_z, "absorb_minus lost its sigma_z");
                lib = kAbsorbScale * m.projector.matrix;
                lib.row(1) *= -1;
            }
            worst = std::max(worst, (attach_virtual(projector(n), ket) - rhs).cwiseAbs().maxCoeff());
            worst = std::max(worst, (lib - rhs).cwiseAbs().maxCoeff());
        }
    }
    v.require(worst <= 1e-12, fmt::format("max entry error {:.3e}", worst));
    if (v.pass) v.detail = fmt::format("n = 2..6, max entry error {:.1e}", worst);
    return v;
}

// 3. Single-qubit gate teleportation.
Verdict teleportation() {
    Verdict v;
    Rng rng(103);
    const Eigen::Vector4cd bond(0.5, 0.5, 0.5, -0.5);
    double worst_f = 1, worst_p = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const Mat2 u = testing::random_unitary(rng);
        const StateVector psi = testing::random_state(1, rng);
        const Eigen::VectorXcd upsi = testing::lift_1q(u, 0, 1) * testing::to_eigen(psi);
        const auto basis = bell_basis_for(u);
        // register: qubit 0 = input, qubits 1, 2 = bond
        Eigen::VectorXcd full(8);
        for (Eigen::Index i = 0; i < 8; ++i) full(i) = testing::to_eigen(psi)(i & 1) * bond(i >> 1);
        for (std::size_t alpha = 0; alpha < 4; ++alpha) {
            const auto r = teleport_1q(psi, 0, u, alpha);
            const Eigen::VectorXcd want = testing::lift_1q(gates::pauli(static_cast<int>(alpha)), 0, 1) * upsi;
            worst_f = std::min(worst_f, testing::overlap2(testing::to_eigen(r.state), want));
            v.require(r.frame.wires[0] == pauli_bits(static_cast<int>(alpha)), "frame does not record alpha");
            double p = 0;
            for (Eigen::Index out = 0; out < 2; ++out) {
                Complex amp = 0;
                for (Eigen::Index ab = 0; ab < 4; ++ab) {
                    amp += std::conj(basis[alpha][static_cast<std::size_t>(ab)]) * full(ab | (out << 2));
                }
                p += std::norm(amp);
            }
            worst_p = std::max(worst_p, std::abs(p - 0.25));
        }
    }
    v.require(worst_f >= 1 - 1e-10, fmt::format("min fidelity {:.3e}", worst_f));
    v.require(worst_p <= 1e-10, fmt::format("probability off by {:.3e}", worst_p));
    if (v.pass) v.detail = fmt::format("100 unitaries x 4 branches, |p - 1/4| <= {:.1e}", worst_p);
    return v;
}

// 4. Two-qubit phase gate through three bonds.
Verdict phase_gate() {
    Verdict v;
    Rng rng(104);
    double worst = 1;
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector psi = testing::random_state(2, rng);
        const Eigen::VectorXcd target = testing::lift_1q(gates::hadamard(), 0, 2) *
                                        testing::lift_1q(gates::hadamard(), 1, 2) * testing::cz_matrix(0, 1, 2) *
                                        testing::to_eigen(psi);
        for (std::size_t k1 = 0; k1 < 8; ++k1) {
            for (std::size_t k2 = 0; k2 < 8; ++k2) {
                const auto r = teleport_phase_gate(psi, 0, 1, std::pair{k1, k2});
                const Eigen::VectorXcd want = testing::lift_1q(pauli_matrix(r.frame.wires[0]), 0, 2) *
                                              testing::lift_1q(pauli_matrix(r.frame.wires[1]), 1, 2) * target;
                worst = std::min(worst, testing::overlap2(testing::to_eigen(r.state), want));
                const auto table = phase_gate_byproduct(k1, k2);
                v.require(r.frame.wires[0] == table[0] && r.frame.wires[1] == table[1],
                          fmt::format("frame mismatch at ({}, {})", k1, k2));
            }
        }
    }
    v.require(worst >= 1 - 1e-10, fmt::format("min fidelity {:.3e}", worst));
    if (v.pass) v.detail = fmt::format("20 inputs x 64 branches, min fidelity 1-{:.1e}", 1 - worst);
    return v;
}

// 5. Compiler soundness.
Verdict compiler_soundness() {
    Verdict v;
    Rng rng(105);
    const auto start = Clock::now();
    double worst = 1;
    std::size_t exhaustive = 0, branches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t wires = 1 + rng() % 3;
        const Circuit c = testing::random_circuit(wires, 1 + rng() % 6, rng);
        VerifyOptions options;
        options.budget = 4096;
        options.samples = 256;
        options.seed = rng();
        const auto report = verify_equivalence(c, testing::random_state(wires, rng), options);
        worst = std::min(worst, report.min_fidelity);
        exhaustive += report.exhaustive;
        branches += report.branches;
        v.require(report.passed, fmt::format("circuit {} failed, min fidelity {:.3e}", trial, report.min_fidelity));
    }
    const double secs = seconds_since(start);
    v.require(worst >= 1 - 1e-9, fmt::format("min fidelity {:.3e}", worst));
    v.require(secs < 300, fmt::format("took {:.1f} s", secs));
    if (v.pass) {
        v.detail = fmt::format("200 circuits ({} exhaustive), {} branches, min fidelity 1-{:.1e}, {:.1f} s",
                               exhaustive, branches, 1 - worst, secs);
    }
    return v;
}

Eigen::MatrixXcd cnot_matrix(std::size_t control, std::size_t target, std::size_t n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const Eigen::Index j = (i >> control) & 1 ? i ^ (Eigen::Index{1} << target) : i;
        m(j, i) = 1;
    }
    return m;
}

// p |psi>, letter by letter.
Eigen::VectorXcd apply_dense_pauli(const PauliString &p, Eigen::VectorXcd psi) {
    const std::size_t n = p.num_qubits();
    for (std::size_t q = 0; q < n; ++q) {
        const char c = p.letter(q);
        if (c == 'I') continue;
        const Mat2 u = c == 'X' ? gates::pauli_x() : c == 'Y' ? gates::pauli_y() : gates::pauli_z();
        psi = testing::lift_1q(u, q, n) * psi;
    }
    return psi * std::pow(Complex(0, 1), p.phase());
}

// 6. Backend agreement.
Verdict backend_agreement() {
    Verdict v;
    Rng rng(106);
    double worst = 1;
    std::size_t measured = 0, patterns = 0;
    // Clifford circuits with forced single-qubit Pauli measurements
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        Tableau t(n);
        Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
        psi(0) = 1;
        for (int step = 0; step < 6 * static_cast<int>(n); ++step) {
            const std::size_t a = rng() % n;
            const std::size_t b = n > 1 ? (a + 1 + rng() % (n - 1)) % n : a;
            switch (rng() % 7) {
                case 0: t.apply(CliffordGate::H, a); psi = testing::lift_1q(gates::hadamard(), a, n) * psi; break;
                case 1: t.apply(CliffordGate::S, a); psi = testing::lift_1q(gates::phase_s(), a, n) * psi; break;
                case 2: t.apply(CliffordGate::X, a); psi = testing::lift_1q(gates::pauli_x(), a, n) * psi; break;
                case 3:
                    if (n > 1) {
                        t.apply(CliffordGate::CZ, a, b);
                        psi = testing::cz_matrix(a, b, n) * psi;
                    }
                    break;
                case 4:
                    if (n > 1) {
                        t.apply(CliffordGate::CNOT, a, b);
                        psi = cnot_matrix(a, b, n) * psi;
                    }
                    break;
                default: {
                    const char letters[] = "XYZ";
                    const PauliString p = PauliString::single(n, a, letters[rng() % 3]);
                    const std::size_t want = rng() & 1;
                    const Eigen::VectorXcd proj = 0.5 * (psi + (want ? -1.0 : 1.0) * apply_dense_pauli(p, psi));
                    if (proj.norm() < 1e-6) break;  // impossible branch
                    t.measure(p, want);
                    psi = proj.normalized();
                    ++measured;
                }
            }
        }
        worst = std::min(worst, testing::overlap2(testing::to_eigen(to_state_vector(canonical_form(t))), psi));
    }
    // compiled Clifford patterns, branch drawn on the dense backend and replayed
    while (patterns < 100) {
        const std::size_t wires = 1 + rng() % 2;
        const MeasurementPattern p = compile_circuit(testing::random_circuit(wires, 1 + rng() % 2, rng, true));
        if (p.graph.num_vertices() > 10) continue;
        Tableau in(wires);
        for (std::size_t w = 0; w < wires; ++w) in.apply(CliffordGate::H, w);
        const auto dense = run_pattern(p, plus_state(wires), std::ref(rng));
        const auto tab = run_pattern_stabilizer(p, in, dense.outcomes);
        v.require(tab.frame == dense.frame, "byproduct frames differ");
        worst = std::min(worst,
                         fidelity_up_to_phase(to_state_vector(canonical_form(tab.logical_state)), dense.logical_state));
        ++patterns;
    }
    v.require(worst >= 1 - 1e-9, fmt::format("min fidelity {:.3e}", worst));

    const Graph g = grid(30, 30);
    MeasurementPattern big{g, {}, {899}, {}, {}};
    for (Vertex s = 0; s < 899; ++s) big.commands.push_back({s, MeasurementCommand::Kind::XY, 0.0, {}, {}});
    const auto start = Clock::now();
    const auto r = run_pattern_stabilizer(big, Tableau(0), std::ref(rng));
    const double secs = seconds_since(start);
    v.require(secs < 1.0, fmt::format("900-site pattern took {:.2f} s", secs));
    v.require(r.logical_state.num_qubits() == 1 && r.logical_state.is_valid(), "bad 900-site output");
    v.require(testing::error_of([&] { run_pattern(big, StateVector(), std::ref(rng)); }) == ErrorCode::TooLarge,
              "dense backend accepted 900 sites");
    if (v.pass) {
        v.detail = fmt::format("100 circuits ({} forced measurements) + 100 patterns, 900 sites in {:.3f} s",
                               measured, secs);
    }
    return v;
}

// 7. Entropy law.
Verdict entropy_law() {
    Verdict v;
    Rng rng(107);
    std::vector<Graph> corpus;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (auto &g : testing::connected_graphs_up_to_iso(n)) corpus.push_back(std::move(g));
    }
    for (std::size_t n = 2; n <= 10; ++n) corpus.push_back(chain(n));
    for (std::size_t r = 1; r <= 3; ++r) {
        for (std::size_t c = 2; r * c <= 10; ++c) corpus.push_back(grid(r, c));
    }
    for (std::size_t n = 3; n <= 10; ++n) {
        std::vector<Edge> spokes;
        for (Vertex leaf = 1; leaf < n; ++leaf) spokes.push_back({0, leaf});
        corpus.emplace_back(n, spokes);
    }
    corpus.push_back(honeycomb(1, 1));
    for (int i = 0; i < 40; ++i) corpus.push_back(testing::random_graph(2 + rng() % 9, 0.35, rng));

    std::size_t checks = 0;
    double worst = 0;
    for (const Graph &g : corpus) {
        const std::size_t n = g.num_vertices();
        if (n < 2) continue;
        const StateVector dense = graph_state(g);
        const Tableau tab = tableau_graph_state(g);
        for (int k = 0; k < 20; ++k) {
            const auto region = testing::random_region(n, rng);
            const std::size_t rank = entropy_of_region(tab, region);
            worst = std::max(worst, std::abs(static_cast<double>(rank) - entropy_bits(dense, region)));
            v.require(rank <= crossing_edges(g, region), "rank entropy exceeds crossing bonds");
            ++checks;
        }
    }
    v.require(worst <= 1e-8, fmt::format("rank vs dense off by {:.3e}", worst));

    // equality cases: chain blocks of length >= 2 or touching an end
    for (std::size_t n = 2; n <= 10; ++n) {
        const Graph g = chain(n);
        const Tableau tab = tableau_graph_state(g);
        for (std::size_t lo = 0; lo < n; ++lo) {
            for (std::size_t hi = lo; hi < n; ++hi) {
                if (hi - lo + 1 == n || (hi == lo && lo > 0 && hi + 1 < n)) continue;
                std::vector<std::size_t> block;
                for (std::size_t s = lo; s <= hi; ++s) block.push_back(s);
                v.require(entropy_of_region(tab, block) == crossing_edges(g, block),
                          fmt::format("chain({}) block {}-{} below bond count", n, lo, hi));
            }
        }
    }
    // full-width row strips and full-height column strips of grids
    for (std::size_t rows = 2; rows <= 4; ++rows) {
        for (std::size_t cols = 2; cols <= 4; ++cols) {
            const Graph g = grid(rows, cols);
            const Tableau tab = tableau_graph_state(g);
            auto check = [&](std::size_t lo, std::size_t hi, bool by_rows) {
                std::vector<std::size_t> block;
                for (std::size_t r = 0; r < rows; ++r) {
                    for (std::size_t c = 0; c < cols; ++c) {
                        const std::size_t key = by_rows ? r : c;
                        if (key >= lo && key <= hi) block.push_back(r * cols + c);
                    }
                }
                v.require(entropy_of_region(tab, block) == crossing_edges(g, block),
                          fmt::format("grid({},{}) strip {}-{} below bond count", rows, cols, lo, hi));
            };
            for (std::size_t lo = 0; lo < rows; ++lo) {
                for (std::size_t hi = lo; hi < rows; ++hi) {
                    if ((lo == 0 && hi + 1 == rows) || (hi == lo && lo > 0 && hi + 1 < rows)) continue;
                    check(lo, hi, true);
                }
            }
            for (std::size_t lo = 0; lo < cols; ++lo) {
                for (std::size_t hi = lo; hi < cols; ++hi) {
                    if ((lo == 0 && hi + 1 == cols) || (hi == lo && lo > 0 && hi + 1 < cols)) continue;
                    check(lo, hi, false);
                }
            }
        }
    }
    // star K_{1,3}: leaves hold one bit of entropy across three bonds
    const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    const std::vector<std::size_t> leaves{1, 2, 3};
    const std::size_t star_rank = entropy_of_region(tableau_graph_state(star), leaves);
    v.require(star_rank == 1 && crossing_edges(star, leaves) == 3, "star counterexample not reproduced");
    v.require(std::abs(entropy_bits(graph_state(star), leaves) - 1) < 1e-8, "star dense entropy is not 1");
    if (v.pass) {
        v.detail = fmt::format("{} graphs, {} regions, max |rank - dense| {:.1e}, star: 1 bit vs 3 bonds",
                               corpus.size(), checks, worst);
    }
    return v;
}

void simple_paths(const Graph &g, Vertex b, std::vector<Vertex> &path, std::vector<std::vector<Vertex>> &out) {
    if (path.back() == b) {
        out.push_back(path);
        return;
    }
    for (Vertex w : g.neighbors(path.back())) {
        if (std::find(path.begin(), path.end(), w) != path.end()) continue;
        path.push_back(w);
        simple_paths(g, b, path, out);
        path.pop_back();
    }
}

// 8. Entanglement swapping along every simple path.
Verdict entanglement_swapping() {
    Verdict v;
    Rng rng(108);
    std::vector<Graph> graphs;
    for (std::size_t n = 2; n <= 8; ++n) graphs.push_back(chain(n));
    for (std::size_t r = 1; r <= 3; ++r) {
        for (std::size_t c = 2; c <= 4; ++c) graphs.push_back(grid(r, c));
    }
    std::size_t runs = 0;
    for (const Graph &g : graphs) {
        const Tableau start = tableau_graph_state(g);
        for (Vertex a = 0; a < g.num_vertices(); ++a) {
            for (Vertex b = a + 1; b < g.num_vertices(); ++b) {
                std::vector<Vertex> path{a};
                std::vector<std::vector<Vertex>> paths;
                simple_paths(g, b, path, paths);
                for (const auto &p : paths) {
                    const auto cmds = extract_bell_pattern(g, a, b, p);
                    const Tableau post = run_pauli_measurements(start, cmds, rng);
                    v.require(entropy_of_region(post, std::vector<std::size_t>{a}) == 1,
                              fmt::format("{}-site graph, pair ({}, {}): entropy != 1", g.num_vertices(), a, b));
                    ++runs;
                }
            }
        }
    }
    if (v.pass) v.detail = fmt::format("{} graphs, {} (pair, path) runs, entropy({{a}}) = 1", graphs.size(), runs);
    return v;
}

// 9. Toy model on the hexagon.
Verdict toy_model() {
    Verdict v;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(edge_hamiltonian());
    const Eigen::Vector4d want(0, 4, 4, 4);
    v.require((solver.eigenvalues() - want).cwiseAbs().maxCoeff() <= 1e-12, "edge spectrum is not {0,4,4,4}");
    const Eigen::Vector4d kernel = solver.eigenvectors().col(0);
    v.require(std::abs(std::abs(kernel(1) - kernel(2)) / std::sqrt(2.0) - 1) < 1e-12 && std::abs(kernel(0)) < 1e-12 &&
                  std::abs(kernel(3)) < 1e-12,
              "edge kernel is not the singlet");
    const Graph patch = honeycomb(1, 1);
    const auto report = toy_model_check(patch);
    v.require(report.virtual_qubits == 12, fmt::format("{} virtual qubits", report.virtual_qubits));
    v.require(report.unique_ground_state, "ground state not unique");
    v.require(std::abs(report.ground_energy) < 1e-9, fmt::format("ground energy {:.3e}", report.ground_energy));
    v.require(report.ground_singlet_fidelity >= 1 - 1e-10,
              fmt::format("ground/singlet fidelity {:.3e}", report.ground_singlet_fidelity));
    v.require(report.passed, "toy_model_check reported failure");
    if (v.pass) {
        v.detail = fmt::format("hexagon, 12 virtual qubits, gap {:.3f}, singlet fidelity 1-{:.1e}",
                               report.first_excited_energy - report.ground_energy,
                               std::max(0.0, 1 - report.ground_singlet_fidelity));
    }
    return v;
}

// 10. CLI determinism: every subcommand twice, machine format, fixed seed.
std::uint64_t fnv1a(const std::string &s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    return h;
}

Verdict determinism() {
    Verdict v;
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "vbsq_acceptance";
    fs::create_directories(dir);
    auto write = [&](const std::string &name, const std::string &text) {
        std::ofstream(dir / name) << text;
        return (dir / name).string();
    };
    const auto circuit = write("c.txt", "wires 3\nrx 0 0.7\ncz 0 1\nrz 1 1.1\ncz 1 2\nh 2\n");
    const auto clifford = write("k.txt", "wires 2\nh 0\ncz 0 1\ns 1\n");
    const auto hex = write("hex.txt", "n 6\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 0 5\n");
    const auto pattern = (dir / "p.txt").string();
    std::vector<std::vector<std::string>> commands{
        {"graph", "honeycomb", "2", "2"},
        {"compile", circuit},
        {"run", pattern},
        {"run", pattern, "--backend", "dense", "--input", "random"},
        {"compile", clifford, "--out", (dir / "k.pat").string()},
        {"run", (dir / "k.pat").string(), "--backend", "tableau"},
        {"verify", circuit, "--branches", "64"},
        {"verify", clifford, "--branches", "exhaustive"},
        {"entropy", hex, "0-2"},
        {"vbs-check", hex},
    };
    auto run_all = [&] {
        std::string all;
        {
            std::ostringstream out, err;
            cli::run({"compile", circuit, "--out", pattern}, out, err);
        }
        for (auto args : commands) {
            args.insert(args.end(), {"--seed", "2026", "--format", "machine"});
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            all += fmt::format("[{}] {}\n{}", code, fmt::join(args, " "), out.str());
            if (args[0] == "compile" && args.size() > 2 && args[2] == "--out") {
                std::ifstream in(args[3]);
                all += std::string(std::istreambuf_iterator<char>(in), {});
            }
            v.require(code == cli::kExitOk, fmt::format("`{}` exited {}: {}", fmt::join(args, " "), code, err.str()));
        }
        return all;
    };
    const std::string first = run_all(), second = run_all();
    fs::remove_all(dir);
    const auto h1 = fnv1a(first), h2 = fnv1a(second);
    v.require(h1 == h2, fmt::format("hash {:016x} != {:016x}", h1, h2));
    if (v.pass) v.detail = fmt::format("{} commands x 2 runs, hash {:016x}", commands.size(), h1);
    return v;
}

}  // namespace
}  // namespace vbsq

int main() {
    using namespace vbsq;
    const std::vector<std::pair<const char *, std::function<Verdict()>>> criteria{
        {"cluster-VBS identity", cluster_identity},
        {"projector algebra", projector_algebra},
        {"single-qubit teleportation", teleportation},
        {"phase gate", phase_gate},
        {"compiler soundness", compiler_soundness},
        {"backend agreement", backend_agreement},
        {"entropy law", entropy_law},
        {"entanglement swapping", entanglement_swapping},
        {"toy model", toy_model},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        const auto start = Clock::now();
        try {
            v = criteria[i].second();
        } catch (const std::exception &e) {
            v.pass = false;
            v.detail = fmt::format("threw: {}", e.what());
        }
        failed += !v.pass;
        fmt::print("[{}] {:>2}. {}: {} [{:.1f} s]\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail,
                   seconds_since(start));
        std::fflush(stdout);
    }
    fmt::print("{}/{} criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
