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

#include "vbsq/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include "vbsq/circuit.hpp"
#include "vbsq/error.hpp"
#include "vbsq/graph.hpp"
#include "vbsq/mbqc.hpp"
#include "vbsq/stabilizer.hpp"
#include "vbsq/statevec.hpp"
#include "vbsq/vbs.hpp"

namespace vbsq::cli {

namespace {

struct Options {
    std::uint64_t seed = 1;
    std::string backend = "auto";
    std::string branches = "4096";
    std::string format = "text";
    std::string out_path;
    std::string input;  // empty: all |+> for run, random for verify
    std::string kind;
    std::vector<std::size_t> dims;
    std::string file;
    std::string region;
};

/// Ordered key/value report. Text mode prints `key: value`, machine mode
/// prints `key = value`; numbers are formatted without locale.
class Report {
   public:
    void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
    void add(std::string key, double value) { add(std::move(key), fmt::format("{:.15g}", value == 0 ? 0.0 : value)); }
    void add(std::string key, std::size_t value) { add(std::move(key), fmt::format("{}", value)); }
    void add(std::string key, bool value) { add(std::move(key), std::string(value ? "pass" : "fail")); }

    std::string render(const std::string &format) const {
        std::string out;
        const char *sep = format == "machine" ? " = " : ": ";
        for (const auto &[k, v] : rows_) out += k + sep + v + "\n";
        return out;
    }

   private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

struct Failure {
    int code;
    std::string message;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kExitParse, "cannot read '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::InvalidEdge:
        case ErrorCode::VertexOutOfRange:
        case ErrorCode::InvalidPattern:
        case ErrorCode::InvalidSubset:
        case ErrorCode::BadForcedOutcomes:
            return kExitParse;
        default:
            return kExitSemantic;
    }
}

std::string bits_string(const std::vector<int> &bits) {
    std::string s;
    for (int b : bits) s += static_cast<char>('0' + b);
    return s.empty() ? "-" : s;
}

/// Portable standard normal draw (Box-Muller over uniform01).
double gaussian(Rng &rng) {
    const double u1 = 1.0 - uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2 * kPi * u2);
}

/// "random" draws a Haar-random state from the seed; otherwise one character
/// per qubit from {0, 1, +, -}.
StateVector input_state(const std::string &spec, std::size_t n, std::uint64_t seed) {
    if (spec == "random") {
        Rng rng(seed);
        std::vector<Complex> amps(std::size_t{1} << n);
        for (auto &a : amps) {
            const double re = gaussian(rng);
            a = {re, gaussian(rng)};
        }
        return StateVector::from_amplitudes(n, std::move(amps));
    }
    if (spec.size() != n) {
        throw Failure{kExitParse, fmt::format("--input needs {} characters, got '{}'", n, spec)};
    }
    StateVector s;
    for (char ch : spec) {
        StateVector q = basis_state({ch == '1' ? 1 : 0});
        if (ch == '+' || ch == '-') q = StateVector::from_amplitudes(1, {kInvSqrt2, ch == '+' ? kInvSqrt2 : -kInvSqrt2});
        else if (ch != '0' && ch != '1') throw Failure{kExitParse, fmt::format("bad --input character '{}'", ch)};
        s.append(q);
    }
    return s;
}

Tableau input_tableau(const std::string &spec, std::size_t n) {
    if (spec.size() != n) throw Failure{kExitParse, "the tableau backend needs a product --input over {0,1,+,-}"};
    std::vector<PauliString> gens;
    for (std::size_t q = 0; q < n; ++q) {
        const char ch = spec[q];
        if (ch != '0' && ch != '1' && ch != '+' && ch != '-') {
            throw Failure{kExitParse, fmt::format("bad --input character '{}'", ch)};
        }
        PauliString p = PauliString::single(n, q, ch == '0' || ch == '1' ? 'Z' : 'X');
        if (ch == '1' || ch == '-') p.negate();
        gens.push_back(std::move(p));
    }
    return Tableau::from_generators(std::move(gens));
}

std::string cmd_graph(const Options &o) {
    auto need = [&](std::size_t count) {
        if (o.dims.size() != count) {
            throw Failure{kExitParse, fmt::format("graph {} expects {} size argument(s)", o.kind, count)};
        }
    };
    if (o.kind == "chain") {
        need(1);
        return serialize(chain(o.dims[0]));
    }
    if (o.kind == "grid") {
        need(2);
        return serialize(grid(o.dims[0], o.dims[1]));
    }
    if (o.kind == "honeycomb") {
        need(2);
        return serialize(honeycomb(o.dims[0], o.dims[1]));
    }
    if (o.kind == "validate") {
        if (o.file.empty()) throw Failure{kExitParse, "graph validate needs a file"};
        const Graph g = parse_edge_list(read_file(o.file));
        Report r;
        r.add("command", std::string("graph validate"));
        r.add("vertices", g.num_vertices());
        r.add("edges", g.num_edges());
        r.add("connected", std::string(is_connected(g) ? "yes" : "no"));
        r.add("result", true);
        return r.render(o.format);
    }
    throw Failure{kExitParse, "unknown graph kind '" + o.kind + "' (chain, grid, honeycomb, validate)"};
}

std::string cmd_compile(const Options &o) {
    return serialize_pattern(compile_circuit(parse_circuit(read_file(o.file))));
}

std::pair<std::string, int> cmd_run(const Options &o) {
    const MeasurementPattern p = parse_pattern(read_file(o.file));
    const std::string input = o.input.empty() ? std::string(p.inputs.size(), '+') : o.input;
    std::string backend = o.backend;
    if (backend == "auto") backend = is_clifford(p) && input != "random" ? "tableau" : "dense";
    Report r;
    r.add("command", std::string("run"));
    r.add("seed", fmt::format("{}", o.seed));
    r.add("backend", backend);
    r.add("commands", p.commands.size());
    Rng rng(o.seed);
    if (backend == "tableau") {
        const auto result = run_pattern_stabilizer(p, input_tableau(input, p.inputs.size()), std::ref(rng));
        r.add("outcomes", bits_string(result.outcomes));
        for (std::size_t i = 0; i < result.frame.wires.size(); ++i) {
            r.add(fmt::format("frame.{}", i), fmt::format("{}{}", int(result.frame.wires[i].x), int(result.frame.wires[i].z)));
        }
        const Tableau canon = canonical_form(result.logical_state);
        for (std::size_t i = 0; i < canon.num_qubits(); ++i) {
            r.add(fmt::format("stabilizer.{}", i), canon.generator(i).str());
        }
    } else {
        const auto result = run_pattern(p, input_state(input, p.inputs.size(), o.seed ^ 0x9e3779b97f4a7c15ULL),
                                        std::ref(rng));
        r.add("outcomes", bits_string(result.outcomes));
        for (std::size_t i = 0; i < result.frame.wires.size(); ++i) {
            r.add(fmt::format("frame.{}", i), fmt::format("{}{}", int(result.frame.wires[i].x), int(result.frame.wires[i].z)));
        }
        const auto amps = result.logical_state.amplitudes();
        for (std::size_t i = 0; i < amps.size(); ++i) {
            const double re = std::abs(amps[i].real()) < 5e-16 ? 0.0 : amps[i].real();
            const double im = std::abs(amps[i].imag()) < 5e-16 ? 0.0 : amps[i].imag();
            r.add(fmt::format("amplitude.{}", i), fmt::format("{:.15g} {:.15g}", re, im));
        }
    }
    r.add("result", true);
    return {r.render(o.format), kExitOk};
}

std::pair<std::string, int> cmd_verify(const Options &o) {
    const Circuit c = parse_circuit(read_file(o.file));
    VerifyOptions opts;
    opts.seed = o.seed;
    if (o.branches == "exhaustive") {
        opts.force_exhaustive = true;
    } else {
        std::size_t budget = 0;
        auto [ptr, ec] = std::from_chars(o.branches.data(), o.branches.data() + o.branches.size(), budget);
        if (ec != std::errc() || ptr != o.branches.data() + o.branches.size() || budget == 0) {
            throw Failure{kExitParse, "--branches takes a positive integer or 'exhaustive'"};
        }
        opts.budget = opts.samples = budget;
    }
    const StateVector input = input_state(o.input.empty() ? "random" : o.input, c.num_wires(), o.seed);
    const VerifyReport v = verify_equivalence(c, input, opts);
    Report r;
    r.add("command", std::string("verify"));
    r.add("seed", fmt::format("{}", o.seed));
    r.add("backend", std::string("dense"));
    r.add("mode", std::string(v.exhaustive ? "exhaustive" : "sampled"));
    r.add("commands", v.commands);
    r.add("branches", v.branches);
    r.add("skipped", v.skipped);
    r.add("min_fidelity", v.min_fidelity);
    r.add("mean_fidelity", v.mean_fidelity);
    for (std::size_t b = 0; b < v.records.size(); ++b) {
        r.add(fmt::format("branch.{}", b), fmt::format("{} {:.15g}", bits_string(v.records[b].outcomes),
                                                        v.records[b].fidelity));
    }
    r.add("result", v.passed);
    return {r.render(o.format), v.passed ? kExitOk : kExitVerification};
}

std::string cmd_entropy(const Options &o) {
    const Graph g = parse_edge_list(read_file(o.file));
    const auto region = parse_region(o.region);
    const std::size_t rank = entropy_of_region(tableau_graph_state(g), region);
    Report r;
    r.add("command", std::string("entropy"));
    r.add("vertices", g.num_vertices());
    r.add("region", fmt::format("{}", fmt::join(region, " ")));
    r.add("rank_entropy", rank);
    r.add("crossing_bonds", crossing_edges(g, region));
    if (g.num_vertices() <= kDenseQubitCap) {
        r.add("dense_entropy", entropy_bits(graph_state(g), region));
    } else {
        r.add("dense_entropy", std::string("skipped"));
    }
    return r.render(o.format);
}

std::pair<std::string, int> cmd_vbs_check(const Options &o) {
    const Graph g = parse_edge_list(read_file(o.file));
    const VbsSpec spec = make_vbs_spec(g);
    const double f = fidelity_up_to_phase(materialize(spec), graph_state(g));
    const bool pass = f >= 1 - 1e-10;
    Report r;
    r.add("command", std::string("vbs-check"));
    r.add("vertices", g.num_vertices());
    r.add("edges", g.num_edges());
    r.add("virtual_qubits", spec.num_virtual());
    r.add("fidelity", f);
    r.add("result", pass);
    return {r.render(o.format), pass ? kExitOk : kExitVerification};
}

}  // namespace

std::vector<std::size_t> parse_region(const std::string &text) {
    auto bad = [&text]() { return Error(ErrorCode::InvalidSubset, "malformed region '" + text + "'"); };
    auto number = [&](std::string_view s) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw bad();
        return v;
    };
    std::vector<std::size_t> out;
    std::string_view rest = text;
    while (true) {
        const std::size_t comma = rest.find(',');
        const std::string_view part = rest.substr(0, comma);
        const std::size_t dash = part.find('-');
        if (dash == std::string_view::npos) {
            out.push_back(number(part));
        } else {
            const std::size_t lo = number(part.substr(0, dash)), hi = number(part.substr(dash + 1));
            if (lo > hi) throw bad();
            for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
        }
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw bad();
    return out;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"vbsq: graph states, valence bonds and one-way computation", "vbsq"};
    app.require_subcommand(1);
    auto common = [&o](CLI::App *sub) {
        sub->add_option("--seed", o.seed, "Random seed");
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
        sub->add_option("--out", o.out_path, "Write the output to this file");
    };

    // `graph chain 3` carries sizes in the positional slot, `graph validate f` a path.
    std::vector<std::string> graph_args;
    auto *graph = app.add_subcommand("graph", "Generate a lattice or validate an edge list");
    graph->add_option("kind", o.kind, "chain | grid | honeycomb | validate")->required();
    graph->add_option("args", graph_args, "Sizes, or the file to validate");
    common(graph);

    auto *compile = app.add_subcommand("compile", "Compile a circuit file into a measurement pattern");
    compile->add_option("circuit", o.file)->required();
    common(compile);

    auto *run_cmd = app.add_subcommand("run", "Execute a pattern file");
    run_cmd->add_option("pattern", o.file)->required();
    run_cmd->add_option("--backend", o.backend)->check(CLI::IsMember({"dense", "tableau", "auto"}));
    run_cmd->add_option("--input", o.input, "'random' or one of 0,1,+,- per input (default all +)");
    common(run_cmd);

    auto *verify = app.add_subcommand("verify", "Check a compiled circuit against direct simulation");
    verify->add_option("circuit", o.file)->required();
    verify->add_option("--branches", o.branches, "Branch budget or 'exhaustive'");
    verify->add_option("--backend", o.backend)->check(CLI::IsMember({"dense", "tableau", "auto"}));
    verify->add_option("--input", o.input, "'random' (default) or one of 0,1,+,- per wire");
    common(verify);

    auto *entropy = app.add_subcommand("entropy", "Entanglement entropy of a region of a graph state");
    entropy->add_option("graph", o.file)->required();
    entropy->add_option("region", o.region, "Vertices such as 1-3,5")->required();
    common(entropy);

    auto *vbs_check = app.add_subcommand("vbs-check", "Compare the valence-bond construction with the graph state");
    vbs_check->add_option("graph", o.file)->required();
    common(vbs_check);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }

    try {
        std::string text;
        int code = kExitOk;
        if (graph->parsed()) {
            if (o.kind == "validate") {
                o.file = graph_args.empty() ? "" : graph_args[0];
            } else {
                for (const auto &a : graph_args) {
                    std::size_t v = 0;
                    auto [ptr, ec] = std::from_chars(a.data(), a.data() + a.size(), v);
                    if (ec != std::errc() || ptr != a.data() + a.size()) {
                        throw Failure{kExitParse, "size '" + a + "' is not a non-negative integer"};
                    }
                    o.dims.push_back(v);
                }
            }
            text = cmd_graph(o);
        } else if (compile->parsed()) {
            text = cmd_compile(o);
        } else if (run_cmd->parsed()) {
            std::tie(text, code) = cmd_run(o);
        } else if (verify->parsed()) {
            if (o.backend == "tableau") throw Failure{kExitParse, "verify runs on the dense backend"};
            std::tie(text, code) = cmd_verify(o);
        } else if (entropy->parsed()) {
            text = cmd_entropy(o);
        } else if (vbs_check->parsed()) {
            std::tie(text, code) = cmd_vbs_check(o);
        }
        if (o.out_path.empty()) {
            out << text;
        } else {
            std::ofstream file(o.out_path, std::ios::binary);
            if (!file) throw Failure{kExitParse, "cannot write '" + o.out_path + "'"};
            file << text;
        }
        return code;
    } catch (const Failure &f) {
        err << "error: " << f.message << "\n";
        return f.code;
    } catch (const Error &e) {
        err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e.code());
    }
}

}  // namespace vbsq::cli
