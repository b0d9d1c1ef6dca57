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

// Pattern documents:
//
//     graph
//     n 3
//     e 0 1
//     e 1 2
//     end
//     inputs 0
//     outputs 2
//     xy 0 0 s: t:
//     xy 1 -1.5707963268 s:0 t:
//     cx 2 1
//     cz 2 0

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <iterator>

#include "text_util.hpp"
#include "vbsq/error.hpp"
#include "vbsq/mbqc.hpp"

namespace vbsq {

namespace {

std::string join(const std::vector<Vertex> &sites, const char *sep) { return fmt::format("{}", fmt::join(sites, sep)); }

std::vector<Vertex> parse_dep_list(std::string_view tok, std::string_view prefix, int line) {
    if (tok.substr(0, prefix.size()) != prefix) {
        detail::parse_fail(line, "expected '" + std::string(prefix) + "<list>', got '" + std::string(tok) + "'");
    }
    tok.remove_prefix(prefix.size());
    std::vector<Vertex> out;
    while (!tok.empty()) {
        const std::size_t comma = tok.find(',');
        out.push_back(detail::parse_index(tok.substr(0, comma), line));
        if (comma == std::string_view::npos) break;
        tok.remove_prefix(comma + 1);
        if (tok.empty()) detail::parse_fail(line, "trailing comma in dependency list");
    }
    return out;
}

std::vector<Vertex> parse_sites(const detail::Line &line, std::size_t first) {
    std::vector<Vertex> out;
    for (std::size_t i = first; i < line.tokens.size(); ++i) out.push_back(detail::parse_index(line.tokens[i], line.number));
    return out;
}

}  // namespace

std::string serialize_pattern(const MeasurementPattern &p) {
    std::string out = "graph\n" + serialize(p.graph) + "end\n";
    out += fmt::format("inputs{}{}\n", p.inputs.empty() ? "" : " ", join(p.inputs, " "));
    out += fmt::format("outputs{}{}\n", p.outputs.empty() ? "" : " ", join(p.outputs, " "));
    for (const auto &cmd : p.commands) {
        if (cmd.kind == MeasurementCommand::Kind::Z) {
            out += fmt::format("z {}\n", cmd.site);
            continue;
        }
        const double angle = cmd.angle == 0 ? 0.0 : cmd.angle;
        out += fmt::format("xy {} {:.12g} s:{} t:{}\n", cmd.site, angle, join(cmd.s_deps, ","), join(cmd.t_deps, ","));
    }
    for (const auto &corr : p.corrections) {
        out += fmt::format("cx {}{}{}\n", corr.output, corr.x_deps.empty() ? "" : " ", join(corr.x_deps, " "));
        out += fmt::format("cz {}{}{}\n", corr.output, corr.z_deps.empty() ? "" : " ", join(corr.z_deps, " "));
    }
    return out;
}

MeasurementPattern parse_pattern(std::string_view text) {
    using detail::parse_fail;
    auto lines = detail::tokenize_lines(text);
    std::size_t k = 0;
    if (lines.empty() || lines[0].tokens[0] != "graph") parse_fail(lines.empty() ? 1 : lines[0].number, "expected 'graph'");
    detail::expect_arity(lines[0], 1);

    // The graph block: one 'n <count>' line and any number of 'e <u> <v>' lines.
    std::size_t n = 0;
    bool have_n = false;
    std::vector<Edge> edges;
    int graph_line = lines[0].number;
    for (k = 1; k < lines.size() && lines[k].tokens[0] != "end"; ++k) {
        const auto &line = lines[k];
        if (line.tokens[0] == "n" && !have_n) {
            detail::expect_arity(line, 2);
            n = detail::parse_index(line.tokens[1], line.number);
            have_n = true;
        } else if (line.tokens[0] == "e" && have_n) {
            detail::expect_arity(line, 3);
            edges.emplace_back(detail::parse_index(line.tokens[1], line.number),
                               detail::parse_index(line.tokens[2], line.number));
        } else {
            parse_fail(line.number, "unexpected '" + std::string(line.tokens[0]) + "' in graph block");
        }
    }
    if (k == lines.size()) parse_fail(graph_line, "graph block is not closed by 'end'");
    if (!have_n) parse_fail(graph_line, "graph block lacks 'n <count>'");

    MeasurementPattern p{Graph(n, edges), {}, {}, {}, {}};
    bool have_inputs = false, have_outputs = false;
    for (++k; k < lines.size(); ++k) {
        const auto &line = lines[k];
        const std::string_view op = line.tokens[0];
        if (op == "inputs" && !have_inputs) {
            p.inputs = parse_sites(line, 1);
            have_inputs = true;
        } else if (op == "outputs" && !have_outputs) {
            p.outputs = parse_sites(line, 1);
            have_outputs = true;
        } else if (op == "xy") {
            detail::expect_arity(line, 5);
            p.commands.push_back({detail::parse_index(line.tokens[1], line.number), MeasurementCommand::Kind::XY,
                                  detail::parse_real(line.tokens[2], line.number),
                                  parse_dep_list(line.tokens[3], "s:", line.number),
                                  parse_dep_list(line.tokens[4], "t:", line.number)});
        } else if (op == "z") {
            detail::expect_arity(line, 2);
            p.commands.push_back(
                {detail::parse_index(line.tokens[1], line.number), MeasurementCommand::Kind::Z, 0.0, {}, {}});
        } else if (op == "cx" || op == "cz") {
            if (line.tokens.size() < 2) parse_fail(line.number, "'" + std::string(op) + "' needs an output site");
            const Vertex output = detail::parse_index(line.tokens[1], line.number);
            auto sites = parse_sites(line, 2);
            auto it = std::find_if(p.corrections.begin(), p.corrections.end(),
                                   [output](const Correction &c) { return c.output == output; });
            if (it == p.corrections.end()) {
                p.corrections.push_back({output, {}, {}});
                it = std::prev(p.corrections.end());
            }
            auto &target = op == "cx" ? it->x_deps : it->z_deps;
            target.insert(target.end(), sites.begin(), sites.end());
        } else {
            parse_fail(line.number, "unexpected '" + std::string(op) + "'");
        }
    }
    if (!have_inputs || !have_outputs) parse_fail(lines.back().number, "pattern needs 'inputs' and 'outputs' lines");
    validate(p);
    return p;
}

}  // namespace vbsq
