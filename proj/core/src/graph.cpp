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

#include "vbsq/graph.hpp"

#include <algorithm>
#include <deque>

#include "text_util.hpp"
#include "vbsq/error.hpp"

namespace vbsq {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidEdge: return "InvalidEdge";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::InvalidDimension: return "InvalidDimension";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::QubitOutOfRange: return "QubitOutOfRange";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::BadBasis: return "BadBasis";
        case ErrorCode::ZeroProbabilityBranch: return "ZeroProbabilityBranch";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidSubset: return "InvalidSubset";
        case ErrorCode::BadPhase: return "BadPhase";
        case ErrorCode::NoPath: return "NoPath";
        case ErrorCode::InvalidArity: return "InvalidArity";
        case ErrorCode::CannotAbsorb: return "CannotAbsorb";
        case ErrorCode::DegenerateProjection: return "DegenerateProjection";
        case ErrorCode::CannotPush: return "CannotPush";
        case ErrorCode::NotClifford: return "NotClifford";
        case ErrorCode::BadForcedOutcomes: return "BadForcedOutcomes";
        case ErrorCode::InvalidPattern: return "InvalidPattern";
        case ErrorCode::InvalidCircuit: return "InvalidCircuit";
        case ErrorCode::InvalidTableau: return "InvalidTableau";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message, int line)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code), line_(line) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n), adj_(n * n, 0), nbrs_(n) {
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw Error(ErrorCode::VertexOutOfRange, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                                         ") outside vertex range [0, " + std::to_string(n) + ")");
        }
        if (u == v) throw Error(ErrorCode::InvalidEdge, "self-loop at vertex " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [u, v] : edges_) {
        adj_[u * n + v] = 1;
        adj_[v * n + u] = 1;
        nbrs_[u].push_back(v);
        nbrs_[v].push_back(u);
    }
    for (auto &row : nbrs_) std::sort(row.begin(), row.end());
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex v) const {
    if (v >= n_) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u * n_ + v] != 0;
}

std::size_t Graph::degree(Vertex v) const {
    check_vertex(v);
    return nbrs_[v].size();
}

const std::vector<Vertex> &Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return nbrs_[v];
}

Graph Graph::without_vertex(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> keep;
    for (Vertex u = 0; u < n_; ++u) {
        if (u != v) keep.push_back(u);
    }
    return induced(keep);
}

Graph Graph::induced(std::span<const Vertex> keep) const {
    std::vector<std::size_t> index(n_, n_);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(keep[i]);
        if (index[keep[i]] != n_) throw Error(ErrorCode::InvalidSubset, "repeated vertex in induced subgraph");
        index[keep[i]] = i;
    }
    std::vector<Edge> sub;
    for (auto [u, v] : edges_) {
        if (index[u] != n_ && index[v] != n_) sub.emplace_back(index[u], index[v]);
    }
    return Graph(keep.size(), sub);
}

Graph chain(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidDimension, "chain length must be at least 1");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph grid(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw Error(ErrorCode::InvalidDimension, "grid dimensions must be at least 1");
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            std::size_t v = r * cols + c;
            if (c + 1 < cols) edges.emplace_back(v, v + 1);
            if (r + 1 < rows) edges.emplace_back(v, v + cols);
        }
    }
    return Graph(rows * cols, edges);
}

Graph honeycomb(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw Error(ErrorCode::InvalidDimension, "honeycomb dimensions must be at least 1");
    const std::size_t width = honeycomb_width(rows, cols);
    const std::size_t height = rows + 1;
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < height; ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            std::size_t v = r * width + c;
            if (c + 1 < width) edges.emplace_back(v, v + 1);
            if (r + 1 < height && (r + c) % 2 == 0) edges.emplace_back(v, v + width);
        }
    }
    return Graph(height * width, edges);
}

Graph parse_edge_list(std::string_view text) {
    auto lines = detail::tokenize_lines(text);
    if (lines.empty()) detail::parse_fail(1, "missing 'n <count>' header");
    const auto &header = lines.front();
    if (header.tokens[0] != "n") detail::parse_fail(header.number, "expected 'n <count>' header");
    detail::expect_arity(header, 2);
    std::size_t n = detail::parse_index(header.tokens[1], header.number);

    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto &line = lines[i];
        if (line.tokens[0] != "e") {
            detail::parse_fail(line.number, "unknown directive '" + std::string(line.tokens[0]) + "'");
        }
        detail::expect_arity(line, 3);
        Vertex u = detail::parse_index(line.tokens[1], line.number);
        Vertex v = detail::parse_index(line.tokens[2], line.number);
        if (u >= n || v >= n) {
            throw Error(ErrorCode::VertexOutOfRange,
                        "line " + std::to_string(line.number) + ": vertex outside [0, " + std::to_string(n) + ")",
                        line.number);
        }
        if (u == v) {
            throw Error(ErrorCode::InvalidEdge, "line " + std::to_string(line.number) + ": self-loop",
                        line.number);
        }
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

std::string serialize(const Graph &g) {
    std::string out = "n " + std::to_string(g.num_vertices()) + "\n";
    for (auto [u, v] : g.edges()) out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::size_t crossing_edges(const Graph &g, std::span<const Vertex> region) {
    std::vector<std::uint8_t> inside(g.num_vertices(), 0);
    for (Vertex v : region) {
        if (v >= g.num_vertices()) throw Error(ErrorCode::VertexOutOfRange, "region vertex out of range");
        inside[v] = 1;
    }
    std::size_t count = 0;
    for (auto [u, v] : g.edges()) count += inside[u] != inside[v];
    return count;
}

std::vector<Vertex> reachable(const Graph &g, Vertex start) {
    std::vector<std::uint8_t> seen(g.num_vertices(), 0);
    std::vector<Vertex> order;
    std::deque<Vertex> queue{start};
    seen.at(start) = 1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return order;
}

bool is_connected(const Graph &g) {
    return g.num_vertices() == 0 || reachable(g, 0).size() == g.num_vertices();
}

}  // namespace vbsq
