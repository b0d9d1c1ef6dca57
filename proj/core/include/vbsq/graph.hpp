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

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vbsq {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex set 0..n-1.
///
/// Edges are stored canonically as (low, high), sorted and deduplicated, and
/// mirrored in a symmetric zero-diagonal adjacency matrix. Instances are
/// immutable once constructed.
class Graph {
   public:
    Graph() = default;

    /// Throws InvalidEdge on a self-loop and VertexOutOfRange on a bad endpoint.
    /// Duplicate edges (in either orientation) are merged.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges);

    std::size_t num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    const std::vector<Edge> &edges() const noexcept { return edges_; }

    bool adjacent(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const;
    /// Neighbors in ascending order.
    const std::vector<Vertex> &neighbors(Vertex v) const;

    /// Row-major n*n adjacency matrix over GF(2).
    const std::vector<std::uint8_t> &adjacency() const noexcept { return adj_; }

    /// Graph with vertex v deleted; vertices above v shift down by one.
    Graph without_vertex(Vertex v) const;
    /// Subgraph induced on `keep`; vertex keep[i] becomes i.
    Graph induced(std::span<const Vertex> keep) const;

    bool operator==(const Graph &other) const noexcept {
        return n_ == other.n_ && edges_ == other.edges_;
    }

   private:
    void check_vertex(Vertex v) const;

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint8_t> adj_;
    std::vector<std::vector<Vertex>> nbrs_;
};

// Lattice generators. Sites are indexed row-major: (r, c) -> r * cols + c.

Graph chain(std::size_t n);
Graph grid(std::size_t rows, std::size_t cols);

/// Brick-wall embedding of a patch of `rows` x `cols` hexagonal plaquettes.
/// Vertices form a (rows + 1) x honeycomb_width(rows, cols) row-major grid;
/// every horizontal neighbor pair is joined, and (r, c)-(r + 1, c) is joined
/// when r + c is even. Vertices away from the patch border have degree 3.
/// With more than one row the staggered bricks need an extra column, which
/// leaves two pendant corner vertices.
Graph honeycomb(std::size_t rows, std::size_t cols);

inline std::size_t honeycomb_width(std::size_t rows, std::size_t cols) { return 2 * cols + (rows > 1 ? 2 : 1); }

/// Edge-list text: `n <count>` then `e <u> <v>` lines; `#` starts a comment.
Graph parse_edge_list(std::string_view text);
/// Canonical edge-list text (edges ascending), newline terminated.
std::string serialize(const Graph &g);

/// Number of edges with exactly one endpoint in `region`.
std::size_t crossing_edges(const Graph &g, std::span<const Vertex> region);

/// Vertices reachable from `start`, in BFS order.
std::vector<Vertex> reachable(const Graph &g, Vertex start);
bool is_connected(const Graph &g);

}  // namespace vbsq
