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

#include "testing.hpp"
#include "vbsq/graph.hpp"

namespace vbsq {
namespace {

using testing::error_of;

TEST(Graph, SingleEdge) {
    Graph g(2, {{0, 1}});
    EXPECT_TRUE(g.adjacent(0, 1));
    EXPECT_TRUE(g.adjacent(1, 0));
    EXPECT_FALSE(g.adjacent(0, 0));
    EXPECT_EQ(g.num_edges(), 1u);
}

TEST(Graph, PathDegrees) {
    Graph g(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(g.degree(0), 1u);
    EXPECT_EQ(g.degree(1), 2u);
    EXPECT_EQ(g.degree(2), 1u);
}

TEST(Graph, RejectsBadEdges) {
    EXPECT_EQ(error_of([] { Graph(2, {{0, 0}}); }), ErrorCode::InvalidEdge);
    EXPECT_EQ(error_of([] { Graph(2, {{0, 5}}); }), ErrorCode::VertexOutOfRange);
}

TEST(Graph, DuplicatesMergeAndNormalize) {
    Graph g(3, {{1, 0}, {0, 1}, {2, 1}});
    ASSERT_EQ(g.num_edges(), 2u);
    EXPECT_EQ(g.edges()[0], Edge(0, 1));
    EXPECT_EQ(g.edges()[1], Edge(1, 2));
}

TEST(Lattice, Chain) {
    Graph g = chain(3);
    EXPECT_EQ(g, Graph(3, {{0, 1}, {1, 2}}));
    EXPECT_EQ(chain(1).num_edges(), 0u);
    EXPECT_EQ(error_of([] { chain(0); }), ErrorCode::InvalidDimension);
}

TEST(Lattice, Grid) {
    Graph g = grid(2, 2);
    EXPECT_EQ(g.num_vertices(), 4u);
    EXPECT_EQ(g.num_edges(), 4u);
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2u);
    // row-major: (r, c) -> r * cols + c
    Graph h = grid(3, 4);
    EXPECT_TRUE(h.adjacent(5, 6));
    EXPECT_TRUE(h.adjacent(5, 9));
    EXPECT_FALSE(h.adjacent(3, 4));
    EXPECT_EQ(h.num_edges(), 3u * 3 + 2u * 4);
    EXPECT_EQ(error_of([] { grid(0, 3); }), ErrorCode::InvalidDimension);
}

TEST(Lattice, HoneycombSmallestPatchIsHexagon) {
    Graph g = honeycomb(1, 1);
    EXPECT_EQ(g.num_vertices(), 6u);
    EXPECT_EQ(g.num_edges(), 6u);
    for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 2u);
    EXPECT_TRUE(is_connected(g));
}

// Checked against the hexagonal lattice by counting: a connected planar patch
// with rows * cols hexagonal faces has E - V + 1 = rows * cols, it is
// bipartite, and no vertex exceeds degree 3.
TEST(Lattice, HoneycombStructure) {
    for (std::size_t rows = 1; rows <= 4; ++rows) {
        for (std::size_t cols = 1; cols <= 4; ++cols) {
            Graph g = honeycomb(rows, cols);
            const std::size_t w = honeycomb_width(rows, cols);
            ASSERT_TRUE(is_connected(g));
            EXPECT_EQ(g.num_edges() + 1, g.num_vertices() + rows * cols);
            for (auto [u, v] : g.edges()) {
                EXPECT_NE((u / w + u % w) % 2, (v / w + v % w) % 2);
            }
            for (Vertex v = 0; v < g.num_vertices(); ++v) {
                EXPECT_LE(g.degree(v), 3u);
                const std::size_t r = v / w, c = v % w;
                if (r > 0 && r < rows && c > 0 && c + 1 < w) {
                    EXPECT_EQ(g.degree(v), 3u) << v;
                }
            }
        }
    }
}

TEST(EdgeList, ParseAndSerialize) {
    EXPECT_EQ(parse_edge_list("n 2\ne 0 1\n"), Graph(2, {{0, 1}}));
    EXPECT_EQ(serialize(chain(3)), "n 3\ne 0 1\ne 1 2\n");
    EXPECT_EQ(parse_edge_list("# header\nn 3 # three\n\ne 2 1\n"), Graph(3, {{1, 2}}));
}

TEST(EdgeList, Errors) {
    EXPECT_EQ(error_of([] { parse_edge_list("n 2\ne 0 5\n"); }), ErrorCode::VertexOutOfRange);
    EXPECT_EQ(error_of([] { parse_edge_list("n 2\ne 1 1\n"); }), ErrorCode::InvalidEdge);
    EXPECT_EQ(error_of([] { parse_edge_list("e 0 1\n"); }), ErrorCode::ParseError);
    EXPECT_EQ(error_of([] { parse_edge_list(""); }), ErrorCode::ParseError);
    try {
        parse_edge_list("n 3\ne 0 1\ne 1 x\n");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        EXPECT_EQ(e.line(), 3);
    }
    EXPECT_EQ(error_of([] { parse_edge_list("n 3\ne 0 1 2\n"); }), ErrorCode::ParseError);
    EXPECT_EQ(error_of([] { parse_edge_list("n -1\n"); }), ErrorCode::ParseError);
}

TEST(EdgeList, RoundTripRandomGraphs) {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        Graph g = testing::random_graph(n, uniform01(rng), rng);
        EXPECT_EQ(parse_edge_list(serialize(g)), g);
    }
}

TEST(Graph, AdjacencySymmetricAndDegreeIsRowSum) {
    Rng rng(5);
    std::vector<Graph> graphs{chain(7), grid(3, 5), honeycomb(2, 3)};
    for (int i = 0; i < 20; ++i) graphs.push_back(testing::random_graph(1 + rng() % 10, 0.4, rng));
    for (const Graph &g : graphs) {
        const std::size_t n = g.num_vertices();
        std::size_t ones = 0;
        for (Vertex u = 0; u < n; ++u) {
            EXPECT_FALSE(g.adjacent(u, u));
            std::size_t row = 0;
            for (Vertex v = 0; v < n; ++v) {
                EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
                row += g.adjacent(u, v);
            }
            EXPECT_EQ(g.degree(u), row);
            EXPECT_EQ(g.neighbors(u).size(), row);
            ones += row;
        }
        EXPECT_EQ(ones, 2 * g.num_edges());
    }
}

TEST(Graph, SubgraphsAndCuts) {
    Graph g = grid(2, 3);
    std::vector<Vertex> keep{0, 1, 3, 4};
    EXPECT_EQ(g.induced(keep), grid(2, 2));
    Graph h = chain(4).without_vertex(0);
    EXPECT_EQ(h, chain(3));
    std::vector<Vertex> region{1, 2};
    EXPECT_EQ(crossing_edges(chain(5), region), 2u);
    EXPECT_FALSE(is_connected(Graph(3, {{0, 1}})));
    EXPECT_EQ(reachable(Graph(3, {{0, 1}}), 2), std::vector<Vertex>{2});
}

}  // namespace
}  // namespace vbsq
