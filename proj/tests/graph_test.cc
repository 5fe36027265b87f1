// Copyright 2026 The graphrank Authors
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
#include <bit>
#include <unordered_set>

#include "graphrank/errors.h"
#include "graphrank/graph.h"
#include "test_util.h"

using namespace graphrank;
using graphrank::testing::for_each_graph;
using graphrank::testing::random_graph;

namespace {

// Rank as log2 of the size of the row span, by enumerating every subset of rows.
size_t span_rank(const std::vector<uint64_t> &rows) {
    std::vector<uint64_t> span;
    for (uint64_t s = 0; s < (uint64_t{1} << rows.size()); s++) {
        uint64_t v = 0;
        for (size_t k = 0; k < rows.size(); k++) {
            if ((s >> k) & 1) {
                v ^= rows[k];
            }
        }
        span.push_back(v);
    }
    std::sort(span.begin(), span.end());
    span.erase(std::unique(span.begin(), span.end()), span.end());
    size_t r = 0;
    while ((size_t{1} << r) < span.size()) {
        r++;
    }
    return r;
}

size_t brute_force_cover(const Graph &g) {
    size_t n = g.num_vertices();
    size_t best = n;
    for (VertexMask m = 0; m < (VertexMask{1} << n); m++) {
        if (std::popcount(m) < static_cast<int>(best) && covers_all_edges(g, m)) {
            best = static_cast<size_t>(std::popcount(m));
        }
    }
    return best;
}

}  // namespace

TEST(graph, families) {
    auto l2 = Graph::line(2);
    ASSERT_EQ(l2.num_edges(), 1u);
    ASSERT_TRUE(l2.has_edge(0, 1));

    auto r3 = Graph::ring(3);
    for (size_t v = 0; v < 3; v++) {
        ASSERT_EQ(r3.degree(v), 2u);
    }
    auto r7 = Graph::ring(7);
    ASSERT_TRUE(r7.has_edge(6, 0));
    ASSERT_EQ(r7.num_edges(), 7u);

    auto s4 = Graph::star(4);
    ASSERT_EQ(s4.degree(0), 3u);
    for (size_t v = 1; v < 4; v++) {
        ASSERT_EQ(s4.degree(v), 1u);
    }
    ASSERT_EQ(Graph::complete(5).num_edges(), 10u);
    ASSERT_EQ(Graph::empty(4).num_edges(), 0u);
}

TEST(graph, rejects_bad_input) {
    ASSERT_THROW(Graph::empty(0), InputError);
    ASSERT_THROW(Graph::empty(kMaxVertices + 1), ResourceError);
    ASSERT_THROW(Graph::from_edges(3, {{0, 0}}), InputError);
    ASSERT_THROW(Graph::from_edges(3, {{0, 3}}), InputError);
    ASSERT_THROW(Graph::ring(2), InputError);
    ASSERT_THROW(Graph::from_rows({0b10, 0b00}), InputError);
}

TEST(graph, edges_round_trip) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; t++) {
        auto g = random_graph(9, rng);
        ASSERT_EQ(Graph::from_edges(9, g.edges()), g);
    }
}

TEST(graph, without_relabels) {
    auto g = Graph::ring(5).without(0b00100);
    ASSERT_EQ(g.num_vertices(), 4u);
    ASSERT_EQ(g, Graph::from_edges(4, {{0, 1}, {2, 3}, {3, 0}}));
}

TEST(gf2, rank_matches_span_size) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 300; t++) {
        size_t rows = 1 + rng() % 8;
        size_t cols = 1 + rng() % 10;
        std::vector<uint64_t> r;
        for (size_t k = 0; k < rows; k++) {
            // Sparse rows make dependencies common.
            r.push_back(rng() & rng() & ((uint64_t{1} << cols) - 1));
        }
        ASSERT_EQ(gf2_rank(r), span_rank(r));
        ASSERT_EQ(gf2_rank(Gf2Matrix::from_rows(cols, r)), span_rank(r));
        ASSERT_EQ(gf2_rank(Gf2Matrix::from_rows(cols, r).transposed()), span_rank(r));
    }
}

TEST(gf2, known_ranks) {
    ASSERT_EQ(gf2_rank(std::vector<uint64_t>{}), 0u);
    ASSERT_EQ(gf2_rank(std::vector<uint64_t>{0b11, 0b11}), 1u);
    ASSERT_EQ(gf2_rank(std::vector<uint64_t>{0b011, 0b110, 0b101}), 2u);
    ASSERT_EQ(gf2_rank(std::vector<uint64_t>{1, 2, 4, 8}), 4u);
}

TEST(gf2, cut_matrix_entries_and_symmetry) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; t++) {
        auto g = random_graph(8, rng);
        VertexMask side = 1 + static_cast<VertexMask>(rng() % 254);
        auto cut = Bipartition::of(8, side);
        auto m = cut_matrix(g, cut);
        auto a = cut.vertices();
        auto b = cut.complement_vertices();
        ASSERT_EQ(m.num_rows(), a.size());
        ASSERT_EQ(m.num_cols(), b.size());
        for (size_t i = 0; i < a.size(); i++) {
            for (size_t j = 0; j < b.size(); j++) {
                ASSERT_EQ(m.get(i, j), g.has_edge(a[i], b[j]));
            }
        }
        ASSERT_EQ(cut_matrix(g, cut.flipped()), m.transposed());
        ASSERT_EQ(gf2_rank(m), gf2_rank(m.transposed()));
        ASSERT_EQ(cut_rank(g, side), gf2_rank(m));
        ASSERT_EQ(cut_rank(g, cut.complement()), gf2_rank(m));
    }
}

TEST(gf2, ring_cut_ranks) {
    // Alternating vertices of the 6-cycle: every A-vertex sees two B-vertices.
    ASSERT_EQ(cut_rank(Graph::ring(6), 0b010101), 2u);
    ASSERT_EQ(cut_rank(Graph::ring(7), 0b0101010), 3u);
    ASSERT_EQ(cut_rank(Graph::complete(6), 0b000111), 1u);
}

TEST(local_complement, involution_on_all_small_graphs) {
    for (size_t n = 1; n <= 5; n++) {
        for_each_graph(n, [&](const Graph &g) {
            for (size_t v = 0; v < n; v++) {
                ASSERT_EQ(local_complement(local_complement(g, v), v), g);
            }
        });
    }
}

TEST(local_complement, star_center_gives_complete) {
    ASSERT_EQ(local_complement(Graph::star(5), 0), Graph::complete(5));
    ASSERT_EQ(local_complement(Graph::ring(3), 0), Graph::from_edges(3, {{0, 1}, {0, 2}}));
}

TEST(lc_orbit, triangle_orbit) {
    auto orbit = lc_orbit(Graph::ring(3), 100);
    ASSERT_TRUE(orbit.complete);
    ASSERT_EQ(orbit.members.size(), 4u);
    ASSERT_EQ(orbit.members[0], Graph::ring(3));
}

TEST(lc_orbit, closed_under_local_complementation) {
    auto orbit = lc_orbit(Graph::ring(6), 100000);
    ASSERT_TRUE(orbit.complete);
    std::unordered_set<Graph, GraphHash> members(orbit.members.begin(), orbit.members.end());
    ASSERT_EQ(members.size(), orbit.members.size());
    for (const auto &g : orbit.members) {
        for (size_t v = 0; v < 6; v++) {
            ASSERT_TRUE(members.count(local_complement(g, v)));
        }
    }
}

TEST(lc_orbit, cap_truncates) {
    auto orbit = lc_orbit(Graph::ring(7), 5);
    ASSERT_FALSE(orbit.complete);
    ASSERT_EQ(orbit.members.size(), 5u);
}

TEST(vertex_cover, matches_brute_force_on_all_small_graphs) {
    for (size_t n = 1; n <= 6; n++) {
        for_each_graph(n, [&](const Graph &g) {
            auto c = min_vertex_cover(g);
            ASSERT_TRUE(covers_all_edges(g, c.witness)) << g.str();
            ASSERT_EQ(static_cast<size_t>(std::popcount(c.witness)), c.size);
            ASSERT_EQ(c.size, brute_force_cover(g)) << g.str();
        });
    }
}

TEST(vertex_cover, matches_brute_force_on_random_graphs) {
    std::mt19937_64 rng(3);
    for (size_t n = 7; n <= 12; n++) {
        for (int t = 0; t < 30; t++) {
            auto g = random_graph(n, rng, 0.2 + 0.1 * (t % 5));
            auto c = min_vertex_cover(g);
            ASSERT_TRUE(covers_all_edges(g, c.witness));
            ASSERT_EQ(c.size, brute_force_cover(g)) << g.str();
        }
    }
}

TEST(vertex_cover, families) {
    ASSERT_EQ(min_vertex_cover(Graph::ring(7)).size, 4u);
    ASSERT_EQ(min_vertex_cover(Graph::ring(8)).size, 4u);
    ASSERT_EQ(min_vertex_cover(Graph::line(7)).size, 3u);
    ASSERT_EQ(min_vertex_cover(Graph::star(10)).size, 1u);
    ASSERT_EQ(min_vertex_cover(Graph::complete(6)).size, 5u);
    ASSERT_EQ(min_vertex_cover(Graph::empty(3)).size, 0u);
    ASSERT_EQ(min_vertex_cover(Graph::ring(24)).size, 12u);
}

TEST(graph_predicates, degree_parity) {
    ASSERT_TRUE(degree_parity_all_odd(Graph::complete(4)));
    ASSERT_FALSE(degree_parity_all_odd(Graph::ring(4)));
    ASSERT_TRUE(degree_parity_all_odd(Graph::star(4)));
    ASSERT_FALSE(degree_parity_all_odd(Graph::line(4)));
}

TEST(graph_predicates, connectivity) {
    ASSERT_TRUE(is_connected(Graph::ring(5)));
    ASSERT_FALSE(is_connected(Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
    ASSERT_TRUE(is_connected(Graph::empty(1)));
    ASSERT_FALSE(is_connected(Graph::empty(2)));
}

TEST(graph_predicates, odd_cycle) {
    ASSERT_TRUE(is_odd_cycle(Graph::ring(3)));
    ASSERT_TRUE(is_odd_cycle(Graph::ring(9)));
    ASSERT_FALSE(is_odd_cycle(Graph::ring(8)));
    ASSERT_FALSE(is_odd_cycle(Graph::line(5)));
    // Relabeled 5-cycle 0-2-4-1-3-0.
    ASSERT_TRUE(is_odd_cycle(Graph::from_edges(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}})));
}
