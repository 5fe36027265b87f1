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

#include <random>
#include <sstream>

#include "fixtures.h"
#include "graphrank/errors.h"
#include "graphrank/io.h"
#include "test_util.h"

using namespace graphrank;

namespace {

std::string error_of(const std::string &text) {
    std::stringstream in(text);
    try {
        parse_edge_list(in, "g.txt");
    } catch (const InputError &e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(edge_list, parses_with_comments) {
    std::stringstream in("# a triangle\n\n3\n0 1  # first\n1 2\n2 0\n");
    ASSERT_EQ(parse_edge_list(in), Graph::ring(3));
    std::stringstream only_n("5\n");
    ASSERT_EQ(parse_edge_list(only_n), Graph::empty(5));
}

TEST(edge_list, errors_carry_line_numbers) {
    EXPECT_EQ(error_of("3\n0 1\n1 1\n"), "g.txt:3: self-loop on vertex 1");
    EXPECT_EQ(error_of("3\n0 3\n"), "g.txt:2: vertex out of range 0..2");
    EXPECT_EQ(error_of("# c\n3\n0 1\n1 0\n"), "g.txt:4: duplicate edge 0 1");
    EXPECT_EQ(error_of("3\n0 1 2\n"), "g.txt:2: expected an edge 'u v'");
    EXPECT_EQ(error_of("3\n0 -1\n"), "g.txt:2: expected an edge 'u v'");
    EXPECT_EQ(error_of("x\n"), "g.txt:1: expected the vertex count");
    EXPECT_EQ(error_of("0\n"), "g.txt:1: vertex count must be in 1..24");
    EXPECT_EQ(error_of("# nothing\n"), "g.txt:1: missing vertex count");
}

TEST(edge_list, round_trip) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; t++) {
        auto g = graphrank::testing::random_graph(1 + t % 12, rng);
        std::stringstream in(to_edge_list(g));
        ASSERT_EQ(parse_edge_list(in), g);
    }
}

TEST(graph6, known_strings) {
    EXPECT_EQ(parse_graph6("Bw"), Graph::ring(3));
    EXPECT_EQ(to_graph6(Graph::ring(3)), "Bw");
    EXPECT_EQ(to_graph6(Graph::empty(1)), "@");
    EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), Graph::ring(3));
    // nauty's geng output for the 4-cycle 0-2-1-3-0.
    EXPECT_EQ(parse_graph6("C]"), Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
}

TEST(graph6, round_trip_and_errors) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 50; t++) {
        auto g = graphrank::testing::random_graph(1 + t % 20, rng);
        ASSERT_EQ(parse_graph6(to_graph6(g)), g);
    }
    EXPECT_THROW(parse_graph6(""), InputError);
    EXPECT_THROW(parse_graph6("Bww"), InputError);
    EXPECT_THROW(parse_graph6("B "), InputError);
    EXPECT_THROW(parse_graph6("?"), InputError);
}

TEST(json_io, amplitude_forms) {
    EXPECT_EQ(amplitude_to_json(ExactAmplitude::from_triple(-1, 0, 3)).dump(), "[-1,0,3]");
    auto mixed = ExactAmplitude::one() + ExactAmplitude::inv_sqrt2();
    EXPECT_EQ(amplitude_to_json(mixed).size(), 5u);
    EXPECT_EQ(amplitude_from_json(amplitude_to_json(mixed)), mixed);
    EXPECT_THROW(amplitude_from_json(nlohmann::json::parse("[1,0]")), InputError);
    EXPECT_THROW(amplitude_from_json(nlohmann::json::parse("[1,0,-1]")), InputError);
    EXPECT_THROW(amplitude_from_json(nlohmann::json::parse("[1.5,0,1]")), InputError);
}

TEST(json_io, state_round_trip) {
    for (auto g : {Graph::ring(5), Graph::complete(4), Graph::empty(2)}) {
        auto psi = build_graph_state(g);
        auto text = state_to_json(psi).dump();
        ASSERT_EQ(state_from_json(nlohmann::json::parse(text)), psi);
    }
    auto complex_state = apply_pauli(build_graph_state(Graph::line(3)), "YIY");
    ASSERT_EQ(state_from_json(state_to_json(complex_state)), complex_state);
    EXPECT_THROW(state_from_json(nlohmann::json::parse(R"({"n": 2, "amplitudes": [[1,0,0]]})")), InputError);
    EXPECT_THROW(state_from_json(nlohmann::json::parse(R"({"amplitudes": []})")), InputError);
}

TEST(json_io, cpd_round_trip) {
    for (const auto &d : {ring_cpd(7), line_cpd(5), fixtures::triangle_two_terms()}) {
        auto back = cpd_from_json(nlohmann::json::parse(cpd_to_json(d).dump()));
        ASSERT_EQ(back.n, d.n);
        ASSERT_EQ(back.terms, d.terms);
    }
    EXPECT_THROW(cpd_from_json(nlohmann::json::parse(R"({"n": 2, "terms": [{"factors": [[[1,0,0],[0,0,0]]]}]})")),
                 InputError);
}
