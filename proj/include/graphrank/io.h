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


#ifndef GRAPHRANK_IO_H
#define GRAPHRANK_IO_H

#include <istream>
#include <json.hpp>
#include <string>

#include "graphrank/cpd.h"
#include "graphrank/graph.h"
#include "graphrank/state.h"

namespace graphrank {

/// Edge-list text: the first non-comment line holds n, every later line one 0-indexed
/// `u v` pair. Text after '#' is ignored. Errors name the offending line.
Graph parse_edge_list(std::istream &in, const std::string &source = "<input>");
Graph read_edge_list_file(const std::string &path);
std::string to_edge_list(const Graph &g);

/// graph6 (the nauty format), n <= 62.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph &g);

/// [re, im, k] meaning (re + i*im) * 2^{-k/2}; values outside that form use [a, b, c, d, k]
/// for ((a + b*sqrt2) + i(c + d*sqrt2)) / 2^k.
nlohmann::json amplitude_to_json(const ExactAmplitude &z);
ExactAmplitude amplitude_from_json(const nlohmann::json &j);

/// {"n", "ordering", "amplitudes": [...]} with qubit 0 the most significant index bit.
nlohmann::json state_to_json(const StateVector &psi);
StateVector state_from_json(const nlohmann::json &j);

/// {"n", "terms": [{"weight", "factors": [[amp0, amp1], ...]}]}.
nlohmann::json cpd_to_json(const CpDecomposition &d);
CpDecomposition cpd_from_json(const nlohmann::json &j);

}  // namespace graphrank

#endif
