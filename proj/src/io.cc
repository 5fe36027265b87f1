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


#include "graphrank/io.h"

#include <fstream>
#include <set>
#include <sstream>

#include "graphrank/errors.h"

namespace graphrank {

namespace {

[[noreturn]] void fail_at(const std::string &source, size_t line, const std::string &msg) {
    throw InputError(source + ":" + std::to_string(line) + ": " + msg);
}

// Parses a nonnegative integer token, rejecting signs and trailing junk.
bool parse_index(const std::string &tok, size_t &out) {
    if (tok.empty() || tok.size() > 9) {
        return false;
    }
    out = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') {
            return false;
        }
        out = out * 10 + static_cast<size_t>(c - '0');
    }
    return true;
}

const char *kOrdering = "big-endian: qubit 0 is the most significant bit of the basis index";

int64_t as_int(const nlohmann::json &j, const char *what) {
    if (!j.is_number_integer()) {
        throw InputError(std::string(what) + " must be an integer");
    }
    return j.get<int64_t>();
}

}  // namespace

Graph parse_edge_list(std::istream &in, const std::string &source) {
    std::string line;
    size_t line_no = 0;
    size_t n = 0;
    bool have_n = false;
    std::vector<std::pair<size_t, size_t>> edges;
    std::set<std::pair<size_t, size_t>> seen;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::stringstream ss(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ss >> tok) {
            toks.push_back(tok);
        }
        if (toks.empty()) {
            continue;
        }
        if (!have_n) {
            if (toks.size() != 1 || !parse_index(toks[0], n)) {
                fail_at(source, line_no, "expected the vertex count");
            }
            if (n < 1 || n > kMaxVertices) {
                fail_at(source, line_no, "vertex count must be in 1.." + std::to_string(kMaxVertices));
            }
            have_n = true;
            continue;
        }
        size_t u, v;
        if (toks.size() != 2 || !parse_index(toks[0], u) || !parse_index(toks[1], v)) {
            fail_at(source, line_no, "expected an edge 'u v'");
        }
        if (u >= n || v >= n) {
            fail_at(source, line_no, "vertex out of range 0.." + std::to_string(n - 1));
        }
        if (u == v) {
            fail_at(source, line_no, "self-loop on vertex " + std::to_string(u));
        }
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) {
            fail_at(source, line_no, "duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second));
        }
        edges.emplace_back(u, v);
    }
    if (!have_n) {
        fail_at(source, line_no, "missing vertex count");
    }
    return Graph::from_edges(n, edges);
}

Graph read_edge_list_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    return parse_edge_list(in, path);
}

std::string to_edge_list(const Graph &g) {
    std::stringstream ss;
    ss << g.num_vertices() << "\n";
    for (auto [u, v] : g.edges()) {
        ss << u << " " << v << "\n";
    }
    return ss.str();
}

Graph parse_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) {
        text.remove_prefix(10);
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw InputError("empty graph6 string");
    }
    for (char c : text) {
        if (c < 63 || c > 126) {
            throw InputError("invalid graph6 character");
        }
    }
    if (text[0] == 126) {
        throw InputError("graph6 inputs above 62 vertices are not supported");
    }
    size_t n = static_cast<size_t>(text[0] - 63);
    if (n < 1 || n > kMaxVertices) {
        throw InputError("graph6 vertex count must be in 1.." + std::to_string(kMaxVertices));
    }
    size_t bits = n * (n - 1) / 2;
    size_t chars = (bits + 5) / 6;
    if (text.size() != 1 + chars) {
        throw InputError("graph6 string has the wrong length for " + std::to_string(n) + " vertices");
    }
    std::vector<std::pair<size_t, size_t>> edges;
    size_t k = 0;
    for (size_t j = 1; j < n; j++) {
        for (size_t i = 0; i < j; i++, k++) {
            int six = text[1 + k / 6] - 63;
            if ((six >> (5 - k % 6)) & 1) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph &g) {
    size_t n = g.num_vertices();
    std::string out(1, static_cast<char>(63 + n));
    size_t bits = n * (n - 1) / 2;
    std::vector<int> six((bits + 5) / 6, 0);
    size_t k = 0;
    for (size_t j = 1; j < n; j++) {
        for (size_t i = 0; i < j; i++, k++) {
            if (g.has_edge(i, j)) {
                six[k / 6] |= 1 << (5 - k % 6);
            }
        }
    }
    for (int s : six) {
        out += static_cast<char>(63 + s);
    }
    return out;
}

nlohmann::json amplitude_to_json(const ExactAmplitude &z) {
    if (auto t = z.to_triple()) {
        return nlohmann::json::array({t->re, t->im, t->halfpow});
    }
    return nlohmann::json::array({z.a(), z.b(), z.c(), z.d(), z.k()});
}

ExactAmplitude amplitude_from_json(const nlohmann::json &j) {
    if (!j.is_array() || (j.size() != 3 && j.size() != 5)) {
        throw InputError("amplitude must be [re, im, k] or [a, b, c, d, k]");
    }
    if (j.size() == 3) {
        int64_t k = as_int(j[2], "amplitude exponent");
        if (k < 0) {
            throw InputError("amplitude exponent must be nonnegative");
        }
        return ExactAmplitude::from_triple(as_int(j[0], "amplitude re"), as_int(j[1], "amplitude im"), k);
    }
    return ExactAmplitude::from_parts(as_int(j[0], "amplitude a"), as_int(j[1], "amplitude b"),
                                      as_int(j[2], "amplitude c"), as_int(j[3], "amplitude d"),
                                      as_int(j[4], "amplitude k"));
}

nlohmann::json state_to_json(const StateVector &psi) {
    nlohmann::json amps = nlohmann::json::array();
    for (const auto &a : psi.amplitudes()) {
        amps.push_back(amplitude_to_json(a));
    }
    return {{"n", psi.num_qubits()}, {"ordering", kOrdering}, {"amplitudes", std::move(amps)}};
}

StateVector state_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("amplitudes")) {
        throw InputError("state JSON needs 'n' and 'amplitudes'");
    }
    int64_t n = as_int(j["n"], "n");
    if (n < 1 || n > static_cast<int64_t>(kMaxStateQubits)) {
        throw InputError("state qubit count out of range");
    }
    const auto &amps = j["amplitudes"];
    if (!amps.is_array() || amps.size() != (size_t{1} << n)) {
        throw InputError("state JSON needs 2^n amplitudes");
    }
    std::vector<ExactAmplitude> out;
    out.reserve(amps.size());
    for (const auto &a : amps) {
        out.push_back(amplitude_from_json(a));
    }
    return StateVector(static_cast<size_t>(n), std::move(out));
}

nlohmann::json cpd_to_json(const CpDecomposition &d) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &t : d.terms) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto &f : t.factors) {
            factors.push_back({amplitude_to_json(f[0]), amplitude_to_json(f[1])});
        }
        terms.push_back({{"weight", amplitude_to_json(t.weight)}, {"factors", std::move(factors)}});
    }
    return {{"n", d.n}, {"terms", std::move(terms)}};
}

CpDecomposition cpd_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms") || !j["terms"].is_array()) {
        throw InputError("decomposition JSON needs 'n' and a 'terms' array");
    }
    int64_t n = as_int(j["n"], "n");
    if (n < 1 || n > static_cast<int64_t>(kMaxStateQubits)) {
        throw InputError("decomposition qubit count out of range");
    }
    CpDecomposition d{static_cast<size_t>(n), {}};
    for (const auto &t : j["terms"]) {
        if (!t.is_object() || !t.contains("factors") || !t["factors"].is_array()) {
            throw InputError("each term needs a 'factors' array");
        }
        CpTerm term;
        term.weight = t.contains("weight") ? amplitude_from_json(t["weight"]) : ExactAmplitude::one();
        for (const auto &f : t["factors"]) {
            if (!f.is_array() || f.size() != 2) {
                throw InputError("each factor is a pair of amplitudes");
            }
            term.factors.push_back({amplitude_from_json(f[0]), amplitude_from_json(f[1])});
        }
        d.terms.push_back(std::move(term));
    }
    d.validate();
    return d;
}

}  // namespace graphrank
