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

#include "graphrank/graph.h"

#include <bit>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "graphrank/errors.h"

namespace graphrank {

namespace {

void check_vertex_count(size_t n) {
    if (n < 1) {
        throw InputError("graph needs at least one vertex");
    }
    if (n > kMaxVertices) {
        throw ResourceError(
            "graph has " + std::to_string(n) + " vertices; the ceiling is " + std::to_string(kMaxVertices));
    }
}

}  // namespace

Graph Graph::empty(size_t n) {
    check_vertex_count(n);
    return Graph(std::vector<VertexMask>(n, 0));
}

Graph Graph::line(size_t n) {
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t k = 0; k + 1 < n; k++) {
        edges.emplace_back(k, k + 1);
    }
    return from_edges(n, edges);
}

Graph Graph::ring(size_t n) {
    if (n < 3) {
        throw InputError("a ring needs at least 3 vertices, got " + std::to_string(n));
    }
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t k = 0; k < n; k++) {
        edges.emplace_back(k, (k + 1) % n);
    }
    return from_edges(n, edges);
}

Graph Graph::star(size_t n) {
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t k = 1; k < n; k++) {
        edges.emplace_back(0, k);
    }
    return from_edges(n, edges);
}

Graph Graph::complete(size_t n) {
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            edges.emplace_back(a, b);
        }
    }
    return from_edges(n, edges);
}

Graph Graph::from_edges(size_t n, const std::vector<std::pair<size_t, size_t>> &edges) {
    check_vertex_count(n);
    std::vector<VertexMask> rows(n, 0);
    for (const auto &[u, v] : edges) {
        if (u >= n || v >= n) {
            std::stringstream ss;
            ss << "edge (" << u << ", " << v << ") references a vertex outside 0.." << n - 1;
            throw InputError(ss.str());
        }
        if (u == v) {
            throw InputError("self-loop at vertex " + std::to_string(u));
        }
        rows[u] |= VertexMask{1} << v;
        rows[v] |= VertexMask{1} << u;
    }
    return Graph(std::move(rows));
}

Graph Graph::from_rows(std::vector<VertexMask> rows) {
    size_t n = rows.size();
    check_vertex_count(n);
    for (size_t u = 0; u < n; u++) {
        if (rows[u] & ~all_vertices(n)) {
            throw InputError("adjacency row " + std::to_string(u) + " references a vertex out of range");
        }
        if ((rows[u] >> u) & 1) {
            throw InputError("self-loop at vertex " + std::to_string(u));
        }
        for (size_t v = 0; v < n; v++) {
            if (((rows[u] >> v) & 1) != ((rows[v] >> u) & 1)) {
                throw InputError("adjacency is not symmetric");
            }
        }
    }
    return Graph(std::move(rows));
}

size_t Graph::num_edges() const {
    size_t total = 0;
    for (auto r : rows_) {
        total += std::popcount(r);
    }
    return total / 2;
}

size_t Graph::degree(size_t v) const {
    return std::popcount(rows_[v]);
}

std::vector<std::pair<size_t, size_t>> Graph::edges() const {
    std::vector<std::pair<size_t, size_t>> result;
    for (size_t u = 0; u < rows_.size(); u++) {
        for (size_t v = u + 1; v < rows_.size(); v++) {
            if (has_edge(u, v)) {
                result.emplace_back(u, v);
            }
        }
    }
    return result;
}

Graph Graph::without(VertexMask removed) const {
    std::vector<size_t> kept;
    for (size_t v = 0; v < rows_.size(); v++) {
        if (!((removed >> v) & 1)) {
            kept.push_back(v);
        }
    }
    if (kept.empty()) {
        throw InputError("cannot remove every vertex of a graph");
    }
    std::vector<VertexMask> rows(kept.size(), 0);
    for (size_t i = 0; i < kept.size(); i++) {
        for (size_t j = 0; j < kept.size(); j++) {
            if (has_edge(kept[i], kept[j])) {
                rows[i] |= VertexMask{1} << j;
            }
        }
    }
    return Graph(std::move(rows));
}

std::string Graph::str() const {
    std::stringstream ss;
    ss << "Graph(n=" << rows_.size() << ", edges=[";
    bool first = true;
    for (const auto &[u, v] : edges()) {
        if (!first) {
            ss << ", ";
        }
        first = false;
        ss << "(" << u << "," << v << ")";
    }
    ss << "])";
    return ss.str();
}

size_t GraphHash::operator()(const Graph &g) const {
    uint64_t h = 0xcbf29ce484222325ULL ^ g.num_vertices();
    for (auto r : g.rows()) {
        h ^= r;
        h *= 0x100000001b3ULL;
        h ^= h >> 29;
    }
    return static_cast<size_t>(h);
}

Bipartition Bipartition::of(size_t n, VertexMask side) {
    if (n < 2 || n > kMaxVertices) {
        throw InputError("a bipartition needs 2.." + std::to_string(kMaxVertices) + " vertices");
    }
    if (side & ~all_vertices(n)) {
        throw InputError("cut references a vertex outside the graph");
    }
    if (side == 0 || side == all_vertices(n)) {
        throw InputError("cut side must be a nonempty proper subset");
    }
    return Bipartition{n, side};
}

size_t Bipartition::size() const {
    return std::popcount(side);
}

std::vector<size_t> Bipartition::vertices() const {
    std::vector<size_t> out;
    for (size_t v = 0; v < n; v++) {
        if ((side >> v) & 1) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<size_t> Bipartition::complement_vertices() const {
    return flipped().vertices();
}

Gf2Matrix::Gf2Matrix(size_t num_rows, size_t num_cols) : cols_(num_cols), rows_(num_rows, 0) {
    if (num_cols > 64) {
        throw ResourceError("Gf2Matrix supports at most 64 columns");
    }
}

Gf2Matrix Gf2Matrix::from_rows(size_t num_cols, std::vector<uint64_t> rows) {
    Gf2Matrix m(0, num_cols);
    uint64_t mask = num_cols == 64 ? ~uint64_t{0} : ((uint64_t{1} << num_cols) - 1);
    for (auto r : rows) {
        if (r & ~mask) {
            throw InputError("row has bits beyond the column count");
        }
    }
    m.rows_ = std::move(rows);
    return m;
}

void Gf2Matrix::set(size_t r, size_t c, bool value) {
    if (value) {
        rows_[r] |= uint64_t{1} << c;
    } else {
        rows_[r] &= ~(uint64_t{1} << c);
    }
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

size_t gf2_rank(std::vector<uint64_t> rows) {
    size_t rank = 0;
    for (size_t r = 0; r < rows.size(); r++) {
        uint64_t pivot_row = rows[r];
        if (pivot_row == 0) {
            continue;
        }
        rank++;
        uint64_t pivot = pivot_row & -pivot_row;
        for (size_t s = r + 1; s < rows.size(); s++) {
            if (rows[s] & pivot) {
                rows[s] ^= pivot_row;
            }
        }
    }
    return rank;
}

size_t gf2_rank(const Gf2Matrix &m) {
    return gf2_rank(m.rows());
}

Gf2Matrix cut_matrix(const Graph &g, const Bipartition &cut) {
    if (cut.n != g.num_vertices()) {
        throw InputError("cut and graph disagree on vertex count");
    }
    auto rows = cut.vertices();
    auto cols = cut.complement_vertices();
    Gf2Matrix m(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); i++) {
        for (size_t j = 0; j < cols.size(); j++) {
            if (g.has_edge(rows[i], cols[j])) {
                m.set(i, j, true);
            }
        }
    }
    return m;
}

size_t cut_rank(const Graph &g, VertexMask side) {
    // Column positions don't matter for the rank, so the complement-restricted
    // adjacency rows can be fed in directly.
    VertexMask other = all_vertices(g.num_vertices()) & ~side;
    uint64_t rows[kMaxVertices];
    size_t k = 0;
    for (VertexMask s = side; s; s &= s - 1) {
        rows[k++] = g.neighbors(std::countr_zero(s)) & other;
    }
    size_t rank = 0;
    for (size_t r = 0; r < k; r++) {
        uint64_t pivot_row = rows[r];
        if (pivot_row == 0) {
            continue;
        }
        rank++;
        uint64_t pivot = pivot_row & -pivot_row;
        for (size_t s = r + 1; s < k; s++) {
            if (rows[s] & pivot) {
                rows[s] ^= pivot_row;
            }
        }
    }
    return rank;
}

Graph local_complement(const Graph &g, size_t v) {
    if (v >= g.num_vertices()) {
        throw InputError("local complementation at vertex " + std::to_string(v) + " which is out of range");
    }
    auto rows = g.rows();
    VertexMask nbhd = g.neighbors(v);
    for (VertexMask s = nbhd; s; s &= s - 1) {
        size_t u = std::countr_zero(s);
        rows[u] ^= nbhd & ~(VertexMask{1} << u);
    }
    return Graph::from_rows(std::move(rows));
}

LcOrbit lc_orbit(const Graph &g, size_t cap) {
    if (cap < 1) {
        throw InputError("orbit cap must be at least 1");
    }
    LcOrbit orbit;
    std::unordered_set<Graph, GraphHash> seen;
    std::deque<size_t> frontier;
    seen.insert(g);
    orbit.members.push_back(g);
    frontier.push_back(0);
    while (!frontier.empty()) {
        Graph cur = orbit.members[frontier.front()];
        frontier.pop_front();
        for (size_t v = 0; v < cur.num_vertices(); v++) {
            if (cur.degree(v) < 2) {
                continue;  // complementing fewer than two neighbors is a no-op
            }
            Graph next = local_complement(cur, v);
            if (seen.count(next)) {
                continue;
            }
            if (orbit.members.size() >= cap) {
                orbit.complete = false;
                return orbit;
            }
            seen.insert(next);
            orbit.members.push_back(std::move(next));
            frontier.push_back(orbit.members.size() - 1);
        }
    }
    orbit.complete = true;
    return orbit;
}

namespace {

struct CoverSearch {
    const std::vector<VertexMask> &adj;
    size_t best_size;
    VertexMask best;

    // Greedy maximal matching size; a valid lower bound on any cover of the live edges.
    size_t matching_bound(VertexMask live) const {
        size_t m = 0;
        VertexMask free = live;
        for (VertexMask s = live; s; s &= s - 1) {
            size_t u = std::countr_zero(s);
            if (!((free >> u) & 1)) {
                continue;
            }
            VertexMask partners = adj[u] & free;
            if (partners) {
                size_t w = std::countr_zero(partners);
                free &= ~((VertexMask{1} << u) | (VertexMask{1} << w));
                m++;
            }
        }
        return m;
    }

    void search(VertexMask live, VertexMask chosen, size_t size) {
        if (size >= best_size) {
            return;
        }
        // Forced moves: the neighbor of a degree-1 vertex can always be taken.
        bool changed = true;
        while (changed) {
            changed = false;
            for (VertexMask s = live; s; s &= s - 1) {
                size_t u = std::countr_zero(s);
                VertexMask nb = adj[u] & live;
                if (std::popcount(nb) == 1) {
                    size_t w = std::countr_zero(nb);
                    chosen |= VertexMask{1} << w;
                    live &= ~(VertexMask{1} << w);
                    size++;
                    changed = true;
                    break;
                }
            }
            if (size >= best_size) {
                return;
            }
        }
        size_t max_deg = 0;
        size_t pick = 0;
        for (VertexMask s = live; s; s &= s - 1) {
            size_t u = std::countr_zero(s);
            size_t d = std::popcount(adj[u] & live);
            if (d > max_deg) {
                max_deg = d;
                pick = u;
            }
        }
        if (max_deg == 0) {
            best_size = size;
            best = chosen;
            return;
        }
        if (size + matching_bound(live) >= best_size) {
            return;
        }
        VertexMask bit = VertexMask{1} << pick;
        search(live & ~bit, chosen | bit, size + 1);
        VertexMask nb = adj[pick] & live;
        search(live & ~(nb | bit), chosen | nb, size + std::popcount(nb));
    }
};

}  // namespace

VertexCover min_vertex_cover(const Graph &g) {
    size_t n = g.num_vertices();
    CoverSearch s{g.rows(), n + 1, all_vertices(n)};
    s.search(all_vertices(n), 0, 0);
    return VertexCover{s.best_size, s.best};
}

bool covers_all_edges(const Graph &g, VertexMask cover) {
    for (size_t u = 0; u < g.num_vertices(); u++) {
        if (!((cover >> u) & 1) && (g.neighbors(u) & ~cover)) {
            return false;
        }
    }
    return true;
}

bool degree_parity_all_odd(const Graph &g) {
    for (size_t v = 0; v < g.num_vertices(); v++) {
        if (g.degree(v) % 2 == 0) {
            return false;
        }
    }
    return true;
}

bool is_connected(const Graph &g) {
    size_t n = g.num_vertices();
    VertexMask reached = 1;
    VertexMask frontier = 1;
    while (frontier) {
        VertexMask next = 0;
        for (VertexMask s = frontier; s; s &= s - 1) {
            next |= g.neighbors(std::countr_zero(s));
        }
        frontier = next & ~reached;
        reached |= next;
    }
    return reached == all_vertices(n);
}

bool is_odd_cycle(const Graph &g) {
    size_t n = g.num_vertices();
    if (n < 3 || n % 2 == 0) {
        return false;
    }
    for (size_t v = 0; v < n; v++) {
        if (g.degree(v) != 2) {
            return false;
        }
    }
    return is_connected(g);
}

}  // namespace graphrank
