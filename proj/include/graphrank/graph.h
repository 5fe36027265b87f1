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

#ifndef GRAPHRANK_GRAPH_H
#define GRAPHRANK_GRAPH_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace graphrank {

/// Hard ceiling on vertex count. Adjacency rows fit in one 32-bit word.
constexpr size_t kMaxVertices = 24;

/// Vertex subset. Bit q set means vertex q is in the subset.
using VertexMask = uint32_t;

inline VertexMask all_vertices(size_t n) {
    return n >= 32 ? ~VertexMask{0} : ((VertexMask{1} << n) - 1);
}

/// Labeled simple graph on vertices 0..n-1 stored as symmetric GF(2) adjacency rows.
///
/// Immutable after construction: every "mutating" operation returns a new graph.
class Graph {
   public:
    Graph() = default;

    /// Graph with no edges. Throws InputError for n = 0 and ResourceError above kMaxVertices.
    static Graph empty(size_t n);
    /// Path 0-1-...-(n-1).
    static Graph line(size_t n);
    /// Cycle with edges (i, i+1 mod n). Requires n >= 3.
    static Graph ring(size_t n);
    /// Vertex 0 joined to every other vertex.
    static Graph star(size_t n);
    static Graph complete(size_t n);
    /// Validates every pair: in range, no self-loop. Duplicate edges are merged.
    static Graph from_edges(size_t n, const std::vector<std::pair<size_t, size_t>> &edges);
    /// Rows must already be a symmetric zero-diagonal adjacency; validated.
    static Graph from_rows(std::vector<VertexMask> rows);

    size_t num_vertices() const {
        return rows_.size();
    }
    size_t num_edges() const;
    bool has_edge(size_t u, size_t v) const {
        return (rows_[u] >> v) & 1;
    }
    VertexMask neighbors(size_t v) const {
        return rows_[v];
    }
    size_t degree(size_t v) const;
    const std::vector<VertexMask> &rows() const {
        return rows_;
    }
    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<size_t, size_t>> edges() const;

    /// Induced subgraph on the vertices NOT in `removed`, relabeled in ascending order.
    Graph without(VertexMask removed) const;

    bool operator==(const Graph &other) const {
        return rows_ == other.rows_;
    }
    bool operator!=(const Graph &other) const {
        return !(*this == other);
    }

    std::string str() const;

   private:
    explicit Graph(std::vector<VertexMask> rows) : rows_(std::move(rows)) {
    }
    std::vector<VertexMask> rows_;
};

struct GraphHash {
    size_t operator()(const Graph &g) const;
};

/// A cut A | complement(A) of an n-vertex graph.
struct Bipartition {
    size_t n = 0;
    VertexMask side = 0;

    /// Throws InputError if `side` is empty, full, or references vertices >= n.
    static Bipartition of(size_t n, VertexMask side);

    VertexMask complement() const {
        return all_vertices(n) & ~side;
    }
    Bipartition flipped() const {
        return Bipartition{n, complement()};
    }
    size_t size() const;
    std::vector<size_t> vertices() const;
    std::vector<size_t> complement_vertices() const;
};

/// Dense matrix over GF(2). Up to 64 columns; row r is a bitset with bit c = entry (r, c).
class Gf2Matrix {
   public:
    Gf2Matrix() = default;
    Gf2Matrix(size_t num_rows, size_t num_cols);
    static Gf2Matrix from_rows(size_t num_cols, std::vector<uint64_t> rows);

    size_t num_rows() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return cols_;
    }
    bool get(size_t r, size_t c) const {
        return (rows_[r] >> c) & 1;
    }
    void set(size_t r, size_t c, bool value);
    const std::vector<uint64_t> &rows() const {
        return rows_;
    }
    Gf2Matrix transposed() const;

    bool operator==(const Gf2Matrix &other) const {
        return cols_ == other.cols_ && rows_ == other.rows_;
    }

   private:
    size_t cols_ = 0;
    std::vector<uint64_t> rows_;
};

/// Row rank over GF(2).
size_t gf2_rank(const Gf2Matrix &m);
/// Rank of a list of row bitsets, without building a matrix.
size_t gf2_rank(std::vector<uint64_t> rows);

/// |A| x |complement(A)| biadjacency of the cut. Rows follow A's vertices ascending,
/// columns follow the complement's vertices ascending.
Gf2Matrix cut_matrix(const Graph &g, const Bipartition &cut);

/// gf2_rank(cut_matrix(g, cut)) computed straight from the adjacency rows.
size_t cut_rank(const Graph &g, VertexMask side);

/// Complements the subgraph induced on N(v).
Graph local_complement(const Graph &g, size_t v);

struct LcOrbit {
    std::vector<Graph> members;
    /// True when the breadth-first closure finished before hitting the cap.
    bool complete = false;
};

/// Breadth-first closure under local complementation, deduplicated by labeled adjacency.
/// members[0] is the input graph.
LcOrbit lc_orbit(const Graph &g, size_t cap);

struct VertexCover {
    size_t size = 0;
    VertexMask witness = 0;
};

/// Exact minimum vertex cover by branch and bound.
VertexCover min_vertex_cover(const Graph &g);
/// True iff every edge has an endpoint in `cover`.
bool covers_all_edges(const Graph &g, VertexMask cover);

bool degree_parity_all_odd(const Graph &g);
bool is_connected(const Graph &g);
/// True iff g is a single cycle of odd length >= 3 (any labeling).
bool is_odd_cycle(const Graph &g);

}  // namespace graphrank

#endif
