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


#ifndef GRAPHRANK_MEASURES_H
#define GRAPHRANK_MEASURES_H

#include <cstdint>
#include <string>
#include <vector>

#include "graphrank/graph.h"
#include "graphrank/state.h"

namespace graphrank {

/// Largest state handled by gme_dense.
constexpr size_t kMaxGmeDenseQubits = 12;

/// Bipartite entanglement measures minimized over every nonempty proper cut.
///
/// The geometric value is the cut-minimized 1 - max Schmidt coefficient, not the general
/// geometric measure that optimizes over all fully product states.
struct GmeReport {
    double concurrence = 0;
    double negativity = 0;
    double geometric = 0;
    /// Smallest cut rank (closed form) or log2 of the smallest Schmidt rank (dense).
    size_t d_min = 0;
    /// A side attaining the minimum; always contains vertex 0.
    VertexMask witness_cut = 0;
    std::string method;
};

/// From the cut ranks alone: concurrence sqrt(2(1 - 2^-d)), negativity (2^d - 1)/2,
/// geometric 1 - 2^-d at d = d_min. Requires n >= 2.
GmeReport gme_closed_form(const Graph &g);
/// Minimizes the measures over all 2^{n-1} - 1 cuts using Schmidt spectra. Requires 2 <= n <= 12.
GmeReport gme_dense(const StateVector &psi);
GmeReport gme_dense(const Eigen::VectorXcd &psi, size_t n);

/// |<psi| Y^{(x)n} |psi*>|^2 computed exactly.
ExactAmplitude n_tangle_exact(const StateVector &psi);
double n_tangle_dense(const StateVector &psi);
double n_tangle_dense(const Eigen::VectorXcd &psi, size_t n);
/// 1 iff every vertex has odd degree.
int n_tangle_graph_rule(const Graph &g);

/// Hermitian Pauli operator sign * P_0 (x) ... (x) P_{n-1}; qubit q is X, Y or Z according
/// to (bit q of x, bit q of z) = (1,0), (1,1), (0,1).
struct PauliString {
    VertexMask x = 0;
    VertexMask z = 0;
    int sign = 1;

    std::string str(size_t n) const;
    bool operator==(const PauliString &) const = default;
};

/// Parses e.g. "+XZI" or "-YYZ".
PauliString parse_pauli(std::string_view text, size_t n);

struct StabilizerTableau {
    size_t n = 0;
    std::vector<PauliString> generators;

    /// Throws InputError unless there are n independent, mutually commuting generators
    /// with signs +-1.
    void validate() const;
    /// Sign of `p` if its Pauli part lies in the generated group, 0 otherwise.
    int member_sign(const PauliString &p) const;
};

/// S_a = X_a prod_{b in N(a)} Z_b, all signs +1.
StabilizerTableau graph_to_tableau(const Graph &g);

/// Tableau of Y^{(x)n} |s*>: complex conjugation flips the sign once per Y letter and the
/// Y conjugation flips it once per X or Z letter.
StabilizerTableau tilde_tableau(const StabilizerTableau &t);

/// 1 iff |s> and Y^{(x)n}|s*> define the same stabilizer group with the same signs, else 0.
int n_tangle_stabilizer(const StabilizerTableau &t);

/// Number of labeled graphs on n vertices whose degrees are all odd, by exhaustive
/// enumeration. 0 for odd n. Requires 1 <= n <= 8.
uint64_t count_odd_degree_graphs(size_t n);

}  // namespace graphrank

#endif
