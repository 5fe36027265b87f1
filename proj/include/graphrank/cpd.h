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

#ifndef GRAPHRANK_CPD_H
#define GRAPHRANK_CPD_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphrank/exact.h"
#include "graphrank/graph.h"
#include "graphrank/state.h"

namespace graphrank {

/// Single-qubit vector (amplitude of |0>, amplitude of |1>).
using QubitVector = std::array<ExactAmplitude, 2>;

namespace qubit {
QubitVector zero();
QubitVector one();
QubitVector plus();
QubitVector minus();
/// (|0> + i|1>)/sqrt2.
QubitVector plus_i();
/// (|0> - i|1>)/sqrt2.
QubitVector minus_i();
/// Z applied to v.
QubitVector z(const QubitVector &v);
}  // namespace qubit

/// weight * factors[0] (x) factors[1] (x) ... (x) factors[n-1].
struct CpTerm {
    ExactAmplitude weight = ExactAmplitude::one();
    std::vector<QubitVector> factors;

    bool operator==(const CpTerm &) const = default;
    bool operator<(const CpTerm &other) const;
};

/// Exact CP (canonical polyadic) decomposition of an n-qubit tensor: sum of weighted
/// rank-one terms. Term count is the length of the decomposition.
struct CpDecomposition {
    size_t n = 0;
    std::vector<CpTerm> terms;

    size_t rank() const {
        return terms.size();
    }
    /// Throws InputError on wrong factor counts or a zero factor.
    void validate() const;
    /// Terms sorted into a canonical order so two decompositions compare term-by-term.
    CpDecomposition canonical() const;
};

/// Dense exact sum of the terms.
StateVector reconstruct(const CpDecomposition &d);

/// 2^{floor(n/2)} terms for the n-qubit line state. Requires n >= 2.
CpDecomposition line_cpd(size_t n);

/// The P0/P1 split, on the last qubit, of |phi_{2h+1}> = P0^{(first)} |L_{2h+1}>.
struct PhiSplit {
    CpDecomposition p0;
    CpDecomposition p1;
};

/// Builds the split recursively from the 5-qubit base. Requires h >= 2; each part has 2^{h-1} terms.
PhiSplit phi_split(size_t h);

/// Decomposition of the odd ring state on m = 2h+1 qubits with 3 * 2^{h-1} terms (3 terms for m = 3),
/// from CZ_{first,last} = I (x) Z + 2 P0 (x) P1 applied to the line state.
CpDecomposition ring_cpd(size_t m);

struct VerifyResult {
    bool exact = false;
    /// Euclidean norm of reconstruct(d) - target; exactly 0 when `exact`.
    double residual = 0;
};

VerifyResult verify(const CpDecomposition &d, const StateVector &target);

struct RankBounds {
    uint64_t lower = 1;
    uint64_t upper = 1;

    /// Best flattening rank 2^{d} over the cuts examined, and its cut.
    uint64_t flattening_lower = 1;
    size_t max_cut_rank = 0;
    VertexMask lower_cut = 0;
    /// The half-exponent reading 2^{d/2} of the same cut rank, reported for comparison.
    double half_exponent_lower = 1;
    bool exhaustive_cuts = true;

    /// Smallest 2^{tau} found over the local-complementation orbit.
    uint64_t cover_upper = 1;
    Graph cover_graph;
    VertexCover cover;
    size_t orbit_size = 0;
    bool orbit_complete = false;

    /// Set when the graph is an odd cycle with at least 5 vertices and the
    /// odd-ring refinements were applied.
    bool odd_ring = false;
    std::string lower_witness;
    std::string upper_witness;
};

/// Combines the flattening lower bound, the vertex-cover upper bound minimized over the
/// LC orbit, and for odd cycles of length 2h+1 >= 5 the refinements lower = 2^h + 1 and
/// upper <= 3 * 2^{h-1}. Cuts are exhaustive for n <= 16 and sampled (seeded) above.
RankBounds rank_bounds(const Graph &g, size_t orbit_cap, uint64_t seed = 0);

struct SupportReport {
    /// Matrix rank of the reduced density matrix on the kept side.
    size_t support_rank = 0;
    /// Per term: is its kept-side product vector inside the support?
    std::vector<bool> in_support;
    std::vector<double> residuals;
    /// Does the span of the kept-side term vectors contain the support?
    bool span_contains_support = false;
};

/// Tests each term's factors on the complement of `traced` against the support of
/// rho = Tr_traced |psi><psi| (projection residual below kSupportTolerance).
SupportReport support_membership(const CpDecomposition &d, const Bipartition &traced, const StateVector &psi);

constexpr double kSupportTolerance = 1e-10;

/// Checks the structure behind the odd-ring lower bound for ring(2h+1), h in 2..4,
/// tracing out A = {1, 3, ..., 2h-1} (0-indexed) and keeping B = {0, 2, ..., 2h}.
struct LowerBoundReport {
    size_t h = 0;
    /// (i) the 2^h states e_z = U(z)|R - A> are exactly orthonormal.
    size_t basis_states = 0;
    bool basis_orthonormal = false;
    /// rho_B has rank 2^h with every nonzero eigenvalue 2^{-h}.
    bool rho_flat_rank = false;
    /// (ii) the 2^h listed product states lie in the support and are product on every
    /// single-qubit cut of B.
    size_t product_states = 0;
    bool products_in_support = false;
    bool products_are_product = false;
    /// (iii) the phased pair combinations of e_z, e_zbar equal those product states exactly.
    bool combinations_exact = false;
    /// (iv) seeded random support vectors are entangled on at least one single-qubit cut.
    size_t random_trials = 0;
    size_t random_entangled = 0;
    bool passed() const {
        return basis_orthonormal && rho_flat_rank && products_in_support && products_are_product &&
               combinations_exact && random_trials == random_entangled;
    }
};

LowerBoundReport verify_lower_bound_structure(size_t h, size_t random_trials = 1000, uint64_t seed = 1);

/// The kept-side basis e_z of the lower-bound argument, indexed by z over A's vertices ascending.
std::vector<StateVector> ring_support_basis(size_t h);
/// The 2^h product states spanning the same support: (z, pair label, state).
struct SupportProductState {
    uint32_t z = 0;
    /// Two characters over {+,-} naming the pair factors on qubits 0 and 2h (+ is plus_i).
    std::string pair;
    StateVector state;
    /// Factor per kept qubit, ascending.
    std::vector<QubitVector> factors;
};
std::vector<SupportProductState> ring_support_products(size_t h);

}  // namespace graphrank

#endif
