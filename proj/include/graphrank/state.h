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

#ifndef GRAPHRANK_STATE_H
#define GRAPHRANK_STATE_H

#include <Eigen/Dense>
#include <string_view>
#include <vector>

#include "graphrank/exact.h"
#include "graphrank/graph.h"

namespace graphrank {

/// Eigenvalues at or below this are treated as zero when counting ranks.
constexpr double kRankThreshold = 1e-10;
/// Schmidt coefficients at or below this are dropped from reported spectra.
constexpr double kSpectrumFloor = 1e-12;
/// Largest side kept as a dense reduced density matrix.
constexpr size_t kMaxReducedQubits = 14;

/// Dense exact n-qubit state.
///
/// Basis index bit (n-1-q) holds qubit q, i.e. qubit 0 is the most significant bit.
class StateVector {
   public:
    StateVector() = default;
    /// All-zero vector on n qubits.
    explicit StateVector(size_t num_qubits);
    StateVector(size_t num_qubits, std::vector<ExactAmplitude> amps);

    size_t num_qubits() const {
        return n_;
    }
    size_t size() const {
        return amps_.size();
    }
    const ExactAmplitude &operator[](size_t index) const {
        return amps_[index];
    }
    ExactAmplitude &operator[](size_t index) {
        return amps_[index];
    }
    const std::vector<ExactAmplitude> &amplitudes() const {
        return amps_;
    }

    /// Exact <this|this>.
    ExactAmplitude norm2() const;
    /// Exact <this|other>.
    ExactAmplitude inner(const StateVector &other) const;
    bool is_real() const;

    Eigen::VectorXcd to_complex() const;

    StateVector operator+(const StateVector &other) const;
    StateVector operator-(const StateVector &other) const;
    StateVector scaled(const ExactAmplitude &s) const;

    bool operator==(const StateVector &other) const = default;

   private:
    size_t n_ = 0;
    std::vector<ExactAmplitude> amps_;
};

/// Basis index of the computational string whose qubit q is bit q of `qubit_bits`.
size_t basis_index(size_t n, VertexMask qubit_bits);
/// Inverse of basis_index.
VertexMask qubit_bits(size_t n, size_t index);

/// |G> = prod_{(a,b) in E} CZ_ab |+>^n, exactly.
StateVector build_graph_state(const Graph &g);

/// Z^s |G>, with bit q of `flips` the exponent on qubit q.
StateVector graph_basis_state(const Graph &g, VertexMask flips);
/// Same, taking s as a '0'/'1' string indexed by qubit.
StateVector graph_basis_state(const Graph &g, std::string_view flips);

/// Applies a Pauli string ("IXYZ" letters, position q acts on qubit q).
StateVector apply_pauli(const StateVector &psi, std::string_view pauli);

/// Complex state restricted to one side of a cut.
struct DensityMatrix {
    /// Qubits kept, ascending; the matrix uses big-endian order over them.
    std::vector<size_t> qubits;
    Eigen::MatrixXcd rho;

    size_t dim() const {
        return static_cast<size_t>(rho.rows());
    }
    /// Eigenvalues, ascending.
    Eigen::VectorXd eigenvalues() const;
    /// Number of eigenvalues above kRankThreshold.
    size_t rank() const;
};

/// The |kept| x |traced| matrix M[y][z] = psi(z on traced, y on kept). Both sides ordered
/// ascending by qubit, big-endian.
Eigen::MatrixXcd unfolding(const Eigen::VectorXcd &psi, size_t n, VertexMask kept);

/// Tr_A |psi><psi|, returned on the complement of A. Throws ResourceError when the kept
/// side exceeds kMaxReducedQubits.
DensityMatrix reduced_density(const StateVector &psi, const Bipartition &traced);
DensityMatrix reduced_density(const Eigen::VectorXcd &psi, const Bipartition &traced);

/// Schmidt coefficients mu_i (squared singular values) above kSpectrumFloor, descending.
std::vector<double> schmidt_spectrum(const StateVector &psi, const Bipartition &cut);
std::vector<double> schmidt_spectrum(const Eigen::VectorXcd &psi, const Bipartition &cut);

/// Matrix rank of the A | complement(A) unfolding (Schmidt coefficients above kRankThreshold).
size_t flattening_rank(const StateVector &psi, const Bipartition &cut);
size_t flattening_rank(const Eigen::VectorXcd &psi, const Bipartition &cut);

/// One term of |G> = 2^{-|A|/2} sum_z sign(z) |z>_A U(z)|G - A>.
struct SubsetExpansionTerm {
    /// Bit j is the value on the j-th vertex of A (ascending).
    uint32_t z = 0;
    /// (-1)^{number of edges inside A whose endpoints both have z = 1}.
    int sign = 1;
    /// U(z)|G - A> on the complement of A (ascending vertex order).
    StateVector state;
};

/// Expands |G> over the computational basis of A. U(z) = prod_{a in A, z_a = 1} prod_{b in N_a
/// outside A} Z_b.
std::vector<SubsetExpansionTerm> expand_over_subset(const Graph &g, const Bipartition &cut);

/// Reassembles 2^{-|A|/2} sum_z sign |z>_A (x) state into the original qubit order.
StateVector assemble_subset_expansion(const std::vector<SubsetExpansionTerm> &terms, const Bipartition &cut);

/// Dense graph states are capped here (2^24 amplitudes).
constexpr size_t kMaxStateQubits = 24;

}  // namespace graphrank

#endif
