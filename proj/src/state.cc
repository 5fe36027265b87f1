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

#include "graphrank/state.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <functional>

#include "graphrank/errors.h"

namespace graphrank {

StateVector::StateVector(size_t num_qubits) : n_(num_qubits) {
    if (num_qubits > kMaxStateQubits) {
        throw ResourceError("dense state on " + std::to_string(num_qubits) + " qubits exceeds the ceiling of " +
                            std::to_string(kMaxStateQubits));
    }
    amps_.resize(size_t{1} << num_qubits);
}

StateVector::StateVector(size_t num_qubits, std::vector<ExactAmplitude> amps) : n_(num_qubits), amps_(std::move(amps)) {
    if (num_qubits > kMaxStateQubits) {
        throw ResourceError("dense state exceeds the qubit ceiling");
    }
    if (amps_.size() != (size_t{1} << num_qubits)) {
        throw InputError("state on " + std::to_string(num_qubits) + " qubits needs " +
                         std::to_string(size_t{1} << num_qubits) + " amplitudes, got " + std::to_string(amps_.size()));
    }
}

ExactAmplitude StateVector::norm2() const {
    ExactAmplitude total;
    for (const auto &a : amps_) {
        total += a.norm2();
    }
    return total;
}

ExactAmplitude StateVector::inner(const StateVector &other) const {
    if (other.n_ != n_) {
        throw InputError("inner product between states of different sizes");
    }
    ExactAmplitude total;
    for (size_t k = 0; k < amps_.size(); k++) {
        if (!amps_[k].is_zero() && !other.amps_[k].is_zero()) {
            total += amps_[k].conj() * other.amps_[k];
        }
    }
    return total;
}

bool StateVector::is_real() const {
    return std::all_of(amps_.begin(), amps_.end(), [](const ExactAmplitude &a) { return a.is_real(); });
}

Eigen::VectorXcd StateVector::to_complex() const {
    Eigen::VectorXcd v(amps_.size());
    for (size_t k = 0; k < amps_.size(); k++) {
        v[static_cast<Eigen::Index>(k)] = amps_[k].to_complex();
    }
    return v;
}

StateVector StateVector::operator+(const StateVector &other) const {
    if (other.n_ != n_) {
        throw InputError("adding states of different sizes");
    }
    StateVector out = *this;
    for (size_t k = 0; k < amps_.size(); k++) {
        out.amps_[k] += other.amps_[k];
    }
    return out;
}

StateVector StateVector::operator-(const StateVector &other) const {
    return *this + other.scaled(ExactAmplitude::integer(-1));
}

StateVector StateVector::scaled(const ExactAmplitude &s) const {
    StateVector out = *this;
    for (auto &a : out.amps_) {
        a *= s;
    }
    return out;
}

size_t basis_index(size_t n, VertexMask bits) {
    size_t index = 0;
    for (size_t q = 0; q < n; q++) {
        index = (index << 1) | ((bits >> q) & 1);
    }
    return index;
}

VertexMask qubit_bits(size_t n, size_t index) {
    VertexMask bits = 0;
    for (size_t q = 0; q < n; q++) {
        bits |= static_cast<VertexMask>((index >> (n - 1 - q)) & 1) << q;
    }
    return bits;
}

StateVector graph_basis_state(const Graph &g, VertexMask flips) {
    size_t n = g.num_vertices();
    if (flips & ~all_vertices(n)) {
        throw InputError("graph-basis label references a qubit outside the graph");
    }
    StateVector psi(n);
    // Only the upper triangle so that each edge is counted once.
    std::vector<VertexMask> upper(n);
    for (size_t q = 0; q < n; q++) {
        upper[q] = g.neighbors(q) & ~all_vertices(q + 1);
    }
    ExactAmplitude plus = ExactAmplitude::inv_sqrt2_pow(static_cast<int64_t>(n));
    ExactAmplitude minus = -plus;
    for (size_t index = 0; index < psi.size(); index++) {
        VertexMask x = qubit_bits(n, index);
        int parity = std::popcount(x & flips);
        for (VertexMask s = x; s; s &= s - 1) {
            parity += std::popcount(upper[std::countr_zero(s)] & x);
        }
        psi[index] = (parity & 1) ? minus : plus;
    }
    return psi;
}

StateVector graph_basis_state(const Graph &g, std::string_view flips) {
    if (flips.size() != g.num_vertices()) {
        throw InputError("graph-basis label has length " + std::to_string(flips.size()) + " but the graph has " +
                         std::to_string(g.num_vertices()) + " vertices");
    }
    VertexMask mask = 0;
    for (size_t q = 0; q < flips.size(); q++) {
        if (flips[q] == '1') {
            mask |= VertexMask{1} << q;
        } else if (flips[q] != '0') {
            throw InputError(std::string("graph-basis label must be 0/1, got '") + flips[q] + "'");
        }
    }
    return graph_basis_state(g, mask);
}

StateVector build_graph_state(const Graph &g) {
    return graph_basis_state(g, VertexMask{0});
}

StateVector apply_pauli(const StateVector &psi, std::string_view pauli) {
    size_t n = psi.num_qubits();
    if (pauli.size() != n) {
        throw InputError("Pauli string has length " + std::to_string(pauli.size()) + " but the state has " +
                         std::to_string(n) + " qubits");
    }
    VertexMask x_mask = 0;
    VertexMask z_mask = 0;
    size_t y_count = 0;
    for (size_t q = 0; q < n; q++) {
        switch (pauli[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                x_mask |= VertexMask{1} << q;
                break;
            case 'Z':
                z_mask |= VertexMask{1} << q;
                break;
            case 'Y':
                x_mask |= VertexMask{1} << q;
                z_mask |= VertexMask{1} << q;
                y_count++;
                break;
            default:
                throw InputError(std::string("invalid Pauli letter '") + pauli[q] + "'");
        }
    }
    // Y = i X Z: apply Z, then X, then the global i^{#Y}.
    ExactAmplitude phase = ExactAmplitude::one();
    for (size_t k = 0; k < y_count % 4; k++) {
        phase *= ExactAmplitude::imag_unit();
    }
    StateVector out(n);
    for (size_t index = 0; index < psi.size(); index++) {
        VertexMask x = qubit_bits(n, index);
        ExactAmplitude amp = psi[index] * phase;
        if (std::popcount(x & z_mask) & 1) {
            amp = -amp;
        }
        out[basis_index(n, x ^ x_mask)] = amp;
    }
    return out;
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

size_t DensityMatrix::rank() const {
    auto ev = eigenvalues();
    return static_cast<size_t>((ev.array() > kRankThreshold).count());
}

namespace {

// Position of each basis index within the compacted big-endian index over `part`.
std::vector<uint32_t> compact_indices(size_t n, VertexMask part) {
    std::vector<size_t> qubits;
    for (size_t q = 0; q < n; q++) {
        if ((part >> q) & 1) {
            qubits.push_back(q);
        }
    }
    std::vector<uint32_t> out(size_t{1} << n);
    for (size_t index = 0; index < out.size(); index++) {
        uint32_t c = 0;
        for (size_t q : qubits) {
            c = (c << 1) | static_cast<uint32_t>((index >> (n - 1 - q)) & 1);
        }
        out[index] = c;
    }
    return out;
}

std::vector<size_t> mask_vertices(size_t n, VertexMask m) {
    std::vector<size_t> out;
    for (size_t q = 0; q < n; q++) {
        if ((m >> q) & 1) {
            out.push_back(q);
        }
    }
    return out;
}

size_t qubits_of(const Eigen::VectorXcd &psi) {
    size_t len = static_cast<size_t>(psi.size());
    if (len == 0 || (len & (len - 1)) != 0) {
        throw InputError("state length must be a power of two");
    }
    return static_cast<size_t>(std::countr_zero(len));
}

Eigen::VectorXd gram_spectrum(const Eigen::MatrixXcd &m) {
    Eigen::MatrixXcd gram = m.rows() <= m.cols() ? Eigen::MatrixXcd(m * m.adjoint()) : Eigen::MatrixXcd(m.adjoint() * m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

}  // namespace

Eigen::MatrixXcd unfolding(const Eigen::VectorXcd &psi, size_t n, VertexMask kept) {
    VertexMask traced = all_vertices(n) & ~kept;
    auto rows = compact_indices(n, kept);
    auto cols = compact_indices(n, traced);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(Eigen::Index{1} << std::popcount(kept),
                                                Eigen::Index{1} << std::popcount(traced));
    for (size_t index = 0; index < rows.size(); index++) {
        m(rows[index], cols[index]) = psi[static_cast<Eigen::Index>(index)];
    }
    return m;
}

DensityMatrix reduced_density(const Eigen::VectorXcd &psi, const Bipartition &traced) {
    size_t n = qubits_of(psi);
    if (traced.n != n) {
        throw InputError("cut and state disagree on qubit count");
    }
    VertexMask kept = traced.complement();
    if (static_cast<size_t>(std::popcount(kept)) > kMaxReducedQubits) {
        throw ResourceError("reduced density matrix on " + std::to_string(std::popcount(kept)) +
                            " qubits exceeds the ceiling of " + std::to_string(kMaxReducedQubits));
    }
    Eigen::MatrixXcd m = unfolding(psi, n, kept);
    return DensityMatrix{mask_vertices(n, kept), m * m.adjoint()};
}

DensityMatrix reduced_density(const StateVector &psi, const Bipartition &traced) {
    return reduced_density(psi.to_complex(), traced);
}

std::vector<double> schmidt_spectrum(const Eigen::VectorXcd &psi, const Bipartition &cut) {
    size_t n = qubits_of(psi);
    if (cut.n != n) {
        throw InputError("cut and state disagree on qubit count");
    }
    size_t small = std::min(cut.size(), n - cut.size());
    if (small > kMaxReducedQubits) {
        throw ResourceError("Schmidt spectrum needs a dense matrix beyond the ceiling");
    }
    auto ev = gram_spectrum(unfolding(psi, n, cut.side));
    std::vector<double> out;
    for (Eigen::Index k = ev.size(); k-- > 0;) {
        if (ev[k] > kSpectrumFloor) {
            out.push_back(ev[k]);
        }
    }
    return out;
}

std::vector<double> schmidt_spectrum(const StateVector &psi, const Bipartition &cut) {
    return schmidt_spectrum(psi.to_complex(), cut);
}

size_t flattening_rank(const Eigen::VectorXcd &psi, const Bipartition &cut) {
    auto mu = schmidt_spectrum(psi, cut);
    return static_cast<size_t>(std::count_if(mu.begin(), mu.end(), [](double x) { return x > kRankThreshold; }));
}

size_t flattening_rank(const StateVector &psi, const Bipartition &cut) {
    return flattening_rank(psi.to_complex(), cut);
}

std::vector<SubsetExpansionTerm> expand_over_subset(const Graph &g, const Bipartition &cut) {
    size_t n = g.num_vertices();
    if (cut.n != n) {
        throw InputError("cut and graph disagree on vertex count");
    }
    if (cut.size() > 20) {
        throw ResourceError("subset expansion over more than 20 vertices");
    }
    auto inside = cut.vertices();
    auto outside = cut.complement_vertices();
    Graph rest = g.without(cut.side);
    // Local index of each outside vertex within G - A.
    std::vector<int> local(n, -1);
    for (size_t j = 0; j < outside.size(); j++) {
        local[outside[j]] = static_cast<int>(j);
    }
    std::vector<VertexMask> flip_of(inside.size(), 0);
    for (size_t j = 0; j < inside.size(); j++) {
        for (size_t b : outside) {
            if (g.has_edge(inside[j], b)) {
                flip_of[j] |= VertexMask{1} << local[b];
            }
        }
    }
    std::vector<SubsetExpansionTerm> terms;
    terms.reserve(size_t{1} << inside.size());
    for (uint32_t z = 0; z < (uint32_t{1} << inside.size()); z++) {
        VertexMask flips = 0;
        VertexMask support = 0;
        for (size_t j = 0; j < inside.size(); j++) {
            if ((z >> j) & 1) {
                flips ^= flip_of[j];
                support |= VertexMask{1} << inside[j];
            }
        }
        size_t internal_edges = 0;
        for (VertexMask s = support; s; s &= s - 1) {
            internal_edges += std::popcount(g.neighbors(std::countr_zero(s)) & support);
        }
        internal_edges /= 2;
        terms.push_back(SubsetExpansionTerm{z, (internal_edges & 1) ? -1 : 1, graph_basis_state(rest, flips)});
    }
    return terms;
}

StateVector assemble_subset_expansion(const std::vector<SubsetExpansionTerm> &terms, const Bipartition &cut) {
    size_t n = cut.n;
    auto inside = cut.vertices();
    auto outside = cut.complement_vertices();
    StateVector out(n);
    ExactAmplitude prefactor = ExactAmplitude::inv_sqrt2_pow(static_cast<int64_t>(inside.size()));
    for (const auto &term : terms) {
        VertexMask a_bits = 0;
        for (size_t j = 0; j < inside.size(); j++) {
            if ((term.z >> j) & 1) {
                a_bits |= VertexMask{1} << inside[j];
            }
        }
        ExactAmplitude scale = term.sign < 0 ? -prefactor : prefactor;
        for (size_t y = 0; y < term.state.size(); y++) {
            VertexMask local = qubit_bits(outside.size(), y);
            VertexMask bits = a_bits;
            for (size_t j = 0; j < outside.size(); j++) {
                if ((local >> j) & 1) {
                    bits |= VertexMask{1} << outside[j];
                }
            }
            out[basis_index(n, bits)] += scale * term.state[y];
        }
    }
    return out;
}

}  // namespace graphrank
