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

#include "graphrank/cpd.h"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "graphrank/errors.h"

namespace graphrank {

namespace qubit {

QubitVector zero() {
    return {ExactAmplitude::one(), ExactAmplitude::zero()};
}
QubitVector one() {
    return {ExactAmplitude::zero(), ExactAmplitude::one()};
}
QubitVector plus() {
    return {ExactAmplitude::inv_sqrt2(), ExactAmplitude::inv_sqrt2()};
}
QubitVector minus() {
    return {ExactAmplitude::inv_sqrt2(), -ExactAmplitude::inv_sqrt2()};
}
QubitVector plus_i() {
    return {ExactAmplitude::inv_sqrt2(), ExactAmplitude::imag_unit() * ExactAmplitude::inv_sqrt2()};
}
QubitVector minus_i() {
    return {ExactAmplitude::inv_sqrt2(), -(ExactAmplitude::imag_unit() * ExactAmplitude::inv_sqrt2())};
}
QubitVector z(const QubitVector &v) {
    return {v[0], -v[1]};
}

}  // namespace qubit

bool CpTerm::operator<(const CpTerm &other) const {
    if (weight != other.weight) {
        return weight < other.weight;
    }
    return std::lexicographical_compare(
        factors.begin(), factors.end(), other.factors.begin(), other.factors.end(),
        [](const QubitVector &x, const QubitVector &y) {
            if (x[0] != y[0]) {
                return x[0] < y[0];
            }
            return x[1] < y[1];
        });
}

void CpDecomposition::validate() const {
    for (size_t t = 0; t < terms.size(); t++) {
        if (terms[t].factors.size() != n) {
            throw InputError("term " + std::to_string(t) + " has " + std::to_string(terms[t].factors.size()) +
                             " factors, expected " + std::to_string(n));
        }
        for (size_t q = 0; q < n; q++) {
            if (terms[t].factors[q][0].is_zero() && terms[t].factors[q][1].is_zero()) {
                throw InputError("term " + std::to_string(t) + " has a zero factor on qubit " + std::to_string(q));
            }
        }
    }
}

CpDecomposition CpDecomposition::canonical() const {
    CpDecomposition out = *this;
    std::sort(out.terms.begin(), out.terms.end());
    return out;
}

namespace {

// Dense exact Kronecker product, qubit 0 most significant.
std::vector<ExactAmplitude> kron(const std::vector<QubitVector> &factors, const ExactAmplitude &weight) {
    std::vector<ExactAmplitude> acc{weight};
    for (const auto &f : factors) {
        std::vector<ExactAmplitude> next(acc.size() * 2);
        for (size_t k = 0; k < acc.size(); k++) {
            if (acc[k].is_zero()) {
                continue;
            }
            next[2 * k] = acc[k] * f[0];
            next[2 * k + 1] = acc[k] * f[1];
        }
        acc = std::move(next);
    }
    return acc;
}

QubitVector sign_vector(bool minus) {
    return minus ? qubit::minus() : qubit::plus();
}

QubitVector bit_vector(bool one) {
    return one ? qubit::one() : qubit::zero();
}

CpTerm make_term(ExactAmplitude weight, std::vector<QubitVector> factors) {
    return CpTerm{std::move(weight), std::move(factors)};
}

}  // namespace

StateVector reconstruct(const CpDecomposition &d) {
    d.validate();
    StateVector out(d.n);
    for (const auto &term : d.terms) {
        auto dense = kron(term.factors, term.weight);
        for (size_t k = 0; k < dense.size(); k++) {
            if (!dense[k].is_zero()) {
                out[k] += dense[k];
            }
        }
    }
    return out;
}

CpDecomposition line_cpd(size_t n) {
    if (n < 2) {
        throw InputError("line decomposition needs at least 2 qubits");
    }
    if (n > kMaxStateQubits) {
        throw ResourceError("line decomposition beyond the qubit ceiling");
    }
    // Summing out every second qubit of sum_x (-1)^{sum x_i x_{i+1}} |x> leaves one
    // |+>/|-> factor per summed qubit, signed by the parity of its two neighbors. The
    // remaining computational-basis qubits p_0..p_{m-1} index the terms.
    size_t m = n / 2;
    bool odd = n % 2 == 1;
    CpDecomposition d{n, {}};
    ExactAmplitude weight = ExactAmplitude::inv_sqrt2_pow(static_cast<int64_t>(m));
    for (uint64_t label = 0; label < (uint64_t{1} << m); label++) {
        auto p = [&](size_t j) -> bool { return j < m && ((label >> (m - 1 - j)) & 1); };
        std::vector<QubitVector> factors;
        factors.reserve(n);
        if (odd) {
            factors.push_back(sign_vector(p(0)));
        }
        for (size_t j = 0; j < m; j++) {
            factors.push_back(bit_vector(p(j)));
            factors.push_back(sign_vector(p(j) != p(j + 1)));
        }
        d.terms.push_back(make_term(weight, std::move(factors)));
    }
    return d;
}

PhiSplit phi_split(size_t h) {
    if (h < 2) {
        throw InputError("phi split starts at h = 2 (5 qubits)");
    }
    if (2 * h + 1 > kMaxStateQubits) {
        throw ResourceError("phi split beyond the qubit ceiling");
    }
    using namespace qubit;
    ExactAmplitude base = ExactAmplitude::inv_sqrt2_pow(3);
    PhiSplit s;
    s.p0.n = 5;
    s.p1.n = 5;
    s.p0.terms = {make_term(base, {zero(), plus(), zero(), plus(), zero()}),
                  make_term(base, {zero(), minus(), one(), minus(), zero()})};
    s.p1.terms = {make_term(base, {zero(), plus(), zero(), minus(), one()}),
                  make_term(base, {zero(), minus(), one(), plus(), one()})};
    for (size_t level = 2; level < h; level++) {
        // Two more qubits: the middle one takes |+>/|-> and the new last one is projected.
        PhiSplit next;
        next.p0.n = next.p1.n = s.p0.n + 2;
        auto extend = [](const CpDecomposition &src, const QubitVector &mid, const QubitVector &last,
                         CpDecomposition &dst) {
            for (const auto &t : src.terms) {
                CpTerm e = t;
                e.weight *= ExactAmplitude::inv_sqrt2();
                e.factors.push_back(mid);
                e.factors.push_back(last);
                dst.terms.push_back(std::move(e));
            }
        };
        extend(s.p0, plus(), zero(), next.p0);
        extend(s.p1, minus(), zero(), next.p0);
        extend(s.p0, minus(), one(), next.p1);
        extend(s.p1, plus(), one(), next.p1);
        s = std::move(next);
    }
    return s;
}

CpDecomposition ring_cpd(size_t m) {
    if (m < 3 || m % 2 == 0) {
        throw InputError("ring decomposition needs an odd qubit count >= 3, got " + std::to_string(m));
    }
    if (m > kMaxStateQubits) {
        throw ResourceError("ring decomposition beyond the qubit ceiling");
    }
    if (m == 3) {
        using namespace qubit;
        ExactAmplitude r = ExactAmplitude::inv_sqrt2();
        return CpDecomposition{3,
                               {make_term(ExactAmplitude::one(), {plus(), plus(), minus()}),
                                make_term(r, {zero(), zero(), one()}), make_term(-r, {one(), one(), zero()})}};
    }
    size_t h = (m - 1) / 2;
    CpDecomposition d = line_cpd(m);
    for (auto &t : d.terms) {
        t.factors.back() = qubit::z(t.factors.back());
    }
    auto split = phi_split(h);
    for (auto t : split.p1.terms) {
        t.weight *= ExactAmplitude::integer(2);
        d.terms.push_back(std::move(t));
    }
    return d;
}

VerifyResult verify(const CpDecomposition &d, const StateVector &target) {
    if (d.n != target.num_qubits()) {
        throw InputError("decomposition and target have different qubit counts");
    }
    StateVector diff = reconstruct(d) - target;
    VerifyResult r;
    r.exact = std::all_of(diff.amplitudes().begin(), diff.amplitudes().end(),
                          [](const ExactAmplitude &a) { return a.is_zero(); });
    r.residual = r.exact ? 0.0 : diff.to_complex().norm();
    return r;
}

namespace {

std::string mask_str(size_t n, VertexMask m) {
    std::stringstream ss;
    ss << "{";
    bool first = true;
    for (size_t v = 0; v < n; v++) {
        if ((m >> v) & 1) {
            ss << (first ? "" : ",") << v;
            first = false;
        }
    }
    ss << "}";
    return ss.str();
}

}  // namespace

RankBounds rank_bounds(const Graph &g, size_t orbit_cap, uint64_t seed) {
    size_t n = g.num_vertices();
    RankBounds b;
    if (n >= 2) {
        auto consider = [&](VertexMask side) {
            size_t r = cut_rank(g, side);
            if (r > b.max_cut_rank || b.lower_cut == 0) {
                if (r > b.max_cut_rank || b.lower_cut == 0) {
                    b.max_cut_rank = std::max(b.max_cut_rank, r);
                    if (r == b.max_cut_rank) {
                        b.lower_cut = side;
                    }
                }
            }
        };
        VertexMask all = all_vertices(n);
        if (n <= 16) {
            // Vertex 0 stays on the A side; the complement ranges over nonempty subsets of 1..n-1.
            for (VertexMask rest = 1; rest < (VertexMask{1} << (n - 1)); rest++) {
                consider(all & ~(rest << 1));
            }
        } else {
            b.exhaustive_cuts = false;
            std::mt19937_64 rng(seed);
            for (size_t k = 0; k < (size_t{1} << 16); k++) {
                VertexMask side = static_cast<VertexMask>(rng()) & all;
                if (side != 0 && side != all) {
                    consider(side);
                }
            }
        }
    }
    b.flattening_lower = uint64_t{1} << b.max_cut_rank;
    b.half_exponent_lower = std::exp2(static_cast<double>(b.max_cut_rank) / 2.0);
    b.lower = b.flattening_lower;
    b.lower_witness = n >= 2 ? "flattening rank 2^" + std::to_string(b.max_cut_rank) + " across A=" +
                                   mask_str(n, b.lower_cut)
                             : "single qubit";

    auto orbit = lc_orbit(g, orbit_cap);
    b.orbit_size = orbit.members.size();
    b.orbit_complete = orbit.complete;
    b.cover = min_vertex_cover(g);
    b.cover_graph = g;
    for (const auto &member : orbit.members) {
        auto c = min_vertex_cover(member);
        if (c.size < b.cover.size) {
            b.cover = c;
            b.cover_graph = member;
        }
    }
    b.cover_upper = uint64_t{1} << b.cover.size;
    b.upper = b.cover_upper;
    std::stringstream up;
    up << "vertex cover " << mask_str(n, b.cover.witness) << " of size " << b.cover.size;
    if (b.cover_graph != g) {
        up << " on LC-orbit member " << b.cover_graph.str();
    }
    b.upper_witness = up.str();

    if (is_odd_cycle(g) && n >= 5) {
        size_t h = (n - 1) / 2;
        b.odd_ring = true;
        uint64_t ring_lower = (uint64_t{1} << h) + 1;
        uint64_t ring_upper = 3 * (uint64_t{1} << (h - 1));
        if (ring_lower > b.lower) {
            b.lower = ring_lower;
            b.lower_witness = "odd-ring support argument: rank > 2^" + std::to_string(h);
        }
        if (ring_upper < b.upper) {
            b.upper = ring_upper;
            b.upper_witness = "odd-ring construction with 3*2^" + std::to_string(h - 1) + " terms";
        }
    }
    return b;
}

namespace {

Eigen::VectorXcd kept_side_vector(const CpTerm &t, const std::vector<size_t> &kept) {
    Eigen::VectorXcd acc = Eigen::VectorXcd::Ones(1);
    for (size_t q : kept) {
        Eigen::VectorXcd next(acc.size() * 2);
        for (Eigen::Index k = 0; k < acc.size(); k++) {
            next[2 * k] = acc[k] * t.factors[q][0].to_complex();
            next[2 * k + 1] = acc[k] * t.factors[q][1].to_complex();
        }
        acc = std::move(next);
    }
    return acc;
}

size_t numeric_rank(const Eigen::MatrixXcd &m) {
    if (m.cols() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    auto sv = svd.singularValues();
    double top = sv.size() ? sv[0] : 0.0;
    return static_cast<size_t>((sv.array() > 1e-9 * std::max(top, 1.0)).count());
}

}  // namespace

SupportReport support_membership(const CpDecomposition &d, const Bipartition &traced, const StateVector &psi) {
    d.validate();
    if (d.n != psi.num_qubits() || traced.n != psi.num_qubits()) {
        throw InputError("decomposition, cut and state disagree on qubit count");
    }
    auto rho = reduced_density(psi, traced);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.rho);
    std::vector<Eigen::Index> support_cols;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); k++) {
        if (solver.eigenvalues()[k] > kRankThreshold) {
            support_cols.push_back(k);
        }
    }
    Eigen::MatrixXcd basis(rho.rho.rows(), static_cast<Eigen::Index>(support_cols.size()));
    for (size_t j = 0; j < support_cols.size(); j++) {
        basis.col(static_cast<Eigen::Index>(j)) = solver.eigenvectors().col(support_cols[j]);
    }

    SupportReport report;
    report.support_rank = support_cols.size();
    Eigen::MatrixXcd term_vectors(rho.rho.rows(), static_cast<Eigen::Index>(d.terms.size()));
    for (size_t t = 0; t < d.terms.size(); t++) {
        Eigen::VectorXcd v = kept_side_vector(d.terms[t], rho.qubits);
        v.normalize();
        term_vectors.col(static_cast<Eigen::Index>(t)) = v;
        double residual = (v - basis * (basis.adjoint() * v)).norm();
        report.residuals.push_back(residual);
        report.in_support.push_back(residual < kSupportTolerance);
    }
    Eigen::MatrixXcd joined(term_vectors.rows(), term_vectors.cols() + basis.cols());
    joined << term_vectors, basis;
    report.span_contains_support = numeric_rank(joined) == numeric_rank(term_vectors);
    return report;
}

namespace {

VertexMask odd_positions(size_t h) {
    VertexMask m = 0;
    for (size_t j = 0; j < h; j++) {
        m |= VertexMask{1} << (2 * j + 1);
    }
    return m;
}

void check_lower_bound_range(size_t h) {
    if (h < 2 || h > 4) {
        throw InputError("lower-bound structure check supports h in 2..4, got " + std::to_string(h));
    }
}

bool is_product_on_every_qubit(const Eigen::VectorXcd &v, size_t n) {
    for (size_t q = 0; q < n; q++) {
        if (flattening_rank(v, Bipartition::of(n, VertexMask{1} << q)) != 1) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<StateVector> ring_support_basis(size_t h) {
    check_lower_bound_range(h);
    Graph ring = Graph::ring(2 * h + 1);
    auto terms = expand_over_subset(ring, Bipartition::of(2 * h + 1, odd_positions(h)));
    std::vector<StateVector> basis;
    for (auto &t : terms) {
        basis.push_back(std::move(t.state));
    }
    return basis;
}

std::vector<SupportProductState> ring_support_products(size_t h) {
    check_lower_bound_range(h);
    std::vector<SupportProductState> out;
    // Kept qubits are ring vertices 0, 2, ..., 2h. Vertex 2j (0 < j < h) sits between
    // traced vertices with z-bits j-1 and j; the end pair (0, 2h) carries the entanglement.
    for (uint32_t z = 0; z < (uint32_t{1} << h); z++) {
        bool first = z & 1;
        bool last = (z >> (h - 1)) & 1;
        if (first) {
            continue;  // S_{0,0} and S_{0,1} only
        }
        std::vector<std::string> pairs = last ? std::vector<std::string>{"+-", "-+"} : std::vector<std::string>{"++", "--"};
        for (const auto &pair : pairs) {
            std::vector<QubitVector> factors;
            factors.push_back(pair[0] == '+' ? qubit::plus_i() : qubit::minus_i());
            for (size_t j = 1; j < h; j++) {
                bool flip = ((z >> (j - 1)) & 1) != ((z >> j) & 1);
                factors.push_back(flip ? qubit::minus() : qubit::plus());
            }
            factors.push_back(pair[1] == '+' ? qubit::plus_i() : qubit::minus_i());
            StateVector s(h + 1, kron(factors, ExactAmplitude::one()));
            out.push_back(SupportProductState{z, pair, std::move(s), std::move(factors)});
        }
    }
    return out;
}

LowerBoundReport verify_lower_bound_structure(size_t h, size_t random_trials, uint64_t seed) {
    check_lower_bound_range(h);
    LowerBoundReport r;
    r.h = h;
    size_t n = 2 * h + 1;
    size_t kept_n = h + 1;
    auto basis = ring_support_basis(h);
    r.basis_states = basis.size();

    // (i) exact orthonormality
    r.basis_orthonormal = true;
    for (size_t a = 0; a < basis.size(); a++) {
        for (size_t b = a; b < basis.size(); b++) {
            auto ip = basis[a].inner(basis[b]);
            if (ip != (a == b ? ExactAmplitude::one() : ExactAmplitude::zero())) {
                r.basis_orthonormal = false;
            }
        }
    }

    // rho_B = 2^{-h} sum_z |e_z><e_z| with rank 2^h, eigenvalues 2^{-h}.
    StateVector ring_state = build_graph_state(Graph::ring(n));
    auto rho = reduced_density(ring_state, Bipartition::of(n, odd_positions(h)));
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(rho.rho.rows(), rho.rho.cols());
    for (const auto &e : basis) {
        Eigen::VectorXcd v = e.to_complex();
        expected += v * v.adjoint();
    }
    expected /= std::exp2(static_cast<double>(h));
    auto ev = rho.eigenvalues();
    bool flat = true;
    for (Eigen::Index k = 0; k < ev.size(); k++) {
        if (ev[k] > kRankThreshold && std::abs(ev[k] - std::exp2(-static_cast<double>(h))) > 1e-10) {
            flat = false;
        }
    }
    r.rho_flat_rank = flat && rho.rank() == basis.size() && (rho.rho - expected).norm() < 1e-12;

    // (ii) + (iii)
    auto products = ring_support_products(h);
    r.product_states = products.size();
    r.products_in_support = true;
    r.products_are_product = true;
    r.combinations_exact = true;
    ExactAmplitude w = ExactAmplitude::omega();
    ExactAmplitude wbar = w.conj();
    ExactAmplitude s = ExactAmplitude::inv_sqrt2();
    uint32_t all_z = (uint32_t{1} << h) - 1;
    for (const auto &p : products) {
        // Exact membership: ||v||^2 equals the squared overlap with the orthonormal basis.
        ExactAmplitude captured;
        for (const auto &e : basis) {
            captured += e.inner(p.state).norm2();
        }
        if (captured != p.state.norm2()) {
            r.products_in_support = false;
        }
        if (!is_product_on_every_qubit(p.state.to_complex(), kept_n)) {
            r.products_are_product = false;
        }
        bool plus_first = p.pair[0] == '+';
        const ExactAmplitude &cz = plus_first ? w : wbar;
        const ExactAmplitude &czbar = plus_first ? wbar : w;
        StateVector combo = (basis[p.z].scaled(cz) + basis[p.z ^ all_z].scaled(czbar)).scaled(s);
        if (combo != p.state) {
            r.combinations_exact = false;
        }
    }

    // (iv) random vectors in the support
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::vector<Eigen::VectorXcd> dense_basis;
    for (const auto &e : basis) {
        dense_basis.push_back(e.to_complex());
    }
    r.random_trials = random_trials;
    for (size_t t = 0; t < random_trials; t++) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dense_basis[0].size());
        for (const auto &e : dense_basis) {
            v += std::complex<double>(gauss(rng), gauss(rng)) * e;
        }
        v.normalize();
        if (!is_product_on_every_qubit(v, kept_n)) {
            r.random_entangled++;
        }
    }
    return r;
}

}  // namespace graphrank
