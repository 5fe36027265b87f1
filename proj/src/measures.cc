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


#include "graphrank/measures.h"

#include <bit>
#include <cmath>

#include "graphrank/errors.h"

namespace graphrank {

namespace {

// Cuts with vertex 0 on side A: A = all minus (rest << 1) for rest in 1..2^{n-1}-1.
template <typename F>
void for_each_cut(size_t n, F &&f) {
    VertexMask all = all_vertices(n);
    for (VertexMask rest = 1; rest < (VertexMask{1} << (n - 1)); rest++) {
        f(all & ~(rest << 1));
    }
}

GmeReport from_cut_rank(size_t d, VertexMask cut) {
    GmeReport r;
    double p = std::exp2(-static_cast<double>(d));
    r.concurrence = std::sqrt(2 * (1 - p));
    r.negativity = (std::exp2(static_cast<double>(d)) - 1) / 2;
    r.geometric = 1 - p;
    r.d_min = d;
    r.witness_cut = cut;
    return r;
}

int popcount(VertexMask m) {
    return std::popcount(m);
}

// Phase exponent e of i^e X^x Z^z representing the Hermitian string.
int phase_of(const PauliString &p) {
    return ((p.sign < 0 ? 2 : 0) + popcount(p.x & p.z)) % 4;
}

struct PhasedPauli {
    VertexMask x = 0;
    VertexMask z = 0;
    int phase = 0;
};

PhasedPauli multiply(const PhasedPauli &a, const PhasedPauli &b) {
    // X^x1 Z^z1 X^x2 Z^z2 = (-1)^{|z1 & x2|} X^{x1^x2} Z^{z1^z2}
    return {a.x ^ b.x, a.z ^ b.z, (a.phase + b.phase + 2 * popcount(a.z & b.x)) % 4};
}

bool commute(const PauliString &a, const PauliString &b) {
    return (popcount(a.x & b.z) + popcount(a.z & b.x)) % 2 == 0;
}

uint64_t symplectic(const PauliString &p) {
    return uint64_t{p.x} | (uint64_t{p.z} << 32);
}

}  // namespace

GmeReport gme_closed_form(const Graph &g) {
    size_t n = g.num_vertices();
    if (n < 2) {
        throw InputError("GME needs at least 2 qubits");
    }
    size_t best = SIZE_MAX;
    VertexMask best_cut = 0;
    for_each_cut(n, [&](VertexMask side) {
        if (best == 0) {
            return;
        }
        size_t r = cut_rank(g, side);
        if (r < best) {
            best = r;
            best_cut = side;
        }
    });
    GmeReport out = from_cut_rank(best, best_cut);
    out.method = "closed-form";
    return out;
}

GmeReport gme_dense(const Eigen::VectorXcd &psi, size_t n) {
    if (n < 2) {
        throw InputError("GME needs at least 2 qubits");
    }
    if (n > kMaxGmeDenseQubits) {
        throw ResourceError("dense GME is limited to " + std::to_string(kMaxGmeDenseQubits) + " qubits");
    }
    if (psi.norm() == 0) {
        throw InputError("GME of the zero vector");
    }
    GmeReport out;
    out.method = "dense";
    out.concurrence = out.negativity = out.geometric = INFINITY;
    size_t min_schmidt_rank = SIZE_MAX;
    for_each_cut(n, [&](VertexMask side) {
        auto mu = schmidt_spectrum(psi, Bipartition::of(n, side));
        // Written as sums of cross terms so a product cut gives exactly zero instead of
        // the square root of a rounding error.
        double trace = 0;
        double pairs = 0;
        double root_pairs = 0;
        for (size_t i = 0; i < mu.size(); i++) {
            trace += mu[i];
            for (size_t j = i + 1; j < mu.size(); j++) {
                pairs += mu[i] * mu[j];
                root_pairs += std::sqrt(mu[i] * mu[j]);
            }
        }
        size_t rank = 0;
        for (double m : mu) {
            rank += m > kRankThreshold ? 1 : 0;
        }
        // 1 - sum mu^2 = 2 * pairs, (sum sqrt mu)^2 - 1 = 2 * root_pairs, 1 - max mu = rest.
        double c = std::sqrt(4 * pairs) / trace;
        if (c < out.concurrence) {
            out.concurrence = c;
            out.witness_cut = side;
        }
        out.negativity = std::min(out.negativity, root_pairs / trace);
        out.geometric = std::min(out.geometric, (trace - mu[0]) / trace);
        min_schmidt_rank = std::min(min_schmidt_rank, rank);
    });
    out.d_min = static_cast<size_t>(std::lround(std::log2(static_cast<double>(std::max<size_t>(min_schmidt_rank, 1)))));
    return out;
}

GmeReport gme_dense(const StateVector &psi) {
    return gme_dense(psi.to_complex(), psi.num_qubits());
}

// <psi|Y^n|psi*> = (-i)^n sum_x (-1)^{|x|} conj(psi_x psi_xbar); only the modulus is kept.
ExactAmplitude n_tangle_exact(const StateVector &psi) {
    size_t mask = psi.size() - 1;
    ExactAmplitude s;
    for (size_t x = 0; x < psi.size(); x++) {
        ExactAmplitude t = psi[x] * psi[x ^ mask];
        s += std::popcount(x) % 2 ? -t : t;
    }
    return s.norm2();
}

double n_tangle_dense(const Eigen::VectorXcd &psi, size_t n) {
    size_t size = size_t{1} << n;
    if (static_cast<size_t>(psi.size()) != size) {
        throw InputError("state does not have 2^n amplitudes");
    }
    std::complex<double> s = 0;
    for (size_t x = 0; x < size; x++) {
        std::complex<double> t = psi[x] * psi[x ^ (size - 1)];
        s += std::popcount(x) % 2 ? -t : t;
    }
    return std::norm(s);
}

double n_tangle_dense(const StateVector &psi) {
    return n_tangle_exact(psi).to_complex().real();
}

int n_tangle_graph_rule(const Graph &g) {
    return g.num_vertices() > 0 && degree_parity_all_odd(g) ? 1 : 0;
}

std::string PauliString::str(size_t n) const {
    std::string s(1, sign < 0 ? '-' : '+');
    for (size_t q = 0; q < n; q++) {
        bool bx = (x >> q) & 1;
        bool bz = (z >> q) & 1;
        s += bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : 'I');
    }
    return s;
}

PauliString parse_pauli(std::string_view text, size_t n) {
    PauliString p;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        p.sign = text[0] == '-' ? -1 : 1;
        text.remove_prefix(1);
    }
    if (text.size() != n) {
        throw InputError("Pauli string has " + std::to_string(text.size()) + " letters, expected " + std::to_string(n));
    }
    for (size_t q = 0; q < n; q++) {
        VertexMask b = VertexMask{1} << q;
        switch (text[q]) {
            case 'I':
                break;
            case 'X':
                p.x |= b;
                break;
            case 'Y':
                p.x |= b;
                p.z |= b;
                break;
            case 'Z':
                p.z |= b;
                break;
            default:
                throw InputError(std::string("unknown Pauli letter '") + text[q] + "'");
        }
    }
    return p;
}

void StabilizerTableau::validate() const {
    if (n > kMaxVertices) {
        throw ResourceError("tableau exceeds the qubit ceiling");
    }
    if (generators.size() != n) {
        throw InputError("tableau needs exactly n generators");
    }
    VertexMask all = all_vertices(n);
    std::vector<uint64_t> rows;
    for (const auto &g : generators) {
        if (g.sign != 1 && g.sign != -1) {
            throw InputError("generator signs must be +1 or -1");
        }
        if ((g.x | g.z) & ~all) {
            throw InputError("generator acts outside the n qubits");
        }
        rows.push_back(symplectic(g));
    }
    if (gf2_rank(rows) != n) {
        throw InputError("tableau generators are not independent");
    }
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            if (!commute(generators[a], generators[b])) {
                throw InputError("tableau generators " + std::to_string(a) + " and " + std::to_string(b) +
                                 " anticommute");
            }
        }
    }
}

int StabilizerTableau::member_sign(const PauliString &p) const {
    // Row-reduce the generators, remembering which originals each reduced row combines.
    struct Row {
        uint64_t bits;
        uint32_t combo;
    };
    std::vector<Row> rows;
    for (size_t k = 0; k < generators.size(); k++) {
        rows.push_back({symplectic(generators[k]), uint32_t{1} << k});
    }
    std::vector<Row> pivots;
    for (auto r : rows) {
        for (const auto &piv : pivots) {
            if (r.bits & (uint64_t{1} << std::countr_zero(piv.bits))) {
                r.bits ^= piv.bits;
                r.combo ^= piv.combo;
            }
        }
        if (r.bits) {
            for (auto &piv : pivots) {
                if (piv.bits & (uint64_t{1} << std::countr_zero(r.bits))) {
                    piv.bits ^= r.bits;
                    piv.combo ^= r.combo;
                }
            }
            pivots.push_back(r);
        }
    }
    uint64_t target = symplectic(p);
    uint32_t combo = 0;
    for (const auto &piv : pivots) {
        if (target & (uint64_t{1} << std::countr_zero(piv.bits))) {
            target ^= piv.bits;
            combo ^= piv.combo;
        }
    }
    if (target) {
        return 0;
    }
    PhasedPauli acc;
    for (size_t k = 0; k < generators.size(); k++) {
        if ((combo >> k) & 1) {
            const auto &g = generators[k];
            acc = multiply(acc, PhasedPauli{g.x, g.z, phase_of(g)});
        }
    }
    // acc = i^phase X^x Z^z; strip the i per Y to get the Hermitian sign.
    int e = ((acc.phase - popcount(acc.x & acc.z)) % 4 + 4) % 4;
    if (e % 2) {
        throw InputError("generated element is not Hermitian; tableau is inconsistent");
    }
    return e == 0 ? 1 : -1;
}

StabilizerTableau graph_to_tableau(const Graph &g) {
    StabilizerTableau t;
    t.n = g.num_vertices();
    for (size_t a = 0; a < t.n; a++) {
        t.generators.push_back(PauliString{VertexMask{1} << a, g.neighbors(a), 1});
    }
    return t;
}

StabilizerTableau tilde_tableau(const StabilizerTableau &t) {
    StabilizerTableau out = t;
    for (auto &g : out.generators) {
        int ys = popcount(g.x & g.z);
        int xz = popcount(g.x ^ g.z);
        if ((ys + xz) % 2) {
            g.sign = -g.sign;
        }
    }
    return out;
}

int n_tangle_stabilizer(const StabilizerTableau &t) {
    t.validate();
    auto tilde = tilde_tableau(t);
    for (const auto &g : tilde.generators) {
        int s = t.member_sign(g);
        if (s == 0) {
            // Never happens here: both tableaus share their Pauli parts.
            throw InputError("conjugated tableau left the stabilizer group");
        }
        if (s != g.sign) {
            return 0;
        }
    }
    return 1;
}

uint64_t count_odd_degree_graphs(size_t n) {
    if (n < 1) {
        throw InputError("census needs at least one vertex");
    }
    if (n > 8) {
        throw ResourceError("exhaustive census is limited to n <= 8");
    }
    if (n % 2) {
        return 0;
    }
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t u = 0; u < n; u++) {
        for (size_t v = u + 1; v < n; v++) {
            pairs.emplace_back(u, v);
        }
    }
    // Gray code over edge sets: each step toggles one edge, flipping two degree parities.
    VertexMask all = all_vertices(n);
    VertexMask parity = 0;
    uint64_t count = 0;
    uint64_t total = uint64_t{1} << pairs.size();
    for (uint64_t k = 0; k < total; k++) {
        if (k) {
            auto [u, v] = pairs[static_cast<size_t>(std::countr_zero(k))];
            parity ^= (VertexMask{1} << u) | (VertexMask{1} << v);
        }
        count += parity == all ? 1 : 0;
    }
    return count;
}

}  // namespace graphrank
