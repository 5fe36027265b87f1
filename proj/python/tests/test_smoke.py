# Copyright 2026 The graphrank Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import itertools

import numpy as np
import pytest

import graphrank as gr


def reference_state(n, edges):
    """Graph state built from the CZ phase rule, qubit 0 most significant."""
    psi = np.empty(2**n, dtype=complex)
    for index in range(2**n):
        bits = [(index >> (n - 1 - q)) & 1 for q in range(n)]
        parity = sum(bits[u] & bits[v] for u, v in edges) & 1
        psi[index] = (-1) ** parity
    return psi / np.sqrt(2**n)


def reference_cut_rank(n, edges, side):
    """GF(2) rank of the cut biadjacency by elimination over Python ints."""
    rest = [v for v in range(n) if v not in side]
    rows = []
    for a in side:
        row = 0
        for j, b in enumerate(rest):
            if (a, b) in edges or (b, a) in edges:
                row |= 1 << j
        rows.append(row)
    rank = 0
    while rows:
        pivot = rows.pop()
        if pivot:
            rank += 1
            low = pivot & -pivot
            rows = [r ^ pivot if r & low else r for r in rows]
    return rank


def test_graph_state_matches_reference():
    g = gr.Graph(4, [(0, 1), (1, 2), (2, 3), (0, 2)])
    np.testing.assert_allclose(gr.graph_state(g), reference_state(4, g.edges()), atol=1e-15)


def test_exact_amplitudes_are_half_power_triples():
    amps = gr.graph_state_exact(gr.Graph.ring(3))
    assert len(amps) == 8
    assert all(k == 3 and im == 0 and abs(re) == 1 for re, im, k in amps)


def test_cut_rank_matches_reference_on_all_cuts():
    g = gr.Graph.ring(6)
    edges = set(g.edges())
    for size in range(1, 6):
        for side in itertools.combinations(range(6), size):
            assert gr.cut_rank(g, list(side)) == reference_cut_rank(6, edges, side)


@pytest.mark.parametrize("n", range(2, 9))
def test_line_decomposition(n):
    d = gr.line_cpd(n)
    assert d.rank == 2 ** (n // 2)
    exact, residual = d.verify(gr.Graph.line(n))
    assert exact and residual == 0
    np.testing.assert_allclose(d.dense(), reference_state(n, gr.Graph.line(n).edges()), atol=1e-12)


@pytest.mark.parametrize("m,terms", [(3, 3), (5, 6), (7, 12), (9, 24)])
def test_ring_decomposition(m, terms):
    d = gr.ring_cpd(m)
    assert d.rank == terms
    assert d.verify(gr.Graph.ring(m))[0]
    again = gr.CpDecomposition.from_json(d.to_json())
    assert again.verify(gr.Graph.ring(m))[0]


def test_rank_bounds_on_rings():
    assert (gr.rank_bounds(gr.Graph.ring(5))["lower"], gr.rank_bounds(gr.Graph.ring(5))["upper"]) == (5, 6)
    b = gr.rank_bounds(gr.Graph.ring(6))
    assert (b["lower"], b["upper"]) == (8, 8)


def test_gme_closed_form_matches_dense():
    for g in [gr.Graph.star(5), gr.Graph.ring(5), gr.Graph(4, [(0, 1), (2, 3)])]:
        closed, dense = gr.gme(g), gr.gme(g, dense=True)
        for key in ("concurrence", "negativity", "geometric"):
            assert abs(closed[key] - dense[key]) < 1e-9


def test_n_tangle_methods_agree():
    for g in [gr.Graph.complete(4), gr.Graph.line(4), gr.Graph.ring(6), gr.Graph(2, [(0, 1)])]:
        rule = gr.n_tangle(g, "rule")
        assert gr.n_tangle(g, "stabilizer") == rule
        assert abs(gr.n_tangle(g, "dense") - rule) < 1e-12
        psi = reference_state(g.num_vertices, g.edges())
        n = g.num_vertices
        flipped = sum((-1) ** bin(x).count("1") * psi[x] * psi[(2**n - 1) ^ x] for x in range(2**n))
        assert abs(abs(flipped) ** 2 - rule) < 1e-12
    assert [gr.count_odd_degree_graphs(n) for n in (2, 4, 6)] == [1, 8, 1024]


def test_als_recovers_ring_decompositions():
    g = gr.Graph.ring(5)
    r = gr.als_fit(g, rank=6, restarts=20, seed=1, stop_below=1e-10)
    assert r["best_residual"] < 1e-6
    traj = r["restarts"][r["best_restart"]]["trajectory"]
    assert all(b <= a for a, b in zip(traj, traj[1:]))
    warm = gr.als_fit(g, rank=6, restarts=1, warm=gr.ring_cpd(5))
    assert warm["best_residual"] < 1e-12 and warm["restarts"][0]["iterations"] == 0


def test_lower_bound_structure():
    assert gr.lower_bound_structure(3, trials=100)["passed"]


def test_errors():
    with pytest.raises(ValueError):
        gr.ring_cpd(4)
    with pytest.raises(ValueError):
        gr.Graph(3, [(0, 0)])
    with pytest.raises(gr.ResourceError):
        gr.als_fit(gr.Graph.ring(17), rank=2)
    assert gr.Graph.from_graph6(gr.Graph.ring(5).graph6()) == gr.Graph.ring(5)
