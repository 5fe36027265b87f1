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


"""Tensor rank bounds, exact CP decompositions and entanglement measures for graph states."""

from graphrank._core import (
    CpDecomposition,
    Graph,
    ResourceError,
    als_fit,
    count_odd_degree_graphs,
    cut_rank,
    gme,
    graph_state,
    graph_state_exact,
    line_cpd,
    lower_bound_structure,
    min_vertex_cover,
    n_tangle,
    rank_bounds,
    ring_cpd,
    schmidt_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "CpDecomposition",
    "Graph",
    "ResourceError",
    "als_fit",
    "count_odd_degree_graphs",
    "cut_rank",
    "gme",
    "graph_state",
    "graph_state_exact",
    "line_cpd",
    "lower_bound_structure",
    "min_vertex_cover",
    "n_tangle",
    "rank_bounds",
    "ring_cpd",
    "schmidt_spectrum",
]
