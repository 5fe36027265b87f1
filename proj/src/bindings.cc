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


// Python bindings for the graphrank core, built as graphrank._core.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphrank/als.h"
#include "graphrank/cpd.h"
#include "graphrank/errors.h"
#include "graphrank/io.h"
#include "graphrank/measures.h"

namespace py = pybind11;
using namespace graphrank;

namespace {

VertexMask side_mask(size_t n, const std::vector<size_t> &side) {
    VertexMask m = 0;
    for (size_t v : side) {
        if (v >= n) {
            throw InputError("vertex " + std::to_string(v) + " out of range");
        }
        m |= VertexMask{1} << v;
    }
    return m;
}

std::vector<size_t> mask_vertices(VertexMask m) {
    std::vector<size_t> out;
    for (size_t v = 0; m >> v; v++) {
        if ((m >> v) & 1) {
            out.push_back(v);
        }
    }
    return out;
}

py::object amplitude_py(const ExactAmplitude &z) {
    if (auto t = z.to_triple()) {
        return py::make_tuple(t->re, t->im, t->halfpow);
    }
    return py::make_tuple(z.a(), z.b(), z.c(), z.d(), z.k());
}

py::dict gme_dict(const GmeReport &r) {
    py::dict d;
    d["concurrence"] = r.concurrence;
    d["negativity"] = r.negativity;
    d["geometric"] = r.geometric;
    d["d_min"] = r.d_min;
    d["witness_cut"] = mask_vertices(r.witness_cut);
    d["method"] = r.method;
    return d;
}

py::dict als_dict(const AlsResult &r) {
    py::list restarts;
    for (const auto &x : r.restarts) {
        py::dict d;
        d["residual"] = x.residual;
        d["iterations"] = x.iterations;
        d["max_term_norm"] = x.max_term_norm;
        d["converged"] = x.converged;
        d["diverged"] = x.diverged;
        d["failed"] = x.failed;
        d["trajectory"] = x.trajectory;
        restarts.append(d);
    }
    py::dict d;
    d["best_residual"] = r.best_residual;
    d["best_restart"] = r.best_restart;
    d["restarts"] = restarts;
    d["factors"] = r.factors;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Graph-state tensor rank tools: exact decompositions, bounds, ALS and entanglement measures.";

    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const InputError &e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init([](size_t n, const std::vector<std::pair<size_t, size_t>> &edges) {
                 return Graph::from_edges(n, edges);
             }),
             py::arg("n"), py::arg("edges") = std::vector<std::pair<size_t, size_t>>{})
        .def_static("empty", &Graph::empty, py::arg("n"))
        .def_static("line", &Graph::line, py::arg("n"))
        .def_static("ring", &Graph::ring, py::arg("n"))
        .def_static("star", &Graph::star, py::arg("n"))
        .def_static("complete", &Graph::complete, py::arg("n"))
        .def_static("from_graph6", [](const std::string &s) { return parse_graph6(s); }, py::arg("text"))
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def("edges", &Graph::edges)
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("graph6", [](const Graph &g) { return to_graph6(g); })
        .def("local_complement", [](const Graph &g, size_t v) { return local_complement(g, v); }, py::arg("v"))
        .def("is_connected", [](const Graph &g) { return is_connected(g); })
        .def("__eq__", [](const Graph &a, const Graph &b) { return a == b; })
        .def("__repr__", [](const Graph &g) { return "Graph(" + g.str() + ")"; });

    m.def("cut_rank", [](const Graph &g, const std::vector<size_t> &side) {
        return cut_rank(g, side_mask(g.num_vertices(), side));
    }, py::arg("graph"), py::arg("side"), "GF(2) rank of the cut biadjacency matrix.");

    m.def("min_vertex_cover", [](const Graph &g) {
        auto c = min_vertex_cover(g);
        return mask_vertices(c.witness);
    }, py::arg("graph"));

    m.def("graph_state", [](const Graph &g) { return build_graph_state(g).to_complex(); }, py::arg("graph"),
          "Dense complex amplitudes, qubit 0 most significant.");

    m.def("graph_state_exact", [](const Graph &g) {
        py::list out;
        auto psi = build_graph_state(g);
        for (const auto &z : psi.amplitudes()) {
            out.append(amplitude_py(z));
        }
        return out;
    }, py::arg("graph"), "Exact amplitudes as (re, im, k) meaning (re + i im) / 2^(k/2).");

    m.def("schmidt_spectrum", [](const Graph &g, const std::vector<size_t> &side) {
        auto n = g.num_vertices();
        return schmidt_spectrum(build_graph_state(g), Bipartition::of(n, side_mask(n, side)));
    }, py::arg("graph"), py::arg("side"));

    py::class_<CpDecomposition>(m, "CpDecomposition")
        .def_property_readonly("num_qubits", [](const CpDecomposition &d) { return d.n; })
        .def_property_readonly("rank", &CpDecomposition::rank)
        .def("dense", [](const CpDecomposition &d) { return reconstruct(d).to_complex(); })
        .def("factors", [](const CpDecomposition &d) { return factors_from_cpd(d); })
        .def("to_json", [](const CpDecomposition &d) { return cpd_to_json(d).dump(); })
        .def_static("from_json", [](const std::string &s) { return cpd_from_json(nlohmann::json::parse(s)); })
        .def("verify", [](const CpDecomposition &d, const Graph &g) {
            auto v = verify(d, build_graph_state(g));
            return py::make_tuple(v.exact, v.residual);
        }, py::arg("graph"), "(exact, residual) against the graph state.");

    m.def("line_cpd", &line_cpd, py::arg("n"));
    m.def("ring_cpd", &ring_cpd, py::arg("m"));

    m.def("rank_bounds", [](const Graph &g, size_t orbit_cap, uint64_t seed) {
        auto b = rank_bounds(g, orbit_cap, seed);
        py::dict d;
        d["lower"] = b.lower;
        d["upper"] = b.upper;
        d["flattening_lower"] = b.flattening_lower;
        d["max_cut_rank"] = b.max_cut_rank;
        d["lower_cut"] = mask_vertices(b.lower_cut);
        d["half_exponent_lower"] = b.half_exponent_lower;
        d["exhaustive_cuts"] = b.exhaustive_cuts;
        d["cover_upper"] = b.cover_upper;
        d["orbit_size"] = b.orbit_size;
        d["orbit_complete"] = b.orbit_complete;
        d["odd_ring"] = b.odd_ring;
        d["lower_witness"] = b.lower_witness;
        d["upper_witness"] = b.upper_witness;
        return d;
    }, py::arg("graph"), py::arg("orbit_cap") = 10000, py::arg("seed") = 0);

    m.def("gme", [](const Graph &g, bool dense) {
        return gme_dict(dense ? gme_dense(build_graph_state(g)) : gme_closed_form(g));
    }, py::arg("graph"), py::arg("dense") = false);

    m.def("n_tangle", [](const Graph &g, const std::string &method) -> py::object {
        if (method == "rule") {
            return py::int_(n_tangle_graph_rule(g));
        }
        if (method == "exact") {
            return amplitude_py(n_tangle_exact(build_graph_state(g)));
        }
        if (method == "dense") {
            return py::float_(n_tangle_dense(build_graph_state(g)));
        }
        if (method == "stabilizer") {
            return py::int_(n_tangle_stabilizer(graph_to_tableau(g)));
        }
        throw InputError("method must be rule, exact, dense or stabilizer");
    }, py::arg("graph"), py::arg("method") = "rule");

    m.def("count_odd_degree_graphs", &count_odd_degree_graphs, py::arg("n"));

    m.def("als_fit", [](const Graph &g, size_t rank, size_t restarts, size_t max_iters, uint64_t seed, double tol,
                        double lam, double stop_below, const std::optional<CpDecomposition> &warm) {
        AlsConfig c;
        c.rank = rank;
        c.restarts = restarts;
        c.max_iters = max_iters;
        c.seed = seed;
        c.tol = tol;
        c.lambda = lam;
        c.stop_below = stop_below;
        std::optional<CpFactors> w;
        if (warm) {
            w = factors_from_cpd(*warm);
        }
        AlsResult r;
        {
            py::gil_scoped_release release;
            r = als_fit(build_graph_state(g), c, w);
        }
        return als_dict(r);
    }, py::arg("graph"), py::arg("rank"), py::arg("restarts") = 10, py::arg("max_iters") = 2000,
       py::arg("seed") = 0, py::arg("tol") = 1e-12, py::arg("lam") = 1e-12, py::arg("stop_below") = 0.0,
       py::arg("warm") = py::none());

    m.def("lower_bound_structure", [](size_t h, size_t trials, uint64_t seed) {
        auto r = verify_lower_bound_structure(h, trials, seed);
        py::dict d;
        d["h"] = r.h;
        d["basis_states"] = r.basis_states;
        d["basis_orthonormal"] = r.basis_orthonormal;
        d["rho_flat_rank"] = r.rho_flat_rank;
        d["product_states"] = r.product_states;
        d["products_in_support"] = r.products_in_support;
        d["products_are_product"] = r.products_are_product;
        d["combinations_exact"] = r.combinations_exact;
        d["random_trials"] = r.random_trials;
        d["random_entangled"] = r.random_entangled;
        d["passed"] = r.passed();
        return d;
    }, py::arg("h"), py::arg("trials") = 1000, py::arg("seed") = 1);
}
