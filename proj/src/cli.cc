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


#include "graphrank/cli.h"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <json.hpp>

#include "graphrank/als.h"
#include "graphrank/cpd.h"
#include "graphrank/errors.h"
#include "graphrank/io.h"
#include "graphrank/measures.h"

#ifndef GRAPHRANK_VERSION
#define GRAPHRANK_VERSION "0.0.0"
#endif

namespace graphrank {

namespace {

using nlohmann::json;

constexpr double kGmeAgreement = 1e-9;

struct GraphSource {
    size_t ring = 0;
    size_t line = 0;
    size_t star = 0;
    size_t complete = 0;
    size_t empty = 0;
    std::string edges;
    std::string graph6;
};

struct Common {
    uint64_t seed = 0;
    bool json = false;
};

void add_graph_source(CLI::App *cmd, GraphSource &src) {
    cmd->add_option("--ring", src.ring, "cycle on N vertices");
    cmd->add_option("--line", src.line, "path on N vertices");
    cmd->add_option("--star", src.star, "star on N vertices, center 0");
    cmd->add_option("--complete", src.complete, "complete graph on N vertices");
    cmd->add_option("--empty", src.empty, "N isolated vertices");
    cmd->add_option("--edges", src.edges, "edge-list file");
    cmd->add_option("--graph6", src.graph6, "graph6 string");
}

struct Resolved {
    Graph graph;
    json echo;
    /// "ring"/"line" when the graph came from that family flag.
    std::string family;
};

Resolved resolve(const GraphSource &src) {
    std::vector<Resolved> picked;
    if (src.ring) {
        picked.push_back({Graph::ring(src.ring), {{"ring", src.ring}}, "ring"});
    }
    if (src.line) {
        picked.push_back({Graph::line(src.line), {{"line", src.line}}, "line"});
    }
    if (src.star) {
        picked.push_back({Graph::star(src.star), {{"star", src.star}}, ""});
    }
    if (src.complete) {
        picked.push_back({Graph::complete(src.complete), {{"complete", src.complete}}, ""});
    }
    if (src.empty) {
        picked.push_back({Graph::empty(src.empty), {{"empty", src.empty}}, ""});
    }
    if (!src.edges.empty()) {
        picked.push_back({read_edge_list_file(src.edges), {{"edges", src.edges}}, ""});
    }
    if (!src.graph6.empty()) {
        picked.push_back({parse_graph6(src.graph6), {{"graph6", src.graph6}}, ""});
    }
    if (picked.size() != 1) {
        throw InputError("give exactly one graph source (--ring, --line, --star, --complete, --empty, --edges, --graph6)");
    }
    picked[0].echo["n"] = picked[0].graph.num_vertices();
    picked[0].echo["num_edges"] = picked[0].graph.num_edges();
    return picked[0];
}

json vertex_list(size_t n, VertexMask m) {
    json out = json::array();
    for (size_t v = 0; v < n; v++) {
        if ((m >> v) & 1) {
            out.push_back(v);
        }
    }
    return out;
}

bool is_scalar_array(const json &j) {
    for (const auto &e : j) {
        if (e.is_structured()) {
            return false;
        }
    }
    return true;
}

void render(std::ostream &out, const json &j, const std::string &prefix) {
    if (j.is_object()) {
        for (const auto &[k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !is_scalar_array(v))) {
                render(out, v, prefix + k + ".");
            } else {
                out << prefix << k << ": " << v.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); i++) {
            if (j[i].is_structured()) {
                render(out, j[i], prefix + std::to_string(i) + ".");
            } else {
                out << prefix << i << ": " << j[i].dump() << "\n";
            }
        }
    } else {
        out << prefix << j.dump() << "\n";
    }
}

json gme_json(const GmeReport &r, size_t n) {
    return {{"concurrence", r.concurrence},
            {"negativity", r.negativity},
            {"geometric", r.geometric},
            {"geometric_form", "cut-minimized 1 - max Schmidt coefficient"},
            {"d_min", r.d_min},
            {"witness_cut", vertex_list(n, r.witness_cut)},
            {"method", r.method}};
}

std::pair<size_t, size_t> parse_sweep(const std::string &text) {
    auto dots = text.find("..");
    size_t a = 0, b = 0;
    try {
        if (dots == std::string::npos) {
            throw std::invalid_argument("");
        }
        a = std::stoul(text.substr(0, dots));
        b = std::stoul(text.substr(dots + 2));
    } catch (const std::logic_error &) {
        throw InputError("--sweep expects A..B, got '" + text + "'");
    }
    if (a < 1 || b < a) {
        throw InputError("--sweep needs 1 <= A <= B");
    }
    return {a, b};
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact and numerical CP-rank tools for graph states"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--seed", common.seed, "random seed");
    app.add_flag("--json", common.json, "emit a JSON run report");
    app.set_version_flag("--version", GRAPHRANK_VERSION);

    GraphSource src;

    auto *state_cmd = app.add_subcommand("state", "exact amplitudes of a graph state");
    add_graph_source(state_cmd, src);
    std::string basis, input_path, output_path;
    state_cmd->add_option("--basis", basis, "0/1 string s: emit Z^s|G>");
    state_cmd->add_option("--input", input_path, "re-read a state JSON file instead of a graph");
    state_cmd->add_option("--output", output_path, "also write the state JSON to this file");

    auto *cpd_cmd = app.add_subcommand("cpd", "constructive decompositions of line and odd ring states");
    std::string family;
    size_t cpd_n = 0;
    bool do_verify = false;
    cpd_cmd->add_option("family", family, "line or ring")->required()->check(CLI::IsMember({"line", "ring"}));
    cpd_cmd->add_option("n", cpd_n, "qubit count")->required();
    cpd_cmd->add_flag("--verify", do_verify, "compare against the graph state exactly");

    size_t orbit_cap = 10000;
    auto *bounds_cmd = app.add_subcommand("bounds", "lower and upper CP-rank bounds");
    add_graph_source(bounds_cmd, src);
    bounds_cmd->add_option("--orbit-cap", orbit_cap, "local-complementation orbit size cap");

    std::string method = "closed";
    auto *measures_cmd = app.add_subcommand("measures", "cut-minimized GME measures");
    add_graph_source(measures_cmd, src);
    measures_cmd->add_option("--method", method, "closed, dense or all")
        ->check(CLI::IsMember({"closed", "dense", "all"}));

    auto *ntangle_cmd = app.add_subcommand("ntangle", "n-tangle by degree rule, dense state, stabilizers");
    add_graph_source(ntangle_cmd, src);
    ntangle_cmd->add_option("--method", method, "closed, dense, stabilizer or all")
        ->check(CLI::IsMember({"closed", "dense", "stabilizer", "all"}));

    AlsConfig als_cfg;
    std::string sweep;
    bool warm = false;
    auto *als_cmd = app.add_subcommand("als", "alternating least squares CP fits");
    add_graph_source(als_cmd, src);
    auto *rank_opt = als_cmd->add_option("--rank", als_cfg.rank, "CP rank R");
    als_cmd->add_option("--sweep", sweep, "rank range A..B")->excludes(rank_opt);
    als_cmd->add_option("--restarts", als_cfg.restarts, "random restarts per rank");
    als_cmd->add_option("--max-iters", als_cfg.max_iters, "sweeps per restart");
    als_cmd->add_option("--tol", als_cfg.tol, "relative residual change that ends a restart");
    als_cmd->add_option("--lambda", als_cfg.lambda, "Tikhonov regularization");
    als_cmd->add_option("--divergence-threshold", als_cfg.divergence_threshold, "term norm flagged as diverging");
    als_cmd->add_flag("--warm", warm, "start from the constructive decomposition (line/ring only)")->excludes("--sweep");

    auto *orbit_cmd = app.add_subcommand("orbit", "local-complementation orbit");
    add_graph_source(orbit_cmd, src);
    orbit_cmd->add_option("--orbit-cap", orbit_cap, "orbit size cap");

    size_t census_n = 0;
    auto *census_cmd = app.add_subcommand("census", "count labeled graphs whose degrees are all odd");
    census_cmd->add_option("n", census_n, "vertex count (<= 8)")->required();

    size_t lb_h = 0;
    size_t trials = 1000;
    auto *lb_cmd = app.add_subcommand("lowerbound", "check the odd-ring lower-bound structure for ring(2h+1)");
    lb_cmd->add_option("half", lb_h, "h in 2..4; the ring has 2h+1 vertices")->required();
    lb_cmd->add_option("--trials", trials, "random support vectors tested");

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    auto start = std::chrono::steady_clock::now();
    std::string command = app.get_subcommands().front()->get_name();
    json inputs = json::object();
    json results = json::object();
    int exit_code = kExitOk;
    std::string human;

    try {
        if (command == "state") {
            StateVector psi;
            if (!input_path.empty()) {
                std::ifstream in(input_path);
                if (!in) {
                    throw InputError("cannot open " + input_path);
                }
                json j;
                try {
                    j = json::parse(in);
                } catch (const json::parse_error &e) {
                    throw InputError(input_path + ": " + e.what());
                }
                psi = state_from_json(j);
                inputs["input"] = input_path;
            } else {
                auto g = resolve(src);
                inputs = g.echo;
                if (!basis.empty()) {
                    psi = graph_basis_state(g.graph, basis);
                    inputs["basis"] = basis;
                } else {
                    psi = build_graph_state(g.graph);
                }
            }
            results = state_to_json(psi);
            results["norm_squared"] = amplitude_to_json(psi.norm2());
            if (!output_path.empty()) {
                std::ofstream f(output_path);
                f << state_to_json(psi).dump() << "\n";
                if (!f) {
                    throw InputError("cannot write " + output_path);
                }
            }
            std::stringstream ss;
            size_t n = psi.num_qubits();
            for (size_t x = 0; x < psi.size(); x++) {
                std::string bits;
                for (size_t q = 0; q < n; q++) {
                    bits += ((x >> (n - 1 - q)) & 1) ? '1' : '0';
                }
                ss << "|" << bits << "> " << amplitude_to_json(psi[x]).dump() << "\n";
            }
            human = ss.str();
        } else if (command == "cpd") {
            inputs = {{"family", family}, {"n", cpd_n}, {"verify", do_verify}};
            CpDecomposition d = family == "line" ? line_cpd(cpd_n) : ring_cpd(cpd_n);
            results["rank"] = d.rank();
            results["decomposition"] = cpd_to_json(d);
            if (do_verify) {
                Graph g = family == "line" ? Graph::line(cpd_n) : Graph::ring(cpd_n);
                auto v = verify(d, build_graph_state(g));
                results["verification"] = {{"exact", v.exact}, {"residual", v.residual}};
                if (!v.exact) {
                    exit_code = kExitVerificationFailed;
                }
            }
            // One line per term: weight, then each qubit factor as (|0> amplitude, |1> amplitude).
            std::stringstream ss;
            ss << "rank: " << d.rank() << "\n";
            for (size_t t = 0; t < d.terms.size(); t++) {
                ss << "term " << t << ": " << amplitude_to_json(d.terms[t].weight).dump() << " *";
                for (const auto &f : d.terms[t].factors) {
                    ss << " (" << amplitude_to_json(f[0]).dump() << "," << amplitude_to_json(f[1]).dump() << ")";
                }
                ss << "\n";
            }
            if (do_verify) {
                ss << "verification.exact: " << results["verification"]["exact"].dump() << "\n";
                ss << "verification.residual: " << results["verification"]["residual"].dump() << "\n";
            }
            human = ss.str();
        } else if (command == "bounds") {
            auto g = resolve(src);
            inputs = g.echo;
            inputs["orbit_cap"] = orbit_cap;
            size_t n = g.graph.num_vertices();
            auto b = rank_bounds(g.graph, orbit_cap, common.seed);
            results = {{"lower", b.lower},
                       {"upper", b.upper},
                       {"lower_witness", b.lower_witness},
                       {"upper_witness", b.upper_witness},
                       {"flattening_lower", b.flattening_lower},
                       {"max_cut_rank", b.max_cut_rank},
                       {"lower_cut", vertex_list(n, b.lower_cut)},
                       {"half_exponent_lower", b.half_exponent_lower},
                       {"exhaustive_cuts", b.exhaustive_cuts},
                       {"cover_upper", b.cover_upper},
                       {"cover", {{"size", b.cover.size}, {"vertices", vertex_list(n, b.cover.witness)}}},
                       {"cover_graph", to_graph6(b.cover_graph)},
                       {"orbit_size", b.orbit_size},
                       {"orbit_complete", b.orbit_complete},
                       {"odd_ring", b.odd_ring}};
        } else if (command == "measures") {
            auto g = resolve(src);
            inputs = g.echo;
            inputs["method"] = method;
            size_t n = g.graph.num_vertices();
            std::optional<GmeReport> closed, dense;
            if (method == "closed" || method == "all") {
                closed = gme_closed_form(g.graph);
                results["closed"] = gme_json(*closed, n);
            }
            if (method == "dense" || method == "all") {
                dense = gme_dense(build_graph_state(g.graph));
                results["dense"] = gme_json(*dense, n);
            }
            if (closed && dense) {
                bool agree = std::abs(closed->concurrence - dense->concurrence) <= kGmeAgreement &&
                             std::abs(closed->negativity - dense->negativity) <= kGmeAgreement &&
                             std::abs(closed->geometric - dense->geometric) <= kGmeAgreement;
                results["agree"] = agree;
                results["tolerance"] = kGmeAgreement;
                if (!agree) {
                    exit_code = kExitVerificationFailed;
                }
            }
        } else if (command == "ntangle") {
            auto g = resolve(src);
            inputs = g.echo;
            inputs["method"] = method;
            std::vector<int> values;
            if (method == "closed" || method == "all") {
                int v = n_tangle_graph_rule(g.graph);
                results["graph_rule"] = v;
                values.push_back(v);
            }
            if (method == "dense" || method == "all") {
                auto psi = build_graph_state(g.graph);
                auto exact = n_tangle_exact(psi);
                results["dense"] = exact.to_complex().real();
                results["dense_exact"] = amplitude_to_json(exact);
                results["real_amplitudes"] = psi.is_real();
                if (exact == ExactAmplitude::one()) {
                    values.push_back(1);
                } else if (exact.is_zero()) {
                    values.push_back(0);
                } else {
                    values.push_back(-1);
                }
            }
            if (method == "stabilizer" || method == "all") {
                int v = n_tangle_stabilizer(graph_to_tableau(g.graph));
                results["stabilizer"] = v;
                values.push_back(v);
            }
            if (method == "all") {
                bool agree = std::all_of(values.begin(), values.end(), [&](int v) { return v == values[0]; });
                results["agree"] = agree;
                if (!agree) {
                    exit_code = kExitVerificationFailed;
                }
            }
        } else if (command == "als") {
            auto g = resolve(src);
            inputs = g.echo;
            als_cfg.seed = common.seed;
            inputs["restarts"] = als_cfg.restarts;
            inputs["max_iters"] = als_cfg.max_iters;
            inputs["tol"] = als_cfg.tol;
            inputs["lambda"] = als_cfg.lambda;
            inputs["divergence_threshold"] = als_cfg.divergence_threshold;
            auto psi = build_graph_state(g.graph);
            results["label"] = "numerical evidence, not a rank certificate";
            if (!sweep.empty()) {
                auto [a, b] = parse_sweep(sweep);
                inputs["sweep"] = sweep;
                json rows = json::array();
                for (const auto &row : rank_sweep(psi, a, b, als_cfg)) {
                    rows.push_back({{"rank", row.rank},
                                    {"residual", row.best_residual},
                                    {"iterations", row.iterations},
                                    {"max_term_norm", row.max_term_norm},
                                    {"diverged", row.diverged}});
                }
                results["sweep"] = std::move(rows);
            } else {
                inputs["rank"] = als_cfg.rank;
                std::optional<CpFactors> start;
                if (warm) {
                    size_t n = g.graph.num_vertices();
                    if (g.family == "ring") {
                        start = factors_from_cpd(ring_cpd(n));
                    } else if (g.family == "line") {
                        start = factors_from_cpd(line_cpd(n));
                    } else {
                        throw InputError("--warm needs --ring or --line");
                    }
                    if (static_cast<size_t>(start->front().cols()) != als_cfg.rank) {
                        throw InputError("--warm: the constructive decomposition has " +
                                         std::to_string(start->front().cols()) + " terms");
                    }
                    inputs["warm"] = true;
                }
                auto r = als_fit(psi, als_cfg, start);
                json iterations = json::array();
                for (const auto &x : r.restarts) {
                    iterations.push_back(x.iterations);
                }
                results["rank"] = als_cfg.rank;
                results["best_residual"] = r.best_residual;
                results["best_restart"] = r.best_restart;
                results["restart_residuals"] = r.restart_residuals();
                results["iterations"] = std::move(iterations);
                results["max_term_norm"] = r.best().max_term_norm;
                results["converged"] = r.best().converged;
                results["diverged"] = r.best().diverged;
                results["lambda"] = r.lambda;
            }
        } else if (command == "orbit") {
            auto g = resolve(src);
            inputs = g.echo;
            inputs["orbit_cap"] = orbit_cap;
            auto orbit = lc_orbit(g.graph, orbit_cap);
            json members = json::array();
            size_t best = SIZE_MAX;
            for (const auto &m : orbit.members) {
                auto c = min_vertex_cover(m);
                best = std::min(best, c.size);
                members.push_back({{"graph6", to_graph6(m)}, {"num_edges", m.num_edges()}, {"cover_size", c.size}});
            }
            results = {{"size", orbit.members.size()},
                       {"complete", orbit.complete},
                       {"min_cover_size", best},
                       {"members", std::move(members)}};
        } else if (command == "census") {
            inputs = {{"n", census_n}};
            results["count"] = count_odd_degree_graphs(census_n);
            if (census_n % 2 == 0) {
                results["closed_form"] = uint64_t{1} << ((census_n - 1) * (census_n - 2) / 2);
            }
        } else if (command == "lowerbound") {
            inputs = {{"h", lb_h}, {"trials", trials}};
            auto r = verify_lower_bound_structure(lb_h, trials, common.seed);
            results = {{"ring_qubits", 2 * lb_h + 1},
                       {"basis_states", r.basis_states},
                       {"basis_orthonormal", r.basis_orthonormal},
                       {"rho_flat_rank", r.rho_flat_rank},
                       {"product_states", r.product_states},
                       {"products_in_support", r.products_in_support},
                       {"products_are_product", r.products_are_product},
                       {"combinations_exact", r.combinations_exact},
                       {"random_trials", r.random_trials},
                       {"random_entangled", r.random_entangled},
                       {"passed", r.passed()}};
            if (!r.passed()) {
                exit_code = kExitVerificationFailed;
            }
        }
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ResourceError &e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResourceCeiling;
    }

    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (common.json) {
        json report = {{"command", command},
                       {"inputs", inputs},
                       {"results", results},
                       {"version", GRAPHRANK_VERSION},
                       {"seed", common.seed},
                       {"wall_time", wall}};
        out << report.dump(2) << "\n";
    } else if (!human.empty()) {
        out << human;
    } else {
        render(out, results, "");
    }
    return exit_code;
}

}  // namespace graphrank
