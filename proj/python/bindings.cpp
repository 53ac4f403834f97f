// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "decapsp/es_tree.hpp"
#include "decapsp/oracle.hpp"
#include "decapsp/rounding.hpp"
#include "decapsp/runner.hpp"
#include "decapsp/workload.hpp"

namespace py = pybind11;
using namespace decapsp;

namespace {

RunConfig make_config(const std::string& algo, double p, std::int64_t tau, double eps, int k, Weight d, double c,
                      std::uint64_t seed) {
    RunConfig cfg;
    cfg.algo = algo;
    cfg.p = p;
    cfg.tau = tau;
    cfg.eps = eps;
    cfg.k = k;
    cfg.d = d;
    cfg.c = c;
    cfg.seed = seed;
    validate(cfg);
    return cfg;
}

std::vector<std::vector<double>> to_rows(const DistanceMatrix& m) {
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(m.size()));
    for (NodeId u = 0; u < m.size(); ++u) {
        for (NodeId v = 0; v < m.size(); ++v) {
            rows[static_cast<std::size_t>(u)].push_back(to_estimate(m.at(u, v)));
        }
    }
    return rows;
}

double level_value(Weight w) { return to_estimate(w); }

} // namespace

PYBIND11_MODULE(_decapsp, m) {
    m.doc() = "Decremental approximate all-pairs shortest paths";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<EdgeNotFound>(m, "EdgeNotFound", base.ptr());
    py::register_exception<DuplicateEdge>(m, "DuplicateEdge", base.ptr());
    py::register_exception<MonotonicityViolation>(m, "MonotonicityViolation", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<OracleTooLarge>(m, "OracleTooLarge", base.ptr());

    py::class_<DynamicGraph>(m, "Graph")
        .def(py::init<NodeId, Weight>(), py::arg("n"), py::arg("weight_bound") = 1)
        .def_property_readonly("node_count", &DynamicGraph::node_count)
        .def_property_readonly("edge_count", &DynamicGraph::edge_count)
        .def_property_readonly("weight_bound", &DynamicGraph::weight_bound)
        .def_property_readonly("version", &DynamicGraph::version)
        .def("add_edge", &DynamicGraph::add_edge, py::arg("u"), py::arg("v"), py::arg("w") = 1)
        .def("has_edge", &DynamicGraph::has_edge)
        .def("weight", [](const DynamicGraph& g, NodeId u, NodeId v) { return to_estimate(g.weight(u, v)); })
        .def("edges",
             [](const DynamicGraph& g) {
                 std::vector<std::tuple<NodeId, NodeId, Weight>> out;
                 for (const auto& e : g.edges()) {
                     out.emplace_back(e.u, e.v, e.w);
                 }
                 return out;
             })
        .def("delete", [](DynamicGraph& g, NodeId u, NodeId v) { g.apply_update(UpdateEvent::remove(u, v)); })
        .def("increase",
             [](DynamicGraph& g, NodeId u, NodeId v, Weight w) { g.apply_update(UpdateEvent::increase(u, v, w)); })
        .def("serialize", &serialize_graph)
        .def("copy", [](const DynamicGraph& g) { return DynamicGraph(g); });

    m.def("parse_graph", &parse_graph, py::arg("text"));

    m.def(
        "generate",
        [](NodeId n, double density, Weight max_weight, std::uint64_t seed, double deletion_fraction,
           std::size_t checkpoint_every) {
            WorkloadConfig cfg;
            cfg.n = n;
            cfg.density = density;
            cfg.max_weight = max_weight;
            cfg.seed = seed;
            cfg.deletion_fraction = deletion_fraction;
            cfg.checkpoint_every = checkpoint_every;
            const auto w = generate_workload(cfg);
            return py::make_tuple(w.graph, serialize_stream(w.stream));
        },
        py::arg("n"), py::arg("density"), py::arg("max_weight") = 1, py::arg("seed") = 1,
        py::arg("deletion_fraction") = 1.0, py::arg("checkpoint_every") = 1,
        "Random graph plus an update stream in the text format.");

    py::class_<DecrementalApsp, std::unique_ptr<DecrementalApsp>>(m, "Algorithm")
        .def_property_readonly("name", &DecrementalApsp::name)
        .def_property_readonly("graph", &DecrementalApsp::graph, py::return_value_policy::reference_internal)
        .def("delete", [](DecrementalApsp& a, NodeId u, NodeId v) { a.apply(UpdateEvent::remove(u, v)); })
        .def("increase",
             [](DecrementalApsp& a, NodeId u, NodeId v, Weight w) { a.apply(UpdateEvent::increase(u, v, w)); })
        .def("query", &DecrementalApsp::query)
        .def("counters", &DecrementalApsp::counters);

    m.def(
        "make_algorithm",
        [](const DynamicGraph& g, const std::string& algo, double p, std::int64_t tau, double eps, int k, Weight d,
           double c, std::uint64_t seed) { return make_algorithm(make_config(algo, p, tau, eps, k, d, c, seed), g); },
        py::arg("graph"), py::arg("algo"), py::arg("p") = 0.0, py::arg("tau") = 0, py::arg("eps") = 0.9,
        py::arg("k") = 0, py::arg("d") = 0, py::arg("c") = 2.0, py::arg("seed") = 1);

    m.def(
        "verify_json",
        [](const DynamicGraph& g, const std::string& stream, const std::string& algo, double p, std::int64_t tau,
           double eps, int k, Weight d, double c, std::uint64_t seed, bool dense) {
            const auto cfg = make_config(algo, p, tau, eps, k, d, c, seed);
            auto a = make_algorithm(cfg, g);
            SweepOptions opts;
            opts.dense = dense;
            return to_json(sweep(*a, parse_stream(stream), bound_for(cfg), opts)).dump();
        },
        py::arg("graph"), py::arg("stream"), py::arg("algo"), py::arg("p") = 0.0, py::arg("tau") = 0,
        py::arg("eps") = 0.9, py::arg("k") = 0, py::arg("d") = 0, py::arg("c") = 2.0, py::arg("seed") = 1,
        py::arg("dense") = false);

    m.def(
        "run_json",
        [](const DynamicGraph& g, const std::string& stream, const std::string& algo, double p, std::int64_t tau,
           double eps, int k, Weight d, double c, std::uint64_t seed) {
            const auto cfg = make_config(algo, p, tau, eps, k, d, c, seed);
            return to_json(run_stream(cfg, g, parse_stream(stream))).dump();
        },
        py::arg("graph"), py::arg("stream"), py::arg("algo"), py::arg("p") = 0.0, py::arg("tau") = 0,
        py::arg("eps") = 0.9, py::arg("k") = 0, py::arg("d") = 0, py::arg("c") = 2.0, py::arg("seed") = 1);

    m.def("exact_apsp", [](const DynamicGraph& g) { return to_rows(exact_apsp(g)); });
    m.def("bottleneck_weights", [](const DynamicGraph& g) { return to_rows(bottleneck_weights(g)); });
    m.def(
        "static_two_apsp",
        [](const DynamicGraph& g, double p, std::uint64_t seed) {
            const auto est = static_two_apsp(g, p, seed);
            std::vector<std::vector<double>> rows(static_cast<std::size_t>(est.size()));
            for (NodeId u = 0; u < est.size(); ++u) {
                for (NodeId v = 0; v < est.size(); ++v) {
                    rows[static_cast<std::size_t>(u)].push_back(est.at(u, v));
                }
            }
            return rows;
        },
        py::arg("graph"), py::arg("p"), py::arg("seed") = 1);

    m.def("rounded", &rounded, py::arg("delta"), py::arg("eps"));

    py::class_<MonotoneESTree>(m, "MonotoneESTree")
        .def(py::init<const DynamicGraph&, NodeId, Weight>(), py::arg("graph"), py::arg("root"), py::arg("cap"))
        .def("level", [](const MonotoneESTree& t, NodeId v) { return level_value(t.level(v)); })
        .def("delete_edge", &MonotoneESTree::delete_edge)
        .def("increase_weight", &MonotoneESTree::increase_weight)
        .def("insert_edge", &MonotoneESTree::insert_edge);

    m.attr("algorithm_tags") = algorithm_tags();
}
