#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "acr/cutrank.hpp"
#include "acr/enumerate.hpp"
#include "acr/error.hpp"
#include "acr/families.hpp"
#include "acr/graph_io.hpp"
#include "acr/local_ops.hpp"
#include "acr/named.hpp"
#include "acr/obstructions.hpp"
#include "acr/report.hpp"
#include "acr/suites.hpp"

namespace py = pybind11;
using namespace acr;

namespace {

// structured results cross as JSON text; the Python side decodes them
ThresholdMode mode_of(const std::string& m) {
    if (m == "le") return ThresholdMode::AtMost;
    if (m == "lt") return ThresholdMode::LessThan;
    throw ParameterError("mode must be 'le' or 'lt'");
}

}  // namespace

PYBIND11_MODULE(_acr, m) {
    static py::exception<Error> error(m, "AcrError");
    py::register_exception<ParameterError>(m, "ParameterError", error.ptr());
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<CapacityError>(m, "CapacityError", error.ptr());
    py::register_exception<DomainError>(m, "DomainError", error.ptr());
    py::register_exception<IntegrityError>(m, "IntegrityError", error.ptr());

    m.def("graph6_of_named", [](const std::string& name) { return to_graph6(parse_named(name)); });
    m.def("graph6_of_edges", [](const std::string& edges) { return to_graph6(parse_edge_list(edges)); });
    m.def("average_cut_rank", [](const std::string& g6, int workers) {
        EngineOptions e;
        e.workers = workers;
        return average_cut_rank(parse_graph6(g6), e).to_pow2_string();
    }, py::arg("g6"), py::arg("workers") = 1);
    m.def("max_cut_rank", [](const std::string& g6) { return max_cut_rank(parse_graph6(g6)); });
    m.def("cut_rank", [](const std::string& g6, std::uint64_t mask) {
        const Graph g = parse_graph6(g6);
        if ((mask & ~low_bits(g.order())) != 0) throw ParameterError("mask names a vertex outside the graph");
        return cut_rank(g, VertexSet(mask));
    });
    m.def("x_sequence", [](const std::string& eps, int n) { return x_sequence(Dyadic::parse(eps), n).str(); });
    m.def("enumerate_graphs", [](int n) {
        std::vector<std::string> out;
        for (const Graph& g : enumerate_graphs(n)) out.push_back(to_graph6(g));
        return out;
    });
    m.def("orbit_classes", [](const std::string& g6, std::size_t cap) {
        const OrbitClasses oc = orbit_classes(parse_graph6(g6), cap);
        return py::make_tuple(oc.codes, oc.truncated);
    }, py::arg("g6"), py::arg("cap") = 200000);
    m.def("is_vertex_minor", [](const std::string& minor, const std::string& host) {
        return to_json(is_vertex_minor(parse_graph6(minor), parse_graph6(host))).dump();
    });
    m.def("obstructions", [](const std::string& alpha, const std::string& mode, int n_max, int workers) {
        ObstructionOptions o;
        o.workers = workers;
        return to_json(obstructions(Dyadic::parse(alpha), mode_of(mode), n_max, o)).dump();
    }, py::arg("alpha"), py::arg("mode"), py::arg("n_max"), py::arg("workers") = 1);
    m.def("census", [](int n_max, const std::string& cap, int workers) {
        return to_json(value_census(n_max, Dyadic::parse(cap), workers)).dump();
    }, py::arg("n_max"), py::arg("cap") = "3/2", py::arg("workers") = 1);
    m.def("build_family", [](const std::string& eps, int n) {
        const ForestFamily f = build_family(Dyadic::parse(eps), n);
        return to_json(f, check_members(f, 1)).dump();
    });
    m.def("run_suite", [](const std::string& name, std::optional<int> max_n, std::optional<int> samples,
                          std::uint64_t seed, int workers) {
        SuiteOptions o;
        o.max_n = max_n;
        o.samples = samples;
        o.seed = seed;
        o.workers = workers;
        return to_json(run_suite(name, o)).dump();
    }, py::arg("name"), py::arg("max_n") = py::none(), py::arg("samples") = py::none(), py::arg("seed") = 1,
       py::arg("workers") = 1);
    m.def("suite_names", [] { return suite_names(); });
}
