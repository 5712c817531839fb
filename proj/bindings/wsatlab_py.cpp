#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wsatlab/bootstrap.hpp"
#include "wsatlab/cliques.hpp"
#include "wsatlab/constructions.hpp"
#include "wsatlab/edgelist.hpp"
#include "wsatlab/formulas.hpp"
#include "wsatlab/generators.hpp"
#include "wsatlab/json_io.hpp"
#include "wsatlab/montecarlo.hpp"
#include "wsatlab/properties.hpp"
#include "wsatlab/wsat.hpp"

namespace py = pybind11;
using namespace wsatlab;

namespace {

py::object to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = to_py(value);
            return out;
        }
        default: throw std::runtime_error("unexpected json value");
    }
}

// Runs fn without the GIL, then converts the result to Python objects with
// the GIL back.
template <typename Fn>
py::object dict_of(Fn&& fn) {
    nlohmann::json j;
    {
        py::gil_scoped_release release;
        j = nlohmann::json(fn());
    }
    return to_py(j);
}

PropertyReport run_check(const Graph& g, const std::string& name, int s) {
    if (name == "ext") return check_ext(g, s);
    if (name == "ham") return check_ham(g, s);
    if (name == "bs") return check_bs(g, s);
    if (name == "bstar") return check_bstar(g, s);
    throw std::invalid_argument("unknown property: " + name);
}

}  // namespace

PYBIND11_MODULE(wsatlab, m) {
    m.doc() = "Weak clique-saturation laboratory: closures, saturation numbers, "
              "constructions, and seeded Monte Carlo estimates";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("add_edge", &Graph::add_edge)
        .def("remove_edge", &Graph::remove_edge)
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<int, int>> out;
                 for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                 return out;
             })
        .def("fingerprint", [](const Graph& g) { return fingerprint_hex(g.fingerprint()); })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def(
        "generate_gnp",
        [](int n, double p, std::uint64_t seed) { return generate_gnp(n, p, Seed(seed)); },
        py::arg("n"), py::arg("p"), py::arg("seed") = 0);
    m.def("read_edge_list", [](const std::string& text) { return read_edge_list(text); },
          py::arg("text"));
    m.def("to_edge_list", &to_edge_list, py::arg("g"));

    m.def(
        "closure",
        [](const Graph& host, const Graph& start, int s) {
            return dict_of([&] { return bootstrap_closure(host, start, s); });
        },
        py::arg("host"), py::arg("start"), py::arg("s"));
    m.def("percolates", &percolates, py::arg("host"), py::arg("start"), py::arg("s"),
          py::call_guard<py::gil_scoped_release>());
    m.def("weakly_saturated_in_complete", &weakly_saturated_in_complete, py::arg("g"),
          py::arg("s"), py::call_guard<py::gil_scoped_release>());

    m.def("count_cliques", &count_cliques, py::arg("g"), py::arg("s"),
          py::call_guard<py::gil_scoped_release>());
    m.def("pair_witness_count", &pair_witness_count, py::arg("g"), py::arg("u"), py::arg("v"),
          py::arg("s"));

    m.def("lovasz_number", &lovasz_number, py::arg("n"), py::arg("s"));
    m.def(
        "wsat_exact",
        [](const Graph& g, int s) { return dict_of([&] { return wsat_exact(g, s); }); },
        py::arg("g"), py::arg("s"));
    m.def(
        "decide_as",
        [](const Graph& g, int s) { return dict_of([&] { return decide_as(g, s); }); },
        py::arg("g"), py::arg("s"));

    m.def(
        "check_property",
        [](const Graph& g, const std::string& name, int s) {
            return dict_of([&] { return run_check(g, name, s); });
        },
        py::arg("g"), py::arg("name"), py::arg("s"));

    m.def(
        "build_lemma1",
        [](const Graph& g, int s) { return dict_of([&] { return build_kernel_construction(g, s); }); },
        py::arg("g"), py::arg("s"));
    m.def(
        "build_theorem4",
        [](const Graph& g, double p, int s, double w) {
            return dict_of([&] { return build_core_construction(g, p, s, w); });
        },
        py::arg("g"), py::arg("p"), py::arg("s"), py::arg("w"));
    m.def(
        "core_size",
        [](int n, double p, int s, double w) {
            CoreSize c = core_size(n, p, s, w);
            return py::make_tuple(c.m, c.clamped);
        },
        py::arg("n"), py::arg("p"), py::arg("s"), py::arg("w"));

    m.def("threshold_scale", &threshold_scale, py::arg("n"), py::arg("s"));
    m.def("threshold_constant", &threshold_constant, py::arg("s"));
    m.def("sharp_threshold_scale", &sharp_threshold_scale, py::arg("n"), py::arg("s"));
    m.def("janson_lambda", &janson_lambda, py::arg("n"), py::arg("p"), py::arg("s"));
    m.def("janson_delta", &janson_delta, py::arg("n"), py::arg("p"), py::arg("s"));
    m.def(
        "expected_uncovered_edges",
        [](long long n, double p, int s) {
            return dict_of([&] { return expected_uncovered_edges(n, p, s); });
        },
        py::arg("n"), py::arg("p"), py::arg("s"));
    m.def("bs_threshold_p", &bs_threshold_p, py::arg("n"), py::arg("s"), py::arg("w"));
    m.def("wsat_upper_bound", &wsat_upper_bound, py::arg("n"), py::arg("p"), py::arg("s"),
          py::arg("w"));

    m.def(
        "sweep_property",
        [](const std::vector<int>& ns, const std::vector<double>& ps, int s,
           std::uint64_t trials, std::uint64_t seed, const std::string& property, int workers) {
            PropertyCheck check = property_by_name(property, s);
            return dict_of([&] {
                return sweep_property(ns, ps, s, trials, Seed(seed), property, check, workers);
            });
        },
        py::arg("ns"), py::arg("ps"), py::arg("s"), py::arg("trials"), py::arg("seed"),
        py::arg("property"), py::arg("workers") = 1);
    m.def(
        "estimate_threshold",
        [](int n, int s, const std::string& property, std::uint64_t trials, double tolerance,
           std::uint64_t seed, double p_lo, double p_hi, int workers) {
            PropertyCheck check = property_by_name(property, s);
            return dict_of([&] {
                return estimate_threshold(n, s, property, check, trials, tolerance, Seed(seed),
                                          p_lo, p_hi, workers);
            });
        },
        py::arg("n"), py::arg("s"), py::arg("property"), py::arg("trials"),
        py::arg("tolerance"), py::arg("seed"), py::arg("p_lo") = 0.0, py::arg("p_hi") = 1.0,
        py::arg("workers") = 1);
}
