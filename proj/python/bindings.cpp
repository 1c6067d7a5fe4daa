#include <map>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "freeboson/catalog.hpp"
#include "freeboson/fock.hpp"
#include "freeboson/regularized.hpp"
#include "freeboson/voa.hpp"

namespace py = pybind11;
using namespace freeboson;

namespace {

using VecMap = std::map<std::vector<int>, std::string>;

FockVector from_map(const VecMap& m) {
    FockVector v;
    for (const auto& [parts, c] : m) {
        v.add_term(Partition(parts), Scalar::parse(c));
    }
    return v;
}

std::vector<std::pair<std::vector<int>, std::string>> to_map(const FockVector& v) {
    std::vector<std::pair<std::vector<int>, std::string>> out;
    for (const auto& [p, c] : v.terms()) {
        out.emplace_back(p.parts(), c.str());
    }
    return out;
}

RunConfig make_config(const std::string& suite, std::optional<int> weight_cap, std::optional<int> x_window,
                      const std::vector<int>& y_orders, std::optional<std::pair<int, int>> mode_range,
                      std::uint64_t seed) {
    RunConfig c;
    c.suite = suite;
    c.weight_cap = weight_cap;
    c.x_window = x_window;
    c.y_orders = y_orders;
    c.mode_range = mode_range;
    c.seed = seed;
    c.validate();
    return c;
}

std::string reports_json(const std::vector<CheckReport>& reports) {
    Json out = Json::array();
    for (const auto& r : reports) {
        out.push_back(to_json(r, false));
    }
    return out.dump();
}

}  // namespace

PYBIND11_MODULE(_freeboson, m) {
    m.doc() = "Exact free boson Fock space computations";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<WindowInsufficient>(m, "WindowInsufficient", PyExc_ArithmeticError);

    m.def("bernoulli", [](int n) { return bernoulli(n).str(); });
    m.def("zeta_neg", [](int k) { return zeta_neg(k).str(); }, "zeta(1 - k) for k >= 2");
    m.def("regularization_constant", [](int r) { return regularization_constant(r).str(); });
    m.def("central_term", [](int r, int s, int mode) { return central_term(r, s, mode).str(); });
    m.def("graded_dim", [](int n) { return graded_dim(n); });
    m.def("character_offset", [] { return character_offset().str(); });
    m.def("partitions_of", [](int n) {
        std::vector<std::vector<int>> out;
        for (const auto& p : partitions_of(n)) {
            out.push_back(p.parts());
        }
        return out;
    });

    m.def("h_apply", [](int n, const VecMap& v) { return to_map(h_apply(n, from_map(v))); });
    m.def("virasoro_apply", [](int n, const VecMap& v, bool regularized) {
        return to_map(regularized ? virasoro_bar_apply(n, from_map(v)) : virasoro_apply(n, from_map(v)));
    });
    m.def("quad_apply", [](int r1, int r2, int n, bool regularized, const VecMap& v) {
        return to_map(quad_apply({r1, r2, n, regularized}, from_map(v)));
    });
    m.def("vertex_mode", [](const VecMap& u, int n, const VecMap& v) {
        return to_map(vertex_mode(from_map(u), n, from_map(v)));
    });
    m.def("x_mode", [](const VecMap& u, int n, const VecMap& v) {
        return to_map(x_mode(from_map(u), n, from_map(v)));
    });
    m.def("bracket_coeff", [](const VecMap& u, int k, const VecMap& v) {
        return to_map(bracket_coeff(from_map(u), k, from_map(v)));
    });
    m.def("omega", [] { return to_map(free_boson().omega); });

    m.def("catalog_ids", &catalog_ids);
    m.def("select_checks", &select_checks);
    m.def(
        "run_suite",
        [](const std::string& suite, std::optional<int> weight_cap, std::optional<int> x_window,
           const std::vector<int>& y_orders, std::optional<std::pair<int, int>> mode_range, std::uint64_t seed) {
            const auto c = make_config(suite, weight_cap, x_window, y_orders, mode_range, seed);
            std::vector<CheckReport> reports;
            {
                py::gil_scoped_release release;
                reports = run_suite(c);
            }
            return reports_json(reports);
        },
        py::arg("suite"), py::arg("weight_cap") = py::none(), py::arg("x_window") = py::none(),
        py::arg("y_orders") = std::vector<int>{}, py::arg("mode_range") = py::none(), py::arg("seed") = 1);
    m.def("render_table", &render_table);
}
