#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chargealg/algebra.hpp"
#include "chargealg/cli.hpp"
#include "chargealg/errors.hpp"
#include "chargealg/report.hpp"
#include "chargealg/syntax.hpp"
#include "chargealg/sysdsl.hpp"

namespace py = pybind11;
using namespace chargealg;

namespace {

SymbolTable table_for(const std::vector<std::string> &coords, const std::vector<std::string> &params) {
    std::vector<ParameterDecl> decls;
    for (const auto &p : params) {
        decls.push_back({p, false});
    }
    return SymbolTable(coords, decls);
}

std::string report_for(const std::string &text, bool numeric, const std::map<std::string, double> &bindings,
                       double dt, double horizon, std::uint64_t seed, double tolerance, std::size_t samples) {
    std::optional<NumericSettings> settings;
    if (numeric) {
        NumericSettings s;
        s.config.bindings = bindings;
        s.config.dt = dt;
        s.config.horizon = horizon;
        s.config.seed = seed;
        s.config.tolerance = tolerance;
        s.samples = samples;
        settings = s;
    }
    return report_json(build_report(text, "<python>", settings));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "symbolic Noether charge and central extension engine";

    py::register_exception<RejectionError>(m, "RejectionError", PyExc_ValueError);
    py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

    m.def(
        "normalize",
        [](const std::string &expr, const std::vector<std::string> &coords, const std::vector<std::string> &params) {
            const auto table = table_for(coords, params);
            return render(parse_expr(expr, table), table);
        },
        py::arg("expr"), py::arg("coords"), py::arg("params") = std::vector<std::string>{});

    m.def(
        "diff",
        [](const std::string &expr, const std::string &symbol, const std::vector<std::string> &coords,
           const std::vector<std::string> &params) {
            const auto table = table_for(coords, params);
            return render(diff(parse_expr(expr, table), symbol, table), table);
        },
        py::arg("expr"), py::arg("symbol"), py::arg("coords"), py::arg("params") = std::vector<std::string>{});

    m.def(
        "poisson",
        [](const std::string &a, const std::string &b, const std::vector<std::string> &coords,
           const std::vector<std::string> &params) {
            const auto table = table_for(coords, params);
            return render(poisson(parse_expr(a, table), parse_expr(b, table), table), table);
        },
        py::arg("a"), py::arg("b"), py::arg("coords"), py::arg("params") = std::vector<std::string>{});

    m.def(
        "render_system", [](const std::string &text) { return render_system(parse_system(text)); }, py::arg("text"));

    m.def(
        "hamiltonian",
        [](const std::string &text) {
            const auto spec = parse_system(text);
            return render(legendre_transform(spec).hamiltonian, spec.symbols);
        },
        py::arg("text"));

    m.def("report_json", &report_for, py::arg("text"), py::arg("numeric") = false,
          py::arg("bindings") = std::map<std::string, double>{}, py::arg("dt") = 1e-3, py::arg("horizon") = 10.0,
          py::arg("seed") = 0, py::arg("tolerance") = 1e-6, py::arg("samples") = 20,
          py::call_guard<py::gil_scoped_release>());

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
