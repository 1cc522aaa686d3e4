#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "dfg/ansatz.hpp"
#include "dfg/cfrac.hpp"
#include "dfg/escaliers.hpp"
#include "dfg/json_io.hpp"
#include "dfg/recurrences.hpp"
#include "dfg/shapes.hpp"
#include "dfg/verify.hpp"

namespace py = pybind11;

namespace {

mpz_class to_mpz(py::handle v) {
    if (!PyLong_Check(v.ptr())) throw py::type_error("expected an int");
    return mpz_class(py::cast<std::string>(py::str(v)));
}

py::int_ to_pyint(const mpz_class& v) {
    PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

dfg::MultiPoly gamma_route(int n, const std::string& route) {
    if (n < 1) throw py::value_error("n must be >= 1");
    if (route == "rec") return dfg::gamma(n);
    if (route == "tableaux") return dfg::gamma_by_tableaux(n);
    if (route == "escaliers") return dfg::gamma_by_escaliers(n);
    if (route == "M") return dfg::gamma_by_M(n - 1);
    if (route == "N") return dfg::gamma_by_N(n - 1);
    if (route == "motzkin") return dfg::gamma_by_motzkin(n);
    if (route == "cfrac") return dfg::gamma_by_cfrac(n)[n];
    throw py::value_error("unknown route: " + route);
}

}  // namespace

PYBIND11_MODULE(dfgamma, m) {
    m.doc() = "Exact generalized Dumont-Foata polynomials";

    py::class_<dfg::MultiPoly>(m, "Poly")
        .def("__str__", &dfg::MultiPoly::text)
        .def("__repr__", [](const dfg::MultiPoly& p) { return "Poly(" + p.text() + ")"; })
        .def("__eq__", [](const dfg::MultiPoly& a, const dfg::MultiPoly& b) { return a == b; })
        .def("__add__", [](const dfg::MultiPoly& a, const dfg::MultiPoly& b) { return a + b; })
        .def("__sub__", [](const dfg::MultiPoly& a, const dfg::MultiPoly& b) { return a - b; })
        .def("__mul__", [](const dfg::MultiPoly& a, const dfg::MultiPoly& b) { return a * b; })
        .def("to_json", [](const dfg::MultiPoly& p) { return dfg::poly_to_json(p).dump(); })
        .def("eval", [](const dfg::MultiPoly& p, py::sequence point) {
            if (py::len(point) != dfg::kNumVars)
                throw py::value_error("eval expects 6 integers (x, y, z, xb, yb, zb)");
            std::array<mpz_class, dfg::kNumVars> pt;
            for (int i = 0; i < dfg::kNumVars; ++i) pt[i] = to_mpz(point[i]);
            return to_pyint(p.eval(pt));
        });

    m.def("gamma", &gamma_route, py::arg("n"), py::arg("route") = "rec",
          "Gamma_n as a Poly, computed by the chosen route");
    m.def("dumont_foata", [](int n) {
        if (n < 1) throw py::value_error("n must be >= 1");
        return dfg::dumont_foata(n);
    }, py::arg("n"), "Classical three-variable polynomial F_n(x, y, z)");
    m.def("genocchi", [](int n) {
        if (n < 1) throw py::value_error("n must be >= 1");
        return to_pyint(dfg::genocchi(n));
    }, py::arg("n"), "Genocchi number G_{2n+2} = F_n(1, 1, 1)");

    m.def("b_coeff", [](int k) {
        if (k < 0) throw py::value_error("k must be >= 0");
        return dfg::b_coeff(k);
    }, py::arg("k"));
    m.def("lambda_coeff", [](int k) {
        if (k < 1) throw py::value_error("k must be >= 1");
        return dfg::lambda_coeff(k);
    }, py::arg("k"));

    m.def("count_tableaux", [](const std::string& word) {
        return to_pyint(dfg::count_tableaux(dfg::ShapeWord::parse(word)));
    }, py::arg("word"), "Number of alternative tableaux of the given shape word");
    m.def("count_pretableaux", [](int n) {
        if (n < 0) throw py::value_error("n must be >= 0");
        return to_pyint(dfg::count_pretableaux(n));
    }, py::arg("n"));
    m.def("count_surjective", [](const std::string& word) {
        return to_pyint(dfg::count_surjective(dfg::ShapeWord::parse(word)));
    }, py::arg("word"), "Number of surjective pretableaux of the given B/A shape word");
    m.def("count_motzkin", [](int length) {
        if (length < 0) throw py::value_error("length must be >= 0");
        return to_pyint(dfg::count_motzkin_paths(length));
    }, py::arg("length"));

    m.def("verify", [](const std::string& suite, int nmax, int jobs) {
        auto results = dfg::run_suite(suite, nmax, jobs);
        return py::make_tuple(dfg::all_pass(results), dfg::report_to_json(results).dump());
    }, py::arg("suite") = "all", py::arg("nmax") = 4, py::arg("jobs") = 1,
       "Returns (all_pass, json_report)");
}
