#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symfer/c2.hpp"
#include "symfer/fock.hpp"
#include "symfer/vertex.hpp"
#include "symfer/zhu.hpp"

namespace py = pybind11;
using namespace symfer;

PYBIND11_MODULE(_symfer, m) {
    m.doc() = "symplectic fermion vertex algebra computations (exact rational)";

    py::class_<AlgebraConfig>(m, "AlgebraConfig")
        .def(py::init<>())
        .def(py::init([](int d) { return AlgebraConfig{d}; }), py::arg("d"))
        .def_readwrite("d", &AlgebraConfig::d);

    m.def("graded_dim_series", &graded_dim_series, py::arg("d"), py::arg("max_w"));

    m.def(
        "basis_count",
        [](int d, int num, int den, const std::string& sector, bool even_only) {
            Sector s = sector == "twisted"
                           ? Sector::Twisted
                           : (sector == "zero_extended" ? Sector::ZeroExtended
                                                        : Sector::Untwisted);
            return enumerate_basis(AlgebraConfig{d}, s, rat(num, den), even_only)
                .size();
        },
        py::arg("d"), py::arg("w_num"), py::arg("w_den") = 1,
        py::arg("sector") = "untwisted", py::arg("even_only") = false);

    m.def("c2_quotient_dims", [](int d, int max_weight) {
        auto rep = c2_quotient_dims(AlgebraConfig{d}, max_weight);
        py::dict out;
        out["d"] = rep.d;
        out["total"] = rep.total;
        out["expected"] = rep.expected;
        py::list per;
        for (const auto& w : rep.per_weight) {
            py::dict e;
            e["weight"] = w.weight;
            e["ambient_dim"] = w.ambient_dim;
            e["c2_rank"] = w.c2_rank;
            e["quotient_dim"] = w.quotient_dim;
            per.append(e);
        }
        out["per_weight"] = per;
        return out;
    }, py::arg("d"), py::arg("max_weight"));

    m.def("n_d", [](int d) { return (1L << (2 * d - 1)) + 8L * d * d + 1; },
          py::arg("d"));

    m.def("zhu_algebra_dim", [](int d) {
        return build_Ad(AlgebraConfig{d}).basis.size();
    }, py::arg("d"));

    m.def("omega_min_poly", [](int d) {
        auto ad = build_Ad(AlgebraConfig{d});
        return min_poly(ad.omega).str();
    }, py::arg("d"));

    m.def("center_dim", [](int d) {
        auto ad = build_Ad(AlgebraConfig{d});
        return center(ad).first;
    }, py::arg("d"));

    m.def("nilpotency_degree", [](int d) {
        AlgebraConfig cfg{d};
        C2Workspace ws(cfg);
        return nilpotency_degree(ws).degree;
    }, py::arg("d"));

    m.def("lambda_bracket_ok", [](int d, int max_depth, int max_w) {
        return lambda_bracket_check(AlgebraConfig{d}, max_depth, max_w).pass;
    }, py::arg("d"), py::arg("max_depth") = 4, py::arg("max_w") = 4);
}
