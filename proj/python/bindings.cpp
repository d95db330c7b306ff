/**
 * Thin python surface over the exact oscillatory-integral core: enough to
 * build phases and charts, run the evaluators, and drive the invariant
 * suites from pytest.  Exact objects stay opaque; results cross the boundary
 * as python scalars, strings, and dicts.
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nonarch/errors.hpp"
#include "nonarch/json_io.hpp"
#include "nonarch/manifold.hpp"
#include "nonarch/oscillatory.hpp"
#include "nonarch/phase.hpp"
#include "nonarch/restriction.hpp"
#include "nonarch/series.hpp"
#include "nonarch/suites.hpp"

namespace py = pybind11;
using namespace nonarch;

namespace {

Phase make_phase(const FieldSpec& F,
                 const std::vector<std::pair<std::int64_t, std::string>>& coeffs) {
    std::vector<std::pair<std::int64_t, Scalar>> c;
    c.reserve(coeffs.size());
    for (const auto& [i, text] : coeffs) c.emplace_back(i, Scalar::parse(F, text));
    return Phase(F, c);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact oscillatory integrals over Q_p and F_p((t))";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PreconditionFailed>(m, "PreconditionFailed",
                                               PyExc_ValueError);
    py::register_exception<DivisionByZero>(m, "DivisionByZero",
                                           PyExc_ZeroDivisionError);
    py::register_exception<ResourceLimit>(m, "ResourceLimit",
                                          PyExc_RuntimeError);

    py::class_<FieldSpec>(m, "Field")
        .def(py::init([](const std::string& kind, std::int64_t p) {
                 return nonarch::make_field(kind, p);
             }),
             py::arg("kind"), py::arg("p"))
        .def_property_readonly("p", &FieldSpec::p)
        .def("__repr__", [](const FieldSpec& F) { return F.str(); })
        .def("__eq__", [](const FieldSpec& a, const FieldSpec& b) { return a == b; });

    py::class_<Phase>(m, "Phase")
        .def(py::init([](const FieldSpec& F,
                         const std::vector<std::pair<std::int64_t, std::string>>&
                             coeffs) { return make_phase(F, coeffs); }),
             py::arg("field"), py::arg("coeffs"))
        .def_property_readonly("field", &Phase::field)
        .def("__repr__", &Phase::str);

    py::class_<GraphChart>(m, "Chart")
        .def(py::init([](const std::string& json_text) {
                 return chart_from_json(parse_json_text(json_text));
             }),
             py::arg("json_text"))
        .def_property_readonly("dim", &GraphChart::dim)
        .def_property_readonly("ambient", &GraphChart::ambient);

    m.def("phase_json", [](const Phase& f) { return phase_to_json(f).dump(); },
          py::arg("phase"), "phase serialized to its JSON wire form");
    m.def("phase_from_json",
          [](const std::string& text) {
              return phase_from_json(parse_json_text(text));
          },
          py::arg("json_text"));

    m.def("sp_number",
          [](const Phase& f) {
              const SpNumberResult r = sp_number(f);
              py::dict d;
              d["decided"] = r.decided;
              d["infinite"] = r.infinite;
              d["r"] = r.r;
              d["note"] = r.note;
              return d;
          },
          py::arg("phase"),
          "least window scale from which every rescaling is stationary-phase");

    m.def("regular_degree",
          [](const Phase& f) {
              const RegularityData reg = regular_degree(f);
              py::dict d;
              d["d"] = reg.d;
              d["c"] = reg.c.str();
              d["min_ord"] = reg.min_ord.str();
              return d;
          },
          py::arg("phase"));

    m.def("eval_integral",
          [](const Phase& f, const std::string& y, std::int64_t cap,
             int threads) {
              const CharacterSum I = eval_integral(
                  f, Scalar::parse(f.field(), y), cap, -1, threads);
              py::dict d;
              d["magnitude"] = I.magnitude();
              d["err"] = I.magnitude_error();
              d["zero"] = I.is_zero();
              d["exact"] = I.str();
              return d;
          },
          py::arg("phase"), py::arg("y"), py::arg("cap") = kDefaultCosetCap,
          py::arg("threads") = 1,
          "int psi(y f(x)) dx with exact zero detection");

    m.def("decay_csv",
          [](const Phase& f, std::int64_t k, std::int64_t jmin,
             std::int64_t jmax, std::int64_t cap, int threads) {
              return decay_profile(f, k, jmin, jmax, cap, threads).to_csv();
          },
          py::arg("phase"), py::arg("k"), py::arg("jmin") = 0,
          py::arg("jmax") = 6, py::arg("cap") = kDefaultCosetCap,
          py::arg("threads") = 1);

    m.def("manifold_type",
          [](const GraphChart& chart, std::int64_t kmax, std::int64_t depth) {
              return type_on_chart(chart, kmax, depth).str();
          },
          py::arg("chart"), py::arg("kmax") = 4, py::arg("depth") = 8);

    m.def("restriction_csv",
          [](const GraphChart& chart, std::int64_t k, const std::string& p,
             std::int64_t trials, std::uint64_t seed, bool allow_above_p0) {
              mpq_class q(p);
              q.canonicalize();
              return restriction_check(chart, k, q, trials, seed,
                                       allow_above_p0)
                  .to_csv();
          },
          py::arg("chart"), py::arg("k"), py::arg("p"),
          py::arg("trials") = 100, py::arg("seed") = 42,
          py::arg("allow_above_p0") = false);

    m.def("run_suite",
          [](const std::string& name, std::uint64_t seed, int threads) {
              const SuiteReport r = name == "all"
                                        ? run_all_suites(seed, threads)
                                        : run_suite(name, seed, threads);
              return py::make_tuple(r.all_pass(), r.str());
          },
          py::arg("name") = "all", py::arg("seed") = 42,
          py::arg("threads") = 1,
          "(all_pass, report text) for one invariant suite or all of them");
}
