#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cslab/io.hpp"

namespace py = pybind11;

namespace {

cslab::FFMatrix matrix_from_rows(
    std::uint32_t p, const std::vector<std::vector<std::uint32_t>>& rows) {
  return cslab::FFMatrix(p, rows);
}

std::vector<std::vector<std::uint32_t>> matrix_rows(const cslab::FFMatrix& m) {
  std::vector<std::vector<std::uint32_t>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m.at(r, c));
  return out;
}

}  // namespace

PYBIND11_MODULE(cslab, m) {
  m.doc() =
      "Exact-arithmetic toolkit for Gabriel quivers and the converse of "
      "Schur's lemma over finite-dimensional GF(p)-algebras";

  py::register_exception<cslab::GuardExceeded>(m, "GuardExceeded");
  py::register_exception<cslab::TheoremViolation>(m, "TheoremViolation");

  py::class_<cslab::FFMatrix>(m, "FFMatrix")
      .def(py::init(&matrix_from_rows), py::arg("p"), py::arg("rows"))
      .def_static("identity", &cslab::FFMatrix::identity, py::arg("p"),
                  py::arg("n"))
      .def_property_readonly("p", &cslab::FFMatrix::p)
      .def_property_readonly("nrows", &cslab::FFMatrix::rows)
      .def_property_readonly("ncols", &cslab::FFMatrix::cols)
      .def("rank", &cslab::FFMatrix::rank)
      .def("null_space", &cslab::FFMatrix::null_space)
      .def("rref", [](const cslab::FFMatrix& m) { return m.rref(); })
      .def("solve",
           [](const cslab::FFMatrix& m, const cslab::FFMatrix& rhs) {
             return m.solve(rhs);
           })
      .def("invertible", &cslab::FFMatrix::invertible)
      .def("rows", &matrix_rows)
      .def("__mul__", [](const cslab::FFMatrix& a,
                         const cslab::FFMatrix& b) { return a * b; })
      .def("__add__", [](const cslab::FFMatrix& a,
                         const cslab::FFMatrix& b) { return a + b; })
      .def("__eq__", [](const cslab::FFMatrix& a,
                        const cslab::FFMatrix& b) { return a == b; })
      .def("__repr__", [](const cslab::FFMatrix& m) {
        return "FFMatrix(p=" + std::to_string(m.p()) + ", " + m.to_string() +
               ")";
      });

  m.def("row_space_intersection", &cslab::row_space_intersection);

  py::class_<cslab::AlgebraPresentation, cslab::AlgebraPtr>(m, "Algebra")
      .def_property_readonly("p", &cslab::AlgebraPresentation::p)
      .def_property_readonly("dim", &cslab::AlgebraPresentation::dim)
      .def_property_readonly("label", &cslab::AlgebraPresentation::label)
      .def("validate",
           [](const cslab::AlgebraPtr& a) {
             cslab::ValidationReport rep = cslab::validate(*a);
             return py::make_tuple(rep.ok(), rep.message);
           })
      .def("__repr__", [](const cslab::AlgebraPresentation& a) {
        return "Algebra(" + a.label() + ", p=" + std::to_string(a.p()) +
               ", dim=" + std::to_string(a.dim()) + ")";
      });

  m.def("field", &cslab::field_algebra, py::arg("p"));
  m.def("uniserial", &cslab::uniserial_lambda, py::arg("p"), py::arg("n"));
  m.def("upper_triangular", &cslab::upper_triangular, py::arg("n"),
        py::arg("base"));
  m.def("matrix_algebra", &cslab::matrix_algebra, py::arg("n"),
        py::arg("base"));
  m.def("direct_product", &cslab::direct_product, py::arg("a"), py::arg("b"));
  m.def(
      "group_algebra",
      [](const std::vector<std::vector<std::size_t>>& table, std::uint32_t p) {
        return cslab::from_group_table(table, p);
      },
      py::arg("table"), py::arg("p"));
  m.def(
      "algebra_from_json",
      [](const std::string& text) {
        return cslab::algebra_from_json(cslab::ordered_json::parse(text));
      },
      py::arg("text"), "Parse an algebra description document");
  m.def("load_algebra", &cslab::load_algebra_file, py::arg("path"));

  py::class_<cslab::RightModule>(m, "RightModule")
      .def_property_readonly("dim", &cslab::RightModule::dim)
      .def_property_readonly("p", &cslab::RightModule::p)
      .def("action", &cslab::RightModule::action,
           py::return_value_policy::copy)
      .def("__repr__", [](const cslab::RightModule& mod) {
        return "RightModule(dim=" + std::to_string(mod.dim()) + " over " +
               mod.algebra().label() + ")";
      });

  m.def(
      "regular_module",
      [](const cslab::AlgebraPtr& a) { return cslab::RightModule::regular(a); },
      py::arg("algebra"));
  m.def("is_simple", &cslab::is_simple, py::arg("module"),
        py::arg("guard") = cslab::kDefaultGuard);
  m.def("length", &cslab::length, py::arg("module"),
        py::arg("guard") = cslab::kDefaultGuard);
  m.def(
      "composition_factor_dims",
      [](const cslab::RightModule& mod, std::uint64_t guard) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const auto& [factor, mult] :
             cslab::composition_factors(mod, guard))
          out.push_back({factor.dim(), mult});
        return out;
      },
      py::arg("module"), py::arg("guard") = cslab::kDefaultGuard);
  m.def(
      "end_dim",
      [](const cslab::RightModule& mod) {
        return cslab::hom_space(mod, mod).dim();
      },
      py::arg("module"));
  m.def(
      "are_isomorphic",
      [](const cslab::RightModule& a, const cslab::RightModule& b,
         std::uint64_t guard) {
        return cslab::are_isomorphic(a, b, guard).has_value();
      },
      py::arg("m"), py::arg("n"), py::arg("guard") = cslab::kDefaultGuard);

  m.def(
      "quiver_report",
      [](const cslab::AlgebraPtr& a, std::uint64_t guard) {
        cslab::GabrielQuiver q = cslab::gabriel_quiver(a, guard);
        return cslab::dump_report(cslab::quiver_report_json(q, a->label()));
      },
      py::arg("algebra"), py::arg("guard") = cslab::kDefaultGuard,
      "JSON quiver report as a string");
  m.def(
      "quiver_dot",
      [](const cslab::AlgebraPtr& a, std::uint64_t guard) {
        return cslab::to_dot(cslab::gabriel_quiver(a, guard));
      },
      py::arg("algebra"), py::arg("guard") = cslab::kDefaultGuard);
  m.def(
      "csl_report",
      [](const cslab::AlgebraPtr& a, std::size_t max_length,
         bool force_exhaustive, std::uint64_t guard) {
        return cslab::dump_report(cslab::csl_report_json(
            cslab::csl_check(a, max_length, force_exhaustive, guard)));
      },
      py::arg("algebra"), py::arg("max_length") = 3,
      py::arg("force_exhaustive") = false,
      py::arg("guard") = cslab::kDefaultGuard,
      "JSON CSL report as a string");
  m.def(
      "structure_report",
      [](const cslab::AlgebraPtr& a, std::uint64_t guard) {
        return cslab::dump_report(
            cslab::structure_report_json(cslab::semiprimary_structure(a, guard)));
      },
      py::arg("algebra"), py::arg("guard") = cslab::kDefaultGuard);
  m.def(
      "subcat_report",
      [](std::uint32_t p, std::size_t n, std::size_t max_dim,
         std::uint64_t guard) {
        return cslab::dump_report(cslab::subcat_report_json(
            cslab::quasi_csl_check(cslab::uniserial_lambda(p, n), max_dim,
                                   guard)));
      },
      py::arg("p"), py::arg("n"), py::arg("max_dim"),
      py::arg("guard") = cslab::kDefaultGuard);
}
