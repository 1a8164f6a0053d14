#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "endo/report.hpp"
#include "endo/scenario.hpp"

namespace py = pybind11;
using namespace endo;

namespace {

std::vector<double> rational_to_float(const RationalVector& v) { return to_double(v); }

py::dict identity_dict(const IdentityReport& r) {
  py::list terms;
  for (const auto& t : r.termwise)
    terms.append(py::dict(py::arg("w_index") = t.w_index, py::arg("d_term") = t.d_term,
                          py::arg("d_tilde_term") = t.d_tilde_term, py::arg("deviation") = t.deviation));
  return py::dict(py::arg("x_h") = r.x_h, py::arg("x_g") = r.x_g, py::arg("lhs") = r.lhs, py::arg("rhs") = r.rhs,
                  py::arg("abs_error") = r.abs_error, py::arg("termwise") = terms,
                  py::arg("termwise_max_deviation") = r.termwise_max_deviation, py::arg("pass") = r.pass);
}

std::string word(const WeylElement& w) {
  std::string out;
  for (int s : w.word) out += (out.empty() ? "" : " ") + std::to_string(s);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Endoscopic transfer factors for real Lie algebras";

  py::register_exception<ScenarioError>(m, "ScenarioError", PyExc_ValueError);
  const auto& endoscopy_error = py::register_exception<EndoscopyError>(m, "EndoscopyError", PyExc_ValueError);
  py::register_exception<NonRegularError>(m, "NonRegularError", endoscopy_error.ptr());
  py::register_exception<CohomologyError>(m, "CohomologyError", PyExc_ValueError);
  py::register_exception<RootDataError>(m, "RootDataError", PyExc_ValueError);

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("name", &Scenario::name)
      .def_readonly("g_type", &Scenario::g_type)
      .def_readonly("s_character", &Scenario::s_character)
      .def_property_readonly("base_h", [](const Scenario& s) { return rational_to_float(s.base_h); })
      .def_property_readonly("base_g", [](const Scenario& s) { return rational_to_float(s.base_g); })
      .def_property_readonly("elliptic_h", [](const Scenario& s) { return s.h_galois == HGalois::elliptic; });

  py::class_<Problem>(m, "Problem")
      .def_property_readonly("rank", [](const Problem& p) { return p.datum.g().rank(); })
      .def_property_readonly("weyl_order", [](const Problem& p) { return p.datum.weyl_g().size(); })
      .def_property_readonly("real_weyl_order", [](const Problem& p) { return p.datum.real_weyl_g().size(); })
      .def_property_readonly("weyl_order_h", [](const Problem& p) { return p.datum.weyl_h().size(); })
      .def_property_readonly("real_weyl_order_h", [](const Problem& p) { return p.datum.real_weyl_h().size(); })
      .def_property_readonly("weyl_words", [](const Problem& p) {
        std::vector<std::string> out;
        for (const auto& w : p.datum.weyl_g()) out.push_back(word(w));
        return out;
      })
      .def_property_readonly("elliptic", [](const Problem& p) { return p.datum.ellipticity().elliptic; })
      .def_property_readonly("ellipticity_evidence", [](const Problem& p) { return p.datum.ellipticity().evidence; })
      .def_property_readonly("gamma_g", [](const Problem& p) { return p.gamma_g.exponent(); })
      .def_property_readonly("gamma_h", [](const Problem& p) { return p.gamma_h.exponent(); })
      .def_property_readonly("prefactor_g", [](const Problem& p) { return p.prefactor_g.exponent(); })
      .def_property_readonly("prefactor_h", [](const Problem& p) { return p.prefactor_h.exponent(); })
      .def_property_readonly("base_value", [](const Problem& p) { return p.base.value; })
      .def("with_base_value", [](const Problem& p, Complex c) { return with_base_value(p, c); }, py::arg("value"));

  py::class_<TransferFactor>(m, "TransferFactor")
      .def_readonly("has_diagram", &TransferFactor::has_diagram)
      .def_readonly("w_index", &TransferFactor::w_index)
      .def_readonly("delta_I_ratio", &TransferFactor::delta_I_ratio)
      .def_readonly("delta_II_ratio", &TransferFactor::delta_II_ratio)
      .def_readonly("delta_III", &TransferFactor::delta_III)
      .def_readonly("value", &TransferFactor::value);

  py::class_<RunReport>(m, "RunReport")
      .def_readonly("version", &RunReport::version)
      .def_readonly("scenario", &RunReport::scenario)
      .def_readonly("samples", &RunReport::samples)
      .def_readonly("seed", &RunReport::seed)
      .def_readonly("tolerance", &RunReport::tolerance)
      .def_readonly("conventions", &RunReport::conventions)
      .def_property_readonly("pass_count", &RunReport::pass_count)
      .def_property_readonly("max_abs_error", &RunReport::max_abs_error)
      .def_property_readonly("all_pass", &RunReport::all_pass)
      .def("__len__", [](const RunReport& r) { return r.records.size(); });

  m.def("parse_scenario", &parse_scenario, py::arg("text"));
  m.def("load_scenario", &load_scenario, py::arg("path"));
  m.def("build_problem", &build_problem, py::arg("scenario"));

  m.def("transfer_factor",
        [](const Problem& p, const Vec& x_h, const Vec& x_g) { return transfer_factor(p.datum, x_h, x_g, p.base, p.a); },
        py::arg("problem"), py::arg("x_h"), py::arg("x_g"));
  m.def("stable_orbit_representatives",
        [](const Problem& p, const Vec& x_g) { return stable_orbit_representatives(p.datum, x_g); }, py::arg("problem"),
        py::arg("x_g"));
  m.def("matching_h_orbits", [](const Problem& p, const Vec& x_g) { return matching_h_orbits(p.datum, x_g); },
        py::arg("problem"), py::arg("x_g"));

  m.def("rossmann_kernel", [](const Problem& p, const Vec& x, const Vec& y) { return rossmann_kernel_g(p, x, y).value; },
        py::arg("problem"), py::arg("x"), py::arg("y"));
  m.def("d_gh", &d_gh, py::arg("problem"), py::arg("x_h"), py::arg("x_g"));
  m.def("d_tilde_gh", &d_tilde_gh, py::arg("problem"), py::arg("x_h"), py::arg("x_g"));
  m.def("verify_identity",
        [](const Problem& p, const Vec& x_h, const Vec& x_g, double tol) {
          return identity_dict(verify_identity(p, x_h, x_g, tol));
        },
        py::arg("problem"), py::arg("x_h"), py::arg("x_g"), py::arg("tolerance") = kDefaultTolerance);

  m.def("run_verify", &run_verify, py::arg("problem"), py::arg("name"), py::arg("samples"), py::arg("seed"),
        py::arg("tolerance") = kDefaultTolerance);
  m.def("emit_report",
        [](const RunReport& r, const std::string& fmt) {
          if (fmt != "human" && fmt != "machine") throw py::value_error("format must be 'human' or 'machine'");
          return emit_report(r, fmt == "machine" ? ReportFormat::machine : ReportFormat::human);
        },
        py::arg("report"), py::arg("format") = "machine");
  m.def("parse_report", &parse_report, py::arg("text"));

  m.def("h1_divisors",
        [](const std::vector<IntVector>& sigma_rows) { return h1(RealTorus(IntMatrix::from_rows(sigma_rows))).divisors(); },
        py::arg("sigma"));
  m.def("weyl_order", [](const std::string& type) { return enumerate_weyl(build_root_datum(type)).size(); },
        py::arg("type"));

  m.attr("DEFAULT_TOLERANCE") = kDefaultTolerance;
  m.attr("REPORT_VERSION") = kReportVersion;
}
