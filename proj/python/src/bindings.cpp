#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "paperlab/compute.hpp"
#include "paperlab/groebner.hpp"
#include "paperlab/invariants.hpp"
#include "paperlab/report.hpp"

namespace py = pybind11;
using namespace paperlab;

namespace {

Scenario scenario_for(std::uint32_t p, std::size_t d) {
  return d == 3 ? build_example_main(p) : build_example_general(p, d);
}

std::string verify_json(std::uint32_t p, std::size_t d, std::optional<std::uint32_t> max_degree, bool stretch,
                        bool timings) {
  const ScenarioReport report = run_verification(scenario_for(p, d), VerifyOptions{max_degree, stretch});
  const nlohmann::json j = report_to_json(report);
  return (timings ? j : without_timings(j)).dump();
}

std::string verify_text(std::uint32_t p, std::size_t d, std::optional<std::uint32_t> max_degree, bool stretch) {
  return render_report(run_verification(scenario_for(p, d), VerifyOptions{max_degree, stretch}), ReportFormat::kText);
}

std::string compute_json(const std::string& op, const std::string& input) {
  const auto parsed = parse_compute_op(op);
  if (!parsed) throw Error(ErrorCode::kInvalidArgument, "unknown operation " + op);
  return run_compute(*parsed, parse_compute_text(input)).dump();
}

py::dict invariant_generators(std::uint32_t p, std::size_t d, std::uint32_t max_degree, const std::string& group) {
  const Scenario sc = scenario_for(p, d);
  if (group != "G" && group != "H") throw Error(ErrorCode::kInvalidArgument, "group must be G or H");
  const MatrixGroup& g = group == "G" ? sc.g : sc.h;
  const IntegralityResult result = integrality_certificate(g, sc.ring, minimal_generators(g, sc.ring, max_degree));
  std::vector<std::string> polys;
  for (const Polynomial& f : result.generators.polynomials()) polys.push_back(format_polynomial(f));
  py::dict out;
  out["generators"] = polys;
  out["counts_by_degree"] = result.generators.count_by_degree();
  out["certificate"] = certificate_name(result.generators.certificate);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact invariant-theory computations over prime fields";

  py::register_exception<Error>(m, "PaperlabError", PyExc_ValueError);

  m.def("verify_json", &verify_json, py::arg("p"), py::arg("d") = 3, py::arg("max_degree") = py::none(),
        py::arg("stretch") = false, py::arg("timings") = true, py::call_guard<py::gil_scoped_release>());
  m.def("verify_text", &verify_text, py::arg("p"), py::arg("d") = 3, py::arg("max_degree") = py::none(),
        py::arg("stretch") = false, py::call_guard<py::gil_scoped_release>());
  m.def("compute_json", &compute_json, py::arg("operation"), py::arg("input"),
        py::call_guard<py::gil_scoped_release>());
  m.def("invariant_generators", &invariant_generators, py::arg("p"), py::arg("d"), py::arg("max_degree"),
        py::arg("group") = "H");
  m.def("default_degree_bound", &default_degree_bound, py::arg("p"), py::arg("d"));
  m.attr("REPORT_SCHEMA_VERSION") = kReportSchemaVersion;
}
