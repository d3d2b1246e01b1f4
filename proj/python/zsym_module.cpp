#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zsym/io.hpp"

namespace py = pybind11;
using namespace zsym;

namespace {

WitnessFamily parse_family(const std::string& f) {
  if (f == "so") return WitnessFamily::so_even;
  if (f == "sp") return WitnessFamily::sp;
  throw std::invalid_argument("family must be 'so' or 'sp'");
}

std::string census_doc(int max_n, const std::string& family,
                       const std::string& format) {
  std::vector<CaseSpec> specs = enumerate_all(max_n);
  if (family != "all") {
    std::vector<CaseSpec> kept;
    for (auto& s : specs)
      if (cartan_type(s) == family[0]) kept.push_back(s);
    specs = std::move(kept);
  }
  std::vector<CaseReport> reports;
  for (const auto& s : specs) reports.push_back(run_case(s));
  return format == "markdown" ? emit_markdown(reports) : emit_json(reports);
}

bool verify_doc(const std::string& doc) {
  Grading g = grading_from_json(nlohmann::json::parse(doc));
  return check_grading(g).ok();
}

std::string roundtrip_doc(const std::string& doc) {
  Grading g = grading_from_json(nlohmann::json::parse(doc));
  return grading_to_json(g).dump();
}

std::string psi_grading_doc(const std::string& family, int m, int index) {
  return grading_to_json(psi_grading(parse_family(family), m, index)).dump();
}

bool equiv_witnesses(const std::string& family, int m) {
  WitnessFamily wf = parse_family(family);
  Grading g1 = psi_grading(wf, m, 1);
  auto ws = canonical_witnesses(wf, m);
  return verify_equiv(g1, psi_grading(wf, m, 2), ws[0]) &&
         verify_equiv(g1, psi_grading(wf, m, 3), ws[1]);
}

std::string connection_doc(const std::string& doc) {
  Grading g = grading_from_json(nlohmann::json::parse(doc));
  return connection_to_json(build_space(g)).dump();
}

bool jacobi_doc(const std::string& doc) {
  return jacobi_check(sclie_from_json(nlohmann::json::parse(doc)));
}

}  // namespace

PYBIND11_MODULE(pyzsym, mod) {
  mod.doc() = "exact Z2xZ2-grading census of the classical matrix Lie algebras";
  mod.def("census", &census_doc, py::arg("max_n") = 8, py::arg("family") = "all",
          py::arg("format") = "json",
          "Run the bounded census; returns a json or markdown document.");
  mod.def("verify_grading", &verify_doc, py::arg("doc"),
          "Check a grading document for direct sum and compatibility.");
  mod.def("grading_roundtrip", &roundtrip_doc, py::arg("doc"));
  mod.def("psi_grading", &psi_grading_doc, py::arg("family"), py::arg("m"),
          py::arg("index"), "The Psi-involution grading as a json document.");
  mod.def("equiv_witnesses", &equiv_witnesses, py::arg("family"), py::arg("m"),
          "Verify the two canonical weak-equivalence witnesses.");
  mod.def("connection", &connection_doc, py::arg("doc"),
          "Torsion/curvature arrays of a grading's local model.");
  mod.def("jacobi_check", &jacobi_doc, py::arg("doc"),
          "Jacobi identity for a structure-constant document.");
}
