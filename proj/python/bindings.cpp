#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "springer/classdata.hpp"
#include "springer/cuspidal.hpp"
#include "springer/error.hpp"
#include "springer/levis.hpp"
#include "springer/series.hpp"
#include "springer/tables.hpp"

namespace py = pybind11;
using namespace springer;

namespace {

CentralCharacter character(const std::string& chi) { return parse_character(chi); }

std::string render(const Report& r, const std::string& format) {
  if (format == "json") return emit_json(r);
  if (format == "csv") return emit_csv(r);
  if (format == "text") return emit_text(r);
  throw ArgumentError("unknown format: " + format);
}

std::vector<std::string> pair_texts(const std::vector<PairLabel>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.text());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Counting layer of the modular generalized Springer correspondence for exceptional groups";

  auto error = py::register_exception<Error>(m, "SpringerError");
  py::register_exception<TypeError>(m, "SpringerTypeError", error.ptr());
  auto argument = py::register_exception<ArgumentError>(m, "ArgumentError", error.ptr());
  py::register_exception<InvalidCharacterError>(m, "InvalidCharacterError", argument.ptr());
  py::register_exception<BudgetExceededError>(m, "BudgetExceededError", error.ptr());
  py::register_exception<DataError>(m, "DataError", error.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", error.ptr());

  m.def("pairs", [](const std::string& g, std::uint64_t l, const std::string& chi) {
    return pair_texts(pairs(CartanType::parse(g), l, character(chi)));
  }, py::arg("type"), py::arg("ell"), py::arg("chi") = "trivial");
  m.def("pairs_count", [](const std::string& g, std::uint64_t l, const std::string& chi) {
    return pairs_count(CartanType::parse(g), l, character(chi));
  }, py::arg("type"), py::arg("ell"), py::arg("chi") = "trivial");
  m.def("cuspidal_count", [](const std::string& g, std::uint64_t l, const std::string& chi) {
    return cuspidal_count(CartanType::parse(g), l, character(chi));
  }, py::arg("type"), py::arg("ell"), py::arg("chi") = "trivial");
  m.def("cuspidal_pairs", [](const std::string& g, std::uint64_t l, const std::string& chi) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : classify_cuspidal_pairs(CartanType::parse(g), l, character(chi)).entries)
      out.emplace_back(e.text(), status_name(e.status));
    return out;
  }, py::arg("type"), py::arg("ell"), py::arg("chi") = "trivial");
  m.def("sylow_class", [](const std::string& g, std::uint64_t l) { return sylow_class(CartanType::parse(g), l).name; },
        py::arg("type"), py::arg("ell"));
  m.def("class_count", [](const std::string& group) { return class_stats(GroupSpec::parse(group)).num_classes(); },
        py::arg("group"));
  m.def("count_l_regular", [](const std::string& group, std::uint64_t l) {
    return count_l_regular(GroupSpec::parse(group), l);
  }, py::arg("group"), py::arg("ell"));
  m.def("basic_set", [](const std::string& id) {
    return pair_texts(basic_set(decomposition_matrix(id)).modular_series);
  }, py::arg("id"));
  m.def("decomposition_matrix_ids", &decomposition_matrix_ids);

  m.def("report", [](const std::string& kind, const std::string& type, std::uint64_t l, const std::string& chi,
                     const std::string& datum, const std::string& format) {
    Report r;
    if (kind == "table1") r = table1_report();
    else if (kind == "sylow") r = sylow_report();
    else if (kind == "appendix") r = appendix_report(CartanType::parse(type), l, character(chi));
    else if (kind == "series") r = series_report(CartanType::parse(type), l, character(chi), datum);
    else if (kind == "classify") r = classify_report(CartanType::parse(type), l, character(chi));
    else if (kind == "verify") r = verify_report(verify_all_checks());
    else throw ArgumentError("unknown report: " + kind);
    return render(r, format);
  }, py::arg("kind"), py::arg("type") = "", py::arg("ell") = 0, py::arg("chi") = "trivial", py::arg("datum") = "",
     py::arg("format") = "json");
}
