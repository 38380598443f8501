#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "repstab/oracle.hpp"
#include "repstab/serialize.hpp"
#include "repstab/stability.hpp"

namespace py = pybind11;
using namespace repstab;

namespace {

// Symmetric functions and reports cross the boundary as JSON text; the
// package turns them into dicts of Fractions.
std::string dump(const nlohmann::json& j) { return j.dump(); }

std::string rational_text(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact symmetric-function engine for diagonal arrangement complements";

  py::register_exception<OracleLimitExceeded>(m, "OracleLimitExceeded", PyExc_RuntimeError);

  m.def("kequal_char", [](int n, int i, int d, int k) {
    py::gil_scoped_release release;
    return dump(to_json(kequal_char(n, i, d, k)));
  }, py::arg("n"), py::arg("i"), py::arg("d"), py::arg("k"));

  m.def("psi", [](int n, int q, int r, int t, int d, int k) {
    py::gil_scoped_release release;
    return dump(to_json(psi(PsiParams{n, q, r, t, d, k})));
  }, py::arg("n"), py::arg("q"), py::arg("r"), py::arg("t"), py::arg("d"), py::arg("k"));

  m.def("sharp_bound", [](int d, int k, int i, std::optional<int> horizon,
                          std::optional<int> max_degree, int jobs) {
    py::gil_scoped_release release;
    SharpBoundOptions options;
    options.horizon = horizon;
    options.max_degree = max_degree;
    options.jobs = jobs;
    return dump(to_json(sharp_bound_certified(d, k, i, options)));
  }, py::arg("d"), py::arg("k"), py::arg("i"), py::arg("horizon") = py::none(),
     py::arg("max_degree") = py::none(), py::arg("jobs") = 1);

  m.def("lambda_report", [](const std::string& lambda, int d, int i, int n_max, int limit) {
    auto set = parse_lambda_set(lambda);
    py::gil_scoped_release release;
    return dump(to_json(lambda_report(set, d, i, n_max, limit)));
  }, py::arg("lam"), py::arg("d"), py::arg("i"), py::arg("n_max"),
     py::arg("limit") = kDefaultOracleLimit);

  m.def("lambda_char", [](int n, int d, const std::string& lambda, int i, int limit) {
    auto set = parse_lambda_set(lambda);
    py::gil_scoped_release release;
    return dump(to_json(lambda_char_smalln(n, d, set, i, limit)));
  }, py::arg("n"), py::arg("d"), py::arg("lam"), py::arg("i"),
     py::arg("limit") = kDefaultOracleLimit);

  m.def("theorem_bounds", [](int d, int k, int i) {
    std::vector<std::string> out;
    for (const auto& b : theorem_bounds(d, k, i)) out.push_back(rational_text(b));
    return out;
  }, py::arg("d"), py::arg("k"), py::arg("i"));

  m.def("general_bound", [](const std::string& lambda, int i, int d) {
    return rational_text(general_bound(parse_lambda_set(lambda), i, d));
  }, py::arg("lam"), py::arg("i"), py::arg("d"));

  m.def("is_stable_step", [](const std::string& next, const std::string& prev) {
    return is_stable_step(from_json(nlohmann::json::parse(next)),
                          from_json(nlohmann::json::parse(prev)));
  }, py::arg("next"), py::arg("prev"));

  m.def("to_text", [](const std::string& f) { return to_text(from_json(nlohmann::json::parse(f))); },
        py::arg("f"));
  m.def("from_text", [](const std::string& text) { return dump(to_json(parse_text(text))); },
        py::arg("text"));

  m.attr("DEFAULT_ORACLE_LIMIT") = kDefaultOracleLimit;
}
