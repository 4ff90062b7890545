#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "jacrank/errors.hpp"
#include "jacrank/report.hpp"

namespace py = pybind11;
using namespace jacrank;

namespace {

RunConfig config(unsigned threads, std::uint64_t max_terms) {
  RunConfig cfg;
  cfg.threads = threads ? threads : threads_from_env();
  cfg.max_terms = max_terms;
  return cfg;
}

CurveSpec curve(const std::string& text) { return curve_from_json(Json::parse(text)); }

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "JSON-in, JSON-out bindings; see the jacrank package for the Python API.";
  // Messages start with the error code name, e.g. "BadExponent: ...".
  py::register_exception<Error>(mod, "JacrankError", PyExc_ValueError);

  const std::uint64_t kTerms = 1'000'000'000;
  mod.def("jacobi", [](std::uint64_t m, std::uint64_t p, int h, std::vector<int> a, unsigned threads, std::uint64_t terms) {
    return jacobi_report(m, p, h, a, config(threads, terms)).dump();
  }, py::arg("m"), py::arg("p"), py::arg("h"), py::arg("a"), py::arg("threads") = 0, py::arg("max_terms") = kTerms);
  mod.def("stickelberger", [](std::uint64_t m, std::uint64_t p, std::vector<int> a) {
    return stickelberger_report(m, p, a).dump();
  });
  mod.def("criteria", [](std::uint64_t m, std::uint64_t p, std::vector<int> a) {
    return criteria_report(m, p, a).dump();
  });
  mod.def("lpoly", [](const std::string& c, std::optional<int> j, unsigned threads, std::uint64_t terms) {
    return lpoly_report(curve(c), j, config(threads, terms)).dump();
  }, py::arg("curve"), py::arg("j") = py::none(), py::arg("threads") = 0, py::arg("max_terms") = kTerms);
  mod.def("zeta", [](const std::string& c, unsigned threads, std::uint64_t terms) {
    return zeta_report(curve(c), config(threads, terms)).dump();
  }, py::arg("curve"), py::arg("threads") = 0, py::arg("max_terms") = kTerms);
  mod.def("prank", [](const std::string& c, const std::string& route, unsigned threads, std::uint64_t terms) {
    std::vector<Route> routes;
    if (route == "all") {
      routes = {Route::Criterion, Route::Oracle, Route::Cartier};
    } else if (auto r = route_from_string(route)) {
      routes = {*r};
    } else {
      fail(ErrorCode::Validation, "unknown route " + route);
    }
    return prank_report(curve(c), routes, config(threads, terms)).json.dump();
  }, py::arg("curve"), py::arg("route") = "all", py::arg("threads") = 0, py::arg("max_terms") = kTerms);
  mod.def("cartier", [](std::uint64_t p, std::vector<std::int64_t> f) { return cartier_report(p, f).dump(); });
  mod.def("deuring", [](std::uint64_t p) { return deuring_report(p).dump(); });
  mod.def("search", [](const std::string& tmpl, unsigned threads, std::uint64_t terms) {
    std::ostringstream out;
    search_branch(Json::parse(tmpl), out, config(threads, terms));
    return out.str();
  }, py::arg("template"), py::arg("threads") = 0, py::arg("max_terms") = kTerms);
}
