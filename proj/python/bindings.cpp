// Thin bindings: structured results cross the boundary as JSON text and are
// decoded on the Python side, so big integers and rationals stay exact.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coxforge/cli.hpp"
#include "coxforge/realize.hpp"

namespace py = pybind11;
using namespace coxforge;

namespace {

IntPolynomial poly_from(const std::vector<std::string>& coeffs) {
  std::vector<Integer> c;
  for (const auto& s : coeffs) c.emplace_back(s);
  return IntPolynomial(c);
}

std::vector<std::string> poly_to(const IntPolynomial& p) {
  std::vector<std::string> out;
  for (const auto& j : json::polynomial(p)) out.push_back(j.get<std::string>());
  return out;
}

// Library errors surface as ValueError carrying the error kind.
template <class F>
auto guarded(F f) {
  try {
    return f();
  } catch (const Error& e) {
    throw py::value_error(e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.def("commands", &cli::commands);

  m.def(
      "run",
      [](const std::string& command, int n, const std::string& tau, const std::string& eps, int max_len, int max_iter,
         std::uint64_t seed, int n_min, int n_max, std::optional<std::string> poly, bool certify) {
        cli::RunConfig cfg;
        cfg.command = command;
        cfg.n = n;
        cfg.tau = tau;
        cfg.eps = guarded([&] { return parse_rational(eps); });
        cfg.max_len = max_len;
        cfg.max_iter = max_iter;
        cfg.seed = seed;
        cfg.n_min = n_min;
        cfg.n_max = n_max;
        cfg.poly = std::move(poly);
        cfg.certify = certify;
        cfg.output = "json";
        py::gil_scoped_release release;
        cli::RunReport r = cli::run(cfg);
        return std::make_pair(r.exit_code, json::dump(r.data));
      },
      py::arg("command"), py::arg("n") = 5, py::arg("tau") = "id", py::arg("eps") = "1e-12", py::arg("max_len") = 6,
      py::arg("max_iter") = kDefaultMaxIter, py::arg("seed") = 2022, py::arg("n_min") = 4, py::arg("n_max") = 7,
      py::arg("poly") = std::nullopt, py::arg("certify") = false);

  m.def(
      "is_salem",
      [](const std::vector<std::string>& coeffs, const std::string& eps) {
        return guarded([&] { return json::dump(json::salem_verdict(is_salem(poly_from(coeffs), parse_rational(eps)))); });
      },
      py::arg("coeffs"), py::arg("eps") = "1e-12");

  m.def("word_matrix", [](const std::vector<int>& letters, int n) {
    return guarded([&] { return json::dump(json::lattice(word_element(letters, n))); });
  });
  m.def("word_char_poly", [](const std::vector<int>& letters, int n) {
    return guarded([&] { return poly_to(char_poly(word_element(letters, n))); });
  });
  m.def("strip_cyclotomic", [](const std::vector<std::string>& coeffs) {
    return guarded([&] { return poly_to(strip_cyclotomic(poly_from(coeffs))); });
  });
  m.def("chi", [](int n) { return guarded([&] { return poly_to(polys::chi(n)); }); });
}
