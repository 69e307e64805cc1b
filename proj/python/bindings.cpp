#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hmz/catalog.hpp"
#include "hmz/cli.hpp"
#include "hmz/digamma.hpp"
#include "hmz/errors.hpp"
#include "hmz/named_polys.hpp"
#include "hmz/registry.hpp"
#include "hmz/report.hpp"
#include "hmz/stieltjes.hpp"
#include "hmz/sturm.hpp"
#include "hmz/zeta.hpp"

namespace py = pybind11;
using namespace hmz;

namespace {

EvalResult eval_expr(const std::string& name, double x, const std::vector<double>& params) {
  const auto id = parse_expr(name);
  if (!id) throw LookupError("unknown expression '" + name + "'");
  return aux_eval(*id, x, params);
}

std::string certify_json(const std::string& poly, const std::string& a, const std::string& b,
                         int expected_sign) {
  CoeffEnclosure e;
  if (const auto id = parse_poly_id(poly)) {
    e = build_named_poly(*id);
  } else {
    e.poly = parse_poly(poly);
  }
  Certificate c = certify_sign(e, parse_rational(a), parse_rational(b), expected_sign);
  if (!parse_poly_id(poly)) c.poly_id = poly;
  return canonical_dump(to_json(c));
}

std::string suite_json(const std::vector<std::string>& ids, int grid_n, int threads) {
  SuiteOptions opts;
  opts.grid_n = grid_n;
  opts.threads = threads;
  return canonical_dump(to_json(run_suite(ids, opts).rows));
}

py::tuple run_cli_capture(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = run_cli(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Digamma, eta and zeta kernels with claim checks";

  py::register_exception<PoleError>(m, "PoleError", PyExc_ValueError);
  py::register_exception<HarmonicMeanPole>(m, "HarmonicMeanPole", PyExc_ValueError);
  py::register_exception<CertificationError>(m, "CertificationError", PyExc_RuntimeError);

  py::class_<EvalResult>(m, "EvalResult")
      .def_readonly("value", &EvalResult::value)
      .def_readonly("est_error", &EvalResult::est_error)
      .def("__float__", [](const EvalResult& r) { return r.value; })
      .def("__repr__", [](const EvalResult& r) {
        return "EvalResult(value=" + py::repr(py::float_(r.value)).cast<std::string>() +
               ", est_error=" + py::repr(py::float_(r.est_error)).cast<std::string>() + ")";
      });

  m.def("digamma", &digamma, py::arg("x"));
  m.def("trigamma", &trigamma, py::arg("x"));
  m.def("polygamma", &polygamma, py::arg("order"), py::arg("x"));
  m.def("digamma_zero", [] { return digamma_zero().x0; });
  m.def("harmonic_mean", &harmonic_mean, py::arg("a"), py::arg("b"));
  m.def("eta", &eta, py::arg("s"), py::arg("k") = 0);
  m.def("zeta", &zeta, py::arg("s"), py::arg("k") = 0);
  m.def("zeta_regular", &zeta_regular, py::arg("s"), py::arg("k") = 0);
  m.def("zeta_sandwich", [](int n, double x) {
    const Bracket b = zeta_sandwich(n, x);
    return py::make_tuple(b.lo, b.hi);
  }, py::arg("n"), py::arg("x"));
  m.def("stieltjes", &stieltjes, py::arg("n"));
  m.def("stieltjes_bound", &stieltjes_bound, py::arg("n"));
  m.def("lavrik_bound", &lavrik_bound, py::arg("k"));
  m.def("eval_expr", &eval_expr, py::arg("name"), py::arg("x"),
        py::arg("params") = std::vector<double>{});
  m.def("catalog", [] {
    py::list out;
    for (const auto& e : catalog()) {
      out.append(py::make_tuple(std::string(e.name), e.params, std::string(e.definition)));
    }
    return out;
  });
  m.def("count_roots", [](const std::string& poly, const std::string& a, const std::string& b) {
    return count_roots_in(parse_poly(poly), parse_rational(a), parse_rational(b));
  }, py::arg("poly"), py::arg("a"), py::arg("b"));
  m.def("_certify_json", &certify_json);
  m.def("_suite_json", &suite_json, py::call_guard<py::gil_scoped_release>());
  m.def("claim_ids", [] {
    std::vector<std::string> ids;
    for (const auto& c : registry()) ids.push_back(c.id);
    return ids;
  });
  m.def("run_cli", &run_cli_capture, py::arg("args"));
}
