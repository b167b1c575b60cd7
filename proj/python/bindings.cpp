#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "exrings/derivation.hpp"
#include "exrings/linear_space.hpp"
#include "exrings/subgroup.hpp"
#include "exrings/theorems.hpp"

namespace py = pybind11;
using namespace exrings;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object verify(const std::vector<std::string>& theorems, std::optional<std::string> ring, int degree,
                  std::uint64_t seed, int samples, int jobs) {
  const RunConfig cfg{degree, seed, samples};
  std::vector<Job> plan = plan_jobs(theorems, ring);
  std::vector<Verdict> verdicts;
  {
    py::gil_scoped_release release;
    verdicts = run_jobs(plan, cfg, jobs, false);
  }
  return to_python(report_json(verdicts, cfg));
}

py::object classify(const std::string& generators, const std::string& ring, int degree) {
  const RingContext ctx = RingContext::parse(ring);
  const AdditiveSubgroup l = AdditiveSubgroup::parse(ctx, generators);
  Json out;
  const LieIdealCheck check = check_lie_ideal(l, degree);
  out["is_lie_ideal"] = check.is_lie_ideal;
  if (!check.is_lie_ideal) {
    out["classification"] = "not a Lie ideal";
    if (check.witness) out["witness"] = {check.witness->first.to_string(), check.witness->second.to_string()};
  } else {
    out["classification"] = std::string(to_string(classify_lie_ideal(l, degree)));
  }
  out["c_span_dim"] = c_span(l).dimension();
  return to_python(out);
}

}  // namespace

PYBIND11_MODULE(exrings, m) {
  m.doc() = "Exact verification workbench for exceptional prime rings";

  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);

  m.def("list_theorems", [] { return to_python(registry_json()); }, "Registry of checkers with contexts and modes.");
  m.def("verify", &verify, py::arg("theorems") = std::vector<std::string>{"all"}, py::arg("ring") = py::none(),
        py::arg("degree") = 8, py::arg("seed") = 0, py::arg("samples") = 1000, py::arg("jobs") = 1,
        "Run checkers and return the JSON report as a dict.");
  m.def("classify", &classify, py::arg("generators"), py::arg("ring") = "m2-poly2", py::arg("degree") = 8,
        "Classify the subgroup given in generator-file format.");

  m.def("poly_gcd", [](const std::string& a, const std::string& b) {
    return Poly::gcd(Poly::parse(a), Poly::parse(b)).to_string();
  });
  m.def("commutator", [](const std::string& ring, const std::string& a, const std::string& b) {
    const RingContext ctx = RingContext::parse(ring);
    return commutator(Matrix::parse(ctx, a), Matrix::parse(ctx, b)).to_string();
  });
  m.def("in_commutator_space", [](const std::string& ring, const std::string& a) {
    return in_commutator_space(Matrix::parse(RingContext::parse(ring), a));
  });
  m.def("apply_derivation", [](const std::string& ring, const std::string& d, const std::string& x) {
    const RingContext ctx = RingContext::parse(ring);
    return apply_derivation(DerivationExpr::parse(ctx, d), Matrix::parse(ctx, x)).to_string();
  });
  m.def("is_x_inner", [](const std::string& ring, const std::string& d) {
    const RingContext ctx = RingContext::parse(ring);
    return is_x_inner(DerivationExpr::parse(ctx, d), ctx).inner;
  });
}
