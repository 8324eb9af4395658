// Python bindings for the main operations.  Structured values cross the
// boundary as JSON strings in the library's canonical schemas.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "msuper/json_io.hpp"
#include "msuper/verify.hpp"

namespace py = pybind11;
using namespace msuper;

namespace {

ModuleLabel make_label(int n, int type, const std::vector<int>& members) {
  uint64_t mask = 0;
  for (int i : members) {
    if (i < 1 || i > n) throw std::invalid_argument("label entry out of range");
    mask |= uint64_t(1) << (i - 1);
  }
  return type == 0 ? ModuleLabel::type0_label(n, mask) : ModuleLabel::type1_label(n, mask);
}

}  // namespace

PYBIND11_MODULE(_msuper, mod) {
  mod.doc() = "Exact nonsymmetric Macdonald superpolynomials";

  py::class_<RatQT>(mod, "Rat")
      .def(py::init([](const std::string& s) { return parse_rat(s); }))
      .def("__str__", [](const RatQT& f) { return render(f); })
      .def("__repr__", [](const RatQT& f) { return "Rat(\"" + render(f) + "\")"; })
      .def("__eq__", [](const RatQT& a, const RatQT& b) { return a == b; })
      .def("__add__", [](const RatQT& a, const RatQT& b) { return a + b; })
      .def("__sub__", [](const RatQT& a, const RatQT& b) { return a - b; })
      .def("__mul__", [](const RatQT& a, const RatQT& b) { return a * b; })
      .def("__truediv__", [](const RatQT& a, const RatQT& b) { return a / b; })
      .def("__neg__", [](const RatQT& a) { return -a; })
      .def("specialize", [](const RatQT& a, int e) { return render(specialize_q(a, e)); },
           py::arg("e"), "substitute q = t^e and render the result");

  mod.def("content_vector",
          [](int n, int type, const std::vector<int>& label) {
            return content_vector(make_label(n, type, label));
          },
          py::arg("N"), py::arg("type"), py::arg("label"));

  mod.def("tau",
          [](int n, int type, const std::vector<int>& label) {
            return to_json(tau_general(make_label(n, type, label)));
          },
          py::arg("N"), py::arg("type"), py::arg("label"),
          "tau basis vector as FermionPoly JSON");

  mod.def("build",
          [](int n, int type, const std::vector<int>& label, const Composition& alpha) {
            return to_json(build_M(alpha, make_label(n, type, label)));
          },
          py::arg("N"), py::arg("type"), py::arg("label"), py::arg("alpha"),
          "M_{alpha,E} as SuperPoly JSON");

  mod.def("spectral_vector",
          [](int n, int type, const std::vector<int>& label, const Composition& alpha) {
            std::vector<std::pair<int, int>> out;
            for (const SpectralEntry& z : spectral_vector(alpha, make_label(n, type, label)))
              out.push_back({z.qexp, z.texp});
            return out;
          },
          py::arg("N"), py::arg("type"), py::arg("label"), py::arg("alpha"),
          "list of (q-exponent, t-exponent) pairs");

  mod.def("eval_closed",
          [](int n, int type, const std::vector<int>& label, const Composition& alpha) {
            const ModuleLabel l = make_label(n, type, label);
            return render(type == 0 ? V0(alpha, l) : V1(alpha, l));
          },
          py::arg("N"), py::arg("type"), py::arg("label"), py::arg("alpha"),
          "closed special value V(alpha) in canonical text form");

  mod.def("eval_check",
          [](int n, int type, const std::vector<int>& label, const Composition& alpha) {
            const ModuleLabel l = make_label(n, type, label);
            const RatQT v = type == 0 ? V0(alpha, l) : V1(alpha, l);
            const PointSpec pt = type == 0 ? PointSpec::x0(n) : PointSpec::x1(n);
            const SuperPoly direct = substitute_x(build_M(alpha, l), pt);
            return direct == SuperPoly::lift(tau_general(l).scaled(v));
          },
          py::arg("N"), py::arg("type"), py::arg("label"), py::arg("alpha"),
          "direct substitution equals the closed form");

  mod.def("singular_probe",
          [](int n, int type, const std::vector<int>& label, const Composition& alpha, int e) {
            const SingularProbe p = singular_probe(alpha, make_label(n, type, label), e);
            py::dict out;
            out["specialized_texp"] = p.specialized_texp;
            out["content_condition"] = p.content_condition;
            out["pole"] = p.pole;
            out["eigen_confirmed"] = p.eigen_confirmed;
            return out;
          },
          py::arg("N"), py::arg("type"), py::arg("label"), py::arg("alpha"), py::arg("e"));

  mod.def("verify",
          [](const std::string& suite, int n_max, int deg_max, uint64_t seed) {
            py::list out;
            for (const VerifyReport& r : run_suites(suite, VerifyOptions{n_max, deg_max, seed})) {
              py::dict d;
              d["suite"] = r.suite;
              d["cases"] = r.cases;
              d["failures"] = r.failures;
              d["seconds"] = r.seconds;
              out.append(d);
            }
            return out;
          },
          py::arg("suite"), py::arg("n_max") = 4, py::arg("deg_max") = 2, py::arg("seed") = 1);
}
