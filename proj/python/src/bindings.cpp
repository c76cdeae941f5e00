#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hvff/fusion.hpp"
#include "hvff/qseries.hpp"
#include "hvff/suites.hpp"
#include "hvff/tensor.hpp"
#include "hvff/verma.hpp"
#include "hvff/w22.hpp"

namespace py = pybind11;
using namespace hvff;

namespace {

std::vector<std::string> coeff_strings(const QSeries& q) {
  std::vector<std::string> out;
  for (const auto& c : q.coeffs()) out.push_back(c.to_string());
  return out;
}

HighestWeight hvir_weight(const Scalar& c_L, const Scalar& c_LI, const Scalar& h, const Scalar& h_I) {
  return HighestWeight::hvir(c_L, c_LI, h, h_I);
}

}  // namespace

PYBIND11_MODULE(_hvff, m) {
  m.doc() = "Exact computations for the twisted Heisenberg-Virasoro algebra at level zero";

  py::register_exception<PreconditionViolated>(m, "PreconditionViolated", PyExc_ValueError);
  py::register_exception<UnknownCommand>(m, "UnknownCommand", PyExc_ValueError);
  py::register_exception<AlgebraMismatch>(m, "AlgebraMismatch", PyExc_TypeError);

  py::class_<Scalar>(m, "Scalar")
      .def(py::init([](const std::string& s) { return parse_scalar(s); }))
      .def(py::init([](long v) { return Scalar(v); }))
      .def("is_zero", &Scalar::is_zero)
      .def("is_numeric", &Scalar::is_numeric)
      .def("__str__", &Scalar::to_string)
      .def("__repr__", [](const Scalar& s) { return "Scalar('" + s.to_string() + "')"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def("__eq__", [](const Scalar& a, const Scalar& b) { return a == b; });
  py::implicitly_convertible<std::string, Scalar>();
  py::implicitly_convertible<py::int_, Scalar>();

  m.def("delta", &delta, py::arg("r"), py::arg("s"), py::arg("lam"), py::arg("mu"));

  m.def(
      "schur_singular",
      [](int p, const Scalar& c_L, const Scalar& c_LI, const Scalar& h) {
        return schur_singular(hvir_weight(c_L, c_LI, h, Scalar(p + 1) * c_LI), p).to_string();
      },
      py::arg("p"), py::arg("c_L") = Scalar::param(Param::c_L), py::arg("c_LI") = Scalar::param(Param::c_LI),
      py::arg("h") = Scalar::param(Param::h));
  m.def(
      "lambda_neg",
      [](int p, const Scalar& c_L, const Scalar& c_LI, const Scalar& h) {
        return lambda_neg(hvir_weight(c_L, c_LI, h, Scalar(1 - p) * c_LI), p).to_string();
      },
      py::arg("p"), py::arg("c_L") = Scalar::param(Param::c_L), py::arg("c_LI") = Scalar::param(Param::c_LI),
      py::arg("h") = Scalar::param(Param::h));
  m.def(
      "w22_singular",
      [](int p, const Scalar& c_L, const Scalar& h, const Scalar& c_LI) {
        return w22_singular(p, c_L, h, c_LI).to_string();
      },
      py::arg("p"), py::arg("c_L") = Scalar::param(Param::c_L), py::arg("h") = Scalar::param(Param::h),
      py::arg("c_LI") = Scalar::param(Param::c_LI));

  m.def("phi_omega", &phi_omega, py::arg("p"), py::arg("F"), py::arg("c_LI"));
  m.def("phi_omega_closed", &phi_omega_closed, py::arg("p"), py::arg("F"), py::arg("c_LI"));

  m.def(
      "fusion_dim",
      [](const Scalar& h, const Scalar& h_I, const Scalar& hp, const Scalar& hp_I, const Scalar& c_L,
         const Scalar& c_LI) {
        const auto a = fusion_dim({h, h_I, hp, hp_I, c_L, c_LI});
        py::dict d;
        d["case"] = to_string(a.kind);
        d["d"] = a.d;
        d["h_out"] = a.h_out ? py::object(py::str(a.h_out->to_string())) : py::none();
        d["h_I_out"] = a.h_I_out ? py::object(py::str(a.h_I_out->to_string())) : py::none();
        return d;
      },
      py::arg("h"), py::arg("h_I"), py::arg("hp"), py::arg("hp_I"), py::arg("c_L"), py::arg("c_LI"));
  m.def(
      "uniqueness_weight",
      [](const Scalar& h, const Scalar& h_I, const Scalar& hp, const Scalar& hp_I, const Scalar& c_L,
         const Scalar& c_LI) { return uniqueness_weight({h, h_I, hp, hp_I, c_L, c_LI}); },
      py::arg("h"), py::arg("h_I"), py::arg("hp"), py::arg("hp_I"), py::arg("c_L"), py::arg("c_LI"));

  m.def("verma_char", [](int order) { return coeff_strings(verma_char(order)); }, py::arg("order"));
  m.def("irr_char", [](int p, int order) { return coeff_strings(irr_char(p, order)); }, py::arg("p"),
        py::arg("order"));
  m.def("decomp_check", &decomp_check, py::arg("p"), py::arg("order"));

  m.def(
      "run_suite_json",
      [](const std::string& command, std::optional<int> p, std::optional<int> q, std::optional<int> N,
         std::map<std::string, std::string> bindings, bool numeric, std::uint64_t seed, std::pair<long, long> p_range,
         std::pair<long, long> q_range) {
        RunConfig cfg;
        cfg.command = command;
        cfg.p = p;
        cfg.q = q;
        cfg.N = N;
        cfg.bindings = std::move(bindings);
        cfg.numeric = numeric;
        cfg.seed = seed;
        cfg.p_range = p_range;
        cfg.q_range = q_range;
        py::gil_scoped_release release;
        return run_suite(cfg).to_json();
      },
      py::arg("command"), py::arg("p") = py::none(), py::arg("q") = py::none(), py::arg("N") = py::none(),
      py::arg("bindings") = std::map<std::string, std::string>{}, py::arg("numeric") = false, py::arg("seed") = 1,
      py::arg("p_range") = std::make_pair(-3L, 3L), py::arg("q_range") = std::make_pair(-3L, 3L));
  m.def("suite_names", &suite_names);
}
