#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gstark/cornacchia.hpp"
#include "gstark/lfunction.hpp"
#include "gstark/regulator.hpp"
#include "gstark/verify.hpp"

namespace py = pybind11;
using namespace gstark;

namespace {

Integer to_integer(const py::int_& x) { return Integer(py::str(x).cast<std::string>()); }

py::object from_integer(const Integer& x) { return py::module_::import("builtins").attr("int")(x.get_str()); }

py::object from_rational(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(to_string(q));
}

Rational to_rational(const py::object& x) {
  py::object f = py::module_::import("fractions").attr("Fraction")(x);
  return Rational(Integer(py::str(f.attr("numerator")).cast<std::string>()),
                  Integer(py::str(f.attr("denominator")).cast<std::string>()));
}

}  // namespace

PYBIND11_MODULE(_gstark, m) {
  m.doc() = "p-adic L-functions, Gross regulators and W algebras over Q";

  py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PrecisionError>(m, "PrecisionError");
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_ValueError);

  py::class_<PadicNumber>(m, "PadicNumber")
      .def_static("from_integer", [](long p, const py::int_& a, long n) { return PadicNumber::from_integer(p, to_integer(a), n); })
      .def_static("from_rational", [](long p, const py::object& q, long n) { return PadicNumber::from_rational(p, to_rational(q), n); })
      .def_property_readonly("prime", &PadicNumber::prime)
      .def_property_readonly("valuation", &PadicNumber::valuation)
      .def_property_readonly("precision", &PadicNumber::precision)
      .def("residue", [](const PadicNumber& x) { return from_integer(x.residue()); })
      .def("is_zero", &PadicNumber::is_zero)
      .def("inverse", &PadicNumber::inverse)
      .def("__add__", [](const PadicNumber& a, const PadicNumber& b) { return a + b; })
      .def("__sub__", [](const PadicNumber& a, const PadicNumber& b) { return a - b; })
      .def("__mul__", [](const PadicNumber& a, const PadicNumber& b) { return a * b; })
      .def("__truediv__", [](const PadicNumber& a, const PadicNumber& b) { return a / b; })
      .def("__neg__", [](const PadicNumber& a) { return -a; })
      .def("__pow__", [](const PadicNumber& a, long e) { return a.pow(e); })
      .def("__str__", &PadicNumber::to_string)
      .def("__repr__", [](const PadicNumber& a) { return "PadicNumber(" + a.to_string() + ")"; });

  m.def("discrepancy_valuation", &discrepancy_valuation);
  m.def("plog", &plog);
  m.def("pexp", &pexp);
  m.def("teichmuller", [](const py::int_& a, long p, long n) { return teichmuller(to_integer(a), p, n); });
  m.def("hensel_sqrt", [](const py::int_& a, long p, long n) { return hensel_sqrt(to_integer(a), p, n); });
  m.def("cornacchia", [](const py::int_& D, const py::int_& mm) -> py::object {
    auto r = cornacchia(to_integer(D), to_integer(mm));
    if (!r) return py::none();
    return py::make_tuple(from_integer(r->first), from_integer(r->second));
  });

  py::class_<DirichletCharacter>(m, "DirichletCharacter")
      .def_static("kronecker", &DirichletCharacter::kronecker)
      .def_static("teichmuller_power", &DirichletCharacter::teichmuller_power)
      .def("teichmuller_twist", &DirichletCharacter::teichmuller_twist)
      .def("primitive", &DirichletCharacter::primitive)
      .def("__mul__", &DirichletCharacter::operator*)
      .def("__eq__", &DirichletCharacter::operator==)
      .def_property_readonly("conductor", &DirichletCharacter::conductor)
      .def_property_readonly("modulus", &DirichletCharacter::modulus)
      .def_property_readonly("is_odd", &DirichletCharacter::is_odd)
      .def("value", [](const DirichletCharacter& c, const py::int_& a) { return c.value(to_integer(a)); })
      .def("__repr__", &DirichletCharacter::to_string);

  m.def("gen_bernoulli", [](long n, const DirichletCharacter& chi) { return from_rational(gen_bernoulli(n, chi)); });
  m.def("classical_L", [](const DirichletCharacter& chi, long n) { return from_rational(classical_L(chi, n)); });

  py::class_<LSeriesInstance>(m, "LSeriesInstance")
      .def_static("make", &LSeriesInstance::make, py::arg("chi"), py::arg("p"), py::arg("precision") = 12)
      .def_property_readonly("r", &LSeriesInstance::r)
      .def("L_p", [](const LSeriesInstance& inst, long s) { return kubota_leopoldt(inst, s); })
      .def("derivative_at_zero", [](const LSeriesInstance& inst) { return kubota_leopoldt_derivative(inst); })
      .def("analytic_invariant", [](const LSeriesInstance& inst) { return analytic_invariant(inst).analytic_invariant; });

  py::class_<PUnitCertificate>(m, "PUnitCertificate")
      .def_readonly("d", &PUnitCertificate::d)
      .def_readonly("p", &PUnitCertificate::p)
      .def_readonly("h", &PUnitCertificate::h)
      .def_property_readonly("x", [](const PUnitCertificate& c) { return from_integer(c.x); })
      .def_property_readonly("y", [](const PUnitCertificate& c) { return from_integer(c.y); })
      .def_readonly("o", &PUnitCertificate::o)
      .def_readonly("ell", &PUnitCertificate::ell)
      .def("to_json", &PUnitCertificate::to_json);
  m.def("find_p_unit", &find_p_unit, py::arg("d"), py::arg("p"), py::arg("precision") = 12, py::arg("h_max") = 24);
  m.def("swap_root", &swap_root);
  m.def("gross_regulator_rank1", &gross_regulator_rank1);

  m.def(
      "w_algebra_basis",
      [](int kase, long r, long r_an, const py::object& L, const py::object& W, long s, long t) {
        WParams<Rational> P;
        P.kase = kase;
        P.r = r;
        P.r_an = r_an;
        P.s = s;
        P.t = t;
        P.L = to_rational(L);
        P.W = to_rational(W);
        P.one = 1;
        WAlgebra<Rational> alg(P);
        return alg.basis_labels();
      },
      py::arg("kase"), py::arg("r"), py::arg("r_an") = 0, py::arg("L") = 1, py::arg("W") = 1, py::arg("s") = 0,
      py::arg("t") = 0);

  m.def(
      "run_verify",
      [](const std::string& command, long p, std::vector<long> discs, long precision, long qexp_terms,
         long lambda_trunc, long trials) {
        RunConfig c;
        c.command = command;
        c.p = p;
        c.discs = std::move(discs);
        c.precision = precision;
        c.qexp_terms = qexp_terms;
        c.lambda_trunc = lambda_trunc;
        c.trials = trials;
        BernoulliCache cache;
        auto report = run(c, cache);
        return py::make_tuple(exit_code(report), report.to_json(false));
      },
      py::arg("command"), py::arg("p") = 5, py::arg("discs") = std::vector<long>{}, py::arg("precision") = 12,
      py::arg("qexp_terms") = 200, py::arg("lambda_trunc") = 16, py::arg("trials") = 100);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.attr("__version__") = kToolkitVersion;
}
