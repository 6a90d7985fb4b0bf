#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "qfib/errors.hpp"
#include "qfib/families.hpp"
#include "qfib/morse.hpp"
#include "qfib/operators.hpp"
#include "qfib/qcombinat.hpp"
#include "qfib/qseries.hpp"
#include "qfib/verify.hpp"

namespace py = pybind11;
using namespace qfib;

namespace {

// Big integers cross the boundary as decimal text.
py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.str())); }
BigInt from_py(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

BigRational rational_from_py(const py::handle& v) {
  if (py::isinstance<py::int_>(v)) return BigRational(from_py(v.cast<py::int_>()));
  // fractions.Fraction or anything with numerator/denominator
  return BigRational(from_py(v.attr("numerator").cast<py::int_>()), from_py(v.attr("denominator").cast<py::int_>()));
}

py::object rational_to_py(const BigRational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(numerator(r)), to_py(denominator(r)));
}

XsPoly poly_from_terms(const py::iterable& terms) {
  XsPoly out;
  for (const auto& item : terms) {
    const auto t = item.cast<py::tuple>();
    std::vector<std::pair<int, BigInt>> coeffs;
    for (const auto& c : t[2].cast<py::iterable>()) {
      const auto pair = c.cast<py::tuple>();
      coeffs.emplace_back(pair[0].cast<int>(), from_py(pair[1].cast<py::int_>()));
    }
    out += XsPoly::monomial(QLaurent::from_terms(coeffs), t[0].cast<int>(), t[1].cast<int>());
  }
  return out;
}

py::list poly_terms(const XsPoly& p) {
  py::list out;
  for (const auto& [m, c] : p.terms()) {
    py::list coeffs;
    for (const auto& [e, v] : c.terms()) coeffs.append(py::make_tuple(e, to_py(v)));
    out.append(py::make_tuple(m.x, m.s, coeffs));
  }
  return out;
}

XsPoly as_poly(const py::object& v) {
  if (py::isinstance<XsPoly>(v)) return v.cast<XsPoly>();
  return XsPoly(QLaurent(from_py(v.cast<py::int_>())));
}

py::dict report_to_py(const VerifyReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["equation"] = r.equation;
  d["range"] = r.range;
  d["pass"] = r.pass;
  if (r.counterexample) {
    py::dict indices;
    for (const auto& [name, value] : r.counterexample->indices) indices[py::str(name)] = value;
    py::dict c;
    c["indices"] = indices;
    c["part"] = r.counterexample->part;
    c["lhs"] = r.counterexample->lhs;
    c["rhs"] = r.counterexample->rhs;
    d["counterexample"] = c;
  } else {
    d["counterexample"] = py::none();
  }
  d["elapsed_ms"] = r.elapsed_ms;
  return d;
}

OracleKind parse_oracle(const std::string& kind) {
  if (kind == "count") return OracleKind::count;
  if (kind == "w") return OracleKind::w_sum;
  if (kind == "v") return OracleKind::v_sum;
  if (kind == "W") return OracleKind::W_sum;
  if (kind == "periodic_count") return OracleKind::periodic_count;
  if (kind == "periodic") return OracleKind::periodic_w;
  throw py::value_error("unknown oracle kind '" + kind + "'");
}

MomentFamily parse_moment(const std::string& name) {
  if (name == "f") return MomentFamily::f_xs;
  if (name == "l") return MomentFamily::l_xs;
  if (name == "fib") return MomentFamily::fib;
  if (name == "luc") return MomentFamily::luc;
  if (name == "f_carlitz") return MomentFamily::f_carlitz;
  throw py::value_error("unknown moment family '" + name + "'");
}

Var parse_var(const std::string& v) {
  if (v == "x") return Var::x;
  if (v == "s") return Var::s;
  throw py::value_error("variable must be 'x' or 's'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact q-Fibonacci and q-Lucas polynomial toolkit";

  py::class_<XsPoly>(m, "Poly")
      .def(py::init<>())
      .def(py::init([](const py::int_& c) { return XsPoly(QLaurent(from_py(c))); }))
      .def_static("x", &XsPoly::x, py::arg("power") = 1)
      .def_static("s", &XsPoly::s, py::arg("power") = 1)
      .def_static("q", &XsPoly::q, py::arg("power") = 1)
      .def_static("from_terms", &poly_from_terms, "Build from [(deg_x, deg_s, [(q_exponent, coeff), ...]), ...]")
      .def("terms", &poly_terms)
      .def("is_zero", &XsPoly::is_zero)
      .def("deg_x", &XsPoly::deg_x)
      .def("deg_s", &XsPoly::deg_s)
      .def("subst", [](const XsPoly& p, const std::string& var, int j) { return subst_scale(p, parse_var(var), j); },
           py::arg("var"), py::arg("power"), "Replace var by q^power * var")
      .def("at_q_one", &at_q_one)
      .def("eval",
           [](const XsPoly& p, const py::object& qv, const py::object& xv, const py::object& sv) {
             return rational_to_py(eval_point(p, rational_from_py(qv), rational_from_py(xv), rational_from_py(sv)));
           },
           py::arg("q"), py::arg("x"), py::arg("s"))
      .def("__str__", [](const XsPoly& p) { return render(p); })
      .def("__repr__", [](const XsPoly& p) { return "Poly('" + render(p) + "')"; })
      .def("__eq__", [](const XsPoly& a, const py::object& b) { return a == as_poly(b); })
      .def("__ne__", [](const XsPoly& a, const py::object& b) { return !(a == as_poly(b)); })
      .def("__add__", [](const XsPoly& a, const py::object& b) { return a + as_poly(b); })
      .def("__radd__", [](const XsPoly& a, const py::object& b) { return as_poly(b) + a; })
      .def("__sub__", [](const XsPoly& a, const py::object& b) { return a - as_poly(b); })
      .def("__rsub__", [](const XsPoly& a, const py::object& b) { return as_poly(b) - a; })
      .def("__mul__", [](const XsPoly& a, const py::object& b) { return a * as_poly(b); })
      .def("__rmul__", [](const XsPoly& a, const py::object& b) { return as_poly(b) * a; })
      .def("__pow__",
           [](const XsPoly& a, int k) {
             if (k < 0) throw py::value_error("negative power");
             XsPoly r(1);
             for (int i = 0; i < k; ++i) r *= a;
             return r;
           })
      .def(-py::self)
      .def("__hash__", [](const XsPoly& p) { return py::hash(py::str(render(p))); });

  m.def("render", [](const XsPoly& p) { return render(p); });
  m.def("families", [] {
    std::vector<std::string> out;
    for (FamilyId id : all_families()) out.emplace_back(to_string(id));
    return out;
  });
  m.def(
      "family",
      [](const std::string& id, int n, const std::string& mode) {
        if (mode != "closed" && mode != "recursive") throw py::value_error("mode must be 'closed' or 'recursive'");
        return family(id, n, mode == "closed" ? Mode::closed : Mode::recursive);
      },
      py::arg("id"), py::arg("n"), py::arg("mode") = "closed");
  m.def("q_binomial", [](int n, int k) { return XsPoly(q_binomial(n, k)); });
  m.def("q_catalan", [](int n) { return XsPoly(q_catalan(n)); });
  m.def("fib_pentagonal", [](int n) { return XsPoly(fib_pentagonal(n)); });
  m.def("oracle", [](const std::string& kind, int n) { return oracle(parse_oracle(kind), n); }, py::arg("kind"),
        py::arg("n"));
  m.def("enumerate_morse", [](int n) {
    std::vector<std::string> out;
    for (const auto& c : enumerate(n)) out.push_back(c.to_string());
    return out;
  });
  m.def("moment", [](const std::string& basis, int n) { return moment(parse_moment(basis), n); }, py::arg("family"),
        py::arg("n"));
  m.def(
      "gf", [](const std::string& id, int order) { return gf(parse_gf_id(id), order).coeffs(); }, py::arg("id"),
      py::arg("order"));
  m.def("identities", [] {
    std::vector<std::string> out;
    for (const auto& id : registry()) out.push_back(id.name);
    return out;
  });
  m.def(
      "run_identity",
      [](const std::string& name, int nmax, std::optional<int> mmax) {
        VerifyReport r;
        {
          py::gil_scoped_release unlocked;
          r = run_identity(name, nmax, mmax);
        }
        return report_to_py(r);
      },
      py::arg("name"), py::arg("nmax"), py::arg("mmax") = py::none());
  m.def(
      "run_all",
      [](int nmax, std::optional<int> mmax, unsigned threads) {
        std::vector<VerifyReport> reports;
        {
          py::gil_scoped_release unlocked;
          reports = run_all(nmax, mmax, threads);
        }
        py::list out;
        for (const auto& r : reports) out.append(report_to_py(r));
        return out;
      },
      py::arg("nmax"), py::arg("mmax") = py::none(), py::arg("threads") = 0);

  py::register_exception<UnknownFamily>(m, "UnknownFamily", PyExc_KeyError);
  py::register_exception<UnknownIdentity>(m, "UnknownIdentity", PyExc_KeyError);
  py::register_exception<NotDivisible>(m, "NotDivisible", PyExc_ArithmeticError);
  py::register_exception<ZeroBase>(m, "ZeroBase", PyExc_ZeroDivisionError);
  py::register_exception<NonUnitConstant>(m, "NonUnitConstant", PyExc_ArithmeticError);
}
