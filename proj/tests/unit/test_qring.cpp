#include <doctest.h>

#include "../support.hpp"
#include "qfib/errors.hpp"
#include "qfib/families.hpp"
#include "qfib/mat2.hpp"
#include "qfib/qcombinat.hpp"
#include "qfib/xspoly.hpp"

using namespace qfib;
using qfib::testing::ql;
using qfib::testing::term;

namespace {
const XsPoly x = XsPoly::x();
const XsPoly s = XsPoly::s();
}  // namespace

TEST_CASE("laurent canonical form") {
  CHECK(QLaurent().is_zero());
  CHECK(QLaurent(0).is_zero());
  CHECK(QLaurent::from_terms({{3, 2}, {3, -2}}).is_zero());
  CHECK(QLaurent::from_terms({{3, 2}, {3, -2}}) == QLaurent());
  const QLaurent a = QLaurent::from_terms({{-2, 1}, {0, 0}, {5, 7}});
  CHECK(a.low_exponent() == -2);
  CHECK(a.high_exponent() == 5);
  CHECK(a.term_count() == 2);
  CHECK(a.coeff(0) == 0);
  CHECK(a.coeff(5) == 7);
  CHECK((a - a).is_zero());
  CHECK(QLaurent(5).is_constant());
  CHECK(!QLaurent::q_power(-1).is_polynomial());
}

TEST_CASE("laurent render") {
  CHECK(render(QLaurent()) == "0");
  CHECK(render(QLaurent(1)) == "1");
  CHECK(render(QLaurent(-3)) == "-3");
  CHECK(render(QLaurent::q_power(1)) == "q");
  CHECK(render(QLaurent::q_power(-2)) == "q^-2");
  CHECK(render(QLaurent::monomial(2, 2)) == "2*q^2");
  CHECK(render(ql({1, 1})) == "1 + q");
  CHECK(render(ql({1, -1})) == "1 - q");
  CHECK(render(-QLaurent::q_power(1)) == "-q");
}

TEST_CASE("big coefficients stay exact") {
  QLaurent p(1);
  for (int i = 0; i < 200; ++i) p *= ql({1, 1});
  CHECK(p.coeff(100) == binomial(200, 100));
  CHECK(p.at_one() == BigInt(1) << 200);
}

TEST_CASE("poly_op examples") {
  const XsPoly p = x * x + term(ql({1, 1}), 1, 1);
  CHECK(poly_op(p, 0, PolyOp::add) == p);
  CHECK(poly_op(x, x, PolyOp::mul) == XsPoly::x(2));
  const XsPoly prod = poly_op(x + s, x - s, PolyOp::mul);
  CHECK(prod == XsPoly::x(2) - XsPoly::s(2));
  CHECK(eval_point(prod, 2, 3, 5) == BigRational(8 * -2));
  CHECK(eval_point(prod, 2, 3, 5) == BigRational(9 - 25));
  CHECK(poly_op(p, p, PolyOp::sub).is_zero());
}

TEST_CASE("subst_scale examples") {
  CHECK(subst_scale(XsPoly::x(2), Var::x, 1) == term(QLaurent::q_power(2), 2, 0));
  CHECK(subst_scale(term(QLaurent::q_power(1), 0, 1), Var::s, -1) == s);
  const XsPoly f2 = family(FamilyId::f_carlitz, 2);
  const XsPoly shifted = subst_scale(f2, Var::s, 1);
  CHECK(shifted == XsPoly::x(2) + term(QLaurent::q_power(2), 0, 1));
  // f_3 = x f_2(x, qs) + q s f_1(x, q^2 s)
  CHECK(family(FamilyId::f_carlitz, 3) ==
        x * shifted + XsPoly::q() * s * subst_scale(family(FamilyId::f_carlitz, 1), Var::s, 2));
}

TEST_CASE("compose examples") {
  CHECK(compose(XsPoly::x(2) + s, x, s) == XsPoly::x(2) + s);
  const XsPoly f3 = compose(family(FamilyId::F_xs, 3), x + s, -(x * s));
  CHECK(f3 == XsPoly::x(2) + x * s + XsPoly::s(2));
  CHECK(compose(family(FamilyId::L_xs, 2), x + s, -(x * s)) == XsPoly::x(2) + XsPoly::s(2));
}

TEST_CASE("exact_div examples") {
  CHECK(exact_div(ql({1, 1}) * ql({1, 0, 1}), ql({1, 1})) == ql({1, 0, 1}));
  CHECK(exact_div(q_int(3) * q_int(4), q_int(3)) == ql({1, 1, 1, 1}));
  CHECK_THROWS_AS(exact_div(ql({1, 1}), ql({1, 0, 1})), NotDivisible);
  CHECK_THROWS_AS(exact_div(QLaurent(3), QLaurent(2)), NotDivisible);
  CHECK_THROWS(exact_div(QLaurent(1), QLaurent()));
  CHECK(exact_div(ql({2, 2}, -3), ql({1, 1}, 1)) == QLaurent::monomial(2, -4));
}

TEST_CASE("mat2 examples") {
  const Mat2 u = Mat2::fibonacci(x, s);
  CHECK(u.det() == -s);
  CHECK(power(u, 2).trace() == XsPoly::x(2) + XsPoly(2) * s);
  CHECK(power(u, 2).trace() == family(FamilyId::L_xs, 2));
  const Mat2 m2 = Mat2::fibonacci(x, XsPoly::q() * s) * u;
  CHECK(m2.det() == term(QLaurent::q_power(1), 0, 2));
  // the left side of the q-Cassini identity at n = 2
  auto F = [](int n) { return family(FamilyId::F_carlitz, n); };
  auto Fq = [&](int n) { return subst_scale(F(n), Var::s, 1); };
  CHECK(F(2) * Fq(2) - Fq(1) * F(3) == -(XsPoly::q() * s));
  CHECK(power(u, 0) == Mat2::identity());
}

TEST_CASE("render grammar") {
  CHECK(render(XsPoly()) == "0");
  CHECK(render(family(FamilyId::Fib, 5)) == "x^4 + (q + q^2 + q^3)*s*x^2 + q^3*s^2");
  CHECK(render(family(FamilyId::Luc, 4)) == "x^4 + (1 + q + q^2 + q^3)*s*x^2 + (q + q^3)*s^2");
  CHECK(render(x) == "x");
  CHECK(render(-x) == "-x");
  CHECK(render(XsPoly(1) - x) == "-x + 1");
  CHECK(render(term(QLaurent(2), 1, 1)) == "2*s*x");
  CHECK(render(term(-QLaurent::q_power(3), 0, 2) + XsPoly::x(3)) == "x^3 - q^3*s^2");
  CHECK(render(term(ql({1, -1}), 0, 1)) == "(1 - q)*s");
  CHECK(render(XsPoly(ql({2, 1}))) == "(2 + q)");
}

TEST_CASE("eval_point examples") {
  CHECK(eval_point(family(FamilyId::f_carlitz, 2), 2, 1, 1) == 3);
  for (int qv : {-3, 1, 2, 7}) {
    CHECK(eval_point(family(FamilyId::F_xs, 7), qv, 1, 1) == 13);
    CHECK(eval_point(family(FamilyId::F_xs, 6), qv, 1, -1) == 0);
  }
  CHECK(eval_point(XsPoly::q(-1), BigRational(1, 2), 0, 0) == 2);
  CHECK_THROWS_AS(eval_point(XsPoly::q(-1), 0, 1, 1), ZeroBase);
  CHECK(eval_point(XsPoly::q(2) + x, 0, 5, 1) == 5);
}

TEST_CASE("degree accessors") {
  const XsPoly p = term(ql({1, 2}), 3, 1) + term(1, 0, 4);
  CHECK(p.deg_x() == 3);
  CHECK(p.deg_s() == 4);
  CHECK(XsPoly().deg_x() == -1);
  CHECK(p.is_q_polynomial());
  CHECK(!(p * XsPoly::q(-1)).is_q_polynomial());
  CHECK(at_q_one(term(ql({1, 2}), 3, 1)) == term(3, 3, 1));
  CHECK(specialize_xs(p, QLaurent(2), QLaurent::q_power(1)) == ql({8, 16}, 1) + QLaurent::q_power(4));
}

TEST_CASE("property: canonical closure and ring laws") {
  testing::PolyGen gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const XsPoly a = gen.poly(), b = gen.poly(), c = gen.poly();
    for (const XsPoly& r : {a + b, a - b, a * b, -a, a - a, subst_scale(a, Var::s, gen.range(-3, 3))}) {
      CHECK(testing::canonical(r));
    }
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("property: substitutions are ring homomorphisms") {
  testing::PolyGen gen(11);
  for (int trial = 0; trial < 150; ++trial) {
    const XsPoly p = gen.poly(), r = gen.poly();
    const int j = gen.range(-3, 3);
    for (Var v : {Var::x, Var::s}) {
      CHECK(subst_scale(p * r, v, j) == subst_scale(p, v, j) * subst_scale(r, v, j));
      CHECK(subst_scale(p + r, v, j) == subst_scale(p, v, j) + subst_scale(r, v, j));
      CHECK(subst_scale(subst_scale(p, v, j), v, -j) == p);
    }
    const XsPoly a = gen.poly(2, 2), b = gen.poly(2, 2);
    CHECK(compose(p * r, a, b) == compose(p, a, b) * compose(r, a, b));
    CHECK(compose(p + r, a, b) == compose(p, a, b) + compose(r, a, b));

    const BigRational qv(gen.range(1, 4) * (gen.range(0, 1) ? 1 : -1), gen.range(1, 3));
    const BigRational xv(gen.range(-4, 4)), sv(gen.range(-4, 4), gen.range(1, 2));
    CHECK(eval_point(p * r, qv, xv, sv) == eval_point(p, qv, xv, sv) * eval_point(r, qv, xv, sv));
    CHECK(eval_point(p + r, qv, xv, sv) == eval_point(p, qv, xv, sv) + eval_point(r, qv, xv, sv));
  }
}

TEST_CASE("property: exact_div round trip") {
  testing::PolyGen gen(3);
  for (int trial = 0; trial < 300; ++trial) {
    const QLaurent a = gen.laurent(4), b = gen.nonzero_laurent();
    CHECK(exact_div(a * b, b) == a);
    try {
      const QLaurent c = exact_div(a, b);
      CHECK(b * c == a);
    } catch (const NotDivisible&) {
    }
  }
}

TEST_CASE("property: det is multiplicative") {
  testing::PolyGen gen(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Mat2 m = gen.mat(), n = gen.mat();
    CHECK((m * n).det() == m.det() * n.det());
    CHECK((m + n).trace() == m.trace() + n.trace());
  }
}
