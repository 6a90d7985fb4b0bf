#include <doctest.h>

#include <thread>

#include "../support.hpp"
#include "qfib/errors.hpp"
#include "qfib/families.hpp"
#include "qfib/mat2.hpp"
#include "qfib/morse.hpp"
#include "qfib/operators.hpp"
#include "qfib/qcombinat.hpp"

using namespace qfib;
using qfib::testing::ql;
using qfib::testing::term;
using F = FamilyId;

namespace {
const XsPoly x = XsPoly::x();
const XsPoly s = XsPoly::s();
XsPoly fam(F id, int n) { return family(id, n); }
XsPoly sq(const XsPoly& p, int j) { return subst_scale(p, Var::s, j); }
}  // namespace

TEST_CASE("family examples") {
  CHECK(family(F::Fib, 3, Mode::closed) == XsPoly::x(2) + term(QLaurent::q_power(1), 0, 1));
  CHECK(family(F::Luc, 2, Mode::closed) == XsPoly::x(2) + term(ql({1, 1}), 0, 1));
  CHECK(family(F::F_carlitz, 0, Mode::recursive).is_zero());
  CHECK(family(F::f_carlitz, 4, Mode::closed) ==
        XsPoly::x(4) + term(ql({0, 1, 1, 1}), 2, 1) + term(QLaurent::q_power(4), 0, 2));
  const XsPoly l4 = XsPoly::x(4) + term(ql({1, 1, 1, 1}), 2, 1) + term(ql({0, 0, 1, 0, 1}), 0, 2);
  CHECK(family(F::L_carlitz, 4, Mode::recursive) == l4);
  CHECK(fam(F::F_carlitz, 5) + s * sq(fam(F::F_carlitz, 3), 1) == l4);
  CHECK(family(F::H, 2, Mode::recursive) == XsPoly::x(2) + term(ql({1, -1}), 0, 1));
  CHECK(family("Fib", 3) == fam(F::Fib, 3));
}

TEST_CASE("family ids") {
  CHECK(all_families().size() == 17);
  for (F id : all_families()) {
    CHECK(parse_family_id(to_string(id)) == id);
    CHECK(family_spec(id).id == id);
    CHECK(fam(id, 0) == family_spec(id).initial0);
    CHECK(fam(id, 1) == family_spec(id).initial1);
  }
  CHECK_THROWS_AS(parse_family_id("fibonacci"), UnknownFamily);
  CHECK_THROWS_AS(family("nope", 2), UnknownFamily);
  CHECK_THROWS(family(F::Fib, -1));
}

TEST_CASE("first terms") {
  CHECK(render(fam(F::fib_num, 7)) == "13");
  CHECK(render(fam(F::lucas_num, 6)) == "18");
  CHECK(render(fam(F::F_xs, 4)) == "x^3 + 2*s*x");
  CHECK(render(fam(F::l_xs, 2)) == "x^2 + 2*s");
  CHECK(render(fam(F::l_xs, 0)) == "1");
  CHECK(render(fam(F::L_xs, 0)) == "2");
  CHECK(render(fam(F::RS, 2)) == "x^2 + (1 + q)*s*x + s^2");
  CHECK(render(fam(F::H, 3)) == "x^3 + (2 - q - q^2)*s*x");
}

TEST_CASE("mode agreement up to 25") {
  for (F id : all_families()) {
    for (int n = 0; n <= 25; ++n) CHECK_MESSAGE(family(id, n, Mode::closed) == family(id, n, Mode::recursive),
                                                to_string(id), " n=", n);
  }
}

TEST_CASE("q = 1 collapse") {
  for (int n = 0; n <= 20; ++n) {
    CHECK(at_q_one(fam(F::F_carlitz, n)) == fam(F::F_xs, n));
    CHECK(at_q_one(fam(F::f_carlitz, n)) == fam(F::F_xs, n + 1));
    CHECK(at_q_one(fam(F::Fib, n)) == fam(F::F_xs, n));
    CHECK(at_q_one(fam(F::Luc, n)) == fam(F::L_xs, n));
    CHECK(at_q_one(fam(F::LB, n)) == fam(F::L_xs, n));
    CHECK(at_q_one(fam(F::LB_bold, n)) == fam(F::L_xs, n));
    CHECK(at_q_one(fam(F::L_carlitz, n)) == fam(F::L_xs, n));
    CHECK(at_q_one(fam(F::luc, n)) == fam(F::l_xs, n));
  }
}

TEST_CASE("index shifts, monic degrees, Lucas combinations") {
  for (int n = 0; n <= 25; ++n) {
    CHECK(fam(F::fib, n) == fam(F::Fib, n + 1));
    CHECK(fam(F::f_xs, n) == fam(F::F_xs, n + 1));
    for (F id : {F::luc, F::l_xs}) {
      const XsPoly p = fam(id, n);
      CHECK(p.deg_x() == n);
      CHECK(p.coeff(n, 0) == QLaurent(1));
    }
    if (n >= 2) CHECK(fam(F::l_xs, n) == fam(F::f_xs, n) + s * fam(F::f_xs, n - 2));
    if (n >= 1) {
      CHECK(fam(F::lucas_num, n) == fam(F::fib_num, n + 1) + fam(F::fib_num, n - 1));
      CHECK(fam(F::L_xs, n) == fam(F::F_xs, n + 1) + s * fam(F::F_xs, n - 1));
      CHECK(fam(F::L_carlitz, n) == fam(F::F_carlitz, n + 1) + s * sq(fam(F::F_carlitz, n - 1), 1));
      CHECK(fam(F::Luc, n) == fam(F::Fib, n + 1) + s * fam(F::Fib, n - 1));
      CHECK(fam(F::luc, n) == fam(F::Luc, n));
    }
  }
  CHECK(fam(F::luc, 0) == XsPoly(1));
}

TEST_CASE("integer specializations reproduce the binomial sums") {
  for (int n = 0; n <= 30; ++n) {
    BigInt fib = 0;
    for (int j = 0; 2 * j <= n; ++j) fib += binomial(n - j, j);
    CHECK(specialize_xs(fam(F::F_xs, n + 1), 1, 1) == QLaurent(fib));
    CHECK(fam(F::fib_num, n + 1) == XsPoly(QLaurent(fib)));
    if (n > 0) {
      BigRational luc = 0;
      for (int j = 0; 2 * j <= n; ++j) luc += BigRational(binomial(n - j, j) * n, BigInt(n - j));
      REQUIRE(denominator(luc) == 1);
      CHECK(specialize_xs(fam(F::L_xs, n), 1, 1) == QLaurent(numerator(luc)));
      CHECK(fam(F::lucas_num, n) == XsPoly(QLaurent(numerator(luc))));
    }
  }
}

TEST_CASE("divisibility of Fibonacci numbers") {
  for (int n = 1; n <= 8; ++n) {
    const BigInt lucas = fam(F::lucas_num, n).coeff(0, 0).coeff(0);
    const BigInt sign = n % 2 == 0 ? -1 : 1;
    BigInt prev = 0, cur = 1;
    CHECK(fam(F::fib_num, 0).is_zero());
    for (int k = 1; k <= 8; ++k) {
      CHECK(fam(F::fib_num, k * n) == XsPoly(QLaurent(cur)) * fam(F::fib_num, n));
      BigInt next = lucas * cur + sign * prev;
      prev = cur;
      cur = next;
    }
  }
}

TEST_CASE("q-Catalan numbers") {
  CHECK(q_catalan(0) == QLaurent(1));
  CHECK(q_catalan(1) == QLaurent(1));
  CHECK(q_catalan(2) == ql({1, 1}));
  CHECK(q_catalan(3) == ql({1, 2, 1, 1}));
  CHECK(q_catalan(4) == ql({1, 3, 3, 3, 2, 1, 1}));
  for (int n = 1; n <= 20; ++n) {
    QLaurent rhs;
    for (int k = 0; k < n; ++k) rhs += QLaurent::q_power(k) * q_catalan(k) * q_catalan(n - 1 - k);
    CHECK(q_catalan(n) == rhs);
    CHECK(q_catalan(n).at_one() == binomial(2 * n, n) / (n + 1));
  }
}

TEST_CASE("q-Catalan numbers as moments of the Carlitz polynomials") {
  for (int n = 0; n <= 10; ++n) {
    const XsPoly expected = XsPoly::monomial(QLaurent::q_power(n) * q_catalan(n), 0, n);
    CHECK(moment(MomentFamily::f_carlitz, 2 * n) == XsPoly(n % 2 ? -1 : 1) * expected);
  }
}

TEST_CASE("MacMahon q-Catalan numbers and fib moments") {
  CHECK(macmahon_catalan(3) == ql({1, 0, 1, 1, 1, 0, 1}));
  for (int n = 0; n <= 10; ++n) {
    const XsPoly m = moment(MomentFamily::fib, 2 * n);
    CHECK(m == XsPoly::monomial(QLaurent(n % 2 ? -1 : 1) * QLaurent::q_power(n) * macmahon_catalan(n), 0, n));
  }
}

TEST_CASE("Belbachir-Benmezai sum") {
  for (int n = 0; n <= 20; ++n) CHECK(fam(F::LB, n) + fam(F::LB_bold, n) == XsPoly(2) * fam(F::L_carlitz, n));
}

TEST_CASE("pentagonal specialization") {
  const std::vector<QLaurent> printed{0, 1, 1, 0, -QLaurent::q_power(1), -QLaurent::q_power(2), 0,
                                      QLaurent::q_power(5), QLaurent::q_power(7), 0, -QLaurent::q_power(12),
                                      -QLaurent::q_power(15)};
  for (int n = 0; n < static_cast<int>(printed.size()); ++n) CHECK(fib_pentagonal(n) == printed[n]);
  for (int n = 0; n <= 60; ++n) CHECK(fib_pentagonal(n) == pentagonal_closed_form(n));
}

TEST_CASE("combinatorial definitions agree with the Morse oracles") {
  for (int n = 0; n <= 12; ++n) {
    CHECK(oracle(OracleKind::v_sum, n) == fam(F::f_carlitz, n));
    CHECK(oracle(OracleKind::W_sum, n) == fam(F::Fib, n));
    if (n >= 2) CHECK(oracle(OracleKind::periodic_w, n) == fam(F::l_xs, n));
  }
}

TEST_CASE("Carlitz transfer matrices") {
  Mat2 m = Mat2::identity();
  for (int n = 1; n <= 12; ++n) {
    m = Mat2::fibonacci(x, XsPoly::q(n - 1) * s) * m;
    CHECK(m.a12 == fam(F::F_carlitz, n));
    CHECK(m.a22 == fam(F::F_carlitz, n + 1));
    CHECK(m.trace() == fam(F::L_carlitz, n));
    CHECK(m.det() == XsPoly::monomial(QLaurent(n % 2 ? -1 : 1) * QLaurent::q_power(choose2(n)), 0, n));
  }
}

TEST_CASE("cache is invisible under concurrency") {
  std::vector<XsPoly> expected;
  for (int n = 0; n <= 30; ++n) expected.push_back(family(F::Luc, n, Mode::closed));
  std::vector<int> bad(6, 0);
  {
    std::vector<std::jthread> threads;
    for (int t = 0; t < 6; ++t) {
      threads.emplace_back([t, &expected, &bad] {
        for (int n = 30; n >= 0; --n) {
          const Mode mode = (n + t) % 2 ? Mode::closed : Mode::recursive;
          if (!(family(F::Luc, n, mode) == expected[n])) ++bad[t];
        }
      });
    }
  }
  for (int b : bad) CHECK(b == 0);
}

TEST_CASE("scoped perturbation") {
  const XsPoly before = fam(F::Fib, 4);
  {
    ScopedPerturbation p({F::Fib, 4, XsPoly::q()});
    CHECK(fam(F::Fib, 4) == before + XsPoly::q());
    CHECK(family(F::Fib, 4, Mode::recursive) == before + XsPoly::q());
    CHECK(fam(F::Fib, 5) == family(F::Fib, 5, Mode::recursive));
  }
  CHECK(fam(F::Fib, 4) == before);
}
