#include "qfib/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <stdexcept>
#include <thread>

#include "qfib/errors.hpp"
#include "qfib/mat2.hpp"
#include "qfib/morse.hpp"
#include "qfib/operators.hpp"
#include "qfib/qcombinat.hpp"
#include "qfib/qseries.hpp"

namespace qfib {

namespace {

using F = FamilyId;
using Checks = std::vector<Check>;

XsPoly fam(F id, int n) { return family(id, n); }
XsPoly rec(F id, int n) { return family(id, n, Mode::recursive); }

// p(x, q^j s)
XsPoly sq(const XsPoly& p, int j) { return subst_scale(p, Var::s, j); }

XsPoly qp(int e) { return XsPoly(QLaurent::q_power(e)); }
XsPoly qb(int n, int k) { return XsPoly(q_binomial(n, k)); }
XsPoly num(const BigInt& v) { return XsPoly(QLaurent(v)); }
XsPoly xs(int dx, int ds) { return XsPoly::monomial(1, dx, ds); }

// (-s)^k
XsPoly neg_s(int k) { return XsPoly::monomial(k % 2 == 0 ? 1 : -1, 0, k); }

XsPoly pow(const XsPoly& p, int n) {
  XsPoly r(1);
  for (int i = 0; i < n; ++i) r *= p;
  return r;
}

// sum_{i=0}^{n-1} x^i s^(n-1-i), i.e. (x^n - y^n)/(x - y) with y in the s slot
XsPoly divided_difference(int n) {
  XsPoly r;
  for (int i = 0; i < n; ++i) r += xs(i, n - 1 - i);
  return r;
}

const XsPoly kX = XsPoly::x();
const XsPoly kS = XsPoly::s();

// Carlitz transfer-matrix products M_n = U(x, q^(n-1) s) ... U(x, s), n = 0..nmax.
std::vector<Mat2> carlitz_products(int nmax) {
  std::vector<Mat2> out{Mat2::identity()};
  for (int n = 1; n <= nmax; ++n) out.push_back(Mat2::fibonacci(kX, qp(n - 1) * kS) * out.back());
  return out;
}

// c_n from c_n = sum_k q^k c_k c_(n-1-k).
std::vector<QLaurent> catalan_recurrence(int nmax) {
  std::vector<QLaurent> c{QLaurent(1)};
  for (int n = 1; n <= nmax; ++n) {
    QLaurent acc;
    for (int k = 0; k < n; ++k) acc += QLaurent::q_power(k) * c[k] * c[n - 1 - k];
    c.push_back(acc);
  }
  return c;
}

Identity single(std::string name, std::string equation, int n_start, int n_default, std::vector<F> touches,
                std::function<Checks(int)> fn) {
  Identity id;
  id.name = std::move(name);
  id.equation = std::move(equation);
  id.n_start = n_start;
  id.n_default = n_default;
  id.touches = std::move(touches);
  id.prepare = [fn = std::move(fn)](int, int) -> CheckFn { return [fn](int n, int) { return fn(n); }; };
  return id;
}

Identity prepared(std::string name, std::string equation, int n_start, int n_default, std::vector<F> touches,
                  std::function<CheckFn(int, int)> prepare) {
  Identity id;
  id.name = std::move(name);
  id.equation = std::move(equation);
  id.n_start = n_start;
  id.n_default = n_default;
  id.touches = std::move(touches);
  id.prepare = std::move(prepare);
  return id;
}

Identity grid(std::string name, std::string equation, Arity arity, int n_start, int m_start, std::vector<F> touches,
              std::function<Checks(int, int)> fn) {
  Identity id;
  id.name = std::move(name);
  id.equation = std::move(equation);
  id.arity = arity;
  id.n_start = n_start;
  id.n_default = 8;
  id.m_start = m_start;
  id.m_default = 8;
  id.touches = std::move(touches);
  id.prepare = [fn = std::move(fn)](int, int) -> CheckFn { return fn; };
  return id;
}

// ---------------------------------------------------------------- classical numbers

void add_number_identities(std::vector<Identity>& r) {
  r.push_back(single("lucas-numbers-from-fibonacci", "L_n = F_(n+1) + F_(n-1)", 1, 20, {F::fib_num, F::lucas_num},
                     [](int n) -> Checks {
                       return {{"sum", fam(F::lucas_num, n), fam(F::fib_num, n + 1) + fam(F::fib_num, n - 1)}};
                     }));

  r.push_back(grid("fibonacci-number-addition", "F_(m+n) = F_(m-1) F_n + F_m F_(n+1)", Arity::m_n, 0, 1,
                   {F::fib_num}, [](int n, int m) -> Checks {
                     const Mat2 u = power(Mat2::fibonacci(1, 1), m + n);
                     return {{"matrix", u.a12, fam(F::fib_num, m + n)},
                             {"addition", fam(F::fib_num, m + n),
                              fam(F::fib_num, m - 1) * fam(F::fib_num, n) +
                                  fam(F::fib_num, m) * fam(F::fib_num, n + 1)}};
                   }));

  r.push_back(single("fibonacci-number-cassini", "F_(n-1) F_(n+1) - F_n^2 = (-1)^n", 1, 20, {F::fib_num},
                     [](int n) -> Checks {
                       return {{"cassini",
                                fam(F::fib_num, n - 1) * fam(F::fib_num, n + 1) - pow(fam(F::fib_num, n), 2),
                                XsPoly(n % 2 == 0 ? 1 : -1)}};
                     }));

  r.push_back(grid("fibonacci-number-doubling", "F_(2n+m) = sum_k C(n,k) F_(k+m)", Arity::m_n, 0, 0, {F::fib_num},
                   [](int n, int m) -> Checks {
                     XsPoly rhs;
                     for (int k = 0; k <= n; ++k) rhs += num(binomial(n, k)) * fam(F::fib_num, k + m);
                     return {{"doubling", fam(F::fib_num, 2 * n + m), rhs}};
                   }));

  r.push_back(single("lucas-number-trace", "L_n = tr U^n, U^n = [[F_(n-1), F_n], [F_n, F_(n+1)]]", 1, 20,
                     {F::fib_num, F::lucas_num}, [](int n) -> Checks {
                       const Mat2 u = power(Mat2::fibonacci(1, 1), n);
                       const Mat2 expected{fam(F::fib_num, n - 1), fam(F::fib_num, n), fam(F::fib_num, n),
                                           fam(F::fib_num, n + 1)};
                       return {{"trace", fam(F::lucas_num, n), u.trace()},
                               {"entries-11", u.a11, expected.a11},
                               {"entries-12", u.a12, expected.a12},
                               {"entries-21", u.a21, expected.a21},
                               {"entries-22", u.a22, expected.a22}};
                     }));

  r.push_back(prepared("numeric-generating-functions",
                       "sum F_(n+1) z^n = 1/(1 - z - z^2), sum L_n z^n = (2 - z)/(1 - z - z^2)", 0, 30,
                       {F::fib_num, F::lucas_num}, [](int n_hi, int) -> CheckFn {
                         const int order = std::max(n_hi, 0);
                         auto fib = std::make_shared<ZSeries>(gf(GfId::fib_num, order));
                         auto luc = std::make_shared<ZSeries>(gf(GfId::lucas_num, order));
                         return [fib, luc](int n, int) -> Checks {
                           return {{"fibonacci", fib->coeff(n), fam(F::fib_num, n + 1)},
                                   {"lucas", luc->coeff(n), fam(F::lucas_num, n)}};
                         };
                       }));

  r.push_back(single("fibonacci-number-binomial-sum", "F_(n+1) = sum_j C(n-j, j)", 0, 20, {F::fib_num},
                     [](int n) -> Checks {
                       BigInt sum = 0;
                       for (int j = 0; 2 * j <= n; ++j) sum += binomial(n - j, j);
                       return {{"sum", rec(F::fib_num, n + 1), num(sum)}};
                     }));

  r.push_back(single("lucas-number-rational-sum", "L_n = l_n = |M_n^*| = sum_j C(n-j, j) n/(n-j)", 1, 16,
                     {F::lucas_num}, [](int n) -> Checks {
                       BigRational sum = 0;
                       for (int j = 0; 2 * j <= n; ++j) sum += BigRational(binomial(n - j, j) * n, BigInt(n - j));
                       if (denominator(sum) != 1) throw std::logic_error("rational Lucas sum is not an integer");
                       return {{"sum", rec(F::lucas_num, n), num(numerator(sum))},
                               {"periodic-count", oracle(OracleKind::periodic_count, n), fam(F::lucas_num, n)}};
                     }));

  r.push_back(grid("fibonacci-divisibility", "F_(kn) = F_k^(n) F_n with F_k^(n) = L_n F_(k-1)^(n) - (-1)^n F_(k-2)^(n)",
                   Arity::n_k, 1, 0, {F::fib_num, F::lucas_num}, [](int n, int k) -> Checks {
                     XsPoly prev = 0;
                     XsPoly cur = 1;
                     if (k == 0) cur = 0;
                     const XsPoly lucas = fam(F::lucas_num, n);
                     const XsPoly sign(n % 2 == 0 ? -1 : 1);
                     for (int i = 2; i <= k; ++i) {
                       XsPoly next = lucas * cur + sign * prev;
                       prev = std::move(cur);
                       cur = std::move(next);
                     }
                     return {{"divisibility", fam(F::fib_num, k * n), cur * fam(F::fib_num, n)}};
                   }));
}

// ---------------------------------------------------------------- classical polynomials

void add_polynomial_identities(std::vector<Identity>& r) {
  r.push_back(single("fibonacci-polynomial-recurrence", "F_n(x,s) = x F_(n-1)(x,s) + s F_(n-2)(x,s)", 2, 20,
                     {F::F_xs}, [](int n) -> Checks {
                       return {{"recurrence", fam(F::F_xs, n), kX * fam(F::F_xs, n - 1) + kS * fam(F::F_xs, n - 2)}};
                     }));

  r.push_back(single("morse-weight-sum", "f_n(x,s) = w(M_n), |M_n| = f_n(1,1) = F_(n+1)", 0, 16,
                     {F::f_xs, F::fib_num}, [](int n) -> Checks {
                       return {{"weight", oracle(OracleKind::w_sum, n), fam(F::f_xs, n)},
                               {"count", oracle(OracleKind::count, n), fam(F::fib_num, n + 1)}};
                     }));

  r.push_back(single("combinatorial-fibonacci-recurrence", "f_n(x,s) = x f_(n-1)(x,s) + s f_(n-2)(x,s) = F_(n+1)(x,s)",
                     2, 20, {F::f_xs, F::F_xs}, [](int n) -> Checks {
                       return {{"recurrence", fam(F::f_xs, n), kX * fam(F::f_xs, n - 1) + kS * fam(F::f_xs, n - 2)},
                               {"shift", fam(F::f_xs, n), fam(F::F_xs, n + 1)}};
                     }));

  r.push_back(single("fibonacci-binet-surrogate", "F_n(x+y, -xy) = (x^n - y^n)/(x - y)", 0, 20, {F::F_xs},
                     [](int n) -> Checks {
                       return {{"surrogate", compose(fam(F::F_xs, n), kX + kS, -(kX * kS)), divided_difference(n)}};
                     }));

  r.push_back(single("fibonacci-period-six", "F_(3n)(1,-1) = 0, F_(3n+1)(1,-1) = F_(3n+2)(1,-1) = (-1)^n", 0, 60,
                     {F::F_xs}, [](int n) -> Checks {
                       const int m = n / 3;
                       const int expected = n % 3 == 0 ? 0 : (m % 2 == 0 ? 1 : -1);
                       return {{"specialization", XsPoly(specialize_xs(fam(F::F_xs, n), 1, -1)), XsPoly(expected)}};
                     }));

  r.push_back(single("fibonacci-polynomial-cassini", "F_n(x,s)^2 - F_(n-1)(x,s) F_(n+1)(x,s) = (-s)^(n-1)", 1, 20,
                     {F::F_xs}, [](int n) -> Checks {
                       const Mat2 u = power(Mat2::fibonacci(kX, kS), n);
                       return {{"cassini", pow(fam(F::F_xs, n), 2) - fam(F::F_xs, n - 1) * fam(F::F_xs, n + 1),
                                neg_s(n - 1)},
                               {"matrix-det", u.det(), neg_s(n)},
                               {"matrix-12", u.a12, fam(F::F_xs, n)},
                               {"matrix-11", u.a11, kS * fam(F::F_xs, n - 1)},
                               {"matrix-22", u.a22, fam(F::F_xs, n + 1)}};
                     }));

  r.push_back(grid("fibonacci-polynomial-addition", "F_(m+n)(x,s) = F_m F_(n+1) + s F_(m-1) F_n", Arity::m_n, 0, 1,
                   {F::F_xs}, [](int n, int m) -> Checks {
                     return {{"addition", fam(F::F_xs, m + n),
                              fam(F::F_xs, m) * fam(F::F_xs, n + 1) + kS * fam(F::F_xs, m - 1) * fam(F::F_xs, n)}};
                   }));

  r.push_back(grid("fibonacci-polynomial-doubling", "F_(2n+m)(x,s) = sum_k C(n,k) s^k x^(n-k) F_(n-k+m)(x,s)",
                   Arity::m_n, 0, 0, {F::F_xs}, [](int n, int m) -> Checks {
                     XsPoly rhs;
                     for (int k = 0; k <= n; ++k) {
                       rhs += XsPoly::monomial(QLaurent(binomial(n, k)), n - k, k) * fam(F::F_xs, n - k + m);
                     }
                     return {{"doubling", fam(F::F_xs, 2 * n + m), rhs}};
                   }));

  r.push_back(single("lucas-polynomial-definition",
                     "L_n(x,s) = F_(n+1) + s F_(n-1) = tr U(x,s)^n = sum_j C(n-j,j) n/(n-j) s^j x^(n-2j)", 1, 20,
                     {F::L_xs, F::F_xs}, [](int n) -> Checks {
                       XsPoly sum;
                       for (int j = 0; 2 * j <= n; ++j) {
                         sum += XsPoly::monomial(QLaurent(binomial(n - j, j) * n / (n - j)), n - 2 * j, j);
                       }
                       return {{"fibonacci", fam(F::L_xs, n), fam(F::F_xs, n + 1) + kS * fam(F::F_xs, n - 1)},
                               {"trace", fam(F::L_xs, n), power(Mat2::fibonacci(kX, kS), n).trace()},
                               {"binomial-sum", fam(F::L_xs, n), sum}};
                     }));

  r.push_back(single("lucas-polynomial-recurrence", "L_n(x,s) = x L_(n-1)(x,s) + s L_(n-2)(x,s)", 2, 20, {F::L_xs},
                     [](int n) -> Checks {
                       return {{"recurrence", fam(F::L_xs, n), kX * fam(F::L_xs, n - 1) + kS * fam(F::L_xs, n - 2)}};
                     }));

  r.push_back(single("combinatorial-lucas",
                     "l_n(x,s) = w(M_n^*) = f_n + s f_(n-2) = x l_(n-1) + t_(n-2)(s) l_(n-2)", 2, 16,
                     {F::l_xs, F::f_xs}, [](int n) -> Checks {
                       const XsPoly t = n == 2 ? XsPoly(2) * kS : kS;
                       return {{"periodic-weight", oracle(OracleKind::periodic_w, n), fam(F::l_xs, n)},
                               {"fibonacci", fam(F::l_xs, n), fam(F::f_xs, n) + kS * fam(F::f_xs, n - 2)},
                               {"recurrence", fam(F::l_xs, n), kX * fam(F::l_xs, n - 1) + t * fam(F::l_xs, n - 2)}};
                     }));

  r.push_back(single("lucas-binet-surrogate", "L_n(x+y, -xy) = x^n + y^n", 0, 20, {F::L_xs}, [](int n) -> Checks {
    return {{"surrogate", compose(fam(F::L_xs, n), kX + kS, -(kX * kS)), xs(n, 0) + xs(0, n)}};
  }));

  r.push_back(prepared("polynomial-generating-functions",
                       "sum f_n(x,s) z^n = 1/(1 - xz - sz^2), sum L_n(x,s) z^n = (2 - xz)/(1 - xz - sz^2)", 0, 20,
                       {F::f_xs, F::L_xs}, [](int n_hi, int) -> CheckFn {
                         const int order = std::max(n_hi, 0);
                         auto f = std::make_shared<ZSeries>(gf(GfId::f_xs, order));
                         auto l = std::make_shared<ZSeries>(gf(GfId::L_xs, order));
                         return [f, l](int n, int) -> Checks {
                           return {{"fibonacci", f->coeff(n), fam(F::f_xs, n)},
                                   {"lucas", l->coeff(n), fam(F::L_xs, n)}};
                         };
                       }));

  r.push_back(single("chebyshev-inversion",
                     "sum_k (-s)^k C(n,k) l_(n-2k) = x^n, sum_k (-s)^k (C(n,k) - C(n,k-1)) f_(n-2k) = x^n", 0, 20,
                     {F::l_xs, F::f_xs}, [](int n) -> Checks {
                       XsPoly lucas;
                       XsPoly fib;
                       for (int k = 0; 2 * k <= n; ++k) {
                         lucas += neg_s(k) * num(binomial(n, k)) * fam(F::l_xs, n - 2 * k);
                         fib += neg_s(k) * num(binomial(n, k) - binomial(n, k - 1)) * fam(F::f_xs, n - 2 * k);
                       }
                       return {{"lucas", lucas, xs(n, 0)}, {"fibonacci", fib, xs(n, 0)}};
                     }));

  r.push_back(single("classical-moments",
                     "Lambda_f(x^(2n)) = (-s)^n C(2n,n)/(n+1), Lambda_l(x^(2n)) = (-s)^n C(2n,n), odd moments 0", 0,
                     12, {F::f_xs, F::l_xs}, [](int n) -> Checks {
                       const BigInt central = binomial(2 * n, n);
                       return {{"fibonacci-even", moment(MomentFamily::f_xs, 2 * n), neg_s(n) * num(central / (n + 1))},
                               {"fibonacci-odd", moment(MomentFamily::f_xs, 2 * n + 1), 0},
                               {"lucas-even", moment(MomentFamily::l_xs, 2 * n), neg_s(n) * num(central)},
                               {"lucas-odd", moment(MomentFamily::l_xs, 2 * n + 1), 0}};
                     }));
}

// ---------------------------------------------------------------- q-combinatorics and operators

void add_q_identities(std::vector<Identity>& r) {
  r.push_back(single("q-binomial-symmetry", "[n,k] = [n,n-k] = [n]!/([k]! [n-k]!)", 0, 20, {}, [](int n) -> Checks {
    Checks out;
    for (int k = 0; k <= n; ++k) {
      const XsPoly factorials(exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k)));
      out.push_back({"k=" + std::to_string(k), qb(n, k), factorials});
      out.push_back({"k=" + std::to_string(k) + " mirror", qb(n, n - k), factorials});
    }
    return out;
  }));

  r.push_back(single("q-pascal", "[n+1,k] = q^k [n,k] + [n,k-1] = [n,k] + q^(n+1-k) [n,k-1]", 0, 20, {},
                     [](int n) -> Checks {
                       Checks out;
                       for (int k = 0; k <= n + 1; ++k) {
                         out.push_back({"first k=" + std::to_string(k), qb(n + 1, k), qp(k) * qb(n, k) + qb(n, k - 1)});
                         out.push_back({"second k=" + std::to_string(k), qb(n + 1, k),
                                        qb(n, k) + qp(n + 1 - k) * qb(n, k - 1)});
                       }
                       return out;
                     }));

  r.push_back(single("rogers-szego-operator", "(x + y eps_q)^n 1 = sum_k [n,k] x^k y^(n-k)", 0, 20, {F::RS},
                     [](int n) -> Checks { return {{"operator", rs_operator(n), fam(F::RS, n)}}; }));

  r.push_back(single("rogers-szego-derivative", "D_q R_n(x,y,q) = [n] R_(n-1)(x,y,q)", 1, 20, {F::RS},
                     [](int n) -> Checks {
                       return {{"derivative", q_derivative(fam(F::RS, n)), XsPoly(q_int(n)) * fam(F::RS, n - 1)}};
                     }));

  r.push_back(single("rogers-szego-recurrence", "R_n = (x + y) R_(n-1) + (q^(n-1) - 1) x y R_(n-2)", 2, 20, {F::RS},
                     [](int n) -> Checks {
                       return {{"recurrence", fam(F::RS, n),
                                (kX + kS) * fam(F::RS, n - 1) + (qp(n - 1) - 1) * kX * kS * fam(F::RS, n - 2)}};
                     }));

  r.push_back(single("eps-from-derivative", "eps_q = 1 + (q-1) x D_q", 0, 20, {}, [](int n) -> Checks {
    Checks out;
    for (int k = 0; k <= 3; ++k) {
      const XsPoly p = xs(n, k) + XsPoly::monomial(QLaurent::q_power(-k), k, n);
      out.push_back({"s^" + std::to_string(k), eps_q(p), p + (qp(1) - 1) * kX * q_derivative(p)});
    }
    return out;
  }));

  r.push_back(single("rothe", "(y + x)(y + qx)...(y + q^(n-1) x) = sum_k q^C(k,2) [n,k] x^k y^(n-k)", 0, 20, {},
                     [](int n) -> Checks {
                       auto [product, sum] = rothe_sides(n);
                       return {{"rothe", product, sum}};
                     }));

  r.push_back(single("subset-q-sum", "sum over k-subsets of {1..n} of q^(i1+...+ik) = q^C(k+1,2) [n,k]", 0, 14, {},
                     [](int n) -> Checks {
                       Checks out;
                       for (int k = 0; k <= n; ++k) {
                         out.push_back({"k=" + std::to_string(k), XsPoly(subset_qsum(n, k)),
                                        qp(choose2(k + 1)) * qb(n, k)});
                       }
                       return out;
                     }));

  r.push_back(prepared("gauss-series", "1/((1-x)(1-qx)...(1-q^k x)) = sum_n [n+k,n] x^n", 0, 20, {},
                       [](int n_hi, int) -> CheckFn {
                         auto coeffs = std::make_shared<std::vector<std::vector<QLaurent>>>();
                         for (int k = 0; k <= 6; ++k) coeffs->push_back(gauss_coeff(k, std::max(n_hi, 0)));
                         return [coeffs](int n, int) -> Checks {
                           Checks out;
                           for (int k = 0; k <= 6; ++k) {
                             out.push_back({"k=" + std::to_string(k), XsPoly((*coeffs)[k][n]), qb(n + k, n)});
                           }
                           return out;
                         };
                       }));
}

// ---------------------------------------------------------------- Carlitz polynomials

void add_carlitz_identities(std::vector<Identity>& r) {
  r.push_back(single("carlitz-closed-forms",
                     "F_n = x F_(n-1) + q^(n-2) s F_(n-2), f_n = x f_(n-1) + q^(n-1) s f_(n-2) = sum_k q^(k^2) "
                     "[n-k,k] s^k x^(n-2k)",
                     2, 20, {F::F_carlitz, F::f_carlitz}, [](int n) -> Checks {
                       return {{"F-recurrence", fam(F::F_carlitz, n),
                                kX * fam(F::F_carlitz, n - 1) + qp(n - 2) * kS * fam(F::F_carlitz, n - 2)},
                               {"f-recurrence", fam(F::f_carlitz, n),
                                kX * fam(F::f_carlitz, n - 1) + qp(n - 1) * kS * fam(F::f_carlitz, n - 2)},
                               {"shift", fam(F::f_carlitz, n), fam(F::F_carlitz, n + 1)}};
                     }));

  r.push_back(single("carlitz-morse-weight", "f_n(x,s,q) = sum over M_n of v(c)", 0, 16, {F::f_carlitz},
                     [](int n) -> Checks { return {{"weight", oracle(OracleKind::v_sum, n), fam(F::f_carlitz, n)}}; }));

  r.push_back(single("carlitz-first-element", "f_n(x,s,q) = x f_(n-1)(x,qs,q) + qs f_(n-2)(x,q^2 s,q)", 2, 20,
                     {F::f_carlitz}, [](int n) -> Checks {
                       return {{"recurrence", fam(F::f_carlitz, n),
                                kX * sq(fam(F::f_carlitz, n - 1), 1) + qp(1) * kS * sq(fam(F::f_carlitz, n - 2), 2)}};
                     }));

  r.push_back(prepared("carlitz-matrix",
                       "U(x,q^(n-1)s)...U(x,s) = [[s F_(n-1)(x,qs), F_n(x,s)], [s F_n(x,qs), F_(n+1)(x,s)]]", 1, 20,
                       {F::F_carlitz}, [](int n_hi, int) -> CheckFn {
                         auto m = std::make_shared<std::vector<Mat2>>(carlitz_products(std::max(n_hi, 0)));
                         return [m](int n, int) -> Checks {
                           const Mat2& p = (*m)[n];
                           return {{"11", p.a11, kS * sq(fam(F::F_carlitz, n - 1), 1)},
                                   {"12", p.a12, fam(F::F_carlitz, n)},
                                   {"21", p.a21, kS * sq(fam(F::F_carlitz, n), 1)},
                                   {"22", p.a22, fam(F::F_carlitz, n + 1)}};
                         };
                       }));

  r.push_back(prepared("cassini-q", "F_n(x,s) F_n(x,qs) - F_(n-1)(x,qs) F_(n+1)(x,s) = q^C(n,2) (-s)^(n-1)", 1, 20,
                       {F::F_carlitz}, [](int n_hi, int) -> CheckFn {
                         auto m = std::make_shared<std::vector<Mat2>>(carlitz_products(std::max(n_hi, 0)));
                         return [m](int n, int) -> Checks {
                           const XsPoly lhs = fam(F::F_carlitz, n) * sq(fam(F::F_carlitz, n), 1) -
                                              sq(fam(F::F_carlitz, n - 1), 1) * fam(F::F_carlitz, n + 1);
                           return {{"cassini", lhs, qp(choose2(n)) * neg_s(n - 1)},
                                   {"det", (*m)[n].det(), qp(choose2(n)) * neg_s(n)}};
                         };
                       }));

  {
    Identity id;
    id.name = "addition-q";
    id.equation = "F_(m+n)(x,s) = F_m(x,q^n s) F_(n+1)(x,s) + q^n s F_(m-1)(x,q^(n+1) s) F_n(x,s)";
    id.arity = Arity::m_n;
    id.n_start = 0;
    id.n_default = 8;
    id.m_start = 1;
    id.m_default = 8;
    id.touches = {F::F_carlitz};
    id.prepare = [](int n_hi, int m_hi) -> CheckFn {
      auto m = std::make_shared<std::vector<Mat2>>(carlitz_products(std::max(n_hi + m_hi, 0)));
      return [m](int n, int mm) -> Checks {
        const Mat2& total = (*m)[mm + n];
        const Mat2 split = map_entries((*m)[mm], [n](const XsPoly& p) { return sq(p, n); }) * (*m)[n];
        const XsPoly formula = sq(fam(F::F_carlitz, mm), n) * fam(F::F_carlitz, n + 1) +
                               qp(n) * kS * sq(fam(F::F_carlitz, mm - 1), n + 1) * fam(F::F_carlitz, n);
        return {{"matrix-split-12", total.a12, split.a12},
                {"matrix-split-22", total.a22, split.a22},
                {"oracle", fam(F::F_carlitz, mm + n), total.a12},
                {"addition", fam(F::F_carlitz, mm + n), formula}};
      };
    };
    r.push_back(std::move(id));
  }

  r.push_back(single("carlitz-doubling", "f_(2n)(x,s,q) = sum_k [n,k] q^(kn) s^k x^(n-k) f_(n-k)(x,s,q)", 0, 20,
                     {F::f_carlitz}, [](int n) -> Checks {
                       XsPoly rhs;
                       std::vector<XsPoly> tails;
                       for (int k = 0; k <= n; ++k) {
                         const XsPoly tail = XsPoly::monomial(q_binomial(n, k) * QLaurent::q_power(k * n), n - k, k);
                         rhs += tail * fam(F::f_carlitz, n - k);
                         tails.push_back(tail * fam(F::f_carlitz, n - k));
                       }
                       Checks out{{"doubling", fam(F::f_carlitz, 2 * n), rhs}};
                       if (2 * n <= 16) {
                         const auto split = doubling_split(n);
                         for (int k = 0; k <= n; ++k) out.push_back({"split k=" + std::to_string(k), split[k], tails[k]});
                       }
                       return out;
                     }));

  r.push_back(prepared("carlitz-generating-function",
                       "sum f_n(x,s,q) z^n = sum_k q^(k^2) s^k z^(2k) / ((1-xz)(1-qxz)...(1-q^k xz))", 0, 20,
                       {F::f_carlitz}, [](int n_hi, int) -> CheckFn {
                         auto series = std::make_shared<ZSeries>(gf(GfId::f_carlitz, std::max(n_hi, 0)));
                         return [series](int n, int) -> Checks {
                           return {{"coefficient", series->coeff(n), fam(F::f_carlitz, n)}};
                         };
                       }));

  r.push_back(prepared("lucas-q-trace",
                       "L_n(x,s,q) = tr M_n = F_(n+1)(x,s) + s F_(n-1)(x,qs) = sum_k q^(k^2-k) [n-k,k] [n]/[n-k] s^k "
                       "x^(n-2k)",
                       0, 20, {F::L_carlitz, F::F_carlitz}, [](int n_hi, int) -> CheckFn {
                         auto m = std::make_shared<std::vector<Mat2>>(carlitz_products(std::max(n_hi, 0)));
                         return [m](int n, int) -> Checks {
                           Checks out{{"trace", fam(F::L_carlitz, n), (*m)[n].trace()}};
                           if (n >= 1) {
                             out.push_back({"fibonacci", fam(F::L_carlitz, n),
                                            fam(F::F_carlitz, n + 1) + kS * sq(fam(F::F_carlitz, n - 1), 1)});
                           }
                           return out;
                         };
                       }));

  r.push_back(single("belbachir-benmezai",
                     "LB_n + bold LB_n = 2 L_n(x,s,q), bold LB_n = x bold LB_(n-1) + q^(n-2) s bold LB_(n-2), "
                     "LB_n = x LB_(n-1)(x,qs) + qs LB_(n-2)(x,q^2 s)",
                     0, 20, {F::LB, F::LB_bold, F::L_carlitz}, [](int n) -> Checks {
                       Checks out{{"sum", fam(F::LB, n) + fam(F::LB_bold, n), XsPoly(2) * fam(F::L_carlitz, n)}};
                       if (n >= 2) {
                         out.push_back({"bold-recurrence", fam(F::LB_bold, n),
                                        kX * fam(F::LB_bold, n - 1) + qp(n - 2) * kS * fam(F::LB_bold, n - 2)});
                         out.push_back({"recurrence", fam(F::LB, n),
                                        kX * sq(fam(F::LB, n - 1), 1) + qp(1) * kS * sq(fam(F::LB, n - 2), 2)});
                       }
                       return out;
                     }));

  r.push_back(prepared("carlitz-catalan",
                       "Lambda_f(x^(2n)) = (-s)^n q^n c_n(q) with c_n = sum_k q^k c_k c_(n-1-k)", 0, 12,
                       {F::f_carlitz}, [](int n_hi, int) -> CheckFn {
                         auto c = std::make_shared<std::vector<QLaurent>>(catalan_recurrence(std::max(n_hi, 0)));
                         return [c](int n, int) -> Checks {
                           const XsPoly cn((*c)[n]);
                           return {{"dyck-paths", XsPoly(q_catalan(n)), cn},
                                   {"moment", moment(MomentFamily::f_carlitz, 2 * n), neg_s(n) * qp(n) * cn},
                                   {"odd-moment", moment(MomentFamily::f_carlitz, 2 * n + 1), 0}};
                         };
                       }));
}

// ---------------------------------------------------------------- Fib / Luc / H

void add_fib_identities(std::vector<Identity>& r) {
  r.push_back(single("fib-morse-weight", "Fib_n(x,s,q) = sum over M_(n-1) of W(c)", 0, 16, {F::Fib},
                     [](int n) -> Checks { return {{"weight", oracle(OracleKind::W_sum, n), fam(F::Fib, n)}}; }));

  r.push_back(single("fib-recurrences",
                     "Fib_n = x Fib_(n-1)(x,qs) + qs Fib_(n-2)(x,qs) = x Fib_(n-1) + q^(n-2) s Fib_(n-2)(x,s/q) = "
                     "x Fib_(n-1) + q^(n-2) s x Fib_(n-3) + q^(n-2) s^2 Fib_(n-4)",
                     2, 20, {F::Fib}, [](int n) -> Checks {
                       Checks out{{"first-element", fam(F::Fib, n),
                                   kX * sq(fam(F::Fib, n - 1), 1) + qp(1) * kS * sq(fam(F::Fib, n - 2), 1)},
                                  {"last-element", fam(F::Fib, n),
                                   kX * fam(F::Fib, n - 1) + qp(n - 2) * kS * sq(fam(F::Fib, n - 2), -1)}};
                       if (n >= 4) {
                         out.push_back({"four-term", fam(F::Fib, n),
                                        kX * fam(F::Fib, n - 1) + qp(n - 2) * kS * kX * fam(F::Fib, n - 3) +
                                            qp(n - 2) * xs(0, 2) * fam(F::Fib, n - 4)});
                       }
                       return out;
                     }));

  r.push_back(single("pentagonal",
                     "Fib_(3n)(1,-1/q) = 0, Fib_(3n+1)(1,-1/q) = (-1)^n q^r(n), Fib_(3n+2)(1,-1/q) = (-1)^n q^r(-n), "
                     "Fib_n(1,-1/q) = -q^(n-3) Fib_(n-3)(1,-1/q)",
                     0, 60, {F::Fib}, [](int n) -> Checks {
                       Checks out{{"closed-form", XsPoly(fib_pentagonal(n)), XsPoly(pentagonal_closed_form(n))}};
                       if (n >= 3) {
                         out.push_back({"three-step", XsPoly(fib_pentagonal(n)),
                                        -qp(n - 3) * XsPoly(fib_pentagonal(n - 3))});
                       }
                       return out;
                     }));

  r.push_back(single("curious-recurrence", "Fib_n = x Fib_(n-1) + (q-1) s D_q Fib_(n-1) + s Fib_(n-2)", 2, 20,
                     {F::Fib}, [](int n) -> Checks {
                       const XsPoly prev = fam(F::Fib, n - 1);
                       return {{"recurrence", fam(F::Fib, n),
                                kX * prev + (qp(1) - 1) * kS * q_derivative(prev) + kS * fam(F::Fib, n - 2)}};
                     }));

  r.push_back(single("operator-fib", "Fib_n(x,s,q) = F_n(x + (q-1) s D_q, s) 1", 0, 20, {F::F_xs, F::Fib},
                     [](int n) -> Checks { return {{"operator", t_s_transform(fam(F::F_xs, n)), fam(F::Fib, n)}}; }));

  r.push_back(single("operator-luc", "Luc_n(x,s,q) = L_n(x + (q-1) s D_q, s) 1", 0, 20, {F::L_xs, F::Luc},
                     [](int n) -> Checks { return {{"operator", t_s_transform(fam(F::L_xs, n)), fam(F::Luc, n)}}; }));

  r.push_back(single("luc-from-fib", "Luc_n = Fib_(n+1) + s Fib_(n-1)", 1, 20, {F::Luc, F::Fib}, [](int n) -> Checks {
    return {{"sum", fam(F::Luc, n), fam(F::Fib, n + 1) + kS * fam(F::Fib, n - 1)}};
  }));

  r.push_back(single("luc-closed-form", "Luc_n = sum_j q^C(j,2) [n-j,j] [n]/[n-j] s^j x^(n-2j)", 1, 20, {F::Luc},
                     [](int n) -> Checks {
                       // division-free coefficients q^C(j+1,2) [n-j,j] + q^C(j,2) [n-1-j,j-1]
                       XsPoly rhs;
                       for (int j = 0; 2 * j <= n; ++j) {
                         const QLaurent c = QLaurent::q_power(choose2(j + 1)) * q_binomial(n - j, j) +
                                            QLaurent::q_power(choose2(j)) * q_binomial(n - 1 - j, j - 1);
                         rhs += XsPoly::monomial(c, n - 2 * j, j);
                       }
                       return {{"coefficients", fam(F::Luc, n), rhs}};
                     }));

  r.push_back(single("combinatorial-q-lucas", "luc_0 = 1, luc_n = Luc_n for n > 0, luc_n monic of x-degree n", 0, 20,
                     {F::luc, F::Luc}, [](int n) -> Checks {
                       const XsPoly l = fam(F::luc, n);
                       return {{"value", l, n == 0 ? XsPoly(1) : fam(F::Luc, n)},
                               {"degree", XsPoly(l.deg_x()), XsPoly(n)},
                               {"leading", XsPoly(l.coeff(n, 0)), 1}};
                     }));

  r.push_back(single("q-inversion",
                     "sum_k (-s)^k ([n,k] - [n,k-1]) fib_(n-2k) = x^n, sum_k (-s)^k [n,k] luc_(n-2k) = x^n", 0, 20,
                     {F::fib, F::luc}, [](int n) -> Checks {
                       XsPoly fib;
                       XsPoly luc;
                       for (int k = 0; 2 * k <= n; ++k) {
                         fib += neg_s(k) * (qb(n, k) - qb(n, k - 1)) * fam(F::fib, n - 2 * k);
                         luc += neg_s(k) * qb(n, k) * fam(F::luc, n - 2 * k);
                       }
                       return {{"fibonacci", fib, xs(n, 0)}, {"lucas", luc, xs(n, 0)}};
                     }));

  r.push_back(single("fib-moments", "Lambda_fib(x^(2n)) = (-qs)^n [2n,n]/[n+1], odd moments 0", 0, 12, {F::fib},
                     [](int n) -> Checks {
                       const XsPoly expected = neg_s(n) * qp(n) * XsPoly(exact_div(q_binomial(2 * n, n), q_int(n + 1)));
                       return {{"even", moment(MomentFamily::fib, 2 * n), expected},
                               {"odd", moment(MomentFamily::fib, 2 * n + 1), 0}};
                     }));

  r.push_back(single("luc-moments", "Lambda_luc(x^(2n)) = (-s)^n [2n,n], odd moments 0", 0, 12, {F::luc},
                     [](int n) -> Checks {
                       return {{"even", moment(MomentFamily::luc, 2 * n), neg_s(n) * qb(2 * n, n)},
                               {"odd", moment(MomentFamily::luc, 2 * n + 1), 0}};
                     }));

  r.push_back(single("hermite-recurrence",
                     "H_n = x H_(n-1) + s (1 - q^(n-1)) H_(n-2) = sum_k (-s)^k [n,k] l_(n-2k)(x,s)", 0, 20,
                     {F::H}, [](int n) -> Checks {
                       Checks out;
                       if (n >= 2) {
                         out.push_back({"recurrence", fam(F::H, n),
                                        kX * fam(F::H, n - 1) + kS * (1 - qp(n - 1)) * fam(F::H, n - 2)});
                       }
                       out.push_back({"modes", fam(F::H, n), rec(F::H, n)});
                       return out;
                     }));

  r.push_back(single("hermite-operator", "H_n(x + (q-1) s D_q, s, q) 1 = x^n", 0, 20, {F::H}, [](int n) -> Checks {
    return {{"operator", t_s_transform(fam(F::H, n)), xs(n, 0)}};
  }));

  r.push_back(single("hermite-rogers-szego", "H_n(x+y, -xy, q) = R_n(x,y,q)", 0, 20, {F::H, F::RS},
                     [](int n) -> Checks {
                       return {{"surrogate", compose(fam(F::H, n), kX + kS, -(kX * kS)), fam(F::RS, n)}};
                     }));

  r.push_back(prepared("fib-generating-function",
                       "sum fib_n(x,s,q) z^n = sum_k q^C(k+1,2) s^k z^(2k) / ((1-xz)(1-qxz)...(1-q^k xz))", 0, 20,
                       {F::fib}, [](int n_hi, int) -> CheckFn {
                         const int order = std::max(n_hi, 0);
                         auto series = std::make_shared<ZSeries>(gf(GfId::fib, order));
                         auto summands = std::make_shared<std::vector<ZSeries>>();
                         for (int k = 0; 2 * k <= order; ++k) summands->push_back(gf_summand(GfId::fib, k, order));
                         return [series, summands](int n, int) -> Checks {
                           Checks out{{"coefficient", series->coeff(n), fam(F::fib, n)}};
                           for (int k = 0; 2 * k <= n; ++k) {
                             out.push_back({"summand k=" + std::to_string(k), (*summands)[k].coeff(n),
                                            XsPoly::monomial(QLaurent::q_power(choose2(k + 1)) * q_binomial(n - k, k),
                                                             n - 2 * k, k)});
                           }
                           return out;
                         };
                       }));

  r.push_back(single("rogers-szego-binet-surrogates",
                     "sum_k q^C(k+1,2) [n-1-k,k] (-xy)^k R_(n-1-2k) = (x^n - y^n)/(x - y), sum_k q^C(k,2) [n-k,k] "
                     "[n]/[n-k] (-xy)^k R_(n-2k) = x^n + y^n",
                     1, 20, {F::RS}, [](int n) -> Checks {
                       const XsPoly mxy = -(kX * kS);
                       XsPoly fib;
                       XsPoly luc;
                       for (int k = 0; 2 * k <= n - 1; ++k) {
                         fib += qp(choose2(k + 1)) * qb(n - 1 - k, k) * pow(mxy, k) * fam(F::RS, n - 1 - 2 * k);
                       }
                       for (int k = 0; 2 * k <= n; ++k) {
                         const QLaurent c = exact_div(q_binomial(n - k, k) * q_int(n), q_int(n - k));
                         luc += qp(choose2(k)) * XsPoly(c) * pow(mxy, k) * fam(F::RS, n - 2 * k);
                       }
                       return {{"fibonacci", fib, divided_difference(n)}, {"lucas", luc, xs(n, 0) + xs(0, n)}};
                     }));
}

// ---------------------------------------------------------------- transfer map

void add_transfer_identities(std::vector<Identity>& r) {
  r.push_back(single("phi-transfer", "Phi(fib_n(x,s,q)) = f_n(x,s,q), Phi(luc_n(x,s,q)) = l_n(x,s,q)", 0, 20,
                     {F::fib, F::f_carlitz, F::luc, F::L_carlitz}, [](int n) -> Checks {
                       return {{"fibonacci", phi_map(fam(F::fib, n), Direction::forward), fam(F::f_carlitz, n)},
                               {"inverse", phi_map(fam(F::f_carlitz, n), Direction::inverse), fam(F::fib, n)},
                               {"lucas", phi_map(fam(F::luc, n), Direction::forward), carlitz_comb_lucas(n)}};
                     }));

  r.push_back(grid("phi-shifted",
                   "Phi(s^k fib_n) = q^C(k,2) s^k f_n(x,q^k s,q), Phi(s^k luc_n) = q^C(k,2) s^k l_n(x,q^k s,q)",
                   Arity::n_k, 0, 0, {F::fib, F::f_carlitz, F::luc, F::L_carlitz}, [](int n, int k) -> Checks {
                     const XsPoly sk = xs(0, k);
                     const XsPoly factor = qp(choose2(k)) * sk;
                     return {{"fibonacci", phi_map(sk * fam(F::fib, n), Direction::forward),
                              factor * sq(fam(F::f_carlitz, n), k)},
                             {"lucas", phi_map(sk * fam(F::luc, n), Direction::forward),
                              factor * sq(carlitz_comb_lucas(n), k)}};
                   }));

  r.push_back(single("phi-inversions",
                     "sum_k (-s)^k q^C(k,2) ([n,k] - [n,k-1]) f_(n-2k)(x,q^k s,q) = x^n, sum_k (-s)^k q^C(k,2) [n,k] "
                     "l_(n-2k)(x,q^k s,q) = x^n",
                     0, 20, {F::f_carlitz, F::L_carlitz}, [](int n) -> Checks {
                       XsPoly fib;
                       XsPoly luc;
                       for (int k = 0; 2 * k <= n; ++k) {
                         const XsPoly w = neg_s(k) * qp(choose2(k));
                         fib += w * (qb(n, k) - qb(n, k - 1)) * sq(fam(F::f_carlitz, n - 2 * k), k);
                         luc += w * qb(n, k) * sq(carlitz_comb_lucas(n - 2 * k), k);
                       }
                       return {{"fibonacci", fib, xs(n, 0)}, {"lucas", luc, xs(n, 0)}};
                     }));
}

// ---------------------------------------------------------------- composites

void add_composites(std::vector<Identity>& r) {
  std::vector<F> every(all_families().begin(), all_families().end());

  r.push_back(single("mode-agreement", "closed form = recursive construction for every family", 0, 20, every,
                     [](int n) -> Checks {
                       Checks out;
                       for (F id : all_families()) out.push_back({std::string(to_string(id)), fam(id, n), rec(id, n)});
                       return out;
                     }));

  r.push_back(single("q-one-degeneration", "every q-family at q = 1 equals its classical counterpart", 0, 20, every,
                     [](int n) -> Checks {
                       auto one = [n](F id) { return at_q_one(fam(id, n)); };
                       return {{"F_carlitz", one(F::F_carlitz), fam(F::F_xs, n)},
                               {"f_carlitz", one(F::f_carlitz), fam(F::f_xs, n)},
                               {"L_carlitz", one(F::L_carlitz), fam(F::L_xs, n)},
                               {"LB", one(F::LB), fam(F::L_xs, n)},
                               {"LB_bold", one(F::LB_bold), fam(F::L_xs, n)},
                               {"Fib", one(F::Fib), fam(F::F_xs, n)},
                               {"fib", one(F::fib), fam(F::f_xs, n)},
                               {"Luc", one(F::Luc), fam(F::L_xs, n)},
                               {"luc", one(F::luc), fam(F::l_xs, n)},
                               {"H", one(F::H), xs(n, 0)},
                               {"RS", one(F::RS), pow(kX + kS, n)},
                               {"fib_num", specialize_xs(fam(F::F_xs, n), 1, 1), fam(F::fib_num, n)},
                               {"lucas_num", specialize_xs(fam(F::L_xs, n), 1, 1), fam(F::lucas_num, n)}};
                     }));
}

std::vector<Identity> build_registry() {
  std::vector<Identity> r;
  add_number_identities(r);
  add_polynomial_identities(r);
  add_q_identities(r);
  add_carlitz_identities(r);
  add_fib_identities(r);
  add_transfer_identities(r);
  add_composites(r);
  return r;
}

std::vector<Identity> build_harness_registry() {
  std::vector<Identity> r;
  r.push_back(single("cassini-q-mutated", "F_n(x,s) F_n(x,qs) - F_(n-1)(x,qs) F_(n+1)(x,s) = q^C(n,2) s^(n-1)", 1, 20,
                     {F::F_carlitz}, [](int n) -> Checks {
                       const XsPoly lhs = fam(F::F_carlitz, n) * sq(fam(F::F_carlitz, n), 1) -
                                          sq(fam(F::F_carlitz, n - 1), 1) * fam(F::F_carlitz, n + 1);
                       return {{"cassini", lhs, qp(choose2(n)) * xs(0, n - 1)}};
                     }));
  return r;
}

std::string range_text(const Identity& id, int n_hi, int m_hi) {
  auto span = [](const std::string& name, int lo, int hi) {
    return hi < lo ? name + "=none" : name + "=" + std::to_string(lo) + ".." + std::to_string(hi);
  };
  switch (id.arity) {
    case Arity::n_only: return span("n", id.n_start, n_hi);
    case Arity::m_n: return span("m", id.m_start, m_hi) + ", " + span("n", id.n_start, n_hi);
    case Arity::n_k: return span("n", id.n_start, n_hi) + ", " + span("k", id.m_start, m_hi);
  }
  return {};
}

VerifyReport run_bounded(const Identity& id, int n_hi, int m_hi) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.name = id.name;
  report.equation = id.equation;
  report.arity = id.arity;
  report.n_start = id.n_start;
  report.range = range_text(id, n_hi, m_hi);

  auto indices = [&](int n, int m) {
    std::vector<std::pair<std::string, int>> out;
    switch (id.arity) {
      case Arity::n_only: out = {{"n", n}}; break;
      case Arity::m_n: out = {{"m", m}, {"n", n}}; break;
      case Arity::n_k: out = {{"n", n}, {"k", m}}; break;
    }
    return out;
  };
  auto fail = [&](int n, int m, std::string part, std::string lhs, std::string rhs) {
    report.pass = false;
    report.counterexample = Counterexample{indices(n, m), std::move(part), std::move(lhs), std::move(rhs)};
  };
  auto check_at = [&](const CheckFn& fn, int n, int m) {
    try {
      for (const Check& c : fn(n, m)) {
        if (!(c.lhs == c.rhs)) {
          fail(n, m, c.part, render(c.lhs), render(c.rhs));
          return false;
        }
      }
    } catch (const std::exception& e) {
      fail(n, m, "exception", e.what(), "");
      return false;
    }
    return true;
  };

  CheckFn fn;
  try {
    fn = id.prepare(n_hi, m_hi);
  } catch (const std::exception& e) {
    fail(id.n_start, id.m_start, "exception", e.what(), "");
  }
  if (fn) {
    if (id.arity == Arity::n_only) {
      for (int n = id.n_start; n <= n_hi; ++n) {
        if (!check_at(fn, n, 0)) break;
      }
    } else {
      bool ok = true;
      for (int n = id.n_start; ok && n <= n_hi; ++n) {
        for (int m = id.m_start; ok && m <= m_hi; ++m) ok = check_at(fn, n, m);
      }
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

const std::vector<Identity>& registry() {
  static const std::vector<Identity> r = build_registry();
  return r;
}

const std::vector<Identity>& harness_registry() {
  static const std::vector<Identity> r = build_harness_registry();
  return r;
}

const Identity& find_identity(std::string_view name) {
  for (const auto* list : {&registry(), &harness_registry()}) {
    for (const auto& id : *list) {
      if (id.name == name) return id;
    }
  }
  throw UnknownIdentity("unknown identity '" + std::string(name) + "'");
}

VerifyReport run_identity(std::string_view name, int nmax, std::optional<int> mmax) {
  return run_identity(find_identity(name), nmax, mmax);
}

VerifyReport run_identity(const Identity& identity, int nmax, std::optional<int> mmax) {
  if (nmax < 1) throw std::invalid_argument("nmax must be at least 1");
  if (mmax && *mmax < 1) throw std::invalid_argument("mmax must be at least 1");
  const int m_hi = mmax.value_or(std::min(identity.m_default, nmax));
  return run_bounded(identity, nmax, m_hi);
}

std::vector<VerifyReport> run_all(int nmax, std::optional<int> mmax, unsigned threads) {
  if (nmax < 1) throw std::invalid_argument("nmax must be at least 1");
  if (mmax && *mmax < 1) throw std::invalid_argument("mmax must be at least 1");
  const auto& ids = registry();
  std::vector<VerifyReport> reports(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) {
      const Identity& id = ids[i];
      reports[i] = run_bounded(id, std::min(id.n_default, nmax), std::min(id.m_default, mmax.value_or(8)));
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(ids.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return reports;
}

std::string_view to_string(Arity arity) {
  switch (arity) {
    case Arity::n_only: return "n";
    case Arity::m_n: return "m,n";
    case Arity::n_k: return "n,k";
  }
  return "?";
}

}  // namespace qfib
