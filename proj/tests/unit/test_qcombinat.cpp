#include <doctest.h>

#include <thread>

#include "../support.hpp"
#include "qfib/qcombinat.hpp"

using namespace qfib;
using qfib::testing::ql;

namespace {

// [n]!/([k]! [n-k]!) with the products built directly from q-integers.
QLaurent binomial_by_products(int n, int k) {
  QLaurent num(1), den(1);
  for (int i = 1; i <= k; ++i) {
    num *= q_int(n - k + i);
    den *= q_int(i);
  }
  return exact_div(num, den);
}

}  // namespace

TEST_CASE("q_int examples") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1) == QLaurent(1));
  CHECK(q_int(4) == ql({1, 1, 1, 1}));
  CHECK_THROWS(q_int(-1));
  CHECK(q_factorial(0) == QLaurent(1));
  CHECK(q_factorial(3) == ql({1, 1}) * ql({1, 1, 1}));
}

TEST_CASE("q_binomial examples") {
  for (int n = 0; n < 10; ++n) CHECK(q_binomial(n, 0) == QLaurent(1));
  CHECK(q_binomial(2, 1) == ql({1, 1}));
  CHECK(q_binomial(4, 2) == ql({1, 1, 2, 1, 1}));
  CHECK(exact_div(subset_qsum(4, 2), QLaurent::q_power(3)) == q_binomial(4, 2));
  CHECK(q_binomial(3, 4).is_zero());
  CHECK(q_binomial(3, -1).is_zero());
  CHECK(q_binomial(-2, 1).is_zero());
}

TEST_CASE("q_binomial matches the product formula") {
  for (int n = 0; n <= 30; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(q_binomial(n, k) == binomial_by_products(n, k));
  }
}

TEST_CASE("symmetry, both Pascal rules and q = 1") {
  for (int n = 0; n <= 30; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(q_binomial(n, k) == q_binomial(n, n - k));
      CHECK(q_binomial(n, k).at_one() == binomial(n, k));
    }
  }
  for (int n = 0; n + 1 <= 30; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      CHECK(q_binomial(n + 1, k) == QLaurent::q_power(k) * q_binomial(n, k) + q_binomial(n, k - 1));
      CHECK(q_binomial(n + 1, k) == q_binomial(n, k) + QLaurent::q_power(n + 1 - k) * q_binomial(n, k - 1));
    }
  }
}

TEST_CASE("classical binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("rothe examples and sides") {
  auto [p0, s0] = rothe_sides(0);
  CHECK(p0 == XsPoly(1));
  CHECK(s0 == XsPoly(1));
  auto [p2, s2] = rothe_sides(2);
  const XsPoly expected = XsPoly::s(2) + XsPoly::monomial(ql({1, 1}), 1, 1) + XsPoly::monomial(ql({0, 1}), 2, 0);
  CHECK(p2 == expected);
  CHECK(s2 == expected);
  for (int n = 0; n <= 20; ++n) {
    auto [product, sum] = rothe_sides(n);
    CHECK(product == sum);
  }
}

TEST_CASE("subset_qsum") {
  for (int n = 0; n < 6; ++n) CHECK(subset_qsum(n, 0) == QLaurent(1));
  CHECK(subset_qsum(3, 2) == ql({1, 1, 1}, 3));
  CHECK(subset_qsum(6, 3) == QLaurent::q_power(6) * q_binomial(6, 3));
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(subset_qsum(n, k) == QLaurent::q_power(choose2(k + 1)) * q_binomial(n, k));
  }
}

TEST_CASE("gauss_coeff") {
  for (const auto& c : gauss_coeff(0, 8)) CHECK(c == QLaurent(1));
  CHECK(gauss_coeff(1, 2)[2] == ql({1, 1, 1}));
  CHECK(gauss_coeff(2, 2)[2] == ql({1, 1, 2, 1, 1}));
  for (int k = 0; k <= 6; ++k) {
    const auto coeffs = gauss_coeff(k, 20);
    REQUIRE(coeffs.size() == 21);
    for (int n = 0; n <= 20; ++n) CHECK(coeffs[n] == q_binomial(n + k, n));
  }
}

TEST_CASE("concurrent q_binomial calls agree with the product formula") {
  std::vector<std::jthread> threads;
  std::vector<int> bad(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([t, &bad] {
      for (int n = 36 - t; n >= 0; n -= 3) {
        for (int k = 0; k <= n; k += 5) {
          if (!(q_binomial(n, k) == binomial_by_products(n, k))) ++bad[t];
        }
      }
    });
  }
  threads.clear();
  for (int b : bad) CHECK(b == 0);
}
