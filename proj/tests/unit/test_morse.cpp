#include <doctest.h>

#include <set>

#include "../support.hpp"
#include "qfib/families.hpp"
#include "qfib/morse.hpp"
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

std::vector<std::string> strings(const std::vector<MorseSeq>& seqs) {
  std::vector<std::string> out;
  for (const auto& c : seqs) out.push_back(c.to_string());
  return out;
}

// f_n at x = s = 1 by the plain recurrence.
BigInt fib_count(int n) {
  BigInt a = 1, b = 1;
  for (int i = 1; i < n; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return n == 0 ? BigInt(1) : b;
}
}  // namespace

TEST_CASE("MorseSeq basics") {
  const MorseSeq c = MorseSeq::parse(".-..-");
  CHECK(c.element_count() == 5);
  CHECK(c.dash_count() == 2);
  CHECK(c.length() == 7);
  CHECK(c.dash_positions() == std::vector<int>{2, 5});
  CHECK(c.to_string() == ".-..-");
  CHECK_THROWS_AS(MorseSeq::parse(".x"), std::invalid_argument);
}

TEST_CASE("enumerate examples") {
  CHECK(strings(enumerate(0)) == std::vector<std::string>{""});
  CHECK(strings(enumerate(4)) == std::vector<std::string>{"....", "..-", ".-.", "-..", "--"});
  CHECK(enumerate(20).size() == 10946);
  CHECK_THROWS(enumerate(-1));
}

TEST_CASE("enumeration is complete and duplicate free") {
  for (int n = 0; n <= 18; ++n) {
    const auto seqs = enumerate(n);
    std::set<std::string> seen;
    for (const auto& c : seqs) {
      CHECK(c.length() == n);
      seen.insert(c.to_string());
    }
    CHECK(seen.size() == seqs.size());
    CHECK(BigInt(seqs.size()) == fib_count(n));
  }
}

TEST_CASE("weight examples") {
  const MorseSeq dots = MorseSeq::parse("..");
  for (WeightKind k : {WeightKind::w, WeightKind::v, WeightKind::W}) CHECK(weight(dots, k) == XsPoly::x(2));
  CHECK(weight(MorseSeq::parse("--"), WeightKind::v) == term(QLaurent::q_power(4), 0, 2));
  CHECK(weight(MorseSeq::parse(".-"), WeightKind::W) == term(QLaurent::q_power(2), 1, 1));
  CHECK(weight(MorseSeq::parse("-."), WeightKind::W) == term(QLaurent::q_power(1), 1, 1));
  CHECK(weight(MorseSeq::parse(".-"), WeightKind::W) + weight(MorseSeq::parse("-."), WeightKind::W) ==
        term(ql({0, 1, 1}), 1, 1));
  CHECK(weight(MorseSeq::parse("-.-"), WeightKind::w) == term(1, 1, 2));
}

TEST_CASE("oracle examples") {
  CHECK(oracle(OracleKind::periodic_count, 6) == XsPoly(18));
  CHECK(oracle(OracleKind::v_sum, 3) == XsPoly::x(3) + term(ql({0, 1, 1}), 1, 1));
  CHECK(oracle(OracleKind::W_sum, 5) == XsPoly::x(4) + term(ql({0, 1, 1, 1}), 2, 1) + term(QLaurent::q_power(3), 0, 2));
  CHECK(oracle(OracleKind::W_sum, 5) == fam(F::Fib, 5));
  CHECK(oracle(OracleKind::W_sum, 0).is_zero());
  CHECK(oracle(OracleKind::count, 0) == XsPoly(1));
  CHECK_THROWS(oracle(OracleKind::count, -1));
}

TEST_CASE("oracles agree with the families") {
  for (int n = 0; n <= 20; ++n) CHECK(oracle(OracleKind::count, n) == XsPoly(specialize_xs(fam(F::f_xs, n), 1, 1)));
  for (int n = 0; n <= 18; ++n) CHECK(oracle(OracleKind::w_sum, n) == fam(F::f_xs, n));
  for (int n = 0; n <= 16; ++n) CHECK(oracle(OracleKind::v_sum, n) == fam(F::f_carlitz, n));
  for (int n = 0; n <= 17; ++n) CHECK(oracle(OracleKind::W_sum, n) == fam(F::Fib, n));
  for (int n = 2; n <= 16; ++n) {
    CHECK(oracle(OracleKind::periodic_w, n) == fam(F::f_xs, n) + s * fam(F::f_xs, n - 2));
    CHECK(oracle(OracleKind::periodic_count, n) == fam(F::lucas_num, n));
  }
}

TEST_CASE("periodic covers split into linear and wrapped") {
  for (int n = 2; n <= 12; ++n) {
    const auto covers = enumerate_periodic(n);
    int linear = 0, wrapped = 0;
    for (const auto& c : covers) (std::holds_alternative<LinearCover>(c) ? linear : wrapped)++;
    CHECK(linear == static_cast<int>(enumerate(n).size()));
    CHECK(wrapped == static_cast<int>(enumerate(n - 2).size()));
  }
}

TEST_CASE("first-element split of the v weights") {
  for (int n = 2; n <= 14; ++n) {
    CHECK(oracle(OracleKind::v_sum, n) == x * sq(oracle(OracleKind::v_sum, n - 1), 1) +
                                              XsPoly::q() * s * sq(oracle(OracleKind::v_sum, n - 2), 2));
  }
}

TEST_CASE("doubling split reproduces the doubling formula term by term") {
  for (int n = 0; n <= 8; ++n) {
    const auto groups = doubling_split(n);
    REQUIRE(groups.size() == static_cast<std::size_t>(n) + 1);
    XsPoly total;
    for (int k = 0; k <= n; ++k) {
      const XsPoly expected =
          XsPoly::monomial(q_binomial(n, k) * QLaurent::q_power(k * n), n - k, k) * fam(F::f_carlitz, n - k);
      CHECK(groups[k] == expected);
      total += groups[k];
    }
    CHECK(total == fam(F::f_carlitz, 2 * n));
  }
}
