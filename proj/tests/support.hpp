#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "qfib/mat2.hpp"
#include "qfib/xspoly.hpp"

namespace qfib::testing {

/// c0 + c1 q + c2 q^2 + ... shifted by q^low.
inline QLaurent ql(std::initializer_list<int> coeffs, int low = 0) {
  std::vector<std::pair<int, BigInt>> terms;
  int e = low;
  for (int c : coeffs) terms.emplace_back(e++, BigInt(c));
  return QLaurent::from_terms(terms);
}

inline XsPoly term(const QLaurent& c, int dx, int ds) { return XsPoly::monomial(c, dx, ds); }

/// Seeded generator of small random polynomials for property tests.
class PolyGen {
 public:
  explicit PolyGen(unsigned seed) : rng_(seed) {}

  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  QLaurent laurent(int max_terms = 3, int lo = -2, int hi = 4) {
    std::vector<std::pair<int, BigInt>> terms;
    const int count = range(1, max_terms);
    for (int i = 0; i < count; ++i) terms.emplace_back(range(lo, hi), BigInt(range(-5, 5)));
    return QLaurent::from_terms(terms);
  }

  XsPoly poly(int max_terms = 4, int max_deg = 3) {
    XsPoly p;
    const int count = range(0, max_terms);
    for (int i = 0; i < count; ++i) p += XsPoly::monomial(laurent(), range(0, max_deg), range(0, max_deg));
    return p;
  }

  /// Never zero.
  QLaurent nonzero_laurent() {
    QLaurent c;
    while (c.is_zero()) c = laurent();
    return c;
  }

  Mat2 mat() { return {poly(), poly(), poly(), poly()}; }

 private:
  std::mt19937 rng_;
};

inline bool canonical(const XsPoly& p) {
  for (const auto& [m, c] : p.terms()) {
    if (c.is_zero() || m.x < 0 || m.s < 0) return false;
    for (const auto& [e, v] : c.terms()) {
      if (v == 0) return false;
    }
  }
  return true;
}

}  // namespace qfib::testing
