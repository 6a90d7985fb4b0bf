#pragma once

#include <map>
#include <string>

#include "qfib/qlaurent.hpp"

namespace qfib {

/// Exponent pair of a monomial x^x * s^s.
struct Monomial {
  int x = 0;
  int s = 0;
  bool operator==(const Monomial&) const = default;
};

/// Orders monomials the way they are rendered: x-degree descending, then s-degree ascending.
struct RenderOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.x != b.x ? a.x > b.x : a.s < b.s;
  }
};

/**
 * Sparse polynomial in x and s over QLaurent.
 *
 * Every family in the library is a value of this type. The Rogers-Szegő
 * polynomials use the s slot for their second variable y. No stored
 * coefficient is zero.
 */
class XsPoly {
 public:
  using TermMap = std::map<Monomial, QLaurent, RenderOrder>;

  XsPoly() = default;
  XsPoly(int c) : XsPoly(QLaurent(c)) {}  // NOLINT(google-explicit-constructor)
  XsPoly(const QLaurent& c);              // NOLINT(google-explicit-constructor)

  static XsPoly monomial(const QLaurent& c, int deg_x, int deg_s);
  static XsPoly x(int power = 1) { return monomial(1, power, 0); }
  static XsPoly s(int power = 1) { return monomial(1, 0, power); }
  static XsPoly q(int power = 1) { return XsPoly(QLaurent::q_power(power)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  QLaurent coeff(int deg_x, int deg_s) const;
  /// Maximum x-degree / s-degree over stored terms; -1 for the zero polynomial.
  int deg_x() const;
  int deg_s() const;
  /// True when no q-exponent anywhere is negative.
  bool is_q_polynomial() const;

  XsPoly& operator+=(const XsPoly& other);
  XsPoly& operator-=(const XsPoly& other);
  XsPoly& operator*=(const XsPoly& other) { return *this = *this * other; }

  friend XsPoly operator+(XsPoly a, const XsPoly& b) { return a += b; }
  friend XsPoly operator-(XsPoly a, const XsPoly& b) { return a -= b; }
  friend XsPoly operator*(const XsPoly& a, const XsPoly& b);
  XsPoly operator-() const;

  bool operator==(const XsPoly&) const = default;

 private:
  void add_term(const Monomial& m, const QLaurent& c);

  TermMap terms_;
};

enum class PolyOp { add, sub, mul };
XsPoly poly_op(const XsPoly& p, const XsPoly& r, PolyOp kind);

enum class Var { x, s };

/// Replaces var by q^j * var. A ring homomorphism; j may be negative.
XsPoly subst_scale(const XsPoly& p, Var var, int j);

/// Substitutes x := a and s := b and expands.
XsPoly compose(const XsPoly& p, const XsPoly& a, const XsPoly& b);

/// Exact rational value at (q, x, s). Throws ZeroBase for q = 0 against a negative q-power.
BigRational eval_point(const XsPoly& p, const BigRational& qv, const BigRational& xv,
                       const BigRational& sv);

/// Substitutes x and s by Laurent polynomials in q, leaving a single QLaurent.
QLaurent specialize_xs(const XsPoly& p, const QLaurent& xv, const QLaurent& sv);

/// Sets q = 1 in every coefficient.
XsPoly at_q_one(const XsPoly& p);

/// The constant (x^0 s^0) coefficient.
inline QLaurent constant_term(const XsPoly& p) { return p.coeff(0, 0); }

/**
 * Canonical text form, e.g. `x^4 + (q + q^2 + q^3)*s*x^2 + q^3*s^2`.
 *
 * Terms follow RenderOrder. A coefficient with more than one q-term is
 * parenthesized; a single-term coefficient carries its sign into the
 * joining operator and is dropped when it is exactly 1.
 */
std::string render(const XsPoly& p);

}  // namespace qfib
