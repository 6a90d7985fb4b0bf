#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qfib {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/**
 * Laurent polynomial in q with arbitrary-precision integer coefficients.
 *
 * Stored densely: coeffs_[i] is the coefficient of q^(low_ + i). Both the
 * first and the last stored coefficient are nonzero, so the representation
 * is unique and defaulted equality is structural equality. The zero element
 * has no coefficients and low_ == 0.
 */
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(int c) : QLaurent(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  QLaurent(const BigInt& c);                // NOLINT(google-explicit-constructor)

  /// c * q^exponent
  static QLaurent monomial(const BigInt& c, int exponent);
  static QLaurent q_power(int exponent) { return monomial(1, exponent); }
  /// Builds from (exponent, coefficient) pairs; repeated exponents are summed.
  static QLaurent from_terms(const std::vector<std::pair<int, BigInt>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest/highest exponent with a nonzero coefficient. Zero has none; both return 0.
  int low_exponent() const { return low_; }
  int high_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const;
  BigInt coeff(int exponent) const;
  std::vector<std::pair<int, BigInt>> terms() const;

  bool is_constant() const { return coeffs_.size() == 1 && low_ == 0; }
  /// True when no exponent is negative.
  bool is_polynomial() const { return is_zero() || low_ >= 0; }

  QLaurent& operator+=(const QLaurent& other);
  QLaurent& operator-=(const QLaurent& other);
  QLaurent& operator*=(const QLaurent& other);

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  QLaurent operator-() const;

  /// Multiplication by q^e.
  QLaurent shifted(int e) const;

  /// Value at q = qv. Throws ZeroBase if qv == 0 and a negative power is present.
  BigRational eval(const BigRational& qv) const;
  /// Value at q = 1.
  BigInt at_one() const;

  bool operator==(const QLaurent&) const = default;

 private:
  void normalize();

  int low_ = 0;
  std::vector<BigInt> coeffs_;
};

/// Returns c with b * c == a. Throws NotDivisible when no Laurent polynomial c exists.
QLaurent exact_div(const QLaurent& a, const QLaurent& b);

/// Ascending q-powers, e.g. "1 + q + 2*q^2 - q^-1" ordered as "-q^-1 + 1 + q + 2*q^2".
std::string render(const QLaurent& p);

/// q^(n(n-1)/2) exponents show up everywhere.
constexpr int choose2(int n) { return n * (n - 1) / 2; }

}  // namespace qfib
