#pragma once

#include <string_view>
#include <vector>

#include "qfib/xspoly.hpp"

namespace qfib {

/// Power series in z truncated at an explicit order, with XsPoly coefficients.
class ZSeries {
 public:
  explicit ZSeries(int order);
  ZSeries(int order, std::vector<XsPoly> coeffs);

  /// c * z^power, truncated to order.
  static ZSeries monomial(int order, const XsPoly& c, int power);

  int order() const { return order_; }
  const XsPoly& coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<XsPoly>& coeffs() const { return coeffs_; }

  friend ZSeries operator+(const ZSeries& a, const ZSeries& b);
  friend ZSeries operator-(const ZSeries& a, const ZSeries& b);
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b);

  /// Coefficient-wise up to the common order.
  friend bool operator==(const ZSeries& a, const ZSeries& b);

 private:
  int order_;
  std::vector<XsPoly> coeffs_;
};

/// Multiplicative inverse up to the order. Throws NonUnitConstant unless the constant term is +1 or -1.
ZSeries reciprocal(const ZSeries& a);

enum class SeriesOp { add, mul, reciprocal };
/// `b` is ignored for reciprocal.
ZSeries series_op(const ZSeries& a, const ZSeries& b, SeriesOp kind);

enum class GfId { fib_num, lucas_num, f_xs, L_xs, f_carlitz, fib };

std::string_view to_string(GfId id);
/// Throws std::invalid_argument for an unknown name.
GfId parse_gf_id(std::string_view name);

/**
 * Generating function expanded to the given order. The classical ones are
 * rational and go through reciprocal; f_carlitz and fib are summed from
 * q^e(k) s^k z^(2k) / ((1 - xz)(1 - qxz)...(1 - q^k xz)) with e(k) = k^2
 * and C(k+1, 2) respectively.
 */
ZSeries gf(GfId id, int order);

/// The k-th summand of gf(f_carlitz | fib) on its own.
ZSeries gf_summand(GfId id, int k, int order);

/// The family value that coefficient n of gf(id) is expected to equal.
XsPoly gf_expected(GfId id, int n);

}  // namespace qfib
