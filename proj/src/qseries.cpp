#include "qfib/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qfib/errors.hpp"
#include "qfib/families.hpp"

namespace qfib {

ZSeries::ZSeries(int order) : order_(order), coeffs_(static_cast<std::size_t>(order) + 1) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
}

ZSeries::ZSeries(int order, std::vector<XsPoly> coeffs) : ZSeries(order) {
  for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
}

ZSeries ZSeries::monomial(int order, const XsPoly& c, int power) {
  ZSeries r(order);
  if (power >= 0 && power <= order) r.coeffs_[power] = c;
  return r;
}

ZSeries operator+(const ZSeries& a, const ZSeries& b) {
  ZSeries r(std::min(a.order_, b.order_));
  for (int n = 0; n <= r.order_; ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  return r;
}

ZSeries operator-(const ZSeries& a, const ZSeries& b) {
  ZSeries r(std::min(a.order_, b.order_));
  for (int n = 0; n <= r.order_; ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
  return r;
}

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
  ZSeries r(std::min(a.order_, b.order_));
  for (int i = 0; i <= r.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= r.order_; ++j) {
      if (!b.coeffs_[j].is_zero()) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

bool operator==(const ZSeries& a, const ZSeries& b) {
  const int order = std::min(a.order_, b.order_);
  for (int n = 0; n <= order; ++n) {
    if (!(a.coeffs_[n] == b.coeffs_[n])) return false;
  }
  return true;
}

ZSeries reciprocal(const ZSeries& a) {
  const XsPoly& c0 = a.coeff(0);
  int unit = 0;
  if (c0 == XsPoly(1)) unit = 1;
  if (c0 == XsPoly(-1)) unit = -1;
  if (unit == 0) throw NonUnitConstant("constant term " + render(c0) + " is not a unit");
  std::vector<XsPoly> r{XsPoly(unit)};
  for (int n = 1; n <= a.order(); ++n) {
    XsPoly acc;
    for (int k = 1; k <= n; ++k) {
      if (!a.coeff(k).is_zero()) acc += a.coeff(k) * r[n - k];
    }
    r.push_back(XsPoly(-unit) * acc);
  }
  return ZSeries(a.order(), std::move(r));
}

ZSeries series_op(const ZSeries& a, const ZSeries& b, SeriesOp kind) {
  switch (kind) {
    case SeriesOp::add: return a + b;
    case SeriesOp::mul: return a * b;
    case SeriesOp::reciprocal: return reciprocal(a);
  }
  return a;
}

namespace {

constexpr std::pair<GfId, std::string_view> kGfNames[] = {
    {GfId::fib_num, "fib_num"}, {GfId::lucas_num, "lucas_num"}, {GfId::f_xs, "f_xs"},
    {GfId::L_xs, "L_xs"},       {GfId::f_carlitz, "f_carlitz"}, {GfId::fib, "fib"},
};

// 1 - a z - b z^2
ZSeries quadratic_denominator(int order, const XsPoly& a, const XsPoly& b) {
  return ZSeries(order, {XsPoly(1), -a, -b});
}

}  // namespace

std::string_view to_string(GfId id) {
  for (const auto& [g, name] : kGfNames) {
    if (g == id) return name;
  }
  return "?";
}

GfId parse_gf_id(std::string_view name) {
  for (const auto& [g, n] : kGfNames) {
    if (n == name) return g;
  }
  throw std::invalid_argument("unknown generating function '" + std::string(name) + "'");
}

namespace {

// 1 / (1 - q^i x z)
ZSeries geometric_factor(int i, int order) {
  return reciprocal(ZSeries(order, {XsPoly(1), -XsPoly::monomial(QLaurent::q_power(i), 1, 0)}));
}

ZSeries summand_numerator(GfId id, int k, int order) {
  if (id != GfId::f_carlitz && id != GfId::fib) throw std::invalid_argument("gf_summand needs f_carlitz or fib");
  const int e = id == GfId::f_carlitz ? k * k : choose2(k + 1);
  return ZSeries::monomial(order, XsPoly::monomial(QLaurent::q_power(e), 0, k), 2 * k);
}

}  // namespace

ZSeries gf_summand(GfId id, int k, int order) {
  ZSeries r = summand_numerator(id, k, order);
  for (int i = 0; i <= k; ++i) r = r * geometric_factor(i, order);
  return r;
}

ZSeries gf(GfId id, int order) {
  const XsPoly x = XsPoly::x();
  const XsPoly s = XsPoly::s();
  switch (id) {
    case GfId::fib_num:
      return reciprocal(quadratic_denominator(order, 1, 1));
    case GfId::lucas_num:
      return ZSeries(order, {2, -1}) * reciprocal(quadratic_denominator(order, 1, 1));
    case GfId::f_xs:
      return reciprocal(quadratic_denominator(order, x, s));
    case GfId::L_xs:
      return ZSeries(order, {2, -x}) * reciprocal(quadratic_denominator(order, x, s));
    case GfId::f_carlitz:
    case GfId::fib: {
      ZSeries sum(order);
      ZSeries denominators = ZSeries::monomial(order, 1, 0);
      for (int k = 0; 2 * k <= order; ++k) {
        denominators = denominators * geometric_factor(k, order);
        sum = sum + summand_numerator(id, k, order) * denominators;
      }
      return sum;
    }
  }
  return ZSeries(order);
}

XsPoly gf_expected(GfId id, int n) {
  switch (id) {
    case GfId::fib_num: return family(FamilyId::fib_num, n + 1);
    case GfId::lucas_num: return family(FamilyId::lucas_num, n);
    case GfId::f_xs: return family(FamilyId::f_xs, n);
    case GfId::L_xs: return family(FamilyId::L_xs, n);
    case GfId::f_carlitz: return family(FamilyId::f_carlitz, n);
    case GfId::fib: return family(FamilyId::fib, n);
  }
  return {};
}

}  // namespace qfib
