#include "qfib/operators.hpp"

#include <stdexcept>

#include "qfib/qcombinat.hpp"

namespace qfib {

LinearOp LinearOp::identity() {
  return LinearOp([](const XsPoly& p) { return p; });
}

LinearOp LinearOp::mul_x() {
  return LinearOp([](const XsPoly& p) { return XsPoly::x() * p; });
}

LinearOp LinearOp::mul_s() {
  return LinearOp([](const XsPoly& p) { return XsPoly::s() * p; });
}

LinearOp LinearOp::scale(const QLaurent& c) {
  return LinearOp([c](const XsPoly& p) { return XsPoly(c) * p; });
}

LinearOp LinearOp::d_q() { return LinearOp(q_derivative); }

LinearOp LinearOp::eps_q() { return LinearOp(qfib::eps_q); }

LinearOp operator*(const LinearOp& a, const LinearOp& b) {
  return LinearOp([a, b](const XsPoly& p) { return a(b(p)); });
}

LinearOp operator+(const LinearOp& a, const LinearOp& b) {
  return LinearOp([a, b](const XsPoly& p) { return a(p) + b(p); });
}

XsPoly LinearOp::apply_power(int n, const XsPoly& p) const {
  XsPoly r = p;
  for (int i = 0; i < n; ++i) r = fn_(r);
  return r;
}

XsPoly q_derivative(const XsPoly& p) {
  XsPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (m.x > 0) r += XsPoly::monomial(c * q_int(m.x), m.x - 1, m.s);
  }
  return r;
}

XsPoly eps_q(const XsPoly& p) { return subst_scale(p, Var::x, 1); }

const LinearOp& fib_raising_op() {
  static const LinearOp op =
      LinearOp::mul_x() + LinearOp::mul_s() * LinearOp::scale(QLaurent::q_power(1) - 1) * LinearOp::d_q();
  return op;
}

XsPoly t_s_transform(const XsPoly& p) {
  if (p.is_zero()) return {};
  // images[n] = A^n 1
  std::vector<XsPoly> images{XsPoly(1)};
  for (int n = 1; n <= p.deg_x(); ++n) images.push_back(fib_raising_op()(images.back()));
  XsPoly r;
  for (const auto& [m, c] : p.terms()) r += XsPoly::monomial(c, 0, m.s) * images[m.x];
  return r;
}

XsPoly rs_operator(int n) {
  static const LinearOp op = LinearOp::mul_x() + LinearOp::mul_s() * LinearOp::eps_q();
  return op.apply_power(n, 1);
}

XsPoly phi_map(const XsPoly& p, Direction direction) {
  const int sign = direction == Direction::forward ? 1 : -1;
  XsPoly r;
  for (const auto& [m, c] : p.terms()) r += XsPoly::monomial(c.shifted(sign * choose2(m.s)), m.x, m.s);
  return r;
}

std::vector<XsPoly> expand_in_basis(const XsPoly& p, const std::function<XsPoly(int)>& basis) {
  const int d = p.deg_x();
  if (d < 0) return {};
  std::vector<XsPoly> coeffs(static_cast<std::size_t>(d) + 1);
  XsPoly rest = p;
  for (int i = d; i >= 0; --i) {
    XsPoly c;
    for (const auto& [m, k] : rest.terms()) {
      if (m.x == i) c += XsPoly::monomial(k, 0, m.s);
    }
    if (c.is_zero()) continue;
    const XsPoly b = basis(i);
    if (b.deg_x() != i || !(b.coeff(i, 0) == QLaurent(1))) throw std::logic_error("basis element is not monic");
    rest -= c * b;
    coeffs[i] = std::move(c);
  }
  if (!rest.is_zero()) throw std::logic_error("basis expansion left a remainder");
  return coeffs;
}

XsPoly moment(MomentFamily basis, int n) {
  if (n < 0) throw std::invalid_argument("moment index must be nonnegative");
  FamilyId id{};
  switch (basis) {
    case MomentFamily::f_xs: id = FamilyId::f_xs; break;
    case MomentFamily::l_xs: id = FamilyId::l_xs; break;
    case MomentFamily::fib: id = FamilyId::fib; break;
    case MomentFamily::luc: id = FamilyId::luc; break;
    case MomentFamily::f_carlitz: id = FamilyId::f_carlitz; break;
  }
  return expand_in_basis(XsPoly::x(n), [id](int i) { return family(id, i); }).front();
}

}  // namespace qfib
