#include "qfib/xspoly.hpp"

#include <algorithm>
#include <vector>

#include "qfib/errors.hpp"

namespace qfib {

XsPoly::XsPoly(const QLaurent& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0}, c);
}

XsPoly XsPoly::monomial(const QLaurent& c, int deg_x, int deg_s) {
  XsPoly r;
  if (!c.is_zero()) r.terms_.emplace(Monomial{deg_x, deg_s}, c);
  return r;
}

QLaurent XsPoly::coeff(int deg_x, int deg_s) const {
  auto it = terms_.find(Monomial{deg_x, deg_s});
  return it == terms_.end() ? QLaurent() : it->second;
}

int XsPoly::deg_x() const { return terms_.empty() ? -1 : terms_.begin()->first.x; }

int XsPoly::deg_s() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.s);
  return d;
}

bool XsPoly::is_q_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_polynomial(); });
}

void XsPoly::add_term(const Monomial& m, const QLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

XsPoly& XsPoly::operator+=(const XsPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

XsPoly& XsPoly::operator-=(const XsPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

XsPoly operator*(const XsPoly& a, const XsPoly& b) {
  XsPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(Monomial{ma.x + mb.x, ma.s + mb.s}, ca * cb);
  }
  return r;
}

XsPoly XsPoly::operator-() const {
  XsPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

XsPoly poly_op(const XsPoly& p, const XsPoly& r, PolyOp kind) {
  switch (kind) {
    case PolyOp::add: return p + r;
    case PolyOp::sub: return p - r;
    case PolyOp::mul: return p * r;
  }
  return {};
}

XsPoly subst_scale(const XsPoly& p, Var var, int j) {
  XsPoly r;
  for (const auto& [m, c] : p.terms()) {
    const int deg = var == Var::x ? m.x : m.s;
    r += XsPoly::monomial(c.shifted(j * deg), m.x, m.s);
  }
  return r;
}

namespace {

// powers[k] = base^k for k <= max_power
std::vector<XsPoly> power_table(const XsPoly& base, int max_power) {
  std::vector<XsPoly> powers{XsPoly(1)};
  for (int k = 1; k <= max_power; ++k) powers.push_back(powers.back() * base);
  return powers;
}

}  // namespace

XsPoly compose(const XsPoly& p, const XsPoly& a, const XsPoly& b) {
  if (p.is_zero()) return {};
  const auto pa = power_table(a, p.deg_x());
  const auto pb = power_table(b, p.deg_s());
  XsPoly r;
  for (const auto& [m, c] : p.terms()) r += XsPoly(c) * pa[m.x] * pb[m.s];
  return r;
}

BigRational eval_point(const XsPoly& p, const BigRational& qv, const BigRational& xv,
                       const BigRational& sv) {
  BigRational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    BigRational term = c.eval(qv);
    for (int i = 0; i < m.x; ++i) term *= xv;
    for (int i = 0; i < m.s; ++i) term *= sv;
    sum += term;
  }
  return sum;
}

QLaurent specialize_xs(const XsPoly& p, const QLaurent& xv, const QLaurent& sv) {
  QLaurent sum;
  std::vector<QLaurent> xp{QLaurent(1)};
  std::vector<QLaurent> sp{QLaurent(1)};
  for (const auto& [m, c] : p.terms()) {
    while (static_cast<int>(xp.size()) <= m.x) xp.push_back(xp.back() * xv);
    while (static_cast<int>(sp.size()) <= m.s) sp.push_back(sp.back() * sv);
    sum += c * xp[m.x] * sp[m.s];
  }
  return sum;
}

XsPoly at_q_one(const XsPoly& p) {
  XsPoly r;
  for (const auto& [m, c] : p.terms()) r += XsPoly::monomial(QLaurent(c.at_one()), m.x, m.s);
  return r;
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string out;
  auto append = [&out](char var, int power) {
    if (power == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (power != 1) out += '^' + std::to_string(power);
  };
  append('s', m.s);
  append('x', m.x);
  return out;
}

}  // namespace

std::string render(const XsPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const std::string mono = monomial_text(m);
    bool negative = false;
    std::string coeff;
    if (c.term_count() > 1) {
      coeff = "(" + render(c) + ")";
    } else {
      const auto [e, k] = c.terms().front();
      negative = k < 0;
      const QLaurent magnitude = QLaurent::monomial(negative ? BigInt(-k) : k, e);
      if (!(magnitude == QLaurent(1) && !mono.empty())) coeff = render(magnitude);
    }
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += coeff;
    if (!coeff.empty() && !mono.empty()) out += '*';
    out += mono;
    first = false;
  }
  return out;
}

}  // namespace qfib
