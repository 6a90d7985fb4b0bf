#include "qfib/qlaurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qfib/errors.hpp"

namespace qfib {

QLaurent::QLaurent(const BigInt& c) {
  if (c != 0) coeffs_.push_back(c);
}

QLaurent QLaurent::monomial(const BigInt& c, int exponent) {
  QLaurent r(c);
  if (!r.is_zero()) r.low_ = exponent;
  return r;
}

QLaurent QLaurent::from_terms(const std::vector<std::pair<int, BigInt>>& terms) {
  QLaurent r;
  for (const auto& [e, c] : terms) r += monomial(c, e);
  return r;
}

void QLaurent::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t QLaurent::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
}

BigInt QLaurent::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, BigInt>> QLaurent::terms() const {
  std::vector<std::pair<int, BigInt>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

QLaurent& QLaurent::operator+=(const QLaurent& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(low_, other.low_);
  const int hi = std::max(high_exponent(), other.high_exponent());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), BigInt(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  const auto base = static_cast<std::size_t>(other.low_ - lo);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[base + i] += other.coeffs_[i];
  normalize();
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& other) { return *this += -other; }

QLaurent& QLaurent::operator*=(const QLaurent& other) { return *this = *this * other; }

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.normalize();
  return r;
}

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QLaurent QLaurent::shifted(int e) const {
  QLaurent r = *this;
  if (!r.is_zero()) r.low_ += e;
  return r;
}

BigRational QLaurent::eval(const BigRational& qv) const {
  if (is_zero()) return 0;
  if (qv == 0) {
    if (low_ < 0) throw ZeroBase("negative power of q evaluated at q = 0");
    return low_ == 0 ? BigRational(coeffs_.front()) : BigRational(0);
  }
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * qv + BigRational(*it);
  BigRational scale = 1;
  const BigRational base = low_ >= 0 ? qv : BigRational(1) / qv;
  for (int i = 0; i < std::abs(low_); ++i) scale *= base;
  return acc * scale;
}

BigInt QLaurent::at_one() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

QLaurent exact_div(const QLaurent& a, const QLaurent& b) {
  if (b.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (a.is_zero()) return {};
  // Strip the q-power units and divide the remaining polynomials from the top.
  std::vector<BigInt> rem;
  for (int e = a.low_exponent(); e <= a.high_exponent(); ++e) rem.push_back(a.coeff(e));
  std::vector<BigInt> div;
  for (int e = b.low_exponent(); e <= b.high_exponent(); ++e) div.push_back(b.coeff(e));
  if (rem.size() < div.size()) throw NotDivisible(render(a) + " is not divisible by " + render(b));

  const std::size_t qlen = rem.size() - div.size() + 1;
  std::vector<BigInt> quot(qlen);
  const BigInt& lead = div.back();
  for (std::size_t i = qlen; i-- > 0;) {
    BigInt& top = rem[i + div.size() - 1];
    if (top % lead != 0) throw NotDivisible(render(a) + " is not divisible by " + render(b));
    quot[i] = top / lead;
    if (quot[i] == 0) continue;
    for (std::size_t j = 0; j < div.size(); ++j) rem[i + j] -= quot[i] * div[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; })) {
    throw NotDivisible(render(a) + " is not divisible by " + render(b));
  }
  std::vector<std::pair<int, BigInt>> terms;
  const int base = a.low_exponent() - b.low_exponent();
  for (std::size_t i = 0; i < quot.size(); ++i) terms.emplace_back(base + static_cast<int>(i), quot[i]);
  return QLaurent::from_terms(terms);
}

namespace {

std::string q_term(const BigInt& magnitude, int exponent) {
  std::ostringstream os;
  if (exponent == 0) {
    os << magnitude;
    return os.str();
  }
  if (magnitude != 1) os << magnitude << '*';
  os << 'q';
  if (exponent != 1) os << '^' << exponent;
  return os.str();
}

}  // namespace

std::string render(const QLaurent& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += q_term(magnitude, e);
    first = false;
  }
  return out;
}

}  // namespace qfib
