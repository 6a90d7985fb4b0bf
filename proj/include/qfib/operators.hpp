#pragma once

#include <functional>
#include <vector>

#include "qfib/families.hpp"
#include "qfib/xspoly.hpp"

namespace qfib {

/**
 * Linear operator on XsPoly, built from a few primitives by composition,
 * sums and scalar multiples. Operators are applied eagerly; there is no
 * symbolic normal form.
 */
class LinearOp {
 public:
  using Fn = std::function<XsPoly(const XsPoly&)>;

  explicit LinearOp(Fn fn) : fn_(std::move(fn)) {}

  static LinearOp identity();
  static LinearOp mul_x();
  static LinearOp mul_s();
  static LinearOp scale(const QLaurent& c);
  static LinearOp d_q();
  static LinearOp eps_q();

  XsPoly operator()(const XsPoly& p) const { return fn_(p); }

  /// (a * b)(p) = a(b(p))
  friend LinearOp operator*(const LinearOp& a, const LinearOp& b);
  friend LinearOp operator+(const LinearOp& a, const LinearOp& b);

  /// this^n applied to p
  XsPoly apply_power(int n, const XsPoly& p) const;

 private:
  Fn fn_;
};

/// D_q x^n = [n]_q x^(n-1); s is left alone.
XsPoly q_derivative(const XsPoly& p);

/// x -> q x
XsPoly eps_q(const XsPoly& p);

/// The operator x + (q-1) s D_q.
const LinearOp& fib_raising_op();

/// T_s(s^k x^n) = s^k (x + (q-1) s D_q)^n 1, extended linearly.
XsPoly t_s_transform(const XsPoly& p);

/// (x + y eps_q)^n 1 with y in the s slot.
XsPoly rs_operator(int n);

enum class Direction { forward, inverse };

/// Multiplies the x^n s^k coefficient by q^(+-C(k,2)).
XsPoly phi_map(const XsPoly& p, Direction direction);

/**
 * Coefficients c_0..c_d of p = sum c_i basis(i) for a family whose i-th
 * member is monic of x-degree i. Each c_i is free of x.
 */
std::vector<XsPoly> expand_in_basis(const XsPoly& p, const std::function<XsPoly(int)>& basis);

enum class MomentFamily { f_xs, l_xs, fib, luc, f_carlitz };

/// Lambda(x^n) for the functional with Lambda(p_0) = 1, Lambda(p_i) = 0 otherwise.
XsPoly moment(MomentFamily basis, int n);

}  // namespace qfib
