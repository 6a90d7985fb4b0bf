#pragma once

#include "qfib/xspoly.hpp"

namespace qfib {

/// 2x2 matrix over XsPoly, row-major.
struct Mat2 {
  XsPoly a11, a12, a21, a22;

  static Mat2 identity() { return {1, 0, 0, 1}; }

  /// The companion matrix [[0, 1], [s, x]] of the Fibonacci recurrence.
  static Mat2 fibonacci(const XsPoly& x, const XsPoly& s) { return {0, 1, s, x}; }

  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a11 * n.a11 + m.a12 * n.a21, m.a11 * n.a12 + m.a12 * n.a22,
            m.a21 * n.a11 + m.a22 * n.a21, m.a21 * n.a12 + m.a22 * n.a22};
  }
  friend Mat2 operator+(const Mat2& m, const Mat2& n) {
    return {m.a11 + n.a11, m.a12 + n.a12, m.a21 + n.a21, m.a22 + n.a22};
  }

  XsPoly det() const { return a11 * a22 - a12 * a21; }
  XsPoly trace() const { return a11 + a22; }

  bool operator==(const Mat2&) const = default;
};

Mat2 power(const Mat2& m, int n);

/// Applies a ring substitution to every entry.
template <class F>
Mat2 map_entries(const Mat2& m, F&& f) {
  return {f(m.a11), f(m.a12), f(m.a21), f(m.a22)};
}

}  // namespace qfib
