#include "qfib/mat2.hpp"

namespace qfib {

Mat2 power(const Mat2& m, int n) {
  Mat2 result = Mat2::identity();
  Mat2 base = m;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace qfib
