#pragma once

#include <utility>
#include <vector>

#include "qfib/qlaurent.hpp"
#include "qfib/xspoly.hpp"

namespace qfib {

/// Classical binomial coefficient; zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
QLaurent q_int(int n);

/// [n]_q! = [1]_q [2]_q ... [n]_q.
QLaurent q_factorial(int n);

/**
 * Gaussian binomial [n, k]_q, zero unless 0 <= k <= n.
 *
 * Built row by row from [n+1, k] = q^k [n, k] + [n, k-1] and memoized in a
 * process-wide table. The table is an internal cache; concurrent callers see
 * the same values they would get without it.
 */
QLaurent q_binomial(int n, int k);

/**
 * Both sides of the Rothe product expansion with y in the s slot:
 * first  = (y + x)(y + q x) ... (y + q^(n-1) x), expanded,
 * second = sum_k q^C(k,2) [n, k] x^k y^(n-k).
 */
std::pair<XsPoly, XsPoly> rothe_sides(int n);

/// Sum of q^(i1 + ... + ik) over all k-subsets of {1..n}, by enumeration.
QLaurent subset_qsum(int n, int k);

/**
 * First order+1 coefficients (in x) of 1 / ((1-x)(1-qx)...(1-q^k x)), obtained
 * by multiplying the geometric series of the factors.
 */
std::vector<QLaurent> gauss_coeff(int k, int order);

}  // namespace qfib
