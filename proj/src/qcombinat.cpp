#include "qfib/qcombinat.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace qfib {

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

QLaurent q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: negative argument");
  QLaurent r;
  for (int i = 0; i < n; ++i) r += QLaurent::q_power(i);
  return r;
}

QLaurent q_factorial(int n) {
  QLaurent r(1);
  for (int i = 2; i <= n; ++i) r *= q_int(i);
  return r;
}

namespace {

class QBinomTable {
 public:
  QLaurent get(int n, int k) {
    if (n < 0 || k < 0 || k > n) return {};
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<int>(rows_.size())) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) extend();
    return rows_[n][k];
  }

 private:
  void extend() {
    const int n = static_cast<int>(rows_.size());
    std::vector<QLaurent> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    row[n] = 1;
    for (int k = 1; k < n; ++k) row[k] = rows_[n - 1][k].shifted(k) + rows_[n - 1][k - 1];
    rows_.push_back(std::move(row));
  }

  std::shared_mutex mutex_;
  std::vector<std::vector<QLaurent>> rows_;
};

QBinomTable& table() {
  static QBinomTable instance;
  return instance;
}

void subset_walk(int next, int n, int remaining, int exponent_sum, std::vector<BigInt>& hist) {
  if (remaining == 0) {
    hist[exponent_sum] += 1;
    return;
  }
  for (int i = next; i <= n - remaining + 1; ++i) subset_walk(i + 1, n, remaining - 1, exponent_sum + i, hist);
}

}  // namespace

QLaurent q_binomial(int n, int k) { return table().get(n, k); }

std::pair<XsPoly, XsPoly> rothe_sides(int n) {
  XsPoly product = 1;
  for (int i = 0; i < n; ++i) product *= XsPoly::s() + XsPoly::monomial(QLaurent::q_power(i), 1, 0);
  XsPoly sum;
  for (int k = 0; k <= n; ++k) sum += XsPoly::monomial(q_binomial(n, k).shifted(choose2(k)), k, n - k);
  return {product, sum};
}

QLaurent subset_qsum(int n, int k) {
  if (k < 0 || k > n) return {};
  std::vector<BigInt> hist(static_cast<std::size_t>(n * (n + 1) / 2) + 1);
  subset_walk(1, n, k, 0, hist);
  std::vector<std::pair<int, BigInt>> terms;
  for (std::size_t e = 0; e < hist.size(); ++e) {
    if (hist[e] != 0) terms.emplace_back(static_cast<int>(e), hist[e]);
  }
  return QLaurent::from_terms(terms);
}

std::vector<QLaurent> gauss_coeff(int k, int order) {
  std::vector<QLaurent> series(static_cast<std::size_t>(order) + 1);
  series[0] = 1;
  for (int i = 0; i <= k; ++i) {
    // Multiply by 1/(1 - q^i x) = sum_n q^(i n) x^n.
    std::vector<QLaurent> next(series.size());
    for (int a = 0; a <= order; ++a) {
      if (series[a].is_zero()) continue;
      for (int b = 0; a + b <= order; ++b) next[a + b] += series[a].shifted(i * b);
    }
    series = std::move(next);
  }
  return series;
}

}  // namespace qfib
