#include "qfib/families.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "qfib/errors.hpp"
#include "qfib/qcombinat.hpp"

namespace qfib {

namespace {

const XsPoly kX = XsPoly::x();
const XsPoly kS = XsPoly::s();

XsPoly term(const QLaurent& c, int deg_x, int deg_s) { return XsPoly::monomial(c, deg_x, deg_s); }

BigInt exact_int_div(const BigInt& a, const BigInt& b) {
  if (a % b != 0) throw std::logic_error("integer coefficient is not exact");
  return a / b;
}

// Sequence 0..nmax from two initial values and a step p_n = step(n, p_{n-1}, p_{n-2}).
template <class Step>
std::vector<XsPoly> iterate(int nmax, const XsPoly& p0, const XsPoly& p1, Step step) {
  std::vector<XsPoly> seq{p0};
  if (nmax >= 1) seq.push_back(p1);
  for (int n = 2; n <= nmax; ++n) seq.push_back(step(n, seq[n - 1], seq[n - 2]));
  return seq;
}

// ---- classical numbers -----------------------------------------------------

XsPoly fib_num_closed(int n) {
  BigInt sum = 0;
  for (int j = 0; 2 * j <= n - 1; ++j) sum += binomial(n - 1 - j, j);
  return QLaurent(sum);
}

std::vector<XsPoly> fib_num_rec(int nmax) {
  return iterate(nmax, 0, 1, [](int, const XsPoly& a, const XsPoly& b) { return a + b; });
}

XsPoly lucas_num_closed(int n) {
  if (n == 0) return 2;
  BigRational sum = 0;
  for (int j = 0; 2 * j <= n; ++j) sum += BigRational(binomial(n - j, j)) * n / (n - j);
  if (denominator(sum) != 1) throw std::logic_error("Lucas number sum is not an integer");
  return QLaurent(numerator(sum));
}

std::vector<XsPoly> lucas_num_rec(int nmax) {
  return iterate(nmax, 2, 1, [](int, const XsPoly& a, const XsPoly& b) { return a + b; });
}

// ---- classical polynomials ------------------------------------------------

XsPoly F_xs_closed(int n) {
  XsPoly r;
  for (int j = 0; 2 * j <= n - 1; ++j) r += term(QLaurent(binomial(n - 1 - j, j)), n - 1 - 2 * j, j);
  return r;
}

std::vector<XsPoly> F_xs_rec(int nmax) {
  return iterate(nmax, 0, 1, [](int, const XsPoly& a, const XsPoly& b) { return kX * a + kS * b; });
}

XsPoly f_xs_closed(int n) {
  XsPoly r;
  for (int j = 0; 2 * j <= n; ++j) r += term(QLaurent(binomial(n - j, j)), n - 2 * j, j);
  return r;
}

std::vector<XsPoly> f_xs_rec(int nmax) {
  return iterate(nmax, 1, kX, [](int, const XsPoly& a, const XsPoly& b) { return kX * a + kS * b; });
}

XsPoly L_xs_closed(int n) {
  if (n == 0) return 2;
  XsPoly r;
  for (int j = 0; 2 * j <= n; ++j) {
    r += term(QLaurent(exact_int_div(binomial(n - j, j) * n, n - j)), n - 2 * j, j);
  }
  return r;
}

std::vector<XsPoly> L_xs_rec(int nmax) {
  return iterate(nmax, 2, kX, [](int, const XsPoly& a, const XsPoly& b) { return kX * a + kS * b; });
}

XsPoly l_xs_closed(int n) { return n == 0 ? XsPoly(1) : L_xs_closed(n); }

std::vector<XsPoly> l_xs_rec(int nmax) {
  // t_0 = 2s, t_m = s otherwise
  return iterate(nmax, 1, kX, [](int n, const XsPoly& a, const XsPoly& b) {
    const XsPoly t = n - 2 == 0 ? XsPoly::monomial(2, 0, 1) : kS;
    return kX * a + t * b;
  });
}

// ---- Carlitz family ---------------------------------------------------------

XsPoly F_carlitz_closed(int n) {
  XsPoly r;
  for (int k = 0; 2 * k <= n - 1; ++k) r += term(q_binomial(n - 1 - k, k).shifted(k * k), n - 1 - 2 * k, k);
  return r;
}

std::vector<XsPoly> F_carlitz_rec(int nmax) {
  return iterate(nmax, 0, 1, [](int n, const XsPoly& a, const XsPoly& b) {
    return kX * a + XsPoly::monomial(QLaurent::q_power(n - 2), 0, 1) * b;
  });
}

XsPoly f_carlitz_closed(int n) {
  XsPoly r;
  for (int k = 0; 2 * k <= n; ++k) r += term(q_binomial(n - k, k).shifted(k * k), n - 2 * k, k);
  return r;
}

std::vector<XsPoly> f_carlitz_rec(int nmax) {
  return iterate(nmax, 1, kX, [](int n, const XsPoly& a, const XsPoly& b) {
    return kX * a + XsPoly::monomial(QLaurent::q_power(n - 1), 0, 1) * b;
  });
}

XsPoly L_carlitz_closed(int n) {
  if (n == 0) return 2;
  XsPoly r;
  for (int k = 0; 2 * k <= n; ++k) {
    const QLaurent c = exact_div(q_binomial(n - k, k) * q_int(n), q_int(n - k));
    r += term(c.shifted(k * k - k), n - 2 * k, k);
  }
  return r;
}

std::vector<XsPoly> L_carlitz_rec(int nmax) {
  // trace route: F_(n+1)(x, s) + s F_(n-1)(x, q s); L_0 is the trace of the identity
  const auto F = F_carlitz_rec(nmax + 1);
  std::vector<XsPoly> seq{2};
  for (int n = 1; n <= nmax; ++n) seq.push_back(F[n + 1] + kS * subst_scale(F[n - 1], Var::s, 1));
  return seq;
}

XsPoly LB_bold_closed(int n) {
  if (n == 0) return 2;
  XsPoly r;
  for (int k = 0; 2 * k <= n; ++k) {
    const QLaurent c = exact_div(q_binomial(n - k, k) * (q_int(n - k) + q_int(k)), q_int(n - k));
    r += term(c.shifted(k * k - k), n - 2 * k, k);
  }
  return r;
}

std::vector<XsPoly> LB_bold_rec(int nmax) {
  return iterate(nmax, 2, kX, [](int n, const XsPoly& a, const XsPoly& b) {
    return kX * a + XsPoly::monomial(QLaurent::q_power(n - 2), 0, 1) * b;
  });
}

XsPoly LB_closed(int n) {
  if (n == 0) return 2;
  XsPoly r;
  for (int k = 0; 2 * k <= n; ++k) {
    const QLaurent num = q_binomial(n - k, k) * (q_int(n - k) + q_int(k).shifted(n - 2 * k));
    r += term(exact_div(num, q_int(n - k)).shifted(k * k), n - 2 * k, k);
  }
  return r;
}

std::vector<XsPoly> LB_rec(int nmax) {
  return iterate(nmax, 2, kX, [](int, const XsPoly& a, const XsPoly& b) {
    return kX * subst_scale(a, Var::s, 1) + XsPoly::monomial(QLaurent::q_power(1), 0, 1) * subst_scale(b, Var::s, 2);
  });
}

// ---- Fib / Luc family -------------------------------------------------------

XsPoly Fib_closed(int n) {
  XsPoly r;
  for (int k = 0; 2 * k <= n - 1; ++k) {
    r += term(q_binomial(n - 1 - k, k).shifted(choose2(k + 1)), n - 1 - 2 * k, k);
  }
  return r;
}

XsPoly fib_step(int, const XsPoly& a, const XsPoly& b) {
  return kX * subst_scale(a, Var::s, 1) + XsPoly::monomial(QLaurent::q_power(1), 0, 1) * subst_scale(b, Var::s, 1);
}

std::vector<XsPoly> Fib_rec(int nmax) { return iterate(nmax, 0, 1, fib_step); }

XsPoly fib_closed(int n) {
  XsPoly r;
  for (int k = 0; 2 * k <= n; ++k) r += term(q_binomial(n - k, k).shifted(choose2(k + 1)), n - 2 * k, k);
  return r;
}

std::vector<XsPoly> fib_rec(int nmax) { return iterate(nmax, 1, kX, fib_step); }

XsPoly Luc_closed(int n) {
  if (n == 0) return 2;
  XsPoly r;
  for (int j = 0; 2 * j <= n; ++j) {
    const QLaurent c = exact_div(q_binomial(n - j, j) * q_int(n), q_int(n - j));
    r += term(c.shifted(choose2(j)), n - 2 * j, j);
  }
  return r;
}

std::vector<XsPoly> Luc_rec(int nmax) {
  const auto F = Fib_rec(nmax + 1);
  std::vector<XsPoly> seq{2};
  for (int n = 1; n <= nmax; ++n) seq.push_back(F[n + 1] + kS * F[n - 1]);
  return seq;
}

XsPoly luc_closed(int n) { return n == 0 ? XsPoly(1) : Luc_closed(n); }

std::vector<XsPoly> luc_rec(int nmax) {
  auto seq = Luc_rec(nmax);
  seq[0] = 1;
  return seq;
}

XsPoly H_closed(int n) {
  XsPoly r;
  for (int k = 0; 2 * k <= n; ++k) {
    const XsPoly sign_s = XsPoly::monomial(k % 2 == 0 ? 1 : -1, 0, k);
    r += sign_s * XsPoly(q_binomial(n, k)) * l_xs_closed(n - 2 * k);
  }
  return r;
}

std::vector<XsPoly> H_rec(int nmax) {
  return iterate(nmax, 1, kX, [](int n, const XsPoly& a, const XsPoly& b) {
    return kX * a + XsPoly::monomial(QLaurent(1) - QLaurent::q_power(n - 1), 0, 1) * b;
  });
}

XsPoly RS_closed(int n) {
  XsPoly r;
  for (int k = 0; k <= n; ++k) r += term(q_binomial(n, k), k, n - k);
  return r;
}

std::vector<XsPoly> RS_rec(int nmax) {
  return iterate(nmax, 1, kX + kS, [](int n, const XsPoly& a, const XsPoly& b) {
    return (kX + kS) * a + XsPoly::monomial(QLaurent::q_power(n - 1) - 1, 1, 1) * b;
  });
}

// ---- cache and fault injection ---------------------------------------------

class FamilyCache {
 public:
  std::optional<XsPoly> find(FamilyId id, int n, Mode mode) {
    std::shared_lock lock(mutex_);
    auto it = values_.find({id, n, mode});
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }
  void store(FamilyId id, int n, Mode mode, const XsPoly& p) {
    std::unique_lock lock(mutex_);
    values_.emplace(std::make_tuple(id, n, mode), p);
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::tuple<FamilyId, int, Mode>, XsPoly> values_;
};

FamilyCache& cache() {
  static FamilyCache instance;
  return instance;
}

std::mutex perturbation_mutex;
std::shared_ptr<const Perturbation> active_perturbation;

std::shared_ptr<const Perturbation> current_perturbation() {
  std::lock_guard lock(perturbation_mutex);
  return active_perturbation;
}

}  // namespace

const std::vector<FamilySpec>& family_table() {
  static const std::vector<FamilySpec> table{
      {FamilyId::fib_num, "fib_num", 0, 1, fib_num_closed, fib_num_rec},
      {FamilyId::lucas_num, "lucas_num", 2, 1, lucas_num_closed, lucas_num_rec},
      {FamilyId::F_xs, "F_xs", 0, 1, F_xs_closed, F_xs_rec},
      {FamilyId::f_xs, "f_xs", 1, kX, f_xs_closed, f_xs_rec},
      {FamilyId::L_xs, "L_xs", 2, kX, L_xs_closed, L_xs_rec},
      {FamilyId::l_xs, "l_xs", 1, kX, l_xs_closed, l_xs_rec},
      {FamilyId::F_carlitz, "F_carlitz", 0, 1, F_carlitz_closed, F_carlitz_rec},
      {FamilyId::f_carlitz, "f_carlitz", 1, kX, f_carlitz_closed, f_carlitz_rec},
      {FamilyId::L_carlitz, "L_carlitz", 2, kX, L_carlitz_closed, L_carlitz_rec},
      {FamilyId::LB, "LB", 2, kX, LB_closed, LB_rec},
      {FamilyId::LB_bold, "LB_bold", 2, kX, LB_bold_closed, LB_bold_rec},
      {FamilyId::Fib, "Fib", 0, 1, Fib_closed, Fib_rec},
      {FamilyId::fib, "fib", 1, kX, fib_closed, fib_rec},
      {FamilyId::Luc, "Luc", 2, kX, Luc_closed, Luc_rec},
      {FamilyId::luc, "luc", 1, kX, luc_closed, luc_rec},
      {FamilyId::H, "H", 1, kX, H_closed, H_rec},
      {FamilyId::RS, "RS", 1, kX + kS, RS_closed, RS_rec},
  };
  return table;
}

const FamilySpec& family_spec(FamilyId id) {
  for (const auto& spec : family_table()) {
    if (spec.id == id) return spec;
  }
  throw UnknownFamily("unregistered family id " + std::to_string(static_cast<int>(id)));
}

std::span<const FamilyId> all_families() {
  static const std::array ids{FamilyId::fib_num,   FamilyId::lucas_num, FamilyId::F_xs,      FamilyId::f_xs,
                              FamilyId::L_xs,      FamilyId::l_xs,      FamilyId::F_carlitz, FamilyId::f_carlitz,
                              FamilyId::L_carlitz, FamilyId::LB,        FamilyId::LB_bold,   FamilyId::Fib,
                              FamilyId::fib,       FamilyId::Luc,       FamilyId::luc,       FamilyId::H,
                              FamilyId::RS};
  return ids;
}

std::string_view to_string(FamilyId id) { return family_spec(id).name; }

FamilyId parse_family_id(std::string_view name) {
  for (const auto& spec : family_table()) {
    if (spec.name == name) return spec.id;
  }
  throw UnknownFamily("unknown family '" + std::string(name) + "'");
}

XsPoly family(FamilyId id, int n, Mode mode) {
  if (n < 0) throw std::invalid_argument("family index must be nonnegative");
  const FamilySpec& spec = family_spec(id);
  XsPoly value;
  if (auto hit = cache().find(id, n, mode)) {
    value = std::move(*hit);
  } else if (mode == Mode::closed) {
    value = spec.closed(n);
    cache().store(id, n, mode, value);
  } else {
    auto seq = spec.recursive(n);
    for (int i = 0; i <= n; ++i) cache().store(id, i, mode, seq[i]);
    value = std::move(seq[n]);
  }
  if (auto p = current_perturbation(); p && p->id == id && p->n == n) value += p->delta;
  return value;
}

XsPoly family(std::string_view id, int n, Mode mode) { return family(parse_family_id(id), n, mode); }

QLaurent q_catalan(int n) {
  if (n < 0) throw std::invalid_argument("q_catalan: negative index");
  // paths[h] = total weight of prefixes ending at height h
  std::vector<QLaurent> paths(static_cast<std::size_t>(2 * n) + 2);
  paths[0] = 1;
  for (int step = 0; step < 2 * n; ++step) {
    std::vector<QLaurent> next(paths.size());
    for (std::size_t h = 0; h + 1 < paths.size(); ++h) {
      if (paths[h].is_zero()) continue;
      next[h + 1] += paths[h];
      if (h > 0) next[h - 1] += paths[h].shifted(static_cast<int>(h));
    }
    paths = std::move(next);
  }
  return paths[0].shifted(-n);
}

QLaurent macmahon_catalan(int n) { return exact_div(q_binomial(2 * n, n), q_int(n + 1)); }

QLaurent fib_pentagonal(int n) { return specialize_xs(family(FamilyId::Fib, n), 1, -QLaurent::q_power(-1)); }

QLaurent pentagonal_closed_form(int n) {
  const int m = n / 3;
  const int sign = m % 2 == 0 ? 1 : -1;
  switch (n % 3) {
    case 1: return QLaurent::monomial(sign, m * (3 * m - 1) / 2);
    case 2: return QLaurent::monomial(sign, m * (3 * m + 1) / 2);
    default: return {};
  }
}

XsPoly carlitz_comb_lucas(int n) { return n == 0 ? XsPoly(1) : family(FamilyId::L_carlitz, n); }

ScopedPerturbation::ScopedPerturbation(Perturbation p) {
  std::lock_guard lock(perturbation_mutex);
  active_perturbation = std::make_shared<const Perturbation>(std::move(p));
}

ScopedPerturbation::~ScopedPerturbation() {
  std::lock_guard lock(perturbation_mutex);
  active_perturbation.reset();
}

}  // namespace qfib
