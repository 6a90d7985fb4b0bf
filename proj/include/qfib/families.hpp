#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qfib/xspoly.hpp"

namespace qfib {

/**
 * Every polynomial family the library can build.
 *
 *  fib_num, lucas_num   Fibonacci F_n and Lucas L_n numbers (constants)
 *  F_xs, f_xs           arithmetic / combinatorial Fibonacci polynomials in x, s
 *  L_xs, l_xs           arithmetic / combinatorial Lucas polynomials in x, s
 *  F_carlitz, f_carlitz Carlitz q-Fibonacci polynomials
 *  L_carlitz            trace of the Carlitz transfer-matrix product
 *  LB, LB_bold          the two Belbachir-Benmezai q-Lucas variants
 *  Fib, fib             q-Fibonacci polynomials weighted by dash positions; fib_n = Fib_(n+1)
 *  Luc, luc             matching q-Lucas polynomials; luc_0 = 1, otherwise luc_n = Luc_n
 *  H                    the q-Hermite-like bridge polynomials
 *  RS                   Rogers-Szegő polynomials, y in the s slot
 */
enum class FamilyId {
  fib_num,
  lucas_num,
  F_xs,
  f_xs,
  L_xs,
  l_xs,
  F_carlitz,
  f_carlitz,
  L_carlitz,
  LB,
  LB_bold,
  Fib,
  fib,
  Luc,
  luc,
  H,
  RS,
};

enum class Mode { closed, recursive };

/// One row of the family table: the single source of truth for names and initial values.
struct FamilySpec {
  FamilyId id;
  std::string_view name;
  XsPoly initial0;
  XsPoly initial1;
  XsPoly (*closed)(int n);
  std::vector<XsPoly> (*recursive)(int nmax);  ///< indices 0..nmax
};

const std::vector<FamilySpec>& family_table();
const FamilySpec& family_spec(FamilyId id);
std::span<const FamilyId> all_families();

std::string_view to_string(FamilyId id);
/// Throws UnknownFamily.
FamilyId parse_family_id(std::string_view name);

/**
 * The family polynomial at index n (n >= 0).
 *
 * Both modes return structurally equal polynomials. Results are cached per
 * (id, n, mode); the cache never changes a result.
 */
XsPoly family(FamilyId id, int n, Mode mode = Mode::closed);
XsPoly family(std::string_view id, int n, Mode mode = Mode::closed);

/**
 * Carlitz q-Catalan numbers (1, 1, 1+q, 1+2q+q^2+q^3, ...), i.e. the even
 * moments of f_n(x, -1, q) divided by q^n. Computed by weighted Dyck-path
 * counting with down-step weight q^h at height h.
 */
QLaurent q_catalan(int n);

/// [2n, n]_q / [n+1]_q through exact division.
QLaurent macmahon_catalan(int n);

/// Fib_n(1, -1/q, q).
QLaurent fib_pentagonal(int n);

/// 0, (-1)^m q^r(m), (-1)^m q^r(-m) for n = 3m, 3m+1, 3m+2 with r(m) = m(3m-1)/2.
QLaurent pentagonal_closed_form(int n);

/// Carlitz-side combinatorial q-Lucas polynomial: 1 at n = 0, L_carlitz otherwise.
XsPoly carlitz_comb_lucas(int n);

/// Additive fault injected into family(id, n, *) while installed.
struct Perturbation {
  FamilyId id;
  int n;
  XsPoly delta;
};

/// Installs a process-wide perturbation for its lifetime. Not reentrant.
class ScopedPerturbation {
 public:
  explicit ScopedPerturbation(Perturbation p);
  ~ScopedPerturbation();
  ScopedPerturbation(const ScopedPerturbation&) = delete;
  ScopedPerturbation& operator=(const ScopedPerturbation&) = delete;
};

}  // namespace qfib
