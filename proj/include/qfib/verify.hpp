#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qfib/families.hpp"
#include "qfib/xspoly.hpp"

namespace qfib {

enum class Arity {
  n_only,  ///< single index n
  m_n,     ///< grid over (m, n)
  n_k,     ///< grid over (n, k)
};

/// One side-by-side comparison produced by an identity at a given index.
struct Check {
  std::string part;
  XsPoly lhs;
  XsPoly rhs;
};

using CheckFn = std::function<std::vector<Check>(int n, int m)>;

/**
 * A registered identity. `prepare` receives the index bounds of the run and
 * returns the per-index check; expensive shared work (series, matrix
 * products) happens once inside prepare.
 */
struct Identity {
  std::string name;
  std::string equation;  ///< the identity written out
  Arity arity = Arity::n_only;
  int n_start = 0;
  int n_default = 20;
  int m_start = 0;  ///< second index (m for m_n, k for n_k)
  int m_default = 8;
  std::vector<FamilyId> touches;
  std::function<CheckFn(int n_hi, int m_hi)> prepare;
};

struct Counterexample {
  std::vector<std::pair<std::string, int>> indices;
  std::string part;
  std::string lhs;
  std::string rhs;
  bool operator==(const Counterexample&) const = default;
};

struct VerifyReport {
  std::string name;
  std::string equation;
  Arity arity = Arity::n_only;
  std::string range;
  int n_start = 0;
  bool pass = true;
  std::optional<Counterexample> counterexample;
  double elapsed_ms = 0;
};

/// Identities checked by run_all, in report order.
const std::vector<Identity>& registry();

/// Deliberately broken entries used to exercise the harness; never part of run_all.
const std::vector<Identity>& harness_registry();

/// Throws UnknownIdentity.
const Identity& find_identity(std::string_view name);

/**
 * Checks one identity for n_start..nmax (and the second index up to mmax,
 * defaulting to the identity's own bound clipped to nmax). Stops at the
 * first structural inequality.
 */
VerifyReport run_identity(std::string_view name, int nmax, std::optional<int> mmax = std::nullopt);
VerifyReport run_identity(const Identity& identity, int nmax, std::optional<int> mmax = std::nullopt);

/**
 * Runs every registered identity with its default ranges clipped to nmax
 * (second index to mmax, default 8). Identities run concurrently on up to
 * `threads` workers (0 = hardware concurrency); report order is registry order.
 */
std::vector<VerifyReport> run_all(int nmax, std::optional<int> mmax = std::nullopt, unsigned threads = 0);

std::string_view to_string(Arity arity);

}  // namespace qfib
