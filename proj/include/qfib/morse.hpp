#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qfib/xspoly.hpp"

namespace qfib {

enum class Symbol : std::uint8_t { dot, dash };

/// A word of dots (length 1) and dashes (length 2).
class MorseSeq {
 public:
  MorseSeq() = default;
  explicit MorseSeq(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  /// Parses '.' and '-' characters; throws std::invalid_argument on anything else.
  static MorseSeq parse(std::string_view text);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  int element_count() const { return static_cast<int>(symbols_.size()); }
  int dash_count() const;
  /// Dots count 1, dashes 2.
  int length() const;
  /// 1-based element indices of the dashes, ascending.
  std::vector<int> dash_positions() const;
  std::string to_string() const;

  bool operator==(const MorseSeq&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

/// All sequences of the given length, lexicographic with dot < dash.
std::vector<MorseSeq> enumerate(int n);

enum class WeightKind {
  w,  ///< x per dot, s per dash
  v,  ///< cover [0, n]: x per dot, q^i s where a dash's second half covers [i, i+1]
  W,  ///< q^(sum of dash element positions) s^k x^(m-k)
};

XsPoly weight(const MorseSeq& c, WeightKind kind);

/// A periodic covering whose restriction to [0, n] starts cleanly.
struct LinearCover {
  MorseSeq seq;
};
/// A periodic covering where [0, 1] is the second half of a dash wrapping around from [n-1, n].
struct WrappedCover {
  MorseSeq inner;  ///< covers [1, n-1]
};
using PeriodicCover = std::variant<LinearCover, WrappedCover>;

/// All coverings of the line with period n (n >= 0).
std::vector<PeriodicCover> enumerate_periodic(int n);

/// Classical weight: w(seq) for a linear cover, s * w(inner) for a wrapped one.
XsPoly periodic_weight(const PeriodicCover& c);

enum class OracleKind { count, w_sum, v_sum, W_sum, periodic_count, periodic_w };

/**
 * Brute-force sums over the enumerated sequences:
 * count and periodic_count give constants, w_sum/v_sum sum over M_n,
 * W_sum sums over M_(n-1) (zero at n = 0), periodic_w sums over M_n^*.
 */
XsPoly oracle(OracleKind kind, int n);

/**
 * Splits every sequence of length 2n into a head and its last n elements and
 * groups the v-weights by the dash count k of that tail: entry k is the sum of
 * v(c) over sequences whose tail has k dashes.
 */
std::vector<XsPoly> doubling_split(int n);

}  // namespace qfib
