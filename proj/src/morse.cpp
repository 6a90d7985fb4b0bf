#include "qfib/morse.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfib {

MorseSeq MorseSeq::parse(std::string_view text) {
  std::vector<Symbol> symbols;
  for (char ch : text) {
    if (ch == '.') {
      symbols.push_back(Symbol::dot);
    } else if (ch == '-') {
      symbols.push_back(Symbol::dash);
    } else {
      throw std::invalid_argument(std::string("invalid Morse symbol '") + ch + "'");
    }
  }
  return MorseSeq(std::move(symbols));
}

int MorseSeq::dash_count() const {
  return static_cast<int>(std::count(symbols_.begin(), symbols_.end(), Symbol::dash));
}

int MorseSeq::length() const { return element_count() + dash_count(); }

std::vector<int> MorseSeq::dash_positions() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == Symbol::dash) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

std::string MorseSeq::to_string() const {
  std::string out;
  for (Symbol sym : symbols_) out += sym == Symbol::dot ? '.' : '-';
  return out;
}

namespace {

void extend(int remaining, std::vector<Symbol>& prefix, std::vector<MorseSeq>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  prefix.push_back(Symbol::dot);
  extend(remaining - 1, prefix, out);
  prefix.back() = Symbol::dash;
  if (remaining >= 2) extend(remaining - 2, prefix, out);
  prefix.pop_back();
}

}  // namespace

std::vector<MorseSeq> enumerate(int n) {
  if (n < 0) throw std::invalid_argument("Morse length must be nonnegative");
  std::vector<MorseSeq> out;
  std::vector<Symbol> prefix;
  extend(n, prefix, out);
  return out;
}

XsPoly weight(const MorseSeq& c, WeightKind kind) {
  const int dashes = c.dash_count();
  const int dots = c.element_count() - dashes;
  switch (kind) {
    case WeightKind::w:
      return XsPoly::monomial(1, dots, dashes);
    case WeightKind::v: {
      int exponent = 0;
      int offset = 0;
      for (Symbol sym : c.symbols()) {
        if (sym == Symbol::dash) exponent += offset + 1;
        offset += sym == Symbol::dot ? 1 : 2;
      }
      return XsPoly::monomial(QLaurent::q_power(exponent), dots, dashes);
    }
    case WeightKind::W: {
      int exponent = 0;
      for (int pos : c.dash_positions()) exponent += pos;
      return XsPoly::monomial(QLaurent::q_power(exponent), dots, dashes);
    }
  }
  return {};
}

std::vector<PeriodicCover> enumerate_periodic(int n) {
  std::vector<PeriodicCover> out;
  for (auto& seq : enumerate(n)) out.emplace_back(LinearCover{std::move(seq)});
  if (n >= 2) {
    for (auto& inner : enumerate(n - 2)) out.emplace_back(WrappedCover{std::move(inner)});
  }
  return out;
}

XsPoly periodic_weight(const PeriodicCover& c) {
  if (const auto* lin = std::get_if<LinearCover>(&c)) return weight(lin->seq, WeightKind::w);
  return XsPoly::s() * weight(std::get<WrappedCover>(c).inner, WeightKind::w);
}

XsPoly oracle(OracleKind kind, int n) {
  if (n < 0) throw std::invalid_argument("oracle index must be nonnegative");
  auto sum_weights = [](const std::vector<MorseSeq>& seqs, WeightKind wk) {
    XsPoly total;
    for (const auto& c : seqs) total += weight(c, wk);
    return total;
  };
  switch (kind) {
    case OracleKind::count:
      return QLaurent(static_cast<int>(enumerate(n).size()));
    case OracleKind::w_sum:
      return sum_weights(enumerate(n), WeightKind::w);
    case OracleKind::v_sum:
      return sum_weights(enumerate(n), WeightKind::v);
    case OracleKind::W_sum:
      return n == 0 ? XsPoly() : sum_weights(enumerate(n - 1), WeightKind::W);
    case OracleKind::periodic_count:
      return QLaurent(static_cast<int>(enumerate_periodic(n).size()));
    case OracleKind::periodic_w: {
      XsPoly total;
      for (const auto& c : enumerate_periodic(n)) total += periodic_weight(c);
      return total;
    }
  }
  return {};
}

std::vector<XsPoly> doubling_split(int n) {
  std::vector<XsPoly> groups(static_cast<std::size_t>(n) + 1);
  for (const auto& c : enumerate(2 * n)) {
    const auto& sym = c.symbols();
    const int tail_dashes = static_cast<int>(std::count(sym.end() - n, sym.end(), Symbol::dash));
    groups[tail_dashes] += weight(c, WeightKind::v);
  }
  return groups;
}

}  // namespace qfib
