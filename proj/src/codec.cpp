#include "qfib/codec.hpp"

#include <stdexcept>
#include <string>

namespace qfib {

Json encode_poly(const XsPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json q = Json::array();
    for (const auto& [e, v] : c.terms()) q.push_back(Json::array({e, v.str()}));
    out.push_back({{"x", m.x}, {"s", m.s}, {"q", std::move(q)}});
  }
  return out;
}

XsPoly decode_poly(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
  XsPoly out;
  try {
    for (const auto& term : j) {
      std::vector<std::pair<int, BigInt>> q;
      for (const auto& pair : term.at("q")) {
        if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("q entries are [exponent, coefficient]");
        q.emplace_back(pair[0].get<int>(), BigInt(pair[1].get<std::string>()));
      }
      out += XsPoly::monomial(QLaurent::from_terms(q), term.at("x").get<int>(), term.at("s").get<int>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed polynomial: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(std::string("malformed coefficient: ") + e.what());
  }
  return out;
}

Json encode_report(const VerifyReport& report) {
  Json ce = nullptr;
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    Json indices = Json::object();
    for (const auto& [name, value] : c.indices) indices[name] = value;
    ce = {{"indices", std::move(indices)}, {"part", c.part}, {"lhs", c.lhs}, {"rhs", c.rhs}};
  }
  return {{"name", report.name},   {"equation", report.equation},      {"range", report.range},
          {"pass", report.pass},   {"counterexample", std::move(ce)}, {"elapsed_ms", report.elapsed_ms}};
}

Json encode_fixture(const MorseSeq& c) {
  return {{"symbols", c.to_string()},
          {"length", c.length()},
          {"dash_positions", c.dash_positions()},
          {"w", render(weight(c, WeightKind::w))},
          {"v", render(weight(c, WeightKind::v))},
          {"W", render(weight(c, WeightKind::W))}};
}

}  // namespace qfib
