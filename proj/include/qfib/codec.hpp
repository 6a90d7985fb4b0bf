#pragma once

#include <json.hpp>

#include "qfib/morse.hpp"
#include "qfib/verify.hpp"
#include "qfib/xspoly.hpp"

namespace qfib {

using Json = nlohmann::ordered_json;

/// Array of {x, s, q: [[exponent, "coefficient"], ...]} in render order.
Json encode_poly(const XsPoly& p);
/// Inverse of encode_poly. Throws std::invalid_argument on malformed input.
XsPoly decode_poly(const Json& j);

/// {name, equation, range, pass, counterexample, elapsed_ms}; counterexample is null on pass.
Json encode_report(const VerifyReport& report);

/// {symbols, length, dash_positions, w, v, W} with weights rendered.
Json encode_fixture(const MorseSeq& c);

}  // namespace qfib
