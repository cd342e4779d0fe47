// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON views of the library types. Rationals are always strings "p/q".

#include "casson3/casson.hpp"
#include "casson3/floer_sim.hpp"
#include "casson3/knot_poly.hpp"
#include "casson3/rho.hpp"

#include "json.hpp"

namespace casson3 {

using Json = nlohmann::ordered_json;

inline constexpr const char *kSchema = "casson3/1";

/// {"schema": "casson3/1", "command": command}.
Json document(const std::string &command);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

Json to_json(const Rational &r);
Json to_json(const RationalPoly &p);
Json to_json(const LaurentPoly &p);
Json to_json(const BrieskornSphere &X);
Json to_json(const FlatConnection &c);
Json to_json(const RhoValue &v);
Json to_json(const InvariantReport &r);
Json to_json(const ConjectureReport &r);
Json to_json(const MorseMove &m);
Json to_json(const Transcript &t);

} // namespace casson3
