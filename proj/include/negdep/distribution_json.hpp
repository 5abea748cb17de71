#pragma once

#include <string>

#include <json.hpp>

#include "negdep/distribution.hpp"

namespace negdep {

/// Rationals travel as "num/den" strings. Plain JSON integers are accepted
/// on input; floating-point numbers are rejected.
Rational rational_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json rational_to_json(const Rational& r);

/// {"dim": n, "atoms": [{"x": ["0","1/2"], "p": "1/8"}, ...]}; atoms are
/// written in lexicographic order.
nlohmann::json distribution_to_json(const FiniteJointDistribution& d);
FiniteJointDistribution distribution_from_json(const nlohmann::json& j);

/// Parses text, converting JSON syntax errors into kParse errors.
nlohmann::json parse_json_text(const std::string& text, const std::string& source);

}  // namespace negdep
