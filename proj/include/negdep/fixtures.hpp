#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "negdep/dependence.hpp"
#include "negdep/tournaments.hpp"

namespace negdep {

RoundRobinSpec example_2_1_spec();
/// Increasing symmetric f on pairs of scores used with example_2_1_spec.
Rational example_2_1_f(const Rational& a, const Rational& b);
KnockoutSpec example_3_1_spec();
KnockoutSpec example_3_2_spec();
KnockoutSpec example_3_3_spec();

/// Family theta -> [X_i^(k+1) | S_i^(k) = theta] for every player i and
/// round k < rounds of an equal-strength fixed bracket.
std::vector<std::map<Point, FiniteJointDistribution>> knockout_increment_families(
    unsigned rounds);

struct FixtureCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok() const { return expected == actual; }
};

struct FixtureResult {
  std::string id;
  std::vector<FixtureCheck> checks;
  std::vector<Verdict> verdicts;
  bool passed() const;
};

std::span<const std::string_view> fixture_ids();
/// Throws kParse for an unknown id.
FixtureResult run_fixture(std::string_view id, const CheckOptions& options = {});

/// Compact "(x1,...,xn):p" listing in atom order.
std::string law_str(const FiniteJointDistribution& d);

nlohmann::json fixture_to_json(const FixtureResult& r);

}  // namespace negdep
