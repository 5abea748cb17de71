#include "negdep/model_json.hpp"

#include "negdep/distribution_json.hpp"
#include "negdep/error.hpp"

namespace negdep {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& msg) {
  throw Error(ErrorCode::kParse, field + ": " + msg);
}

std::size_t player_index(const json& j, const std::string& field, std::size_t n) {
  if (!j.is_number_unsigned()) field_error(field, "expected a one-based player number");
  const auto v = j.get<std::size_t>();
  if (v < 1 || v > n) field_error(field, "player " + std::to_string(v) + " out of range");
  return v - 1;
}

KnockoutSpec knockout_from_json(const json& j) {
  KnockoutSpec spec;
  if (!j.contains("ell") || !j["ell"].is_number_unsigned()) {
    field_error("ell", "expected a positive integer");
  }
  const auto ell = j["ell"].get<unsigned>();
  if (ell < 1 || ell > kMaxKnockoutRounds) {
    field_error("ell", "must lie in [1," + std::to_string(kMaxKnockoutRounds) + "]");
  }
  spec.rounds = ell;
  const std::size_t n = spec.players();
  if (!j.contains("win_prob") || !j["win_prob"].is_array()) {
    field_error("win_prob", "expected an array");
  }
  const json& wp = j["win_prob"];
  spec.win_prob.assign(n, std::vector<Rational>(n));
  if (wp.size() == n * n && !wp.empty() && !wp[0].is_array()) {
    for (std::size_t k = 0; k < n * n; ++k) {
      spec.win_prob[k / n][k % n] =
          rational_from_json(wp[k], "win_prob[" + std::to_string(k) + "]");
    }
  } else if (wp.size() == n) {
    for (std::size_t r = 0; r < n; ++r) {
      if (!wp[r].is_array() || wp[r].size() != n) {
        field_error("win_prob[" + std::to_string(r) + "]", "expected " + std::to_string(n) +
                                                                " entries");
      }
      for (std::size_t c = 0; c < n; ++c) {
        spec.win_prob[r][c] = rational_from_json(
            wp[r][c], "win_prob[" + std::to_string(r) + "][" + std::to_string(c) + "]");
      }
    }
  } else {
    field_error("win_prob", "expected an n x n matrix with n = " + std::to_string(n));
  }
  if (!j.contains("draw") || !j["draw"].is_object() || !j["draw"].contains("kind")) {
    field_error("draw", "expected {\"kind\": \"fixed\"|\"random\"}");
  }
  const json& draw = j["draw"];
  const auto kind = draw["kind"].get<std::string>();
  if (kind == "random") {
    spec.draw = RandomDraw{};
  } else if (kind == "fixed") {
    if (!draw.contains("bracket")) {
      spec.draw = identity_bracket(n);
    } else {
      if (!draw["bracket"].is_array()) field_error("draw.bracket", "expected an array");
      FixedDraw fixed;
      std::size_t k = 0;
      for (const auto& p : draw["bracket"]) {
        fixed.bracket.push_back(
            player_index(p, "draw.bracket[" + std::to_string(k++) + "]", n));
      }
      spec.draw = std::move(fixed);
    }
  } else {
    field_error("draw.kind", "unknown draw kind '" + kind + "'");
  }
  spec.validate();
  return spec;
}

RoundRobinSpec round_robin_from_json(const json& j) {
  RoundRobinSpec spec;
  if (!j.contains("players") || !j["players"].is_number_unsigned()) {
    field_error("players", "expected a player count");
  }
  spec.players = j["players"].get<std::size_t>();
  if (!j.contains("pairs") || !j["pairs"].is_array()) field_error("pairs", "expected an array");
  std::size_t k = 0;
  for (const auto& item : j["pairs"]) {
    const std::string where = "pairs[" + std::to_string(k++) + "]";
    if (!item.is_object()) field_error(where, "expected an object");
    PairGame g;
    if (!item.contains("i") || !item.contains("j")) field_error(where, "missing i or j");
    g.i = player_index(item["i"], where + ".i", spec.players);
    g.j = player_index(item["j"], where + ".j", spec.players);
    if (!item.contains("r")) field_error(where, "missing r");
    g.total = rational_from_json(item["r"], where + ".r");
    if (!item.contains("law") || !item["law"].is_array()) {
      field_error(where + ".law", "expected [[score, prob], ...]");
    }
    std::size_t c = 0;
    for (const auto& entry : item["law"]) {
      const std::string at = where + ".law[" + std::to_string(c++) + "]";
      if (!entry.is_array() || entry.size() != 2) field_error(at, "expected [score, prob]");
      g.law.emplace_back(rational_from_json(entry[0], at + "[0]"),
                         rational_from_json(entry[1], at + "[1]"));
    }
    spec.games.push_back(std::move(g));
  }
  spec.validate();
  return spec;
}

}  // namespace

ModelSpec model_from_json(const json& j) {
  if (!j.is_object() || !j.contains("model") || !j["model"].is_string()) {
    field_error("model", "expected \"round_robin\" or \"knockout\"");
  }
  const auto model = j["model"].get<std::string>();
  if (model == "knockout") return knockout_from_json(j);
  if (model == "round_robin") return round_robin_from_json(j);
  field_error("model", "unknown model '" + model + "'");
}

json model_to_json(const ModelSpec& spec) {
  if (const auto* ko = std::get_if<KnockoutSpec>(&spec)) {
    json rows = json::array();
    for (const auto& row : ko->win_prob) {
      json r = json::array();
      for (const auto& p : row) r.push_back(p.str());
      rows.push_back(std::move(r));
    }
    json draw;
    if (const auto* fixed = std::get_if<FixedDraw>(&ko->draw)) {
      json bracket = json::array();
      for (auto p : fixed->bracket) bracket.push_back(p + 1);
      draw = {{"kind", "fixed"}, {"bracket", std::move(bracket)}};
    } else {
      draw = {{"kind", "random"}};
    }
    return {{"model", "knockout"}, {"ell", ko->rounds}, {"win_prob", std::move(rows)},
            {"draw", std::move(draw)}};
  }
  const auto& rr = std::get<RoundRobinSpec>(spec);
  json pairs = json::array();
  for (const auto& g : rr.games) {
    json law = json::array();
    for (const auto& [x, p] : g.law) law.push_back({x.str(), p.str()});
    pairs.push_back({{"i", g.i + 1}, {"j", g.j + 1}, {"r", g.total.str()}, {"law", law}});
  }
  return {{"model", "round_robin"}, {"players", rr.players}, {"pairs", std::move(pairs)}};
}

}  // namespace negdep
