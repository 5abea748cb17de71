#include "negdep/report.hpp"

#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "negdep/distribution_json.hpp"
#include "negdep/error.hpp"

namespace negdep {

using nlohmann::json;

namespace {

json indices_to_json(const IndexSet& s) {
  json out = json::array();
  for (std::size_t i : s) out.push_back(i + 1);
  return out;
}

IndexSet indices_from_json(const json& j) {
  std::vector<std::size_t> idx;
  for (const auto& v : j) {
    const auto one_based = v.get<std::size_t>();
    if (one_based == 0) throw Error(ErrorCode::kIndexOutOfRange, "indices are one-based");
    idx.push_back(one_based - 1);
  }
  return IndexSet(std::move(idx));
}

json point_to_json(std::span<const Rational> x) {
  json out = json::array();
  for (const auto& v : x) out.push_back(v.str());
  return out;
}

Point point_from_json(const json& j, const std::string& where) {
  Point x;
  for (std::size_t k = 0; k < j.size(); ++k) {
    x.push_back(rational_from_json(j[k], where + "[" + std::to_string(k) + "]"));
  }
  return x;
}

Rational rat(const json& j, const char* key) { return rational_from_json(j.at(key), key); }

std::string_view side_name(OrthantWitness::Side s) {
  return s == OrthantWitness::Side::kLower ? "lower" : "upper";
}

std::string_view kind_name(ConditioningEvent::Kind k) {
  switch (k) {
    case ConditioningEvent::Kind::kEq: return "eq";
    case ConditioningEvent::Kind::kLower: return "lower";
    case ConditioningEvent::Kind::kUpper: return "upper";
    case ConditioningEvent::Kind::kMixed: return "mixed";
  }
  return "?";
}

Relation relation_from_symbol(const std::string& s) {
  for (Relation r : {Relation::kEq, Relation::kLe, Relation::kLt, Relation::kGe, Relation::kGt}) {
    if (relation_symbol(r) == s) return r;
  }
  throw Error(ErrorCode::kParse, "unknown relation '" + s + "'");
}

json stats_to_json(const CheckStats& s) {
  return {{"index_pairs", s.index_pairs},
          {"conditioning_points", s.conditioning_points},
          {"comparisons", s.comparisons},
          {"upper_sets", s.upper_sets}};
}

CheckStats stats_from_json(const json& j) {
  CheckStats s;
  s.index_pairs = j.at("index_pairs").get<std::uint64_t>();
  s.conditioning_points = j.at("conditioning_points").get<std::uint64_t>();
  s.comparisons = j.at("comparisons").get<std::uint64_t>();
  s.upper_sets = j.at("upper_sets").get<std::uint64_t>();
  return s;
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed report: ") + e.what());
  }
}

}  // namespace

std::string input_digest(const FiniteJointDistribution& d) {
  const std::string text = distribution_to_json(d).dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kInternal, "SHA-256 digest failed");
  }
  std::ostringstream os;
  os << "sha256:" << std::hex << std::setfill('0');
  for (unsigned int k = 0; k < len; ++k) os << std::setw(2) << static_cast<int>(md[k]);
  return os.str();
}

json event_to_json(const ConditioningEvent& ev) {
  json cons = json::array();
  for (const auto& c : ev.constraints()) {
    cons.push_back({{"index", c.index + 1},
                    {"relation", std::string(relation_symbol(c.relation))},
                    {"threshold", c.threshold.str()}});
  }
  return {{"kind", std::string(kind_name(ev.kind()))}, {"constraints", cons}};
}

ConditioningEvent event_from_json(const json& j) {
  return guarded([&] {
    const auto kind = j.at("kind").get<std::string>();
    std::vector<CoordinateConstraint> cons;
    for (const auto& c : j.at("constraints")) {
      const auto index = c.at("index").get<std::size_t>();
      if (index == 0) throw Error(ErrorCode::kIndexOutOfRange, "indices are one-based");
      cons.push_back({index - 1, relation_from_symbol(c.at("relation").get<std::string>()),
                      ExtRational::parse(c.at("threshold").get<std::string>())});
    }
    if (kind == "mixed") return ConditioningEvent::mixed(std::move(cons));
    std::vector<std::size_t> idx;
    std::vector<ExtRational> thr;
    std::vector<bool> strict;
    for (const auto& c : cons) {
      idx.push_back(c.index);
      thr.push_back(c.threshold);
      strict.push_back(c.relation == Relation::kLt || c.relation == Relation::kGt);
    }
    const IndexSet indices(idx);
    if (kind == "eq") {
      Point x;
      for (const auto& t : thr) {
        if (!t.is_finite()) throw Error(ErrorCode::kParse, "equality event with infinite value");
        x.push_back(t.value());
      }
      return ConditioningEvent::equal(indices, x);
    }
    if (kind == "lower") return ConditioningEvent::lower(indices, thr, strict);
    if (kind == "upper") return ConditioningEvent::upper(indices, thr, strict);
    throw Error(ErrorCode::kParse, "unknown event kind '" + kind + "'");
  });
}

json upper_set_to_json(const UpperSet& u) {
  json out = json::array();
  for (const auto& m : u.minimal) out.push_back(point_to_json(m));
  return out;
}

UpperSet upper_set_from_json(const json& j) {
  return guarded([&] {
    UpperSet u;
    for (const auto& m : j) u.minimal.push_back(point_from_json(m, "upper_set"));
    if (!u.is_antichain()) throw Error(ErrorCode::kParse, "upper set generators not an antichain");
    return u;
  });
}

json witness_to_json(const Witness& w) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ConditionalWitness>) {
          return {{"kind", "conditional"},
                  {"I", indices_to_json(x.i)},
                  {"J", indices_to_json(x.j)},
                  {"at_x", event_to_json(x.at_x)},
                  {"at_x_star", event_to_json(x.at_x_star)},
                  {"upper_set", upper_set_to_json(x.u)},
                  {"p_at_x", x.p_at_x.str()},
                  {"p_at_x_star", x.p_at_x_star.str()}};
        } else if constexpr (std::is_same_v<T, AssociationWitness>) {
          return {{"kind", "association"},
                  {"A1", indices_to_json(x.a1)},
                  {"A2", indices_to_json(x.a2)},
                  {"U", upper_set_to_json(x.u)},
                  {"V", upper_set_to_json(x.v)},
                  {"p_joint", x.p_joint.str()},
                  {"p_u", x.p_u.str()},
                  {"p_v", x.p_v.str()}};
        } else if constexpr (std::is_same_v<T, OrthantWitness>) {
          json corner = json::array();
          for (const auto& c : x.corner) corner.push_back(c.str());
          return {{"kind", "orthant"},
                  {"side", std::string(side_name(x.side))},
                  {"corner", corner},
                  {"joint", x.joint.str()},
                  {"product", x.product.str()}};
        } else {
          json axes = json::array();
          for (const auto& a : x.psi.axes()) axes.push_back(point_to_json(a));
          return {{"kind", "supermodular"},
                  {"axes", axes},
                  {"values", point_to_json(x.psi.values())},
                  {"expectation", x.expectation.str()},
                  {"expectation_independent", x.expectation_independent.str()}};
        }
      },
      w);
}

Witness witness_from_json(const json& j) {
  return guarded([&]() -> Witness {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "conditional") {
      return ConditionalWitness{indices_from_json(j.at("I")),
                                indices_from_json(j.at("J")),
                                event_from_json(j.at("at_x")),
                                event_from_json(j.at("at_x_star")),
                                upper_set_from_json(j.at("upper_set")),
                                rat(j, "p_at_x"),
                                rat(j, "p_at_x_star")};
    }
    if (kind == "association") {
      return AssociationWitness{indices_from_json(j.at("A1")),
                                indices_from_json(j.at("A2")),
                                upper_set_from_json(j.at("U")),
                                upper_set_from_json(j.at("V")),
                                rat(j, "p_joint"),
                                rat(j, "p_u"),
                                rat(j, "p_v")};
    }
    if (kind == "orthant") {
      const auto side = j.at("side").get<std::string>();
      if (side != "lower" && side != "upper") throw Error(ErrorCode::kParse, "bad orthant side");
      std::vector<ExtRational> corner;
      for (const auto& c : j.at("corner")) corner.push_back(ExtRational::parse(c.get<std::string>()));
      return OrthantWitness{side == "lower" ? OrthantWitness::Side::kLower
                                            : OrthantWitness::Side::kUpper,
                            std::move(corner), rat(j, "joint"), rat(j, "product")};
    }
    if (kind == "supermodular") {
      std::vector<std::vector<Rational>> axes;
      for (const auto& a : j.at("axes")) axes.push_back(point_from_json(a, "axes"));
      GridFunction psi(std::move(axes), point_from_json(j.at("values"), "values"));
      return SupermodularWitness{std::move(psi), rat(j, "expectation"),
                                 rat(j, "expectation_independent")};
    }
    throw Error(ErrorCode::kParse, "unknown witness kind '" + kind + "'");
  });
}

json verdict_to_json(const Verdict& v) {
  json out = {{"property", std::string(property_name(v.property))},
              {"holds", v.holds},
              {"stats", stats_to_json(v.stats)}};
  out["witness"] = v.witness ? witness_to_json(*v.witness) : json(nullptr);
  return out;
}

Verdict verdict_from_json(const json& j) {
  return guarded([&] {
    Verdict v{parse_property(j.at("property").get<std::string>()), j.at("holds").get<bool>(),
              std::nullopt, stats_from_json(j.at("stats"))};
    if (!j.at("witness").is_null()) v.witness = witness_from_json(j.at("witness"));
    if (!v.holds && !v.witness) throw Error(ErrorCode::kParse, "failing verdict without witness");
    return v;
  });
}

json report_to_json(const Report& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
  json out = {
      {"version", r.version},
      {"input", {{"digest", r.input_digest}, {"dim", r.dim}, {"atoms", r.atoms}}},
      {"caps", {{"upper_sets", r.caps.upper_sets}, {"lp_variables", r.caps.lp_variables}}},
      {"options",
       {{"max_j", r.max_j ? json(*r.max_j) : json(nullptr)},
        {"variant", std::string(tail_variant_name(r.variant))},
        {"order_mode", r.order_mode == OrderMode::kFast ? "fast" : "verify"}}},
      {"verdicts", verdicts}};
  if (r.error) out["error"] = *r.error;
  if (!r.timings_ms.empty()) out["timings_ms"] = r.timings_ms;
  return out;
}

Report report_from_json(const json& j) {
  return guarded([&] {
    Report r;
    r.version = j.at("version").get<std::string>();
    const auto& in = j.at("input");
    r.input_digest = in.at("digest").get<std::string>();
    r.dim = in.at("dim").get<std::size_t>();
    r.atoms = in.at("atoms").get<std::size_t>();
    r.caps.upper_sets = j.at("caps").at("upper_sets").get<std::uint64_t>();
    r.caps.lp_variables = j.at("caps").at("lp_variables").get<std::uint64_t>();
    const auto& opt = j.at("options");
    if (!opt.at("max_j").is_null()) r.max_j = opt.at("max_j").get<std::size_t>();
    const auto variant = opt.at("variant").get<std::string>();
    bool known = false;
    for (TailVariant v : {TailVariant::kDefault, TailVariant::kStrict, TailVariant::kWeak}) {
      if (tail_variant_name(v) == variant) {
        r.variant = v;
        known = true;
      }
    }
    if (!known) throw Error(ErrorCode::kParse, "unknown variant '" + variant + "'");
    r.order_mode = opt.at("order_mode").get<std::string>() == "verify" ? OrderMode::kVerify
                                                                       : OrderMode::kFast;
    for (const auto& v : j.at("verdicts")) r.verdicts.push_back(verdict_from_json(v));
    if (j.contains("error")) r.error = j.at("error").get<std::string>();
    if (j.contains("timings_ms")) {
      r.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
    }
    return r;
  });
}

json conjecture_to_json(const ConjectureResult& r) {
  json out = {{"values", point_to_json(r.values)},
              {"result", r.holds_on_instance ? "HOLDS-ON-INSTANCE" : "COUNTEREXAMPLE"},
              {"partitions", r.partitions},
              {"conditioning_points", r.conditioning_points},
              {"comparisons", r.comparisons}};
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    out["counterexample"] = {{"I", indices_to_json(c.i)},
                             {"J", indices_to_json(c.j)},
                             {"K", indices_to_json(c.k)},
                             {"L", indices_to_json(c.l)},
                             {"at_x", event_to_json(c.at_x)},
                             {"at_x_star", event_to_json(c.at_x_star)},
                             {"upper_set", upper_set_to_json(c.u)},
                             {"p_at_x", c.p_at_x.str()},
                             {"p_at_x_star", c.p_at_x_star.str()}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace negdep
