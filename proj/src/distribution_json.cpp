#include "negdep/distribution_json.hpp"

#include "negdep/error.hpp"

namespace negdep {

using nlohmann::json;

Rational rational_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, where + ": " + e.what());
  }
  throw Error(ErrorCode::kParse, where + ": expected a rational string, got " + j.dump());
}

json rational_to_json(const Rational& r) { return r.str(); }

json distribution_to_json(const FiniteJointDistribution& d) {
  json atoms = json::array();
  for (const auto& a : d.atoms()) {
    json x = json::array();
    for (const auto& v : a.x) x.push_back(v.str());
    atoms.push_back({{"x", std::move(x)}, {"p", a.p.str()}});
  }
  return {{"dim", d.dim()}, {"atoms", std::move(atoms)}};
}

FiniteJointDistribution distribution_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "distribution: expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0) {
    throw Error(ErrorCode::kParse, "dim: expected a positive integer");
  }
  if (!j.contains("atoms") || !j["atoms"].is_array()) {
    throw Error(ErrorCode::kParse, "atoms: expected an array");
  }
  const auto dim = j["dim"].get<std::size_t>();
  std::vector<Atom> entries;
  std::size_t k = 0;
  for (const auto& item : j["atoms"]) {
    const std::string where = "atoms[" + std::to_string(k++) + "]";
    if (!item.is_object() || !item.contains("x") || !item["x"].is_array() ||
        !item.contains("p")) {
      throw Error(ErrorCode::kParse, where + ": expected {\"x\": [...], \"p\": ...}");
    }
    Atom atom;
    std::size_t c = 0;
    for (const auto& v : item["x"]) {
      atom.x.push_back(rational_from_json(v, where + ".x[" + std::to_string(c++) + "]"));
    }
    if (atom.x.size() != dim) {
      throw Error(ErrorCode::kDimMismatch, where + ".x: length " + std::to_string(atom.x.size()) +
                                               " differs from dim " + std::to_string(dim));
    }
    atom.p = rational_from_json(item["p"], where + ".p");
    entries.push_back(std::move(atom));
  }
  return make_pmf(dim, entries);
}

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, source + ": " + e.what());
  }
}

}  // namespace negdep
