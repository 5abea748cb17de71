#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "negdep/caps.hpp"
#include "negdep/conjecture.hpp"
#include "negdep/dependence.hpp"

namespace negdep {

inline constexpr const char* kVersion = "1.0.0";

/// Outcome of one `check` run.
struct Report {
  std::string version = kVersion;
  std::string input_digest;
  std::size_t dim = 0;
  std::size_t atoms = 0;
  EnumerationCaps caps;
  std::optional<std::size_t> max_j;
  TailVariant variant = TailVariant::kDefault;
  OrderMode order_mode = OrderMode::kFast;
  std::vector<Verdict> verdicts;
  /// Set when a check aborted; verdicts then hold the completed ones.
  std::optional<std::string> error;
  /// Wall-clock milliseconds per property. Only serialized when non-empty,
  /// so reports stay byte-identical across runs by default.
  std::map<std::string, double> timings_ms;

  friend bool operator==(const Report&, const Report&) = default;
};

/// "sha256:<hex>" of the canonical distribution JSON.
std::string input_digest(const FiniteJointDistribution& d);

nlohmann::json event_to_json(const ConditioningEvent& ev);
ConditioningEvent event_from_json(const nlohmann::json& j);
nlohmann::json upper_set_to_json(const UpperSet& u);
UpperSet upper_set_from_json(const nlohmann::json& j);
nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);
nlohmann::json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

nlohmann::json conjecture_to_json(const ConjectureResult& r);

/// Two-space indented dump with a trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace negdep
