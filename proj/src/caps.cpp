#include "negdep/caps.hpp"

#include <charconv>
#include <cstdlib>

#include "negdep/error.hpp"

namespace negdep {

EnumerationCaps EnumerationCaps::with_overrides(std::string_view spec) const {
  EnumerationCaps out = *this;
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParse, "cap '" + std::string(item) + "' is not key=value");
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view val = item.substr(eq + 1);
    std::uint64_t n = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), n);
    if (ec != std::errc{} || ptr != val.data() + val.size()) {
      throw Error(ErrorCode::kParse, "cap value '" + std::string(val) + "' is not an integer");
    }
    if (key == "upper_sets") {
      out.upper_sets = n;
    } else if (key == "lp_vars" || key == "lp_variables") {
      out.lp_variables = n;
    } else {
      throw Error(ErrorCode::kParse, "unknown cap '" + std::string(key) + "'");
    }
  }
  return out;
}

EnumerationCaps EnumerationCaps::from_environment() {
  EnumerationCaps caps;
  if (const char* env = std::getenv("NEGDEP_CAPS")) caps = caps.with_overrides(env);
  return caps;
}

std::string EnumerationCaps::str() const {
  return "upper_sets=" + std::to_string(upper_sets) + ",lp_vars=" + std::to_string(lp_variables);
}

}  // namespace negdep
