#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace negdep {

/// Guards against exponential blow-up. Exceeding a cap raises
/// kEnumerationCapExceeded / kGridTooLarge instead of truncating.
struct EnumerationCaps {
  std::uint64_t upper_sets = 1'000'000;
  std::uint64_t lp_variables = 100'000;

  /// "upper_sets=N,lp_vars=M" (either key optional) applied on top of *this.
  EnumerationCaps with_overrides(std::string_view spec) const;
  /// Defaults overridden by the NEGDEP_CAPS environment variable, if set.
  static EnumerationCaps from_environment();

  std::string str() const;
  friend bool operator==(const EnumerationCaps&, const EnumerationCaps&) = default;
};

}  // namespace negdep
