#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "negdep/dependence.hpp"

namespace negdep {

/// A pair of mixed events {X_I >= x_I, X_J <= x_J, X_K = x_K} with
/// x <= x* componentwise and P(X_L in U | at x*) > P(X_L in U | at x).
struct ConjectureCounterexample {
  IndexSet i;
  IndexSet j;
  IndexSet k;
  IndexSet l;
  ConditioningEvent at_x;
  ConditioningEvent at_x_star;
  UpperSet u;
  Rational p_at_x;
  Rational p_at_x_star;
};

struct ConjectureResult {
  std::vector<Rational> values;
  bool holds_on_instance = false;
  std::optional<ConjectureCounterexample> counterexample;
  std::uint64_t partitions = 0;
  std::uint64_t conditioning_points = 0;
  std::uint64_t comparisons = 0;
};

inline constexpr std::size_t kDefaultConjectureMaxN = 5;

/// Exhaustive check of the monotonicity conjecture on the permutation
/// distribution of `values`: every labelling of the coordinates into I, J, K
/// and a nonempty L, every comparable pair of positive-probability mixed
/// events. A counterexample is re-verified by direct evaluation before it is
/// returned. Throws kEnumerationCapExceeded when values.size() > max_n.
ConjectureResult test_conjecture(const std::vector<Rational>& values,
                                 const CheckOptions& options = {},
                                 std::size_t max_n = kDefaultConjectureMaxN);

bool recheck(const FiniteJointDistribution& d, const ConjectureCounterexample& c);

}  // namespace negdep
