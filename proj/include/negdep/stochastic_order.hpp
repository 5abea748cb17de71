#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "negdep/caps.hpp"
#include "negdep/distribution.hpp"
#include "negdep/upper_sets.hpp"

namespace negdep {

/// Joint law of (X, Y) with mass only on pairs x <= y; certifies X <=_st Y.
struct Coupling {
  struct Cell {
    Point x;
    Point y;
    Rational mass;
  };
  std::vector<Cell> cells;
};

struct OrderVerdict {
  bool holds = false;
  /// On failure: an upper set U with P(X in U) > P(Y in U).
  std::optional<UpperSet> violating_set;
  /// On success of the coupling route.
  std::optional<Coupling> coupling;
  std::uint64_t upper_sets_examined = 0;
};

/// Fast: one decider (univariate sweep or max-flow). Verify: every applicable
/// decider, disagreement is a hard internal error.
enum class OrderMode { kFast, kVerify };

/// X <=_st Y iff P(X in U) <= P(Y in U) for every upper set U of the union
/// support. Returns the first violating U in enumeration order.
OrderVerdict st_leq_uppersets(const FiniteJointDistribution& dx,
                              const FiniteJointDistribution& dy, std::uint64_t cap);

/// X <=_st Y iff the monotone transportation problem from the atoms of X to
/// the atoms of Y is feasible (max flow = 1). A failing instance yields an
/// upper set from the minimum cut.
OrderVerdict st_leq_coupling(const FiniteJointDistribution& dx,
                             const FiniteJointDistribution& dy);

/// One-dimensional shortcut: compares tail masses at every support value and
/// returns the quantile coupling on success.
OrderVerdict st_leq_univariate(const FiniteJointDistribution& dx,
                               const FiniteJointDistribution& dy);

/// Fast mode uses the univariate sweep in dimension one and max-flow
/// otherwise.
OrderVerdict st_leq(const FiniteJointDistribution& dx, const FiniteJointDistribution& dy,
                    OrderMode mode, const EnumerationCaps& caps);

/// Exact check of the marginal and support constraints of a coupling.
bool verify_coupling(const FiniteJointDistribution& dx, const FiniteJointDistribution& dy,
                     const Coupling& coupling);

/// P(X in U) > P(Y in U), evaluated directly.
bool verify_upper_set_violation(const FiniteJointDistribution& dx,
                                const FiniteJointDistribution& dy, const UpperSet& u);

}  // namespace negdep
