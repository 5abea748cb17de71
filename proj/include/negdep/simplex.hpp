#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "negdep/rational.hpp"

namespace negdep {

enum class LpRelation { kLe, kGe, kEq };

struct LpConstraint {
  std::vector<std::pair<std::size_t, Rational>> terms;  // (variable, coefficient)
  LpRelation relation = LpRelation::kLe;
  Rational rhs;
};

/// maximize objective . x  subject to constraints, x >= 0.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LpConstraint> constraints;
};

enum class LpStatus { kOptimal, kUnbounded, kInfeasible };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational optimum;
  std::vector<Rational> x;
  std::uint64_t pivots = 0;
};

/// Exact two-phase tableau simplex with Bland's rule for both the entering
/// and the leaving variable, so degenerate programs cannot cycle.
LpSolution simplex_solve(const LinearProgram& lp);

}  // namespace negdep
