#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "negdep/caps.hpp"
#include "negdep/distribution.hpp"

namespace negdep {

/// Function on a finite product grid, values stored row-major (last axis
/// fastest).
class GridFunction {
 public:
  GridFunction(std::vector<std::vector<Rational>> axes, std::vector<Rational> values);

  const std::vector<std::vector<Rational>>& axes() const { return axes_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t dim() const { return axes_.size(); }

  /// nullopt when x is not a grid point.
  std::optional<Rational> at(std::span<const Rational> x) const;

  /// Every adjacent-step mixed second difference is non-negative.
  bool is_supermodular() const;

  /// Throws kUndefinedAtAtom if some atom lies off the grid.
  Rational expectation(const FiniteJointDistribution& d) const;

  friend bool operator==(const GridFunction&, const GridFunction&) = default;

 private:
  std::vector<std::vector<Rational>> axes_;
  std::vector<Rational> values_;
};

struct SupermodularVerdict {
  bool holds = false;
  /// max (E_X - E_Y)[psi] over supermodular psi with -1 <= psi <= 1.
  Rational optimum;
  /// On failure: an optimal psi, with the two expectations.
  std::optional<GridFunction> witness;
  Rational expectation_x;
  Rational expectation_y;
  std::size_t lp_variables = 0;
  std::size_t lp_constraints = 0;
  std::uint64_t pivots = 0;
};

/// Decides E_X[psi] <= E_Y[psi] for all supermodular psi by an exact LP over
/// the product grid of both laws' axis values. Throws kGridTooLarge when the
/// grid exceeds caps.lp_variables.
SupermodularVerdict supermodular_leq(const FiniteJointDistribution& dx,
                                     const FiniteJointDistribution& dy,
                                     const EnumerationCaps& caps);

}  // namespace negdep
