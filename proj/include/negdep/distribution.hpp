#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "negdep/index_set.hpp"
#include "negdep/rational.hpp"

namespace negdep {

using Point = std::vector<Rational>;

/// Componentwise a <= b. Sizes must agree.
bool componentwise_leq(std::span<const Rational> a, std::span<const Rational> b);

std::string point_str(std::span<const Rational> x);

struct Atom {
  Point x;
  Rational p;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite discrete law on Q^dim. Atoms are stored in lexicographic order of
/// their support vectors, every probability is strictly positive and the
/// total mass is exactly one. Instances are immutable.
class FiniteJointDistribution {
 public:
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return atoms_.size(); }
  std::span<const Atom> atoms() const { return atoms_; }

  /// Zero when x is not in the support.
  Rational probability(std::span<const Rational> x) const;

  friend bool operator==(const FiniteJointDistribution&,
                         const FiniteJointDistribution&) = default;

 private:
  friend class DistributionBuilder;
  FiniteJointDistribution(std::size_t dim, std::vector<Atom> atoms)
      : dim_(dim), atoms_(std::move(atoms)) {}

  std::size_t dim_ = 0;
  std::vector<Atom> atoms_;
};

/// Accumulates masses (merging equal support vectors) and validates on build.
class DistributionBuilder {
 public:
  explicit DistributionBuilder(std::size_t dim) : dim_(dim) {}

  void add(Point x, const Rational& p);
  std::size_t dim() const { return dim_; }

  /// Drops nothing: throws kNonpositiveProbability for any non-positive
  /// accumulated mass and kMassNotOne unless the total is exactly one.
  FiniteJointDistribution build() &&;

  /// Divides every mass by the total first; used for conditional laws.
  FiniteJointDistribution build_normalized() &&;

 private:
  std::size_t dim_;
  std::map<Point, Rational> masses_;
};

FiniteJointDistribution make_pmf(std::size_t dim, const std::vector<Atom>& entries);
FiniteJointDistribution point_mass(Point x);
/// Uniform law on the given (distinct after merging) points.
FiniteJointDistribution uniform_on(std::size_t dim, const std::vector<Point>& points);

enum class Relation { kEq, kLe, kLt, kGe, kGt };

std::string_view relation_symbol(Relation rel);

struct CoordinateConstraint {
  std::size_t index;
  Relation relation;
  ExtRational threshold;

  bool admits(const Rational& value) const;
  friend bool operator==(const CoordinateConstraint&, const CoordinateConstraint&) = default;
};

/// An intersection of one-coordinate constraints such as {X_j = x_j},
/// {X_j <= x_j} or {X_j > x_j}.
class ConditioningEvent {
 public:
  enum class Kind { kEq, kLower, kUpper, kMixed };

  static ConditioningEvent equal(const IndexSet& indices, const Point& values);
  /// {X_J <= x_J} (or < when strict).
  static ConditioningEvent lower(const IndexSet& indices,
                                 const std::vector<ExtRational>& thresholds,
                                 bool strict = false);
  /// {X_J > x_J} (or >= when strict is false).
  static ConditioningEvent upper(const IndexSet& indices,
                                 const std::vector<ExtRational>& thresholds,
                                 bool strict = true);
  static ConditioningEvent lower(const IndexSet& indices,
                                 const std::vector<ExtRational>& thresholds,
                                 const std::vector<bool>& strict);
  static ConditioningEvent upper(const IndexSet& indices,
                                 const std::vector<ExtRational>& thresholds,
                                 const std::vector<bool>& strict);
  static ConditioningEvent mixed(std::vector<CoordinateConstraint> constraints);

  Kind kind() const { return kind_; }
  const IndexSet& indices() const { return indices_; }
  const std::vector<CoordinateConstraint>& constraints() const { return constraints_; }
  std::vector<ExtRational> thresholds() const;

  bool contains(std::span<const Rational> x) const;
  /// One-based rendering, e.g. "X1<=0, X3>1".
  std::string str() const;

  friend bool operator==(const ConditioningEvent&, const ConditioningEvent&) = default;

 private:
  ConditioningEvent(Kind kind, std::vector<CoordinateConstraint> constraints);

  Kind kind_ = Kind::kMixed;
  IndexSet indices_;
  std::vector<CoordinateConstraint> constraints_;
};

/// Law of the projection onto idx.
FiniteJointDistribution marginal(const FiniteJointDistribution& d, const IndexSet& idx);

Rational probability(const FiniteJointDistribution& d, const ConditioningEvent& ev);

/// Conditional law of the coordinates `keep` given `ev`. Throws
/// kZeroProbabilityEvent when P(ev) = 0.
FiniteJointDistribution condition(const FiniteJointDistribution& d,
                                  const ConditioningEvent& ev, const IndexSet& keep);

/// Same as condition() but returns nullopt for zero-probability events.
std::optional<FiniteJointDistribution> try_condition(const FiniteJointDistribution& d,
                                                     const ConditioningEvent& ev,
                                                     const IndexSet& keep);

/// Independent concatenation; dim = d1.dim() + d2.dim().
FiniteJointDistribution product(const FiniteJointDistribution& d1,
                                const FiniteJointDistribution& d2);

/// Product of the univariate marginals of d.
FiniteJointDistribution independent_copy(const FiniteJointDistribution& d);

using FunctionOnSupport = std::function<Rational(std::span<const Rational>)>;

Rational expectation(const FiniteJointDistribution& d, const FunctionOnSupport& f);
/// Tabulated f; throws kUndefinedAtAtom when an atom is missing from the table.
Rational expectation(const FiniteJointDistribution& d, const std::map<Point, Rational>& f);

/// Uniform law over all n! arrangements of values, with equal arrangements
/// merged.
FiniteJointDistribution permutation_distribution(const std::vector<Rational>& values);

/// Sorted distinct values per coordinate.
std::vector<std::vector<Rational>> support_grid(const FiniteJointDistribution& d);

/// Law of -X.
FiniteJointDistribution negate(const FiniteJointDistribution& d);

/// Law of (X_{perm[0]}, ..., X_{perm[n-1]}).
FiniteJointDistribution permute_coordinates(const FiniteJointDistribution& d,
                                            const std::vector<std::size_t>& perm);

}  // namespace negdep
