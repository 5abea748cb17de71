#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "negdep/caps.hpp"
#include "negdep/distribution.hpp"
#include "negdep/stochastic_order.hpp"
#include "negdep/supermodular.hpp"
#include "negdep/upper_sets.hpp"

namespace negdep {

enum class Property { kNA, kNSMD, kNOD, kNLOD, kNUOD, kNRD, kNLTD, kNRTD, kNRD1, kNLTD1, kNRTD1 };

inline constexpr Property kAllProperties[] = {
    Property::kNA,  Property::kNSMD, Property::kNOD,  Property::kNLOD,
    Property::kNUOD, Property::kNRD, Property::kNLTD, Property::kNRTD,
    Property::kNRD1, Property::kNLTD1, Property::kNRTD1};

/// "NA", "NSMD", ..., "NRD1".
std::string_view property_name(Property p);
/// Case-insensitive inverse of property_name; throws kParse.
Property parse_property(std::string_view name);

/// Strictness of the tail events: kDefault is {X_J <= x} / {X_J > x},
/// kStrict is {X_J < x} / {X_J > x}, kWeak is {X_J <= x} / {X_J >= x}.
enum class TailVariant { kDefault, kStrict, kWeak };
std::string_view tail_variant_name(TailVariant v);

struct CheckOptions {
  /// Bound on |J| for the conditional properties and on the smaller block
  /// for NA. Unset means no bound.
  std::optional<std::size_t> max_j;
  EnumerationCaps caps;
  TailVariant variant = TailVariant::kDefault;
  OrderMode order_mode = OrderMode::kFast;
  unsigned jobs = 1;
};

struct CheckStats {
  std::uint64_t index_pairs = 0;
  std::uint64_t conditioning_points = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t upper_sets = 0;

  CheckStats& operator+=(const CheckStats& o);
  friend bool operator==(const CheckStats&, const CheckStats&) = default;
};

/// [X_I | event(x*)] is not <=_st [X_I | event(x)] although x <= x*:
/// P(X_I in U | event(x*)) > P(X_I in U | event(x)).
struct ConditionalWitness {
  IndexSet i;
  IndexSet j;
  ConditioningEvent at_x;
  ConditioningEvent at_x_star;
  UpperSet u;
  Rational p_at_x;
  Rational p_at_x_star;
  friend bool operator==(const ConditionalWitness&, const ConditionalWitness&) = default;
};

/// P(X_A1 in U, X_A2 in V) > P(X_A1 in U) P(X_A2 in V).
struct AssociationWitness {
  IndexSet a1;
  IndexSet a2;
  UpperSet u;
  UpperSet v;
  Rational p_joint;
  Rational p_u;
  Rational p_v;
  friend bool operator==(const AssociationWitness&, const AssociationWitness&) = default;
};

/// Orthant probability above the product of its marginals at a corner.
struct OrthantWitness {
  enum class Side { kLower, kUpper };
  Side side;
  std::vector<ExtRational> corner;
  Rational joint;
  Rational product;
  friend bool operator==(const OrthantWitness&, const OrthantWitness&) = default;
};

/// Supermodular psi with E[psi(X)] > E[psi(X_indep)].
struct SupermodularWitness {
  GridFunction psi;
  Rational expectation;
  Rational expectation_independent;
  friend bool operator==(const SupermodularWitness&, const SupermodularWitness&) = default;
};

using Witness =
    std::variant<ConditionalWitness, AssociationWitness, OrthantWitness, SupermodularWitness>;

struct Verdict {
  Property property;
  bool holds = false;
  std::optional<Witness> witness;
  CheckStats stats;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict check_nod(const FiniteJointDistribution& d);
Verdict check_nlod(const FiniteJointDistribution& d);
Verdict check_nuod(const FiniteJointDistribution& d);
Verdict check_na(const FiniteJointDistribution& d, const CheckOptions& options = {});
Verdict check_nsmd(const FiniteJointDistribution& d, const CheckOptions& options = {});
Verdict check_nrd(const FiniteJointDistribution& d, const CheckOptions& options = {});
Verdict check_nltd(const FiniteJointDistribution& d, const CheckOptions& options = {});
Verdict check_nrtd(const FiniteJointDistribution& d, const CheckOptions& options = {});
Verdict check_nrd1(const FiniteJointDistribution& d, const CheckOptions& options = {});
Verdict check_nltd1(const FiniteJointDistribution& d, const CheckOptions& options = {});
Verdict check_nrtd1(const FiniteJointDistribution& d, const CheckOptions& options = {});
Verdict check_property(const FiniteJointDistribution& d, Property p,
                       const CheckOptions& options = {});

/// Re-evaluates a witness from scratch against d with plain atom sums and
/// reports whether it exhibits a strict violation.
bool recheck(const FiniteJointDistribution& d, const Witness& w);

/// family(theta) <=_st family(theta') for every comparable theta <= theta'.
struct FamilyVerdict {
  bool holds = false;
  std::optional<Point> theta;
  std::optional<Point> theta_prime;
  std::optional<UpperSet> u;
  std::uint64_t comparisons = 0;
};
FamilyVerdict check_stoch_increasing(const std::map<Point, FiniteJointDistribution>& family,
                                     OrderMode mode = OrderMode::kFast,
                                     const EnumerationCaps& caps = {});

}  // namespace negdep
