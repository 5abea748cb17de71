#include "negdep/distribution.hpp"

#include <algorithm>

#include "negdep/error.hpp"

namespace negdep {

bool componentwise_leq(std::span<const Rational> a, std::span<const Rational> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] < a[i]) return false;
  }
  return true;
}

std::string point_str(std::span<const Rational> x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += x[i].str();
  }
  return out + ")";
}

Rational FiniteJointDistribution::probability(std::span<const Rational> x) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x, [](const Atom& a, auto key) {
    return std::lexicographical_compare(a.x.begin(), a.x.end(), key.begin(), key.end());
  });
  if (it != atoms_.end() && std::equal(it->x.begin(), it->x.end(), x.begin(), x.end())) {
    return it->p;
  }
  return Rational(0);
}

void DistributionBuilder::add(Point x, const Rational& p) {
  if (x.size() != dim_) {
    throw Error(ErrorCode::kDimMismatch, "support vector " + point_str(x) + " has length " +
                                             std::to_string(x.size()) + ", expected " +
                                             std::to_string(dim_));
  }
  auto [it, inserted] = masses_.try_emplace(std::move(x), p);
  if (!inserted) it->second += p;
}

FiniteJointDistribution DistributionBuilder::build() && {
  if (dim_ == 0) throw Error(ErrorCode::kDimMismatch, "dimension must be positive");
  if (masses_.empty()) throw Error(ErrorCode::kMassNotOne, "distribution has no atoms");
  Rational total;
  std::vector<Atom> atoms;
  atoms.reserve(masses_.size());
  for (auto& [x, p] : masses_) {
    if (p.sign() <= 0) {
      throw Error(ErrorCode::kNonpositiveProbability,
                  "non-positive mass " + p.str() + " at " + point_str(x));
    }
    total += p;
    atoms.push_back(Atom{x, p});
  }
  if (total != Rational(1)) {
    throw Error(ErrorCode::kMassNotOne, "total mass is " + total.str() + ", expected 1");
  }
  return FiniteJointDistribution(dim_, std::move(atoms));
}

FiniteJointDistribution DistributionBuilder::build_normalized() && {
  Rational total;
  for (const auto& entry : masses_) total += entry.second;
  if (total.sign() <= 0) throw Error(ErrorCode::kZeroProbabilityEvent, "zero total mass");
  for (auto& entry : masses_) entry.second /= total;
  return std::move(*this).build();
}

FiniteJointDistribution make_pmf(std::size_t dim, const std::vector<Atom>& entries) {
  if (entries.empty()) throw Error(ErrorCode::kMassNotOne, "no entries");
  DistributionBuilder builder(dim);
  for (const auto& e : entries) {
    if (e.p.sign() <= 0) {
      throw Error(ErrorCode::kNonpositiveProbability,
                  "non-positive probability " + e.p.str() + " at " + point_str(e.x));
    }
    builder.add(e.x, e.p);
  }
  return std::move(builder).build();
}

FiniteJointDistribution point_mass(Point x) {
  DistributionBuilder builder(x.size());
  builder.add(std::move(x), Rational(1));
  return std::move(builder).build();
}

FiniteJointDistribution uniform_on(std::size_t dim, const std::vector<Point>& points) {
  DistributionBuilder builder(dim);
  const Rational each(1, static_cast<long>(points.size()));
  for (const auto& x : points) builder.add(x, each);
  return std::move(builder).build();
}

// ---------------------------------------------------------------------------
// Events

std::string_view relation_symbol(Relation rel) {
  switch (rel) {
    case Relation::kEq: return "=";
    case Relation::kLe: return "<=";
    case Relation::kLt: return "<";
    case Relation::kGe: return ">=";
    case Relation::kGt: return ">";
  }
  return "?";
}

bool CoordinateConstraint::admits(const Rational& value) const {
  const auto c = value <=> threshold;
  switch (relation) {
    case Relation::kEq: return c == 0;
    case Relation::kLe: return c <= 0;
    case Relation::kLt: return c < 0;
    case Relation::kGe: return c >= 0;
    case Relation::kGt: return c > 0;
  }
  return false;
}

ConditioningEvent::ConditioningEvent(Kind kind, std::vector<CoordinateConstraint> constraints)
    : kind_(kind), constraints_(std::move(constraints)) {
  std::sort(constraints_.begin(), constraints_.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  std::vector<std::size_t> idx;
  for (const auto& c : constraints_) idx.push_back(c.index);
  indices_ = IndexSet(std::move(idx));
}

ConditioningEvent ConditioningEvent::equal(const IndexSet& indices, const Point& values) {
  if (values.size() != indices.size()) {
    throw Error(ErrorCode::kDimMismatch, "equality event needs one value per index");
  }
  std::vector<CoordinateConstraint> cs;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    cs.push_back({indices[k], Relation::kEq, ExtRational(values[k])});
  }
  return ConditioningEvent(Kind::kEq, std::move(cs));
}

ConditioningEvent ConditioningEvent::lower(const IndexSet& indices,
                                           const std::vector<ExtRational>& thresholds,
                                           bool strict) {
  return lower(indices, thresholds, std::vector<bool>(indices.size(), strict));
}

ConditioningEvent ConditioningEvent::upper(const IndexSet& indices,
                                           const std::vector<ExtRational>& thresholds,
                                           bool strict) {
  return upper(indices, thresholds, std::vector<bool>(indices.size(), strict));
}

ConditioningEvent ConditioningEvent::lower(const IndexSet& indices,
                                           const std::vector<ExtRational>& thresholds,
                                           const std::vector<bool>& strict) {
  if (thresholds.size() != indices.size() || strict.size() != indices.size()) {
    throw Error(ErrorCode::kDimMismatch, "lower event needs one threshold per index");
  }
  std::vector<CoordinateConstraint> cs;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    cs.push_back({indices[k], strict[k] ? Relation::kLt : Relation::kLe, thresholds[k]});
  }
  return ConditioningEvent(Kind::kLower, std::move(cs));
}

ConditioningEvent ConditioningEvent::upper(const IndexSet& indices,
                                           const std::vector<ExtRational>& thresholds,
                                           const std::vector<bool>& strict) {
  if (thresholds.size() != indices.size() || strict.size() != indices.size()) {
    throw Error(ErrorCode::kDimMismatch, "upper event needs one threshold per index");
  }
  std::vector<CoordinateConstraint> cs;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    cs.push_back({indices[k], strict[k] ? Relation::kGt : Relation::kGe, thresholds[k]});
  }
  return ConditioningEvent(Kind::kUpper, std::move(cs));
}

ConditioningEvent ConditioningEvent::mixed(std::vector<CoordinateConstraint> constraints) {
  return ConditioningEvent(Kind::kMixed, std::move(constraints));
}

std::vector<ExtRational> ConditioningEvent::thresholds() const {
  std::vector<ExtRational> out;
  for (const auto& c : constraints_) out.push_back(c.threshold);
  return out;
}

bool ConditioningEvent::contains(std::span<const Rational> x) const {
  for (const auto& c : constraints_) {
    if (!c.admits(x[c.index])) return false;
  }
  return true;
}

std::string ConditioningEvent::str() const {
  std::string out;
  for (std::size_t k = 0; k < constraints_.size(); ++k) {
    if (k) out += ", ";
    const auto& c = constraints_[k];
    out += "X" + std::to_string(c.index + 1) + std::string(relation_symbol(c.relation)) +
           c.threshold.str();
  }
  return out.empty() ? "Omega" : out;
}

// ---------------------------------------------------------------------------
// Operations

namespace {

Point project(std::span<const Rational> x, const IndexSet& idx) {
  Point out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(x[i]);
  return out;
}

void check_event(const FiniteJointDistribution& d, const ConditioningEvent& ev,
                 const IndexSet& keep) {
  ev.indices().check_range(d.dim());
  keep.check_range(d.dim());
  if (keep.empty()) throw Error(ErrorCode::kEmptyIndexSet, "nothing to keep");
  if (!keep.disjoint(ev.indices())) {
    throw Error(ErrorCode::kDimMismatch, "kept coordinates overlap the conditioning block");
  }
}

}  // namespace

FiniteJointDistribution marginal(const FiniteJointDistribution& d, const IndexSet& idx) {
  if (idx.empty()) throw Error(ErrorCode::kEmptyIndexSet, "marginal over empty index set");
  idx.check_range(d.dim());
  DistributionBuilder builder(idx.size());
  for (const auto& a : d.atoms()) builder.add(project(a.x, idx), a.p);
  return std::move(builder).build();
}

Rational probability(const FiniteJointDistribution& d, const ConditioningEvent& ev) {
  ev.indices().check_range(d.dim());
  Rational total;
  for (const auto& a : d.atoms()) {
    if (ev.contains(a.x)) total += a.p;
  }
  return total;
}

std::optional<FiniteJointDistribution> try_condition(const FiniteJointDistribution& d,
                                                     const ConditioningEvent& ev,
                                                     const IndexSet& keep) {
  check_event(d, ev, keep);
  DistributionBuilder builder(keep.size());
  bool any = false;
  for (const auto& a : d.atoms()) {
    if (ev.contains(a.x)) {
      builder.add(project(a.x, keep), a.p);
      any = true;
    }
  }
  if (!any) return std::nullopt;
  return std::move(builder).build_normalized();
}

FiniteJointDistribution condition(const FiniteJointDistribution& d,
                                  const ConditioningEvent& ev, const IndexSet& keep) {
  auto law = try_condition(d, ev, keep);
  if (!law) {
    throw Error(ErrorCode::kZeroProbabilityEvent, "P(" + ev.str() + ") = 0");
  }
  return std::move(*law);
}

FiniteJointDistribution product(const FiniteJointDistribution& d1,
                                const FiniteJointDistribution& d2) {
  DistributionBuilder builder(d1.dim() + d2.dim());
  for (const auto& a : d1.atoms()) {
    for (const auto& b : d2.atoms()) {
      Point x = a.x;
      x.insert(x.end(), b.x.begin(), b.x.end());
      builder.add(std::move(x), a.p * b.p);
    }
  }
  return std::move(builder).build();
}

FiniteJointDistribution independent_copy(const FiniteJointDistribution& d) {
  FiniteJointDistribution out = marginal(d, IndexSet{0});
  for (std::size_t i = 1; i < d.dim(); ++i) out = product(out, marginal(d, IndexSet{i}));
  return out;
}

Rational expectation(const FiniteJointDistribution& d, const FunctionOnSupport& f) {
  Rational total;
  for (const auto& a : d.atoms()) total += f(a.x) * a.p;
  return total;
}

Rational expectation(const FiniteJointDistribution& d, const std::map<Point, Rational>& f) {
  Rational total;
  for (const auto& a : d.atoms()) {
    auto it = f.find(a.x);
    if (it == f.end()) {
      throw Error(ErrorCode::kUndefinedAtAtom, "function undefined at " + point_str(a.x));
    }
    total += it->second * a.p;
  }
  return total;
}

FiniteJointDistribution permutation_distribution(const std::vector<Rational>& values) {
  if (values.empty()) throw Error(ErrorCode::kDimMismatch, "empty value vector");
  Point x = values;
  std::sort(x.begin(), x.end());
  // next_permutation over a sorted multiset visits each distinct arrangement
  // exactly once; every distinct arrangement carries prod(mult!)/n!.
  std::vector<Point> arrangements;
  do {
    arrangements.push_back(x);
  } while (std::next_permutation(x.begin(), x.end()));
  return uniform_on(values.size(), arrangements);
}

std::vector<std::vector<Rational>> support_grid(const FiniteJointDistribution& d) {
  std::vector<std::vector<Rational>> grid(d.dim());
  for (const auto& a : d.atoms()) {
    for (std::size_t i = 0; i < d.dim(); ++i) grid[i].push_back(a.x[i]);
  }
  for (auto& axis : grid) {
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
  }
  return grid;
}

FiniteJointDistribution negate(const FiniteJointDistribution& d) {
  DistributionBuilder builder(d.dim());
  for (const auto& a : d.atoms()) {
    Point x;
    for (const auto& v : a.x) x.push_back(-v);
    builder.add(std::move(x), a.p);
  }
  return std::move(builder).build();
}

FiniteJointDistribution permute_coordinates(const FiniteJointDistribution& d,
                                            const std::vector<std::size_t>& perm) {
  if (perm.size() != d.dim()) throw Error(ErrorCode::kDimMismatch, "bad permutation length");
  DistributionBuilder builder(d.dim());
  for (const auto& a : d.atoms()) {
    Point x;
    for (std::size_t i : perm) x.push_back(a.x.at(i));
    builder.add(std::move(x), a.p);
  }
  return std::move(builder).build();
}

}  // namespace negdep
