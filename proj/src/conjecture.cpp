#include "negdep/conjecture.hpp"

#include <algorithm>

#include "negdep/error.hpp"
#include "ordered_tasks.hpp"

namespace negdep {

namespace {

enum Label : unsigned { kI = 0, kJ = 1, kK = 2, kL = 3 };

struct Cell {
  std::uint64_t points = 0;
  std::uint64_t comparisons = 0;
  std::optional<ConjectureCounterexample> counterexample;
};

struct Candidate {
  Point key;
  ConditioningEvent event;
  FiniteJointDistribution law;
};

Point project(std::span<const Rational> x, const IndexSet& idx) {
  Point out;
  for (std::size_t i : idx) out.push_back(x[i]);
  return out;
}

Relation relation_of(Label label) {
  switch (label) {
    case kI: return Relation::kGe;
    case kJ: return Relation::kLe;
    default: return Relation::kEq;
  }
}

Cell run_labelling(const FiniteJointDistribution& d, const std::vector<Label>& labels,
                   const CheckOptions& options) {
  Cell cell;
  const std::size_t n = labels.size();
  std::vector<std::size_t> by[4];
  for (std::size_t c = 0; c < n; ++c) by[labels[c]].push_back(c);
  const IndexSet l(by[kL]);
  std::vector<std::size_t> cond_idx;
  for (std::size_t c = 0; c < n; ++c) {
    if (labels[c] != kL) cond_idx.push_back(c);
  }
  const auto axes = support_grid(d);

  // Product grid over the conditioning coordinates, in lexicographic order.
  std::vector<Point> keys{{}};
  for (std::size_t c : cond_idx) {
    std::vector<Point> next;
    for (const auto& prefix : keys) {
      for (const auto& v : axes[c]) {
        next.push_back(prefix);
        next.back().push_back(v);
      }
    }
    keys = std::move(next);
  }

  std::vector<Candidate> cands;
  for (auto& key : keys) {
    std::vector<CoordinateConstraint> cons;
    for (std::size_t t = 0; t < cond_idx.size(); ++t) {
      cons.push_back({cond_idx[t], relation_of(labels[cond_idx[t]]), ExtRational(key[t])});
    }
    auto ev = ConditioningEvent::mixed(std::move(cons));
    auto law = try_condition(d, ev, l);
    if (!law) continue;
    ++cell.points;
    cands.push_back({std::move(key), std::move(ev), std::move(*law)});
  }

  for (std::size_t a = 0; a < cands.size(); ++a) {
    for (std::size_t b = a + 1; b < cands.size(); ++b) {
      if (!componentwise_leq(cands[a].key, cands[b].key)) continue;
      ++cell.comparisons;
      const OrderVerdict ov = st_leq(cands[b].law, cands[a].law, options.order_mode, options.caps);
      if (ov.holds) continue;
      const UpperSet& u = *ov.violating_set;
      cell.counterexample = ConjectureCounterexample{
          IndexSet(by[kI]), IndexSet(by[kJ]), IndexSet(by[kK]), l,
          cands[a].event,   cands[b].event,   u,  u.mass(cands[a].law),
          u.mass(cands[b].law)};
      return cell;
    }
  }
  return cell;
}

Rational conditional_mass(const FiniteJointDistribution& d, const ConditioningEvent& ev,
                          const IndexSet& l, const UpperSet& u) {
  Rational event;
  Rational both;
  for (const auto& a : d.atoms()) {
    if (!ev.contains(a.x)) continue;
    event += a.p;
    if (u.contains(project(a.x, l))) both += a.p;
  }
  if (event.is_zero()) throw Error(ErrorCode::kZeroProbabilityEvent, "P(" + ev.str() + ") = 0");
  return both / event;
}

}  // namespace

bool recheck(const FiniteJointDistribution& d, const ConjectureCounterexample& c) {
  if (c.l.empty()) return false;
  const auto& cx = c.at_x.constraints();
  const auto& cy = c.at_x_star.constraints();
  if (cx.size() != cy.size()) return false;
  bool differs = false;
  for (std::size_t t = 0; t < cx.size(); ++t) {
    if (cx[t].index != cy[t].index || cx[t].relation != cy[t].relation) return false;
    if (cx[t].threshold > cy[t].threshold) return false;
    if (cx[t].threshold != cy[t].threshold) differs = true;
    if (c.l.contains(cx[t].index)) return false;
  }
  return differs && conditional_mass(d, c.at_x_star, c.l, c.u) >
                        conditional_mass(d, c.at_x, c.l, c.u);
}

ConjectureResult test_conjecture(const std::vector<Rational>& values,
                                 const CheckOptions& options, std::size_t max_n) {
  const std::size_t n = values.size();
  if (n == 0) throw Error(ErrorCode::kEmptyIndexSet, "no values given");
  if (n > max_n) {
    throw Error(ErrorCode::kEnumerationCapExceeded,
                "conjecture test limited to n <= " + std::to_string(max_n));
  }
  const FiniteJointDistribution d = permutation_distribution(values);

  // Labellings in base-4 counting order, coordinate 0 most significant.
  std::vector<std::vector<Label>> labellings;
  std::size_t total = 1;
  for (std::size_t c = 0; c < n; ++c) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Label> labels(n);
    std::size_t rest = code;
    bool has_l = false;
    bool has_cond = false;
    for (std::size_t c = n; c-- > 0;) {
      labels[c] = static_cast<Label>(rest % 4);
      rest /= 4;
      (labels[c] == kL ? has_l : has_cond) = true;
    }
    if (has_l && has_cond) labellings.push_back(std::move(labels));
  }

  auto cells = detail::run_ordered<Cell>(
      labellings.size(), options.jobs,
      [&](std::size_t t) { return run_labelling(d, labellings[t], options); },
      [](const Cell& c) { return c.counterexample.has_value(); });

  ConjectureResult result;
  result.values = values;
  result.holds_on_instance = true;
  for (auto& cell : cells) {
    ++result.partitions;
    result.conditioning_points += cell.points;
    result.comparisons += cell.comparisons;
    if (cell.counterexample) {
      if (!recheck(d, *cell.counterexample)) {
        throw Error(ErrorCode::kInternal, "conjecture counterexample failed re-verification");
      }
      result.holds_on_instance = false;
      result.counterexample = std::move(cell.counterexample);
      break;
    }
  }
  return result;
}

}  // namespace negdep
