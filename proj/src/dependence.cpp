#include "negdep/dependence.hpp"

#include <algorithm>
#include <cctype>

#include "negdep/error.hpp"
#include "negdep/max_flow.hpp"
#include "ordered_tasks.hpp"

namespace negdep {

namespace {

constexpr std::size_t kMaxOrthantCorners = 4'000'000;

struct TaskOutcome {
  CheckStats stats;
  std::optional<Witness> witness;
};

struct Merged {
  CheckStats stats;
  std::optional<Witness> witness;
};

template <class Task>
Merged run_tasks(std::size_t count, unsigned jobs, Task&& task) {
  auto outcomes = detail::run_ordered<TaskOutcome>(
      count, jobs, task, [](const TaskOutcome& o) { return o.witness.has_value(); });
  Merged merged;
  for (auto& o : outcomes) {
    merged.stats += o.stats;
    if (o.witness) merged.witness = std::move(o.witness);
  }
  return merged;
}

Verdict make_verdict(Property p, Merged merged) {
  Verdict v{p, !merged.witness.has_value(), std::move(merged.witness), merged.stats};
  return v;
}

void require_dim(const FiniteJointDistribution& d, Property p) {
  if (d.dim() < 2) {
    throw Error(ErrorCode::kDimMismatch,
                std::string(property_name(p)) + " needs a distribution of dimension >= 2");
  }
}

Point project(std::span<const Rational> x, const IndexSet& idx) {
  Point out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(x[i]);
  return out;
}

bool ext_leq(const std::vector<ExtRational>& a, const std::vector<ExtRational>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

// ---------------------------------------------------------------- orthants

struct Grid {
  std::vector<std::size_t> extent;
  std::vector<std::size_t> stride;
  std::size_t total = 1;

  explicit Grid(std::vector<std::size_t> ext) : extent(std::move(ext)), stride(extent.size(), 1) {
    for (std::size_t i = extent.size(); i-- > 0;) {
      stride[i] = total;
      total *= extent[i];
      if (total > kMaxOrthantCorners) {
        throw Error(ErrorCode::kGridTooLarge, "orthant grid exceeds " +
                                                  std::to_string(kMaxOrthantCorners) + " corners");
      }
    }
  }
  std::size_t digit(std::size_t flat, std::size_t axis) const {
    return (flat / stride[axis]) % extent[axis];
  }
};

std::vector<std::size_t> ranks_of(std::span<const Rational> x,
                                  const std::vector<std::vector<Rational>>& axes) {
  std::vector<std::size_t> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    r[i] = static_cast<std::size_t>(std::lower_bound(axes[i].begin(), axes[i].end(), x[i]) -
                                    axes[i].begin());
  }
  return r;
}

Verdict orthant_check(const FiniteJointDistribution& d, OrthantWitness::Side side) {
  const Property prop = side == OrthantWitness::Side::kLower ? Property::kNLOD : Property::kNUOD;
  require_dim(d, prop);
  const auto axes = support_grid(d);
  const std::size_t n = d.dim();
  const bool lower = side == OrthantWitness::Side::kLower;

  // Lower: index r means threshold axes[r]; value P(X <= x).
  // Upper: index t means threshold -inf (t = 0) or axes[t-1]; value P(X > x).
  std::vector<std::size_t> ext(n);
  for (std::size_t i = 0; i < n; ++i) ext[i] = axes[i].size() + (lower ? 0 : 1);
  const Grid grid(ext);
  std::vector<Rational> joint(grid.total);
  std::vector<std::vector<Rational>> marg(n);
  for (std::size_t i = 0; i < n; ++i) marg[i].assign(ext[i], Rational(0));
  for (const auto& a : d.atoms()) {
    const auto r = ranks_of(a.x, axes);
    std::size_t flat = 0;
    for (std::size_t i = 0; i < n; ++i) {
      flat += r[i] * grid.stride[i];
      marg[i][r[i]] += a.p;
    }
    joint[flat] += a.p;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (lower) {
      for (std::size_t k = 1; k < ext[i]; ++k) marg[i][k] += marg[i][k - 1];
      for (std::size_t f = 0; f < grid.total; ++f) {
        if (grid.digit(f, i) > 0) joint[f] += joint[f - grid.stride[i]];
      }
    } else {
      for (std::size_t k = ext[i] - 1; k-- > 0;) marg[i][k] += marg[i][k + 1];
      for (std::size_t f = grid.total; f-- > 0;) {
        if (grid.digit(f, i) + 1 < ext[i]) joint[f] += joint[f + grid.stride[i]];
      }
    }
  }

  Verdict v{prop, true, std::nullopt, {}};
  for (std::size_t f = 0; f < grid.total; ++f) {
    ++v.stats.conditioning_points;
    Rational prod(1);
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) prod *= marg[i][grid.digit(f, i)];
    if (joint[f] > prod) {
      OrthantWitness w{side, {}, joint[f], prod};
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t t = grid.digit(f, i);
        if (lower) {
          w.corner.emplace_back(axes[i][t]);
        } else {
          w.corner.push_back(t == 0 ? ExtRational::neg_inf() : ExtRational(axes[i][t - 1]));
        }
      }
      v.holds = false;
      v.witness = std::move(w);
      return v;
    }
  }
  return v;
}

Rational orthant_probability(const FiniteJointDistribution& d, const OrthantWitness& w,
                             std::optional<std::size_t> only) {
  Rational total;
  for (const auto& a : d.atoms()) {
    bool in = true;
    for (std::size_t i = 0; i < d.dim() && in; ++i) {
      if (only && *only != i) continue;
      in = w.side == OrthantWitness::Side::kLower ? a.x[i] <= w.corner[i] : a.x[i] > w.corner[i];
    }
    if (in) total += a.p;
  }
  return total;
}

// ------------------------------------------------------------- conditional

enum class CondKind { kEq, kLower, kUpper };

struct CondPoint {
  std::vector<ExtRational> key;
  ConditioningEvent event;
  FiniteJointDistribution law;
};

std::vector<std::vector<ExtRational>> product_keys(
    const std::vector<std::vector<ExtRational>>& per_axis) {
  std::vector<std::vector<ExtRational>> out{{}};
  for (const auto& axis : per_axis) {
    std::vector<std::vector<ExtRational>> next;
    next.reserve(out.size() * axis.size());
    for (const auto& prefix : out) {
      for (const auto& v : axis) {
        next.push_back(prefix);
        next.back().push_back(v);
      }
    }
    out = std::move(next);
  }
  return out;
}

TaskOutcome conditional_cell(const FiniteJointDistribution& d, const IndexSet& j, CondKind kind,
                             const CheckOptions& options) {
  TaskOutcome out;
  out.stats.index_pairs = 1;
  const IndexSet i = j.complement(d.dim());

  std::vector<std::vector<ExtRational>> keys;
  const bool lower_strict = options.variant == TailVariant::kStrict;
  const bool upper_strict = options.variant != TailVariant::kWeak;
  if (kind == CondKind::kEq) {
    const auto mj = marginal(d, j);
    for (const auto& a : mj.atoms()) keys.emplace_back(a.x.begin(), a.x.end());
  } else {
    const auto axes = support_grid(marginal(d, j));
    std::vector<std::vector<ExtRational>> per_axis;
    for (const auto& axis : axes) {
      std::vector<ExtRational> t;
      if (kind == CondKind::kUpper && upper_strict) t.push_back(ExtRational::neg_inf());
      t.insert(t.end(), axis.begin(), axis.end());
      if (kind == CondKind::kLower && lower_strict) t.push_back(ExtRational::pos_inf());
      per_axis.push_back(std::move(t));
    }
    keys = product_keys(per_axis);
  }

  std::vector<CondPoint> points;
  for (auto& key : keys) {
    ConditioningEvent ev = [&] {
      switch (kind) {
        case CondKind::kEq: {
          Point x;
          for (const auto& k : key) x.push_back(k.value());
          return ConditioningEvent::equal(j, x);
        }
        case CondKind::kLower:
          return ConditioningEvent::lower(j, key, lower_strict);
        case CondKind::kUpper:
          break;
      }
      return ConditioningEvent::upper(j, key, upper_strict);
    }();
    auto law = try_condition(d, ev, i);
    if (!law) continue;
    ++out.stats.conditioning_points;
    points.push_back({std::move(key), std::move(ev), std::move(*law)});
  }

  // Lexicographic key order is a linear extension of the componentwise order,
  // so every comparable pair (x, x*) has x listed first.
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (!ext_leq(points[a].key, points[b].key)) continue;
      ++out.stats.comparisons;
      const OrderVerdict ov =
          st_leq(points[b].law, points[a].law, options.order_mode, options.caps);
      out.stats.upper_sets += ov.upper_sets_examined;
      if (ov.holds) continue;
      const UpperSet& u = *ov.violating_set;
      out.witness = ConditionalWitness{i,
                                       j,
                                       points[a].event,
                                       points[b].event,
                                       u,
                                       u.mass(points[a].law),
                                       u.mass(points[b].law)};
      return out;
    }
  }
  return out;
}

Verdict conditional_check(const FiniteJointDistribution& d, Property p, CondKind kind,
                          CheckOptions options, std::optional<std::size_t> j_bound) {
  require_dim(d, p);
  std::size_t bound = d.dim() - 1;
  if (options.max_j) bound = std::min(bound, *options.max_j);
  if (j_bound) bound = std::min(bound, *j_bound);
  const auto js = subsets_by_size(d.dim(), bound);
  return make_verdict(p, run_tasks(js.size(), options.jobs, [&](std::size_t t) {
                        return conditional_cell(d, js[t], kind, options);
                      }));
}

// ---------------------------------------------------------------------- NA

// Max-weight upward-closed subset of the poset via minimum cut. Returns the
// members of an optimal closure (empty if the optimum is not positive) and the
// optimum.
std::pair<std::vector<std::size_t>, Rational> max_closure(const PointPoset& poset,
                                                          const std::vector<Rational>& w) {
  const std::size_t m = poset.size();
  Rational positive;
  for (const auto& x : w) {
    if (x.sign() > 0) positive += x;
  }
  if (positive.is_zero()) return {{}, Rational(0)};
  const std::size_t s = m;
  const std::size_t t = m + 1;
  FlowNetwork net(m + 2, s, t);
  const Rational inf = positive + Rational(1);
  for (std::size_t v = 0; v < m; ++v) {
    if (w[v].sign() > 0) net.add_edge(s, v, w[v]);
    if (w[v].sign() < 0) net.add_edge(v, t, -w[v]);
    // Edges to immediate successors suffice; all comparable pairs keep the
    // construction simple and the networks here are small.
    const Bitset& up = poset.up(v);
    for (auto u = up.find_next(v); u != Bitset::npos; u = up.find_next(u)) {
      net.add_edge(v, u, inf);
    }
  }
  const MaxFlowResult flow = max_flow(net);
  const Rational best = positive - flow.value;
  std::vector<std::size_t> members;
  if (best.sign() > 0) {
    for (std::size_t v = 0; v < m; ++v) {
      if (flow.source_side[v]) members.push_back(v);
    }
  }
  return {members, best};
}

std::size_t support_size(const FiniteJointDistribution& d, const IndexSet& idx) {
  std::vector<Point> pts;
  for (const auto& a : d.atoms()) pts.push_back(project(a.x, idx));
  std::sort(pts.begin(), pts.end());
  return static_cast<std::size_t>(std::unique(pts.begin(), pts.end()) - pts.begin());
}

TaskOutcome association_cell(const FiniteJointDistribution& d, const IndexSet& a,
                             const CheckOptions& options) {
  TaskOutcome out;
  out.stats.index_pairs = 1;
  const IndexSet b = a.complement(d.dim());
  // Enumerate upper sets on the smaller block, maximise over the other one.
  IndexSet e = a;
  IndexSet f = b;
  if (b.size() < a.size() ||
      (b.size() == a.size() && support_size(d, b) < support_size(d, a))) {
    std::swap(e, f);
  }

  std::vector<Point> e_pts;
  std::vector<Point> f_pts;
  for (const auto& atom : d.atoms()) {
    e_pts.push_back(project(atom.x, e));
    f_pts.push_back(project(atom.x, f));
  }
  const PointPoset pe(e_pts);
  const PointPoset pf(f_pts);
  struct Cell {
    std::size_t e;
    std::size_t f;
    Rational p;
  };
  std::vector<Cell> cells;
  std::vector<Rational> pe_mass(pe.size());
  std::vector<Rational> pf_mass(pf.size());
  for (std::size_t k = 0; k < d.size(); ++k) {
    const std::size_t ie = *pe.index_of(e_pts[k]);
    const std::size_t jf = *pf.index_of(f_pts[k]);
    const Rational& p = d.atoms()[k].p;
    cells.push_back({ie, jf, p});
    pe_mass[ie] += p;
    pf_mass[jf] += p;
  }

  const UpperSetEnumerator en(pe, options.caps.upper_sets);
  out.stats.upper_sets = en.for_each([&](const Bitset& members, const std::vector<std::size_t>& antichain) {
    Rational pu;
    for (auto k = members.find_first(); k != Bitset::npos; k = members.find_next(k)) {
      pu += pe_mass[k];
    }
    if (pu.is_zero() || pu == Rational(1)) return true;
    ++out.stats.comparisons;
    std::vector<Rational> w(pf.size());
    for (std::size_t k = 0; k < pf.size(); ++k) w[k] = -(pu * pf_mass[k]);
    for (const auto& c : cells) {
      if (members.test(c.e)) w[c.f] += c.p;
    }
    auto [closure, best] = max_closure(pf, w);
    if (best.sign() <= 0) return true;
    UpperSet u = pe.upper_set(antichain);
    std::vector<Point> gens;
    for (std::size_t k : closure) gens.push_back(pf.point(k));
    UpperSet v = UpperSet::generated_by(std::move(gens));
    Rational pv;
    Rational joint;
    for (std::size_t k : closure) pv += pf_mass[k];
    for (const auto& c : cells) {
      if (members.test(c.e) && std::binary_search(closure.begin(), closure.end(), c.f)) {
        joint += c.p;
      }
    }
    out.witness = AssociationWitness{e, f, std::move(u), std::move(v), joint, pu, pv};
    return false;
  });
  return out;
}

}  // namespace

CheckStats& CheckStats::operator+=(const CheckStats& o) {
  index_pairs += o.index_pairs;
  conditioning_points += o.conditioning_points;
  comparisons += o.comparisons;
  upper_sets += o.upper_sets;
  return *this;
}

std::string_view property_name(Property p) {
  switch (p) {
    case Property::kNA: return "NA";
    case Property::kNSMD: return "NSMD";
    case Property::kNOD: return "NOD";
    case Property::kNLOD: return "NLOD";
    case Property::kNUOD: return "NUOD";
    case Property::kNRD: return "NRD";
    case Property::kNLTD: return "NLTD";
    case Property::kNRTD: return "NRTD";
    case Property::kNRD1: return "NRD1";
    case Property::kNLTD1: return "NLTD1";
    case Property::kNRTD1: return "NRTD1";
  }
  return "?";
}

Property parse_property(std::string_view name) {
  std::string upper(name);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (!upper.empty() && upper.back() == '1' && upper.size() > 2 && upper[upper.size() - 2] == '_') {
    upper.erase(upper.size() - 2, 1);
  }
  for (Property p : kAllProperties) {
    if (property_name(p) == upper) return p;
  }
  throw Error(ErrorCode::kParse, "unknown property '" + std::string(name) + "'");
}

std::string_view tail_variant_name(TailVariant v) {
  switch (v) {
    case TailVariant::kDefault: return "default";
    case TailVariant::kStrict: return "strict";
    case TailVariant::kWeak: return "weak";
  }
  return "?";
}

Verdict check_nlod(const FiniteJointDistribution& d) {
  return orthant_check(d, OrthantWitness::Side::kLower);
}

Verdict check_nuod(const FiniteJointDistribution& d) {
  return orthant_check(d, OrthantWitness::Side::kUpper);
}

Verdict check_nod(const FiniteJointDistribution& d) {
  Verdict lower = check_nlod(d);
  lower.property = Property::kNOD;
  if (!lower.holds) return lower;
  Verdict upper = check_nuod(d);
  upper.property = Property::kNOD;
  upper.stats += lower.stats;
  return upper;
}

Verdict check_na(const FiniteJointDistribution& d, const CheckOptions& options) {
  require_dim(d, Property::kNA);
  const std::size_t n = d.dim();
  std::size_t bound = n / 2;
  if (options.max_j) bound = std::min(bound, *options.max_j);
  // One representative per split {A, A^c}: the smaller side, or the side
  // holding coordinate 0 when both have n/2 elements.
  std::vector<IndexSet> splits;
  for (auto& a : subsets_by_size(n, bound)) {
    if (2 * a.size() == n && !a.contains(0)) continue;
    splits.push_back(std::move(a));
  }
  return make_verdict(Property::kNA, run_tasks(splits.size(), options.jobs, [&](std::size_t t) {
                        return association_cell(d, splits[t], options);
                      }));
}

Verdict check_nsmd(const FiniteJointDistribution& d, const CheckOptions& options) {
  require_dim(d, Property::kNSMD);
  const auto indep = independent_copy(d);
  const SupermodularVerdict sv = supermodular_leq(d, indep, options.caps);
  Verdict v{Property::kNSMD, sv.holds, std::nullopt, {}};
  v.stats.comparisons = 1;
  v.stats.conditioning_points = sv.lp_variables;
  if (!sv.holds) {
    v.witness = SupermodularWitness{*sv.witness, sv.expectation_x, sv.expectation_y};
  }
  return v;
}

Verdict check_nrd(const FiniteJointDistribution& d, const CheckOptions& options) {
  return conditional_check(d, Property::kNRD, CondKind::kEq, options, std::nullopt);
}

Verdict check_nltd(const FiniteJointDistribution& d, const CheckOptions& options) {
  return conditional_check(d, Property::kNLTD, CondKind::kLower, options, std::nullopt);
}

Verdict check_nrtd(const FiniteJointDistribution& d, const CheckOptions& options) {
  return conditional_check(d, Property::kNRTD, CondKind::kUpper, options, std::nullopt);
}

Verdict check_nrd1(const FiniteJointDistribution& d, const CheckOptions& options) {
  return conditional_check(d, Property::kNRD1, CondKind::kEq, options, 1);
}

Verdict check_nltd1(const FiniteJointDistribution& d, const CheckOptions& options) {
  return conditional_check(d, Property::kNLTD1, CondKind::kLower, options, 1);
}

Verdict check_nrtd1(const FiniteJointDistribution& d, const CheckOptions& options) {
  return conditional_check(d, Property::kNRTD1, CondKind::kUpper, options, 1);
}

Verdict check_property(const FiniteJointDistribution& d, Property p,
                       const CheckOptions& options) {
  switch (p) {
    case Property::kNA: return check_na(d, options);
    case Property::kNSMD: return check_nsmd(d, options);
    case Property::kNOD: return check_nod(d);
    case Property::kNLOD: return check_nlod(d);
    case Property::kNUOD: return check_nuod(d);
    case Property::kNRD: return check_nrd(d, options);
    case Property::kNLTD: return check_nltd(d, options);
    case Property::kNRTD: return check_nrtd(d, options);
    case Property::kNRD1: return check_nrd1(d, options);
    case Property::kNLTD1: return check_nltd1(d, options);
    case Property::kNRTD1: return check_nrtd1(d, options);
  }
  throw Error(ErrorCode::kInternal, "unhandled property");
}

namespace {

Rational conditional_upper_mass(const FiniteJointDistribution& d, const ConditioningEvent& ev,
                                const IndexSet& i, const UpperSet& u) {
  Rational event;
  Rational both;
  for (const auto& a : d.atoms()) {
    if (!ev.contains(a.x)) continue;
    event += a.p;
    if (u.contains(project(a.x, i))) both += a.p;
  }
  if (event.is_zero()) throw Error(ErrorCode::kZeroProbabilityEvent, "P(" + ev.str() + ") = 0");
  return both / event;
}

bool recheck_conditional(const FiniteJointDistribution& d, const ConditionalWitness& w) {
  if (w.i.empty() || w.j.empty() || !w.i.disjoint(w.j)) return false;
  if (w.at_x.indices() != w.j || w.at_x_star.indices() != w.j) return false;
  if (w.at_x.kind() != w.at_x_star.kind()) return false;
  const auto& cx = w.at_x.constraints();
  const auto& cy = w.at_x_star.constraints();
  for (std::size_t k = 0; k < cx.size(); ++k) {
    if (cx[k].relation != cy[k].relation) return false;
  }
  const auto tx = w.at_x.thresholds();
  const auto ty = w.at_x_star.thresholds();
  if (tx == ty || !ext_leq(tx, ty)) return false;
  if (!w.u.is_antichain()) return false;
  return conditional_upper_mass(d, w.at_x_star, w.i, w.u) >
         conditional_upper_mass(d, w.at_x, w.i, w.u);
}

bool recheck_association(const FiniteJointDistribution& d, const AssociationWitness& w) {
  if (w.a1.empty() || w.a2.empty() || !w.a1.disjoint(w.a2)) return false;
  Rational pu;
  Rational pv;
  Rational joint;
  for (const auto& a : d.atoms()) {
    const bool in_u = w.u.contains(project(a.x, w.a1));
    const bool in_v = w.v.contains(project(a.x, w.a2));
    if (in_u) pu += a.p;
    if (in_v) pv += a.p;
    if (in_u && in_v) joint += a.p;
  }
  return joint > pu * pv;
}

bool recheck_orthant(const FiniteJointDistribution& d, const OrthantWitness& w) {
  if (w.corner.size() != d.dim()) return false;
  Rational prod(1);
  for (std::size_t i = 0; i < d.dim(); ++i) prod *= orthant_probability(d, w, i);
  return orthant_probability(d, w, std::nullopt) > prod;
}

bool recheck_supermodular(const FiniteJointDistribution& d, const SupermodularWitness& w) {
  return w.psi.is_supermodular() &&
         w.psi.expectation(d) > w.psi.expectation(independent_copy(d));
}

}  // namespace

bool recheck(const FiniteJointDistribution& d, const Witness& w) {
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ConditionalWitness>) return recheck_conditional(d, x);
        if constexpr (std::is_same_v<T, AssociationWitness>) return recheck_association(d, x);
        if constexpr (std::is_same_v<T, OrthantWitness>) return recheck_orthant(d, x);
        if constexpr (std::is_same_v<T, SupermodularWitness>) return recheck_supermodular(d, x);
      },
      w);
}

FamilyVerdict check_stoch_increasing(const std::map<Point, FiniteJointDistribution>& family,
                                     OrderMode mode, const EnumerationCaps& caps) {
  FamilyVerdict v;
  v.holds = true;
  for (auto a = family.begin(); a != family.end(); ++a) {
    for (auto b = std::next(a); b != family.end(); ++b) {
      if (!componentwise_leq(a->first, b->first)) continue;
      ++v.comparisons;
      const OrderVerdict ov = st_leq(a->second, b->second, mode, caps);
      if (ov.holds) continue;
      v.holds = false;
      v.theta = a->first;
      v.theta_prime = b->first;
      v.u = ov.violating_set;
      return v;
    }
  }
  return v;
}

}  // namespace negdep
