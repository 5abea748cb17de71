#include "negdep/stochastic_order.hpp"

#include <map>

#include "negdep/error.hpp"
#include "negdep/max_flow.hpp"

namespace negdep {

namespace {

void check_dims(const FiniteJointDistribution& dx, const FiniteJointDistribution& dy) {
  if (dx.dim() != dy.dim()) {
    throw Error(ErrorCode::kDimMismatch, "compared laws have different dimensions");
  }
}

}  // namespace

OrderVerdict st_leq_uppersets(const FiniteJointDistribution& dx,
                              const FiniteJointDistribution& dy, std::uint64_t cap) {
  check_dims(dx, dy);
  std::vector<Point> points;
  for (const auto& a : dx.atoms()) points.push_back(a.x);
  for (const auto& a : dy.atoms()) points.push_back(a.x);
  const PointPoset poset(std::move(points));

  std::vector<Rational> excess(poset.size());  // P_X - P_Y per point
  for (const auto& a : dx.atoms()) excess[*poset.index_of(a.x)] += a.p;
  for (const auto& a : dy.atoms()) excess[*poset.index_of(a.x)] -= a.p;

  OrderVerdict verdict;
  verdict.holds = true;
  verdict.upper_sets_examined =
      UpperSetEnumerator(poset, cap).for_each([&](const Bitset& members, const auto& antichain) {
        Rational gap;
        for (auto i = members.find_first(); i != Bitset::npos; i = members.find_next(i)) {
          gap += excess[i];
        }
        if (gap.sign() > 0) {
          verdict.holds = false;
          verdict.violating_set = poset.upper_set(antichain);
          return false;
        }
        return true;
      });
  return verdict;
}

OrderVerdict st_leq_coupling(const FiniteJointDistribution& dx,
                             const FiniteJointDistribution& dy) {
  check_dims(dx, dy);
  const std::size_t nx = dx.size();
  const std::size_t ny = dy.size();
  const std::size_t source = nx + ny;
  const std::size_t sink = source + 1;
  FlowNetwork net(nx + ny + 2, source, sink);
  for (std::size_t i = 0; i < nx; ++i) net.add_edge(source, i, dx.atoms()[i].p);
  struct Link {
    std::size_t edge, i, j;
  };
  std::vector<Link> links;
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      if (componentwise_leq(dx.atoms()[i].x, dy.atoms()[j].x)) {
        // Total mass is one, so capacity one never binds.
        links.push_back({net.add_edge(i, nx + j, Rational(1)), i, j});
      }
    }
  }
  for (std::size_t j = 0; j < ny; ++j) net.add_edge(nx + j, sink, dy.atoms()[j].p);

  const MaxFlowResult flow = max_flow(net);
  OrderVerdict verdict;
  if (flow.value == Rational(1)) {
    verdict.holds = true;
    Coupling coupling;
    for (const auto& l : links) {
      const Rational& f = flow.edge_flow[l.edge];
      if (f.is_zero()) continue;
      coupling.cells.push_back({dx.atoms()[l.i].x, dy.atoms()[l.j].x, f});
    }
    verdict.coupling = std::move(coupling);
    return verdict;
  }
  // X atoms on the source side of the min cut form a set A whose
  // neighbourhood in Y carries less mass than A; up(A) is violating.
  std::vector<Point> gens;
  for (std::size_t i = 0; i < nx; ++i) {
    if (flow.source_side[i]) gens.push_back(dx.atoms()[i].x);
  }
  verdict.holds = false;
  verdict.violating_set = UpperSet::generated_by(std::move(gens));
  return verdict;
}

OrderVerdict st_leq_univariate(const FiniteJointDistribution& dx,
                               const FiniteJointDistribution& dy) {
  if (dx.dim() != 1 || dy.dim() != 1) {
    throw Error(ErrorCode::kDimMismatch, "univariate order test needs one-dimensional laws");
  }
  OrderVerdict verdict;
  // Tail masses P(. >= t), swept from the top so the smallest failing t wins.
  const auto xs = dx.atoms();
  const auto ys = dy.atoms();
  std::size_t i = xs.size();
  std::size_t j = ys.size();
  Rational tail_x;
  Rational tail_y;
  std::optional<Rational> failing;
  while (i > 0 || j > 0) {
    const Rational& t = (j == 0 || (i > 0 && xs[i - 1].x[0] > ys[j - 1].x[0])) ? xs[i - 1].x[0]
                                                                               : ys[j - 1].x[0];
    const Rational threshold = t;
    while (i > 0 && xs[i - 1].x[0] == threshold) tail_x += xs[--i].p;
    while (j > 0 && ys[j - 1].x[0] == threshold) tail_y += ys[--j].p;
    ++verdict.upper_sets_examined;
    if (tail_x > tail_y) failing = threshold;
  }
  if (failing) {
    verdict.violating_set = UpperSet::generated_by({Point{*failing}});
    return verdict;
  }
  // Quantile coupling.
  verdict.holds = true;
  Coupling coupling;
  std::size_t a = 0;
  std::size_t b = 0;
  Rational left_x = xs.empty() ? Rational(0) : xs[0].p;
  Rational left_y = ys.empty() ? Rational(0) : ys[0].p;
  while (a < xs.size() && b < ys.size()) {
    const Rational m = std::min(left_x, left_y);
    coupling.cells.push_back({xs[a].x, ys[b].x, m});
    left_x -= m;
    left_y -= m;
    if (left_x.is_zero() && ++a < xs.size()) left_x = xs[a].p;
    if (left_y.is_zero() && ++b < ys.size()) left_y = ys[b].p;
  }
  verdict.coupling = std::move(coupling);
  return verdict;
}

OrderVerdict st_leq(const FiniteJointDistribution& dx, const FiniteJointDistribution& dy,
                    OrderMode mode, const EnumerationCaps& caps) {
  if (dx.dim() != dy.dim()) {
    throw Error(ErrorCode::kDimMismatch, "compared laws have different dimensions");
  }
  if (mode == OrderMode::kFast) {
    return dx.dim() == 1 ? st_leq_univariate(dx, dy) : st_leq_coupling(dx, dy);
  }
  OrderVerdict fast = st_leq_coupling(dx, dy);
  if (dx.dim() == 1 && st_leq_univariate(dx, dy).holds != fast.holds) {
    throw Error(ErrorCode::kInternal, "univariate and coupling order tests disagree");
  }
  const OrderVerdict slow = st_leq_uppersets(dx, dy, caps.upper_sets);
  if (slow.holds != fast.holds) {
    throw Error(ErrorCode::kInternal,
                "stochastic-order deciders disagree (upper sets: " +
                    std::string(slow.holds ? "holds" : "fails") + ", coupling: " +
                    std::string(fast.holds ? "holds" : "fails") + ")");
  }
  fast.upper_sets_examined = slow.upper_sets_examined;
  if (!fast.holds) fast.violating_set = slow.violating_set;
  return fast;
}

bool verify_coupling(const FiniteJointDistribution& dx, const FiniteJointDistribution& dy,
                     const Coupling& coupling) {
  std::map<Point, Rational> rows;
  std::map<Point, Rational> cols;
  for (const auto& cell : coupling.cells) {
    if (cell.mass.sign() < 0) return false;
    if (!componentwise_leq(cell.x, cell.y)) return false;
    rows[cell.x] += cell.mass;
    cols[cell.y] += cell.mass;
  }
  auto matches = [](const FiniteJointDistribution& d, const std::map<Point, Rational>& sums) {
    std::size_t positive = 0;
    for (const auto& [x, p] : sums) {
      if (p.is_zero()) continue;
      ++positive;
      if (d.probability(x) != p) return false;
    }
    return positive == d.size();
  };
  return matches(dx, rows) && matches(dy, cols);
}

bool verify_upper_set_violation(const FiniteJointDistribution& dx,
                                const FiniteJointDistribution& dy, const UpperSet& u) {
  return u.is_antichain() && u.mass(dx) > u.mass(dy);
}

}  // namespace negdep
