#pragma once

// Brute-force reference implementations for the tests. They work on plain
// point -> mass maps and enumerate everything by bitmask, sharing nothing
// with the library deciders.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "negdep/distribution.hpp"
#include "negdep/tournaments.hpp"

namespace oracle {

using negdep::FiniteJointDistribution;
using negdep::Point;
using negdep::Rational;
using Law = std::map<Point, Rational>;
using Pred = std::function<bool(const Point&)>;

inline Law law(const FiniteJointDistribution& d) {
  Law out;
  for (const auto& a : d.atoms()) out[a.x] += a.p;
  return out;
}

inline FiniteJointDistribution to_distribution(std::size_t dim, const Law& l) {
  std::vector<negdep::Atom> atoms;
  for (const auto& [x, p] : l) atoms.push_back({x, p});
  return negdep::make_pmf(dim, atoms);
}

inline Rational mass(const Law& l, const Pred& pred) {
  Rational s;
  for (const auto& [x, p] : l) {
    if (pred(x)) s += p;
  }
  return s;
}

inline Point project(const Point& x, const std::vector<std::size_t>& idx) {
  Point out;
  for (auto i : idx) out.push_back(x[i]);
  return out;
}

inline bool leq(const Point& a, const Point& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

/// Law of X_idx given pred; empty when the event has probability zero.
inline Law conditional(const Law& l, const Pred& pred, const std::vector<std::size_t>& idx) {
  Law out;
  Rational total;
  for (const auto& [x, p] : l) {
    if (!pred(x)) continue;
    out[project(x, idx)] += p;
    total += p;
  }
  if (total.is_zero()) return {};
  for (auto& [x, p] : out) p /= total;
  return out;
}

/// Every up-closed subset of pts, as membership masks.
inline std::vector<std::vector<bool>> upper_subsets(const std::vector<Point>& pts) {
  const std::size_t m = pts.size();
  std::vector<std::vector<bool>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < m && closed; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t j = 0; j < m && closed; ++j) {
        if (!(mask >> j & 1) && leq(pts[i], pts[j])) closed = false;
      }
    }
    if (!closed) continue;
    std::vector<bool> members(m);
    for (std::size_t i = 0; i < m; ++i) members[i] = mask >> i & 1;
    out.push_back(std::move(members));
  }
  return out;
}

inline std::vector<Point> union_support(const Law& a, const Law& b) {
  std::set<Point> s;
  for (const auto& [x, p] : a) s.insert(x);
  for (const auto& [x, p] : b) s.insert(x);
  return {s.begin(), s.end()};
}

inline Rational mass_on(const Law& l, const std::vector<Point>& pts, const std::vector<bool>& members) {
  Rational s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!members[i]) continue;
    auto it = l.find(pts[i]);
    if (it != l.end()) s += it->second;
  }
  return s;
}

/// X <=_st Y by checking every up-closed subset of the union support.
inline bool st_leq(const Law& x, const Law& y) {
  const auto pts = union_support(x, y);
  for (const auto& u : upper_subsets(pts)) {
    if (mass_on(x, pts, u) > mass_on(y, pts, u)) return false;
  }
  return true;
}

/// Nonempty subsets of [0, n) as index lists.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline bool disjoint(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  for (auto i : a) {
    if (std::find(b.begin(), b.end(), i) != b.end()) return false;
  }
  return true;
}

/// Support values, midpoints between them and one value beyond each end, so
/// that every distinct threshold event shows up at least once.
inline std::vector<Rational> wide_grid(const Law& l, std::size_t coord) {
  std::set<Rational> vals;
  for (const auto& [x, p] : l) vals.insert(x[coord]);
  std::vector<Rational> v(vals.begin(), vals.end());
  std::vector<Rational> out{v.front() - Rational(1)};
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(v[k]);
    if (k + 1 < v.size()) out.push_back((v[k] + v[k + 1]) / Rational(2));
  }
  out.push_back(v.back() + Rational(1));
  return out;
}

/// Every vector in the product of the given per-coordinate grids.
inline std::vector<Point> grid_points(const std::vector<std::vector<Rational>>& axes) {
  std::vector<Point> out{Point{}};
  for (const auto& axis : axes) {
    std::vector<Point> next;
    for (const auto& p : out) {
      for (const auto& v : axis) {
        Point q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

enum class Event { kEq, kLe, kLt, kGe, kGt };

inline bool admits(Event e, const Rational& v, const Rational& t) {
  switch (e) {
    case Event::kEq: return v == t;
    case Event::kLe: return v <= t;
    case Event::kLt: return v < t;
    case Event::kGe: return v >= t;
    case Event::kGt: return v > t;
  }
  return false;
}

/// For every disjoint nonempty I, J (|J| <= max_j) and thresholds t <= t* on
/// X_J: [X_I | E(t*)] <=_st [X_I | E(t)], skipping null events.
inline bool conditional_property(const FiniteJointDistribution& d, Event e, std::size_t max_j) {
  const Law l = law(d);
  const std::size_t n = d.dim();
  for (const auto& j : subsets(n)) {
    if (j.size() > max_j || j.size() == n) continue;
    std::vector<std::vector<Rational>> axes;
    for (auto c : j) axes.push_back(wide_grid(l, c));
    const auto ts = grid_points(axes);
    for (const auto& i : subsets(n)) {
      if (!disjoint(i, j)) continue;
      std::vector<Law> laws;
      for (const auto& t : ts) {
        laws.push_back(conditional(
            l,
            [&](const Point& x) {
              for (std::size_t k = 0; k < j.size(); ++k) {
                if (!admits(e, x[j[k]], t[k])) return false;
              }
              return true;
            },
            i));
      }
      for (std::size_t a = 0; a < ts.size(); ++a) {
        if (laws[a].empty()) continue;
        for (std::size_t b = 0; b < ts.size(); ++b) {
          if (laws[b].empty() || !leq(ts[a], ts[b])) continue;
          if (!st_leq(laws[b], laws[a])) return false;
        }
      }
    }
  }
  return true;
}

/// P(X_A1 in U, X_A2 in V) <= P(X_A1 in U) P(X_A2 in V) for all disjoint A1,
/// A2 and all up-closed U, V.
inline bool negatively_associated(const FiniteJointDistribution& d) {
  const Law l = law(d);
  const std::size_t n = d.dim();
  for (const auto& a1 : subsets(n)) {
    for (const auto& a2 : subsets(n)) {
      if (!disjoint(a1, a2) || a1 > a2) continue;
      std::set<Point> s1;
      std::set<Point> s2;
      for (const auto& [x, p] : l) {
        s1.insert(project(x, a1));
        s2.insert(project(x, a2));
      }
      const std::vector<Point> p1(s1.begin(), s1.end());
      const std::vector<Point> p2(s2.begin(), s2.end());
      const auto us = upper_subsets(p1);
      const auto vs = upper_subsets(p2);
      auto in = [](const std::vector<Point>& pts, const std::vector<bool>& m, const Point& y) {
        return m[std::lower_bound(pts.begin(), pts.end(), y) - pts.begin()];
      };
      for (const auto& u : us) {
        const Rational pu = mass(l, [&](const Point& x) { return in(p1, u, project(x, a1)); });
        for (const auto& v : vs) {
          const Rational pv = mass(l, [&](const Point& x) { return in(p2, v, project(x, a2)); });
          const Rational pj = mass(l, [&](const Point& x) {
            return in(p1, u, project(x, a1)) && in(p2, v, project(x, a2));
          });
          if (pj > pu * pv) return false;
        }
      }
    }
  }
  return true;
}

/// Lower (le) or upper (gt) orthant inequality at every corner of the wide grid.
inline bool orthant_property(const FiniteJointDistribution& d, Event e) {
  const Law l = law(d);
  const std::size_t n = d.dim();
  std::vector<std::vector<Rational>> axes;
  for (std::size_t c = 0; c < n; ++c) axes.push_back(wide_grid(l, c));
  for (const auto& t : grid_points(axes)) {
    const Rational joint = mass(l, [&](const Point& x) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!admits(e, x[k], t[k])) return false;
      }
      return true;
    });
    Rational prod(1);
    for (std::size_t k = 0; k < n; ++k) {
      prod *= mass(l, [&](const Point& x) { return admits(e, x[k], t[k]); });
    }
    if (joint > prod) return false;
  }
  return true;
}

/// Product of the univariate marginals.
inline Law independent(const FiniteJointDistribution& d) {
  const Law l = law(d);
  Law out{{Point{}, Rational(1)}};
  for (std::size_t c = 0; c < d.dim(); ++c) {
    Law m;
    for (const auto& [x, p] : l) m[Point{x[c]}] += p;
    Law next;
    for (const auto& [x, p] : out) {
      for (const auto& [y, q] : m) {
        Point z = x;
        z.push_back(y[0]);
        next[z] += p * q;
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Law of the arrangements of values under a uniform permutation.
inline Law permutation_law(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  Law out;
  std::uint64_t count = 0;
  do {
    out[values] += Rational(1);
    ++count;
  } while (std::next_permutation(values.begin(), values.end()));
  for (auto& [x, p] : out) p /= Rational(static_cast<long>(count));
  return out;
}

/// Fixed bracket by direct enumeration of all 2^(n-1) outcome strings; bit g
/// set means the later slot wins game g (games numbered round by round).
inline Law knockout_fixed(const negdep::WinMatrix& w, const std::vector<std::size_t>& bracket) {
  const std::size_t n = bracket.size();
  Law out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
    std::vector<std::size_t> alive = bracket;
    Point score(n, Rational(0));
    Rational p(1);
    std::size_t game = 0;
    while (alive.size() > 1) {
      std::vector<std::size_t> next;
      for (std::size_t k = 0; k < alive.size(); k += 2, ++game) {
        const std::size_t a = alive[k];
        const std::size_t b = alive[k + 1];
        const bool b_wins = bits >> game & 1;
        const std::size_t winner = b_wins ? b : a;
        p *= b_wins ? w[b][a] : w[a][b];
        score[winner] += Rational(1);
        next.push_back(winner);
      }
      alive = std::move(next);
    }
    if (!p.is_zero()) out[score] += p;
  }
  return out;
}

inline void matchings(std::vector<std::size_t> rest,
                      std::vector<std::pair<std::size_t, std::size_t>>& cur,
                      std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& out) {
  if (rest.empty()) {
    out.push_back(cur);
    return;
  }
  const std::size_t a = rest[0];
  for (std::size_t k = 1; k < rest.size(); ++k) {
    std::vector<std::size_t> left;
    for (std::size_t m = 1; m < rest.size(); ++m) {
      if (m != k) left.push_back(rest[m]);
    }
    cur.emplace_back(a, rest[k]);
    matchings(left, cur, out);
    cur.pop_back();
  }
}

inline void random_draw_rec(const negdep::WinMatrix& w, const std::vector<std::size_t>& alive,
                            Point& score, const Rational& weight, Law& out) {
  if (alive.size() == 1) {
    out[score] += weight;
    return;
  }
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> all;
  std::vector<std::pair<std::size_t, std::size_t>> cur;
  matchings(alive, cur, all);
  const Rational share = weight / Rational(static_cast<long>(all.size()));
  for (const auto& m : all) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m.size()); ++bits) {
      Rational p = share;
      std::vector<std::size_t> next;
      for (std::size_t g = 0; g < m.size(); ++g) {
        const auto [a, b] = m[g];
        const bool b_wins = bits >> g & 1;
        p *= b_wins ? w[b][a] : w[a][b];
        next.push_back(b_wins ? b : a);
      }
      if (p.is_zero()) continue;
      std::sort(next.begin(), next.end());
      for (auto v : next) score[v] += Rational(1);
      random_draw_rec(w, next, score, p, out);
      for (auto v : next) score[v] -= Rational(1);
    }
  }
}

/// Random draw by enumerating every perfect matching of the survivors in
/// every round.
inline Law knockout_random(const negdep::WinMatrix& w) {
  std::vector<std::size_t> alive(w.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  Point score(w.size(), Rational(0));
  Law out;
  random_draw_rec(w, alive, score, Rational(1), out);
  return out;
}

/// Random law on {0..max_value}^dim with at most max_atoms atoms and random
/// integer weights.
inline FiniteJointDistribution random_distribution(std::mt19937_64& rng, std::size_t dim,
                                                   std::size_t max_atoms, long max_value = 2) {
  std::uniform_int_distribution<long> value(0, max_value);
  std::uniform_int_distribution<long> weight(1, 9);
  std::uniform_int_distribution<std::size_t> count(1, max_atoms);
  Law l;
  const std::size_t atoms = count(rng);
  for (std::size_t k = 0; k < atoms; ++k) {
    Point x;
    for (std::size_t c = 0; c < dim; ++c) x.emplace_back(value(rng));
    l[x] += Rational(weight(rng));
  }
  Rational total;
  for (const auto& [x, p] : l) total += p;
  for (auto& [x, p] : l) p /= total;
  return to_distribution(dim, l);
}

/// Either a random law or a permutation law of random values; the latter
/// are negatively dependent, so both verdicts occur.
inline FiniteJointDistribution random_mixed(std::mt19937_64& rng, std::size_t dim) {
  if (rng() % 3 == 0) {
    std::uniform_int_distribution<long> value(0, 2);
    std::vector<Rational> v;
    for (std::size_t c = 0; c < dim; ++c) v.emplace_back(value(rng));
    return to_distribution(dim, permutation_law(v));
  }
  return random_distribution(rng, dim, 6);
}

}  // namespace oracle
