#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "negdep/distribution.hpp"
#include "negdep/error.hpp"

namespace negdep {

/// Upper set of (Q^n, componentwise <=) described by its minimal elements;
/// x belongs to it iff x >= some minimal element. Membership is meaningful
/// for any point, not only those of the poset it was enumerated from.
struct UpperSet {
  std::vector<Point> minimal;  // antichain in lexicographic order

  /// Minimal elements of the given generators.
  static UpperSet generated_by(std::vector<Point> generators);

  bool empty() const { return minimal.empty(); }
  bool contains(std::span<const Rational> x) const;
  bool is_antichain() const;
  Rational mass(const FiniteJointDistribution& d) const;
  std::string str() const;

  friend bool operator==(const UpperSet&, const UpperSet&) = default;
};

using Bitset = boost::dynamic_bitset<>;

/// Finite point set under componentwise <=, points in lexicographic order
/// (a linear extension of the partial order).
class PointPoset {
 public:
  explicit PointPoset(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  const Point& point(std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  std::optional<std::size_t> index_of(std::span<const Rational> x) const;

  bool leq(std::size_t i, std::size_t j) const { return up_[i][j]; }
  /// Points >= point i (including i).
  const Bitset& up(std::size_t i) const { return up_[i]; }
  const Bitset& incomparable(std::size_t i) const { return incomparable_[i]; }

  UpperSet upper_set(const std::vector<std::size_t>& antichain) const;
  /// Up-closure of the members of `mask`, described by its minimal points.
  UpperSet upper_set_of(const Bitset& mask) const;

 private:
  std::vector<Point> points_;
  std::vector<Bitset> up_;
  std::vector<Bitset> incomparable_;
};

/// Visits every upper set of a PointPoset exactly once by depth-first
/// enumeration of antichains (antichain members in increasing index order).
/// The order is deterministic and starts with the empty set.
class UpperSetEnumerator {
 public:
  UpperSetEnumerator(const PointPoset& poset, std::uint64_t cap) : poset_(poset), cap_(cap) {}

  /// visit(const Bitset& members, const std::vector<std::size_t>& antichain)
  /// returns false to stop early. Returns the number of upper sets visited.
  template <class Visit>
  std::uint64_t for_each(Visit&& visit) const {
    std::uint64_t count = 0;
    std::vector<std::size_t> antichain;
    Bitset members(poset_.size());
    Bitset candidates(poset_.size());
    candidates.set();
    dfs(visit, count, antichain, members, candidates);
    return count;
  }

 private:
  template <class Visit>
  bool dfs(Visit& visit, std::uint64_t& count, std::vector<std::size_t>& antichain,
           const Bitset& members, const Bitset& candidates) const {
    if (++count > cap_) {
      throw Error(ErrorCode::kEnumerationCapExceeded,
                  "more than " + std::to_string(cap_) + " upper sets");
    }
    if (!visit(static_cast<const Bitset&>(members),
               static_cast<const std::vector<std::size_t>&>(antichain))) {
      return false;
    }
    for (auto j = candidates.find_first(); j != Bitset::npos; j = candidates.find_next(j)) {
      Bitset next = candidates & poset_.incomparable(j);
      // Keep only indices after j so each antichain is generated once.
      for (auto k = next.find_first(); k != Bitset::npos && k <= j; k = next.find_next(k)) {
        next.reset(k);
      }
      antichain.push_back(j);
      const bool go_on = dfs(visit, count, antichain, members | poset_.up(j), next);
      antichain.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const PointPoset& poset_;
  std::uint64_t cap_;
};

/// All upper sets of the given points, in enumeration order.
std::vector<UpperSet> enumerate_upper_sets(const std::vector<Point>& points, std::uint64_t cap);

}  // namespace negdep
