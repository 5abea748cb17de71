#include "negdep/upper_sets.hpp"

#include <algorithm>

namespace negdep {

UpperSet UpperSet::generated_by(std::vector<Point> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  UpperSet out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < generators.size() && minimal; ++j) {
      if (j != i && componentwise_leq(generators[j], generators[i])) minimal = false;
    }
    if (minimal) out.minimal.push_back(generators[i]);
  }
  return out;
}

bool UpperSet::contains(std::span<const Rational> x) const {
  return std::any_of(minimal.begin(), minimal.end(),
                     [&](const Point& m) { return componentwise_leq(m, x); });
}

bool UpperSet::is_antichain() const {
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (i != j && componentwise_leq(minimal[i], minimal[j])) return false;
    }
  }
  return true;
}

Rational UpperSet::mass(const FiniteJointDistribution& d) const {
  Rational total;
  for (const auto& a : d.atoms()) {
    if (contains(a.x)) total += a.p;
  }
  return total;
}

std::string UpperSet::str() const {
  std::string out = "up{";
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    if (i) out += ",";
    out += point_str(minimal[i]);
  }
  return out + "}";
}

PointPoset::PointPoset(std::vector<Point> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  const std::size_t n = points_.size();
  up_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    // Lexicographic order extends <=, so only j >= i can dominate i.
    for (std::size_t j = i; j < n; ++j) {
      if (componentwise_leq(points_[i], points_[j])) up_[i].set(j);
    }
  }
  incomparable_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    Bitset related = up_[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (up_[j][i]) related.set(j);
    }
    incomparable_[i] = ~related;
  }
}

std::optional<std::size_t> PointPoset::index_of(std::span<const Rational> x) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), x, [](const Point& p, auto key) {
    return std::lexicographical_compare(p.begin(), p.end(), key.begin(), key.end());
  });
  if (it != points_.end() && std::equal(it->begin(), it->end(), x.begin(), x.end())) {
    return static_cast<std::size_t>(it - points_.begin());
  }
  return std::nullopt;
}

UpperSet PointPoset::upper_set(const std::vector<std::size_t>& antichain) const {
  UpperSet out;
  for (std::size_t i : antichain) out.minimal.push_back(points_[i]);
  std::sort(out.minimal.begin(), out.minimal.end());
  return out;
}

UpperSet PointPoset::upper_set_of(const Bitset& mask) const {
  std::vector<Point> gens;
  for (auto i = mask.find_first(); i != Bitset::npos; i = mask.find_next(i)) {
    gens.push_back(points_[i]);
  }
  return UpperSet::generated_by(std::move(gens));
}

std::vector<UpperSet> enumerate_upper_sets(const std::vector<Point>& points, std::uint64_t cap) {
  const PointPoset poset(points);
  std::vector<UpperSet> out;
  UpperSetEnumerator(poset, cap).for_each([&](const Bitset&, const std::vector<std::size_t>& ac) {
    out.push_back(poset.upper_set(ac));
    return true;
  });
  return out;
}

}  // namespace negdep
