#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace negdep {

/// Sorted set of distinct coordinate indices. Indices are zero-based in the
/// C++ API; serialized forms (reports, witnesses) print them one-based.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> indices);
  explicit IndexSet(std::vector<std::size_t> indices);

  static IndexSet range(std::size_t begin, std::size_t end);
  static IndexSet all(std::size_t dim) { return range(0, dim); }
  static IndexSet from_mask(unsigned long long mask);

  IndexSet complement(std::size_t dim) const;
  bool contains(std::size_t index) const;
  bool disjoint(const IndexSet& other) const;
  IndexSet united(const IndexSet& other) const;

  /// Throws kIndexOutOfRange if any index >= dim.
  void check_range(std::size_t dim) const;

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  std::size_t operator[](std::size_t k) const { return indices_[k]; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }
  const std::vector<std::size_t>& indices() const { return indices_; }

  /// One-based rendering, e.g. "{1,3}".
  std::string str() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// Nonempty subsets of [0, dim) ordered by size, then lexicographically.
std::vector<IndexSet> subsets_by_size(std::size_t dim, std::size_t max_size);

}  // namespace negdep
