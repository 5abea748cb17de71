#include "negdep/index_set.hpp"

#include <algorithm>

#include "negdep/error.hpp"

namespace negdep {

IndexSet::IndexSet(std::initializer_list<std::size_t> indices)
    : IndexSet(std::vector<std::size_t>(indices)) {}

IndexSet::IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw Error(ErrorCode::kParse, "duplicate index in index set");
  }
}

IndexSet IndexSet::range(std::size_t begin, std::size_t end) {
  IndexSet s;
  for (std::size_t i = begin; i < end; ++i) s.indices_.push_back(i);
  return s;
}

IndexSet IndexSet::from_mask(unsigned long long mask) {
  IndexSet s;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1ULL) s.indices_.push_back(i);
  }
  return s;
}

IndexSet IndexSet::complement(std::size_t dim) const {
  IndexSet s;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!contains(i)) s.indices_.push_back(i);
  }
  return s;
}

bool IndexSet::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

bool IndexSet::disjoint(const IndexSet& other) const {
  for (std::size_t i : indices_) {
    if (other.contains(i)) return false;
  }
  return true;
}

IndexSet IndexSet::united(const IndexSet& other) const {
  std::vector<std::size_t> merged;
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                 other.indices_.end(), std::back_inserter(merged));
  return IndexSet(std::move(merged));
}

void IndexSet::check_range(std::size_t dim) const {
  if (!indices_.empty() && indices_.back() >= dim) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "index " + std::to_string(indices_.back() + 1) + " outside [1," +
                    std::to_string(dim) + "]");
  }
}

std::string IndexSet::str() const {
  std::string out = "{";
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(indices_[k] + 1);
  }
  return out + "}";
}

std::vector<IndexSet> subsets_by_size(std::size_t dim, std::size_t max_size) {
  std::vector<IndexSet> out;
  max_size = std::min(max_size, dim);
  for (std::size_t k = 1; k <= max_size; ++k) {
    // Lexicographic k-combinations of [0, dim).
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      out.emplace_back(comb);
      std::size_t pos = k;
      while (pos > 0 && comb[pos - 1] == dim - k + pos - 1) --pos;
      if (pos == 0) break;
      ++comb[pos - 1];
      for (std::size_t i = pos; i < k; ++i) comb[i] = comb[i - 1] + 1;
    }
  }
  return out;
}

}  // namespace negdep
