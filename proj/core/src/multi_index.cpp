#include "polytorus/multi_index.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace polytorus {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  canonicalize();
}

MultiIndex::MultiIndex(std::initializer_list<int> entries) : entries_(entries) {
  canonicalize();
}

MultiIndex MultiIndex::unit(std::size_t position, int power) {
  std::vector<int> e(position + 1, 0);
  e[position] = power;
  return MultiIndex(std::move(e));
}

void MultiIndex::canonicalize() {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

int MultiIndex::operator[](std::size_t position) const noexcept {
  return position < entries_.size() ? entries_[position] : 0;
}

int MultiIndex::degree() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

bool MultiIndex::isAnalytic() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e >= 0; });
}

int MultiIndex::maxAbsExponent() const noexcept {
  int m = 0;
  for (int e : entries_) m = std::max(m, std::abs(e));
  return m;
}

std::vector<int> MultiIndex::padded(std::size_t dim) const {
  if (dim < entries_.size()) {
    throw std::invalid_argument("MultiIndex::padded: dimension smaller than support");
  }
  std::vector<int> out(entries_);
  out.resize(dim, 0);
  return out;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  std::vector<int> sum(std::max(size(), other.size()), 0);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = (*this)[i] + other[i];
  return MultiIndex(std::move(sum));
}

MultiIndex MultiIndex::operator-() const {
  std::vector<int> neg(entries_);
  for (int& e : neg) e = -e;
  return MultiIndex(std::move(neg));
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const noexcept {
  const std::size_t n = std::max(size(), other.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = (*this)[i] <=> other[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string MultiIndex::toString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

}  // namespace polytorus
