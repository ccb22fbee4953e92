#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace chromaplex {

// Disjoint sets with union by size and path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = static_cast<std::uint32_t>(a);
    size_[a] += size_[b];
    --sets_;
    return true;
  }

  [[nodiscard]] std::size_t set_count() const { return sets_; }
  std::size_t set_size(std::size_t x) { return size_[find(x)]; }
  [[nodiscard]] std::size_t element_count() const { return parent_.size(); }

  // Dense labels 0..set_count()-1, numbered in order of first appearance.
  std::vector<std::uint32_t> labels() {
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> root_label(parent_.size(), unset);
    std::vector<std::uint32_t> out(parent_.size());
    std::uint32_t next = 0;
    for (std::size_t x = 0; x < parent_.size(); ++x) {
      const auto r = find(x);
      if (root_label[r] == unset) root_label[r] = next++;
      out[x] = root_label[r];
    }
    return out;
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::size_t sets_;
};

}  // namespace chromaplex
