#include "chromaplex/dual_complex.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "chromaplex/error.hpp"

namespace chromaplex {

std::size_t DualComplex::point_of(Color c, std::size_t vertex) const {
  if (c < 0 || static_cast<std::size_t>(c) >= vertex_labels_.size()) {
    throw InvalidArgumentError("dual complex: color out of range");
  }
  const auto& labels = vertex_labels_[static_cast<std::size_t>(c)];
  if (vertex >= labels.size()) throw InvalidArgumentError("dual complex: vertex out of range");
  return color_offset_[static_cast<std::size_t>(c)] + labels[vertex];
}

DualComplex build_dual_complex(const ColoredGraph& g) {
  DualComplex cx;
  const int D = g.dimension();
  const ColorSet all = g.colors();
  for (Color i = 0; i <= D; ++i) {
    auto labels = bubble_labels(g, all.without(i));
    const std::size_t count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    cx.color_offset_.push_back(cx.points_.size());
    for (std::size_t b = 0; b < count; ++b) cx.points_.push_back({i, b});
    cx.vertex_labels_.push_back(std::move(labels));
  }

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> multiplicity;
  for (Color i = 0; i <= D; ++i) {
    for (Color j = i + 1; j <= D; ++j) {
      const auto labels = bubble_labels(g, all.without(i).without(j));
      std::vector<bool> seen(labels.size(), false);
      for (std::size_t v = 0; v < labels.size(); ++v) {
        if (seen[labels[v]]) continue;
        seen[labels[v]] = true;
        ++cx.raw_edge_count_;
        auto a = cx.point_of(i, v);
        auto b = cx.point_of(j, v);
        if (a > b) std::swap(a, b);
        ++multiplicity[{a, b}];
      }
    }
  }

  cx.adjacency_.resize(cx.points_.size());
  for (const auto& [key, count] : multiplicity) {
    cx.edges_.push_back({key.first, key.second, count});
    cx.adjacency_[key.first].push_back(key.second);
    cx.adjacency_[key.second].push_back(key.first);
  }
  for (auto& list : cx.adjacency_) std::sort(list.begin(), list.end());
  return cx;
}

std::optional<std::size_t> distance(const DualComplex& cx, std::size_t u, std::size_t v) {
  const std::size_t n = cx.point_count();
  if (u >= n || v >= n) throw InvalidArgumentError("dual complex: unknown point id");
  if (u == v) return 0;
  constexpr auto unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(n, unvisited);
  std::vector<std::size_t> queue{u};
  dist[u] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t x = queue[head];
    for (std::size_t y : cx.neighbors(x)) {
      if (dist[y] != unvisited) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> sample_pair_distance(const DualComplex& cx, Rng& rng) {
  if (cx.point_count() == 0) throw InvalidArgumentError("dual complex: no points");
  const auto u = static_cast<std::size_t>(rng.below(cx.point_count()));
  const auto v = static_cast<std::size_t>(rng.below(cx.point_count()));
  return distance(cx, u, v);
}

std::vector<std::size_t> point_color_census(const DualComplex& cx) {
  std::vector<std::size_t> census;
  for (const auto& pt : cx.points()) {
    if (static_cast<std::size_t>(pt.color) >= census.size()) census.resize(static_cast<std::size_t>(pt.color) + 1, 0);
    ++census[static_cast<std::size_t>(pt.color)];
  }
  return census;
}

std::string to_text(const DualComplex& cx) {
  std::string out;
  for (std::size_t id = 0; id < cx.point_count(); ++id) {
    out += std::to_string(id + 1) + " " + std::to_string(cx.points()[id].color) + " :";
    for (std::size_t nb : cx.neighbors(id)) out += " " + std::to_string(nb + 1);
    out += '\n';
  }
  return out;
}

}  // namespace chromaplex
