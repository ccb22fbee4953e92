#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chromaplex/colored_graph.hpp"
#include "chromaplex/rng.hpp"

namespace chromaplex {

// A 0-simplex: the î-bubble number `bubble` (canonical order) for color i.
struct DualPoint {
  Color color;
  std::size_t bubble;
};

// Distinct pair of points joined by `multiplicity` (îĵ)-bubbles.
struct DualEdge {
  std::size_t u;
  std::size_t v;
  std::size_t multiplicity;
};

/// 0- and 1-skeleton of the dual complex of a colored graph.
///
/// Points are numbered color by color (color 0 first), bubbles in canonical
/// order within a color.
class DualComplex {
 public:
  [[nodiscard]] std::size_t point_count() const { return points_.size(); }
  [[nodiscard]] const std::vector<DualPoint>& points() const { return points_; }
  [[nodiscard]] const std::vector<DualEdge>& edges() const { return edges_; }
  // Sorted, duplicate-free neighbor lists.
  [[nodiscard]] const std::vector<std::size_t>& neighbors(std::size_t point) const { return adjacency_.at(point); }
  // Number of (îĵ)-bubbles over all color pairs, before collapsing duplicates.
  [[nodiscard]] std::size_t raw_edge_count() const { return raw_edge_count_; }
  // Point of color c containing graph vertex v (black k -> k, white k -> p + k).
  [[nodiscard]] std::size_t point_of(Color c, std::size_t vertex) const;

 private:
  friend DualComplex build_dual_complex(const ColoredGraph& g);

  std::vector<DualPoint> points_;
  std::vector<DualEdge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::size_t> color_offset_;
  std::vector<std::vector<std::uint32_t>> vertex_labels_;
  std::size_t raw_edge_count_ = 0;
};

DualComplex build_dual_complex(const ColoredGraph& g);

// Breadth-first distance; nullopt when v is unreachable from u.
std::optional<std::size_t> distance(const DualComplex& cx, std::size_t u, std::size_t v);

// Distance between two independent uniform points (with replacement).
std::optional<std::size_t> sample_pair_distance(const DualComplex& cx, Rng& rng);

// Point counts indexed by color 0..D.
std::vector<std::size_t> point_color_census(const DualComplex& cx);

// One line per point: "id color : neighbor ids", ids one-based.
std::string to_text(const DualComplex& cx);

}  // namespace chromaplex
