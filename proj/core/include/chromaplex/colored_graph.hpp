#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "chromaplex/permutation.hpp"
#include "chromaplex/rational.hpp"

namespace chromaplex {

using Color = int;

// Largest supported D; colors live in a 32-bit mask.
inline constexpr int kMaxDimension = 30;

/// Subset of the color set {0..D}.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  ColorSet(std::initializer_list<Color> colors);

  static ColorSet all(int dimension);
  static constexpr ColorSet from_mask(std::uint32_t mask) { return ColorSet(mask); }

  [[nodiscard]] bool contains(Color c) const { return (mask_ >> c) & 1U; }
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] std::uint32_t mask() const { return mask_; }
  [[nodiscard]] ColorSet without(Color c) const { return ColorSet(mask_ & ~(1U << c)); }
  [[nodiscard]] ColorSet with(Color c) const { return ColorSet(mask_ | (1U << c)); }
  [[nodiscard]] std::vector<Color> members() const;

  friend bool operator==(ColorSet, ColorSet) = default;

 private:
  constexpr explicit ColorSet(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

// A connected component of the subgraph restricted to `colors`.
// Vertex indices are zero-based within each side.
struct Bubble {
  ColorSet colors;
  std::vector<std::size_t> black_vertices;
  std::vector<std::size_t> white_vertices;
};

/// A cyclic order of the colors, stored as its successor map τ.
class JacketSpec {
 public:
  // `order` lists every color of {0..D} once; τ maps order[k] to order[k+1].
  explicit JacketSpec(const std::vector<Color>& order);

  // The cycle (0 1 ... D).
  static JacketSpec standard(int dimension);

  [[nodiscard]] int dimension() const { return static_cast<int>(successor_.size()) - 1; }
  [[nodiscard]] Color successor(Color c) const { return successor_[static_cast<std::size_t>(c)]; }
  [[nodiscard]] Color predecessor(Color c) const;

 private:
  std::vector<Color> successor_;
};

// All D! cyclic orders of {0..D}, a cycle and its reverse counted separately.
std::vector<JacketSpec> all_jackets(int dimension);

/// Bipartite (D+1)-colored graph on 2p labelled vertices.
///
/// Black vertex k is joined to white vertex alpha(i)[k] by an edge of color i.
/// Immutable after construction.
class ColoredGraph {
 public:
  ColoredGraph(int dimension, std::vector<Permutation> alphas);

  [[nodiscard]] int dimension() const { return dimension_; }
  [[nodiscard]] std::size_t half_order() const { return alphas_.front().size(); }
  [[nodiscard]] std::size_t vertex_count() const { return 2 * half_order(); }
  [[nodiscard]] std::size_t color_count() const { return alphas_.size(); }
  [[nodiscard]] const Permutation& alpha(Color c) const { return alphas_[static_cast<std::size_t>(c)]; }
  [[nodiscard]] const std::vector<Permutation>& alphas() const { return alphas_; }
  [[nodiscard]] ColorSet colors() const { return ColorSet::all(dimension_); }

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  int dimension_;
  std::vector<Permutation> alphas_;
};

// Vertex indexing used by component labels: black k -> k, white k -> p + k.
std::vector<std::uint32_t> bubble_labels(const ColoredGraph& g, ColorSet colors);

std::vector<Bubble> bubbles(const ColoredGraph& g, ColorSet colors);
std::size_t bubble_count(const ColoredGraph& g, ColorSet colors);

// b_0 .. b_{D+1}. Faces (rank 2) use permutation products.
std::vector<std::size_t> bubble_census(const ColoredGraph& g);

// b_2 as Σ_{i<j} O(α_i α_j⁻¹).
std::size_t face_count(const ColoredGraph& g);
// b_2 by union-find over each color pair; slow reference path.
std::size_t face_count_by_traversal(const ColoredGraph& g);

// Σ_i O(α_i α_{τ(i)}⁻¹): the faces of the jacket τ.
std::size_t jacket_faces(const ColoredGraph& g, const JacketSpec& jacket);
// Same count by tracing faces of the jacket's rotation system.
std::size_t jacket_faces_by_tracing(const ColoredGraph& g, const JacketSpec& jacket);

// ω = (D-1)!/2 · (D(D-1)p/2 + D - b_2). Requires D >= 2.
Rational gurau_degree_via_faces(const ColoredGraph& g);
// ω = ½ Σ_τ g_τ over all D! jackets. Requires D >= 2 and a connected graph.
Rational gurau_degree_via_jackets(const ColoredGraph& g);

std::size_t component_count(const ColoredGraph& g);
bool is_connected(const ColoredGraph& g);

// Header "D p" then D+1 permutation lines, color 0 first.
std::string to_text(const ColoredGraph& g);
ColoredGraph parse_colored_graph(std::string_view text);

}  // namespace chromaplex
