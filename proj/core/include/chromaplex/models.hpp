#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "chromaplex/colored_graph.hpp"
#include "chromaplex/permutation.hpp"
#include "chromaplex/rng.hpp"

namespace chromaplex {

// D+1 independent uniform permutations of size p.
ColoredGraph sample_uniform_model(int dimension, std::size_t p, Rng& rng);

// Distinguished color c_k in {1..D} of each quartic 0̂-bubble, k = 1..p.
struct QuarticWitness {
  std::vector<Color> distinguished_colors;
};

struct QuarticSample {
  ColoredGraph graph;
  QuarticWitness witness;
};

// Graph on 2·(2p) vertices. Bubble k owns labels 2k-1, 2k on each side;
// α_{c_k} swaps them and every other α_i (i >= 1) fixes them. α_0 is uniform
// on S_{2p}. Requires D >= 2.
QuarticSample sample_quartic_model(int dimension, std::size_t p, Rng& rng);

/// Connected bipartite D-colored graph (colors 1..D) on 2t vertices, t >= 2.
///
/// pi(j) sends black k to white pi(j)(k).
class BaseGraph {
 public:
  // Throws InvalidArgumentError on bad sizes or a disconnected graph.
  BaseGraph(int dimension, std::vector<Permutation> pis);

  [[nodiscard]] int dimension() const { return dimension_; }
  [[nodiscard]] std::size_t half_order() const { return pis_.front().size(); }
  [[nodiscard]] const Permutation& pi(Color j) const { return pis_[static_cast<std::size_t>(j - 1)]; }
  [[nodiscard]] const std::vector<Permutation>& pis() const { return pis_; }

  friend bool operator==(const BaseGraph&, const BaseGraph&) = default;

 private:
  int dimension_;
  std::vector<Permutation> pis_;
};

// Quartic bubble: t = 2, color 1 swaps the two vertices, the others are parallel.
BaseGraph quartic_base(int dimension);

// A cycle of t melons closed up by color j (a "pearl necklace").
BaseGraph necklace_base(int dimension, std::size_t t, Color j = 1);

// Line 1 "D t", then D permutation lines for colors 1..D.
BaseGraph parse_base_graph(std::string_view text);
BaseGraph load_base_graph(const std::filesystem::path& path);
std::string to_text(const BaseGraph& base);

// p recolored copies of `base` joined by a uniform α_0 on S_{tp}. Copy k
// owns labels (k-1)t+1 .. kt on each side; its color j edges get color γ_k(j)
// for an independent uniform γ_k in S_D.
ColoredGraph sample_uncolored_model(const BaseGraph& base, std::size_t p, Rng& rng);

}  // namespace chromaplex
