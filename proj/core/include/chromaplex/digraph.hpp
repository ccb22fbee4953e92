#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chromaplex/colored_graph.hpp"
#include "chromaplex/models.hpp"
#include "chromaplex/rational.hpp"
#include "chromaplex/rng.hpp"

namespace chromaplex {

struct DegreePair {
  std::size_t in = 0;
  std::size_t out = 0;

  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

struct Arc {
  std::size_t tail;
  std::size_t head;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Directed multigraph with one arc per out-half-edge.
///
/// Out-half-edges are numbered vertex by vertex; arcs()[h] leaves the owner of
/// out-half-edge h. Self-loops and parallel arcs are allowed.
class Digraph {
 public:
  // Throws unless every vertex's out-degree matches its arc tails and the
  // heads realize the in-degrees.
  Digraph(std::vector<DegreePair> degrees, std::vector<Arc> arcs);

  [[nodiscard]] std::size_t vertex_count() const { return degrees_.size(); }
  [[nodiscard]] std::size_t arc_count() const { return arcs_.size(); }
  [[nodiscard]] const std::vector<DegreePair>& degrees() const { return degrees_; }
  [[nodiscard]] const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  std::vector<DegreePair> degrees_;
  std::vector<Arc> arcs_;
};

// S^i: contract each component of G without colors 0 and i to a vertex with
// out-degree = its black count and in-degree = its white count; black k gives
// an arc to the component of white α_0(k). Vertices are numbered by smallest
// black vertex. Requires D >= 2 and 1 <= i <= D.
Digraph quotient_digraph(const ColoredGraph& g, Color i);

// Uniform matching of out- to in-half-edges. Rejects unbalanced totals and
// vertices of degree (0, j) or (j, 0).
Digraph sample_directed_config_model(const std::vector<DegreePair>& degrees, Rng& rng);

struct CycleCensus {
  // k -> number of components that are directed k-cycles of (1,1) vertices.
  std::map<std::size_t, std::size_t> cycles;
  std::size_t component_count = 0;          // weak components
  std::size_t strong_component_count = 0;   // Tarjan, cross-check
  std::size_t giant_size = 0;               // vertices of the largest weak component
  std::size_t giant_half_edges = 0;         // in + out half-edges of that component

  [[nodiscard]] std::size_t cycles_of_length(std::size_t k) const {
    auto it = cycles.find(k);
    return it == cycles.end() ? 0 : it->second;
  }
};

CycleCensus analyze(const Digraph& d);

std::size_t strong_component_count(const Digraph& d);

// "count in out" lines, expanded to one entry per vertex.
std::vector<DegreePair> parse_degree_sequence(std::string_view text);

// "k,count" lines with a header.
std::string census_csv(const CycleCensus& census);

/// Densities of a base graph's ĵ-components, averaged over j.
struct ModelConstants {
  std::map<std::size_t, Rational> c_delta;
  Rational c_q;
  Rational theta0;
  Rational d0;
  Rational p11;
  Rational ratio;  // c_1 / (c_q θ_0); λ_k = ratio^k / k

  [[nodiscard]] bool giant_regime() const { return d0 > 1; }
  [[nodiscard]] double lambda(std::size_t k) const;
  // Σ_{k>=1} λ_k = -ln(1 - ratio)
  [[nodiscard]] double lambda_sum_from_one() const;
  // c_G = Σ_{k>=2} λ_k
  [[nodiscard]] double c_g() const;
};

ModelConstants model_constants(const BaseGraph& base);
// Same as model_constants(quartic_base(D)); λ_k = 1/(k D^k).
ModelConstants quartic_constants(int dimension);

}  // namespace chromaplex
