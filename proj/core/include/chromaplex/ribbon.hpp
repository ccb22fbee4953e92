#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "chromaplex/permutation.hpp"
#include "chromaplex/rng.hpp"

namespace chromaplex {

/// Combinatorial map with p edges on 2p labelled half-edges.
///
/// delta pairs half-edges into edges; psi describes faces and δψ⁻¹ vertices.
class RibbonMap {
 public:
  // delta must be a fixed-point-free involution of the same size as psi.
  RibbonMap(Permutation delta, Permutation psi);

  [[nodiscard]] std::size_t edge_count() const { return delta_.size() / 2; }
  [[nodiscard]] const Permutation& delta() const { return delta_; }
  [[nodiscard]] const Permutation& psi() const { return psi_; }

  friend bool operator==(const RibbonMap&, const RibbonMap&) = default;

 private:
  Permutation delta_;
  Permutation psi_;
};

// δ uniform fixed-point-free involution of {1..2p}, ψ uniform on S_{2p}.
RibbonMap sample_ribbon_map(std::size_t p, Rng& rng);

std::size_t ribbon_face_count(const RibbonMap& m);    // O(ψ)
std::size_t ribbon_vertex_count(const RibbonMap& m);  // O(δψ⁻¹)

// 1 + (p - O(ψ) - O(δψ⁻¹))/2, from the global Euler characteristic. Integer
// for every map; negative values are possible for disconnected maps.
std::int64_t ribbon_genus(const RibbonMap& m);

// Components of the group generated by δ and ψ acting on half-edges.
std::size_t ribbon_component_count(const RibbonMap& m);
bool ribbon_is_connected(const RibbonMap& m);

// Erase the fixed points of the involution `alpha`, relabel the rest in
// increasing order, take δ = alpha restricted and ψ = phi with erased points
// spliced out of its cycles. Returns nullopt when nothing is left.
std::optional<RibbonMap> ribbon_trim(const Permutation& alpha, const Permutation& phi);

// Three lines: "p", δ, ψ.
std::string to_text(const RibbonMap& m);
RibbonMap parse_ribbon_map(std::string_view text);

}  // namespace chromaplex
