#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <tuple>

#include "chromaplex/rational.hpp"

namespace chromaplex {

inline constexpr std::uint64_t kOracleStateBound = 10'000'000;

// Per-graph values tallied by the uniform-model oracle.
struct UniformOutcome {
  bool connected;
  std::size_t components;
  std::size_t faces;
  Rational degree;  // zero-filled for D = 1
  std::size_t jacket_faces;  // standard jacket (0 1 ... D)

  friend bool operator<(const UniformOutcome& a, const UniformOutcome& b) {
    return std::tie(a.connected, a.components, a.faces, a.degree, a.jacket_faces) <
           std::tie(b.connected, b.components, b.faces, b.degree, b.jacket_faces);
  }
};

struct UniformOracle {
  std::uint64_t cases = 0;
  std::map<UniformOutcome, std::uint64_t> distribution;
  Rational p_connected;
  Rational mean_components;
  Rational mean_faces;
  Rational mean_degree;
  Rational mean_jacket_faces;
};

// Every (D+1)-tuple of permutations of size p, weighted equally. Throws
// InvalidSizeError when p!^(D+1) exceeds kOracleStateBound.
UniformOracle exhaustive_uniform_oracle(int dimension, std::size_t p);

struct RibbonOutcome {
  std::size_t faces;
  std::size_t vertices;
  bool connected;
  std::int64_t genus;

  friend bool operator<(const RibbonOutcome& a, const RibbonOutcome& b) {
    return std::tie(a.faces, a.vertices, a.connected, a.genus) < std::tie(b.faces, b.vertices, b.connected, b.genus);
  }
};

struct RibbonOracle {
  std::uint64_t cases = 0;
  std::map<RibbonOutcome, std::uint64_t> distribution;
  Rational p_connected;
  Rational mean_genus;
  Rational mean_genus_connected;
  // O(ψ) + O(δψ⁻¹) ≡ p (mod 2) in every case.
  bool parity_holds = true;
};

// Every pair (δ, ψ) with δ a fixed-point-free involution of {1..2p}.
// Requires (2p-1)!!·(2p)! <= kOracleStateBound.
RibbonOracle exhaustive_ribbon_oracle(std::size_t p);

}  // namespace chromaplex
