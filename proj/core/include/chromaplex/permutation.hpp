#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chromaplex/rng.hpp"

namespace chromaplex {

/// A bijection of {1..n}, n >= 1.
///
/// Storage is zero-based: operator[](k) is the image of k + 1, minus one.
/// Text forms (to_string, parse_permutation, from_cycles) use one-based
/// labels. Instances are immutable once built.
class Permutation {
 public:
  using index_type = std::uint32_t;

  // Takes zero-based images; throws unless they form a bijection of {0..n-1}.
  explicit Permutation(std::vector<index_type> images);

  static Permutation identity(std::size_t n);

  // One-based images, as they appear in serialized text.
  static Permutation from_one_based(std::span<const std::size_t> images);
  static Permutation from_one_based(std::initializer_list<std::size_t> images);

  // Product of disjoint one-based cycles on {1..n}; unlisted points are fixed.
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<std::size_t>>& cycles);

  [[nodiscard]] std::size_t size() const { return images_.size(); }
  index_type operator[](std::size_t k) const { return images_[k]; }
  [[nodiscard]] std::span<const index_type> images() const { return images_; }
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] bool is_involution() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<index_type> images) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation sample_uniform_permutation(std::size_t, Rng&);
  friend Permutation sample_fixed_point_free_involution(std::size_t, Rng&);
  friend Permutation sample_involution_with_fixed_points(std::size_t, std::size_t, Rng&);

  std::vector<index_type> images_;
};

struct CycleStats {
  std::size_t cycle_count = 0;
  std::vector<std::size_t> cycle_type;  // cycle lengths, non-increasing
  std::size_t fixed_points = 0;
  int sign = 1;

  friend bool operator==(const CycleStats&, const CycleStats&) = default;
};

// (a ∘ b)(k) = a(b(k)). Throws on length mismatch.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);

CycleStats cycle_stats(const Permutation& a);

// Orbit count only; no allocation beyond one mark vector.
std::size_t cycle_count(const Permutation& a);

// Number of cycles of a ∘ b⁻¹, the face count of the {a, b} bicolored pair.
std::size_t quotient_cycle_count(const Permutation& a, const Permutation& b);

// Uniform on S_n by the Fisher-Yates shuffle. n = 0 is rejected.
Permutation sample_uniform_permutation(std::size_t n, Rng& rng);

// Uniform fixed-point-free involution: shuffle, then pair consecutive entries.
Permutation sample_fixed_point_free_involution(std::size_t n, Rng& rng);

// Uniform involution with exactly `fixed` fixed points; n - fixed must be even.
Permutation sample_involution_with_fixed_points(std::size_t n, std::size_t fixed, Rng& rng);

// One line of whitespace-separated one-based images.
std::string to_string(const Permutation& a);
Permutation parse_permutation(std::string_view line);

}  // namespace chromaplex
