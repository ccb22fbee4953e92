#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace chromaplex {

// One step of SplitMix64; used for seeding and for deriving stream seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seedable pseudo-random stream (xoshiro256**).
///
/// Streams are split deterministically: Rng::for_trial(seed, i) gives trial i
/// its own generator, so results do not depend on how trials are scheduled
/// across threads.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static Rng for_trial(std::uint64_t master_seed, std::uint64_t trial);

  // Independent child stream; does not advance *this.
  [[nodiscard]] Rng split(std::uint64_t stream) const;

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  // Uniform on [0, bound). bound must be positive. Unbiased (Lemire).
  std::uint64_t below(std::uint64_t bound);

  // Uniform on [0, 1) with 53 random bits.
  double uniform01();

 private:
  std::array<std::uint64_t, 4> state_{};
};

}  // namespace chromaplex
