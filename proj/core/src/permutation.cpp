#include "chromaplex/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "chromaplex/error.hpp"

namespace chromaplex {

namespace {

using index_type = Permutation::index_type;

void require_nonempty(std::size_t n, const char* what) {
  if (n == 0) throw InvalidSizeError(std::string(what) + ": size must be positive");
}

std::vector<index_type> shuffled_range(std::size_t n, Rng& rng) {
  std::vector<index_type> v(n);
  std::iota(v.begin(), v.end(), index_type{0});
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(v[i - 1], v[j]);
  }
  return v;
}

}  // namespace

Permutation::Permutation(std::vector<index_type> images) : images_(std::move(images)) {
  require_nonempty(images_.size(), "permutation");
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw InvalidArgumentError("permutation: images do not form a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  require_nonempty(n, "identity");
  std::vector<index_type> v(n);
  std::iota(v.begin(), v.end(), index_type{0});
  return Permutation(Unchecked{}, std::move(v));
}

Permutation Permutation::from_one_based(std::span<const std::size_t> images) {
  std::vector<index_type> v;
  v.reserve(images.size());
  for (auto x : images) {
    if (x == 0 || x > images.size()) {
      throw InvalidArgumentError("permutation: image " + std::to_string(x) + " out of range 1.." +
                                 std::to_string(images.size()));
    }
    v.push_back(static_cast<index_type>(x - 1));
  }
  return Permutation(std::move(v));
}

Permutation Permutation::from_one_based(std::initializer_list<std::size_t> images) {
  return from_one_based(std::span<const std::size_t>(images.begin(), images.size()));
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  require_nonempty(n, "from_cycles");
  std::vector<index_type> v(n);
  std::iota(v.begin(), v.end(), index_type{0});
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::size_t from = cycle[i];
      const std::size_t to = cycle[(i + 1) % cycle.size()];
      if (from == 0 || from > n || to == 0 || to > n || used[from - 1]) {
        throw InvalidArgumentError("from_cycles: cycles must be disjoint and within 1..n");
      }
      used[from - 1] = true;
      v[from - 1] = static_cast<index_type>(to - 1);
    }
  }
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != k) return false;
  }
  return true;
}

bool Permutation::is_involution() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[images_[k]] != k) return false;
  }
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidArgumentError("compose: length mismatch");
  std::vector<index_type> v(a.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a[b[k]];
  return Permutation(Permutation::Unchecked{}, std::move(v));
}

Permutation inverse(const Permutation& a) {
  std::vector<index_type> v(a.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[a[k]] = static_cast<index_type>(k);
  return Permutation(Permutation::Unchecked{}, std::move(v));
}

CycleStats cycle_stats(const Permutation& a) {
  CycleStats stats;
  std::vector<bool> seen(a.size(), false);
  for (std::size_t start = 0; start < a.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (std::size_t k = start; !seen[k]; k = a[k]) {
      seen[k] = true;
      ++length;
    }
    stats.cycle_type.push_back(length);
    if (length == 1) ++stats.fixed_points;
  }
  std::sort(stats.cycle_type.begin(), stats.cycle_type.end(), std::greater<>());
  stats.cycle_count = stats.cycle_type.size();
  stats.sign = ((a.size() - stats.cycle_count) % 2 == 0) ? 1 : -1;
  return stats;
}

std::size_t cycle_count(const Permutation& a) {
  std::vector<bool> seen(a.size(), false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < a.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t k = start; !seen[k]; k = a[k]) seen[k] = true;
  }
  return cycles;
}

std::size_t quotient_cycle_count(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidArgumentError("quotient_cycle_count: length mismatch");
  // Orbits of b⁻¹ ∘ a, which is conjugate to a ∘ b⁻¹.
  const std::size_t n = a.size();
  std::vector<index_type> b_inv(n);
  for (std::size_t k = 0; k < n; ++k) b_inv[b[k]] = static_cast<index_type>(k);
  std::vector<bool> seen(n, false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t k = start; !seen[k]; k = b_inv[a[k]]) seen[k] = true;
  }
  return cycles;
}

Permutation sample_uniform_permutation(std::size_t n, Rng& rng) {
  require_nonempty(n, "sample_uniform_permutation");
  return Permutation(Permutation::Unchecked{}, shuffled_range(n, rng));
}

Permutation sample_fixed_point_free_involution(std::size_t n, Rng& rng) {
  require_nonempty(n, "sample_fixed_point_free_involution");
  if (n % 2 != 0) throw InvalidSizeError("sample_fixed_point_free_involution: n must be even");
  return sample_involution_with_fixed_points(n, 0, rng);
}

Permutation sample_involution_with_fixed_points(std::size_t n, std::size_t fixed, Rng& rng) {
  require_nonempty(n, "sample_involution_with_fixed_points");
  if (fixed > n || (n - fixed) % 2 != 0) {
    throw InvalidSizeError("sample_involution_with_fixed_points: n - fixed must be even and >= 0");
  }
  const auto order = shuffled_range(n, rng);
  std::vector<index_type> v(n);
  for (std::size_t i = 0; i < fixed; ++i) v[order[i]] = order[i];
  for (std::size_t i = fixed; i < n; i += 2) {
    v[order[i]] = order[i + 1];
    v[order[i + 1]] = order[i];
  }
  return Permutation(Permutation::Unchecked{}, std::move(v));
}

std::string to_string(const Permutation& a) {
  std::string out;
  out.reserve(a.size() * 4);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k != 0) out.push_back(' ');
    out += std::to_string(static_cast<std::size_t>(a[k]) + 1);
  }
  return out;
}

Permutation parse_permutation(std::string_view line) {
  std::vector<std::size_t> images;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc() || ptr == line.data() + pos) {
      throw ParseError("permutation: expected an integer in '" + std::string(line) + "'");
    }
    pos = static_cast<std::size_t>(ptr - line.data());
    if (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') {
      throw ParseError("permutation: unexpected character in '" + std::string(line) + "'");
    }
    images.push_back(value);
  }
  if (images.empty()) throw ParseError("permutation: empty line");
  try {
    return Permutation::from_one_based(images);
  } catch (const InvalidArgumentError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace chromaplex
