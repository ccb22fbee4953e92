#include "chromaplex/ribbon.hpp"

#include "chromaplex/error.hpp"
#include "chromaplex/union_find.hpp"
#include "text_util.hpp"

namespace chromaplex {

RibbonMap::RibbonMap(Permutation delta, Permutation psi) : delta_(std::move(delta)), psi_(std::move(psi)) {
  if (delta_.size() != psi_.size()) throw InvalidArgumentError("ribbon map: delta and psi sizes differ");
  if (delta_.size() % 2 != 0) throw InvalidSizeError("ribbon map: odd number of half-edges");
  for (std::size_t h = 0; h < delta_.size(); ++h) {
    if (delta_[h] == h || delta_[delta_[h]] != h) {
      throw InvalidArgumentError("ribbon map: delta must be a fixed-point-free involution");
    }
  }
}

RibbonMap sample_ribbon_map(std::size_t p, Rng& rng) {
  if (p == 0) throw InvalidSizeError("p must be positive");
  auto delta = sample_fixed_point_free_involution(2 * p, rng);
  auto psi = sample_uniform_permutation(2 * p, rng);
  return RibbonMap(std::move(delta), std::move(psi));
}

std::size_t ribbon_face_count(const RibbonMap& m) { return cycle_count(m.psi()); }

std::size_t ribbon_vertex_count(const RibbonMap& m) { return quotient_cycle_count(m.delta(), m.psi()); }

std::int64_t ribbon_genus(const RibbonMap& m) {
  const auto p = static_cast<std::int64_t>(m.edge_count());
  const auto sum = static_cast<std::int64_t>(ribbon_face_count(m) + ribbon_vertex_count(m));
  return 1 + (p - sum) / 2;
}

std::size_t ribbon_component_count(const RibbonMap& m) {
  const std::size_t n = m.delta().size();
  DisjointSets sets(n);
  for (std::size_t h = 0; h < n; ++h) {
    sets.unite(h, m.delta()[h]);
    sets.unite(h, m.psi()[h]);
  }
  return sets.set_count();
}

bool ribbon_is_connected(const RibbonMap& m) { return ribbon_component_count(m) == 1; }

std::optional<RibbonMap> ribbon_trim(const Permutation& alpha, const Permutation& phi) {
  const std::size_t n = alpha.size();
  if (phi.size() != n) throw InvalidArgumentError("ribbon trim: alpha and phi sizes differ");
  if (!alpha.is_involution()) throw InvalidArgumentError("ribbon trim: alpha must be an involution");

  constexpr auto erased = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> relabel(n, erased);
  std::uint32_t kept = 0;
  for (std::size_t h = 0; h < n; ++h) {
    if (alpha[h] != h) relabel[h] = kept++;
  }
  if (kept == 0) return std::nullopt;

  std::vector<std::uint32_t> delta(kept);
  std::vector<std::uint32_t> psi(kept);
  for (std::size_t h = 0; h < n; ++h) {
    if (relabel[h] == erased) continue;
    delta[relabel[h]] = relabel[alpha[h]];
    std::size_t next = phi[h];
    while (relabel[next] == erased) next = phi[next];
    psi[relabel[h]] = relabel[next];
  }
  return RibbonMap(Permutation(std::move(delta)), Permutation(std::move(psi)));
}

std::string to_text(const RibbonMap& m) {
  return std::to_string(m.edge_count()) + "\n" + to_string(m.delta()) + "\n" + to_string(m.psi()) + "\n";
}

RibbonMap parse_ribbon_map(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.size() != 3) throw ParseError("ribbon map: expected three lines (p, delta, psi)");
  std::size_t p = 0;
  try {
    p = std::stoul(std::string(lines[0]));
  } catch (const std::exception&) {
    throw ParseError("ribbon map: first line must be the edge count p");
  }
  auto delta = parse_permutation(lines[1]);
  auto psi = parse_permutation(lines[2]);
  if (delta.size() != 2 * p || psi.size() != 2 * p) {
    throw ParseError("ribbon map: permutations must have size 2p = " + std::to_string(2 * p));
  }
  try {
    return RibbonMap(std::move(delta), std::move(psi));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace chromaplex
