#include "chromaplex/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "chromaplex/colored_graph.hpp"
#include "chromaplex/error.hpp"
#include "chromaplex/ribbon.hpp"

namespace chromaplex {

namespace {

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation::index_type> images(n);
  std::iota(images.begin(), images.end(), 0U);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

void matchings(std::vector<Permutation::index_type>& partner, std::vector<Permutation>& out) {
  const auto unset = static_cast<Permutation::index_type>(-1);
  auto first = std::find(partner.begin(), partner.end(), unset);
  if (first == partner.end()) {
    out.emplace_back(partner);
    return;
  }
  const auto a = static_cast<Permutation::index_type>(first - partner.begin());
  for (auto b = a + 1; b < partner.size(); ++b) {
    if (partner[b] != unset) continue;
    partner[a] = b;
    partner[b] = a;
    matchings(partner, out);
    partner[a] = partner[b] = unset;
  }
}

// Saturating a^e.
std::uint64_t bounded_power(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 0; k < e; ++k) {
    if (r > kOracleStateBound / std::max<std::uint64_t>(a, 1)) return kOracleStateBound + 1;
    r *= a;
  }
  return r;
}

}  // namespace

UniformOracle exhaustive_uniform_oracle(int dimension, std::size_t p) {
  if (dimension < 1 || dimension > kMaxDimension) throw InvalidSizeError("oracle: D out of range");
  if (p == 0 || p > 20) throw InvalidSizeError("oracle: p out of range");
  const std::uint64_t states = bounded_power(factorial(static_cast<unsigned>(p)), static_cast<std::uint64_t>(dimension) + 1);
  if (states > kOracleStateBound) throw InvalidSizeError("oracle: p!^(D+1) exceeds the enumeration bound");

  const auto perms = all_permutations(p);
  const std::size_t colors = static_cast<std::size_t>(dimension) + 1;
  const auto jacket = JacketSpec::standard(dimension);
  std::vector<std::size_t> digits(colors, 0);
  UniformOracle result;
  while (true) {
    std::vector<Permutation> alphas;
    alphas.reserve(colors);
    for (std::size_t d : digits) alphas.push_back(perms[d]);
    const ColoredGraph g(dimension, std::move(alphas));
    UniformOutcome outcome{is_connected(g), component_count(g), face_count(g),
                           dimension >= 2 ? gurau_degree_via_faces(g) : Rational(0), jacket_faces(g, jacket)};
    ++result.distribution[outcome];
    ++result.cases;

    std::size_t pos = 0;
    while (pos < colors && ++digits[pos] == perms.size()) digits[pos++] = 0;
    if (pos == colors) break;
  }

  const Rational total(static_cast<unsigned long>(result.cases));
  for (const auto& [outcome, count] : result.distribution) {
    const Rational w = Rational(static_cast<unsigned long>(count)) / total;
    if (outcome.connected) result.p_connected += w;
    result.mean_components += w * static_cast<unsigned long>(outcome.components);
    result.mean_faces += w * static_cast<unsigned long>(outcome.faces);
    result.mean_degree += w * outcome.degree;
    result.mean_jacket_faces += w * static_cast<unsigned long>(outcome.jacket_faces);
  }
  return result;
}

RibbonOracle exhaustive_ribbon_oracle(std::size_t p) {
  if (p == 0 || p > 10) throw InvalidSizeError("ribbon oracle: p out of range");
  std::uint64_t involutions = 1;
  for (std::uint64_t k = 1; k < 2 * p; k += 2) involutions *= k;
  const std::uint64_t perms_count = factorial(static_cast<unsigned>(2 * p));
  if (perms_count > kOracleStateBound / involutions) {
    throw InvalidSizeError("ribbon oracle: (2p-1)!!·(2p)! exceeds the enumeration bound");
  }

  std::vector<Permutation> deltas;
  std::vector<Permutation::index_type> partner(2 * p, static_cast<Permutation::index_type>(-1));
  matchings(partner, deltas);
  const auto psis = all_permutations(2 * p);

  RibbonOracle result;
  std::uint64_t connected_cases = 0;
  Rational genus_connected_sum = 0;
  for (const auto& delta : deltas) {
    for (const auto& psi : psis) {
      const RibbonMap m(delta, psi);
      RibbonOutcome outcome{ribbon_face_count(m), ribbon_vertex_count(m), ribbon_is_connected(m), ribbon_genus(m)};
      if ((outcome.faces + outcome.vertices) % 2 != p % 2) result.parity_holds = false;
      ++result.distribution[outcome];
      ++result.cases;
    }
  }
  const Rational total(static_cast<unsigned long>(result.cases));
  for (const auto& [outcome, count] : result.distribution) {
    const Rational w = Rational(static_cast<unsigned long>(count)) / total;
    const Rational g(static_cast<long>(outcome.genus));
    result.mean_genus += w * g;
    if (outcome.connected) {
      result.p_connected += w;
      connected_cases += count;
      genus_connected_sum += Rational(static_cast<unsigned long>(count)) * g;
    }
  }
  if (connected_cases > 0) {
    result.mean_genus_connected = genus_connected_sum / Rational(static_cast<unsigned long>(connected_cases));
  }
  return result;
}

}  // namespace chromaplex
