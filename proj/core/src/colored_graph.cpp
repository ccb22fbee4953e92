#include "chromaplex/colored_graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

#include "chromaplex/error.hpp"
#include "chromaplex/union_find.hpp"
#include "text_util.hpp"

namespace chromaplex {

namespace {

void check_dimension(int dimension) {
  if (dimension < 1 || dimension > kMaxDimension) {
    throw InvalidSizeError("dimension D must lie in 1.." + std::to_string(kMaxDimension));
  }
}

void check_colors(const ColoredGraph& g, ColorSet colors) {
  if ((colors.mask() & ~ColorSet::all(g.dimension()).mask()) != 0) {
    throw InvalidArgumentError("color set contains a color outside 0..D");
  }
}

DisjointSets components_for(const ColoredGraph& g, ColorSet colors) {
  const std::size_t p = g.half_order();
  DisjointSets sets(2 * p);
  for (Color c : colors.members()) {
    const auto& a = g.alpha(c);
    for (std::size_t k = 0; k < p; ++k) sets.unite(k, p + a[k]);
  }
  return sets;
}

std::size_t parse_size(std::string_view word, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ParseError(std::string("expected an integer for ") + what + ", got '" + std::string(word) + "'");
  }
  return value;
}

}  // namespace

ColorSet::ColorSet(std::initializer_list<Color> colors) {
  for (Color c : colors) {
    if (c < 0 || c > kMaxDimension) throw InvalidArgumentError("color out of range");
    mask_ |= 1U << c;
  }
}

ColorSet ColorSet::all(int dimension) {
  check_dimension(dimension);
  return ColorSet((dimension + 1 >= 32) ? ~0U : ((1U << (dimension + 1)) - 1));
}

std::size_t ColorSet::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<Color> ColorSet::members() const {
  std::vector<Color> out;
  for (Color c = 0; c < 32; ++c) {
    if (contains(c)) out.push_back(c);
  }
  return out;
}

JacketSpec::JacketSpec(const std::vector<Color>& order) {
  const std::size_t n = order.size();
  if (n < 2) throw InvalidArgumentError("jacket: need at least two colors");
  successor_.assign(n, -1);
  std::vector<bool> seen(n, false);
  for (Color c : order) {
    if (c < 0 || static_cast<std::size_t>(c) >= n || seen[static_cast<std::size_t>(c)]) {
      throw InvalidArgumentError("jacket: order must list each color of 0..D once");
    }
    seen[static_cast<std::size_t>(c)] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    successor_[static_cast<std::size_t>(order[k])] = order[(k + 1) % n];
  }
}

JacketSpec JacketSpec::standard(int dimension) {
  check_dimension(dimension);
  std::vector<Color> order(static_cast<std::size_t>(dimension) + 1);
  std::iota(order.begin(), order.end(), 0);
  return JacketSpec(order);
}

Color JacketSpec::predecessor(Color c) const {
  for (std::size_t k = 0; k < successor_.size(); ++k) {
    if (successor_[k] == c) return static_cast<Color>(k);
  }
  throw InvalidArgumentError("jacket: unknown color");
}

std::vector<JacketSpec> all_jackets(int dimension) {
  check_dimension(dimension);
  std::vector<Color> rest(static_cast<std::size_t>(dimension));
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<JacketSpec> out;
  do {
    std::vector<Color> order{0};
    order.insert(order.end(), rest.begin(), rest.end());
    out.emplace_back(order);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

ColoredGraph::ColoredGraph(int dimension, std::vector<Permutation> alphas)
    : dimension_(dimension), alphas_(std::move(alphas)) {
  check_dimension(dimension);
  if (alphas_.size() != static_cast<std::size_t>(dimension) + 1) {
    throw InvalidArgumentError("colored graph: expected D+1 = " + std::to_string(dimension + 1) +
                               " permutations, got " + std::to_string(alphas_.size()));
  }
  for (const auto& a : alphas_) {
    if (a.size() != alphas_.front().size()) {
      throw InvalidArgumentError("colored graph: permutations have different sizes");
    }
  }
}

std::vector<std::uint32_t> bubble_labels(const ColoredGraph& g, ColorSet colors) {
  check_colors(g, colors);
  return components_for(g, colors).labels();
}

std::vector<Bubble> bubbles(const ColoredGraph& g, ColorSet colors) {
  const auto labels = bubble_labels(g, colors);
  const std::size_t p = g.half_order();
  const std::size_t count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<Bubble> out(count);
  for (auto& b : out) b.colors = colors;
  for (std::size_t k = 0; k < p; ++k) out[labels[k]].black_vertices.push_back(k);
  for (std::size_t k = 0; k < p; ++k) out[labels[p + k]].white_vertices.push_back(k);
  return out;
}

std::size_t bubble_count(const ColoredGraph& g, ColorSet colors) {
  check_colors(g, colors);
  return components_for(g, colors).set_count();
}

std::size_t face_count(const ColoredGraph& g) {
  std::size_t faces = 0;
  const auto n = static_cast<Color>(g.color_count());
  for (Color i = 0; i < n; ++i) {
    for (Color j = i + 1; j < n; ++j) faces += quotient_cycle_count(g.alpha(i), g.alpha(j));
  }
  return faces;
}

std::size_t face_count_by_traversal(const ColoredGraph& g) {
  std::size_t faces = 0;
  const auto n = static_cast<Color>(g.color_count());
  for (Color i = 0; i < n; ++i) {
    for (Color j = i + 1; j < n; ++j) faces += bubble_count(g, ColorSet{i, j});
  }
  return faces;
}

std::vector<std::size_t> bubble_census(const ColoredGraph& g) {
  const int D = g.dimension();
  const std::uint32_t full = ColorSet::all(D).mask();
  std::vector<std::size_t> census(static_cast<std::size_t>(D) + 2, 0);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    const auto set = ColorSet::from_mask(mask);
    if (set.size() == 2) continue;
    census[set.size()] += bubble_count(g, set);
  }
  census[2] = face_count(g);
  return census;
}

std::size_t jacket_faces(const ColoredGraph& g, const JacketSpec& jacket) {
  if (jacket.dimension() != g.dimension()) throw InvalidArgumentError("jacket: dimension mismatch");
  std::size_t faces = 0;
  for (Color i = 0; i <= g.dimension(); ++i) {
    faces += quotient_cycle_count(g.alpha(i), g.alpha(jacket.successor(i)));
  }
  return faces;
}

std::size_t jacket_faces_by_tracing(const ColoredGraph& g, const JacketSpec& jacket) {
  if (jacket.dimension() != g.dimension()) throw InvalidArgumentError("jacket: dimension mismatch");
  const std::size_t p = g.half_order();
  const std::size_t colors = g.color_count();
  std::vector<Permutation> inverses;
  inverses.reserve(colors);
  for (const auto& a : g.alphas()) inverses.push_back(inverse(a));

  // Darts are (vertex, color). Rotation: τ at black vertices, τ⁻¹ at white ones.
  // A face step crosses the edge, then turns by the rotation at the far end.
  std::vector<bool> seen(2 * p * colors, false);
  std::size_t faces = 0;
  for (std::size_t start = 0; start < seen.size(); ++start) {
    if (seen[start]) continue;
    ++faces;
    std::size_t dart = start;
    while (!seen[dart]) {
      seen[dart] = true;
      const std::size_t v = dart / colors;
      const auto c = static_cast<Color>(dart % colors);
      if (v < p) {
        const std::size_t w = g.alpha(c)[v];
        dart = (p + w) * colors + static_cast<std::size_t>(jacket.predecessor(c));
      } else {
        const std::size_t b = inverses[static_cast<std::size_t>(c)][v - p];
        dart = b * colors + static_cast<std::size_t>(jacket.successor(c));
      }
    }
  }
  return faces;
}

Rational gurau_degree_via_faces(const ColoredGraph& g) {
  const int D = g.dimension();
  if (D < 2) throw UnsupportedError("Gurau degree requires D >= 2");
  const auto p = static_cast<std::int64_t>(g.half_order());
  const auto b2 = static_cast<std::int64_t>(face_count(g));
  // (D-1)!/2 · (D(D-1)p/2 + D - b_2), kept exact.
  Rational bracket = make_rational(static_cast<std::int64_t>(D) * (D - 1) * p, 2) + D - b2;
  Rational prefactor = make_rational(static_cast<std::int64_t>(factorial(static_cast<unsigned>(D - 1))), 2);
  Rational result = prefactor * bracket;
  result.canonicalize();
  return result;
}

Rational gurau_degree_via_jackets(const ColoredGraph& g) {
  const int D = g.dimension();
  if (D < 2) throw UnsupportedError("Gurau degree requires D >= 2");
  if (!is_connected(g)) {
    throw UnsupportedError("jacket genera are defined here for connected graphs only");
  }
  const auto p = static_cast<std::int64_t>(g.half_order());
  const auto vertices = 2 * p;
  const auto edges = static_cast<std::int64_t>(D + 1) * p;
  std::int64_t genus_sum = 0;
  for (const auto& jacket : all_jackets(D)) {
    const auto faces = static_cast<std::int64_t>(jacket_faces_by_tracing(g, jacket));
    const std::int64_t euler = vertices - edges + faces;
    if ((2 - euler) % 2 != 0 || 2 - euler < 0) {
      throw Error("jacket Euler characteristic is not that of a connected orientable surface");
    }
    genus_sum += (2 - euler) / 2;
  }
  return make_rational(genus_sum, 2);
}

std::size_t component_count(const ColoredGraph& g) { return bubble_count(g, g.colors()); }

bool is_connected(const ColoredGraph& g) { return component_count(g) == 1; }

std::string to_text(const ColoredGraph& g) {
  std::string out = std::to_string(g.dimension()) + " " + std::to_string(g.half_order()) + "\n";
  for (const auto& a : g.alphas()) {
    out += to_string(a);
    out += '\n';
  }
  return out;
}

ColoredGraph parse_colored_graph(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("colored graph: empty input");
  const auto header = detail::split_words(lines.front());
  if (header.size() != 2) throw ParseError("colored graph: header must be 'D p'");
  const auto D = parse_size(header[0], "D");
  const auto p = parse_size(header[1], "p");
  if (D < 1 || D > static_cast<std::size_t>(kMaxDimension)) throw ParseError("colored graph: D out of range");
  if (p == 0) throw ParseError("colored graph: p must be positive");
  if (lines.size() != D + 2) {
    throw ParseError("colored graph: expected " + std::to_string(D + 1) + " permutation lines, got " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Permutation> alphas;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    alphas.push_back(parse_permutation(lines[i]));
    if (alphas.back().size() != p) {
      throw ParseError("colored graph: permutation for color " + std::to_string(i - 1) + " has size " +
                       std::to_string(alphas.back().size()) + ", expected " + std::to_string(p));
    }
  }
  return ColoredGraph(static_cast<int>(D), std::move(alphas));
}

}  // namespace chromaplex
