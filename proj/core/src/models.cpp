#include "chromaplex/models.hpp"

#include <fstream>
#include <sstream>

#include "chromaplex/error.hpp"
#include "chromaplex/union_find.hpp"
#include "text_util.hpp"

namespace chromaplex {

namespace {

void require_positive(std::size_t p) {
  if (p == 0) throw InvalidSizeError("p must be positive");
}

Permutation from_zero_based(std::vector<std::uint32_t> images) { return Permutation(std::move(images)); }

}  // namespace

ColoredGraph sample_uniform_model(int dimension, std::size_t p, Rng& rng) {
  require_positive(p);
  if (dimension < 1 || dimension > kMaxDimension) throw InvalidSizeError("dimension D out of range");
  std::vector<Permutation> alphas;
  alphas.reserve(static_cast<std::size_t>(dimension) + 1);
  for (int i = 0; i <= dimension; ++i) alphas.push_back(sample_uniform_permutation(p, rng));
  return ColoredGraph(dimension, std::move(alphas));
}

QuarticSample sample_quartic_model(int dimension, std::size_t p, Rng& rng) {
  require_positive(p);
  if (dimension < 2) throw UnsupportedError("the quartic model requires D >= 2");
  if (dimension > kMaxDimension) throw InvalidSizeError("dimension D out of range");
  const std::size_t n = 2 * p;
  std::vector<Permutation> alphas;
  alphas.reserve(static_cast<std::size_t>(dimension) + 1);
  alphas.push_back(sample_uniform_permutation(n, rng));

  std::vector<std::vector<std::uint32_t>> images(static_cast<std::size_t>(dimension));
  for (auto& img : images) {
    img.resize(n);
    for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<std::uint32_t>(x);
  }
  QuarticWitness witness;
  witness.distinguished_colors.reserve(p);
  for (std::size_t k = 0; k < p; ++k) {
    const auto c = static_cast<Color>(1 + rng.below(static_cast<std::uint64_t>(dimension)));
    witness.distinguished_colors.push_back(c);
    auto& img = images[static_cast<std::size_t>(c - 1)];
    std::swap(img[2 * k], img[2 * k + 1]);
  }
  for (auto& img : images) alphas.push_back(from_zero_based(std::move(img)));
  return {ColoredGraph(dimension, std::move(alphas)), std::move(witness)};
}

BaseGraph::BaseGraph(int dimension, std::vector<Permutation> pis)
    : dimension_(dimension), pis_(std::move(pis)) {
  if (dimension_ < 2 || dimension_ > kMaxDimension) {
    throw InvalidArgumentError("base graph: D must lie in 2.." + std::to_string(kMaxDimension));
  }
  if (pis_.size() != static_cast<std::size_t>(dimension_)) {
    throw InvalidArgumentError("base graph: expected D = " + std::to_string(dimension_) +
                               " permutations, got " + std::to_string(pis_.size()));
  }
  const std::size_t t = pis_.front().size();
  for (const auto& pi : pis_) {
    if (pi.size() != t) throw InvalidArgumentError("base graph: permutations have different sizes");
  }
  if (t < 2) throw InvalidArgumentError("base graph: need t >= 2 (at least 4 vertices)");

  DisjointSets sets(2 * t);
  for (const auto& pi : pis_) {
    for (std::size_t k = 0; k < t; ++k) sets.unite(k, t + pi[k]);
  }
  if (sets.set_count() != 1) {
    const auto labels = sets.labels();
    std::ostringstream msg;
    msg << "base graph is disconnected (" << sets.set_count() << " components):";
    for (std::uint32_t c = 0; c < sets.set_count(); ++c) {
      msg << " [black";
      for (std::size_t k = 0; k < t; ++k) {
        if (labels[k] == c) msg << ' ' << k + 1;
      }
      msg << "; white";
      for (std::size_t k = 0; k < t; ++k) {
        if (labels[t + k] == c) msg << ' ' << k + 1;
      }
      msg << ']';
    }
    throw InvalidArgumentError(msg.str());
  }
}

BaseGraph quartic_base(int dimension) {
  std::vector<Permutation> pis;
  pis.push_back(Permutation::from_one_based({2, 1}));
  for (int j = 2; j <= dimension; ++j) pis.push_back(Permutation::identity(2));
  return BaseGraph(dimension, std::move(pis));
}

BaseGraph necklace_base(int dimension, std::size_t t, Color j) {
  if (j < 1 || j > dimension) throw InvalidArgumentError("necklace: color must lie in 1..D");
  if (t < 2) throw InvalidArgumentError("necklace: need t >= 2");
  std::vector<Permutation> pis;
  for (Color c = 1; c <= dimension; ++c) {
    if (c != j) {
      pis.push_back(Permutation::identity(t));
      continue;
    }
    std::vector<std::uint32_t> shift(t);
    for (std::size_t k = 0; k < t; ++k) shift[k] = static_cast<std::uint32_t>((k + 1) % t);
    pis.push_back(from_zero_based(std::move(shift)));
  }
  return BaseGraph(dimension, std::move(pis));
}

BaseGraph parse_base_graph(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("base graph: empty input");
  const auto header = detail::split_words(lines.front());
  if (header.size() != 2) throw ParseError("base graph: header must be 'D t'");
  int dimension = 0;
  std::size_t t = 0;
  try {
    dimension = std::stoi(std::string(header[0]));
    t = std::stoul(std::string(header[1]));
  } catch (const std::exception&) {
    throw ParseError("base graph: header must be two integers 'D t'");
  }
  if (dimension < 2 || dimension > kMaxDimension) throw ParseError("base graph: D out of range");
  if (lines.size() != static_cast<std::size_t>(dimension) + 1) {
    throw ParseError("base graph: expected " + std::to_string(dimension) + " permutation lines, got " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Permutation> pis;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    pis.push_back(parse_permutation(lines[i]));
    if (pis.back().size() != t) {
      throw ParseError("base graph: permutation for color " + std::to_string(i) + " has size " +
                       std::to_string(pis.back().size()) + ", expected " + std::to_string(t));
    }
  }
  return BaseGraph(dimension, std::move(pis));
}

BaseGraph load_base_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open base graph file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_base_graph(buf.str());
}

std::string to_text(const BaseGraph& base) {
  std::string out = std::to_string(base.dimension()) + " " + std::to_string(base.half_order()) + "\n";
  for (const auto& pi : base.pis()) {
    out += to_string(pi);
    out += '\n';
  }
  return out;
}

ColoredGraph sample_uncolored_model(const BaseGraph& base, std::size_t p, Rng& rng) {
  require_positive(p);
  const int D = base.dimension();
  const std::size_t t = base.half_order();
  const std::size_t n = t * p;
  std::vector<Permutation> alphas;
  alphas.reserve(static_cast<std::size_t>(D) + 1);
  alphas.push_back(sample_uniform_permutation(n, rng));

  std::vector<std::vector<std::uint32_t>> images(static_cast<std::size_t>(D), std::vector<std::uint32_t>(n));
  for (std::size_t k = 0; k < p; ++k) {
    const auto gamma = sample_uniform_permutation(static_cast<std::size_t>(D), rng);
    const std::size_t off = k * t;
    for (Color j = 1; j <= D; ++j) {
      auto& img = images[gamma[static_cast<std::size_t>(j - 1)]];
      const auto& pi = base.pi(j);
      for (std::size_t b = 0; b < t; ++b) img[off + b] = static_cast<std::uint32_t>(off + pi[b]);
    }
  }
  for (auto& img : images) alphas.push_back(from_zero_based(std::move(img)));
  return ColoredGraph(D, std::move(alphas));
}

}  // namespace chromaplex
