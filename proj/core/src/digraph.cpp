#include "chromaplex/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "chromaplex/error.hpp"
#include "chromaplex/union_find.hpp"
#include "text_util.hpp"

namespace chromaplex {

Digraph::Digraph(std::vector<DegreePair> degrees, std::vector<Arc> arcs)
    : degrees_(std::move(degrees)), arcs_(std::move(arcs)) {
  const std::size_t n = degrees_.size();
  std::vector<std::size_t> out(n, 0);
  std::vector<std::size_t> in(n, 0);
  for (const auto& a : arcs_) {
    if (a.tail >= n || a.head >= n) throw InvalidArgumentError("digraph: arc endpoint out of range");
    ++out[a.tail];
    ++in[a.head];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (out[v] != degrees_[v].out || in[v] != degrees_[v].in) {
      throw InvalidArgumentError("digraph: arcs do not match the degree list at vertex " + std::to_string(v + 1));
    }
  }
}

Digraph quotient_digraph(const ColoredGraph& g, Color i) {
  const int D = g.dimension();
  if (D < 2) throw UnsupportedError("quotient digraph requires D >= 2");
  if (i < 1 || i > D) throw InvalidArgumentError("quotient digraph: color must lie in 1..D");
  const std::size_t p = g.half_order();
  const auto labels = bubble_labels(g, g.colors().without(0).without(i));
  const std::size_t n = *std::max_element(labels.begin(), labels.end()) + 1;

  std::vector<DegreePair> degrees(n);
  for (std::size_t k = 0; k < p; ++k) {
    ++degrees[labels[k]].out;
    ++degrees[labels[p + k]].in;
  }
  // Arcs ordered by tail component, then by black vertex, matching the
  // out-half-edge numbering.
  std::vector<std::vector<std::size_t>> blacks(n);
  for (std::size_t k = 0; k < p; ++k) blacks[labels[k]].push_back(k);
  std::vector<Arc> arcs;
  arcs.reserve(p);
  const auto& a0 = g.alpha(0);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t k : blacks[c]) arcs.push_back({c, labels[p + a0[k]]});
  }
  return Digraph(std::move(degrees), std::move(arcs));
}

Digraph sample_directed_config_model(const std::vector<DegreePair>& degrees, Rng& rng) {
  std::size_t total_in = 0;
  std::size_t total_out = 0;
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    const auto& d = degrees[v];
    if ((d.in == 0) != (d.out == 0)) {
      throw InvalidArgumentError("config model: vertex " + std::to_string(v + 1) + " has degree (" +
                                 std::to_string(d.in) + ", " + std::to_string(d.out) + ")");
    }
    total_in += d.in;
    total_out += d.out;
  }
  if (total_in != total_out) throw InvalidArgumentError("config model: total in-degree differs from out-degree");
  if (total_in == 0) throw InvalidSizeError("config model: no half-edges");

  std::vector<std::size_t> in_owner;
  in_owner.reserve(total_in);
  for (std::size_t v = 0; v < degrees.size(); ++v) in_owner.insert(in_owner.end(), degrees[v].in, v);
  const auto matching = sample_uniform_permutation(total_out, rng);

  std::vector<Arc> arcs;
  arcs.reserve(total_out);
  std::size_t h = 0;
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    for (std::size_t r = 0; r < degrees[v].out; ++r, ++h) arcs.push_back({v, in_owner[matching[h]]});
  }
  return Digraph(degrees, std::move(arcs));
}

std::size_t strong_component_count(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<std::size_t> start(n + 1, 0);
  for (const auto& a : d.arcs()) ++start[a.tail + 1];
  for (std::size_t v = 0; v < n; ++v) start[v + 1] += start[v];
  std::vector<std::size_t> succ(d.arc_count());
  {
    auto fill = start;
    for (const auto& a : d.arcs()) succ[fill[a.tail]++] = a.head;
  }

  // Iterative Tarjan.
  constexpr auto undefined = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, undefined), low(n, 0), edge_pos(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack, call;
  std::size_t next_index = 0, components = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != undefined) continue;
    call.push_back(root);
    while (!call.empty()) {
      const std::size_t v = call.back();
      if (index[v] == undefined) {
        index[v] = low[v] = next_index++;
        edge_pos[v] = start[v];
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (edge_pos[v] < start[v + 1]) {
        const std::size_t w = succ[edge_pos[v]++];
        if (index[w] == undefined) {
          call.push_back(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      call.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
      if (low[v] == index[v]) {
        ++components;
        std::size_t w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
        } while (w != v);
      }
    }
  }
  return components;
}

CycleCensus analyze(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  DisjointSets sets(n);
  for (const auto& a : d.arcs()) sets.unite(a.tail, a.head);
  const auto labels = sets.labels();

  CycleCensus census;
  census.component_count = sets.set_count();
  std::vector<std::size_t> size(census.component_count, 0), half_edges(census.component_count, 0);
  std::vector<bool> all_unit(census.component_count, true);
  for (std::size_t v = 0; v < n; ++v) {
    const auto c = labels[v];
    ++size[c];
    half_edges[c] += d.degrees()[v].in + d.degrees()[v].out;
    if (d.degrees()[v].in != 1 || d.degrees()[v].out != 1) all_unit[c] = false;
  }
  for (std::size_t c = 0; c < census.component_count; ++c) {
    if (all_unit[c]) ++census.cycles[size[c]];
    if (size[c] > census.giant_size) {
      census.giant_size = size[c];
      census.giant_half_edges = half_edges[c];
    }
  }
  census.strong_component_count = strong_component_count(d);
  return census;
}

std::vector<DegreePair> parse_degree_sequence(std::string_view text) {
  std::vector<DegreePair> out;
  for (auto line : detail::content_lines(text)) {
    const auto words = detail::split_words(line);
    if (words.size() != 3) throw ParseError("degree sequence: expected 'count in out', got '" + std::string(line) + "'");
    std::size_t values[3];
    for (int k = 0; k < 3; ++k) {
      try {
        std::size_t used = 0;
        const std::string word(words[static_cast<std::size_t>(k)]);
        values[k] = std::stoul(word, &used);
        if (used != word.size() || word.front() == '-') throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("degree sequence: non-integer field in '" + std::string(line) + "'");
      }
    }
    out.insert(out.end(), values[0], DegreePair{values[1], values[2]});
  }
  return out;
}

std::string census_csv(const CycleCensus& census) {
  std::ostringstream out;
  out << "k,count\n";
  for (const auto& [k, count] : census.cycles) out << k << ',' << count << '\n';
  return out.str();
}

double ModelConstants::lambda(std::size_t k) const {
  if (k == 0) throw InvalidArgumentError("lambda: k must be positive");
  return std::pow(to_double(ratio), static_cast<double>(k)) / static_cast<double>(k);
}

double ModelConstants::lambda_sum_from_one() const {
  if (ratio >= 1) throw UnsupportedError("cycle rates are not summable (c_1 >= c_q θ_0)");
  return -std::log1p(-to_double(ratio));
}

double ModelConstants::c_g() const { return lambda_sum_from_one() - to_double(ratio); }

ModelConstants model_constants(const BaseGraph& base) {
  const int D = base.dimension();
  const std::size_t t = base.half_order();
  ModelConstants mc;
  for (Color j = 1; j <= D; ++j) {
    DisjointSets sets(2 * t);
    for (Color c = 1; c <= D; ++c) {
      if (c == j) continue;
      for (std::size_t k = 0; k < t; ++k) sets.unite(k, t + base.pi(c)[k]);
    }
    const auto labels = sets.labels();
    std::vector<std::size_t> black_count(sets.set_count(), 0);
    for (std::size_t k = 0; k < t; ++k) ++black_count[labels[k]];
    for (std::size_t delta : black_count) mc.c_delta[delta] += 1;
  }
  Rational weighted = 0;
  Rational weighted_sq = 0;
  mc.c_q = 0;
  for (auto& [delta, c] : mc.c_delta) {
    c /= D;
    mc.c_q += c;
    weighted += c * static_cast<unsigned long>(delta);
    weighted_sq += c * static_cast<unsigned long>(delta * delta);
  }
  mc.theta0 = weighted / mc.c_q;
  mc.d0 = weighted_sq / weighted;
  const Rational c1 = mc.c_delta.count(1) ? mc.c_delta.at(1) : Rational(0);
  mc.p11 = c1 / mc.c_q;
  mc.ratio = c1 / (mc.c_q * mc.theta0);
  for (Rational* r : {&mc.c_q, &mc.theta0, &mc.d0, &mc.p11, &mc.ratio}) r->canonicalize();
  return mc;
}

ModelConstants quartic_constants(int dimension) { return model_constants(quartic_base(dimension)); }

}  // namespace chromaplex
