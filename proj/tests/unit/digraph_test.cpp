#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "chromaplex/colored_graph.hpp"
#include "chromaplex/digraph.hpp"
#include "chromaplex/error.hpp"
#include "chromaplex/models.hpp"
#include "chromaplex/predictions.hpp"
#include "chromaplex/rng.hpp"
#include "chromaplex/stats.hpp"

namespace cx = chromaplex;
using cx::Arc;
using cx::DegreePair;
using cx::Digraph;
using cx::Permutation;

namespace {

std::vector<DegreePair> sorted_degrees(const Digraph& d) {
  auto out = d.degrees();
  std::sort(out.begin(), out.end(), [](auto a, auto b) { return std::tie(a.in, a.out) < std::tie(b.in, b.out); });
  return out;
}

// Falling factorial (x)_r.
std::int64_t falling(std::int64_t x, int r) {
  std::int64_t out = 1;
  for (int k = 0; k < r; ++k) out *= x - k;
  return out;
}

}  // namespace

TEST(Digraph, ConstructionChecks) {
  EXPECT_THROW(Digraph({{1, 1}}, {}), cx::InvalidArgumentError);
  EXPECT_THROW(Digraph({{1, 1}}, {{0, 1}}), cx::InvalidArgumentError);
  EXPECT_NO_THROW(Digraph({{1, 1}}, {{0, 0}}));
}

TEST(Digraph, HandBuiltCensus) {
  // 5-cycle of (1,1) vertices, then a (2,2) vertex with two self-loops
  std::vector<DegreePair> deg(5, {1, 1});
  deg.push_back({2, 2});
  std::vector<Arc> arcs;
  for (std::size_t v = 0; v < 5; ++v) arcs.push_back({v, (v + 1) % 5});
  arcs.push_back({5, 5});
  arcs.push_back({5, 5});
  const auto census = cx::analyze(Digraph(deg, arcs));
  EXPECT_EQ(census.cycles, (std::map<std::size_t, std::size_t>{{5, 1}}));
  EXPECT_EQ(census.component_count, 2u);
  EXPECT_EQ(census.strong_component_count, 2u);
  EXPECT_EQ(census.giant_size, 5u);
  EXPECT_EQ(census.giant_half_edges, 10u);
  EXPECT_EQ(cx::census_csv(census), "k,count\n5,1\n");
}

TEST(Digraph, SingleDoubleVertex) {
  cx::Rng rng(1);
  const auto d = cx::sample_directed_config_model({{2, 2}}, rng);
  EXPECT_EQ(d.arc_count(), 2u);
  for (const auto& a : d.arcs()) EXPECT_EQ(a, (Arc{0, 0}));
  EXPECT_EQ(cx::analyze(d).component_count, 1u);
  EXPECT_TRUE(cx::analyze(d).cycles.empty());
}

TEST(Digraph, ConfigModelRejections) {
  cx::Rng rng(2);
  EXPECT_THROW(cx::sample_directed_config_model({{0, 1}, {1, 0}}, rng), cx::InvalidArgumentError);
  EXPECT_THROW(cx::sample_directed_config_model({{1, 2}, {1, 1}}, rng), cx::InvalidArgumentError);
  EXPECT_THROW(cx::sample_directed_config_model({{0, 0}}, rng), cx::InvalidSizeError);
}

TEST(Digraph, UnitDegreesReduceToPermutationCycles) {
  cx::Rng rng(3);
  const std::size_t n = 200;
  const std::vector<DegreePair> deg(n, {1, 1});
  cx::MomentAccumulator acc;
  for (int rep = 0; rep < 4000; ++rep) {
    const auto census = cx::analyze(cx::sample_directed_config_model(deg, rng));
    std::size_t cycles = 0;
    for (const auto& [k, c] : census.cycles) cycles += c;
    ASSERT_EQ(cycles, census.component_count);
    acc.add(static_cast<double>(census.component_count));
  }
  EXPECT_LE(std::abs(acc.mean() - cx::to_double(cx::harmonic(n))), 4 * acc.standard_error());
}

TEST(Digraph, FactorialMomentsOfLoopCount) {
  // four (1,1) vertices, one (2,2), one (3,3): m = 9 half-edge pairs
  std::vector<DegreePair> deg(4, {1, 1});
  deg.push_back({2, 2});
  deg.push_back({3, 3});
  const std::size_t m = 9;
  const std::int64_t l11 = 4;
  std::vector<std::size_t> in_owner;
  for (std::size_t v = 0; v < deg.size(); ++v) in_owner.insert(in_owner.end(), deg[v].in, v);

  std::vector<std::size_t> matching(m);
  std::iota(matching.begin(), matching.end(), std::size_t{0});
  std::vector<std::int64_t> moment(4, 0);
  std::int64_t total = 0;
  do {
    std::vector<Arc> arcs;
    std::size_t h = 0;
    for (std::size_t v = 0; v < deg.size(); ++v)
      for (std::size_t r = 0; r < deg[v].out; ++r, ++h) arcs.push_back({v, in_owner[matching[h]]});
    const auto c1 = static_cast<std::int64_t>(cx::analyze(Digraph(deg, arcs)).cycles_of_length(1));
    for (int r = 1; r <= 3; ++r) moment[static_cast<std::size_t>(r)] += falling(c1, r);
    ++total;
  } while (std::next_permutation(matching.begin(), matching.end()));
  ASSERT_EQ(total, 362880);

  for (int r = 1; r <= 3; ++r) {
    const auto exact = cx::make_rational(moment[static_cast<std::size_t>(r)], total);
    // (l11)_r (m - r)! / m!
    const auto formula = cx::make_rational(falling(l11, r), falling(static_cast<std::int64_t>(m), r));
    EXPECT_EQ(exact, formula) << "r=" << r;
  }

  cx::Rng rng(4);
  cx::MomentAccumulator acc;
  for (int rep = 0; rep < 20000; ++rep)
    acc.add(static_cast<double>(cx::analyze(cx::sample_directed_config_model(deg, rng)).cycles_of_length(1)));
  EXPECT_LE(std::abs(acc.mean() - 4.0 / 9), 4 * acc.standard_error());
}

TEST(QuotientDigraph, SingleQuarticBubble) {
  // D = 3, color 1 distinguished
  const cx::ColoredGraph g(3, {Permutation::identity(2), Permutation::from_one_based({2, 1}), Permutation::identity(2),
                               Permutation::identity(2)});
  const auto s1 = cx::quotient_digraph(g, 1);
  EXPECT_EQ(sorted_degrees(s1), (std::vector<DegreePair>{{1, 1}, {1, 1}}));
  for (cx::Color i : {2, 3}) {
    const auto s = cx::quotient_digraph(g, i);
    EXPECT_EQ(s.degrees(), (std::vector<DegreePair>{{2, 2}}));
  }
  EXPECT_THROW(cx::quotient_digraph(g, 0), cx::InvalidArgumentError);
  EXPECT_THROW(cx::quotient_digraph(g, 4), cx::InvalidArgumentError);
}

TEST(QuotientDigraph, NecklaceDegreeMultiset) {
  cx::Rng rng(5);
  // one copy: the recoloring decides which color plays the closing role
  const auto base = cx::necklace_base(3, 3, 1);
  const auto g = cx::sample_uncolored_model(base, 1, rng);
  std::vector<std::vector<DegreePair>> seen;
  for (cx::Color i = 1; i <= 3; ++i) seen.push_back(sorted_degrees(cx::quotient_digraph(g, i)));
  std::sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  EXPECT_EQ(seen[0], (std::vector<DegreePair>{{3, 3}}));
  EXPECT_EQ(seen[1], (std::vector<DegreePair>{{3, 3}}));
  EXPECT_EQ(seen[2], (std::vector<DegreePair>(3, {1, 1})));
}

TEST(QuotientDigraph, PreservesComponents) {
  cx::Rng rng(6);
  for (int rep = 0; rep < 1000; ++rep) {
    const int D = 3 + static_cast<int>(rng.below(2));
    const auto g = cx::sample_quartic_model(D, 1 + rng.below(60), rng).graph;
    const cx::Color i = 1 + static_cast<cx::Color>(rng.below(static_cast<std::uint64_t>(D)));
    const auto census = cx::analyze(cx::quotient_digraph(g, i));
    ASSERT_EQ(census.component_count, cx::bubble_count(g, g.colors().without(i)));
    ASSERT_EQ(census.strong_component_count, census.component_count);
  }
}

TEST(QuotientDigraph, QuarticGiant) {
  cx::Rng rng(7);
  for (int rep = 0; rep < 5; ++rep) {
    const auto g = cx::sample_quartic_model(3, 3000, rng).graph;
    const auto d = cx::quotient_digraph(g, 1);
    const auto census = cx::analyze(d);
    EXPECT_GT(static_cast<double>(census.giant_size) / static_cast<double>(d.vertex_count()), 0.95);
  }
}

TEST(DegreeSequence, Parse) {
  const auto deg = cx::parse_degree_sequence("# quartic\n2 1 1\n1 2 2\n");
  EXPECT_EQ(deg, (std::vector<DegreePair>{{1, 1}, {1, 1}, {2, 2}}));
  EXPECT_THROW(cx::parse_degree_sequence("2 1\n"), cx::ParseError);
  EXPECT_THROW(cx::parse_degree_sequence("2 -1 1\n"), cx::ParseError);
  EXPECT_THROW(cx::parse_degree_sequence("2 1 x\n"), cx::ParseError);
}

TEST(ModelConstants, QuarticBase) {
  const auto mc = cx::quartic_constants(3);
  EXPECT_EQ(mc.c_delta.at(1), cx::make_rational(2, 3));
  EXPECT_EQ(mc.c_delta.at(2), cx::make_rational(2, 3));
  EXPECT_EQ(mc.c_q, cx::make_rational(4, 3));
  EXPECT_EQ(mc.theta0, cx::make_rational(3, 2));
  EXPECT_EQ(mc.d0, cx::make_rational(5, 3));
  EXPECT_EQ(mc.p11, cx::make_rational(1, 2));
  EXPECT_EQ(mc.ratio, cx::make_rational(1, 3));
  EXPECT_NEAR(mc.lambda(1), 1.0 / 3, 1e-15);
  EXPECT_NEAR(mc.lambda(2), 1.0 / 18, 1e-15);
  EXPECT_NEAR(mc.lambda_sum_from_one(), std::log(1.5), 1e-15);
  EXPECT_NEAR(mc.c_g(), std::log(1.5) - 1.0 / 3, 1e-15);
  EXPECT_TRUE(mc.giant_regime());
  // λ_k = 1/(k D^k) at every D >= 3
  for (int D = 3; D <= 7; ++D) EXPECT_EQ(cx::quartic_constants(D).ratio, cx::make_rational(1, D));
}

TEST(ModelConstants, NecklaceBase) {
  // removing the closing color leaves three melons: only degree-one vertices
  const auto mc = cx::model_constants(cx::necklace_base(3, 3, 1));
  EXPECT_EQ(mc.c_delta.at(1), cx::make_rational(1));
  EXPECT_EQ(mc.c_delta.at(3), cx::make_rational(2, 3));
  EXPECT_EQ(mc.c_delta.size(), 2u);
  EXPECT_TRUE(mc.giant_regime());
}

TEST(ModelConstants, GiantRegimeForRandomBases) {
  cx::Rng rng(8);
  int built = 0;
  while (built < 200) {
    const int D = 3 + static_cast<int>(rng.below(3));
    const std::size_t t = 2 + rng.below(6);
    std::vector<Permutation> pis;
    for (int j = 0; j < D; ++j) pis.push_back(cx::sample_uniform_permutation(t, rng));
    try {
      const cx::BaseGraph base(D, pis);
      ASSERT_TRUE(cx::model_constants(base).giant_regime()) << cx::to_text(base);
      ++built;
    } catch (const cx::InvalidArgumentError&) {
      // disconnected draw
    }
  }
}
