#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "chromaplex/error.hpp"
#include "chromaplex/rng.hpp"
#include "chromaplex/stats.hpp"

namespace cx = chromaplex;

TEST(Moments, MergeEqualsSinglePass) {
  cx::Rng rng(1);
  std::normal_distribution<double> normal(3.0, 2.0);
  cx::MomentAccumulator all, left, right;
  for (int i = 0; i < 1000; ++i) {
    const double x = normal(rng);
    all.add(x);
    (i % 3 == 0 ? left : right).add(x);
  }
  left.merge(right);
  EXPECT_EQ(left.count(), all.count());
  EXPECT_NEAR(left.mean(), all.mean(), 1e-12);
  EXPECT_NEAR(left.variance(), all.variance(), 1e-10);
  cx::MomentAccumulator empty;
  empty.merge(all);
  EXPECT_EQ(empty.count(), all.count());
  EXPECT_EQ(cx::MomentAccumulator().variance(), 0.0);
}

TEST(Moments, SmallByHand) {
  cx::MomentAccumulator acc;
  for (double x : {1.0, 2.0, 3.0, 4.0}) acc.add(x);
  EXPECT_DOUBLE_EQ(acc.mean(), 2.5);
  EXPECT_DOUBLE_EQ(acc.variance(), 5.0 / 3);
  EXPECT_DOUBLE_EQ(acc.standard_error(), std::sqrt(5.0 / 12));
}

TEST(Normal, Cdf) {
  EXPECT_DOUBLE_EQ(cx::normal_cdf(0), 0.5);
  EXPECT_NEAR(cx::normal_cdf(1.959963984540054), 0.975, 1e-12);
  EXPECT_NEAR(cx::normal_cdf(-1), 0.15865525393145707, 1e-12);
}

TEST(Kolmogorov, TailValues) {
  // asymptotic critical value 1.628 at α = 0.01
  EXPECT_NEAR(cx::kolmogorov_pvalue(1.62762 / std::sqrt(1e6), 1000000), 0.01, 2e-4);
  EXPECT_NEAR(cx::kolmogorov_pvalue(1.35810 / std::sqrt(1e6), 1000000), 0.05, 5e-4);
  EXPECT_EQ(cx::kolmogorov_pvalue(0, 100), 1.0);
}

TEST(KsNormality, CalibrationOnNormalData) {
  cx::Rng rng(2);
  std::normal_distribution<double> normal;
  const int reps = 100;
  int passed = 0;
  for (int r = 0; r < reps; ++r) {
    std::vector<double> xs(10000);
    for (double& x : xs) x = normal(rng);
    passed += cx::ks_normality(xs).p_value >= 0.01 ? 1 : 0;
  }
  EXPECT_GE(passed, 98);
}

TEST(KsNormality, RejectsSkewedData) {
  cx::Rng rng(3);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> xs(2000);
  for (double& x : xs) x = expo(rng);
  EXPECT_LT(cx::ks_normality(xs).p_value, 1e-6);
}

TEST(KsNormality, DegenerateSamples) {
  EXPECT_THROW(cx::ks_normality({4.0, 4.0, 4.0}), cx::InvalidArgumentError);
  EXPECT_THROW(cx::ks_normality({1.0}), cx::InvalidArgumentError);
}

TEST(Lattice, SpanAndJitter) {
  EXPECT_EQ(cx::lattice_span({3, 5, 9, 7}), 2.0);
  EXPECT_EQ(cx::lattice_span({-3, 0, 6}), 3.0);
  EXPECT_EQ(cx::lattice_span({1.5, 2}), 0.0);
  EXPECT_EQ(cx::lattice_span({4, 4}), 0.0);
  cx::Rng rng(4);
  const std::vector<double> xs{0, 2, 4, 6};
  const auto j = cx::jitter(xs, 2, rng);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    EXPECT_LE(std::abs(j[k] - xs[k]), 1.0);
    EXPECT_NE(j[k], xs[k]);
  }
  EXPECT_EQ(cx::jitter(xs, 0, rng), xs);
}

TEST(Lattice, JitterRestoresNormalityOfRoundedData) {
  // rounded normal with sd 2 fails plain KS at this size but passes once jittered
  cx::Rng rng(5);
  std::normal_distribution<double> normal(0.0, 2.0);
  std::vector<double> xs(20000);
  for (double& x : xs) x = std::round(normal(rng));
  EXPECT_LT(cx::ks_normality(xs).p_value, 0.01);
  const auto j = cx::jitter(xs, cx::lattice_span(xs), rng);
  EXPECT_GE(cx::ks_normality(j).p_value, 0.01);
}

TEST(Dispersion, PoissonCalibration) {
  cx::Rng rng(6);
  std::poisson_distribution<int> poisson(1.0 / 3);
  std::vector<double> counts(5000);
  for (double& c : counts) c = poisson(rng);
  const auto r = cx::dispersion_test(counts, 1.0 / 3);
  EXPECT_GE(r.index, 0.9);
  EXPECT_LE(r.index, 1.1);
  EXPECT_EQ(r.dof, counts.size());
  EXPECT_GT(r.p_value, 0.001);
}

TEST(Dispersion, FlagsOverdispersion) {
  cx::Rng rng(7);
  std::geometric_distribution<int> geo(0.5);
  std::vector<double> counts(5000);
  for (double& c : counts) c = geo(rng);
  const auto r = cx::dispersion_test(counts, 1.0);
  EXPECT_GT(r.index, 1.5);
  EXPECT_LT(r.p_value, 1e-6);
  EXPECT_THROW(cx::dispersion_test({0, 0, 0}, 1.0), cx::InvalidArgumentError);
  EXPECT_THROW(cx::dispersion_test({1, 2}, 0.0), cx::InvalidArgumentError);
}

TEST(ZScore, Basics) {
  EXPECT_DOUBLE_EQ(cx::z_score(1.5, 0.25, 1.0), 2.0);
  EXPECT_EQ(cx::z_score(1.0, 0.0, 1.0), 0.0);
  EXPECT_THROW(cx::z_score(1.0, 0.0, 2.0), cx::InvalidArgumentError);
}

TEST(VarianceEstimate, NormalStandardError) {
  cx::Rng rng(8);
  std::normal_distribution<double> normal(0.0, 3.0);
  std::vector<double> xs(20000);
  for (double& x : xs) x = normal(rng);
  const auto v = cx::variance_estimate(xs);
  EXPECT_NEAR(v.variance, 9.0, 4 * v.standard_error);
  // σ² √(2/(n-1)) for normal data
  EXPECT_NEAR(v.standard_error, 9.0 * std::sqrt(2.0 / 19999), 0.01);
  EXPECT_THROW(cx::variance_estimate({1.0}), cx::InvalidArgumentError);
}
