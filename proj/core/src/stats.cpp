#include "chromaplex/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>

#include "chromaplex/error.hpp"

namespace chromaplex {

void MomentAccumulator::add(double x) {
  ++n_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(n_);
  m2_ += delta * (x - mean_);
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(other.n_);
  const double delta = other.mean_ - mean_;
  const double total = na + nb;
  mean_ += delta * nb / total;
  m2_ += other.m2_ + delta * delta * na * nb / total;
  n_ += other.n_;
}

double MomentAccumulator::variance() const { return n_ < 2 ? 0.0 : m2_ / static_cast<double>(n_ - 1); }

double MomentAccumulator::standard_error() const {
  return n_ == 0 ? 0.0 : std::sqrt(variance() / static_cast<double>(n_));
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double kolmogorov_pvalue(double d, std::size_t n) {
  const double sn = std::sqrt(static_cast<double>(n));
  const double lambda = (sn + 0.12 + 0.11 / sn) * d;
  if (lambda < 0.2) return 1.0;
  double sum = 0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_normality(const std::vector<double>& samples) {
  if (samples.size() < 2) throw InvalidArgumentError("KS test needs at least two samples");
  MomentAccumulator acc;
  for (double x : samples) acc.add(x);
  const double sd = std::sqrt(acc.variance());
  if (!(sd > 0)) throw InvalidArgumentError("KS test: degenerate sample (zero variance)");

  std::vector<double> z(samples.size());
  std::transform(samples.begin(), samples.end(), z.begin(), [&](double x) { return (x - acc.mean()) / sd; });
  std::sort(z.begin(), z.end());
  const double n = static_cast<double>(z.size());
  double d = 0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    const double f = normal_cdf(z[k]);
    d = std::max({d, static_cast<double>(k + 1) / n - f, f - static_cast<double>(k) / n});
  }
  return {d, kolmogorov_pvalue(d, z.size())};
}

double lattice_span(const std::vector<double>& samples) {
  if (samples.empty()) return 0;
  for (double x : samples) {
    if (x != std::floor(x) || std::abs(x) > 9e15) return 0;
  }
  const auto lo = static_cast<std::int64_t>(*std::min_element(samples.begin(), samples.end()));
  std::int64_t g = 0;
  for (double x : samples) g = std::gcd(g, static_cast<std::int64_t>(x) - lo);
  return static_cast<double>(g);
}

std::vector<double> jitter(const std::vector<double>& samples, double span, Rng& rng) {
  std::vector<double> out(samples);
  if (span <= 0) return out;
  for (double& x : out) x += (rng.uniform01() - 0.5) * span;
  return out;
}

DispersionResult dispersion_test(const std::vector<double>& counts, double lambda) {
  if (counts.size() < 2) throw InvalidArgumentError("dispersion test needs at least two counts");
  if (!(lambda > 0)) throw InvalidArgumentError("dispersion test: lambda must be positive");
  MomentAccumulator acc;
  double chi = 0;
  for (double x : counts) {
    acc.add(x);
    chi += (x - lambda) * (x - lambda) / lambda;
  }
  if (!(acc.mean() > 0)) throw InvalidArgumentError("dispersion test: all counts are zero");
  const std::size_t dof = counts.size();
  boost::math::chi_squared dist(static_cast<double>(dof));
  const double lower = boost::math::cdf(dist, chi);
  const double p = 2.0 * std::min(lower, 1.0 - lower);
  return {acc.variance() / acc.mean(), chi, dof, std::min(p, 1.0)};
}

double z_score(double mean, double se, double target) {
  if (se > 0) return (mean - target) / se;
  if (mean == target) return 0;
  throw InvalidArgumentError("z test: zero standard error with a nonzero deviation");
}

VarianceEstimate variance_estimate(const std::vector<double>& samples) {
  const std::size_t n = samples.size();
  if (n < 2) throw InvalidArgumentError("variance estimate needs at least two samples");
  MomentAccumulator acc;
  for (double x : samples) acc.add(x);
  double m2 = 0, m4 = 0;
  for (double x : samples) {
    const double d = x - acc.mean();
    m2 += d * d;
    m4 += d * d * d * d;
  }
  m2 /= static_cast<double>(n);
  m4 /= static_cast<double>(n);
  const double var = acc.variance();
  const double se = std::sqrt(std::max(m4 - m2 * m2, 0.0) / static_cast<double>(n));
  return {var, se};
}

}  // namespace chromaplex
