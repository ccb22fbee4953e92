#pragma once

#include <cstddef>
#include <vector>

#include "chromaplex/rng.hpp"

namespace chromaplex {

/// Running mean and variance (Welford), mergeable (Chan et al.).
class MomentAccumulator {
 public:
  void add(double x);
  void merge(const MomentAccumulator& other);

  [[nodiscard]] std::size_t count() const { return n_; }
  [[nodiscard]] double mean() const { return mean_; }
  // Unbiased sample variance; 0 for fewer than two values.
  [[nodiscard]] double variance() const;
  [[nodiscard]] double standard_error() const;

 private:
  std::size_t n_ = 0;
  double mean_ = 0;
  double m2_ = 0;
};

double normal_cdf(double x);

// Asymptotic Kolmogorov tail P(D_n > d), Stephens' finite-n correction.
double kolmogorov_pvalue(double d, std::size_t n);

struct KsResult {
  double statistic;
  double p_value;
};

// One-sample KS of the studentized sample against N(0, 1). Throws
// InvalidArgumentError on fewer than two values or zero variance.
KsResult ks_normality(const std::vector<double>& samples);

// Spacing of the lattice holding integer-valued samples (gcd of the gaps);
// 0 when some value is not an integer or all values coincide.
double lattice_span(const std::vector<double>& samples);

// Adds independent Uniform(-span/2, span/2) noise to each value.
std::vector<double> jitter(const std::vector<double>& samples, double span, Rng& rng);

struct DispersionResult {
  double index;       // s² / x̄
  double chi_square;  // Σ (x - λ)² / λ
  std::size_t dof;
  double p_value;     // two-sided chi-square tail
};

// Poisson(λ) dispersion check of count data; λ > 0.
DispersionResult dispersion_test(const std::vector<double>& counts, double lambda);

// (mean - target) / se; throws on se <= 0 unless mean == target.
double z_score(double mean, double se, double target);

// Sample variance and the standard error of that estimate, from the
// fourth central moment.
struct VarianceEstimate {
  double variance;
  double standard_error;
};
VarianceEstimate variance_estimate(const std::vector<double>& samples);

}  // namespace chromaplex
