#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromaplex/colored_graph.hpp"
#include "chromaplex/models.hpp"
#include "chromaplex/rational.hpp"

namespace chromaplex {

// H_n = Σ_{j<=n} 1/j, exact. Fast enough for n around 10^6.
Rational harmonic(std::size_t n);
// Σ_{j<=n} 1/j^s, exact.
Rational harmonic_power(std::size_t n, unsigned s);
// Σ_{j<=n} (j-1)/j², the variance of the cycle count of a uniform permutation.
Rational harmonic_var(std::size_t n);
double harmonic_double(std::size_t n);

inline constexpr double kEulerGamma = 0.57721566490153286061;

enum class ModelKind { uniform, quartic, uncolored, ribbon };

std::string to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);

struct ModelSpec {
  ModelKind kind = ModelKind::uniform;
  int dimension = 3;
  std::size_t p = 1;
  std::optional<BaseGraph> base;  // uncolored model only
};

enum class PredictionKind { exact, leading };

std::string to_string(PredictionKind kind);

// How the harness turns a prediction into a verdict.
enum class Statistic {
  mean,            // z test on the sample mean
  proportion,      // binomial test on a 0/1 observable
  variance,        // z test on the sample variance
  variance_ratio,  // sample variance / value within a band
  variance_bound,  // sample variance <= value
  threshold,       // sample mean >= value
  normality,       // KS against N(0,1) after studentizing
  dispersion,      // Poisson dispersion with rate value
};

std::string to_string(Statistic s);

struct Prediction {
  std::string name;
  std::string observable;
  Statistic statistic = Statistic::mean;
  double value = 0;
  std::optional<Rational> exact;
  PredictionKind kind = PredictionKind::exact;
  // Size of the stated remainder at this p; 0 for exact values.
  double error_order = 0;
  // Non-empty when several readings of one claim are compared.
  std::string variant;
  std::string anchor;
};

// Predictions attached to one observable; empty when there are none.
// Throws UnsupportedError for an observable the model does not produce.
std::vector<Prediction> predict(const ModelSpec& spec, std::string_view observable);

// Observables a model can produce.
std::vector<std::string> supported_observables(ModelKind kind);

// Every prediction for the model at (D, p).
std::vector<Prediction> prediction_table(const ModelSpec& spec);

// CSV: name,model,D,p,value,kind,anchor
std::string prediction_table_csv(const ModelSpec& spec, const std::vector<Prediction>& rows);

// Lemma value of ω for a given face count (D >= 2), exact.
Rational degree_from_faces(int dimension, std::size_t p, const Rational& faces);

}  // namespace chromaplex
