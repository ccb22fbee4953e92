#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chromaplex/predictions.hpp"

namespace chromaplex {

/// Flat key=value experiment description.
///
/// Recognized keys: name, model, D, p, base, trials, seed, observables,
/// color, pairs, threads, samples, out, z, proportion_sigma, ks_alpha,
/// slack_factor, slack.<observable>, threshold.<observable>,
/// variance_ratio_low, variance_ratio_high, variance_bound_constant,
/// dispersion_low, dispersion_high, giant_constant, jitter.
struct ExperimentConfig {
  std::string name = "experiment";
  ModelSpec model;
  std::string base_path;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::vector<std::string> observables;
  Color color = 1;
  std::size_t pairs = 1000;
  std::size_t threads = 0;  // 0: hardware concurrency
  std::string samples_dir;
  std::string out;

  double z = 4.0;
  double proportion_sigma = 3.0;
  double ks_alpha = 0.01;
  double slack_factor = 5.0;
  std::map<std::string, double> slack;
  std::map<std::string, double> threshold;
  double variance_ratio_low = 0.5;
  double variance_ratio_high = 2.0;
  double variance_bound_constant = 40.0;
  double dispersion_low = 0.8;
  double dispersion_high = 1.2;
  double giant_constant = 10.0;
  bool jitter = true;

  // Keys and values as read, in file order.
  std::vector<std::pair<std::string, std::string>> entries;
};

// `base_dir` resolves a relative base path. Throws ParseError.
ExperimentConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

// The config as key=value lines, one per entry, in file order.
std::string echo_config(const ExperimentConfig& config);

struct ReportRow {
  std::string test;
  std::string observable;
  std::string kind;
  std::size_t n = 0;
  double mean = 0;
  double variance = 0;
  double se = 0;
  std::optional<double> prediction;
  std::string prediction_kind;
  std::optional<double> z;
  std::optional<double> statistic;
  std::optional<double> p_value;
  std::optional<double> tolerance;
  std::string verdict;  // pass, fail, info, match, no-match
  std::string note;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<ReportRow> rows;
  std::map<std::string, std::vector<double>> samples;
  std::size_t parity_violations = 0;
  std::size_t threads_used = 1;
  double elapsed_seconds = 0;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] const ReportRow* find(std::string_view test) const;
};

// Worker count: config.threads (or hardware concurrency), capped by the
// CHROMAPLEX_THREADS environment variable.
std::size_t worker_count(const ExperimentConfig& config);

ExperimentReport run(const ExperimentConfig& config);

// Deterministic: same config, same text, regardless of thread count.
std::string report_csv(const ExperimentReport& report);
std::string report_summary(const ExperimentReport& report);

// One file per observable in `dir`, one value per line.
void write_sample_sidecars(const ExperimentReport& report, const std::filesystem::path& dir);

}  // namespace chromaplex
