#include "chromaplex/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "chromaplex/digraph.hpp"
#include "chromaplex/dual_complex.hpp"
#include "chromaplex/error.hpp"
#include "chromaplex/models.hpp"
#include "chromaplex/ribbon.hpp"
#include "chromaplex/stats.hpp"
#include "text_util.hpp"

namespace chromaplex {

namespace {

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

std::string format_number(double x) { return detail::format_double(x); }

std::string format_optional(const std::optional<double>& x) { return x ? format_number(*x) : ""; }

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double x = std::stod(value, &used);
    if (used != value.size() || !std::isfinite(x)) throw ParseError("");
    return x;
  } catch (const std::exception&) {
    throw ParseError("config: '" + key + "' needs a number, got '" + value + "'");
  }
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& value) {
  std::uint64_t x = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), x);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ParseError("config: '" + key + "' needs a non-negative integer, got '" + value + "'");
  }
  return x;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "on" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "off" || value == "0" || value == "no") return false;
  throw ParseError("config: '" + key + "' needs on/off, got '" + value + "'");
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

bool is_graph_model(ModelKind kind) { return kind != ModelKind::ribbon; }

// Values of every requested observable for one trial, plus the parity check.
struct TrialResult {
  std::vector<double> values;
  bool parity_ok = true;
};

class TrialEvaluator {
 public:
  explicit TrialEvaluator(const ExperimentConfig& config) : config_(config) {}

  TrialResult operator()(std::uint64_t trial) const {
    Rng rng = Rng::for_trial(config_.seed, trial);
    if (config_.model.kind == ModelKind::ribbon) return ribbon_trial(rng);
    return graph_trial(rng);
  }

 private:
  ColoredGraph sample_graph(Rng& rng) const {
    const auto& m = config_.model;
    switch (m.kind) {
      case ModelKind::uniform: return sample_uniform_model(m.dimension, m.p, rng);
      case ModelKind::quartic: return sample_quartic_model(m.dimension, m.p, rng).graph;
      case ModelKind::uncolored: return sample_uncolored_model(*m.base, m.p, rng);
      case ModelKind::ribbon: break;
    }
    throw UnsupportedError("not a graph model");
  }

  TrialResult graph_trial(Rng& rng) const {
    const ColoredGraph g = sample_graph(rng);
    const int D = g.dimension();
    const std::size_t n = g.half_order();
    const std::size_t jacket = jacket_faces(g, JacketSpec::standard(D));

    TrialResult result;
    result.parity_ok = ((static_cast<std::size_t>(D) + 1) * n - jacket) % 2 == 0;
    std::optional<CycleCensus> census;
    auto get_census = [&]() -> const CycleCensus& {
      if (!census) census = analyze(quotient_digraph(g, config_.color));
      return *census;
    };
    std::optional<std::size_t> faces;
    auto get_faces = [&] {
      if (!faces) faces = face_count(g);
      return *faces;
    };

    for (const auto& obs : config_.observables) {
      double v = kMissing;
      if (obs == "connected") {
        v = is_connected(g) ? 1 : 0;
      } else if (obs == "components") {
        v = static_cast<double>(component_count(g));
      } else if (obs == "faces") {
        v = static_cast<double>(get_faces());
      } else if (obs == "bubbles_D") {
        std::size_t total = 0;
        for (Color i = 0; i <= D; ++i) total += bubble_count(g, g.colors().without(i));
        v = static_cast<double>(total);
      } else if (obs == "jacket_faces") {
        v = static_cast<double>(jacket);
      } else if (obs == "degree") {
        v = to_double(degree_from_faces(D, n, Rational(static_cast<unsigned long>(get_faces()))));
      } else if (obs == "i_bubbles") {
        v = static_cast<double>(get_census().component_count);
      } else if (obs.starts_with("cycles_")) {
        v = static_cast<double>(get_census().cycles_of_length(static_cast<std::size_t>(obs.back() - '0')));
      } else if (obs == "giant_covers") {
        const double p = static_cast<double>(config_.model.p);
        const double bound = static_cast<double>(g.vertex_count()) - config_.giant_constant * std::sqrt(p * std::log(p));
        v = static_cast<double>(get_census().giant_half_edges) >= bound ? 1 : 0;
      } else if (obs == "giant_fraction") {
        v = static_cast<double>(get_census().giant_half_edges) / static_cast<double>(g.vertex_count());
      } else if (obs == "distance_two") {
        const DualComplex cx = build_dual_complex(g);
        std::size_t hits = 0;
        for (std::size_t k = 0; k < config_.pairs; ++k) {
          const auto d = sample_pair_distance(cx, rng);
          if (d && *d == 2) ++hits;
        }
        v = static_cast<double>(hits) / static_cast<double>(config_.pairs);
      }
      result.values.push_back(v);
    }
    return result;
  }

  TrialResult ribbon_trial(Rng& rng) const {
    const RibbonMap m = sample_ribbon_map(config_.model.p, rng);
    const std::size_t faces = ribbon_face_count(m);
    const std::size_t vertices = ribbon_vertex_count(m);
    const std::size_t components = ribbon_component_count(m);
    const auto genus = static_cast<double>(ribbon_genus(m));

    TrialResult result;
    result.parity_ok = (faces + vertices) % 2 == config_.model.p % 2;
    for (const auto& obs : config_.observables) {
      double v = kMissing;
      if (obs == "connected") v = components == 1 ? 1 : 0;
      else if (obs == "components") v = static_cast<double>(components);
      else if (obs == "faces") v = static_cast<double>(faces);
      else if (obs == "vertices") v = static_cast<double>(vertices);
      else if (obs == "genus") v = genus;
      else if (obs == "genus_connected") v = components == 1 ? genus : kMissing;
      result.values.push_back(v);
    }
    return result;
  }

  const ExperimentConfig& config_;
};

double slack_for(const ExperimentConfig& config, const Prediction& pr) {
  if (auto it = config.slack.find(pr.observable); it != config.slack.end()) return it->second;
  return pr.kind == PredictionKind::leading ? config.slack_factor * pr.error_order : 0.0;
}

ReportRow base_row(const Prediction& pr, const std::vector<double>& xs, const MomentAccumulator& acc) {
  ReportRow row;
  row.test = pr.variant.empty() ? pr.name : pr.name + "[" + pr.variant + "]";
  row.observable = pr.observable;
  row.kind = to_string(pr.statistic);
  row.n = xs.size();
  row.mean = acc.mean();
  row.variance = acc.variance();
  row.se = acc.standard_error();
  row.prediction = pr.value;
  row.prediction_kind = to_string(pr.kind);
  return row;
}

ReportRow evaluate(const ExperimentConfig& config, const Prediction& pr, const std::vector<double>& xs,
                   const MomentAccumulator& acc) {
  ReportRow row = base_row(pr, xs, acc);
  const double slack = slack_for(config, pr);
  auto verdict = [](bool ok) { return std::string(ok ? "pass" : "fail"); };
  if (xs.empty()) {
    row.verdict = "fail";
    row.note = "no samples";
    return row;
  }

  switch (pr.statistic) {
    case Statistic::mean: {
      const double diff = acc.mean() - pr.value;
      row.tolerance = config.z * row.se + slack;
      if (row.se > 0) row.z = diff / row.se;
      row.verdict = verdict(std::abs(diff) <= *row.tolerance + 1e-12 * std::max(1.0, std::abs(pr.value)));
      break;
    }
    case Statistic::proportion: {
      const double sigma = std::sqrt(pr.value * (1 - pr.value) / static_cast<double>(xs.size()));
      const double diff = acc.mean() - pr.value;
      row.tolerance = config.proportion_sigma * sigma + slack;
      if (sigma > 0) row.z = diff / sigma;
      row.verdict = verdict(std::abs(diff) <= *row.tolerance + 1e-12);
      break;
    }
    case Statistic::variance: {
      if (xs.size() < 2) {
        row.verdict = "fail";
        row.note = "variance needs two samples";
        break;
      }
      const auto est = variance_estimate(xs);
      row.statistic = est.variance;
      row.tolerance = config.z * est.standard_error;
      if (est.standard_error > 0) row.z = (est.variance - pr.value) / est.standard_error;
      row.verdict = verdict(std::abs(est.variance - pr.value) <= *row.tolerance + 1e-12);
      break;
    }
    case Statistic::variance_ratio: {
      const double ratio = acc.variance() / pr.value;
      row.statistic = ratio;
      row.tolerance = config.variance_ratio_high;
      row.note = "ratio band [" + format_number(config.variance_ratio_low) + ", " +
                 format_number(config.variance_ratio_high) + "]";
      row.verdict = verdict(ratio >= config.variance_ratio_low && ratio <= config.variance_ratio_high);
      break;
    }
    case Statistic::variance_bound: {
      row.prediction = config.variance_bound_constant * pr.value;
      row.statistic = acc.variance();
      row.tolerance = *row.prediction;
      row.note = "upper bound";
      row.verdict = verdict(acc.variance() <= *row.prediction);
      break;
    }
    case Statistic::threshold: {
      double target = pr.value;
      if (auto it = config.threshold.find(pr.observable); it != config.threshold.end()) target = it->second;
      row.prediction = target;
      row.statistic = acc.mean();
      row.tolerance = target;
      row.note = "lower bound";
      row.verdict = verdict(acc.mean() >= target);
      break;
    }
    case Statistic::normality: {
      row.prediction.reset();
      std::vector<double> data = xs;
      const double span = config.jitter ? lattice_span(xs) : 0.0;
      if (span > 0) {
        Rng rng = Rng(config.seed).split(fnv1a(pr.observable));
        data = jitter(xs, span, rng);
        row.note = "jitter span " + format_number(span);
      }
      try {
        const auto ks = ks_normality(data);
        row.statistic = ks.statistic;
        row.p_value = ks.p_value;
        row.tolerance = config.ks_alpha;
        row.verdict = verdict(ks.p_value >= config.ks_alpha);
      } catch (const InvalidArgumentError& e) {
        row.verdict = "fail";
        row.note = e.what();
      }
      break;
    }
    case Statistic::dispersion: {
      try {
        const auto d = dispersion_test(xs, pr.value);
        row.statistic = d.index;
        row.p_value = d.p_value;
        row.tolerance = config.dispersion_high;
        row.note = "index band [" + format_number(config.dispersion_low) + ", " +
                   format_number(config.dispersion_high) + "], chi2=" + format_number(d.chi_square);
        row.verdict = verdict(d.index >= config.dispersion_low && d.index <= config.dispersion_high);
      } catch (const InvalidArgumentError& e) {
        row.verdict = "fail";
        row.note = e.what();
      }
      break;
    }
  }
  if (!pr.variant.empty()) row.verdict = row.verdict == "pass" ? "match" : "no-match";
  return row;
}

void validate(const ExperimentConfig& config) {
  if (config.trials == 0) throw ParseError("config: trials must be at least 1");
  if (config.model.p == 0) throw ParseError("config: p must be at least 1");
  if (config.observables.empty()) throw ParseError("config: no observables listed");
  if (config.model.kind == ModelKind::uncolored && !config.model.base) {
    throw ParseError("config: the uncolored model needs 'base'");
  }
  const auto supported = supported_observables(config.model.kind);
  for (const auto& obs : config.observables) {
    if (std::find(supported.begin(), supported.end(), obs) == supported.end()) {
      throw ParseError("config: observable '" + obs + "' is not available for the " +
                       to_string(config.model.kind) + " model");
    }
  }
  if (is_graph_model(config.model.kind)) {
    const int D = config.model.kind == ModelKind::uncolored ? config.model.base->dimension() : config.model.dimension;
    if (D < 1 || D > kMaxDimension) throw ParseError("config: D out of range");
    if (config.model.kind == ModelKind::quartic && D < 2) throw ParseError("config: the quartic model needs D >= 2");
    const bool digraph = std::any_of(config.observables.begin(), config.observables.end(), [](const std::string& o) {
      return o == "i_bubbles" || o.starts_with("cycles_") || o.starts_with("giant_");
    });
    if (digraph && (D < 2 || config.color < 1 || config.color > D)) {
      throw ParseError("config: 'color' must lie in 1..D (and D >= 2) for digraph observables");
    }
    const bool degree = std::find(config.observables.begin(), config.observables.end(), "degree") !=
                        config.observables.end();
    if (degree && D < 2) throw ParseError("config: the degree needs D >= 2");
  }
  if (config.pairs == 0) throw ParseError("config: pairs must be at least 1");
}

}  // namespace

ExperimentConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  ExperimentConfig config;
  for (auto line : detail::content_lines(text)) {
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("config: expected key=value, got '" + std::string(line) + "'");
    std::string key(line.substr(0, eq));
    std::string value(line.substr(eq + 1));
    key.erase(key.find_last_not_of(" \t") + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    if (key.empty()) throw ParseError("config: empty key");
    config.entries.emplace_back(key, value);

    if (key == "name") config.name = value;
    else if (key == "model") {
      try {
        config.model.kind = parse_model_kind(value);
      } catch (const InvalidArgumentError& e) {
        throw ParseError(std::string("config: ") + e.what());
      }
    } else if (key == "D") config.model.dimension = static_cast<int>(parse_unsigned(key, value));
    else if (key == "p") config.model.p = parse_unsigned(key, value);
    else if (key == "base") config.base_path = value;
    else if (key == "trials") config.trials = parse_unsigned(key, value);
    else if (key == "seed") config.seed = parse_unsigned(key, value);
    else if (key == "observables") config.observables = split_list(value);
    else if (key == "color") config.color = static_cast<Color>(parse_unsigned(key, value));
    else if (key == "pairs") config.pairs = parse_unsigned(key, value);
    else if (key == "threads") config.threads = parse_unsigned(key, value);
    else if (key == "samples") config.samples_dir = value;
    else if (key == "out") config.out = value;
    else if (key == "z") config.z = parse_double(key, value);
    else if (key == "proportion_sigma") config.proportion_sigma = parse_double(key, value);
    else if (key == "ks_alpha") config.ks_alpha = parse_double(key, value);
    else if (key == "slack_factor") config.slack_factor = parse_double(key, value);
    else if (key.starts_with("slack.")) config.slack[key.substr(6)] = parse_double(key, value);
    else if (key.starts_with("threshold.")) config.threshold[key.substr(10)] = parse_double(key, value);
    else if (key == "variance_ratio_low") config.variance_ratio_low = parse_double(key, value);
    else if (key == "variance_ratio_high") config.variance_ratio_high = parse_double(key, value);
    else if (key == "variance_bound_constant") config.variance_bound_constant = parse_double(key, value);
    else if (key == "dispersion_low") config.dispersion_low = parse_double(key, value);
    else if (key == "dispersion_high") config.dispersion_high = parse_double(key, value);
    else if (key == "giant_constant") config.giant_constant = parse_double(key, value);
    else if (key == "jitter") config.jitter = parse_bool(key, value);
    else throw ParseError("config: unknown key '" + key + "'");
  }

  if (config.model.kind == ModelKind::uncolored) {
    if (config.base_path.empty()) throw ParseError("config: the uncolored model needs 'base'");
    std::filesystem::path path(config.base_path);
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
    try {
      config.model.base = load_base_graph(path);
    } catch (const InvalidArgumentError& e) {
      throw ParseError(std::string("config: ") + e.what());
    }
    config.model.dimension = config.model.base->dimension();
  }
  validate(config);
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.parent_path());
}

std::string echo_config(const ExperimentConfig& config) {
  std::string out;
  for (const auto& [key, value] : config.entries) out += key + "=" + value + "\n";
  return out;
}

bool ExperimentReport::passed() const {
  std::map<std::string, bool> variant_matched;
  for (const auto& row : rows) {
    if (row.verdict == "fail") return false;
    if (row.verdict == "match") variant_matched[row.observable] = true;
    if (row.verdict == "no-match") variant_matched.try_emplace(row.observable, false);
  }
  return std::all_of(variant_matched.begin(), variant_matched.end(), [](const auto& kv) { return kv.second; });
}

const ReportRow* ExperimentReport::find(std::string_view test) const {
  for (const auto& row : rows) {
    if (row.test == test) return &row;
  }
  return nullptr;
}

std::size_t worker_count(const ExperimentConfig& config) {
  std::size_t n = config.threads;
  if (n == 0) n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CHROMAPLEX_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = std::min<std::size_t>(n, cap);
  }
  return std::max<std::size_t>(1, std::min(n, config.trials));
}

ExperimentReport run(const ExperimentConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport report;
  report.config = config;
  report.threads_used = worker_count(config);

  std::vector<TrialResult> results(config.trials);
  const TrialEvaluator evaluator(config);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= config.trials) return;
      try {
        results[k] = evaluator(k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = config.trials;
        return;
      }
    }
  };
  if (report.threads_used == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < report.threads_used; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t j = 0; j < config.observables.size(); ++j) {
    const auto& obs = config.observables[j];
    std::vector<double> xs;
    xs.reserve(config.trials);
    for (const auto& r : results) {
      if (!std::isnan(r.values[j])) xs.push_back(r.values[j]);
    }
    MomentAccumulator acc;
    for (double x : xs) acc.add(x);

    const auto predictions = predict(config.model, obs);
    if (predictions.empty()) {
      ReportRow row;
      row.test = obs;
      row.observable = obs;
      row.kind = "summary";
      row.n = xs.size();
      row.mean = acc.mean();
      row.variance = acc.variance();
      row.se = acc.standard_error();
      row.verdict = "info";
      report.rows.push_back(std::move(row));
    }
    for (const auto& pr : predictions) report.rows.push_back(evaluate(config, pr, xs, acc));
    report.samples[obs] = std::move(xs);
  }

  for (const auto& r : results) {
    if (!r.parity_ok) ++report.parity_violations;
  }
  ReportRow parity;
  parity.test = "parity";
  parity.observable = is_graph_model(config.model.kind) ? "jacket_faces" : "faces+vertices";
  parity.kind = "parity";
  parity.n = config.trials;
  parity.statistic = static_cast<double>(report.parity_violations);
  parity.tolerance = 0;
  parity.prediction_kind = "exact-finite-p";
  parity.verdict = report.parity_violations == 0 ? "pass" : "fail";
  parity.note = "violations counted pointwise";
  report.rows.push_back(std::move(parity));

  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_csv(const ExperimentReport& report) {
  std::ostringstream out;
  std::istringstream echo(echo_config(report.config));
  for (std::string line; std::getline(echo, line);) out << "# " << line << '\n';
  out << "test,observable,kind,n,mean,variance,se,prediction,prediction_kind,z,statistic,p_value,tolerance,verdict\n";
  for (const auto& r : report.rows) {
    out << r.test << ',' << r.observable << ',' << r.kind << ',' << r.n << ',' << format_number(r.mean) << ','
        << format_number(r.variance) << ',' << format_number(r.se) << ',' << format_optional(r.prediction) << ','
        << r.prediction_kind << ',' << format_optional(r.z) << ',' << format_optional(r.statistic) << ','
        << format_optional(r.p_value) << ',' << format_optional(r.tolerance) << ',' << r.verdict << '\n';
  }
  return out.str();
}

std::string report_summary(const ExperimentReport& report) {
  std::ostringstream out;
  const auto& c = report.config;
  out << "experiment " << c.name << ": model " << to_string(c.model.kind);
  if (c.model.kind != ModelKind::ribbon) out << ", D=" << c.model.dimension;
  out << ", p=" << c.model.p << ", trials=" << c.trials << ", seed=" << c.seed << '\n';
  out << "config:\n";
  std::istringstream echo(echo_config(c));
  for (std::string line; std::getline(echo, line);) out << "  " << line << '\n';
  for (const auto& r : report.rows) {
    out << "  [" << r.verdict << "] " << r.test << " (" << r.kind << "): ";
    if (r.kind == "parity") {
      out << format_optional(r.statistic) << " violations in " << r.n << " trials";
    } else {
      out << "mean " << format_number(r.mean) << " +- " << format_number(r.se);
      if (r.prediction) out << " vs " << format_number(*r.prediction);
      if (r.statistic) out << ", statistic " << format_number(*r.statistic);
      if (r.p_value) out << ", p " << format_number(*r.p_value);
      if (r.tolerance) out << ", tolerance " << format_number(*r.tolerance);
    }
    if (!r.note.empty()) out << " (" << r.note << ")";
    out << '\n';
  }
  out << (report.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

void write_sample_sidecars(const ExperimentReport& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [obs, xs] : report.samples) {
    std::ofstream out(dir / (obs + ".txt"));
    if (!out) throw Error("cannot write sample file in " + dir.string());
    for (double x : xs) out << format_number(x) << '\n';
  }
}

}  // namespace chromaplex
