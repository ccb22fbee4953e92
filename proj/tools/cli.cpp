#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#if __has_include("CLI11.hpp")
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif
#include "chromaplex/colored_graph.hpp"
#include "chromaplex/dual_complex.hpp"
#include "chromaplex/error.hpp"
#include "chromaplex/harness.hpp"
#include "chromaplex/models.hpp"
#include "chromaplex/oracle.hpp"
#include "chromaplex/predictions.hpp"
#include "chromaplex/ribbon.hpp"

namespace chromaplex::cli {

namespace {

struct ModelOptions {
  std::string model = "uniform";
  int dimension = 3;
  std::size_t p = 1;
  std::string base;
};

void add_model_options(CLI::App* cmd, ModelOptions& opts) {
  cmd->add_option("--model", opts.model, "uniform, quartic, uncolored or ribbon")->required();
  cmd->add_option("--D", opts.dimension, "dimension D (colors 0..D)");
  cmd->add_option("--p", opts.p, "size parameter p")->required();
  cmd->add_option("--base", opts.base, "base graph file (uncolored model)");
}

ModelSpec to_spec(const ModelOptions& opts) {
  ModelSpec spec;
  spec.kind = parse_model_kind(opts.model);
  spec.dimension = opts.dimension;
  spec.p = opts.p;
  if (spec.kind == ModelKind::uncolored) {
    if (opts.base.empty()) throw InvalidArgumentError("the uncolored model needs --base");
    spec.base = load_base_graph(opts.base);
    spec.dimension = spec.base->dimension();
  }
  if (spec.p == 0) throw InvalidSizeError("p must be positive");
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot write " + path);
  file << text;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k]);
  return s;
}

int cmd_sample(const ModelOptions& opts, std::uint64_t seed, const std::string& out_path, std::ostream& out) {
  const ModelSpec spec = to_spec(opts);
  Rng rng(seed);
  std::string text;
  switch (spec.kind) {
    case ModelKind::uniform: text = to_text(sample_uniform_model(spec.dimension, spec.p, rng)); break;
    case ModelKind::quartic: text = to_text(sample_quartic_model(spec.dimension, spec.p, rng).graph); break;
    case ModelKind::uncolored: text = to_text(sample_uncolored_model(*spec.base, spec.p, rng)); break;
    case ModelKind::ribbon: text = to_text(sample_ribbon_map(spec.p, rng)); break;
  }
  write_output(out_path, text, out);
  return 0;
}

int cmd_experiment(const std::string& config_path, const std::string& out_path, bool summary, std::ostream& out,
                   std::ostream& err) {
  const ExperimentConfig config = load_config(config_path);
  const ExperimentReport report = run(config);
  const std::string target = out_path.empty() ? config.out : out_path;
  write_output(target, report_csv(report), out);
  if (summary) out << report_summary(report);
  if (!config.samples_dir.empty()) write_sample_sidecars(report, config.samples_dir);
  err << "elapsed " << std::fixed << std::setprecision(2) << report.elapsed_seconds << " s on "
      << report.threads_used << " thread(s)\n";
  if (!report.passed()) {
    err << "experiment " << config.name << ": at least one verdict failed\n";
    return 1;
  }
  return 0;
}

int cmd_exact(const ModelOptions& opts, std::ostream& out) {
  const ModelSpec spec = to_spec(opts);
  out << prediction_table_csv(spec, prediction_table(spec));
  return 0;
}

int cmd_oracle(const ModelOptions& opts, bool distribution, std::ostream& out) {
  const auto kind = parse_model_kind(opts.model);
  if (kind == ModelKind::uniform) {
    const auto r = exhaustive_uniform_oracle(opts.dimension, opts.p);
    out << "cases = " << r.cases << '\n';
    out << "P(connected) = " << to_string(r.p_connected) << '\n';
    out << "E[components] = " << to_string(r.mean_components) << '\n';
    out << "E[faces] = " << to_string(r.mean_faces) << '\n';
    if (opts.dimension >= 2) out << "E[degree] = " << to_string(r.mean_degree) << '\n';
    out << "E[jacket_faces] = " << to_string(r.mean_jacket_faces) << '\n';
    if (distribution) {
      out << "connected,components,faces,degree,jacket_faces,count\n";
      for (const auto& [o, count] : r.distribution) {
        out << o.connected << ',' << o.components << ',' << o.faces << ',' << to_string(o.degree) << ','
            << o.jacket_faces << ',' << count << '\n';
      }
    }
    return 0;
  }
  if (kind == ModelKind::ribbon) {
    const auto r = exhaustive_ribbon_oracle(opts.p);
    out << "cases = " << r.cases << '\n';
    out << "P(connected) = " << to_string(r.p_connected) << '\n';
    out << "E[genus] = " << to_string(r.mean_genus) << '\n';
    out << "E[genus | connected] = " << to_string(r.mean_genus_connected) << '\n';
    out << "parity = " << (r.parity_holds ? "holds" : "violated") << '\n';
    if (distribution) {
      out << "faces,vertices,connected,genus,count\n";
      for (const auto& [o, count] : r.distribution) {
        out << o.faces << ',' << o.vertices << ',' << o.connected << ',' << o.genus << ',' << count << '\n';
      }
    }
    return 0;
  }
  throw UnsupportedError("exhaustive oracles exist for the uniform and ribbon models only");
}

int cmd_inspect(const std::string& path, bool adjacency, std::ostream& out) {
  const ColoredGraph g = parse_colored_graph(read_file(path));
  const auto census = bubble_census(g);
  const bool connected = is_connected(g);
  out << "omega = " << (g.dimension() >= 2 ? to_string(gurau_degree_via_faces(g)) : std::string("n/a"))
      << "; b = [" << join(census) << "]\n";
  out << "D = " << g.dimension() << ", p = " << g.half_order() << ", components = " << component_count(g) << '\n';
  if (g.dimension() >= 2 && connected) {
    out << "omega via jackets = " << to_string(gurau_degree_via_jackets(g)) << '\n';
  }
  out << "standard jacket faces = " << jacket_faces(g, JacketSpec::standard(g.dimension())) << '\n';
  const DualComplex cx = build_dual_complex(g);
  out << "dual complex: " << cx.point_count() << " points (by color " << join(point_color_census(cx)) << "), "
      << cx.edges().size() << " edges, " << cx.raw_edge_count() << " with multiplicity\n";
  if (adjacency) out << to_text(cx);
  return 0;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random colored graphs, ribbon maps and their observables"};
  app.require_subcommand(1);

  ModelOptions sample_opts;
  std::uint64_t seed = 1;
  std::string sample_out;
  auto* sample = app.add_subcommand("sample", "Print one sampled graph or map");
  add_model_options(sample, sample_opts);
  sample->add_option("--seed", seed, "random seed");
  sample->add_option("--out", sample_out, "output file (default stdout)");

  std::string config_path, report_out;
  bool summary = false;
  auto* experiment = app.add_subcommand("experiment", "Run a Monte Carlo experiment from a config file");
  experiment->add_option("--config", config_path, "key=value config file")->required();
  experiment->add_option("--out", report_out, "CSV report path (default: config 'out', else stdout)");
  experiment->add_flag("--summary", summary, "also print a text summary");

  ModelOptions exact_opts;
  auto* exact = app.add_subcommand("exact", "Print the prediction table as CSV");
  add_model_options(exact, exact_opts);

  ModelOptions oracle_opts;
  bool distribution = false;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive enumeration at small size");
  add_model_options(oracle, oracle_opts);
  oracle->add_flag("--distribution", distribution, "print the full joint distribution");

  std::string inspect_path;
  bool adjacency = false;
  auto* inspect = app.add_subcommand("inspect", "Bubble census, degree and dual complex of a graph file");
  inspect->add_option("file", inspect_path, "serialized colored graph")->required();
  inspect->add_flag("--adjacency", adjacency, "print the dual complex adjacency list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*sample) return cmd_sample(sample_opts, seed, sample_out, out);
    if (*experiment) return cmd_experiment(config_path, report_out, summary, out, err);
    if (*exact) return cmd_exact(exact_opts, out);
    if (*oracle) return cmd_oracle(oracle_opts, distribution, out);
    if (*inspect) return cmd_inspect(inspect_path, adjacency, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace chromaplex::cli
