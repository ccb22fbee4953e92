// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fails.
// Optional arguments select criteria by number, e.g. `acceptance 3 7`.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chromaplex/colored_graph.hpp"
#include "chromaplex/digraph.hpp"
#include "chromaplex/harness.hpp"
#include "chromaplex/models.hpp"
#include "chromaplex/oracle.hpp"
#include "chromaplex/permutation.hpp"
#include "chromaplex/predictions.hpp"
#include "chromaplex/ribbon.hpp"
#include "chromaplex/rng.hpp"
#include "chromaplex/stats.hpp"

namespace cx = chromaplex;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (ok ? "" : " [x]");
  }
};

std::string fmt(double x, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

cx::ExperimentReport run(const std::string& text) { return cx::run(cx::parse_config(text)); }

// Pulls one harness row into the outcome.
void check_row(Outcome& out, const cx::ExperimentReport& report, const std::string& test, const std::string& label) {
  const cx::ReportRow* row = report.find(test);
  if (row == nullptr) {
    out.require(false, label + ": no row " + test);
    return;
  }
  std::string what = label + " " + row->verdict;
  if (row->kind == "mean" || row->kind == "proportion") {
    what += " (mean " + fmt(row->mean) + " vs " + fmt(row->prediction.value_or(0));
    if (row->z) what += ", z " + fmt(*row->z, 3);
    what += ")";
  } else if (row->statistic) {
    what += " (stat " + fmt(*row->statistic, 4);
    if (row->p_value) what += ", p " + fmt(*row->p_value, 3);
    if (row->tolerance) what += ", tol " + fmt(*row->tolerance, 4);
    what += ")";
  }
  out.require(row->verdict == "pass" || row->verdict == "match", what);
}

// Sampler mean within `z` standard errors of an exact value.
void check_mean(Outcome& out, const cx::MomentAccumulator& acc, const cx::Rational& target, double se,
                const std::string& label, double z = 4.0) {
  const double t = cx::to_double(target);
  const double dev = std::abs(acc.mean() - t);
  out.require(dev <= z * se + 1e-12, label + " " + fmt(acc.mean()) + " vs " + cx::to_string(target) + " (" +
                                         fmt(se > 0 ? dev / se : 0, 3) + " SE)");
}

Outcome criterion1() {
  Outcome out;
  for (std::size_t p : {2UL, 3UL}) {
    const auto oracle = cx::exhaustive_uniform_oracle(2, p);
    if (p == 2) out.require(oracle.p_connected == cx::make_rational(3, 4), "oracle P(conn) = " + cx::to_string(oracle.p_connected));
    cx::Rng rng(1000 + p);
    cx::MomentAccumulator conn, comps, faces;
    const int n = 10000;
    for (int t = 0; t < n; ++t) {
      const auto g = cx::sample_uniform_model(2, p, rng);
      const auto k = cx::component_count(g);
      conn.add(k == 1 ? 1 : 0);
      comps.add(static_cast<double>(k));
      faces.add(static_cast<double>(cx::face_count(g)));
    }
    const double pc = cx::to_double(oracle.p_connected);
    const std::string tag = "p=" + std::to_string(p) + " ";
    check_mean(out, conn, oracle.p_connected, std::sqrt(pc * (1 - pc) / n), tag + "P(conn)");
    check_mean(out, comps, oracle.mean_components, comps.standard_error(), tag + "E[k]");
    check_mean(out, faces, oracle.mean_faces, faces.standard_error(), tag + "E[b2]");
  }
  return out;
}

Outcome criterion2() {
  Outcome out;
  const auto d3 = run("model=uniform\nD=3\np=100\ntrials=5000\nseed=201\nobservables=connected\n"
                      "proportion_sigma=3\nslack.connected=0\n");
  check_row(out, d3, "connected_probability", "D=3 p=100");
  // D=2: leading term plus an O(1/p^2) allowance of 5/p^2
  const auto d2 = run("model=uniform\nD=2\np=50\ntrials=5000\nseed=202\nobservables=connected\n"
                      "proportion_sigma=3\nslack.connected=0.002\n");
  check_row(out, d2, "connected_probability", "D=2 p=50");
  return out;
}

Outcome criterion3() {
  Outcome out;
  const auto r = run("model=uniform\nD=3\np=1000\ntrials=2000\nseed=301\nobservables=faces\nz=4\n"
                     "variance_ratio_low=0.5\nvariance_ratio_high=2\n");
  check_row(out, r, "faces_mean", "mean b2");
  check_row(out, r, "faces_variance_leading", "Var/6ln p");
  return out;
}

Outcome criterion4() {
  Outcome out;
  for (bool quartic : {false, true}) {
    cx::Rng rng(quartic ? 402 : 401);
    const int D = 3;
    const std::size_t p = 30;
    const cx::Rational unit = cx::make_rational(static_cast<std::int64_t>(cx::factorial(D - 1)), 2);
    int checked = 0, mismatch = 0, bad_value = 0, drawn = 0;
    while (checked < 1000) {
      ++drawn;
      const auto g = quartic ? cx::sample_quartic_model(D, p, rng).graph : cx::sample_uniform_model(D, p, rng);
      if (!cx::is_connected(g)) continue;
      ++checked;
      const auto by_faces = cx::gurau_degree_via_faces(g);
      const auto by_jackets = cx::gurau_degree_via_jackets(g);
      if (by_faces != by_jackets) ++mismatch;
      const cx::Rational q = by_jackets / unit;
      if (by_jackets < 0 || q.get_den() != 1) ++bad_value;
    }
    const std::string tag = quartic ? "quartic" : "uniform";
    out.require(mismatch == 0, tag + " " + std::to_string(checked) + "/" + std::to_string(drawn) +
                                   " connected, mismatches " + std::to_string(mismatch));
    out.require(bad_value == 0, tag + " non-multiples " + std::to_string(bad_value));
  }
  return out;
}

// Criteria 5 and 6 share one set of runs.
const cx::ExperimentReport& quartic_structure() {
  static const auto report =
      run("model=quartic\nD=3\np=2000\ntrials=500\nseed=501\n"
          "observables=i_bubbles,cycles_1,cycles_2,giant_covers\n"
          "z=4\nslack.i_bubbles=0\nslack.cycles_1=0\nslack.cycles_2=0\n"
          "giant_constant=10\nthreshold.giant_covers=0.99\ndispersion_low=0.8\ndispersion_high=1.2\n");
  return report;
}

Outcome criterion5() {
  Outcome out;
  const auto& r = quartic_structure();
  check_row(out, r, "i_bubbles_mean", "i-bubbles");
  check_row(out, r, "giant_covers_rate", "giant >= 4p - 10 sqrt(p ln p)");
  return out;
}

Outcome criterion6() {
  Outcome out;
  const auto& r = quartic_structure();
  check_row(out, r, "cycles_1_mean", "C1");
  check_row(out, r, "cycles_2_mean", "C2");
  check_row(out, r, "cycles_1_dispersion", "C1 dispersion");
  return out;
}

Outcome criterion7() {
  Outcome out;
  const auto r = run("model=quartic\nD=3\np=1000\ntrials=1000\nseed=701\nobservables=faces\nz=4\n"
                     "variance_bound_constant=40\n");
  check_row(out, r, "faces_mean", "mean b2");
  check_row(out, r, "faces_variance_bound", "Var <= 40 ln^3(2p)");
  return out;
}

Outcome criterion8() {
  Outcome out;
  const auto r = run("model=quartic\nD=3\np=2000\ntrials=50\npairs=1000\nseed=801\nobservables=distance_two\n"
                     "threshold.distance_two=0.9\n");
  check_row(out, r, "distance_two_rate", "fraction at distance 2");
  return out;
}

Outcome criterion9() {
  Outcome out;
  const auto r = run("model=ribbon\np=3000\ntrials=2000\nseed=901\nobservables=genus,genus_connected,connected\n"
                     "z=4\nproportion_sigma=3\nslack.connected=0\nks_alpha=0.01\n");
  check_row(out, r, "genus_mean", "mean genus");
  check_row(out, r, "genus_normal", "KS connected genus");
  check_row(out, r, "connected_probability", "P(conn)");
  check_row(out, r, "parity", "parity");
  return out;
}

Outcome criterion10() {
  Outcome out;
  for (const std::string model : {"uniform", "quartic"}) {
    const auto r = run("model=" + model + "\nD=3\np=5000\ntrials=2000\nseed=1001\nobservables=jacket_faces\nks_alpha=0.01\n");
    check_row(out, r, "jacket_faces_normal", model + " KS");
    out.require(r.parity_violations == 0, model + " parity violations " + std::to_string(r.parity_violations));
  }
  return out;
}

// φ-cycles made only of α-fixed points; they vanish entirely under trimming.
std::size_t erased_cycles(const cx::Permutation& alpha, const cx::Permutation& phi) {
  std::vector<bool> seen(phi.size(), false);
  std::size_t n = 0;
  for (std::size_t h = 0; h < phi.size(); ++h) {
    if (seen[h]) continue;
    bool all_fixed = true;
    for (std::size_t x = h; !seen[x]; x = phi[x]) {
      seen[x] = true;
      all_fixed = all_fixed && alpha[x] == x;
    }
    n += all_fixed ? 1 : 0;
  }
  return n;
}

Outcome criterion11() {
  Outcome out;
  const std::size_t p = 50;
  const int pairs = 10000;
  cx::Rng rng(1101);
  // each of the p quartic bubbles leaves its two half-edges unmatched with probability (D-2)/D, D = 3
  std::binomial_distribution<std::size_t> unmatched(p, 1.0 / 3);
  int violations = 0, corrected_violations = 0, empty = 0;
  for (int k = 0; k < pairs; ++k) {
    const std::size_t b = unmatched(rng);
    const auto alpha = cx::sample_involution_with_fixed_points(2 * p, 2 * b, rng);
    const auto phi = cx::sample_uniform_permutation(2 * p, rng);
    const std::size_t before = cx::cycle_count(phi) + cx::quotient_cycle_count(alpha, phi);
    const auto m = cx::ribbon_trim(alpha, phi);
    if (!m) {
      ++empty;
      ++violations;
      continue;
    }
    const std::size_t after = cx::ribbon_face_count(*m) + cx::ribbon_vertex_count(*m);
    if (after != before) ++violations;
    if (after + 2 * erased_cycles(alpha, phi) != before) ++corrected_violations;
  }
  out.require(violations == 0, "O(psi)+O(delta psi^-1) = O(phi)+O(alpha phi^-1) failed on " +
                                    std::to_string(violations) + "/" + std::to_string(pairs) + " pairs");
  out.detail << "; with 2 per phi-cycle inside Fix(alpha) added back: " << corrected_violations << " failures";
  if (empty > 0) out.detail << "; fully erased " << empty;
  return out;
}

Outcome criterion12() {
  Outcome out;
  const std::string path = std::string(CHROMAPLEX_DATA_DIR) + "/bases/quartic_d3.txt";
  const auto base = cx::load_base_graph(path);
  out.require(cx::to_text(base) == cx::to_text(cx::quartic_base(3)), "base file is the quartic graph");
  const auto c = cx::model_constants(base);
  const auto c1 = c.c_delta.count(1) ? c.c_delta.at(1) : cx::Rational(0);
  out.require(c1 == cx::make_rational(2, 3), "c1 = " + cx::to_string(c1));
  out.require(c.c_q == cx::make_rational(4, 3), "c_q = " + cx::to_string(c.c_q));
  out.require(c.theta0 == cx::make_rational(3, 2), "theta0 = " + cx::to_string(c.theta0));
  out.require(c.d0 == cx::make_rational(5, 3), "d0 = " + cx::to_string(c.d0));

  const auto r = run("model=uncolored\nbase=" + path + "\np=2000\ntrials=300\nseed=1201\nobservables=i_bubbles\n"
                     "z=4\nslack.i_bubbles=0\n");
  std::string matched;
  for (const std::string variant : {"k>=1", "k>=2"}) {
    const auto* row = r.find("i_bubbles_mean[" + variant + "]");
    if (row == nullptr) {
      out.require(false, "no row for " + variant);
      continue;
    }
    out.detail << "; " << variant << " " << row->verdict << " (mean " << fmt(row->mean) << " vs "
               << fmt(row->prediction.value_or(0)) << ", z " << fmt(row->z.value_or(0), 3) << ")";
    if (row->verdict == "match") matched += (matched.empty() ? "" : ",") + variant;
  }
  out.require(!matched.empty(), "matching variant: " + (matched.empty() ? std::string("none") : matched));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exhaustive oracle equality", criterion1},
      {"uniform connectivity", criterion2},
      {"uniform faces", criterion3},
      {"degree consistency", criterion4},
      {"quartic i-bubbles and giant", criterion5},
      {"Poisson cycle census", criterion6},
      {"quartic faces", criterion7},
      {"dual distance two", criterion8},
      {"ribbon maps", criterion9},
      {"jacket normal laws and parity", criterion10},
      {"ribbon trim identity", criterion11},
      {"uncolored model", criterion12},
  };
  std::set<std::size_t> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::strtoul(argv[i], nullptr, 10));

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (!selected.empty() && !selected.count(k + 1)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[k].second();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += out.pass ? 0 : 1;
    std::printf("%s criterion %2zu %-32s %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                out.detail.str().c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
