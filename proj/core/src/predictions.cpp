#include "chromaplex/predictions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "chromaplex/digraph.hpp"
#include "chromaplex/error.hpp"
#include "text_util.hpp"

namespace chromaplex {

namespace {

// Exact Σ_{j<=n} 1/j^s over the denominator lcm(1..n)^s.
//
// With B = ⌊√n⌋, every j <= n is either B-smooth or P·m for a single prime
// P > B and an arbitrary m <= n/P. So
//   Σ 1/j^s = Σ_{B-smooth j} 1/j^s + Σ_{P > B} H_s(⌊n/P⌋) / P^s.
// The smooth terms share a small common denominator, and the prime terms
// only need binary splitting over distinct primes, where nothing is wasted.
class HarmonicSum {
 public:
  HarmonicSum(std::size_t n, unsigned s) : n_(n), s_(s), composite_(n + 1, 0) {
    for (std::size_t i = 2; i * i <= n; ++i) {
      if (composite_[i]) continue;
      for (std::size_t k = i * i; k <= n; k += i) composite_[k] = 1;
    }
    for (std::size_t i = 2; i <= n; ++i) {
      if (!composite_[i]) primes_.push_back(static_cast<std::uint32_t>(i));
    }
    root_ = 1;
    while ((root_ + 1) * (root_ + 1) <= n) ++root_;
  }

  Rational sum() {
    // L = lcm of the B-smooth numbers up to n = lcm(1..n) without primes > B
    mpz_class lcm_smooth = 1;
    for (std::uint32_t q : primes_) {
      if (q > root_) break;
      std::size_t power = q;
      while (power <= n_ / q) power *= q;
      lcm_smooth *= static_cast<unsigned long>(power);
    }
    const mpz_class ls = raise(lcm_smooth);
    const mpz_class smooth = smooth_numerator(ls);

    // primes above B, ascending, grouped by k = ⌊n/P⌋ (descending)
    const auto first = std::upper_bound(primes_.begin(), primes_.end(), root_) - primes_.begin();
    const std::size_t kmax = first < static_cast<std::ptrdiff_t>(primes_.size()) ? n_ / primes_[first] : 0;
    // H_s(k) = h[k] / lcm(1..kmax)^s; kmax <= B, so that denominator divides ls
    mpz_class dk = 1;
    for (std::uint32_t q : primes_) {
      if (q > kmax) break;
      std::size_t power = q;
      while (power <= kmax / q) power *= q;
      dk *= static_cast<unsigned long>(power);
    }
    dk = raise(dk);
    std::vector<mpz_class> h(kmax + 1);
    for (std::size_t k = 1; k <= kmax; ++k) {
      mpz_class term = dk;
      for (unsigned e = 0; e < s_; ++e) mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), k);
      h[k] = h[k - 1] + term;
    }
    std::vector<Fraction> groups;
    for (std::size_t i = first; i < primes_.size();) {
      const std::size_t k = n_ / primes_[i];
      std::size_t j = i;
      while (j < primes_.size() && n_ / primes_[j] == k) ++j;
      Fraction f = reciprocal_primes(i, j);
      f.p *= h[k];
      groups.push_back(std::move(f));
      i = j;
    }
    Fraction big = groups.empty() ? Fraction{0, 1} : combine(groups, 0, groups.size());

    // smooth / ls + big.p / (dk · big.q)
    mpz_class num = smooth * big.q;
    mpz_class scale = ls;
    mpz_divexact(scale.get_mpz_t(), scale.get_mpz_t(), dk.get_mpz_t());
    num += big.p * scale;
    mpz_class den = ls * big.q;
    reduce(num, den);
    Rational r;
    r.get_num() = std::move(num);
    r.get_den() = std::move(den);
    return r;
  }

 private:
  struct Fraction {
    mpz_class p;
    mpz_class q;
  };

  mpz_class raise(const mpz_class& x) const {
    if (s_ == 1) return x;
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), s_);
    return r;
  }

  // Σ ls / j^s over B-smooth j.
  mpz_class smooth_numerator(const mpz_class& ls) const {
    std::vector<char> rough(n_ + 1, 0);
    for (std::uint32_t q : primes_) {
      if (q <= root_) continue;
      for (std::size_t k = q; k <= n_; k += q) rough[k] = 1;
    }
    mpz_class total = 0, term;
    for (std::size_t j = 1; j <= n_; ++j) {
      if (rough[j]) continue;
      term = ls;
      for (unsigned e = 0; e < s_; ++e) mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), j);
      total += term;
    }
    return total;
  }

  // Σ 1/P^s over primes_[a, b)
  Fraction reciprocal_primes(std::size_t a, std::size_t b) const {
    if (b - a == 1) {
      mpz_class q = static_cast<unsigned long>(primes_[a]);
      return {1, raise(q)};
    }
    const std::size_t m = (a + b) / 2;
    Fraction l = reciprocal_primes(a, m);
    Fraction r = reciprocal_primes(m, b);
    l.p *= r.q;
    r.p *= l.q;
    l.p += r.p;
    l.q *= r.q;
    return l;
  }

  static Fraction combine(std::vector<Fraction>& fs, std::size_t a, std::size_t b) {
    if (b - a == 1) return std::move(fs[a]);
    const std::size_t m = (a + b) / 2;
    Fraction l = combine(fs, a, m);
    Fraction r = combine(fs, m, b);
    l.p *= r.q;
    r.p *= l.q;
    l.p += r.p;
    l.q *= r.q;
    return l;
  }

  // Divides out gcd(num, den) without a full gcd. For a prime q with largest
  // power Q <= n, only the terms j = mQ survive modulo q, so q | num exactly
  // when q divides the numerator of Σ_{m <= n/Q} 1/m^s; n/Q never exceeds √n.
  void reduce(mpz_class& num, mpz_class& den) const {
    std::vector<mpz_class> partial_num(root_ + 1);
    Rational acc = 0;
    for (std::size_t m = 1; m <= root_; ++m) {
      mpz_class ms = 1;
      for (unsigned k = 0; k < s_; ++k) ms *= static_cast<unsigned long>(m);
      acc += Rational(1, ms);
      partial_num[m] = acc.get_num();
    }
    for (std::uint32_t q : primes_) {
      std::size_t power = q;
      while (power <= n_ / q) power *= q;
      if (!mpz_divisible_ui_p(partial_num[n_ / power].get_mpz_t(), q)) continue;
      while (mpz_divisible_ui_p(num.get_mpz_t(), q) && mpz_divisible_ui_p(den.get_mpz_t(), q)) {
        mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), q);
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), q);
      }
    }
  }

  std::size_t n_;
  unsigned s_;
  std::vector<char> composite_;
  std::vector<std::uint32_t> primes_;
  std::size_t root_ = 1;
};

double ipow(double base, int e) { return std::pow(base, static_cast<double>(e)); }

Rational rational(std::size_t n) { return Rational(static_cast<unsigned long>(n)); }

Prediction exact_mean(std::string name, std::string observable, Rational value, std::string anchor) {
  Prediction pr;
  pr.name = std::move(name);
  pr.observable = std::move(observable);
  pr.statistic = Statistic::mean;
  pr.value = to_double(value);
  pr.exact = std::move(value);
  pr.kind = PredictionKind::exact;
  pr.anchor = std::move(anchor);
  return pr;
}

Prediction leading(std::string name, std::string observable, Statistic statistic, double value, double error,
                   std::string anchor) {
  Prediction pr;
  pr.name = std::move(name);
  pr.observable = std::move(observable);
  pr.statistic = statistic;
  pr.value = value;
  pr.kind = PredictionKind::leading;
  pr.error_order = error;
  pr.anchor = std::move(anchor);
  return pr;
}

Prediction normality(std::string name, std::string observable, std::string anchor) {
  Prediction pr = leading(std::move(name), std::move(observable), Statistic::normality, 0, 0, std::move(anchor));
  return pr;
}

// Remainder size used where only o(1) is known.
double unspecified_error(std::size_t p) { return 1.0 / std::sqrt(static_cast<double>(p)); }

const std::vector<std::string>& graph_observables() {
  static const std::vector<std::string> names{
      "connected",  "components", "faces",    "bubbles_D",    "jacket_faces", "degree",       "i_bubbles",
      "cycles_1",   "cycles_2",   "cycles_3", "giant_covers", "giant_fraction", "distance_two"};
  return names;
}

const std::vector<std::string>& ribbon_observables() {
  static const std::vector<std::string> names{"connected", "components",      "faces",
                                              "vertices",  "genus",           "genus_connected"};
  return names;
}

void check_supported(ModelKind kind, std::string_view observable) {
  const auto names = supported_observables(kind);
  if (std::find(names.begin(), names.end(), observable) == names.end()) {
    throw UnsupportedError("observable '" + std::string(observable) + "' is not available for the " +
                           to_string(kind) + " model");
  }
}

std::vector<Prediction> predict_uniform(int D, std::size_t p, std::string_view obs) {
  std::vector<Prediction> out;
  const double pd = static_cast<double>(p);
  const Rational pairs = make_rational(D * (D + 1), 2);
  if (obs == "connected" && D >= 2) {
    out.push_back(leading("connected_probability", "connected", Statistic::proportion, 1 - ipow(pd, -(D - 1)),
                          ipow(pd, -2 * (D - 1)), "uniform-connectivity"));
  } else if (obs == "components" && D >= 2) {
    out.push_back(leading("components_mean", "components", Statistic::mean, 1, ipow(pd, -(D - 1)),
                          "uniform-components"));
  } else if (obs == "bubbles_D" && D >= 3) {
    out.push_back(leading("bubbles_D_mean", "bubbles_D", Statistic::mean, D + 1, ipow(pd, -(D - 2)),
                          "uniform-D-bubbles"));
  } else if (obs == "faces") {
    out.push_back(exact_mean("faces_mean", "faces", pairs * harmonic(p), "uniform-face-mean"));
    Prediction var = exact_mean("faces_variance", "faces", pairs * harmonic_var(p), "uniform-face-variance");
    var.statistic = Statistic::variance;
    out.push_back(std::move(var));
    out.push_back(leading("faces_variance_leading", "faces", Statistic::variance_ratio,
                          to_double(pairs) * std::log(pd), 0, "uniform-face-variance"));
  } else if (obs == "jacket_faces") {
    out.push_back(exact_mean("jacket_faces_mean", "jacket_faces", rational(static_cast<std::size_t>(D) + 1) * harmonic(p),
                             "uniform-jacket-mean"));
    if (D >= 2) out.push_back(normality("jacket_faces_normal", "jacket_faces", "uniform-jacket-normal"));
  } else if (obs == "degree" && D >= 2) {
    out.push_back(exact_mean("degree_mean", "degree", degree_from_faces(D, p, pairs * harmonic(p)),
                             "degree-from-faces"));
  }
  return out;
}

std::vector<Prediction> cycle_predictions(const ModelConstants& mc, std::size_t p, std::string_view obs,
                                          const std::string& prefix) {
  std::vector<Prediction> out;
  const std::size_t k = static_cast<std::size_t>(obs.back() - '0');
  const double lambda = mc.lambda(k);
  out.push_back(leading("cycles_" + std::to_string(k) + "_mean", std::string(obs), Statistic::mean, lambda,
                        unspecified_error(p), prefix + "-cycle-rate"));
  out.push_back(leading("cycles_" + std::to_string(k) + "_dispersion", std::string(obs), Statistic::dispersion,
                        lambda, 0, prefix + "-cycle-poisson"));
  return out;
}

std::vector<Prediction> predict_quartic(int D, std::size_t p, std::string_view obs) {
  std::vector<Prediction> out;
  const double pd = static_cast<double>(p);
  const Rational faces = Rational((D - 1) * (D - 1)) * rational(p) + Rational(D) * harmonic(2 * p);
  const double ratio_log = std::log(static_cast<double>(D) / (D - 1));
  if (obs == "connected") {
    out.push_back(leading("connected_probability", "connected", Statistic::proportion, 1 - 1 / (2 * pd - 1),
                          1 / pd, "quartic-connectivity"));
  } else if (obs == "components") {
    out.push_back(leading("components_mean", "components", Statistic::mean, 1, 1 / pd, "quartic-components"));
  } else if (obs == "faces") {
    out.push_back(exact_mean("faces_mean", "faces", faces, "quartic-face-mean"));
    out.push_back(leading("faces_variance_bound", "faces", Statistic::variance_bound,
                          std::pow(std::log(2 * pd), 3), 0, "quartic-face-variance"));
  } else if (obs == "bubbles_D") {
    if (D == 2) {
      out.push_back(exact_mean("bubbles_D_mean", "bubbles_D", rational(p) + 2 * harmonic(2 * p), "quartic-D2-bubbles"));
    } else {
      out.push_back(leading("bubbles_D_mean", "bubbles_D", Statistic::mean, pd + D * (ratio_log + 1),
                            unspecified_error(p), "quartic-D-bubbles"));
    }
  } else if (obs == "i_bubbles" && D >= 3) {
    out.push_back(leading("i_bubbles_mean", "i_bubbles", Statistic::mean, 1 + ratio_log, unspecified_error(p),
                          "quartic-i-bubbles"));
  } else if (obs.starts_with("cycles_") && D >= 3) {
    return cycle_predictions(quartic_constants(D), p, obs, "quartic");
  } else if (obs == "giant_covers" && D >= 3) {
    out.push_back(leading("giant_covers_rate", "giant_covers", Statistic::threshold, 0.99, 0, "quartic-giant"));
  } else if (obs == "distance_two" && D >= 3) {
    out.push_back(leading("distance_two_rate", "distance_two", Statistic::threshold, 0.9, 0, "quartic-distance"));
  } else if (obs == "jacket_faces") {
    const Rational mean =
        2 * harmonic(2 * p) + Rational(D - 1) * make_rational(2 * (D - 1), D) * rational(p);
    out.push_back(exact_mean("jacket_faces_mean", "jacket_faces", mean, "quartic-jacket-mean"));
    out.push_back(normality("jacket_faces_normal", "jacket_faces", "quartic-jacket-normal"));
  } else if (obs == "degree") {
    out.push_back(exact_mean("degree_mean", "degree", degree_from_faces(D, 2 * p, faces), "degree-from-faces"));
  }
  return out;
}

std::vector<Prediction> predict_uncolored(const BaseGraph& base, std::size_t p, std::string_view obs) {
  std::vector<Prediction> out;
  const int D = base.dimension();
  const double pd = static_cast<double>(p);
  const double t = static_cast<double>(base.half_order());
  if (obs == "connected") {
    const double log_binom = std::lgamma(t * pd + 1) - std::lgamma(t + 1) - std::lgamma(t * pd - t + 1);
    const double value = p == 1 ? 1.0 : 1 - pd * std::exp(-log_binom);
    out.push_back(leading("connected_probability", "connected", Statistic::proportion, value,
                          std::pow(pd, -2 * (t - 1)), "uncolored-connectivity"));
  } else if (obs == "components") {
    out.push_back(leading("components_mean", "components", Statistic::mean, 1, std::pow(pd, -(t - 1)),
                          "uncolored-components"));
  } else if (D >= 3) {
    const auto mc = model_constants(base);
    if (!mc.giant_regime() || mc.ratio >= 1) return out;
    if (obs == "i_bubbles") {
      Prediction from_one = leading("i_bubbles_mean", "i_bubbles", Statistic::mean, 1 + mc.lambda_sum_from_one(),
                                    unspecified_error(p), "uncolored-i-bubbles");
      from_one.variant = "k>=1";
      Prediction from_two = from_one;
      from_two.value = 1 + mc.c_g();
      from_two.variant = "k>=2";
      out.push_back(std::move(from_one));
      out.push_back(std::move(from_two));
    } else if (obs.starts_with("cycles_")) {
      return cycle_predictions(mc, p, obs, "uncolored");
    } else if (obs == "giant_covers") {
      out.push_back(leading("giant_covers_rate", "giant_covers", Statistic::threshold, 0.99, 0, "uncolored-giant"));
    }
  }
  return out;
}

std::vector<Prediction> predict_ribbon(std::size_t p, std::string_view obs) {
  std::vector<Prediction> out;
  const double pd = static_cast<double>(p);
  if (obs == "connected") {
    out.push_back(leading("connected_probability", "connected", Statistic::proportion, 1 - 1 / (2 * pd - 1), 1 / pd,
                          "ribbon-connectivity"));
  } else if (obs == "genus") {
    out.push_back(exact_mean("genus_mean", "genus", 1 + make_rational(static_cast<std::int64_t>(p), 2) - harmonic(2 * p),
                             "ribbon-genus-mean"));
  } else if (obs == "genus_connected") {
    out.push_back(normality("genus_normal", "genus_connected", "ribbon-genus-normal"));
  }
  return out;
}

}  // namespace

Rational harmonic_power(std::size_t n, unsigned s) {
  if (n == 0) throw InvalidSizeError("harmonic sums need n >= 1");
  if (s == 0) return rational(n);
  return HarmonicSum(n, s).sum();
}

Rational harmonic(std::size_t n) { return harmonic_power(n, 1); }

Rational harmonic_var(std::size_t n) {
  Rational r = harmonic(n) - harmonic_power(n, 2);
  r.canonicalize();
  return r;
}

double harmonic_double(std::size_t n) {
  if (n == 0) throw InvalidSizeError("harmonic sums need n >= 1");
  double sum = 0;
  for (std::size_t j = n; j >= 1; --j) sum += 1.0 / static_cast<double>(j);
  return sum;
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::uniform: return "uniform";
    case ModelKind::quartic: return "quartic";
    case ModelKind::uncolored: return "uncolored";
    case ModelKind::ribbon: return "ribbon";
  }
  return "?";
}

ModelKind parse_model_kind(std::string_view name) {
  for (auto kind : {ModelKind::uniform, ModelKind::quartic, ModelKind::uncolored, ModelKind::ribbon}) {
    if (to_string(kind) == name) return kind;
  }
  throw InvalidArgumentError("unknown model '" + std::string(name) + "' (expected uniform, quartic, uncolored, ribbon)");
}

std::string to_string(PredictionKind kind) {
  return kind == PredictionKind::exact ? "exact-finite-p" : "leading-asymptotic";
}

std::string to_string(Statistic s) {
  switch (s) {
    case Statistic::mean: return "mean";
    case Statistic::proportion: return "proportion";
    case Statistic::variance: return "variance";
    case Statistic::variance_ratio: return "variance_ratio";
    case Statistic::variance_bound: return "variance_bound";
    case Statistic::threshold: return "threshold";
    case Statistic::normality: return "normality";
    case Statistic::dispersion: return "dispersion";
  }
  return "?";
}

std::vector<std::string> supported_observables(ModelKind kind) {
  return kind == ModelKind::ribbon ? ribbon_observables() : graph_observables();
}

std::vector<Prediction> predict(const ModelSpec& spec, std::string_view observable) {
  check_supported(spec.kind, observable);
  if (spec.p == 0) throw InvalidSizeError("p must be positive");
  switch (spec.kind) {
    case ModelKind::uniform:
      return predict_uniform(spec.dimension, spec.p, observable);
    case ModelKind::quartic:
      if (spec.dimension < 2) throw UnsupportedError("the quartic model requires D >= 2");
      return predict_quartic(spec.dimension, spec.p, observable);
    case ModelKind::uncolored:
      if (!spec.base) throw InvalidArgumentError("the uncolored model needs a base graph");
      return predict_uncolored(*spec.base, spec.p, observable);
    case ModelKind::ribbon:
      return predict_ribbon(spec.p, observable);
  }
  return {};
}

std::vector<Prediction> prediction_table(const ModelSpec& spec) {
  std::vector<Prediction> rows;
  for (const auto& obs : supported_observables(spec.kind)) {
    auto part = predict(spec, obs);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

std::string prediction_table_csv(const ModelSpec& spec, const std::vector<Prediction>& rows) {
  std::ostringstream out;
  out << "name,model,D,p,value,kind,anchor\n";
  const int D = spec.kind == ModelKind::uncolored && spec.base ? spec.base->dimension() : spec.dimension;
  for (const auto& row : rows) {
    std::string name = row.name;
    if (!row.variant.empty()) name += "[" + row.variant + "]";
    out << name << ',' << to_string(spec.kind) << ',';
    if (spec.kind != ModelKind::ribbon) out << D;
    out << ',' << spec.p << ',';
    if (row.statistic != Statistic::normality) out << detail::format_double(row.value);
    out << ',' << to_string(row.kind) << ',' << row.anchor << '\n';
  }
  return out.str();
}

Rational degree_from_faces(int dimension, std::size_t p, const Rational& faces) {
  if (dimension < 2) throw UnsupportedError("Gurau degree requires D >= 2");
  const Rational prefactor = make_rational(static_cast<std::int64_t>(factorial(static_cast<unsigned>(dimension - 1))), 2);
  const Rational bracket = make_rational(dimension * (dimension - 1), 2) * rational(p) + dimension - faces;
  Rational r = prefactor * bracket;
  r.canonicalize();
  return r;
}

}  // namespace chromaplex
