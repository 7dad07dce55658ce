#ifndef ROOTBOUND_HARNESS_HPP
#define ROOTBOUND_HARNESS_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "rootbound/companion.hpp"
#include "rootbound/inequalities.hpp"
#include "rootbound/zero_bounds.hpp"

namespace rootbound {

enum class Ensemble { ginibre, hermitian, nilpotent, psd, commuting_pair, polynomial };

inline const char* to_string(Ensemble e) {
  switch (e) {
    case Ensemble::ginibre: return "ginibre";
    case Ensemble::hermitian: return "hermitian";
    case Ensemble::nilpotent: return "nilpotent";
    case Ensemble::psd: return "psd";
    case Ensemble::commuting_pair: return "commuting_pair";
    case Ensemble::polynomial: return "polynomial";
  }
  return "?";
}

inline Ensemble ensemble_from_string(std::string_view s) {
  for (Ensemble e : {Ensemble::ginibre, Ensemble::hermitian, Ensemble::nilpotent, Ensemble::psd, Ensemble::commuting_pair,
                     Ensemble::polynomial}) {
    if (s == to_string(e)) return e;
  }
  throw Error(ErrorKind::InvalidInput, "unknown ensemble '" + std::string(s) + "'");
}

/// Trials use orders dim, dim+1, ..., max_dim in rotation (max_dim = 0 means dim only).
struct GeneratorConfig {
  std::uint64_t seed = 42;
  std::size_t dim = 4;
  std::size_t max_dim = 0;
  std::size_t trials = 100;
  Ensemble ensemble = Ensemble::ginibre;
  double coeff_modulus_max = 5.0;
  unsigned threads = 1;

  void validate() const {
    if (trials < 1) throw Error(ErrorKind::InvalidInput, "trials must be >= 1");
    if (dim < 1) throw Error(ErrorKind::InvalidInput, "dim must be >= 1");
    if (max_dim != 0 && max_dim < dim) throw Error(ErrorKind::InvalidInput, "max_dim must be >= dim");
    if (!(coeff_modulus_max > 0.0)) throw Error(ErrorKind::InvalidInput, "coeff_modulus_max must be > 0");
  }

  std::size_t dim_for(std::size_t trial) const {
    const std::size_t top = std::max(dim, max_dim);
    return dim + trial % (top - dim + 1);
  }
};

/// ROOTBOUND_TRIALS overrides a default trial count when set to a positive integer.
inline std::size_t default_trials(std::size_t fallback) {
  if (const char* env = std::getenv("ROOTBOUND_TRIALS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Per-trial seed; trial -1 is reserved for fixed instances.
inline std::uint64_t trial_seed(std::uint64_t master, std::int64_t trial) {
  return splitmix64(splitmix64(master) ^ static_cast<std::uint64_t>(trial));
}

// ---- generators -----------------------------------------------------------

using Rng = std::mt19937_64;

/// i.i.d. standard complex normal entries (E|z|^2 = 1).
inline ComplexMatrix ginibre(std::size_t n, Rng& rng) {
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline ComplexVector random_unit_vector(std::size_t n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexVector x(n);
  double norm = 0.0;
  do {
    for (auto& z : x) z = Complex(g(rng), g(rng));
    norm = vector_norm(x);
  } while (norm == 0.0);
  for (auto& z : x) z /= norm;
  return x;
}

/// Modified Gram-Schmidt on the columns of a Ginibre matrix.
inline ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  ComplexMatrix q = ginibre(n, rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex dot{};
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * q(i, j);
      for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

/// Even seeds give U [[0, M], [0, 0]] U* (so A^2 = 0), odd seeds a strictly upper triangular matrix.
inline ComplexMatrix random_nilpotent(std::size_t n, Rng& rng, bool index_two) {
  ComplexMatrix m = ginibre(n, rng);
  if (index_two) {
    const std::size_t k = std::max<std::size_t>(1, n / 2);
    ComplexMatrix block(n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = k; j < n; ++j) block(i, j) = m(i, j);
    const ComplexMatrix u = random_unitary(n, rng);
    return u * block * adjoint(u);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = Complex{};
  return m;
}

/// c0 I + c1 |A| + c2 |A|^2 + c3 |A|^3 with real c_k in [-1, 1]: Hermitian and commuting with |A|.
inline ComplexMatrix commuting_partner(const ComplexMatrix& a, Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const ComplexMatrix abs_a = abs_operator(a);
  ComplexMatrix out = u(rng) * ComplexMatrix::identity(a.size());
  ComplexMatrix power = ComplexMatrix::identity(a.size());
  for (int k = 1; k <= 3; ++k) {
    power = power * abs_a;
    out = out + u(rng) * power;
  }
  return out;
}

inline ComplexMatrix random_matrix(Ensemble e, std::size_t n, Rng& rng, std::uint64_t seed) {
  switch (e) {
    case Ensemble::hermitian: {
      const ComplexMatrix g = ginibre(n, rng);
      return 0.5 * (g + adjoint(g));
    }
    case Ensemble::nilpotent:
      return random_nilpotent(n, rng, seed % 2 == 0);
    case Ensemble::psd: {
      const ComplexMatrix g = ginibre(n, rng);
      return g * adjoint(g);
    }
    default:
      return ginibre(n, rng);
  }
}

/// Monic, degree n, coefficient moduli uniform in [0, max_modulus], phases uniform.
inline MonicPolynomial random_polynomial(std::size_t n, double max_modulus, Rng& rng) {
  std::uniform_real_distribution<double> mod(0.0, max_modulus), phase(0.0, 2.0 * std::numbers::pi);
  std::vector<Complex> a(std::max<std::size_t>(n, 2));
  for (auto& z : a) z = std::polar(mod(rng), phase(rng));
  return MonicPolynomial(std::move(a));
}

/// The matrices a single inequality trial works on.
struct MatrixInstance {
  ComplexMatrix a, b;  // b commutes with |a| in the |A|B = B*|A| sense
  ComplexMatrix y, c;  // second independent matrix and its partner
};

inline MatrixInstance generate_matrices(const GeneratorConfig& cfg, std::int64_t trial) {
  const std::uint64_t seed = trial_seed(cfg.seed, trial);
  // each ensemble draws from its own stream
  Rng rng(seed ^ splitmix64(static_cast<std::uint64_t>(cfg.ensemble) + 1));
  const std::size_t n = cfg.dim_for(static_cast<std::size_t>(std::max<std::int64_t>(trial, 0)));
  MatrixInstance inst;
  inst.a = random_matrix(cfg.ensemble, n, rng, seed);
  inst.b = commuting_partner(inst.a, rng);
  inst.y = random_matrix(cfg.ensemble, n, rng, seed >> 1);
  inst.c = commuting_partner(inst.y, rng);
  return inst;
}

inline MonicPolynomial generate_polynomial(const GeneratorConfig& cfg, std::int64_t trial) {
  Rng rng(trial_seed(cfg.seed, trial));
  return random_polynomial(cfg.dim_for(static_cast<std::size_t>(std::max<std::int64_t>(trial, 0))), cfg.coeff_modulus_max,
                           rng);
}

/// FNV-1a over the raw bytes of the entries, as 16 hex digits.
inline std::string digest(const ComplexMatrix& m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const Complex& z : m.entries()) {
    const double parts[2] = {z.real(), z.imag()};
    const auto* bytes = reinterpret_cast<const unsigned char*>(parts);
    for (std::size_t k = 0; k < sizeof parts; ++k) h = (h ^ bytes[k]) * 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---- reports --------------------------------------------------------------

struct Record {
  std::string suite;
  std::int64_t trial = 0;
  std::uint64_t seed = 0;
  std::string name;
  double lhs = 0.0, rhs = 0.0, slack = 0.0;
  bool holds = true;
  std::string digest;

  bool operator==(const Record&) const = default;
};

struct TightnessStats {
  std::size_t count = 0;
  double mean_slack = 0.0, min_slack = 0.0, max_slack = 0.0;
  double mean_ratio = 0.0;  // rhs / lhs over records with lhs > 0

  bool operator==(const TightnessStats&) const = default;
};

struct SuiteReport {
  std::string suite;
  std::size_t trials_run = 0;
  std::vector<Record> records;
  std::vector<Record> violations;
  std::map<std::string, TightnessStats> tightness;
  std::map<std::string, double> probes;  // diagnostics that are not pass/fail
  double wall_time = 0.0;

  bool ok() const { return violations.empty(); }
  bool operator==(const SuiteReport&) const = default;
};

namespace detail {

inline Record make_record(const std::string& suite, std::int64_t trial, std::uint64_t seed, std::string name,
                          const BoundComparison& b, const std::string& dig) {
  return {suite, trial, seed, std::move(name), b.lhs, b.rhs, b.slack, b.holds, dig};
}

inline void summarize(SuiteReport& report) {
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const Record& x, const Record& y) { return x.trial < y.trial; });
  std::map<std::string, std::size_t> ratio_count;
  for (const Record& r : report.records) {
    if (!r.holds) report.violations.push_back(r);
    TightnessStats& t = report.tightness[r.name];
    if (t.count == 0) t.min_slack = t.max_slack = r.slack;
    ++t.count;
    t.mean_slack += r.slack;
    t.min_slack = std::min(t.min_slack, r.slack);
    t.max_slack = std::max(t.max_slack, r.slack);
    if (r.lhs > 0.0) {
      t.mean_ratio += r.rhs / r.lhs;
      ++ratio_count[r.name];
    }
  }
  for (auto& [name, t] : report.tightness) {
    t.mean_slack /= static_cast<double>(t.count);
    const std::size_t rc = ratio_count[name];
    t.mean_ratio = rc ? t.mean_ratio / static_cast<double>(rc) : 0.0;
  }
}

/// Runs fn(trial) for 0..trials-1 over cfg.threads workers; results keep trial order.
template <class Fn>
std::vector<std::vector<Record>> run_trials(const GeneratorConfig& cfg, Fn fn) {
  std::vector<std::vector<Record>> out(cfg.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < cfg.trials;) out[t] = fn(static_cast<std::int64_t>(t));
  };
  const unsigned n = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(cfg.trials)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

inline double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

// ---- inequality suite -----------------------------------------------------

inline const std::vector<double>& power_exponents() {
  static const std::vector<double> ps{1.0, 1.5, 2.0, 3.0};
  return ps;
}

inline std::string power_name(const char* stem, double p) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s-%g", stem, p);
  return buf;
}

/// Every single-trial comparison for one matrix instance.
inline std::vector<Record> inequality_trial(const MatrixInstance& inst, const std::string& suite, std::int64_t trial,
                                            std::uint64_t seed) {
  std::vector<Record> out;
  const std::string dig = digest(inst.a);
  auto add = [&](std::string name, const BoundComparison& b) {
    out.push_back(detail::make_record(suite, trial, seed, std::move(name), b, dig));
  };
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      // a thrown precondition is reported as a failed record rather than aborting the suite
      add(name + ":" + to_string(e.kind()), BoundComparison::make(1.0, 0.0, 0.0));
    }
  };
  const ComplexMatrix& a = inst.a;
  Rng rng(splitmix64(seed ^ 0x5eedULL));
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  guarded("norm-sandwich", [&] {
    const double w = numerical_radius(a), norm = operator_norm(a);
    add("norm-sandwich-lower", BoundComparison::make(0.5 * norm, w));
    add("norm-sandwich-upper", BoundComparison::make(w, norm));
    add("classical-square", BoundComparison::make(w * w, classical_square_bound(a)));
  });
  guarded("main-refined", [&] {
    const auto refined = main_refined_bound(a);
    add("main-refined", refined);
    add("main-refined-chain", refinement_chain(refined, a));
  });
  guarded("vector-product", [&] {
    const AlphaExponent alpha(unit(rng)), beta(unit(rng));
    std::vector<ComplexVector> xs;
    for (int k = 0; k < 10; ++k) xs.push_back(random_unit_vector(a.size(), rng));
    for (const auto& b : vector_product_bounds(a, inst.y, alpha, beta, xs)) add("vector-product", b);
  });
  guarded("mu-bound", [&] {
    const MuParameter mu(2.0 * unit(rng));
    const auto sampled = mu_bound(a, mu);
    add("mu-bound", sampled);
    const auto best = mu_bound_min(a);
    add("mu-bound-min", best.bound);
    add("mu-bound-min-below-sampled", BoundComparison::make(best.bound.rhs, sampled.rhs));
  });
  guarded("sum-product", [&] {
    const std::vector<std::pair<ComplexMatrix, ComplexMatrix>> pairs{{a, inst.b}, {inst.y, inst.c}};
    add("sum-product", sum_product_bound(pairs, 2.0, AlphaExponent(unit(rng))));
  });
  guarded("ab-commute", [&] { add("ab-commute", ab_commute_bound(a, inst.b)); });
  guarded("aluthge-like", [&] {
    const auto b = aluthge_like_bound(a);
    add("aluthge-like", b);
    add("aluthge-like-chain", norm_power_chain(b, a, 1.0));
  });
  for (double p : power_exponents()) {
    guarded(power_name("power-p", p), [&] {
      const auto b = power_p_bound(a, p);
      add(power_name("power-p", p), b);
      add(power_name("power-p-chain", p), norm_power_chain(b, a, p));
    });
  }
  guarded("sum", [&] {
    const std::vector<ComplexMatrix> terms{a, inst.y};
    add("sum", sum_bound(terms, 2.0, AlphaExponent(unit(rng))));
  });
  guarded("a17", [&] { add("a17", a17_bound(a)); });
  guarded("spectral-radius", [&] {
    add("spectral-radius-1", spec1_radius_bound(a));
    add("spectral-radius-2", spec2_radius_bound(a));
  });
  guarded("equality-condition", [&] {
    const auto eq = equality_condition_check(a);
    if (eq.premise_holds) {
      const double scale = std::sqrt(eq.norm_fourth);
      add("equality-conclusion", BoundComparison::make(std::abs(eq.w_squared - eq.quarter_gram_norm), 0.0, 1e-8 * scale));
    }
  });
  return out;
}

/// All matrix inequalities over cfg.trials generated instances. Trial -1 is the zero
/// matrix, the one instance found to satisfy the equality premise.
inline SuiteReport run_inequality_suite(const GeneratorConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::string suite = std::string("ineq-") + to_string(cfg.ensemble);
  SuiteReport report;
  report.suite = suite;
  report.trials_run = cfg.trials;

  const std::size_t n0 = cfg.dim;
  const MatrixInstance zero{ComplexMatrix(n0), ComplexMatrix::identity(n0), ComplexMatrix(n0), ComplexMatrix::identity(n0)};
  report.records = inequality_trial(zero, suite, -1, 0);

  auto batches = detail::run_trials(cfg, [&](std::int64_t t) {
    return inequality_trial(generate_matrices(cfg, t), suite, t, trial_seed(cfg.seed, t));
  });

  // smallest relative premise gap met on random instances
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    for (Record& r : batches[t]) report.records.push_back(std::move(r));
  }
  for (std::size_t t = 0; t < std::min<std::size_t>(cfg.trials, 50); ++t) {
    const auto eq = equality_condition_check(generate_matrices(cfg, static_cast<std::int64_t>(t)).a);
    if (eq.norm_fourth > 0.0) min_gap = std::min(min_gap, std::abs(eq.norm_fourth - eq.cartesian_product_norm) / eq.norm_fourth);
  }
  if (std::isfinite(min_gap)) report.probes["equality-premise-min-relative-gap"] = min_gap;

  detail::summarize(report);
  report.probes["refined-minus-classical-mean-slack"] =
      report.tightness["main-refined"].mean_slack - report.tightness["classical-square"].mean_slack;
  report.wall_time = detail::seconds_since(start);
  return report;
}

// ---- zero-bound suite -----------------------------------------------------

inline std::vector<Record> zero_bound_trial(const MonicPolynomial& p, const std::string& suite, std::int64_t trial,
                                            std::uint64_t seed, DSequence source) {
  std::vector<Record> out;
  const std::string dig = digest(build_companion(p));
  const BoundReport report = all_bounds(p, source);
  for (const auto& [name, value] : report.entries) {
    out.push_back(detail::make_record(suite, trial, seed, name,
                                      BoundComparison::make(report.max_root_modulus, value, 1e-6), dig));
  }
  const double b = report.value(bound_names::kNewB);
  const double from_estimate = std::pow(norm_p4_estimate(p, source).value, 0.25);
  out.push_back(detail::make_record(suite, trial, seed, "new-fourth-power-consistency",
                                    BoundComparison::make(std::abs(b - from_estimate), 0.0, 1e-10), dig));
  return out;
}

/// All nine bounds against the eigenvalue oracle; the reference cubic is trial -1.
inline SuiteReport run_zero_bound_suite(const GeneratorConfig& cfg, DSequence source = DSequence::direct) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = "zeros";
  report.trials_run = cfg.trials;
  report.records = zero_bound_trial(MonicPolynomial({1.0, 0.5, 1.0}), report.suite, -1, 0, source);
  auto batches = detail::run_trials(cfg, [&](std::int64_t t) {
    return zero_bound_trial(generate_polynomial(cfg, t), report.suite, t, trial_seed(cfg.seed, t), source);
  });
  for (auto& batch : batches)
    for (Record& r : batch) report.records.push_back(std::move(r));
  detail::summarize(report);
  report.wall_time = detail::seconds_since(start);
  return report;
}

// ---- closed forms vs multiplied powers -------------------------------------

/// b and c closed forms must match the multiplied rows to 1e-12 (relative); the printed
/// d closed form is only profiled, since it does not describe the first row of C_p^4.
inline SuiteReport closed_form_vs_direct(const GeneratorConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = "closed-form";
  report.trials_run = cfg.trials;
  std::vector<double> d_dev(cfg.trials);

  auto max_dev = [](const ComplexVector& x, const ComplexVector& y) {
    double dev = 0.0, scale = 1.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      dev = std::max(dev, std::abs(x[k] - y[k]));
      scale = std::max(scale, std::abs(y[k]));
    }
    return std::pair{dev, scale};
  };

  auto batches = detail::run_trials(cfg, [&](std::int64_t t) {
    const MonicPolynomial p = generate_polynomial(cfg, t);
    const auto seq = closed_form_sequences(p);
    const auto pw = companion_powers(p);
    const std::uint64_t seed = trial_seed(cfg.seed, t);
    const std::string dig = digest(pw.p1);
    std::vector<Record> out;
    const auto [db, sb] = max_dev(seq.b, pw.b);
    const auto [dc, sc] = max_dev(seq.c, pw.c);
    out.push_back(detail::make_record(report.suite, t, seed, "closed-form-b", BoundComparison::make(db, 0.0, 1e-12 * sb), dig));
    out.push_back(detail::make_record(report.suite, t, seed, "closed-form-c", BoundComparison::make(dc, 0.0, 1e-12 * sc), dig));
    const auto [dd, sd] = max_dev(seq.d_printed, pw.d);
    d_dev[static_cast<std::size_t>(t)] = dd / sd;
    return out;
  });
  for (auto& batch : batches)
    for (Record& r : batch) report.records.push_back(std::move(r));
  detail::summarize(report);

  double mean = 0.0, top = 0.0;
  std::size_t nonzero = 0;
  for (double v : d_dev) {
    mean += v;
    top = std::max(top, v);
    if (v > 1e-12) ++nonzero;
  }
  report.probes["d-printed-max-relative-deviation"] = top;
  report.probes["d-printed-mean-relative-deviation"] = mean / static_cast<double>(d_dev.size());
  report.probes["d-printed-nonzero-fraction"] = static_cast<double>(nonzero) / static_cast<double>(d_dev.size());
  report.wall_time = detail::seconds_since(start);
  return report;
}

// ---- serialisation --------------------------------------------------------

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline nlohmann::ordered_json to_json(const Record& r) {
  return {{"suite", r.suite}, {"trial", r.trial}, {"seed", r.seed},   {"name", r.name},    {"lhs", r.lhs},
          {"rhs", r.rhs},     {"slack", r.slack}, {"holds", r.holds}, {"digest", r.digest}};
}

inline Record record_from_json(const nlohmann::json& j) {
  Record r;
  r.suite = j.at("suite").get<std::string>();
  r.trial = j.at("trial").get<std::int64_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.name = j.at("name").get<std::string>();
  r.lhs = j.at("lhs").get<double>();
  r.rhs = j.at("rhs").get<double>();
  r.slack = j.at("slack").get<double>();
  r.holds = j.at("holds").get<bool>();
  r.digest = j.value("digest", std::string{});
  return r;
}

inline nlohmann::ordered_json to_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["trials_run"] = report.trials_run;
  j["wall_time"] = report.wall_time;
  j["violation_count"] = report.violations.size();
  j["violations"] = nlohmann::ordered_json::array();
  for (const Record& r : report.violations) j["violations"].push_back(to_json(r));
  j["tightness"] = nlohmann::ordered_json::object();
  for (const auto& [name, t] : report.tightness) {
    j["tightness"][name] = {{"count", t.count},         {"mean_slack", t.mean_slack}, {"min_slack", t.min_slack},
                            {"max_slack", t.max_slack}, {"mean_ratio", t.mean_ratio}};
  }
  j["probes"] = nlohmann::ordered_json::object();
  for (const auto& [name, v] : report.probes) j["probes"][name] = v;
  j["records"] = nlohmann::ordered_json::array();
  for (const Record& r : report.records) j["records"].push_back(to_json(r));
  return j;
}

inline SuiteReport report_from_json(const nlohmann::json& j) {
  SuiteReport report;
  report.suite = j.at("suite").get<std::string>();
  report.trials_run = j.at("trials_run").get<std::size_t>();
  report.wall_time = j.at("wall_time").get<double>();
  for (const auto& r : j.at("violations")) report.violations.push_back(record_from_json(r));
  for (const auto& [name, t] : j.at("tightness").items()) {
    report.tightness[name] = {t.at("count").get<std::size_t>(), t.at("mean_slack").get<double>(),
                              t.at("min_slack").get<double>(), t.at("max_slack").get<double>(),
                              t.at("mean_ratio").get<double>()};
  }
  for (const auto& [name, v] : j.at("probes").items()) report.probes[name] = v.get<double>();
  for (const auto& r : j.at("records")) report.records.push_back(record_from_json(r));
  return report;
}

inline std::string to_csv(const SuiteReport& report) {
  std::string out = "suite,trial,seed,name,lhs,rhs,slack,holds\n";
  for (const Record& r : report.records) {
    out += r.suite + "," + std::to_string(r.trial) + "," + std::to_string(r.seed) + "," + r.name + "," +
           format_double(r.lhs) + "," + format_double(r.rhs) + "," + format_double(r.slack) + "," +
           (r.holds ? "true" : "false") + "\n";
  }
  return out;
}

enum class ReportFormat { json, csv };

inline void write_report(const SuiteReport& report, const std::string& path, ReportFormat format) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  if (format == ReportFormat::json) {
    f << to_json(report).dump(2) << "\n";
  } else {
    f << to_csv(report);
  }
  if (!f) throw Error(ErrorKind::IoError, "write to '" + path + "' failed");
}

}  // namespace rootbound

#endif  // ROOTBOUND_HARNESS_HPP
