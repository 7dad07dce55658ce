// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Artifacts go to ./reports (ctest runs this from the build directory).

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rootbound/harness.hpp"

namespace {

using namespace rootbound;
namespace names = rootbound::bound_names;
using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> notes;
  bool pass = true;

  void expect(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { notes.push_back("info " + what); }
};

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// 1. reference comparison table for z^3 + z^2 + z/2 + 1
Criterion table_reproduction() {
  Criterion c{1, "reference table for z^3+z^2+z/2+1"};
  const auto t0 = Clock::now();
  const MonicPolynomial p({1.0, 0.5, 1.0});
  const BoundReport printed = all_bounds(p, DSequence::printed);
  const BoundReport direct = all_bounds(p, DSequence::direct);
  const struct {
    const char* name;
    double value;
    double tol;
  } rows[] = {{names::kLinden, 1.9492, 5e-4},          {names::kMontel, 2.5, 5e-4},
              {names::kCauchy, 2.0, 5e-4},             {names::kFujiiKubo, 1.9571, 5e-4},
              {names::kBhuniaPaul, 1.96761, 5e-4},     {names::kNewA, 1.38047091798, 1e-6},
              {names::kNewB, 1.3798438819, 1e-6},      {names::kNewC, 1.381095966, 1e-6}};
  for (const auto& r : rows) {
    const double got = printed.value(r.name);
    c.expect(std::abs(got - r.value) <= r.tol,
             std::string(r.name) + fmt(" = %.12g", got) + fmt(" vs %.12g", r.value) + fmt(" (tol %g)", r.tol));
  }
  const double kitt = printed.value(names::kKittaneh);
  c.expect(std::abs(kitt - 2.0574) <= 5e-4, fmt("Kittaneh evaluates to %.10g (~2.0574)", kitt));
  c.note(fmt("Kittaneh printed 2.0547 differs by %.4g: documented discrepancy, not a failure", kitt - 2.0547));
  c.note("new bounds above use the printed d_j closed form; with d_j from the multiplied C_p^4:");
  for (const char* n : {names::kNewA, names::kNewB, names::kNewC}) {
    c.note(std::string("  ") + n + fmt(" = %.12g", direct.value(n)));
  }
  const double root = oracle::max_root_modulus({1.0, 0.5, 1.0});
  c.note(fmt("max |root| (Aberth oracle) = %.12g", root));
  const double elapsed = seconds(t0);
  c.expect(elapsed < 1.0, fmt("runtime %.4f s < 1 s", elapsed));
  return c;
}

// 2. weighted shift: exact rationals
Criterion weighted_shift_rationals() {
  Criterion c{2, "weighted shift [[0,1,0],[0,0,2],[0,0,0]] exact rationals"};
  const ComplexMatrix a{{0, 1, 0}, {0, 0, 2}, {0, 0, 0}};
  const auto m = mu_bound_min(a);
  c.expect(std::abs(m.mu_star - 8.0 / 7.0) <= 1e-6, fmt("mu* = %.12g (8/7)", m.mu_star));
  c.expect(std::abs(m.min_norm - 32.0 / 7.0) <= 1e-9, fmt("min norm = %.15g (32/7)", m.min_norm));
  c.expect(std::abs(m.bound.rhs - 113.0 / 56.0) <= 1e-9, fmt("bound = %.15g (113/56)", m.bound.rhs));
  c.expect(113.0 / 56.0 < 2.5, "113/56 < 5/2");
  c.expect(m.bound.holds, fmt("w^2 = %.12g below the bound", m.bound.lhs));
  return c;
}

// 3. counterexample to the equality-case converse
Criterion counterexample() {
  Criterion c{3, "counterexample [[0,3,0],[0,0,0],[0,0,1]]"};
  const ComplexMatrix a{{0, 3, 0}, {0, 0, 0}, {0, 0, 1}};
  const auto eq = equality_condition_check(a);
  const double scan = oracle::numerical_radius_scan(a);
  c.expect(std::abs(eq.w_squared - 2.25) <= 1e-9, fmt("w^2 = %.15g (9/4)", eq.w_squared));
  c.note(fmt("grid-scan oracle w^2 = %.12g", scan * scan));
  c.expect(std::abs(eq.quarter_gram_norm - 2.25) <= 1e-9, fmt("1/4 ||A*A+AA*|| = %.15g (9/4)", eq.quarter_gram_norm));
  c.expect(std::abs(eq.norm_fourth - eq.cartesian_product_norm) > 1e-3,
           fmt("||A||^4 = %.10g", eq.norm_fourth) + fmt(" != ||Re^2 Im^2|| = %.10g", eq.cartesian_product_norm));
  return c;
}

void write_artifacts(const SuiteReport& report) {
  std::filesystem::create_directories("reports");
  write_report(report, "reports/" + report.suite + ".csv", ReportFormat::csv);
  auto summary = to_json(report);
  summary.erase("records");
  std::ofstream("reports/" + report.suite + ".summary.json") << summary.dump(2) << "\n";
}

// 4. inequality suites
Criterion inequality_suites() {
  Criterion c{4, "inequality suites, 1000 trials x 4 ensembles, dims 2-6, seed 42"};
  const auto t0 = Clock::now();
  for (Ensemble e : {Ensemble::ginibre, Ensemble::hermitian, Ensemble::nilpotent, Ensemble::commuting_pair}) {
    GeneratorConfig cfg;
    cfg.seed = 42;
    cfg.dim = 2;
    cfg.max_dim = 6;
    cfg.trials = default_trials(1000);
    cfg.ensemble = e;
    cfg.threads = 1;
    const SuiteReport report = run_inequality_suite(cfg);
    write_artifacts(report);
    std::string first;
    if (!report.ok()) {
      const Record& v = report.violations.front();
      first = " first: " + v.name + " trial " + std::to_string(v.trial) + fmt(" lhs %.17g", v.lhs) + fmt(" rhs %.17g", v.rhs);
    }
    c.expect(report.ok(), std::string(to_string(e)) + ": " + std::to_string(report.records.size()) + " comparisons, " +
                              std::to_string(report.violations.size()) + " violations" + first + fmt(" (%.1f s)", report.wall_time));
    for (const char* chain : {"main-refined-chain", "power-p-chain-1", "power-p-chain-1.5", "power-p-chain-2", "power-p-chain-3"}) {
      c.expect(report.tightness.count(chain) && report.tightness.at(chain).count == cfg.trials + 1,
               std::string(to_string(e)) + ": " + chain + " evaluated on every instance");
    }
    // Hermitian input makes both slacks zero up to rounding
    c.expect(report.tightness.at("main-refined").mean_slack <= report.tightness.at("classical-square").mean_slack + 1e-8,
             std::string(to_string(e)) + fmt(": refined mean slack %.6g", report.tightness.at("main-refined").mean_slack) +
                 fmt(" <= classical %.6g", report.tightness.at("classical-square").mean_slack));
    if (e == Ensemble::nilpotent) {
      c.note(fmt("nilpotent: min slack of ||A||/2 <= w(A) is %.3g", report.tightness.at("norm-sandwich-lower").min_slack));
    }
  }
  const double elapsed = seconds(t0);
  c.expect(elapsed < 120.0, fmt("runtime %.1f s < 120 s single-threaded", elapsed));
  return c;
}

// 5. zero-bound dominance
Criterion zero_bound_dominance() {
  Criterion c{5, "zero-bound dominance, 1000 polynomials, degree 2-10, |coeff| <= 5"};
  GeneratorConfig cfg;
  cfg.seed = 42;
  cfg.dim = 2;
  cfg.max_dim = 10;
  cfg.trials = default_trials(1000);
  cfg.ensemble = Ensemble::polynomial;
  cfg.coeff_modulus_max = 5.0;
  const SuiteReport report = run_zero_bound_suite(cfg);
  write_artifacts(report);
  std::size_t dominance_fail = 0, consistency_fail = 0;
  for (const Record& r : report.violations) (r.name == "new-fourth-power-consistency" ? consistency_fail : dominance_fail)++;
  c.expect(dominance_fail == 0, "all nine bounds >= max |root| - 1e-6: " + std::to_string(dominance_fail) + " violations");
  c.expect(consistency_fail == 0, "new-fourth-power = estimate^(1/4) within 1e-10: " + std::to_string(consistency_fail) +
                                      " violations");

  // eigenvalue oracle against an independent root finder
  double worst = 0.0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const auto p = generate_polynomial(cfg, static_cast<std::int64_t>(t));
    const std::vector<Complex> a(p.coefficients().begin(), p.coefficients().end());
    worst = std::max(worst, std::abs(max_root_modulus(p) - oracle::max_root_modulus(a)));
  }
  c.expect(worst <= 1e-6, fmt("eigenvalue oracle vs Aberth roots: max difference %.3g", worst));
  for (const char* n : {names::kNewA, names::kNewB, names::kNewC}) {
    c.note(std::string(n) + fmt(": mean bound/root ratio %.4f", report.tightness.at(n).mean_ratio));
  }
  return c;
}

// 6. companion structure
Criterion companion_structure() {
  Criterion c{6, "companion structure, 200 polynomials up to degree 12"};
  std::mt19937_64 rng(20240601);
  double char_dev = 0.0, b_dev = 0.0, c_dev = 0.0, norm_dev = 0.0, chain_excess = -1.0;
  for (int t = 0; t < 200; ++t) {
    const auto p = random_polynomial(2 + t % 11, 5.0, rng);
    const auto coeffs = characteristic_polynomial(build_companion(p));
    for (std::size_t k = 0; k < p.degree(); ++k) {
      const Complex want = p.coefficients()[k];
      char_dev = std::max(char_dev, std::abs(coeffs[k] - want) / std::max(1.0, std::abs(want)));
    }
    char_dev = std::max(char_dev, std::abs(coeffs[p.degree()] - 1.0));

    const auto seq = closed_form_sequences(p);
    const auto pw = companion_powers(p);
    double sb = 1.0, sc = 1.0;
    for (std::size_t k = 0; k < p.degree(); ++k) {
      sb = std::max(sb, std::abs(pw.b[k]));
      sc = std::max(sc, std::abs(pw.c[k]));
    }
    for (std::size_t k = 0; k < p.degree(); ++k) {
      b_dev = std::max(b_dev, std::abs(seq.b[k] - pw.b[k]) / sb);
      c_dev = std::max(c_dev, std::abs(seq.c[k] - pw.c[k]) / sc);
    }

    const double svd = oracle::svd_norm(pw.p1);
    norm_dev = std::max(norm_dev, std::abs(norm_exact(p) - svd) / std::max(1.0, svd));

    const double sq_actual = std::sqrt(oracle::svd_norm(pw.p2));
    const double sq_est = std::sqrt(norm_sq_estimate(p));
    chain_excess = std::max({chain_excess, sq_actual - sq_est, sq_est - svd});
  }
  c.expect(char_dev <= 1e-8, fmt("char-poly round trip max deviation %.3g <= 1e-8", char_dev));
  c.expect(b_dev <= 1e-12, fmt("b_j closed form vs C_p^2 row: %.3g <= 1e-12", b_dev));
  c.expect(c_dev <= 1e-12, fmt("c_j closed form vs C_p^3 row: %.3g <= 1e-12", c_dev));
  c.expect(norm_dev <= 1e-9, fmt("||C_p|| closed form vs SVD oracle: %.3g <= 1e-9", norm_dev));
  c.expect(chain_excess <= 1e-9, fmt("||C_p^2||^(1/2) <= estimate^(1/2) <= ||C_p||: worst excess %.3g", chain_excess));
  return c;
}

// 7. kernel contracts
Criterion kernel_contracts() {
  Criterion c{7, "kernel contracts"};
  std::mt19937_64 rng(777);
  double resid = 0.0, ortho = 0.0, oracle_dev = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 8;
    const ComplexMatrix g = oracle::ginibre(n, rng);
    const ComplexMatrix h = 0.5 * (g + adjoint(g));
    const auto eig = hermitian_eigen(h);
    const double scale = std::max(1.0, frobenius_norm(h));
    ComplexMatrix lam = ComplexMatrix::diagonal(ComplexVector(eig.values.begin(), eig.values.end()));
    resid = std::max(resid, frobenius_norm(h * eig.vectors - eig.vectors * lam) / scale);
    ortho = std::max(ortho, frobenius_norm(adjoint(eig.vectors) * eig.vectors - ComplexMatrix::identity(n)));
    const auto ref = oracle::jacobi_eigenvalues(h);
    for (std::size_t k = 0; k < n; ++k) oracle_dev = std::max(oracle_dev, std::abs(ref[k] - eig.values[k]) / scale);
  }
  c.expect(resid <= 1e-10, fmt("||HV - V diag(lambda)||_F / scale = %.3g <= 1e-10", resid));
  c.expect(ortho <= 1e-10, fmt("||V*V - I||_F = %.3g <= 1e-10", ortho));
  c.expect(oracle_dev <= 1e-10, fmt("eigenvalues vs Jacobi oracle: %.3g <= 1e-10", oracle_dev));

  const double shift = numerical_radius(ComplexMatrix{{0, 1}, {0, 0}});
  c.expect(std::abs(shift - 0.5) <= 1e-10, fmt("w(2x2 shift) = %.15g", shift));

  double unitary_dev = 0.0, phase_dev = 0.0, scan_dev = 0.0;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 5;
    const ComplexMatrix a = oracle::ginibre(n, rng);
    const double w = numerical_radius(a);
    Rng urng(static_cast<std::uint64_t>(t) + 1);
    const ComplexMatrix u = random_unitary(n, urng);
    unitary_dev = std::max(unitary_dev, std::abs(numerical_radius(u * a * adjoint(u)) - w));
    phase_dev = std::max(phase_dev, std::abs(numerical_radius(std::polar(1.0, angle(rng)) * a) - w));
    if (t < 20) scan_dev = std::max(scan_dev, std::abs(oracle::numerical_radius_scan(a) - w) / std::max(1.0, w));
  }
  c.expect(unitary_dev <= 1e-8, fmt("w(UAU*) = w(A) over 100 instances: max deviation %.3g", unitary_dev));
  c.expect(phase_dev <= 1e-8, fmt("w(e^{it}A) = w(A) over 100 instances: max deviation %.3g", phase_dev));
  c.note(fmt("w vs dense grid-scan oracle (20 instances): max relative deviation %.3g", scan_dev));
  return c;
}

}  // namespace

int main() {
  const std::vector<std::function<Criterion()>> runs{table_reproduction, weighted_shift_rationals, counterexample,
                                                    inequality_suites, zero_bound_dominance, companion_structure,
                                                    kernel_contracts};
  int failures = 0;
  for (const auto& run : runs) {
    Criterion c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.pass = false;
      c.notes.push_back(std::string("FAIL exception: ") + e.what());
    }
    if (c.number == 0) c.number = static_cast<int>(&run - runs.data()) + 1;
    std::printf("%s  criterion %d: %s\n", c.pass ? "PASS" : "FAIL", c.number, c.title.c_str());
    for (const auto& n : c.notes) std::printf("        %s\n", n.c_str());
    std::fflush(stdout);
    failures += c.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(runs.size()) - failures, runs.size());
  return failures == 0 ? 0 : 1;
}
