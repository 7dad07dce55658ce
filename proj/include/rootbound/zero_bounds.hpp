#ifndef ROOTBOUND_ZERO_BOUNDS_HPP
#define ROOTBOUND_ZERO_BOUNDS_HPP

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "rootbound/companion.hpp"
#include "rootbound/polynomial.hpp"
#include "rootbound/spectral.hpp"

namespace rootbound {

/// Max |z| over the zeros of p, i.e. r(C_p).
inline double max_root_modulus(const MonicPolynomial& p) { return spectral_radius(build_companion(p)); }

/// |z| <= { 1/4 E2^2 + 3/4 E4 }^{1/4}, with E2, E4 the estimates of ||C_p^2||, ||C_p^4||.
inline double bound_new_a(const MonicPolynomial& p, DSequence source = DSequence::direct) {
  const double e2 = norm_sq_estimate(p);
  const double e4 = norm_p4_estimate(p, source).value;
  return std::pow(0.25 * e2 * e2 + 0.75 * e4, 0.25);
}

/// |z| <= E4^{1/4}.
inline double bound_new_b(const MonicPolynomial& p, DSequence source = DSequence::direct) {
  return std::pow(norm_p4_estimate(p, source).value, 0.25);
}

/// |z| <= { 1/2 E2 + 1/2 E4^{1/2} }^{1/2}.
inline double bound_new_c(const MonicPolynomial& p, DSequence source = DSequence::direct) {
  const double e2 = norm_sq_estimate(p);
  const double e4 = norm_p4_estimate(p, source).value;
  return std::sqrt(0.5 * e2 + 0.5 * std::sqrt(e4));
}

using NamedBound = std::pair<std::string, double>;

namespace bound_names {
inline constexpr const char* kLinden = "Linden";
inline constexpr const char* kMontel = "Montel";
inline constexpr const char* kCauchy = "Cauchy";
inline constexpr const char* kKittaneh = "Kittaneh";
inline constexpr const char* kFujiiKubo = "Fujii-Kubo";
inline constexpr const char* kBhuniaPaul = "Bhunia-Paul";
inline constexpr const char* kNewA = "new-spectral-radius";
inline constexpr const char* kNewB = "new-fourth-power";
inline constexpr const char* kNewC = "new-mixed-power";
}  // namespace bound_names

/// The six classical bounds, all in the ascending a_1 = constant-term convention.
inline std::vector<NamedBound> classical_bounds(const MonicPolynomial& p) {
  const auto n = static_cast<std::ptrdiff_t>(p.degree());
  const double nd = static_cast<double>(n);
  const double an = std::abs(p.a(n));
  double alpha = 0.0, abs_sum = 0.0, abs_max = 0.0;
  for (const Complex& z : p.coefficients()) {
    alpha += std::norm(z);
    abs_sum += std::abs(z);
    abs_max = std::max(abs_max, std::abs(z));
  }
  const double tail = alpha - an * an;  // sum_{j=1}^{n-1} |a_j|^2
  const double cosine = std::cos(std::numbers::pi / (nd + 1.0));

  const double linden = an / nd + std::sqrt((nd - 1.0) / nd * (nd - 1.0 + alpha - an * an / nd));
  const double montel = std::max(1.0, abs_sum);
  const double cauchy = 1.0 + abs_max;
  const double kittaneh = 0.5 * (an + 1.0 + std::sqrt((an - 1.0) * (an - 1.0) + 4.0 * std::sqrt(tail)));
  const double fujii_kubo = cosine + 0.5 * (an + std::sqrt(alpha));
  // a_{n-1}; for n = 2 this is a_1, the constant term.
  const double bp_sq = cosine * cosine + std::abs(p.a(n - 1)) + 0.25 * (an + std::sqrt(alpha)) * (an + std::sqrt(alpha)) +
                       0.5 * std::sqrt(std::max(tail, 0.0)) + 0.5 * std::sqrt(alpha);

  return {{bound_names::kLinden, linden},     {bound_names::kMontel, montel},
          {bound_names::kCauchy, cauchy},     {bound_names::kKittaneh, kittaneh},
          {bound_names::kFujiiKubo, fujii_kubo}, {bound_names::kBhuniaPaul, std::sqrt(bp_sq)}};
}

struct BoundReport {
  std::vector<NamedBound> entries;
  double max_root_modulus = 0.0;
  MonicPolynomial polynomial;
  DSequence source = DSequence::direct;

  double value(std::string_view name) const {
    for (const auto& [n, v] : entries)
      if (n == name) return v;
    throw Error(ErrorKind::InvalidInput, "no bound named " + std::string(name));
  }
};

/// The six classical bounds followed by the three companion-power bounds, with the
/// eigenvalue oracle alongside.
inline BoundReport all_bounds(const MonicPolynomial& p, DSequence source = DSequence::direct) {
  BoundReport report{classical_bounds(p), max_root_modulus(p), p, source};
  const double e2 = norm_sq_estimate(p);
  const double e4 = norm_p4_estimate(p, source).value;
  report.entries.emplace_back(bound_names::kNewA, std::pow(0.25 * e2 * e2 + 0.75 * e4, 0.25));
  report.entries.emplace_back(bound_names::kNewB, std::pow(e4, 0.25));
  report.entries.emplace_back(bound_names::kNewC, std::sqrt(0.5 * e2 + 0.5 * std::sqrt(e4)));
  return report;
}

}  // namespace rootbound

#endif  // ROOTBOUND_ZERO_BOUNDS_HPP
