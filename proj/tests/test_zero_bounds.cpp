#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rootbound/zero_bounds.hpp"

namespace {

using namespace rootbound;
namespace names = rootbound::bound_names;

const MonicPolynomial kCubic({1.0, 0.5, 1.0});

TEST(MaxRootModulus, Examples) {
  EXPECT_NEAR(max_root_modulus(MonicPolynomial({-1.0, 0.0})), 1.0, 1e-14);
  EXPECT_NEAR(max_root_modulus(MonicPolynomial({-8.0, 0.0, 0.0})), 2.0, 1e-13);
  const double cubic = max_root_modulus(kCubic);
  EXPECT_NEAR(cubic, oracle::max_root_modulus({1.0, 0.5, 1.0}), 1e-12);
  EXPECT_LT(cubic, 1.3798);
}

TEST(MaxRootModulus, MatchesAberthOracle) {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> mod(0.0, 5.0), phase(0.0, 2.0 * std::numbers::pi);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Complex> a(2 + trial % 9);
    for (auto& z : a) z = std::polar(mod(rng), phase(rng));
    EXPECT_NEAR(max_root_modulus(MonicPolynomial(a)), oracle::max_root_modulus(a), 1e-8);
  }
}

TEST(NewBounds, ReferenceCubicViaPrintedSequence) {
  EXPECT_NEAR(bound_new_a(kCubic, DSequence::printed), 1.38047091798, 1e-6);
  EXPECT_NEAR(bound_new_b(kCubic, DSequence::printed), 1.3798438819, 1e-6);
  EXPECT_NEAR(bound_new_c(kCubic, DSequence::printed), 1.381095966, 1e-6);
}

TEST(NewBounds, CubicViaDirectSequence) {
  EXPECT_NEAR(bound_new_a(kCubic), 1.3184258402197995, 1e-12);
  EXPECT_NEAR(bound_new_b(kCubic), 1.294896138091429, 1e-12);
  EXPECT_NEAR(bound_new_c(kCubic), 1.3393354873231869, 1e-12);
  const double oracle_root = max_root_modulus(kCubic);
  for (double v : {bound_new_a(kCubic), bound_new_b(kCubic), bound_new_c(kCubic)}) EXPECT_GE(v, oracle_root);
}

TEST(NewBounds, UnitCirclePolynomial) {
  const MonicPolynomial p({1.0, 0.0});  // z^2 + 1
  EXPECT_GE(bound_new_a(p), 1.0);
  EXPECT_GE(bound_new_b(p), 1.0);
  EXPECT_GE(bound_new_c(p), 1.0);
}

TEST(NewBounds, FourthPowerConsistency) {
  std::mt19937_64 rng(72);
  std::uniform_real_distribution<double> mod(0.0, 5.0), phase(0.0, 2.0 * std::numbers::pi);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Complex> a(2 + trial % 9);
    for (auto& z : a) z = std::polar(mod(rng), phase(rng));
    const MonicPolynomial p(a);
    EXPECT_NEAR(bound_new_b(p), std::pow(norm_p4_estimate(p).value, 0.25), 1e-10);
  }
}

TEST(ClassicalBounds, ReferenceTable) {
  const auto report = all_bounds(kCubic);
  EXPECT_NEAR(report.value(names::kLinden), 1.9492, 5e-4);
  EXPECT_NEAR(report.value(names::kMontel), 2.5, 5e-4);
  EXPECT_NEAR(report.value(names::kCauchy), 2.0, 5e-4);
  EXPECT_NEAR(report.value(names::kFujiiKubo), 1.9571, 5e-4);
  EXPECT_NEAR(report.value(names::kBhuniaPaul), 1.96761, 5e-4);
  // 1/2 (2 + sqrt(4 sqrt(1.25))); the reference table shows 2.0547
  EXPECT_NEAR(report.value(names::kKittaneh), 0.5 * (2.0 + std::sqrt(4.0 * std::sqrt(1.25))), 1e-14);
  EXPECT_NEAR(report.value(names::kKittaneh), 2.0574, 5e-4);
  EXPECT_GT(std::abs(report.value(names::kKittaneh) - 2.0547), 2e-3);
}

TEST(ClassicalBounds, SimpleCases) {
  const auto bounds = all_bounds(MonicPolynomial({-1.0, 0.0}));  // z^2 - 1
  EXPECT_NEAR(bounds.value(names::kCauchy), 2.0, 1e-15);
  EXPECT_NEAR(bounds.value(names::kMontel), 1.0, 1e-15);
  EXPECT_NEAR(bounds.max_root_modulus, 1.0, 1e-14);

  // z^n - c: Cauchy = 1 + |c| and the oracle is |c|^{1/n}
  for (std::size_t n : {2u, 5u, 9u}) {
    std::vector<Complex> a(n, Complex{});
    a[0] = Complex(-3.0, 4.0);
    const auto r = all_bounds(MonicPolynomial(a));
    EXPECT_NEAR(r.value(names::kCauchy), 6.0, 1e-14);
    EXPECT_NEAR(r.max_root_modulus, std::pow(5.0, 1.0 / static_cast<double>(n)), 1e-10);
  }
}

TEST(AllBounds, OrderAndReferenceImprovement) {
  const auto printed = all_bounds(kCubic, DSequence::printed);
  ASSERT_EQ(printed.entries.size(), 9u);
  EXPECT_EQ(printed.entries[0].first, names::kLinden);
  EXPECT_EQ(printed.entries[8].first, names::kNewC);
  for (const char* fresh : {names::kNewA, names::kNewB, names::kNewC}) {
    for (std::size_t k = 0; k < 6; ++k) EXPECT_LT(printed.value(fresh), printed.entries[k].second);
  }
  const auto direct = all_bounds(kCubic);
  for (const char* fresh : {names::kNewA, names::kNewB, names::kNewC}) {
    for (std::size_t k = 0; k < 6; ++k) EXPECT_LT(direct.value(fresh), direct.entries[k].second);
  }
}

TEST(AllBounds, DominateOracleOnRandomPolynomials) {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> mod(0.0, 5.0), phase(0.0, 2.0 * std::numbers::pi);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Complex> a(2 + trial % 9);
    for (auto& z : a) z = std::polar(mod(rng), phase(rng));
    const auto r = all_bounds(MonicPolynomial(a));
    for (const auto& [name, value] : r.entries) EXPECT_GE(value, r.max_root_modulus - 1e-6) << name;
  }
}

}  // namespace
