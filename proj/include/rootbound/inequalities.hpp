#ifndef ROOTBOUND_INEQUALITIES_HPP
#define ROOTBOUND_INEQUALITIES_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rootbound/golden_section.hpp"
#include "rootbound/matrix.hpp"
#include "rootbound/spectral.hpp"

namespace rootbound {

/// One evaluated inequality lhs <= rhs.
struct BoundComparison {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  double tol = 0.0;
  bool holds = true;   // slack >= -tol

  static BoundComparison make(double lhs, double rhs) {
    return make(lhs, rhs, 1e-8 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
  }

  static BoundComparison make(double lhs, double rhs, double tol) {
    BoundComparison b;
    b.lhs = lhs;
    b.rhs = rhs;
    b.slack = rhs - lhs;
    b.tol = tol;
    b.holds = b.slack >= -tol;
    return b;
  }
};

/// mu in [0, 2].
class MuParameter {
 public:
  explicit MuParameter(double mu) : mu_(mu) {
    if (!(mu >= 0.0 && mu <= 2.0)) throw Error(ErrorKind::InvalidInput, "mu must lie in [0, 2]");
  }
  double value() const noexcept { return mu_; }

 private:
  double mu_;
};

/// Exponent in [0, 1] selecting f(t) = t^alpha, g(t) = t^(1 - alpha).
class AlphaExponent {
 public:
  explicit AlphaExponent(double alpha) : alpha_(alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorKind::InvalidInput, "alpha must lie in [0, 1]");
  }
  double value() const noexcept { return alpha_; }

 private:
  double alpha_;
};

namespace detail {

inline void require_power(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw Error(ErrorKind::InvalidInput, "p must be finite and >= 1");
}

/// |A|^2 + |A*|^2 = A*A + AA*.
inline ComplexMatrix gram_sum(const ComplexMatrix& a) { return adjoint(a) * a + a * adjoint(a); }

/// ||H|| for Hermitian H, read off the extreme eigenvalues.
inline double hermitian_norm(const ComplexMatrix& h) {
  if (h.empty()) return 0.0;
  const auto ev = hermitian_eigenvalues(h);
  return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

/// || |A| B - B* |A| ||_F against 1e-8 max(1, || |A| ||_F || B ||_F).
inline void require_commutation(const ComplexMatrix& abs_a, const ComplexMatrix& b, std::size_t index) {
  const double residual = frobenius_norm(abs_a * b - adjoint(b) * abs_a);
  const double scale = std::max(1.0, frobenius_norm(abs_a) * frobenius_norm(b));
  if (residual > 1e-8 * scale) {
    throw Error(ErrorKind::HypothesisViolated, "pair " + std::to_string(index) + ": || |A|B - B*|A| ||_F = " +
                                                   std::to_string(residual));
  }
}

}  // namespace detail

/// w^2(A) <= 1/4 w^2(|A| + i|A*|) + 1/8 || |A|^2 + |A*|^2 || + 1/4 w(|A||A*|).
inline BoundComparison main_refined_bound(const ComplexMatrix& a) {
  const ComplexMatrix abs_a = abs_operator(a);
  const ComplexMatrix abs_star = abs_operator(adjoint(a));
  const double w = numerical_radius(a);
  const double w_mix = numerical_radius(abs_a + kI * abs_star);
  const double rhs = 0.25 * w_mix * w_mix + 0.125 * detail::hermitian_norm(detail::gram_sum(a)) +
                     0.25 * numerical_radius(abs_a * abs_star);
  return BoundComparison::make(w * w, rhs);
}

/// The classical ceiling 1/2 || A*A + AA* || that every refined bound sits under.
inline double classical_square_bound(const ComplexMatrix& a) { return 0.5 * detail::hermitian_norm(detail::gram_sum(a)); }

/// Checks refined.rhs <= 1/2 || |A|^2 + |A*|^2 ||.
inline BoundComparison refinement_chain(const BoundComparison& refined, const ComplexMatrix& a) {
  return BoundComparison::make(refined.rhs, classical_square_bound(a));
}

/// |<Xx,x><Yx,x>| <= 1/4 || a|X|^2 + (1-a)|X*|^2 + b|Y|^2 + (1-b)|Y*|^2 ||
///                    + 1/8 || |X|^2 + |Y*|^2 || + 1/4 w(YX)   for unit x.
/// The right side does not depend on x; this evaluates it once for every vector given.
inline std::vector<BoundComparison> vector_product_bounds(const ComplexMatrix& x_op, const ComplexMatrix& y_op,
                                                          AlphaExponent alpha, AlphaExponent beta,
                                                          std::span<const ComplexVector> xs) {
  detail::require_same_size(x_op, y_op);
  for (const ComplexVector& x : xs) {
    if (x.size() != x_op.size()) throw Error(ErrorKind::InvalidInput, "vector length does not match matrix order");
    if (std::abs(vector_norm(x) - 1.0) > 1e-12) {
      throw Error(ErrorKind::NotUnitVector, "||x|| = " + std::to_string(vector_norm(x)));
    }
  }
  const double al = alpha.value(), be = beta.value();
  const ComplexMatrix x_sq = adjoint(x_op) * x_op;        // |X|^2
  const ComplexMatrix x_star_sq = x_op * adjoint(x_op);   // |X*|^2
  const ComplexMatrix y_sq = adjoint(y_op) * y_op;
  const ComplexMatrix y_star_sq = y_op * adjoint(y_op);
  const ComplexMatrix mix = al * x_sq + (1.0 - al) * x_star_sq + be * y_sq + (1.0 - be) * y_star_sq;
  const double rhs = 0.25 * detail::hermitian_norm(mix) + 0.125 * detail::hermitian_norm(x_sq + y_star_sq) +
                     0.25 * numerical_radius(y_op * x_op);

  std::vector<BoundComparison> out;
  out.reserve(xs.size());
  for (const ComplexVector& x : xs) {
    const Complex xx = inner_product(x_op * x, x);
    const Complex yx = inner_product(y_op * x, x);
    out.push_back(BoundComparison::make(std::abs(xx * yx), rhs));
  }
  return out;
}

inline BoundComparison vector_product_bound(const ComplexMatrix& x_op, const ComplexMatrix& y_op, AlphaExponent alpha,
                                            AlphaExponent beta, std::span<const Complex> x) {
  const ComplexVector v(x.begin(), x.end());
  return vector_product_bounds(x_op, y_op, alpha, beta, std::span<const ComplexVector>(&v, 1)).front();
}

/// h(mu) = || mu|A|^2 + (2 - mu)|A*|^2 ||.
inline double mu_norm(const ComplexMatrix& a, double mu) {
  return detail::hermitian_norm(mu * (adjoint(a) * a) + (2.0 - mu) * (a * adjoint(a)));
}

/// w^2(A) <= 1/4 h(mu) + 1/8 || |A|^2 + |A*|^2 || + 1/4 w(A^2).
inline BoundComparison mu_bound(const ComplexMatrix& a, MuParameter mu) {
  const double w = numerical_radius(a);
  const double rhs = 0.25 * mu_norm(a, mu.value()) + 0.125 * detail::hermitian_norm(detail::gram_sum(a)) +
                     0.25 * numerical_radius(a * a);
  return BoundComparison::make(w * w, rhs);
}

struct MuMinimum {
  double mu_star = 1.0;
  double min_norm = 0.0;  // h(mu_star)
  BoundComparison bound;
};

/// Minimises the convex h(mu) over [0, 2] by ternary search (mu tolerance 1e-10,
/// at most 200 iterations, endpoints always evaluated) and evaluates the bound there.
inline MuMinimum mu_bound_min(const ComplexMatrix& a) {
  const ComplexMatrix abs_sq = adjoint(a) * a;
  const ComplexMatrix abs_star_sq = a * adjoint(a);
  auto h = [&](double mu) { return detail::hermitian_norm(mu * abs_sq + (2.0 - mu) * abs_star_sq); };
  const auto best = ternary_minimize(h, 0.0, 2.0, 1e-10, 200);

  const double w = numerical_radius(a);
  const double rhs = 0.25 * best.value + 0.125 * detail::hermitian_norm(abs_sq + abs_star_sq) + 0.25 * numerical_radius(a * a);
  return {best.x, best.value, BoundComparison::make(w * w, rhs)};
}

/// w^p(sum A_i B_i) <= n^{p-1}/sqrt2 w( sum r^p(B_i) (|A_i|^{2p alpha} + i |A_i*|^{2p(1-alpha)}) ),
/// given |A_i| B_i = B_i* |A_i| for every pair.
inline BoundComparison sum_product_bound(std::span<const std::pair<ComplexMatrix, ComplexMatrix>> pairs, double p,
                                         AlphaExponent alpha) {
  detail::require_power(p);
  if (pairs.empty()) throw Error(ErrorKind::InvalidInput, "at least one pair is required");
  const std::size_t dim = pairs.front().first.size();
  const double al = alpha.value();
  ComplexMatrix product_sum(dim), inner(dim);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    if (a.size() != dim || b.size() != dim) throw Error(ErrorKind::InvalidInput, "all matrices must share one order");
    const ComplexMatrix abs_a = abs_operator(a);
    detail::require_commutation(abs_a, b, i);
    product_sum = product_sum + a * b;
    const ComplexMatrix abs_sq = adjoint(a) * a;
    const ComplexMatrix abs_star_sq = a * adjoint(a);
    // f^{2p}(|A|) = |A|^{2p alpha} = (|A|^2)^{p alpha}
    const ComplexMatrix term = herm_power(abs_sq, p * al) + kI * herm_power(abs_star_sq, p * (1.0 - al));
    inner = inner + std::pow(spectral_radius(b), p) * term;
  }
  const double n = static_cast<double>(pairs.size());
  const double lhs = std::pow(numerical_radius(product_sum), p);
  const double rhs = std::pow(n, p - 1.0) / std::numbers::sqrt2 * numerical_radius(inner);
  return BoundComparison::make(lhs, rhs);
}

/// w(AB) <= 1/sqrt2 r(B) w(|A| + i|A*|), given |A|B = B*|A|.
inline BoundComparison ab_commute_bound(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require_same_size(a, b);
  const ComplexMatrix abs_a = abs_operator(a);
  detail::require_commutation(abs_a, b, 0);
  const double lhs = numerical_radius(a * b);
  const double rhs = spectral_radius(b) / std::numbers::sqrt2 * numerical_radius(abs_a + kI * abs_operator(adjoint(a)));
  return BoundComparison::make(lhs, rhs);
}

/// w(A) <= 1/sqrt2 w(|A| + i|A*|).
inline BoundComparison aluthge_like_bound(const ComplexMatrix& a) {
  const double rhs = numerical_radius(abs_operator(a) + kI * abs_operator(adjoint(a))) / std::numbers::sqrt2;
  return BoundComparison::make(numerical_radius(a), rhs);
}

/// w^p(A) <= 1/sqrt2 w(|A|^p + i|A*|^p).
inline BoundComparison power_p_bound(const ComplexMatrix& a, double p) {
  detail::require_power(p);
  const ComplexMatrix mix = herm_power(adjoint(a) * a, 0.5 * p) + kI * herm_power(a * adjoint(a), 0.5 * p);
  return BoundComparison::make(std::pow(numerical_radius(a), p), numerical_radius(mix) / std::numbers::sqrt2);
}

/// Checks a bound's rhs against ||A||^p (p = 1 for the aluthge-like bound).
inline BoundComparison norm_power_chain(const BoundComparison& refined, const ComplexMatrix& a, double p) {
  return BoundComparison::make(refined.rhs, std::pow(operator_norm(a), p));
}

/// w^p(sum A_i) <= n^{p-1}/sqrt2 w( sum |A_i|^{2p alpha} + i |A_i*|^{2p(1-alpha)} ).
inline BoundComparison sum_bound(std::span<const ComplexMatrix> as, double p, AlphaExponent alpha) {
  detail::require_power(p);
  if (as.empty()) throw Error(ErrorKind::InvalidInput, "at least one matrix is required");
  const std::size_t dim = as.front().size();
  const double al = alpha.value();
  ComplexMatrix total(dim), inner(dim);
  for (const ComplexMatrix& a : as) {
    if (a.size() != dim) throw Error(ErrorKind::InvalidInput, "all matrices must share one order");
    total = total + a;
    inner = inner + herm_power(adjoint(a) * a, p * al) + kI * herm_power(a * adjoint(a), p * (1.0 - al));
  }
  const double n = static_cast<double>(as.size());
  const double lhs = std::pow(numerical_radius(total), p);
  const double rhs = std::pow(n, p - 1.0) / std::numbers::sqrt2 * numerical_radius(inner);
  return BoundComparison::make(lhs, rhs);
}

struct EqualityCheck {
  bool premise_holds = false;
  bool conclusion_holds = false;
  double norm_fourth = 0.0;            // ||A||^4
  double cartesian_product_norm = 0.0; // ||Re^2(A) Im^2(A)||
  double w_squared = 0.0;
  double quarter_gram_norm = 0.0;      // 1/4 ||A*A + AA*||
};

/// Premise ||A||^4 = ||Re^2(A) Im^2(A)|| and conclusion w^2(A) = 1/4 ||A*A + AA*||.
/// Both sides of each equation are homogeneous, so they are compared with a purely
/// relative tolerance 1e-8 (scale ||A||^4 and ||A||^2 respectively).
inline EqualityCheck equality_condition_check(const ComplexMatrix& a) {
  EqualityCheck out;
  const double norm = operator_norm(a);
  const ComplexMatrix re = real_part(a), im = imag_part(a);
  out.norm_fourth = std::pow(norm, 4);
  out.cartesian_product_norm = operator_norm(re * re * (im * im));
  const double w = numerical_radius(a);
  out.w_squared = w * w;
  out.quarter_gram_norm = 0.25 * detail::hermitian_norm(detail::gram_sum(a));
  out.premise_holds = std::abs(out.norm_fourth - out.cartesian_product_norm) <= 1e-8 * out.norm_fourth;
  out.conclusion_holds = std::abs(out.w_squared - out.quarter_gram_norm) <= 1e-8 * norm * norm;
  return out;
}

/// w^2(A) <= 1/4 ||A*A + AA*|| + 1/2 w(A^2).
inline BoundComparison a17_bound(const ComplexMatrix& a) {
  const double w = numerical_radius(a);
  const double rhs = 0.25 * detail::hermitian_norm(detail::gram_sum(a)) + 0.5 * numerical_radius(a * a);
  return BoundComparison::make(w * w, rhs);
}

/// r(A) <= { 1/4 || |A^2|^2 + |(A*)^2|^2 || + 1/2 w(A^4) }^{1/4}.
inline BoundComparison spec1_radius_bound(const ComplexMatrix& a) {
  const ComplexMatrix a2 = a * a;
  const double inner = 0.25 * detail::hermitian_norm(detail::gram_sum(a2)) + 0.5 * numerical_radius(a2 * a2);
  return BoundComparison::make(spectral_radius(a), std::pow(std::max(inner, 0.0), 0.25));
}

/// r(A) <= { 1/2 ||A^2|| + 1/2 ||A^4||^{1/2} }^{1/2}.
inline BoundComparison spec2_radius_bound(const ComplexMatrix& a) {
  const ComplexMatrix a2 = a * a;
  const double inner = 0.5 * operator_norm(a2) + 0.5 * std::sqrt(operator_norm(a2 * a2));
  return BoundComparison::make(spectral_radius(a), std::sqrt(inner));
}

}  // namespace rootbound

#endif  // ROOTBOUND_INEQUALITIES_HPP
