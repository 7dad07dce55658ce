#ifndef ROOTBOUND_COMPANION_HPP
#define ROOTBOUND_COMPANION_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "rootbound/inequalities.hpp"
#include "rootbound/matrix.hpp"
#include "rootbound/polynomial.hpp"
#include "rootbound/spectral.hpp"

namespace rootbound {

/// Frobenius companion matrix: first row -a_n ... -a_1, ones on the subdiagonal.
inline ComplexMatrix build_companion(const MonicPolynomial& p) {
  const std::size_t n = p.degree();
  ComplexMatrix c(n);
  for (std::size_t k = 0; k < n; ++k) c(0, k) = -p.a(static_cast<std::ptrdiff_t>(n - k));
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  return c;
}

/// C_p .. C_p^4 by repeated multiplication, plus the first rows of the squared,
/// cubed and fourth powers. Sequences are indexed so that b[j-1] = b_j, i.e. b_j
/// sits in column n - j of its row.
struct CompanionPowers {
  ComplexMatrix p1, p2, p3, p4;
  ComplexVector b, c, d;
};

namespace detail {
inline ComplexVector row_as_sequence(const ComplexMatrix& m, std::size_t row) {
  const std::size_t n = m.size();
  ComplexVector s(n);
  for (std::size_t j = 1; j <= n; ++j) s[j - 1] = m(row, n - j);
  return s;
}

inline Complex padded(const ComplexVector& s, std::ptrdiff_t j) {
  if (j <= 0) return Complex{};
  return s[static_cast<std::size_t>(j - 1)];
}
}  // namespace detail

inline CompanionPowers companion_powers(const MonicPolynomial& p) {
  CompanionPowers out;
  out.p1 = build_companion(p);
  out.p2 = out.p1 * out.p1;
  out.p3 = out.p2 * out.p1;
  out.p4 = out.p3 * out.p1;
  out.b = detail::row_as_sequence(out.p2, 0);
  out.c = detail::row_as_sequence(out.p3, 0);
  out.d = detail::row_as_sequence(out.p4, 0);
  return out;
}

/// The textbook closed forms with a_0 = a_{-1} = a_{-2} = 0:
///   b_j = a_n a_j - a_{j-1}
///   c_j = -a_n b_j + a_{n-1} a_j - a_{j-2}
///   d_j = -a_n c_j - a_{n-1} b_{j-1} + a_{n-2} a_j - a_{j-3}   (as printed)
/// d_direct is the first row of the multiplied C_p^4. The printed d_j does not
/// match it in general; the first row actually satisfies d_j = -c_n a_j + c_{j-1}.
struct ClosedFormSequences {
  ComplexVector b, c, d_printed, d_direct;
};

inline ClosedFormSequences closed_form_sequences(const MonicPolynomial& p) {
  const auto n = static_cast<std::ptrdiff_t>(p.degree());
  ClosedFormSequences out;
  out.b.resize(n);
  out.c.resize(n);
  out.d_printed.resize(n);
  for (std::ptrdiff_t j = 1; j <= n; ++j) out.b[j - 1] = p.a(n) * p.a(j) - p.a(j - 1);
  for (std::ptrdiff_t j = 1; j <= n; ++j) {
    out.c[j - 1] = -p.a(n) * out.b[j - 1] + p.a(n - 1) * p.a(j) - p.a(j - 2);
  }
  for (std::ptrdiff_t j = 1; j <= n; ++j) {
    out.d_printed[j - 1] = -p.a(n) * out.c[j - 1] - p.a(n - 1) * detail::padded(out.b, j - 1) + p.a(n - 2) * p.a(j) - p.a(j - 3);
  }
  out.d_direct = companion_powers(p).d;
  return out;
}

/// Which d_j sequence feeds the fourth-power quantities.
enum class DSequence {
  direct,   // first row of the multiplied C_p^4
  printed,  // the printed closed form; reproduces the reference worked example
};

struct DeltaQuantities {
  double alpha = 0, beta = 0, alpha_p = 0, beta_p = 0;
  Complex gamma, gamma_p;
  double delta = 0, delta_p = 0;
  double alpha1 = 0, beta1 = 0;
  Complex gamma1, gamma2, gamma3, gamma4, gamma5;
  double delta1 = 0, delta2 = 0;
};

namespace detail {

/// Largest eigenvalue of the 2x2 Gram matrix [[x, g], [conj g, y]].
inline double gram_top(double x, double y, Complex g) {
  return 0.5 * (x + y + std::sqrt((x - y) * (x - y) + 4.0 * std::norm(g)));
}

inline double sum_sq(const ComplexVector& s, std::size_t from = 0) {
  double acc = 0.0;
  for (std::size_t k = from; k < s.size(); ++k) acc += std::norm(s[k]);
  return acc;
}

/// sum_j x_j conj(y_j)
inline Complex cross(const ComplexVector& x, const ComplexVector& y, std::size_t from = 0) {
  Complex acc{};
  for (std::size_t k = from; k < x.size(); ++k) acc += x[k] * std::conj(y[k]);
  return acc;
}

}  // namespace detail

inline DeltaQuantities delta_quantities(const MonicPolynomial& p, DSequence source = DSequence::direct) {
  const ClosedFormSequences seq = closed_form_sequences(p);
  const ComplexVector a(p.coefficients().begin(), p.coefficients().end());
  const ComplexVector& b = seq.b;
  const ComplexVector& c = seq.c;
  const ComplexVector& d = source == DSequence::direct ? seq.d_direct : seq.d_printed;

  DeltaQuantities q;
  q.alpha = detail::sum_sq(a);
  q.beta = detail::sum_sq(b);
  q.gamma = -detail::cross(b, a);
  q.delta = detail::gram_top(q.alpha, q.beta, q.gamma);

  // primed sums run over j = 3..n
  q.alpha_p = detail::sum_sq(a, 2);
  q.beta_p = detail::sum_sq(b, 2);
  q.gamma_p = -detail::cross(b, a, 2);
  q.delta_p = detail::gram_top(q.alpha_p, q.beta_p, q.gamma_p);

  q.alpha1 = detail::sum_sq(d);
  q.beta1 = detail::sum_sq(c);
  q.gamma1 = detail::cross(d, c);
  q.delta1 = detail::gram_top(q.alpha1, q.beta1, q.gamma1);

  q.gamma2 = detail::cross(d, b);
  q.gamma3 = detail::cross(d, a);
  q.gamma4 = detail::cross(c, b);
  q.gamma5 = detail::cross(c, a);
  const double top = std::norm(q.gamma2) + std::norm(q.gamma3);
  const double bottom = std::norm(q.gamma4) + std::norm(q.gamma5);
  q.delta2 = detail::gram_top(top, bottom, q.gamma2 * std::conj(q.gamma4) + q.gamma3 * std::conj(q.gamma5));
  return q;
}

/// ||C_p|| = sqrt((alpha + 1 + sqrt((alpha + 1)^2 - 4|a_1|^2)) / 2).
inline double norm_exact(const MonicPolynomial& p) {
  double alpha = 0.0;
  for (const Complex& z : p.coefficients()) alpha += std::norm(z);
  const double disc = (alpha + 1.0) * (alpha + 1.0) - 4.0 * std::norm(p.a(1));
  return std::sqrt(0.5 * (alpha + 1.0 + std::sqrt(std::max(disc, 0.0))));
}

/// Upper estimate of ||C_p^2||: sqrt((delta + 1 + sqrt((delta - 1)^2 + 4 delta')) / 2).
inline double norm_sq_estimate(const DeltaQuantities& q) {
  return std::sqrt(0.5 * (q.delta + 1.0 + std::sqrt((q.delta - 1.0) * (q.delta - 1.0) + 4.0 * q.delta_p)));
}

inline double norm_sq_estimate(const MonicPolynomial& p) { return norm_sq_estimate(delta_quantities(p)); }

/// C_p^4 split by rows: R holds rows 1-2, S rows 3-4, T the remaining rows.
/// Groups that fall outside the matrix (degree < 5) are simply smaller or empty.
struct RowBlocks {
  ComplexMatrix r, s, t;
};

inline RowBlocks row_blocks(const ComplexMatrix& p4) {
  const std::size_t n = p4.size();
  RowBlocks out{ComplexMatrix(n), ComplexMatrix(n), ComplexMatrix(n)};
  for (std::size_t i = 0; i < n; ++i) {
    ComplexMatrix& target = i < 2 ? out.r : (i < 4 ? out.s : out.t);
    for (std::size_t j = 0; j < n; ++j) target(i, j) = p4(i, j);
  }
  return out;
}

struct FourthPowerEstimate {
  double value = 0.0;          // the upper estimate of ||C_p^4||
  double delta2_closed = 0.0;  // from the gamma_2..gamma_5 closed form
  double delta2_direct = 0.0;  // ||R S*||^2 from the actual rows of C_p^4
  double delta2_used = 0.0;
  bool decomposition_overlap = false;  // degree < 5: the generic R/S/T shape does not apply
  bool delta2_mismatch = false;        // closed form and direct differ by more than 1e-9
};

/// sqrt( 1/2 (delta1 + delta + sqrt((delta1 - delta)^2 + 4 delta2)) + 1 ).
///
/// With DSequence::direct, delta2 is validated against ||R S*||^2 computed from the
/// multiplied C_p^4 and the direct value wins on disagreement. DSequence::printed
/// evaluates the closed forms throughout, as in the reference worked example.
inline FourthPowerEstimate norm_p4_estimate(const MonicPolynomial& p, DSequence source = DSequence::direct) {
  const DeltaQuantities q = delta_quantities(p, source);
  FourthPowerEstimate out;
  out.decomposition_overlap = p.degree() < 5;
  out.delta2_closed = q.delta2;
  const RowBlocks blocks = row_blocks(companion_powers(p).p4);
  const double rs = operator_norm(blocks.r * adjoint(blocks.s));
  out.delta2_direct = rs * rs;
  out.delta2_used = out.delta2_closed;
  if (source == DSequence::direct) {
    out.delta2_mismatch = std::abs(out.delta2_closed - out.delta2_direct) > 1e-9 * std::max(1.0, out.delta2_direct);
    if (out.delta2_mismatch) out.delta2_used = out.delta2_direct;
  }
  const double gap = q.delta1 - q.delta;
  out.value = std::sqrt(0.5 * (q.delta1 + q.delta + std::sqrt(gap * gap + 4.0 * out.delta2_used)) + 1.0);
  return out;
}

/// ||A + B|| <= 1/2 (||A|| + ||B|| + sqrt((||A|| - ||B||)^2 + 4 ||A^{1/2} B^{1/2}||^2)) for PSD A, B.
inline BoundComparison positive_sum_norm_bound(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require_same_size(a, b);
  const ComplexMatrix root_a = herm_power(a, 0.5);
  const ComplexMatrix root_b = herm_power(b, 0.5);
  const double na = detail::hermitian_norm(a);
  const double nb = detail::hermitian_norm(b);
  const double cross = operator_norm(root_a * root_b);
  const double rhs = 0.5 * (na + nb + std::sqrt((na - nb) * (na - nb) + 4.0 * cross * cross));
  return BoundComparison::make(detail::hermitian_norm(a + b), rhs);
}

}  // namespace rootbound

#endif  // ROOTBOUND_COMPANION_HPP
