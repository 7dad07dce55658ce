#ifndef ROOTBOUND_EIGEN_HPP
#define ROOTBOUND_EIGEN_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "rootbound/matrix.hpp"

namespace rootbound {

/// Eigen-decomposition H = V diag(values) V* of a Hermitian matrix.
/// values are ascending; column k of vectors belongs to values[k].
struct HermitianEigen {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Eigenvalues of a general matrix, with multiplicity and in no particular order.
struct Spectrum {
  ComplexVector eigenvalues;
};

namespace detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

inline double abs1(Complex z) { return std::abs(z.real()) + std::abs(z.imag()); }

inline void require_hermitian(const ComplexMatrix& h) {
  const double residual = hermitian_residual(h);
  const double scale = std::max(1.0, frobenius_norm(h));
  if (residual > 1e-10 * scale) {
    throw Error(ErrorKind::NotHermitian, "||H - H*||_F = " + std::to_string(residual));
  }
}

/// Real symmetric tridiagonal T (diag, off) with H = Q T Q*.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // off[k] couples k and k+1; off[n-1] = 0
  ComplexMatrix q;
};

/// Householder reduction of a Hermitian matrix to real tridiagonal form.
/// The lower triangle drives the reduction; the upper triangle is assumed to mirror it.
template <bool WantQ>
Tridiagonal tridiagonalize(const ComplexMatrix& h) {
  const std::size_t n = h.size();
  ComplexMatrix a = h;
  ComplexMatrix q = WantQ ? ComplexMatrix::identity(n) : ComplexMatrix{};
  ComplexVector v(n), p(n);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    double tail = 0.0;
    for (std::size_t i = k + 2; i < n; ++i) tail += std::norm(a(i, k));
    if (tail == 0.0) continue;
    const Complex x0 = a(k + 1, k);
    const double xnorm = std::sqrt(tail + std::norm(x0));
    const Complex phase = std::abs(x0) == 0.0 ? Complex(1.0) : x0 / std::abs(x0);
    const Complex alpha = -phase * xnorm;

    const std::size_t m = n - k - 1;
    double vnorm = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = a(k + 1 + i, k);
      if (i == 0) v[i] -= alpha;
      vnorm += std::norm(v[i]);
    }
    vnorm = std::sqrt(vnorm);
    for (std::size_t i = 0; i < m; ++i) v[i] /= vnorm;

    // A22 <- P A22 P with P = I - 2 v v*, using p = 2 A22 v and q = p - (v* p) v.
    for (std::size_t i = 0; i < m; ++i) {
      Complex acc{};
      for (std::size_t j = 0; j < m; ++j) acc += a(k + 1 + i, k + 1 + j) * v[j];
      p[i] = 2.0 * acc;
    }
    Complex vp{};
    for (std::size_t i = 0; i < m; ++i) vp += std::conj(v[i]) * p[i];
    const double kappa = vp.real();
    for (std::size_t i = 0; i < m; ++i) p[i] -= kappa * v[i];
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        a(k + 1 + i, k + 1 + j) -= v[i] * std::conj(p[j]) + p[i] * std::conj(v[j]);

    a(k + 1, k) = alpha;
    a(k, k + 1) = std::conj(alpha);
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = a(k, i) = Complex{};

    if constexpr (WantQ) {
      for (std::size_t r = 0; r < n; ++r) {
        Complex s{};
        for (std::size_t j = 0; j < m; ++j) s += q(r, k + 1 + j) * v[j];
        for (std::size_t j = 0; j < m; ++j) q(r, k + 1 + j) -= 2.0 * s * std::conj(v[j]);
      }
    }
  }

  Tridiagonal t;
  t.diag.resize(n);
  t.off.assign(n, 0.0);
  Complex d = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    t.diag[k] = a(k, k).real();
    if constexpr (WantQ) {
      for (std::size_t r = 0; r < n; ++r) q(r, k) *= d;
    }
    if (k + 1 < n) {
      const Complex sub = a(k + 1, k);
      const double mag = std::abs(sub);
      t.off[k] = mag;
      if (mag > 0.0) d *= sub / mag;
    }
  }
  if constexpr (WantQ) t.q = std::move(q);
  return t;
}

/// Implicit QL with Wilkinson-style shifts on a real symmetric tridiagonal matrix.
/// When z is non-null its columns are rotated along with the iteration.
inline void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, ComplexMatrix* z) {
  const std::size_t n = d.size();
  constexpr int kMaxIterations = 60;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxIterations) {
          throw Error(ErrorKind::NoConvergence,
                      "tridiagonal QL stalled at index " + std::to_string(l) + ", residual " + std::to_string(std::abs(e[l])));
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          const double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z != nullptr) {
            for (std::size_t k = 0; k < n; ++k) {
              const Complex zi1 = (*z)(k, i + 1);
              const Complex zi = (*z)(k, i);
              (*z)(k, i + 1) = s * zi + c * zi1;
              (*z)(k, i) = c * zi - s * zi1;
            }
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace detail

/// Full eigen-decomposition of a Hermitian matrix.
/// Throws NotHermitian when ||H - H*||_F exceeds 1e-10 max(1, ||H||_F).
inline HermitianEigen hermitian_eigen(const ComplexMatrix& h) {
  detail::require_hermitian(h);
  const std::size_t n = h.size();
  auto t = detail::tridiagonalize<true>(real_part(h));
  detail::tridiagonal_ql(t.diag, t.off, &t.q);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return t.diag[x] < t.diag[y]; });

  HermitianEigen out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = t.diag[order[k]];
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = t.q(r, order[k]);
  }
  return out;
}

/// Ascending eigenvalues only; skips the eigenvector accumulation.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  detail::require_hermitian(h);
  auto t = detail::tridiagonalize<false>(real_part(h));
  detail::tridiagonal_ql(t.diag, t.off, nullptr);
  std::sort(t.diag.begin(), t.diag.end());
  return t.diag;
}

inline double largest_hermitian_eigenvalue(const ComplexMatrix& h) {
  if (h.empty()) return 0.0;
  return hermitian_eigenvalues(h).back();
}

namespace detail {

/// Parlett-Reinsch balancing by powers of two. Eigenvalues are unchanged exactly.
inline void balance(ComplexMatrix& a) {
  constexpr double radix = 2.0;
  const std::size_t n = a.size();
  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += abs1(a(j, i));
        r += abs1(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        g = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= g;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

/// Unitary similarity to upper Hessenberg form by Householder reflections.
inline void hessenberg_reduce(ComplexMatrix& a) {
  const std::size_t n = a.size();
  ComplexVector v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double tail = 0.0;
    for (std::size_t i = k + 2; i < n; ++i) tail += std::norm(a(i, k));
    if (tail == 0.0) continue;
    const Complex x0 = a(k + 1, k);
    const double xnorm = std::sqrt(tail + std::norm(x0));
    const Complex phase = std::abs(x0) == 0.0 ? Complex(1.0) : x0 / std::abs(x0);
    const Complex alpha = -phase * xnorm;
    const std::size_t m = n - k - 1;
    double vnorm = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = a(k + 1 + i, k);
      if (i == 0) v[i] -= alpha;
      vnorm += std::norm(v[i]);
    }
    vnorm = std::sqrt(vnorm);
    for (std::size_t i = 0; i < m; ++i) v[i] /= vnorm;

    for (std::size_t j = k; j < n; ++j) {
      Complex s{};
      for (std::size_t i = 0; i < m; ++i) s += std::conj(v[i]) * a(k + 1 + i, j);
      for (std::size_t i = 0; i < m; ++i) a(k + 1 + i, j) -= 2.0 * v[i] * s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      Complex s{};
      for (std::size_t i = 0; i < m; ++i) s += a(r, k + 1 + i) * v[i];
      for (std::size_t i = 0; i < m; ++i) a(r, k + 1 + i) -= 2.0 * s * std::conj(v[i]);
    }
    a(k + 1, k) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = Complex{};
  }
}

struct Givens {
  double c;
  Complex s;
};

/// Rotation G = [c s; -conj(s) c] with G [a; b] = [r; 0].
inline Givens make_givens(Complex a, Complex b) {
  const double na = std::abs(a);
  const double nrm = std::hypot(na, std::abs(b));
  if (nrm == 0.0) return {1.0, Complex{}};
  if (na == 0.0) return {0.0, Complex(1.0)};
  return {na / nrm, (a / na) * std::conj(b) / nrm};
}

}  // namespace detail

/// Eigenvalues of a general square matrix: balancing, Hessenberg reduction and
/// single-shift complex QR with Wilkinson shifts and deflation.
inline Spectrum eigenvalues(const ComplexMatrix& input) {
  const std::size_t n = input.size();
  Spectrum out;
  out.eigenvalues.resize(n);
  if (n == 0) return out;

  ComplexMatrix h = input;
  detail::balance(h);
  detail::hessenberg_reduce(h);

  double hnorm = 0.0;
  for (const Complex& z : h.entries()) hnorm = std::max(hnorm, detail::abs1(z));

  constexpr int kMaxIterPerEigenvalue = 60;
  std::vector<detail::Givens> rot(n);
  std::size_t found = 0;
  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
  int iter = 0;
  while (hi >= 0) {
    std::ptrdiff_t l = hi;
    while (l > 0) {
      double s = detail::abs1(h(l - 1, l - 1)) + detail::abs1(h(l, l));
      if (s == 0.0) s = hnorm;
      // the normwise floor lets defective clusters (e.g. nilpotent input) deflate
      const double sub = detail::abs1(h(l, l - 1));
      if (sub <= detail::kEps * s || sub <= detail::kEps * hnorm) {
        h(l, l - 1) = Complex{};
        break;
      }
      --l;
    }
    if (l == hi) {
      out.eigenvalues[found++] = h(hi, hi);
      --hi;
      iter = 0;
      continue;
    }
    if (++iter > kMaxIterPerEigenvalue) {
      out.eigenvalues.resize(found);
      std::string partial;
      for (const Complex& z : out.eigenvalues) {
        partial += " (" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
      }
      throw Error(ErrorKind::NoConvergence, "QR iteration stalled with " + std::to_string(found) + " of " +
                                                std::to_string(n) + " eigenvalues found:" + partial);
    }

    Complex mu;
    if (iter % 10 == 0) {
      mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
    } else {
      const Complex a = h(hi - 1, hi - 1), b = h(hi - 1, hi), c = h(hi, hi - 1), d = h(hi, hi);
      const Complex half = 0.5 * (a - d);
      const Complex disc = std::sqrt(half * half + b * c);
      const Complex mid = 0.5 * (a + d);
      const Complex m1 = mid + disc, m2 = mid - disc;
      mu = std::abs(m1 - d) <= std::abs(m2 - d) ? m1 : m2;
    }

    for (std::ptrdiff_t i = l; i <= hi; ++i) h(i, i) -= mu;
    for (std::ptrdiff_t k = l; k < hi; ++k) {
      const auto g = detail::make_givens(h(k, k), h(k + 1, k));
      rot[k] = g;
      for (std::ptrdiff_t j = k; j <= hi; ++j) {
        const Complex x = h(k, j), y = h(k + 1, j);
        h(k, j) = g.c * x + g.s * y;
        h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
      }
    }
    for (std::ptrdiff_t k = l; k < hi; ++k) {
      const auto& g = rot[k];
      const std::ptrdiff_t last = std::min(k + 2, hi);
      for (std::ptrdiff_t i = l; i <= last; ++i) {
        const Complex x = h(i, k), y = h(i, k + 1);
        h(i, k) = x * g.c + y * std::conj(g.s);
        h(i, k + 1) = -x * g.s + y * g.c;
      }
    }
    for (std::ptrdiff_t i = l; i <= hi; ++i) h(i, i) += mu;
  }
  return out;
}

/// Coefficients c_0..c_n (ascending, c_n = 1) of det(zI - A), from the
/// Hessenberg form via the leading-principal-minor recurrence.
inline ComplexVector characteristic_polynomial(const ComplexMatrix& input) {
  const std::size_t n = input.size();
  ComplexMatrix h = input;
  detail::hessenberg_reduce(h);

  std::vector<ComplexVector> p(n + 1);
  p[0] = {Complex(1.0)};
  for (std::size_t k = 1; k <= n; ++k) {
    ComplexVector next(k + 1, Complex{});
    const Complex hkk = h(k - 1, k - 1);
    for (std::size_t j = 0; j < k; ++j) {
      next[j + 1] += p[k - 1][j];
      next[j] -= hkk * p[k - 1][j];
    }
    Complex sub_product = 1.0;
    for (std::size_t i = k - 1; i-- > 0;) {
      // rows i+1..k-1 (0-based) contribute their subdiagonal entries
      sub_product *= h(i + 1, i);
      const Complex coef = h(i, k - 1) * sub_product;
      if (coef == Complex{}) continue;
      for (std::size_t j = 0; j < p[i].size(); ++j) next[j] -= coef * p[i][j];
    }
    p[k] = std::move(next);
  }
  return p[n];
}

}  // namespace rootbound

#endif  // ROOTBOUND_EIGEN_HPP
