#ifndef ROOTBOUND_TESTS_ORACLES_HPP
#define ROOTBOUND_TESTS_ORACLES_HPP

// Reference computations used only by the tests. None of these share code
// with the library's eigensolvers, so agreement is meaningful.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "rootbound/matrix.hpp"

namespace oracle {

using rootbound::Complex;
using rootbound::ComplexMatrix;

/// Cyclic complex Jacobi; returns ascending eigenvalues of a Hermitian matrix.
inline std::vector<double> jacobi_eigenvalues(const ComplexMatrix& h) {
  const std::size_t n = h.size();
  ComplexMatrix a = h;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off += std::norm(a(i, j));
    if (off < 1e-30 * std::max(1.0, rootbound::frobenius_norm(a))) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const Complex phase = apq / mag;
        const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
        const double c = std::cos(theta), s = std::sin(theta);
        // Rotation acting on columns p, q: J = [[c, s*phase], [-s*conj(phase), c]] chosen so (J* A J)_pq = 0.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(phase) * akq;
          a(k, q) = s * phase * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * std::conj(phase) * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a(i, i).real();
  std::sort(out.begin(), out.end());
  return out;
}

/// One-sided (Hestenes) Jacobi SVD; returns singular values descending.
inline std::vector<double> singular_values(const ComplexMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Complex>> col(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) col[j][i] = m(i, j);
  for (int sweep = 0; sweep < 100; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0;
        Complex gamma{};
        for (std::size_t k = 0; k < n; ++k) {
          alpha += std::norm(col[p][k]);
          beta += std::norm(col[q][k]);
          gamma += std::conj(col[p][k]) * col[q][k];
        }
        const double g = std::abs(gamma);
        if (g <= 1e-15 * std::sqrt(alpha * beta) || g == 0.0) continue;
        rotated = true;
        const Complex phase = gamma / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t), s = c * t;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex xp = col[p][k], xq = col[q][k];
          col[p][k] = c * xp - s * std::conj(phase) * xq;
          col[q][k] = s * phase * xp + c * xq;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (const Complex& z : col[j]) s += std::norm(z);
    out[j] = std::sqrt(s);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline double svd_norm(const ComplexMatrix& m) {
  const auto sv = singular_values(m);
  return sv.empty() ? 0.0 : sv.front();
}

/// Aberth-Ehrlich simultaneous iteration on a monic polynomial given by its
/// ascending coefficients c_0..c_{n-1} (leading 1 implied).
inline std::vector<Complex> polynomial_roots(const std::vector<Complex>& ascending) {
  const std::size_t n = ascending.size();
  auto eval = [&](Complex z, Complex& deriv) {
    Complex p = 1.0;
    deriv = 0.0;
    for (std::size_t k = n; k-- > 0;) {
      deriv = deriv * z + p;
      p = p * z + ascending[k];
    }
    return p;
  };
  double radius = 0.0;
  for (const Complex& c : ascending) radius = std::max(radius, std::abs(c));
  radius = 1.0 + radius;
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = std::polar(0.5 * radius, 2.0 * std::numbers::pi * (k + 0.25) / static_cast<double>(n) + 0.4);
  }
  for (int iter = 0; iter < 500; ++iter) {
    double biggest = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex d;
      const Complex p = eval(z[k], d);
      if (p == Complex{}) continue;
      const Complex ratio = p / d;
      Complex repulsion{};
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[k] -= step;
      biggest = std::max(biggest, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (biggest < 1e-16) break;
  }
  return z;
}

inline double max_root_modulus(const std::vector<Complex>& ascending) {
  double r = 0.0;
  for (const Complex& z : polynomial_roots(ascending)) r = std::max(r, std::abs(z));
  return r;
}

/// w(A) by dense theta scanning with the Jacobi eigen-solver.
inline double numerical_radius_scan(const ComplexMatrix& a, int points = 20000) {
  const ComplexMatrix re = rootbound::real_part(a), im = rootbound::imag_part(a);
  const std::size_t n = a.size();
  double best = 0.0;
  for (int k = 0; k < points; ++k) {
    const double t = 2.0 * std::numbers::pi * k / points;
    ComplexMatrix h(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = std::cos(t) * re(i, j) - std::sin(t) * im(i, j);
    best = std::max(best, jacobi_eigenvalues(h).back());
  }
  return best;
}

inline ComplexMatrix ginibre(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  return m;
}

}  // namespace oracle

#endif  // ROOTBOUND_TESTS_ORACLES_HPP
