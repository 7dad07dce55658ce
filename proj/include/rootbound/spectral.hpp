#ifndef ROOTBOUND_SPECTRAL_HPP
#define ROOTBOUND_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "rootbound/eigen.hpp"
#include "rootbound/golden_section.hpp"
#include "rootbound/matrix.hpp"

namespace rootbound {

/// Largest singular value, sqrt(lambda_max(A* A)).
inline double operator_norm(const ComplexMatrix& a) {
  if (a.empty()) return 0.0;
  const double top = largest_hermitian_eigenvalue(adjoint(a) * a);
  return std::sqrt(std::max(0.0, top));
}

/// Max |lambda| over the spectrum.
inline double spectral_radius(const ComplexMatrix& a) {
  double r = 0.0;
  for (const Complex& z : eigenvalues(a).eigenvalues) r = std::max(r, std::abs(z));
  return r;
}

struct NumericalRadiusOptions {
  int grid_points = 512;
  double theta_tol = 1e-12;
};

/// w(A) = max over theta of lambda_max(Re(e^{i theta} A)).
///
/// g(theta) is sampled on a uniform grid over [0, 2 pi) (grid size rounded up to even); every grid point that is
/// a (cyclic) local maximum is refined by golden-section search inside its two
/// neighbouring cells. The best refined value is returned.
inline double numerical_radius(const ComplexMatrix& a, const NumericalRadiusOptions& opts = {}) {
  const std::size_t n = a.size();
  if (n == 0) return 0.0;
  if (n == 1) return std::abs(a(0, 0));

  const ComplexMatrix re = real_part(a);
  const ComplexMatrix im = imag_part(a);
  ComplexMatrix work(n);
  auto fill = [&](double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) work(i, j) = c * re(i, j) - s * im(i, j);
  };
  auto g = [&](double theta) {
    fill(theta);
    return largest_hermitian_eigenvalue(work);
  };

  // H(theta + pi) = -H(theta), so one solve gives two samples
  const int half = std::max((opts.grid_points + 1) / 2, 2);
  const int grid = 2 * half;
  const double step = 2.0 * std::numbers::pi / grid;
  std::vector<double> samples(grid);
  for (int k = 0; k < half; ++k) {
    fill(k * step);
    const auto ev = hermitian_eigenvalues(work);
    samples[k] = ev.back();
    samples[k + half] = -ev.front();
  }

  double best = *std::max_element(samples.begin(), samples.end());
  double scale = 0.0;
  for (double v : samples) scale = std::max(scale, std::abs(v));
  // differences below rounding level are treated as ties, so a flat g (circular
  // numerical range) does not trigger a refinement at every grid point
  const double noise = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  for (int k = 0; k < grid; ++k) {
    const double prev = samples[(k + grid - 1) % grid];
    const double next = samples[(k + 1) % grid];
    // A plateau is refined once, at its right edge.
    if (!(samples[k] >= prev - noise && samples[k] > next + noise)) continue;
    const double centre = k * step;
    const auto peak = golden_section_maximize(g, centre - step, centre + step, opts.theta_tol);
    best = std::max(best, peak.value);
  }
  return std::max(best, 0.0);
}

namespace detail {

inline ComplexMatrix reconstruct(const HermitianEigen& eig, const std::vector<double>& values) {
  const std::size_t n = eig.values.size();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < n; ++k) acc += eig.vectors(i, k) * values[k] * std::conj(eig.vectors(j, k));
      out(i, j) = acc;
    }
  }
  return out;
}

}  // namespace detail

/// H^s for Hermitian positive semidefinite H via the spectral decomposition.
/// Eigenvalues down to -1e-8 max(1, ||H||) are treated as rounding and clamped to 0.
inline ComplexMatrix herm_power(const ComplexMatrix& h, double s) {
  if (!(s >= 0.0)) throw Error(ErrorKind::InvalidInput, "exponent must be non-negative");
  const HermitianEigen eig = hermitian_eigen(h);
  const double scale = std::max(1.0, eig.values.empty() ? 0.0 : std::max(std::abs(eig.values.front()), std::abs(eig.values.back())));
  std::vector<double> powered(eig.values.size());
  for (std::size_t k = 0; k < powered.size(); ++k) {
    const double lambda = eig.values[k];
    if (lambda < -1e-8 * scale) {
      throw Error(ErrorKind::NotPSD, "eigenvalue " + std::to_string(lambda) + " is negative");
    }
    powered[k] = std::pow(std::max(lambda, 0.0), s);
  }
  return detail::reconstruct(eig, powered);
}

/// |A| = (A* A)^{1/2}.
inline ComplexMatrix abs_operator(const ComplexMatrix& a) { return herm_power(adjoint(a) * a, 0.5); }

}  // namespace rootbound

#endif  // ROOTBOUND_SPECTRAL_HPP
