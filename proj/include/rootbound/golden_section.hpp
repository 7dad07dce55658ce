#ifndef ROOTBOUND_GOLDEN_SECTION_HPP
#define ROOTBOUND_GOLDEN_SECTION_HPP

#include <cmath>
#include <concepts>

namespace rootbound {

struct ScalarExtremum {
  double x;
  double value;
};

/// Golden-section search for a maximum of f on [lo, hi], stopping once the
/// bracket is narrower than tol. f is assumed unimodal on the bracket.
template <std::invocable<double> F>
ScalarExtremum golden_section_maximize(F&& f, double lo, double hi, double tol = 1e-12, int max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc >= fd ? ScalarExtremum{c, fc} : ScalarExtremum{d, fd};
}

/// Ternary search for the minimum of a convex f on [lo, hi]. The endpoints are
/// always evaluated so a minimum on the boundary is not lost.
template <std::invocable<double> F>
ScalarExtremum ternary_minimize(F&& f, double lo, double hi, double tol = 1e-10, int max_iter = 200) {
  const double lo0 = lo, hi0 = hi;
  for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) <= f(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  ScalarExtremum best{0.5 * (lo + hi), f(0.5 * (lo + hi))};
  for (double x : {lo0, hi0}) {
    const double fx = f(x);
    if (fx < best.value) best = {x, fx};
  }
  return best;
}

}  // namespace rootbound

#endif  // ROOTBOUND_GOLDEN_SECTION_HPP
