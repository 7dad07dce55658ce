#ifndef ROOTBOUND_MATRIX_HPP
#define ROOTBOUND_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rootbound/error.hpp"

namespace rootbound {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr Complex kI{0.0, 1.0};

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Dense square complex matrix stored row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n, Complex{}) {}

  ComplexMatrix(std::size_t n, std::vector<Complex> entries) : n_(n), data_(std::move(entries)) {
    if (data_.size() != n_ * n_) {
      throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(n_ * n_) + " entries, got " +
                                               std::to_string(data_.size()));
    }
    if (!std::all_of(data_.begin(), data_.end(), is_finite)) {
      throw Error(ErrorKind::InvalidInput, "matrix entries must be finite");
    }
  }

  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw Error(ErrorKind::InvalidInput, "matrix must be square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
    if (!std::all_of(data_.begin(), data_.end(), is_finite)) {
      throw Error(ErrorKind::InvalidInput, "matrix entries must be finite");
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const Complex> d) {
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  static ComplexMatrix diagonal(std::initializer_list<Complex> d) {
    return diagonal(std::span<const Complex>(d.begin(), d.size()));
  }

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

namespace detail {
inline void require_same_size(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::InvalidInput, "dimension mismatch: " + std::to_string(a.size()) + " vs " +
                                             std::to_string(b.size()));
  }
}
}  // namespace detail

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require_same_size(a, b);
  ComplexMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require_same_size(a, b);
  ComplexMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

inline ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = s * a(i, j);
  return out;
}

inline ComplexMatrix operator*(double s, const ComplexMatrix& a) { return Complex(s) * a; }

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require_same_size(a, b);
  const std::size_t n = a.size();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

inline ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> x) {
  if (x.size() != a.size()) throw Error(ErrorKind::InvalidInput, "vector length does not match matrix order");
  ComplexVector y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < a.size(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

/// Conjugate transpose.
inline ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

/// Re(A) = (A + A*) / 2.
inline ComplexMatrix real_part(const ComplexMatrix& a) {
  ComplexMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return out;
}

/// Im(A) = (A - A*) / (2i).
inline ComplexMatrix imag_part(const ComplexMatrix& a) {
  ComplexMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = (a(i, j) - std::conj(a(j, i))) / Complex(0.0, 2.0);
  return out;
}

inline ComplexMatrix matrix_power(const ComplexMatrix& a, unsigned k) {
  ComplexMatrix out = ComplexMatrix::identity(a.size());
  for (unsigned i = 0; i < k; ++i) out = out * a;
  return out;
}

inline double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const Complex& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

inline Complex trace(const ComplexMatrix& a) {
  Complex t{};
  for (std::size_t i = 0; i < a.size(); ++i) t += a(i, i);
  return t;
}

/// ||A - A*||_F, the deviation from self-adjointness.
inline double hermitian_residual(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) s += std::norm(a(i, j) - std::conj(a(j, i)));
  return std::sqrt(s);
}

inline bool is_hermitian(const ComplexMatrix& a, double rel_tol = 1e-10) {
  return hermitian_residual(a) <= rel_tol * std::max(1.0, frobenius_norm(a));
}

inline Complex inner_product(std::span<const Complex> x, std::span<const Complex> y) {
  // <x, y> = sum x_i conj(y_i), linear in the first slot.
  Complex acc{};
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * std::conj(y[i]);
  return acc;
}

inline double vector_norm(std::span<const Complex> x) {
  double s = 0.0;
  for (const Complex& z : x) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace rootbound

#endif  // ROOTBOUND_MATRIX_HPP
