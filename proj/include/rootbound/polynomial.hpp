#ifndef ROOTBOUND_POLYNOMIAL_HPP
#define ROOTBOUND_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rootbound/matrix.hpp"

namespace rootbound {

/// p(z) = z^n + a_n z^{n-1} + ... + a_2 z + a_1.
///
/// Coefficients are held in ascending order, so coefficients()[0] is a_1, the
/// CONSTANT term, and coefficients()[n-1] is a_n, the z^{n-1} coefficient.
class MonicPolynomial {
 public:
  explicit MonicPolynomial(std::vector<Complex> ascending) : a_(std::move(ascending)) {
    if (a_.size() < 2) {
      throw Error(ErrorKind::DegreeTooSmall, "degree must be at least 2, got " + std::to_string(a_.size()));
    }
    if (!std::all_of(a_.begin(), a_.end(), is_finite)) throw Error(ErrorKind::InvalidInput, "coefficients must be finite");
  }

  /// From coefficients in descending degree order, leading 1 included.
  static MonicPolynomial from_descending(std::span<const Complex> descending) {
    if (descending.empty()) throw Error(ErrorKind::InvalidInput, "empty coefficient list");
    if (descending.front() != Complex(1.0)) {
      throw Error(ErrorKind::NonMonic, "leading coefficient must be 1");
    }
    std::vector<Complex> ascending(descending.rbegin(), descending.rend() - 1);
    return MonicPolynomial(std::move(ascending));
  }

  std::size_t degree() const noexcept { return a_.size(); }

  /// a_j with the zero-padding convention a_j = 0 for j <= 0.
  Complex a(std::ptrdiff_t j) const {
    if (j <= 0) return Complex{};
    return a_.at(static_cast<std::size_t>(j - 1));
  }

  std::span<const Complex> coefficients() const noexcept { return a_; }

  /// The standing assumption a_1 != 0 is not met; the bounds remain defined.
  bool zero_constant_term() const noexcept { return a_.front() == Complex{}; }

 private:
  std::vector<Complex> a_;
};

namespace detail {

inline bool parse_real(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

}  // namespace detail

/// Parses "re", "re+imi", "re-imi", "imi", "i", "-i".
inline bool parse_complex(std::string_view token, Complex& out) {
  if (token.empty()) return false;
  if (token.back() != 'i') {
    double re;
    if (!detail::parse_real(token, re)) return false;
    out = Complex(re, 0.0);
    return true;
  }
  const std::string_view body = token.substr(0, token.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  const std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);
  double re = 0.0, im;
  if (!re_text.empty() && !detail::parse_real(re_text, re)) return false;
  if (im_text.empty() || im_text == "+") {
    im = 1.0;
  } else if (im_text == "-") {
    im = -1.0;
  } else if (!detail::parse_real(im_text, im)) {
    return false;
  }
  out = Complex(re, im);
  return true;
}

/// Comma-separated descending-degree coefficients with the leading 1, e.g. "1,1,0.5,1".
/// Throws InvalidInput naming the offending token, or NonMonic.
inline MonicPolynomial parse_polynomial(std::string_view text) {
  std::vector<Complex> descending;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string token(text.substr(start, comma - start));
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }), token.end());
    Complex z;
    if (!parse_complex(token, z)) throw Error(ErrorKind::InvalidInput, "bad coefficient token '" + token + "'");
    descending.push_back(z);
    start = comma + 1;
  }
  return MonicPolynomial::from_descending(descending);
}

inline std::string format_complex(Complex z) {
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  }
  return buf;
}

/// Inverse of parse_polynomial.
inline std::string format_polynomial(const MonicPolynomial& p) {
  std::string out = "1";
  const auto a = p.coefficients();
  for (std::size_t k = a.size(); k-- > 0;) out += "," + format_complex(a[k]);
  return out;
}

}  // namespace rootbound

#endif  // ROOTBOUND_POLYNOMIAL_HPP
