#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cmgf/polynomial.hpp"

namespace cmgf {

/// Polynomial in u whose coefficients are exact polynomials in z over Q.
/// Mirrors functional-equation data A(u) = sum a_i(z) u^i.
using PolyU = Polynomial<PolyQ>;

namespace detail {

/// Fraction-free determinant (Bareiss) over Q[z]; every division is exact.
inline PolyQ determinant(std::vector<std::vector<PolyQ>> m) {
  const std::size_t n = m.size();
  if (n == 0) return PolyQ{BigRational(1)};
  int sign = 1;
  PolyQ prev{BigRational(1)};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  return sign == 1 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace detail

/// Resultant of A and B with respect to u: determinant of the Sylvester
/// matrix with the A rows first. With deg_u B = 0 this reduces to
/// B^(deg_u A). Zero exactly when A and B share a nonconstant factor in u.
inline PolyQ resultant_in_u(const PolyU& A, const PolyU& B) {
  if (A.is_zero() && B.is_zero()) throw std::domain_error("resultant_in_u: both polynomials are zero");
  // A zero polynomial shares every root of the other operand.
  if (A.is_zero()) return B.is_constant() ? PolyQ{BigRational(1)} : PolyQ{};
  if (B.is_zero()) return A.is_constant() ? PolyQ{BigRational(1)} : PolyQ{};
  const std::size_t m = static_cast<std::size_t>(A.degree());
  const std::size_t n = static_cast<std::size_t>(B.degree());
  const std::size_t size = m + n;
  std::vector<std::vector<PolyQ>> s(size, std::vector<PolyQ>(size));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = A.coeff(m - j);
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = B.coeff(n - j);
  }
  return detail::determinant(std::move(s));
}

}  // namespace cmgf
