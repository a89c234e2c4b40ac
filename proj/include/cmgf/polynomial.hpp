#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cmgf/gaussian_rational.hpp"
#include "cmgf/rational.hpp"

namespace cmgf {

/// Dense univariate polynomial, coefficients lowest degree first. The zero
/// polynomial is the empty coefficient list; otherwise the top coefficient is
/// nonzero. Ring operations need only +,-,* on C, so C may itself be a
/// Polynomial (used for polynomials in u over Q[z]). divrem/gcd need C to be
/// a field.
template <typename C>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<C> coeffs) : c_(coeffs) { normalize(); }

  static Polynomial monomial(C coeff, std::size_t degree) {
    std::vector<C> v(degree + 1);
    v[degree] = std::move(coeff);
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_constant() const { return c_.size() <= 1; }

  /// Coefficient of degree i (zero beyond the stored range).
  C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C{}; }
  const std::vector<C>& coeffs() const { return c_; }
  const C& leading() const {
    if (is_zero()) throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
    return c_.back();
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<C> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<C> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(v));
  }
  Polynomial operator-() const {
    std::vector<C> v(c_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -c_[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
  }

  Polynomial scaled(const C& s) const {
    std::vector<C> v(c_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = c_[i] * s;
    return Polynomial(std::move(v));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Horner evaluation at x (X needs *, + with C).
  template <typename X>
  X evaluate(const X& x) const {
    X acc{};
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + X(c_[i]);
    return acc;
  }

  /// P(z) -> P(z^d).
  Polynomial compose_power(std::size_t d) const {
    if (d == 0) throw std::domain_error("compose_power: exponent must be >= 1");
    if (is_zero()) return {};
    std::vector<C> v((c_.size() - 1) * d + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * d] = c_[i];
    return Polynomial(std::move(v));
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<C> c_;
};

/// Quotient and remainder with deg r < deg d. Requires field coefficients.
template <typename C>
std::pair<Polynomial<C>, Polynomial<C>> divrem(const Polynomial<C>& n, const Polynomial<C>& d) {
  if (d.is_zero()) throw std::domain_error("divrem: division by the zero polynomial");
  if (n.degree() < d.degree()) return {Polynomial<C>{}, n};
  std::vector<C> rem(n.coeffs());
  std::vector<C> quo(static_cast<std::size_t>(n.degree() - d.degree()) + 1);
  const C& lead = d.leading();
  for (int k = n.degree() - d.degree(); k >= 0; --k) {
    C q = rem[static_cast<std::size_t>(k + d.degree())] / lead;
    quo[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= d.degree(); ++j) {
      rem[static_cast<std::size_t>(k + j)] =
          rem[static_cast<std::size_t>(k + j)] - q * d.coeff(static_cast<std::size_t>(j));
    }
  }
  return {Polynomial<C>(std::move(quo)), Polynomial<C>(std::move(rem))};
}

/// Exact quotient; throws if the division leaves a remainder.
template <typename C>
Polynomial<C> exact_div(const Polynomial<C>& n, const Polynomial<C>& d) {
  auto [q, r] = divrem(n, d);
  if (!r.is_zero()) throw std::logic_error("exact_div: division is not exact");
  return q;
}

template <typename C>
bool divides(const Polynomial<C>& d, const Polynomial<C>& n) {
  if (d.is_zero()) throw std::domain_error("divides: zero divisor");
  return divrem(n, d).second.is_zero();
}

/// Monic gcd by the Euclidean algorithm (field coefficients).
template <typename C>
Polynomial<C> poly_gcd(Polynomial<C> a, Polynomial<C> b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  C inv = C(1) / a.leading();
  return a.scaled(inv);
}

namespace detail {

inline std::string coeff_to_string(const BigRational& c) { return c.to_string(); }
inline std::string coeff_to_string(const GaussianRational& c) {
  return c.im.is_zero() ? c.to_string() : "(" + c.to_string() + ")";
}
inline bool coeff_is_one(const BigRational& c) { return c == BigRational(1); }
inline bool coeff_is_minus_one(const BigRational& c) { return c == BigRational(-1); }
inline bool coeff_is_one(const GaussianRational& c) { return c == GaussianRational(1); }
inline bool coeff_is_minus_one(const GaussianRational& c) {
  return c == GaussianRational(BigRational(-1));
}
inline bool coeff_negative(const BigRational& c) { return c.sign() < 0; }
inline bool coeff_negative(const GaussianRational& c) {
  return c.im.is_zero() && c.re.sign() < 0;
}

}  // namespace detail

/// Human-readable rendering, ascending powers: "1 - z^3", "z - z^2 + 2/3 z^5".
template <typename C>
std::string to_string(const Polynomial<C>& p, const std::string& var = "z") {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const C& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    C display = c;
    if (out.empty()) {
      if (detail::coeff_negative(c)) {
        out += "-";
        display = -c;
      }
    } else {
      if (detail::coeff_negative(c)) {
        out += " - ";
        display = -c;
      } else {
        out += " + ";
      }
    }
    bool unit = detail::coeff_is_one(display);
    if (i == 0) {
      out += detail::coeff_to_string(display);
    } else {
      if (!unit) out += detail::coeff_to_string(display) + " ";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

using PolyQ = Polynomial<BigRational>;
using PolyGauss = Polynomial<GaussianRational>;

}  // namespace cmgf
