#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "cmgf/rational.hpp"

namespace cmgf {

/// Element of Q(i): exact Gaussian rational with i^2 = -1.
struct GaussianRational {
  BigRational re;
  BigRational im;

  GaussianRational() = default;
  GaussianRational(BigRational r) : re(std::move(r)) {}  // NOLINT
  GaussianRational(long long r) : re(r) {}               // NOLINT
  GaussianRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational unit_i() { return {BigRational(0), BigRational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  GaussianRational conjugate() const { return {re, -im}; }
  BigRational norm() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    BigRational n = b.norm();
    GaussianRational c = a * b.conjugate();
    return {c.re / n, c.im / n};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::string to_string() const {
    if (im.is_zero()) return re.to_string();
    std::string s = re.is_zero() ? "" : re.to_string();
    if (im.sign() > 0 && !s.empty()) s += "+";
    if (im == BigRational(-1)) {
      s += "-";
    } else if (im != BigRational(1)) {
      s += im.to_string() + "*";
    }
    s += "i";
    return s;
  }
};

}  // namespace cmgf
