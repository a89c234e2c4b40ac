#pragma once

#include <gmp.h>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "cmgf/rational.hpp"

namespace cmgf {

/// Certified interval [lo, hi] of exact rationals, guaranteed to contain the
/// real number it stands for. Width hi - lo is the error budget.
class Enclosure {
 public:
  Enclosure() = default;
  Enclosure(BigRational lo, BigRational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw std::invalid_argument("Enclosure: lo > hi");
  }

  static Enclosure point(BigRational x) { return Enclosure(x, x); }

  /// [center - radius, center + radius]; radius must be >= 0.
  static Enclosure ball(const BigRational& center, const BigRational& radius) {
    if (radius.sign() < 0) throw std::invalid_argument("Enclosure: negative radius");
    return Enclosure(center - radius, center + radius);
  }

  const BigRational& lo() const { return lo_; }
  const BigRational& hi() const { return hi_; }
  BigRational width() const { return hi_ - lo_; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const BigRational& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool contains(const Enclosure& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool intersects(const Enclosure& other) const {
    return !(hi_ < other.lo_ || other.hi_ < lo_);
  }

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo_ - b.hi_, a.hi_ - b.lo_);
  }
  Enclosure operator-() const { return Enclosure(-hi_, -lo_); }
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    BigRational p1 = a.lo_ * b.lo_;
    BigRational p2 = a.lo_ * b.hi_;
    BigRational p3 = a.hi_ * b.lo_;
    BigRational p4 = a.hi_ * b.hi_;
    return Enclosure(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
  }

  /// ceil(-log2(width)): the number of correct bits certified by this
  /// enclosure. nullopt for exact (width zero) enclosures.
  std::optional<long> width_bits() const {
    BigRational w = width();
    if (w.is_zero()) return std::nullopt;
    long e = static_cast<long>(w.denominator_bits()) - static_cast<long>(w.numerator_bits()) - 1;
    // smallest e with w * 2^e >= 1
    while (w.mul_2exp(e) < BigRational(1)) ++e;
    while (e > std::numeric_limits<long>::min() && w.mul_2exp(e - 1) >= BigRational(1)) --e;
    return e;
  }

 private:
  BigRational lo_;
  BigRational hi_;
};

/// Result of extracting binary digits from an enclosure: either the digit
/// string shared by both endpoints, or the 1-based index of the first digit
/// on which they straddle a dyadic boundary.
struct DigitResult {
  std::optional<std::string> bits;
  int boundary_digit = 0;  // meaningful only when !bits

  bool determinate() const { return bits.has_value(); }
};

/// First n_digits binary digits after the point of a number in [0, 1).
/// Emits digits only when both endpoints agree on all of them; otherwise
/// reports the position of the first disagreement so the caller can refine.
inline DigitResult to_binary_digits(const Enclosure& x, int n_digits) {
  if (n_digits < 1) throw std::domain_error("to_binary_digits: n_digits must be >= 1");
  if (x.lo().sign() < 0 || x.hi() >= BigRational(1)) {
    throw std::domain_error("to_binary_digits: enclosure must lie in [0, 1)");
  }
  mpz_t a, b;
  mpz_inits(a, b, nullptr);
  x.lo().floor_mul_2exp(a, static_cast<unsigned long>(n_digits));
  x.hi().floor_mul_2exp(b, static_cast<unsigned long>(n_digits));
  DigitResult res;
  if (mpz_cmp(a, b) == 0) {
    std::string s(static_cast<std::size_t>(n_digits), '0');
    for (int i = 0; i < n_digits; ++i) {
      if (mpz_tstbit(a, static_cast<mp_bitcnt_t>(n_digits - 1 - i))) s[static_cast<std::size_t>(i)] = '1';
    }
    res.bits = std::move(s);
  } else {
    mpz_xor(a, a, b);
    int highest = static_cast<int>(mpz_sizeinbase(a, 2)) - 1;  // 0-based from LSB
    res.boundary_digit = n_digits - highest;
  }
  mpz_clears(a, b, nullptr);
  return res;
}

}  // namespace cmgf
