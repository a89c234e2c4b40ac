#pragma once

#include <gmp.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace cmgf {

/// Exact rational number with arbitrary-precision numerator and denominator.
/// Always stored canonically: gcd(|num|, den) = 1 and den >= 1.
class BigRational {
 public:
  BigRational() { mpq_init(q_); }

  BigRational(long long n) {  // NOLINT(google-explicit-constructor)
    mpq_init(q_);
    set_ll(mpq_numref(q_), n);
  }

  BigRational(long long num, long long den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    mpq_init(q_);  // a throwing constructor must not leave q_ initialized
    set_ll(mpq_numref(q_), num);
    set_ll(mpq_denref(q_), den);
    if (den < 0) {
      mpz_neg(mpq_numref(q_), mpq_numref(q_));
      mpz_neg(mpq_denref(q_), mpq_denref(q_));
    }
    mpq_canonicalize(q_);
  }

  BigRational(const BigRational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  BigRational(BigRational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  BigRational& operator=(const BigRational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  BigRational& operator=(BigRational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~BigRational() { mpq_clear(q_); }

  /// Parses "num", "num/den" or "-num/den" (base 10).
  static BigRational from_string(std::string_view s) {
    if (!looks_like_rational(s)) {
      throw std::invalid_argument("BigRational: cannot parse '" + std::string(s) + "'");
    }
    BigRational r;
    std::string buf(s.substr(s[0] == '+' ? 1 : 0));  // mpq_set_str rejects a leading '+'
    if (mpq_set_str(r.q_, buf.c_str(), 10) != 0) {
      throw std::invalid_argument("BigRational: cannot parse '" + buf + "'");
    }
    if (mpz_sgn(mpq_denref(r.q_)) == 0) {
      throw std::domain_error("BigRational: zero denominator");
    }
    if (mpz_sgn(mpq_denref(r.q_)) < 0) {
      mpz_neg(mpq_numref(r.q_), mpq_numref(r.q_));
      mpz_neg(mpq_denref(r.q_), mpq_denref(r.q_));
    }
    mpq_canonicalize(r.q_);
    return r;
  }

  /// num / den from raw GMP integers; canonicalizes.
  static BigRational from_integers(mpz_srcptr num, mpz_srcptr den) {
    if (mpz_sgn(den) == 0) throw std::domain_error("BigRational: zero denominator");
    BigRational r;
    mpz_set(mpq_numref(r.q_), num);
    mpz_set(mpq_denref(r.q_), den);
    if (mpz_sgn(mpq_denref(r.q_)) < 0) {
      mpz_neg(mpq_numref(r.q_), mpq_numref(r.q_));
      mpz_neg(mpq_denref(r.q_), mpq_denref(r.q_));
    }
    mpq_canonicalize(r.q_);
    return r;
  }

  /// 2^e for any integer e (exact).
  static BigRational pow2(long e) {
    BigRational r(1);
    if (e >= 0) {
      mpq_mul_2exp(r.q_, r.q_, static_cast<unsigned long>(e));
    } else {
      mpq_div_2exp(r.q_, r.q_, static_cast<unsigned long>(-e));
    }
    return r;
  }

  friend BigRational operator+(const BigRational& a, const BigRational& b) {
    BigRational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend BigRational operator-(const BigRational& a, const BigRational& b) {
    BigRational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend BigRational operator*(const BigRational& a, const BigRational& b) {
    BigRational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.is_zero()) throw std::domain_error("BigRational: division by zero");
    BigRational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
  }
  BigRational operator-() const {
    BigRational r;
    mpq_neg(r.q_, q_);
    return r;
  }
  BigRational& operator+=(const BigRational& b) {
    mpq_add(q_, q_, b.q_);
    return *this;
  }
  BigRational& operator-=(const BigRational& b) {
    mpq_sub(q_, q_, b.q_);
    return *this;
  }
  BigRational& operator*=(const BigRational& b) {
    mpq_mul(q_, q_, b.q_);
    return *this;
  }
  BigRational& operator/=(const BigRational& b) {
    if (b.is_zero()) throw std::domain_error("BigRational: division by zero");
    mpq_div(q_, q_, b.q_);
    return *this;
  }

  /// Integer power. Negative exponents require a nonzero base.
  BigRational pow(long long e) const {
    if (e < 0) {
      if (is_zero()) throw std::domain_error("BigRational: 0 to a negative power");
      return inverse().pow(-e);
    }
    // num^e / den^e of a canonical fraction is already canonical.
    BigRational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), static_cast<unsigned long>(e));
    return r;
  }

  BigRational inverse() const {
    if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
    BigRational r;
    mpq_inv(r.q_, q_);
    return r;
  }

  BigRational abs() const {
    BigRational r;
    mpq_abs(r.q_, q_);
    return r;
  }

  /// Exact multiplication by 2^e.
  BigRational mul_2exp(long e) const {
    BigRational r(*this);
    if (e >= 0) {
      mpq_mul_2exp(r.q_, r.q_, static_cast<unsigned long>(e));
    } else {
      mpq_div_2exp(r.q_, r.q_, static_cast<unsigned long>(-e));
    }
    return r;
  }

  int sign() const { return mpq_sgn(q_); }
  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
  friend bool operator<(const BigRational& a, const BigRational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const BigRational& a, const BigRational& b) {
    return mpq_cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return b <= a; }

  /// Bit length of |numerator| (0 for zero).
  std::size_t numerator_bits() const {
    if (is_zero()) return 0;
    return mpz_sizeinbase(mpq_numref(q_), 2);
  }
  std::size_t denominator_bits() const { return mpz_sizeinbase(mpq_denref(q_), 2); }

  /// floor(this * 2^shift) into `out`.
  void floor_mul_2exp(mpz_t out, unsigned long shift) const {
    mpz_t num;
    mpz_init(num);
    mpz_mul_2exp(num, mpq_numref(q_), shift);
    mpz_fdiv_q(out, num, mpq_denref(q_));
    mpz_clear(num);
  }

  /// "num" or "num/den".
  std::string to_string() const {
    std::string s = mpz_to_string(mpq_numref(q_));
    if (!is_integer()) {
      s += '/';
      s += mpz_to_string(mpq_denref(q_));
    }
    return s;
  }

  /// Decimal rendering truncated toward zero, e.g. -7/2 at 3 digits -> "-3.500".
  std::string to_decimal_string(std::size_t frac_digits) const {
    mpz_t num, den, quo, rem, scale;
    mpz_inits(num, den, quo, rem, scale, nullptr);
    mpz_abs(num, mpq_numref(q_));
    mpz_set(den, mpq_denref(q_));
    mpz_tdiv_qr(quo, rem, num, den);
    std::string s = (sign() < 0) ? "-" : "";
    s += mpz_to_string(quo);
    if (frac_digits > 0) {
      mpz_ui_pow_ui(scale, 10, frac_digits);
      mpz_mul(rem, rem, scale);
      mpz_tdiv_q(rem, rem, den);
      std::string frac = mpz_to_string(rem);
      s += '.';
      s += std::string(frac_digits - frac.size(), '0');
      s += frac;
    }
    mpz_clears(num, den, quo, rem, scale, nullptr);
    return s;
  }

  mpq_srcptr raw() const { return q_; }

 private:
  static void set_ll(mpz_t z, long long v) {
    bool neg = v < 0;
    auto mag = neg ? static_cast<unsigned long long>(-(v + 1)) + 1
                   : static_cast<unsigned long long>(v);
    mpz_set_ui(z, static_cast<unsigned long>(mag >> 32));
    mpz_mul_2exp(z, z, 32);
    mpz_add_ui(z, z, static_cast<unsigned long>(mag & 0xffffffffULL));
    if (neg) mpz_neg(z, z);
  }

  static std::string mpz_to_string(mpz_srcptr z) {
    std::size_t n = mpz_sizeinbase(z, 10) + 2;
    std::string buf(n, '\0');
    mpz_get_str(buf.data(), 10, z);
    buf.resize(buf.find('\0'));
    return buf;
  }

  static bool looks_like_rational(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool saw_digit = false, saw_slash = false;
    for (; i < s.size(); ++i) {
      char c = s[i];
      if (c >= '0' && c <= '9') {
        saw_digit = true;
      } else if (c == '/' && saw_digit && !saw_slash) {
        saw_slash = true;
        saw_digit = false;
      } else {
        return false;
      }
    }
    return saw_digit;
  }

  mpq_t q_;
};

}  // namespace cmgf
