#pragma once

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cmgf/enclosure.hpp"
#include "cmgf/fekete.hpp"
#include "cmgf/polynomial.hpp"
#include "cmgf/rational.hpp"
#include "cmgf/sequences.hpp"

namespace cmgf {

/// The three generating-function families with one-step functional
/// equations: G (Gaussian Liouville, base 2), T (mod-3, base 3), and F
/// (character-like, base p).
enum class Family { gaussian_g, mod3_t, character_f };

/// Evaluation data for one family: the sequence, the substitution base d,
/// the sign at the base, and (for F) the kernel polynomial Phi.
struct GenFunSpec {
  Family family = Family::gaussian_g;
  SequenceSpec seq;
  std::uint32_t base = 2;
  Sign base_sign = Sign::plus_one;
  PolyQ kernel;  // F only: sum f_i z^i, i = 1..p-1
};

inline GenFunSpec genfun_gaussian() {
  return {Family::gaussian_g, gaussian_liouville_spec(), 2, Sign::plus_one, {}};
}
inline GenFunSpec genfun_mod3() {
  return {Family::mod3_t, mod3_spec(), 3, Sign::plus_one, {}};
}
inline GenFunSpec genfun_character(std::uint32_t p, Sign epsilon, ResidueRule rule) {
  return {Family::character_f, character_like_spec(p, epsilon, rule), p, epsilon,
          fekete(p, epsilon, rule)};
}

/// Family for a sequence. The all-primes-negative sequence has no one-step
/// functional equation, so it has no family here.
inline GenFunSpec make_genfun(const SequenceSpec& seq) {
  switch (seq.kind) {
    case SequenceKind::gaussian_liouville: return genfun_gaussian();
    case SequenceKind::mod3: return genfun_mod3();
    case SequenceKind::character_like: return genfun_character(seq.p, seq.epsilon, seq.rule);
    case SequenceKind::liouville:
      throw std::domain_error("make_genfun: no generating-function family for this sequence");
  }
  throw std::logic_error("make_genfun: bad kind");
}

inline std::string family_name(const GenFunSpec& s) {
  switch (s.family) {
    case Family::gaussian_g: return "G";
    case Family::mod3_t: return "T";
    case Family::character_f: return "F";
  }
  return "?";
}

namespace detail {

inline void require_inside_unit_disk(const BigRational& z) {
  if (z.abs() >= BigRational(1)) throw std::domain_error("evaluation point must satisfy |z| < 1");
}

inline std::uint64_t checked_pow_u64(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  const std::uint64_t cap = std::uint64_t{1} << 62;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (r > cap / base) throw std::domain_error("exponent overflow: d^k too large");
    r *= base;
  }
  return r;
}

// Refuse powers whose representation would exceed ~2^30 bits (128 MiB per
// integer); GMP aborts the process on failed allocations, so catch absurd
// depth requests here instead.
inline void require_pow_budget(const BigRational& base, std::uint64_t exponent) {
  const std::uint64_t budget = std::uint64_t{1} << 30;
  std::uint64_t bits = std::max<std::uint64_t>(
      1, std::max(base.numerator_bits(), base.denominator_bits()));
  if (exponent > budget / bits) {
    throw std::domain_error("power too large to represent exactly; lower the depth");
  }
}

struct Mpz {
  mpz_t z;
  Mpz() { mpz_init(z); }
  Mpz(const Mpz&) = delete;
  Mpz& operator=(const Mpz&) = delete;
  Mpz(Mpz&& o) noexcept {
    mpz_init(z);
    mpz_swap(z, o.z);
  }
  Mpz& operator=(Mpz&& o) noexcept {
    mpz_swap(z, o.z);
    return *this;
  }
  ~Mpz() { mpz_clear(z); }
};

/// F-family closed-form term Phi(w) / (1 - w^p) for w = num/den, assembled in
/// integer arithmetic: with N = sum f_i num^i den^(p-1-i) the term equals
/// N * den / (den^p - num^p). Keeps GMP out of repeated rational gcds on
/// multi-megabit operands.
inline BigRational character_closed_term(const PolyQ& kernel, std::uint32_t p,
                                         const BigRational& w, bool negate) {
  mpq_srcptr wq = w.raw();
  Mpz acc, tmp, num, den, apow;
  std::vector<Mpz> bpow(p);  // bpow[j].z = den^j
  mpz_set_ui(bpow[0].z, 1);
  for (std::uint32_t j = 1; j < p; ++j) mpz_mul(bpow[j].z, bpow[j - 1].z, mpq_denref(wq));
  // Horner over i = p-1 .. 1 (kernel coefficients are +-1, constant term 0)
  mpz_set_si(acc.z, kernel.coeff(p - 1).sign());
  for (std::uint32_t i = p - 2; i >= 1; --i) {
    mpz_mul(acc.z, acc.z, mpq_numref(wq));
    if (kernel.coeff(i).sign() >= 0) {
      mpz_add(acc.z, acc.z, bpow[p - 1 - i].z);
    } else {
      mpz_sub(acc.z, acc.z, bpow[p - 1 - i].z);
    }
  }
  mpz_mul(acc.z, acc.z, mpq_numref(wq));
  // den^p - num^p
  mpz_mul(den.z, bpow[p - 1].z, mpq_denref(wq));
  mpz_pow_ui(apow.z, mpq_numref(wq), p);
  mpz_sub(den.z, den.z, apow.z);
  mpz_mul(num.z, acc.z, mpq_denref(wq));
  if (negate) mpz_neg(num.z, num.z);
  return BigRational::from_integers(num.z, den.z);
}

/// Closed-form term at level k, given w = z^(d^k).
inline BigRational closed_term_at(const GenFunSpec& spec, const BigRational& w, std::uint32_t k) {
  switch (spec.family) {
    case Family::gaussian_g:
      return w / (BigRational(1) + w * w);
    case Family::mod3_t:
      return w / (BigRational(1) + w + w * w);
    case Family::character_f: {
      bool negate = spec.base_sign == Sign::minus_one && (k % 2 == 1);
      return character_closed_term(spec.kernel, spec.base, w, negate);
    }
  }
  throw std::logic_error("closed_term_at: bad family");
}

// Above this many bits in z^(d^K), the tail switches from the exact rational
// bound to a dyadic upper bound of it (power-of-two denominator), keeping
// the enclosure endpoints cheap to combine.
constexpr std::size_t kExactTailBitLimit = 1u << 16;

/// Upper bound for the closed-form tail after K levels, given w = z^(d^K):
/// c * |z|^(d^K) / ((1-|z|)(1-|z|^d)) with c = p-1 for F, 1 for G and T.
inline BigRational closed_tail_from(const GenFunSpec& spec, const BigRational& z,
                                    const BigRational& w_K) {
  const std::uint32_t c = spec.family == Family::character_f ? spec.base - 1 : 1;
  BigRational az = z.abs();
  BigRational small = (BigRational(1) - az) * (BigRational(1) - az.pow(spec.base));
  if (w_K.is_zero()) return BigRational(0);
  if (w_K.numerator_bits() + w_K.denominator_bits() <= kExactTailBitLimit) {
    return BigRational(static_cast<long long>(c)) * w_K.abs() / small;
  }
  // |w_K| <= 2^-(e), 1/small <= 2^q, c <= 2^cb
  long e = static_cast<long>(w_K.denominator_bits()) - static_cast<long>(w_K.numerator_bits()) - 1;
  long q = static_cast<long>(small.denominator_bits()) - static_cast<long>(small.numerator_bits()) + 1;
  long cb = 1;
  while ((std::uint32_t{1} << cb) < c) ++cb;
  long total = e - q - cb;
  if (total < 1) {  // not actually in the asymptotic regime; stay exact
    return BigRational(static_cast<long long>(c)) * w_K.abs() / small;
  }
  return BigRational::pow2(-total);
}

}  // namespace detail

/// Exact k-th term of the closed-form (lacunary) series at z.
inline BigRational closed_term(const GenFunSpec& spec, const BigRational& z, std::uint32_t k) {
  detail::require_inside_unit_disk(z);
  std::uint64_t e = detail::checked_pow_u64(spec.base, k);
  detail::require_pow_budget(z, e);
  return detail::closed_term_at(spec, z.pow(static_cast<long long>(e)), k);
}

/// Exact m-term kernel sum (the W_m / U_m / V_m partial sums).
inline BigRational partial_kernel(const GenFunSpec& spec, const BigRational& z, std::uint32_t m) {
  detail::require_inside_unit_disk(z);
  if (m > 0) detail::require_pow_budget(z, detail::checked_pow_u64(spec.base, m - 1));
  BigRational sum(0);
  BigRational w = z;
  for (std::uint32_t k = 0; k < m; ++k) {
    sum += detail::closed_term_at(spec, w, k);
    if (k + 1 < m) w = w.pow(spec.base);
  }
  return sum;
}

/// One-step functional-equation kernel: z/(1+z^2) for G, z/(1+z+z^2) for T,
/// Phi(z)/(1-z^p) for F.
inline BigRational one_step_kernel(const GenFunSpec& spec, const BigRational& z) {
  detail::require_inside_unit_disk(z);
  return detail::closed_term_at(spec, z, 0);
}

/// Truncated power-series evaluation: exact sum of f_n z^n for n <= n_terms,
/// widened by the geometric tail bound |z|^(N+1)/(1-|z|).
inline Enclosure eval_direct(const GenFunSpec& spec, const BigRational& z, std::uint32_t n_terms) {
  detail::require_inside_unit_disk(z);
  if (n_terms < 1) throw std::domain_error("eval_direct: n_terms must be >= 1");
  std::vector<Sign> v = values_range(spec.seq, n_terms);
  BigRational sum(0);
  BigRational w(1);
  for (std::uint32_t n = 1; n <= n_terms; ++n) {
    w *= z;
    if (v[n] == Sign::plus_one) {
      sum += w;
    } else {
      sum -= w;
    }
  }
  BigRational az = z.abs();
  BigRational tail = az.pow(static_cast<long long>(n_terms) + 1) / (BigRational(1) - az);
  return Enclosure::ball(sum, tail);
}

/// Closed-form (lacunary series) evaluation: exact sum of the first n_levels
/// terms plus a tail certified by the doubly exponential bound.
inline Enclosure eval_closed(const GenFunSpec& spec, const BigRational& z, std::uint32_t n_levels) {
  detail::require_inside_unit_disk(z);
  if (n_levels < 1) throw std::domain_error("eval_closed: n_levels must be >= 1");
  detail::require_pow_budget(z, detail::checked_pow_u64(spec.base, n_levels));
  BigRational sum(0);
  BigRational w = z;
  for (std::uint32_t k = 0; k < n_levels; ++k) {
    sum += detail::closed_term_at(spec, w, k);
    w = w.pow(spec.base);
  }
  // loop leaves w = z^(d^K), exactly what the tail bound needs
  BigRational tail = detail::closed_tail_from(spec, z, w);
  return Enclosure::ball(sum, tail);
}

/// Smallest N with |z|^(N+1)/(1-|z|) <= 2^-bits.
inline std::uint32_t direct_terms_for(const BigRational& z, std::uint32_t bits) {
  detail::require_inside_unit_disk(z);
  BigRational az = z.abs();
  BigRational thresh = BigRational::pow2(-static_cast<long>(bits)) * (BigRational(1) - az);
  BigRational w = az * az;
  std::uint32_t n = 1;
  while (w > thresh) {
    w *= az;
    ++n;
    if (n > (std::uint32_t{1} << 26)) throw std::domain_error("direct_terms_for: precision unreachable");
  }
  return n;
}

/// Smallest K >= 1 with the closed-form tail at K levels <= 2^-bits.
inline std::uint32_t closed_levels_for(const GenFunSpec& spec, const BigRational& z,
                                       std::uint32_t bits) {
  detail::require_inside_unit_disk(z);
  const std::uint32_t c = spec.family == Family::character_f ? spec.base - 1 : 1;
  BigRational az = z.abs();
  BigRational small = (BigRational(1) - az) * (BigRational(1) - az.pow(spec.base));
  BigRational thresh =
      BigRational::pow2(-static_cast<long>(bits)) * small / BigRational(static_cast<long long>(c));
  BigRational w = az.pow(spec.base);
  std::uint32_t k = 1;
  while (w > thresh) {
    detail::checked_pow_u64(spec.base, k + 1);
    w = w.pow(spec.base);
    ++k;
  }
  return k;
}

/// Residual of the one-step functional equation, both sides evaluated
/// independently through the closed form. Must contain zero:
///   G(z^2) - G(z) + z/(1+z^2),  T(z^3) - T(z) + z/(1+z+z^2),
///   F(z) - f_p F(z^p) - Phi(z)/(1-z^p).
inline Enclosure functional_equation_residual(const GenFunSpec& spec, const BigRational& z,
                                              std::uint32_t precision_bits) {
  detail::require_inside_unit_disk(z);
  const std::uint32_t side_bits = precision_bits + 2;
  BigRational zd = z.pow(spec.base);
  Enclosure at_z = eval_closed(spec, z, closed_levels_for(spec, z, side_bits));
  Enclosure at_zd = eval_closed(spec, zd, closed_levels_for(spec, zd, side_bits));
  Enclosure kernel = Enclosure::point(one_step_kernel(spec, z));
  if (spec.family == Family::character_f) {
    Enclosure scaled = spec.base_sign == Sign::minus_one ? -at_zd : at_zd;
    return at_z - scaled - kernel;
  }
  return at_zd - at_z + kernel;
}

/// Residual of the m-fold telescoped identity, each side through independent
/// truncated direct sums. Must contain zero:
///   G(z^(2^m)) - G(z) + W_m(z)  (same shape for T), and
///   F(z) - f_p^m F(z^(p^m)) - V_m(z).
inline Enclosure telescoping_residual(const GenFunSpec& spec, const BigRational& z, std::uint32_t m,
                                      std::uint32_t precision_bits) {
  detail::require_inside_unit_disk(z);
  if (m < 1) throw std::domain_error("telescoping_residual: m must be >= 1");
  const std::uint32_t side_bits = precision_bits + 2;
  std::uint64_t e = detail::checked_pow_u64(spec.base, m);
  detail::require_pow_budget(z, e);
  BigRational ziter = z.pow(static_cast<long long>(e));
  Enclosure at_z = eval_direct(spec, z, direct_terms_for(z, side_bits));
  Enclosure at_ziter = eval_direct(spec, ziter, direct_terms_for(ziter, side_bits));
  Enclosure kernel = Enclosure::point(partial_kernel(spec, z, m));
  if (spec.family == Family::character_f) {
    bool negate = spec.base_sign == Sign::minus_one && (m % 2 == 1);
    Enclosure scaled = negate ? -at_ziter : at_ziter;
    return at_z - scaled - kernel;
  }
  return at_ziter - at_z + kernel;
}

}  // namespace cmgf
