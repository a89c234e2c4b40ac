#pragma once

#include <gmp.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "cmgf/enclosure.hpp"
#include "cmgf/genfun.hpp"
#include "cmgf/rational.hpp"
#include "cmgf/sequences.hpp"

namespace cmgf {

enum class ConstantName {
  liouville_number_l,    // bit number of the all-primes-negative sequence
  gaussian_series_half,  // G(1/2), approx 0.701472...
  gaussian_bits_gamma,   // bit number of the Gaussian sequence, approx 0.850736...
  mod3_series_half,      // T(1/2), approx 0.397252...
  mod3_bits_tau,         // bit number of the mod-3 sequence, approx 0.698626...
  character_phi          // F(1/2) for a chosen character-like function
};

/// Whether a constant is defined as the binary number with bits (1+f_n)/2,
/// or as the generating-function value F(1/2). The two are linked by
/// bit_number = (1 + series_value)/2 because the bit weights sum to 1.
enum class ConstantDefinition { bit_number, series_value };

struct NamedConstant {
  ConstantName name = ConstantName::liouville_number_l;
  SequenceSpec seq;
  ConstantDefinition definition = ConstantDefinition::bit_number;
};

inline NamedConstant liouville_number() {
  return {ConstantName::liouville_number_l, liouville_spec(), ConstantDefinition::bit_number};
}
inline NamedConstant gaussian_series_half() {
  return {ConstantName::gaussian_series_half, gaussian_liouville_spec(),
          ConstantDefinition::series_value};
}
inline NamedConstant gaussian_bits_gamma() {
  return {ConstantName::gaussian_bits_gamma, gaussian_liouville_spec(),
          ConstantDefinition::bit_number};
}
inline NamedConstant mod3_series_half() {
  return {ConstantName::mod3_series_half, mod3_spec(), ConstantDefinition::series_value};
}
inline NamedConstant mod3_bits_tau() {
  return {ConstantName::mod3_bits_tau, mod3_spec(), ConstantDefinition::bit_number};
}
inline NamedConstant character_phi(std::uint32_t p, Sign epsilon, ResidueRule rule) {
  return {ConstantName::character_phi, character_like_spec(p, epsilon, rule),
          ConstantDefinition::series_value};
}

inline std::string constant_slug(const NamedConstant& c) {
  switch (c.name) {
    case ConstantName::liouville_number_l: return "l";
    case ConstantName::gaussian_series_half: return "g-half";
    case ConstantName::gaussian_bits_gamma: return "gamma-bits";
    case ConstantName::mod3_series_half: return "t-half";
    case ConstantName::mod3_bits_tau: return "tau-bits";
    case ConstantName::character_phi:
      return "phi(" + std::to_string(c.seq.p) + "," +
             (c.seq.epsilon == Sign::plus_one ? "+1" : "-1") + "," +
             (c.seq.rule == ResidueRule::legendre_symbol ? "legendre" : "trivial") + ")";
  }
  return "?";
}

namespace detail {

/// Exact partial sum of sum_n bit_n 2^-n up to N terms, plus tail [0, 2^-N].
inline Enclosure bit_number_enclosure(const SequenceSpec& seq, std::uint32_t n_terms) {
  std::vector<Sign> v = values_range(seq, n_terms);
  Mpz num, den;
  for (std::uint32_t n = 1; n <= n_terms; ++n) {
    mpz_mul_2exp(num.z, num.z, 1);
    if (v[n] == Sign::plus_one) mpz_add_ui(num.z, num.z, 1);
  }
  mpz_set_ui(den.z, 1);
  mpz_mul_2exp(den.z, den.z, n_terms);
  BigRational lo = BigRational::from_integers(num.z, den.z);
  return Enclosure(lo, lo + BigRational::pow2(-static_cast<long>(n_terms)));
}

}  // namespace detail

/// Enclosure of the constant of width <= 2^-precision_bits.
inline Enclosure value(const NamedConstant& c, std::uint32_t precision_bits) {
  if (precision_bits < 8) throw std::domain_error("value: precision_bits must be >= 8");
  if (c.definition == ConstantDefinition::bit_number) {
    return detail::bit_number_enclosure(c.seq, precision_bits);
  }
  GenFunSpec gf = make_genfun(c.seq);
  BigRational half(1, 2);
  return eval_closed(gf, half, closed_levels_for(gf, half, precision_bits + 1));
}

/// First n binary digits of a bit-number constant, produced two ways: read
/// off the sequence directly, and extracted from a certified enclosure. The
/// two must agree; a mismatch means an internal inconsistency.
inline std::string digits(const NamedConstant& c, std::uint32_t n_digits) {
  if (n_digits < 1) throw std::domain_error("digits: n_digits must be >= 1");
  if (c.definition != ConstantDefinition::bit_number) {
    throw std::domain_error("digits: defined only for bit-number constants");
  }
  std::vector<Sign> v = values_range(c.seq, n_digits);
  std::string direct(n_digits, '0');
  for (std::uint32_t n = 1; n <= n_digits; ++n) {
    if (v[n] == Sign::plus_one) direct[n - 1] = '1';
  }
  std::uint32_t bits = n_digits + 8;
  for (int attempt = 0; attempt < 8; ++attempt) {
    DigitResult r = to_binary_digits(value(c, bits), static_cast<int>(n_digits));
    if (r.determinate()) {
      if (*r.bits != direct) {
        throw std::logic_error("digits: sequence bits and enclosure digits disagree");
      }
      return direct;
    }
    bits *= 2;
  }
  throw std::logic_error("digits: enclosure refinement failed to settle a dyadic boundary");
}

/// Enclosure of bit_number - (1 + series_value)/2; contains zero whenever the
/// sequence has a generating-function family. Empty for the sequence with no
/// closed form.
inline std::optional<Enclosure> affine_crosscheck(const NamedConstant& c,
                                                  std::uint32_t precision_bits) {
  if (precision_bits < 8) throw std::domain_error("affine_crosscheck: precision_bits must be >= 8");
  if (c.seq.kind == SequenceKind::liouville) return std::nullopt;
  Enclosure bitnum = detail::bit_number_enclosure(c.seq, precision_bits + 2);
  GenFunSpec gf = make_genfun(c.seq);
  BigRational half(1, 2);
  Enclosure series = eval_closed(gf, half, closed_levels_for(gf, half, precision_bits + 2));
  Enclosure affine = (Enclosure::point(BigRational(1)) + series) * Enclosure::point(half);
  return bitnum - affine;
}

}  // namespace cmgf
