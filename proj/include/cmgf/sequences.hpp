#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmgf {

/// Value of a +-1 sequence. No zero: completely multiplicative functions
/// into {-1, +1} only.
enum class Sign : int { minus_one = -1, plus_one = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

inline Sign sign_from_int(int v) {
  if (v == 1) return Sign::plus_one;
  if (v == -1) return Sign::minus_one;
  throw std::domain_error("Sign: value must be +1 or -1");
}

inline Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::plus_one : Sign::minus_one;
}
inline Sign operator-(Sign a) {
  return a == Sign::plus_one ? Sign::minus_one : Sign::plus_one;
}

enum class SequenceKind { liouville, gaussian_liouville, mod3, character_like };

/// How a character-like function assigns signs on residues coprime to p.
/// These are the only two assignments that keep the function completely
/// multiplicative.
enum class ResidueRule { legendre_symbol, trivial };

/// Jacobi symbol (a/n) for odd n >= 1, by binary reciprocity.
/// Returns 0 exactly when gcd(a, n) > 1.
inline int jacobi(std::int64_t a, std::uint64_t n) {
  if (n == 0 || n % 2 == 0) throw std::domain_error("jacobi: n must be odd and positive");
  int t = 1;
  std::uint64_t ua;
  if (a < 0) {
    // (-1/n) = (-1)^((n-1)/2)
    ua = static_cast<std::uint64_t>(-(a + 1)) + 1;  // |a| without overflow at INT64_MIN
    if (n % 4 == 3) t = -t;
  } else {
    ua = static_cast<std::uint64_t>(a);
  }
  ua %= n;
  while (ua != 0) {
    while (ua % 2 == 0) {
      ua /= 2;
      std::uint64_t r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(ua, n);
    if (ua % 4 == 3 && n % 4 == 3) t = -t;
    ua %= n;
  }
  return n == 1 ? t : 0;
}

namespace detail {

inline bool is_odd_prime_u32(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint32_t d = 3; d * static_cast<std::uint64_t>(d) <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace detail

/// Which completely multiplicative +-1 function is meant.
struct SequenceSpec {
  SequenceKind kind = SequenceKind::liouville;
  std::uint32_t p = 0;                         // character_like only
  Sign epsilon = Sign::plus_one;               // value at p, character_like only
  ResidueRule rule = ResidueRule::legendre_symbol;

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;
};

inline SequenceSpec liouville_spec() { return {SequenceKind::liouville, 0, Sign::plus_one, ResidueRule::legendre_symbol}; }
inline SequenceSpec gaussian_liouville_spec() { return {SequenceKind::gaussian_liouville, 0, Sign::plus_one, ResidueRule::legendre_symbol}; }
inline SequenceSpec mod3_spec() { return {SequenceKind::mod3, 0, Sign::plus_one, ResidueRule::legendre_symbol}; }

inline SequenceSpec character_like_spec(std::uint32_t p, Sign epsilon, ResidueRule rule) {
  if (!detail::is_odd_prime_u32(p)) {
    throw std::domain_error("character_like_spec: p must be an odd prime");
  }
  return {SequenceKind::character_like, p, epsilon, rule};
}

inline std::string to_string(const SequenceSpec& s) {
  switch (s.kind) {
    case SequenceKind::liouville: return "liouville";
    case SequenceKind::gaussian_liouville: return "gaussian";
    case SequenceKind::mod3: return "mod3";
    case SequenceKind::character_like:
      return "character(p=" + std::to_string(s.p) +
             ",eps=" + (s.epsilon == Sign::plus_one ? std::string("+1") : std::string("-1")) +
             ",rule=" + (s.rule == ResidueRule::legendre_symbol ? "legendre" : "trivial") + ")";
  }
  return "?";
}

/// Smallest-prime-factor table for 2..limit.
struct FactorSieve {
  std::uint32_t limit = 0;
  std::vector<std::uint32_t> spf;  // spf[n] = smallest prime factor, n >= 2

  bool is_prime(std::uint32_t n) const { return n >= 2 && spf[n] == n; }
};

/// Linear sieve: O(limit) time, 4(limit+1) bytes.
inline FactorSieve build_sieve(std::uint32_t limit) {
  if (limit < 2) throw std::domain_error("build_sieve: limit must be >= 2");
  FactorSieve s;
  s.limit = limit;
  s.spf.assign(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t n = 2; n <= limit; ++n) {
    if (s.spf[n] == 0) {
      s.spf[n] = n;
      primes.push_back(n);
    }
    for (std::uint32_t q : primes) {
      std::uint64_t m = static_cast<std::uint64_t>(q) * n;
      if (q > s.spf[n] || m > limit) break;
      s.spf[m] = q;
    }
  }
  return s;
}

namespace detail {

inline Sign prime_sign(const SequenceSpec& spec, std::uint64_t q) {
  switch (spec.kind) {
    case SequenceKind::liouville:
      return Sign::minus_one;
    case SequenceKind::gaussian_liouville:
      return q % 4 == 3 ? Sign::minus_one : Sign::plus_one;
    case SequenceKind::mod3:
      if (q == 3) return Sign::plus_one;
      return q % 3 == 2 ? Sign::minus_one : Sign::plus_one;
    case SequenceKind::character_like:
      if (q == spec.p) return spec.epsilon;
      if (spec.rule == ResidueRule::trivial) return Sign::plus_one;
      return sign_from_int(jacobi(static_cast<std::int64_t>(q % spec.p), spec.p));
  }
  throw std::logic_error("prime_sign: bad kind");
}

}  // namespace detail

/// f(n) via the factorization of n. Uses the sieve when supplied and n is in
/// range, otherwise trial division.
inline Sign value_at(const SequenceSpec& spec, std::uint64_t n, const FactorSieve* sieve = nullptr) {
  if (n == 0) throw std::domain_error("value_at: n must be >= 1");
  Sign result = Sign::plus_one;
  if (sieve != nullptr && n <= sieve->limit) {
    auto m = static_cast<std::uint32_t>(n);
    while (m > 1) {
      std::uint32_t q = sieve->spf[m];
      result = result * detail::prime_sign(spec, q);
      m /= q;
    }
    return result;
  }
  std::uint64_t m = n;
  for (std::uint64_t q = 2; q * q <= m; q += (q == 2 ? 1 : 2)) {
    while (m % q == 0) {
      result = result * detail::prime_sign(spec, q);
      m /= q;
    }
  }
  if (m > 1) result = result * detail::prime_sign(spec, m);
  return result;
}

/// Bulk values f(1..limit), 1-based ([0] is padding). Linear in limit on top
/// of the sieve: f(n) = f(spf(n)) * f(n / spf(n)).
inline std::vector<Sign> values_range(const SequenceSpec& spec, std::uint32_t limit,
                                      const FactorSieve& sieve) {
  if (limit < 1) throw std::domain_error("values_range: limit must be >= 1");
  if (sieve.limit < limit) throw std::domain_error("values_range: sieve too small");
  std::vector<Sign> v(static_cast<std::size_t>(limit) + 1, Sign::plus_one);
  for (std::uint32_t n = 2; n <= limit; ++n) {
    std::uint32_t q = sieve.spf[n];
    v[n] = detail::prime_sign(spec, q) * v[n / q];
  }
  return v;
}

inline std::vector<Sign> values_range(const SequenceSpec& spec, std::uint32_t limit) {
  if (limit < 1) throw std::domain_error("values_range: limit must be >= 1");
  if (limit == 1) return {Sign::plus_one, Sign::plus_one};
  return values_range(spec, limit, build_sieve(limit));
}

/// One broken recurrence instance: which rule and at which index.
struct RecurrenceViolation {
  std::string rule;
  std::uint64_t index = 0;
};

namespace detail {

/// Core recurrence check over a precomputed value table (1-based).
/// Split out so tests can feed deliberately corrupted tables.
inline std::vector<RecurrenceViolation> check_recurrences_on(std::span<const Sign> v,
                                                             const SequenceSpec& spec) {
  std::vector<RecurrenceViolation> out;
  const std::uint64_t limit = v.size() - 1;
  switch (spec.kind) {
    case SequenceKind::liouville:
      // No modulus recurrences hold for the all-primes-negative function.
      break;
    case SequenceKind::gaussian_liouville:
      for (std::uint64_t n = 1; 2 * n <= limit; ++n) {
        if (v[2 * n] != v[n]) out.push_back({"g(2n)=g(n)", 2 * n});
      }
      for (std::uint64_t k = 0; 4 * k + 3 <= limit; ++k) {
        if (v[4 * k + 1] != -v[4 * k + 3]) out.push_back({"g(4k+1)=-g(4k+3)", 4 * k + 1});
      }
      break;
    case SequenceKind::mod3:
      for (std::uint64_t n = 1; 3 * n <= limit; ++n) {
        if (v[3 * n] != v[n]) out.push_back({"t(3n)=t(n)", 3 * n});
      }
      for (std::uint64_t n = 0; 3 * n + 1 <= limit; ++n) {
        if (v[3 * n + 1] != Sign::plus_one) out.push_back({"t(3n+1)=+1", 3 * n + 1});
      }
      for (std::uint64_t n = 0; 3 * n + 2 <= limit; ++n) {
        if (v[3 * n + 2] != Sign::minus_one) out.push_back({"t(3n+2)=-1", 3 * n + 2});
      }
      break;
    case SequenceKind::character_like: {
      const std::uint64_t p = spec.p;
      for (std::uint64_t i = 1; i < p && i <= limit; ++i) {
        for (std::uint64_t n = i + p; n <= limit; n += p) {
          if (v[n] != v[i]) out.push_back({"f(kp+i)=f(i)", n});
        }
      }
      for (std::uint64_t n = 1; p * n <= limit; ++n) {
        if (v[p * n] != spec.epsilon * v[n]) out.push_back({"f(pn)=eps*f(n)", p * n});
      }
      break;
    }
  }
  return out;
}

}  // namespace detail

/// Verifies the kind's defining recurrences on 1..limit; empty means all hold.
inline std::vector<RecurrenceViolation> check_recurrences(const SequenceSpec& spec,
                                                          std::uint32_t limit) {
  if (limit < 8) throw std::domain_error("check_recurrences: limit must be >= 8");
  std::vector<Sign> v = values_range(spec, limit);
  return detail::check_recurrences_on(v, spec);
}

}  // namespace cmgf
