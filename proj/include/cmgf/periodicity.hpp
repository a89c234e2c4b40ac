#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "cmgf/sequences.hpp"

namespace cmgf {

/// Two indices in the same residue class mod k, both past the claimed
/// preperiod, on which the sequence takes different values. Existence
/// refutes eventual k-periodicity with preperiod M.
struct PeriodWitness {
  std::uint64_t k = 0;
  std::uint64_t preperiod = 0;
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
};

enum class PeriodSearchStatus {
  found,
  not_found,          // search_limit too small for the construction
  no_negative_prime,  // f(q) = +1 on every prime up to the limit; nothing to refute with
};

struct PeriodSearchResult {
  PeriodSearchStatus status = PeriodSearchStatus::not_found;
  std::optional<PeriodWitness> witness;
  std::uint64_t negative_prime = 0;  // least prime q with f(q) = -1, when one exists
};

namespace detail {

inline void validate_witness(const SequenceSpec& spec, const PeriodWitness& w,
                             const FactorSieve* sieve) {
  bool ok = w.n1 > w.preperiod && w.n2 > w.preperiod && w.n1 % w.k == w.n2 % w.k &&
            value_at(spec, w.n1, sieve) != value_at(spec, w.n2, sieve);
  if (!ok) throw std::logic_error("find_period_witness: constructed witness fails its invariants");
}

}  // namespace detail

/// Constructive refutation of eventual periodicity: pick the least prime q
/// with f(q) = -1 and the least multiple n1 = n*k > M; then n2 = q*n1 lies in
/// the same class mod k and f(n2) = -f(n1). Falls back to scanning classes
/// directly if q*n1 exceeds search_limit.
inline PeriodSearchResult find_period_witness(const SequenceSpec& spec, std::uint64_t k,
                                              std::uint64_t preperiod, std::uint64_t search_limit,
                                              const FactorSieve* sieve = nullptr) {
  if (k < 1) throw std::domain_error("find_period_witness: k must be >= 1");
  if (search_limit <= preperiod + k) {
    throw std::domain_error("find_period_witness: search_limit must exceed preperiod + k");
  }

  PeriodSearchResult res;
  std::uint64_t q = 0;
  for (std::uint64_t c = 2; c <= search_limit; ++c) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= c; ++d) {
      if (c % d == 0) {
        prime = false;
        break;
      }
    }
    if (!prime) continue;
    if (value_at(spec, c, sieve) == Sign::minus_one) {
      q = c;
      break;
    }
  }
  if (q == 0) {
    res.status = PeriodSearchStatus::no_negative_prime;
    return res;
  }
  res.negative_prime = q;

  std::uint64_t n1 = (preperiod / k + 1) * k;
  if (n1 <= search_limit / q) {
    PeriodWitness w{k, preperiod, n1, q * n1};
    detail::validate_witness(spec, w, sieve);
    res.status = PeriodSearchStatus::found;
    res.witness = w;
    return res;
  }

  // Fallback: adjacent pairs inside each residue class.
  for (std::uint64_t i = preperiod + 1; i + k <= search_limit; ++i) {
    if (value_at(spec, i, sieve) != value_at(spec, i + k, sieve)) {
      PeriodWitness w{k, preperiod, i, i + k};
      detail::validate_witness(spec, w, sieve);
      res.status = PeriodSearchStatus::found;
      res.witness = w;
      return res;
    }
  }
  res.status = PeriodSearchStatus::not_found;
  return res;
}

}  // namespace cmgf
