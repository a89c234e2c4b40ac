#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "cmgf/rational.hpp"
#include "cmgf/sequences.hpp"

namespace cmgf {

/// Descriptive statistics of a +-1 sequence prefix. No inference is made
/// from these numbers; they describe the prefix and nothing more.
struct NormalityStats {
  std::uint64_t n = 0;
  std::uint64_t plus_count = 0;
  BigRational plus_frequency;            // plus_count / n, exact
  std::int64_t partial_sum = 0;          // sum of f_1..f_n
  std::uint64_t max_abs_partial_sum = 0; // running max of |sum f_1..f_x|
};

inline NormalityStats simple_normality_stats(const SequenceSpec& spec, std::uint32_t n) {
  if (n < 1) throw std::domain_error("simple_normality_stats: n must be >= 1");
  std::vector<Sign> v = values_range(spec, n);
  NormalityStats s;
  s.n = n;
  std::int64_t run = 0;
  for (std::uint32_t i = 1; i <= n; ++i) {
    if (v[i] == Sign::plus_one) {
      ++s.plus_count;
      ++run;
    } else {
      --run;
    }
    std::uint64_t a = static_cast<std::uint64_t>(run < 0 ? -run : run);
    if (a > s.max_abs_partial_sum) s.max_abs_partial_sum = a;
  }
  s.partial_sum = run;
  s.plus_frequency = BigRational(static_cast<long long>(s.plus_count), static_cast<long long>(n));
  return s;
}

/// Counts of every k-bit block over the n-k+1 windows of the bit sequence
/// (1+f_n)/2. Block code reads the window left to right, first bit highest.
inline std::vector<std::uint64_t> block_frequencies(const SequenceSpec& spec, std::uint32_t n,
                                                    std::uint32_t k) {
  if (k < 1 || k > 16) throw std::domain_error("block_frequencies: k must be in 1..16");
  if (n < k) throw std::domain_error("block_frequencies: n must be >= k");
  std::vector<Sign> v = values_range(spec, n);
  std::vector<std::uint64_t> counts(std::size_t{1} << k, 0);
  const std::uint32_t mask = (std::uint32_t{1} << k) - 1;
  std::uint32_t window = 0;
  for (std::uint32_t i = 1; i <= n; ++i) {
    window = ((window << 1) | (v[i] == Sign::plus_one ? 1u : 0u)) & mask;
    if (i >= k) ++counts[window];
  }
  return counts;
}

/// Partial-sum walk (x, sum f_1..f_x) for x = 1..n; feeds CSV output.
inline std::vector<std::int64_t> partial_sum_walk(const SequenceSpec& spec, std::uint32_t n) {
  if (n < 1) throw std::domain_error("partial_sum_walk: n must be >= 1");
  std::vector<Sign> v = values_range(spec, n);
  std::vector<std::int64_t> walk(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint32_t i = 1; i <= n; ++i) walk[i] = walk[i - 1] + to_int(v[i]);
  return walk;
}

}  // namespace cmgf
