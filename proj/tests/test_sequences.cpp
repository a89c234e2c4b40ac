#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"
#include "cmgf/sequences.hpp"

using namespace cmgf;

namespace {

// Trial-division primality, independent of the sieve under test.
bool is_prime_oracle(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return n > 1;
}

// Jacobi symbol oracle built from the definition: factor n, take Legendre
// symbols by quadratic-residue enumeration, multiply.
int legendre_oracle(std::int64_t a, std::uint64_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  if (r == 0) return 0;
  for (std::uint64_t x = 1; x < p; ++x) {
    if (x * x % p == static_cast<std::uint64_t>(r)) return 1;
  }
  return -1;
}

int jacobi_oracle(std::int64_t a, std::uint64_t n) {
  int result = 1;
  for (std::uint64_t q = 3; n > 1; q += 2) {
    while (n % q == 0) {
      result *= legendre_oracle(a, q);
      n /= q;
    }
  }
  return result;
}

std::vector<int> ints(const std::vector<Sign>& v, std::uint32_t from, std::uint32_t to) {
  std::vector<int> out;
  for (std::uint32_t n = from; n <= to; ++n) out.push_back(to_int(v[n]));
  return out;
}

}  // namespace

TEST_CASE("smallest-prime-factor sieve") {
  FactorSieve s = build_sieve(10);
  std::vector<std::uint32_t> expect = {2, 3, 2, 5, 2, 7, 2, 3, 2};
  for (std::uint32_t n = 2; n <= 10; ++n) CHECK(s.spf[n] == expect[n - 2]);

  FactorSieve tiny = build_sieve(2);
  CHECK(tiny.spf[2] == 2);

  CHECK_THROWS_AS(build_sieve(1), std::domain_error);

  FactorSieve big = build_sieve(1000000);
  CHECK(big.spf[999983] == 999983);
  CHECK(is_prime_oracle(999983));
  for (std::uint32_t n : {999983u, 999984u, 524287u, 720720u}) {
    CHECK(n % big.spf[n] == 0);
    bool smaller_divisor = false;
    for (std::uint32_t q = 2; q < big.spf[n]; ++q) smaller_divisor |= (n % q == 0);
    CHECK_FALSE(smaller_divisor);
  }
}

TEST_CASE("sequence values match the printed prefixes") {
  // Gaussian Liouville first 22 values
  std::vector<int> g_expect = {1, 1, -1, 1, 1,  -1, -1, 1, 1, 1,  -1,
                               -1, 1, -1, -1, 1, 1,  1,  -1, 1, 1, -1};
  auto g = values_range(gaussian_liouville_spec(), 22);
  CHECK(ints(g, 1, 22) == g_expect);

  CHECK(value_at(liouville_spec(), 1) == Sign::plus_one);

  // bits (1+f(n))/2 for n = 1..21
  auto bits21 = [](const SequenceSpec& spec) {
    std::string s;
    auto v = values_range(spec, 21);
    for (int n = 1; n <= 21; ++n) s += (v[n] == Sign::plus_one) ? '1' : '0';
    return s;
  };
  CHECK(bits21(liouville_spec()) == "100101001100011100001");
  CHECK(bits21(mod3_spec()) == "101100101101100100101");
  CHECK(bits21(gaussian_liouville_spec()) == "110110011100100111011");

  CHECK_THROWS_AS(value_at(liouville_spec(), 0), std::domain_error);
}

TEST_CASE("mod3 equals the p=3 Legendre character") {
  SequenceSpec ch = character_like_spec(3, Sign::plus_one, ResidueRule::legendre_symbol);
  auto a = values_range(mod3_spec(), 10000);
  auto b = values_range(ch, 10000);
  CHECK(a == b);
}

TEST_CASE("bulk values agree with pointwise factorization") {
  FactorSieve sieve = build_sieve(1000000);
  auto v = values_range(liouville_spec(), 1000000, sieve);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> dist(1, 1000000);
  for (int i = 0; i < 1000; ++i) {
    std::uint32_t n = dist(rng);
    CHECK(v[n] == value_at(liouville_spec(), n));  // trial-division path
  }
  CHECK(values_range(mod3_spec(), 1) == std::vector<Sign>{Sign::plus_one, Sign::plus_one});
}

TEST_CASE("jacobi symbol") {
  CHECK(jacobi(-1, 5) == 1);
  CHECK(jacobi(2, 9) == 1);
  CHECK(jacobi(3, 9) == 0);
  CHECK_THROWS_AS(jacobi(3, 4), std::domain_error);
  CHECK_THROWS_AS(jacobi(3, 0), std::domain_error);

  for (std::uint64_t n = 3; n <= 225; n += 2) {
    for (std::int64_t a = -8; a <= 20; ++a) {
      CHECK(jacobi(a, n) == jacobi_oracle(a, n));
    }
  }
}

TEST_CASE("jacobi(-1, n) equals the Gaussian Liouville value on odd n") {
  FactorSieve sieve = build_sieve(100000);
  auto g = values_range(gaussian_liouville_spec(), 100000, sieve);
  for (std::uint64_t n = 1; n <= 100000; n += 2) {
    CHECK(jacobi(-1, n) == to_int(g[n]));
  }
}

TEST_CASE("recurrences hold on real sequences") {
  CHECK(check_recurrences(gaussian_liouville_spec(), 100000).empty());
  CHECK(check_recurrences(mod3_spec(), 100000).empty());
  SequenceSpec ch5 = character_like_spec(5, Sign::minus_one, ResidueRule::legendre_symbol);
  CHECK(check_recurrences(ch5, 10000).empty());
  CHECK(check_recurrences(liouville_spec(), 100).empty());
  CHECK_THROWS_AS(check_recurrences(mod3_spec(), 7), std::domain_error);
}

TEST_CASE("recurrence checker detects corrupted tables") {
  auto v = values_range(gaussian_liouville_spec(), 64);
  v[12] = -v[12];
  auto viol = detail::check_recurrences_on(v, gaussian_liouville_spec());
  CHECK_FALSE(viol.empty());
  bool saw_doubling = false;
  for (const auto& x : viol) {
    if (x.rule == "g(2n)=g(n)" && (x.index == 12 || x.index == 24)) saw_doubling = true;
  }
  CHECK(saw_doubling);
}

TEST_CASE("complete multiplicativity") {
  for (const SequenceSpec& spec :
       {liouville_spec(), gaussian_liouville_spec(), mod3_spec(),
        character_like_spec(7, Sign::minus_one, ResidueRule::legendre_symbol)}) {
    auto v = values_range(spec, 1000);
    for (std::uint32_t m = 1; m <= 1000; ++m) {
      for (std::uint32_t n = 1; m * n <= 1000; ++n) {
        REQUIRE(v[m * n] == v[m] * v[n]);
      }
    }
  }
  // randomized, larger range
  FactorSieve sieve = build_sieve(1000000);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::uint32_t> dist(1, 1000);
  for (const SequenceSpec& spec : {liouville_spec(), gaussian_liouville_spec()}) {
    for (int i = 0; i < 2000; ++i) {
      std::uint64_t m = dist(rng), n = dist(rng);
      CHECK(value_at(spec, m * n, &sieve) ==
            value_at(spec, m, &sieve) * value_at(spec, n, &sieve));
    }
  }
}

TEST_CASE("trivial residue rule is the p-adic valuation sign") {
  SequenceSpec spec = character_like_spec(5, Sign::minus_one, ResidueRule::trivial);
  auto v = values_range(spec, 5000);
  for (std::uint32_t n = 1; n <= 5000; ++n) {
    std::uint32_t m = n;
    int vp = 0;
    while (m % 5 == 0) {
      ++vp;
      m /= 5;
    }
    CHECK(to_int(v[n]) == (vp % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("character spec validation") {
  CHECK_THROWS_AS(character_like_spec(2, Sign::plus_one, ResidueRule::legendre_symbol),
                  std::domain_error);
  CHECK_THROWS_AS(character_like_spec(9, Sign::plus_one, ResidueRule::legendre_symbol),
                  std::domain_error);
  CHECK_THROWS_AS(character_like_spec(1, Sign::plus_one, ResidueRule::trivial), std::domain_error);
  CHECK(character_like_spec(101, Sign::minus_one, ResidueRule::legendre_symbol).p == 101);
}
