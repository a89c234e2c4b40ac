#include <random>

#include "catch_amalgamated.hpp"
#include "cmgf/enclosure.hpp"
#include "cmgf/rational.hpp"

using cmgf::BigRational;
using cmgf::Enclosure;

namespace {

std::mt19937_64 rng(0x5eed1234);

BigRational random_rational(long long max_abs_num = 1000, long long max_den = 1000) {
  std::uniform_int_distribution<long long> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<long long> den(1, max_den);
  return BigRational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
  CHECK(BigRational(1, 2) + BigRational(1, 3) == BigRational(5, 6));
  CHECK(BigRational(1, 2).pow(8) == BigRational(1, 256));  // (1/2)^(2^3)
  CHECK(BigRational(2, 5) * BigRational(5, 2) == BigRational(1));
  CHECK(BigRational(6, -4) == BigRational(-3, 2));
  CHECK(BigRational(0, 7).is_zero());
  CHECK_THROWS_AS(BigRational(1, 0), std::domain_error);
  CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
  CHECK_THROWS_AS(BigRational(0).pow(-1), std::domain_error);
  CHECK(BigRational(-2, 3).pow(-2) == BigRational(9, 4));
}

TEST_CASE("rational parsing and rendering") {
  CHECK(BigRational::from_string("5/6") == BigRational(5, 6));
  CHECK(BigRational::from_string("-1/2") == BigRational(-1, 2));
  CHECK(BigRational::from_string("42") == BigRational(42));
  CHECK(BigRational::from_string("+3/9") == BigRational(1, 3));
  CHECK_THROWS_AS(BigRational::from_string("1/0"), std::domain_error);
  CHECK_THROWS_AS(BigRational::from_string("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::from_string("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::from_string(""), std::invalid_argument);
  CHECK(BigRational(-3, 2).to_string() == "-3/2");
  CHECK(BigRational(7).to_string() == "7");
  CHECK(BigRational(-7, 2).to_decimal_string(3) == "-3.500");
  CHECK(BigRational(1, 3).to_decimal_string(5) == "0.33333");
}

TEST_CASE("rational algebra properties") {
  for (int i = 0; i < 200; ++i) {
    BigRational a = random_rational();
    BigRational b = random_rational();
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK(a.pow(3) == a * a * a);
    CHECK((a * b).abs() == a.abs() * b.abs());
  }
}

TEST_CASE("pow2 and bit length helpers") {
  CHECK(BigRational::pow2(10) == BigRational(1024));
  CHECK(BigRational::pow2(-3) == BigRational(1, 8));
  CHECK(BigRational(5, 8).mul_2exp(3) == BigRational(5));
  CHECK(BigRational(12, 5).numerator_bits() == 4);
  CHECK(BigRational(12, 5).denominator_bits() == 3);
}

TEST_CASE("enclosure endpoint arithmetic") {
  Enclosure a(BigRational(1, 4), BigRational(1, 2));
  CHECK((a + a).lo() == BigRational(1, 2));
  CHECK((a + a).hi() == BigRational(1));

  Enclosure sym(BigRational(-1, 8), BigRational(1, 8));
  Enclosure two = Enclosure::point(BigRational(2));
  CHECK((sym * two).lo() == BigRational(-1, 4));
  CHECK((sym * two).hi() == BigRational(1, 4));

  Enclosure p = Enclosure::point(BigRational(3, 7)) + Enclosure::point(BigRational(4, 7));
  CHECK(p.is_point());
  CHECK(p.width().is_zero());
  CHECK(p.lo() == BigRational(1));

  CHECK_THROWS_AS(Enclosure(BigRational(1), BigRational(0)), std::invalid_argument);
}

TEST_CASE("enclosure soundness on random operands") {
  for (int i = 0; i < 200; ++i) {
    BigRational x = random_rational(50, 50);
    BigRational y = random_rational(50, 50);
    BigRational rx = random_rational(10, 1000).abs();
    BigRational ry = random_rational(10, 1000).abs();
    Enclosure ex = Enclosure::ball(x, rx);
    Enclosure ey = Enclosure::ball(y, ry);
    CHECK((ex + ey).contains(x + y));
    CHECK((ex - ey).contains(x - y));
    CHECK((ex * ey).contains(x * y));
    CHECK((-ex).contains(-x));
    // endpoints themselves are attained
    CHECK((ex * ey).contains(ex.lo() * ey.hi()));
  }
}

TEST_CASE("width in bits") {
  CHECK(Enclosure::ball(BigRational(1, 3), BigRational::pow2(-64)).width_bits().value() == 63);
  CHECK(Enclosure(BigRational(0), BigRational::pow2(-10)).width_bits().value() == 10);
  CHECK(Enclosure(BigRational(0), BigRational(1, 3)).width_bits().value() == 2);  // 1/4 < 1/3 <= 1/2
  CHECK_FALSE(Enclosure::point(BigRational(5)).width_bits().has_value());
  CHECK(Enclosure(BigRational(0), BigRational(8)).width_bits().value() == -3);
}

TEST_CASE("binary digit extraction") {
  // 5/8 = 0.101 exactly
  auto exact = cmgf::to_binary_digits(Enclosure::point(BigRational(5, 8)), 3);
  REQUIRE(exact.determinate());
  CHECK(*exact.bits == "101");

  // 5/8 is itself a dyadic boundary: straddling it is indeterminate
  Enclosure straddle = Enclosure::ball(BigRational(5, 8), BigRational::pow2(-10));
  auto ind = cmgf::to_binary_digits(straddle, 3);
  CHECK_FALSE(ind.determinate());
  CHECK(ind.boundary_digit <= 3);

  auto deeper = cmgf::to_binary_digits(Enclosure::point(BigRational(1, 3)), 8);
  REQUIRE(deeper.determinate());
  CHECK(*deeper.bits == "01010101");

  CHECK_THROWS_AS(cmgf::to_binary_digits(Enclosure::point(BigRational(3, 2)), 4), std::domain_error);
  CHECK_THROWS_AS(cmgf::to_binary_digits(Enclosure::point(BigRational(-1, 2)), 4), std::domain_error);
}

TEST_CASE("digit stability under refinement") {
  // once digits settle at some width, every tighter enclosure reports the
  // same string
  BigRational x(113, 355);
  std::string settled;
  for (long e = 8; e <= 128; e *= 2) {
    Enclosure enc = Enclosure::ball(x, BigRational::pow2(-e));
    auto r = cmgf::to_binary_digits(enc, 6);
    if (r.determinate()) {
      if (settled.empty()) settled = *r.bits;
      CHECK(*r.bits == settled);
    }
  }
  CHECK_FALSE(settled.empty());
}
