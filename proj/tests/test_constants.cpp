#include <string>

#include "catch_amalgamated.hpp"
#include "cmgf/constants.hpp"

using namespace cmgf;

TEST_CASE("digit strings of the three bit-number constants") {
  CHECK(digits(gaussian_bits_gamma(), 21) == "110110011100100111011");
  CHECK(digits(liouville_number(), 21) == "100101001100011100001");
  CHECK(digits(mod3_bits_tau(), 21) == "101100101101100100101");
  CHECK_THROWS_AS(digits(gaussian_series_half(), 8), std::domain_error);
  CHECK_THROWS_AS(digits(gaussian_bits_gamma(), 0), std::domain_error);
}

TEST_CASE("series constants") {
  Enclosure g = value(gaussian_series_half(), 64);
  CHECK(g.width() <= BigRational::pow2(-64));
  // G(1/2) = 0.7014723764037345207...; first closed-form term is 2/(4+1) = 2/5
  CHECK(g.lo() > BigRational::from_string("7014723764037345/10000000000000000"));
  CHECK(g.hi() < BigRational::from_string("7014723764037346/10000000000000000"));
  CHECK(closed_term(make_genfun(gaussian_liouville_spec()), BigRational(1, 2), 0) ==
        BigRational(2, 5));

  Enclosure t = value(mod3_series_half(), 64);
  CHECK(t.lo() > BigRational::from_string("3972526445780145/10000000000000000"));
  CHECK(t.hi() < BigRational::from_string("3972526445780146/10000000000000000"));

  // phi_3 with the Legendre rule is the same number as T(1/2)
  Enclosure phi3 = value(character_phi(3, Sign::plus_one, ResidueRule::legendre_symbol), 64);
  CHECK(phi3.intersects(t));

  CHECK_THROWS_AS(value(mod3_series_half(), 4), std::domain_error);
}

TEST_CASE("bit-number values and the affine link") {
  Enclosure gamma = value(gaussian_bits_gamma(), 80);
  CHECK(gamma.width() <= BigRational::pow2(-80));
  // gamma = (1 + G(1/2))/2 = 0.85073618820186726...
  CHECK(gamma.lo() > BigRational::from_string("8507361882018672/10000000000000000"));
  CHECK(gamma.hi() < BigRational::from_string("8507361882018673/10000000000000000"));

  auto cross_gamma = affine_crosscheck(gaussian_bits_gamma(), 80);
  REQUIRE(cross_gamma.has_value());
  CHECK(cross_gamma->contains_zero());
  CHECK(cross_gamma->width() <= BigRational::pow2(-78));

  auto cross_tau = affine_crosscheck(mod3_bits_tau(), 80);
  REQUIRE(cross_tau.has_value());
  CHECK(cross_tau->contains_zero());

  // same answer whichever member of the pair is asked
  auto cross_series = affine_crosscheck(mod3_series_half(), 80);
  REQUIRE(cross_series.has_value());
  CHECK(cross_series->contains_zero());

  CHECK_FALSE(affine_crosscheck(liouville_number(), 80).has_value());
}

TEST_CASE("digits agree with sequence bits at depth") {
  for (const NamedConstant& c : {gaussian_bits_gamma(), mod3_bits_tau(), liouville_number()}) {
    std::string d = digits(c, 10000);
    auto v = values_range(c.seq, 10000);
    for (std::uint32_t n = 1; n <= 10000; ++n) {
      REQUIRE(d[n - 1] == (v[n] == Sign::plus_one ? '1' : '0'));
    }
  }
}

TEST_CASE("digit extraction from enclosures of the constants") {
  // gamma enclosure narrower than 2^-30 settles 21 digits
  Enclosure gamma = value(gaussian_bits_gamma(), 32);
  auto r = to_binary_digits(gamma, 21);
  REQUIRE(r.determinate());
  CHECK(*r.bits == "110110011100100111011");
}

TEST_CASE("character phi sign pattern for epsilon = -1") {
  GenFunSpec f = make_genfun(character_like_spec(5, Sign::minus_one, ResidueRule::legendre_symbol));
  BigRational half(1, 2);
  // Phi(w) > 0 for small w > 0 (leading coefficient f_1 = +1 dominates), so
  // the closed-form terms alternate with f_p^k
  for (std::uint32_t k = 0; k <= 5; ++k) {
    BigRational term = closed_term(f, half, k);
    CHECK(term.sign() == (k % 2 == 0 ? 1 : -1));
  }
  // and with epsilon = +1 all terms stay positive
  GenFunSpec fp = make_genfun(character_like_spec(5, Sign::plus_one, ResidueRule::legendre_symbol));
  for (std::uint32_t k = 0; k <= 5; ++k) {
    CHECK(closed_term(fp, half, k).sign() == 1);
  }
}

TEST_CASE("constant slugs") {
  CHECK(constant_slug(gaussian_bits_gamma()) == "gamma-bits");
  CHECK(constant_slug(liouville_number()) == "l");
  CHECK(constant_slug(character_phi(7, Sign::minus_one, ResidueRule::legendre_symbol)) ==
        "phi(7,-1,legendre)");
}

TEST_CASE("monotone refinement of constant enclosures") {
  for (const NamedConstant& c : {gaussian_bits_gamma(), mod3_series_half(), liouville_number()}) {
    Enclosure prev = value(c, 16);
    for (std::uint32_t bits : {24u, 48u, 96u}) {
      Enclosure next = value(c, bits);
      CHECK(prev.contains(next));
      // level counts move in doubly exponential jumps, so equal widths are
      // possible; refinement must never widen
      CHECK(next.width() <= prev.width());
      CHECK(next.width() <= BigRational::pow2(-static_cast<long>(bits)));
      prev = next;
    }
  }
}
