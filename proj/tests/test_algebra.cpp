#include <catch2/catch_amalgamated.hpp>

#include "eqloc/ratfun.hpp"
#include "random_ratfun.hpp"

using namespace eqloc;

namespace {

Laurent mono(long e, long num = 1, long den = 1) { return Laurent::monomial(e, Rat(num, den)); }

RationalFunction one_over_one_minus_g() {
  return RationalFunction(Laurent(1), Laurent(1) - mono(1));
}

}  // namespace

TEST_CASE("laurent basics") {
  Laurent p = mono(2) + mono(-1, 3);
  CHECK(p.low() == -1);
  CHECK(p.high() == 2);
  CHECK(p.coeff(-1) == 3);
  CHECK((p - p).is_zero());
  CHECK(p.eval(Rat(2)) == Rat(4) + Rat(3, 2));
  CHECK_THROWS_AS(p.eval(Rat(0)), std::domain_error);
  CHECK(p.shifted(1) == mono(3) + mono(0, 3));
}

TEST_CASE("poly gcd and exact division") {
  Laurent a = Laurent(1) - mono(2);              // 1 - g^2
  Laurent b = Laurent(1) - mono(1);              // 1 - g
  Laurent g = poly_gcd(a, b);
  CHECK(poly_divexact(a, g) * g == a);
  CHECK(poly_divexact(b, g) * g == b);
  CHECK(!g.is_one());
  CHECK(poly_gcd(b, Laurent()) == mono(0, -1) + mono(1));  // primitive assoc of 1-g
}

TEST_CASE("addition identities") {
  RationalFunction f = one_over_one_minus_g();
  CHECK(RationalFunction() + f == f);

  // 1/(1-g) + 1/(1-g^{-1}) = 1 (the two-point weight data {+w,-w}).
  RationalFunction g_inv_term(Laurent(1), Laurent(1) - mono(-1));
  CHECK(f + g_inv_term == RationalFunction(1L));

  // g/(1-g) + 1/(1-g) = (g+1)/(1-g)
  RationalFunction lhs = RationalFunction(mono(1), Laurent(1) - mono(1)) + f;
  CHECK(lhs == RationalFunction(mono(1) + Laurent(1), Laurent(1) - mono(1)));
}

TEST_CASE("multiplication identities") {
  RationalFunction f = one_over_one_minus_g();
  CHECK(f * RationalFunction(1L) == f);
  CHECK(RationalFunction::from_laurent(Laurent(1) - mono(1)) * f == RationalFunction(1L));
  RationalFunction sq = f * f;
  CHECK(sq == RationalFunction(Laurent(1), Laurent(1) - mono(1, 2) + mono(2)));
}

TEST_CASE("reduction to canonical form") {
  // (1-g^2)/(1-g) -> 1+g
  RationalFunction a(Laurent(1) - mono(2), Laurent(1) - mono(1));
  CHECK(a == RationalFunction::from_laurent(Laurent(1) + mono(1)));

  // (g^{-1}-g)/(1-g) -> (1+g)/g = g^{-1} + 1
  RationalFunction b(mono(-1) - mono(1), Laurent(1) - mono(1));
  CHECK(b == RationalFunction::from_laurent(mono(-1) + Laurent(1)));

  // 0/(1-g^3) -> 0
  RationalFunction c(Laurent(), Laurent(1) - mono(3));
  CHECK(c.is_zero());
  CHECK(c == RationalFunction());

  CHECK_THROWS_AS(RationalFunction(Laurent(1), Laurent()), std::domain_error);
}

TEST_CASE("constant detection") {
  CHECK(RationalFunction(Rat(5)).constant_value() == Rat(5));
  CHECK(!one_over_one_minus_g().constant_value());
  RationalFunction f(Laurent(2) - mono(3, 2), Laurent(1) - mono(3));
  CHECK(f.constant_value() == Rat(2));
}

TEST_CASE("evaluation") {
  CHECK(one_over_one_minus_g().eval(Rat(2)) == Rat(-1));
  CHECK(RationalFunction::from_laurent(mono(2)).eval(Rat(3, 2)) == Rat(9, 4));
  CHECK_THROWS_AS(one_over_one_minus_g().eval(Rat(1)), std::domain_error);
  CHECK_THROWS_AS(one_over_one_minus_g().eval(Rat(0)), std::domain_error);
}

TEST_CASE("field axioms on random inputs") {
  eqloc::testing::RatfunGen gen(20240817);
  for (int iter = 0; iter < 200; ++iter) {
    RationalFunction a = gen.ratfun();
    RationalFunction b = gen.ratfun();
    RationalFunction c = gen.ratfun();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + (-a)).is_zero());
    if (!a.is_zero()) CHECK(a * a.inverse() == RationalFunction(1L));
  }
}

TEST_CASE("reduce is idempotent and canonical across routes") {
  eqloc::testing::RatfunGen gen(7);
  for (int iter = 0; iter < 200; ++iter) {
    RationalFunction f = gen.ratfun();
    CHECK(ratfun_reduce(f) == f);
    // Same function assembled two ways must have identical representation.
    Laurent extra = gen.laurent(3, true);
    RationalFunction g(f.num() * extra, f.den() * extra);
    CHECK(g.num() == f.num());
    CHECK(g.den() == f.den());
  }
}

TEST_CASE("evaluation agrees before and after reduction") {
  eqloc::testing::RatfunGen gen(99);
  for (int iter = 0; iter < 100; ++iter) {
    Laurent n = gen.laurent(4, false);
    Laurent d = gen.laurent(4, true);
    RationalFunction reduced(n, d);
    Rat x = gen.sample_point(reduced);
    if (d.eval(x) == 0) continue;
    CHECK(reduced.eval(x) == n.eval(x) / d.eval(x));
    if (auto c = reduced.constant_value()) CHECK(reduced.eval(x) == *c);
  }
}
