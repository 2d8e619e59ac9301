#include <gtest/gtest.h>

#include "ikit/groebner.hpp"
#include "ikit/parse.hpp"
#include "ikit/random.hpp"
#include "ikit/rational_function.hpp"

using namespace ikit;

namespace {

Ring base() { return make_ring<Scalar>({"a", "b", "c"}, MonomialOrder::grevlex(), Field::rationals()); }

Poly random_poly(const Ring& r, XorShift64Star& rng, unsigned maxdeg) {
  Poly f(r);
  for (unsigned d = 0; d <= maxdeg; ++d)
    for (const auto& m : monomials_of_degree(r, d))
      if (rng.below(4) == 0) f += Poly::monomial(r, m, r->domain.from_int(rng.range(-3, 3)));
  return f;
}

}  // namespace

TEST(Gcd, KnownValues) {
  Ring r = base();
  auto p = [&](const char* s) { return parse_polynomial(s, r); };
  EXPECT_EQ(polynomial_gcd(p("a^2 - b^2"), p("a*c + b*c")), p("a + b"));
  EXPECT_EQ(polynomial_gcd(p("2*a*b"), p("4*a^2")), p("a"));
  EXPECT_EQ(polynomial_gcd(p("a + 1"), p("b")), p("1"));
  EXPECT_EQ(polynomial_gcd(p("0"), p("3*c")), p("c"));
}

// gcd(f h, g h) must be divisible by h and divide both products.
TEST(Gcd, RandomCommonFactor) {
  Ring r = base();
  XorShift64Star rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Poly f = random_poly(r, rng, 2), g = random_poly(r, rng, 2), h = random_poly(r, rng, 2);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    Poly fh = f * h, gh = g * h;
    Poly d = polynomial_gcd(fh, gh);
    EXPECT_NO_THROW(exact_divide(d, h.monic())) << fh << " , " << gh << " -> " << d;
    EXPECT_NO_THROW(exact_divide(fh, d));
    EXPECT_NO_THROW(exact_divide(gh, d));
    EXPECT_EQ(d.leading_coeff().to_string(), "1");
  }
}

TEST(RationalFunction, Normalization) {
  Ring r = base();
  RationalFunctionField L(r);
  auto p = [&](const char* s) { return parse_polynomial(s, r); };
  RationalFunction q(p("a^2 - b^2"), p("2*a - 2*b"));
  EXPECT_EQ(q.to_string(), "1/2*a + 1/2*b");
  RationalFunction s(p("1"), p("-a"));
  EXPECT_EQ(s.denominator().to_string(), "a");
  EXPECT_EQ(s.numerator().to_string(), "-1");
  EXPECT_TRUE((L.variable(0) / L.variable(0)).is_one());
  EXPECT_EQ((L.variable(0) / L.variable(1) + L.variable(1) / L.variable(0)).to_string(), "(a^2 + b^2)/(a*b)");
  EXPECT_THROW(L.zero().inverse(), DivisionByZero);
}

TEST(RationalFunction, FieldAxiomsOnSamples) {
  Ring r = base();
  XorShift64Star rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Poly n1 = random_poly(r, rng, 2), d1 = random_poly(r, rng, 1), n2 = random_poly(r, rng, 2),
         d2 = random_poly(r, rng, 1);
    if (d1.is_zero() || d2.is_zero() || n2.is_zero()) continue;
    RationalFunction x(n1, d1), y(n2, d2);
    EXPECT_EQ((x + y) - y, x);
    EXPECT_EQ((x * y) / y, x);
    EXPECT_EQ(x * (x + y), x * x + x * y);
  }
}

TEST(RationalFunction, GroebnerOverFunctionField) {
  Ring r = make_ring<Scalar>({"a1", "a2"}, MonomialOrder::grevlex(), Field::rationals());
  RationalFunctionField L(r);
  auto R = make_ring<RationalFunction>({"z", "y1", "y2"}, MonomialOrder::elimination(1), L);
  using P = Polynomial<RationalFunction>;
  P z = P::variable(R, 0), y1 = P::variable(R, 1), y2 = P::variable(R, 2);
  P a1 = P::constant(R, L.variable(0)), a2 = P::constant(R, L.variable(1));
  P one = P::constant(R, 1);
  std::vector<P> gens{z * z - z, (one - z) * a1 + z * a2 - y1, z * a1 + (one - z) * a2 - y2};
  auto E = elimination_ideal(gens, {"z"});
  ASSERT_EQ(E.size(), 2u);
  EXPECT_EQ(E[0].to_string(), "y2^2 + (-a1 - a2)*y2 + a1*a2");
  EXPECT_EQ(E[1].to_string(), "y1 + y2 + (-a1 - a2)");
}
