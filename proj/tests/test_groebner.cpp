#include <gtest/gtest.h>

#include "ikit/groebner.hpp"
#include "ikit/linear_map.hpp"
#include "ikit/parse.hpp"

using namespace ikit;

namespace {

Ring ring_of(std::vector<std::string> names, MonomialOrder ord = MonomialOrder::grevlex(),
             Field f = Field::rationals()) {
  return make_ring<Scalar>(std::move(names), ord, f);
}

std::vector<std::string> strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST(Polynomial, PrintsDescending) {
  Ring r = ring_of({"x", "y"});
  EXPECT_EQ(parse_polynomial("y + x^2 - 3*x*y + 1", r).to_string(), "x^2 - 3*x*y + y + 1");
  EXPECT_EQ(parse_polynomial("(x+y)^2 - (x-y)^2", r).to_string(), "4*x*y");
}

TEST(Polynomial, ParseErrors) {
  Ring r = ring_of({"x", "y"});
  EXPECT_THROW(parse_polynomial("x +* y", r), ParseError);
  EXPECT_THROW(parse_polynomial("x / y", r), ParseError);
  EXPECT_THROW(parse_polynomial("z", r), ParseError);
}

TEST(Polynomial, LinearMapComposition) {
  Ring r = ring_of({"x", "y"});
  Field q = Field::rationals();
  ScalarMatrix A(2, 2, q), B(2, 2, q);
  A(0, 0) = q.from_int(1); A(0, 1) = q.from_int(2); A(1, 1) = q.from_int(1);
  B(0, 1) = q.from_int(1); B(1, 0) = q.from_int(-1);
  Poly p = parse_polynomial("x^3 + x*y - 2*y^2", r);
  EXPECT_EQ(apply_linear_map(apply_linear_map(p, B), A), apply_linear_map(p, B * A));
  std::vector<Scalar> v{q.from_int(3), q.from_int(-5)};
  // f(A v) computed two ways.
  EXPECT_EQ(apply_linear_map(p, A).evaluate(v), p.evaluate(apply_to_point(A, v)));
}

TEST(Groebner, LexExample) {
  Ring r = ring_of({"x", "y"}, MonomialOrder::lex());
  auto B = reduced_groebner({parse_polynomial("x^2 - y", r), parse_polynomial("y", r)}, r);
  EXPECT_EQ(strings(B.generators), (std::vector<std::string>{"x^2", "y"}));
}

TEST(Groebner, TwistedCubic) {
  Ring r = ring_of({"x", "y", "z"});
  std::vector<Poly> g{parse_polynomial("x^2 - y", r), parse_polynomial("x^3 - z", r)};
  auto B = reduced_groebner(g, r);
  EXPECT_EQ(strings(B.generators), (std::vector<std::string>{"x^2 - y", "x*y - z", "y^2 - x*z"}));
  EXPECT_EQ(ideal_dimension(B), 1u);
  EXPECT_TRUE(ideal_membership(parse_polynomial("y^3 - z^2", r), B));
  EXPECT_FALSE(ideal_membership(parse_polynomial("y^2 - z", r), B));
}

TEST(Groebner, UnitIdealHasNoDimension) {
  Ring r = ring_of({"x", "y"});
  auto B = buchberger({parse_polynomial("x*y - 1", r), parse_polynomial("x", r)}, r);
  EXPECT_TRUE(B.is_unit_ideal());
  EXPECT_FALSE(ideal_dimension(B).has_value());
}

TEST(Groebner, TruncatedNormalFormRefusesHighDegree) {
  Ring r = ring_of({"x", "y"});
  auto B = buchberger({parse_polynomial("x^2 - y^2", r), parse_polynomial("x*y", r)}, r, 2u);
  EXPECT_THROW(normal_form(parse_polynomial("x^3", r), B), TruncationInsufficient);
  EXPECT_THROW(reduce_basis(B), TruncatedBasis);
}

TEST(Groebner, Elimination) {
  Ring r = ring_of({"z1", "z2", "y1", "y2", "x1", "x2"});
  std::vector<Poly> g{parse_polynomial("z1*z2 - 1", r), parse_polynomial("y1 - z1*x1", r),
                      parse_polynomial("y2 - z2*x2", r)};
  Ring kept;
  auto E = elimination_ideal(g, {"z1", "z2"}, OrderKind::grevlex, &kept);
  EXPECT_EQ(strings(E), (std::vector<std::string>{"y1*y2 - x1*x2"}));
}

TEST(Groebner, RadicalMembership) {
  Ring r = ring_of({"x", "y"});
  std::vector<Poly> g{parse_polynomial("x^2", r), parse_polynomial("y^3", r)};
  EXPECT_TRUE(radical_membership(parse_polynomial("x + y", r), g));
  EXPECT_FALSE(radical_membership(parse_polynomial("x + 1", r), g));
}

TEST(Groebner, SubalgebraWitness) {
  Ring r = ring_of({"x", "y"});
  std::vector<Poly> g{parse_polynomial("x + y", r), parse_polynomial("x*y", r)};
  auto w = subalgebra_membership(parse_polynomial("x^2 + y^2", r), g);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->to_string(), "T1^2 - 2*T2");
  EXPECT_FALSE(subalgebra_membership(parse_polynomial("x", r), g).has_value());
}

TEST(Groebner, ExtensionCoefficients) {
  Field k = Field::extension(parse_upoly("w^2 - 2", "w"), "w");
  Ring r = ring_of({"x", "y"}, MonomialOrder::grevlex(), k);
  auto B = reduced_groebner({parse_polynomial("x^2 - 2*y^2", r), parse_polynomial("x - w*y", r)}, r);
  EXPECT_EQ(strings(B.generators), (std::vector<std::string>{"x - w*y"}));
}
