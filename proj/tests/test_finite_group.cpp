#include <gtest/gtest.h>

#include <algorithm>

#include "groups.hpp"
#include "ikit/invariants.hpp"

using namespace ikit;
using namespace testing_groups;

TEST(Closure, Orders) {
  EXPECT_EQ(d8().order(), 16u);
  EXPECT_EQ(trivial(3).order(), 1u);
  EXPECT_EQ(pm_identity().order(), 2u);
  EXPECT_EQ(s3().order(), 6u);
  EXPECT_EQ(cn_scalar(5).order(), 5u);
}

TEST(Closure, ElementsClosedAndContainGenerators) {
  auto G = d8();
  for (const auto& g : G.generators()) EXPECT_TRUE(G.contains(g));
  for (const auto& a : G.elements()) {
    EXPECT_TRUE(G.contains(a.inverse()));
    for (const auto& b : G.elements()) EXPECT_TRUE(G.contains(a * b));
  }
  EXPECT_TRUE(G.elements().front().is_identity());
}

TEST(Closure, Errors) {
  Field q = Field::rationals();
  EXPECT_THROW(close_group(q, 1, {matrix(q, {{"2"}})}, 1000), CapExceeded);
  EXPECT_THROW(close_group(q, 2, {matrix(q, {{"1", "1"}, {"1", "1"}})}), SingularGenerator);
}

TEST(Reynolds, D8Values) {
  auto G = d8();
  Ring r = ring(G.field(), {"x", "y"});
  EXPECT_EQ(reynolds(parse_polynomial("y^2", r), G), parse_polynomial("(x^2 + y^2)/2", r));
  EXPECT_TRUE(reynolds(parse_polynomial("x*y", r), G).is_zero());
  Poly g = parse_polynomial("x^2 + y^2", r);
  EXPECT_EQ(reynolds(g, G), g);
}

TEST(Reynolds, ModularCase) {
  auto G = c2_swap(Field::prime(2));
  Ring r = ring(G.field(), {"x1", "x2"});
  EXPECT_THROW(reynolds(Poly::variable(r, 0), G), ModularCase);
}

TEST(Reynolds, ProjectionProperty) {
  auto G = d8();
  Ring r = ring(G.field(), {"x", "y"});
  XorShift64Star rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Poly f(r);
    for (unsigned d = 0; d <= 4; ++d)
      for (const auto& m : monomials_of_degree(r, d))
        if (rng.below(3) == 0) f += Poly::monomial(r, m, G.field().from_int(rng.range(-5, 5)));
    Poly R = reynolds(f, G);
    EXPECT_EQ(reynolds(R, G), R);
    EXPECT_TRUE(is_invariant(R, G));
  }
}

TEST(RelativeTrace, Basics) {
  auto G = s3();
  Ring r = ring(G.field(), {"x1", "x2", "x3"});
  Poly f = parse_polynomial("x1^2*x2 + 3*x3", r);
  std::vector<ScalarMatrix> trivial_h{ScalarMatrix::identity(3, G.field())};
  EXPECT_EQ(relative_trace(f, G, trivial_h), reynolds(f, G).scaled(G.field().from_int(6)));
  Poly sym = parse_polynomial("x1 + x2 + x3", r);
  EXPECT_EQ(relative_trace(sym, G, G.elements()), sym);
}

TEST(RelativeTrace, ModularSwap) {
  auto G = c2_swap(Field::prime(2));
  Ring r = ring(G.field(), {"x1", "x2"});
  std::vector<ScalarMatrix> h{ScalarMatrix::identity(2, G.field())};
  EXPECT_EQ(relative_trace(Poly::variable(r, 0), G, h).to_string(), "x1 + x2");
}

TEST(RelativeTrace, RepresentativeChoice) {
  auto G = d8();
  Ring r = ring(G.field(), {"x", "y"});
  // H = {I, -I} is normal in D8; f = x^2 is H-invariant.
  Field K = G.field();
  std::vector<ScalarMatrix> H{ScalarMatrix::identity(2, K), matrix(K, {{"-1", "0"}, {"0", "-1"}})};
  Poly f = parse_polynomial("x^2 + 3*x*y", r);
  auto cd = coset_decomposition(G, H);
  ASSERT_EQ(cd.representatives.size(), 8u);
  std::vector<ScalarMatrix> other;
  for (size_t i = 0; i < cd.representatives.size(); ++i)
    other.push_back(i % 2 ? H[1] * cd.representatives[i] : cd.representatives[i]);
  std::reverse(other.begin(), other.end());
  Poly a = relative_trace(f, G, H), b = relative_trace(f, G, H, &other);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(is_invariant(a, G));
  EXPECT_THROW(relative_trace(Poly::variable(r, 0), G, H), NotHInvariant);
  EXPECT_THROW(relative_trace(f, G, {matrix(K, {{"2", "0"}, {"0", "1"}})}), NotASubgroup);
}

TEST(Classify, Codimensions) {
  Field q = Field::rationals();
  auto id = classify_element(ScalarMatrix::identity(2, q));
  EXPECT_EQ(id.codimension, 0u);
  EXPECT_EQ(id.kind, ElementKind::identity);
  auto refl = classify_element(matrix(q, {{"1", "0"}, {"0", "-1"}}));
  EXPECT_EQ(refl.codimension, 1u);
  EXPECT_EQ(refl.kind, ElementKind::reflection);
  auto neg = classify_element(matrix(q, {{"-1", "0"}, {"0", "-1"}}));
  EXPECT_EQ(neg.codimension, 2u);
  EXPECT_EQ(neg.kind, ElementKind::bireflection);
}

TEST(Classify, GeneratedBy) {
  EXPECT_TRUE(is_reflection_group(d8()));
  EXPECT_FALSE(is_reflection_group(pm_identity()));
  EXPECT_TRUE(is_bireflection_group(pm_identity()));
  EXPECT_TRUE(generated_by_predicate(s3(), [](const ScalarMatrix&) { return true; }));
  EXPECT_TRUE(cm_necessary_condition(d8()));
  EXPECT_TRUE(cm_necessary_condition(cn_scalar(3)));
}

TEST(Molien, SmallSeries) {
  auto triv = molien_series(trivial(2), 5);
  for (unsigned k = 0; k <= 5; ++k) EXPECT_EQ(triv.coefficients[k].to_string(), std::to_string(k + 1));
  Field q = Field::rationals();
  auto neg = molien_series(close_group(q, 1, {matrix(q, {{"-1"}})}), 6);
  for (unsigned k = 0; k <= 6; ++k) EXPECT_EQ(neg.coefficients[k].to_string(), k % 2 ? "0" : "1");
  EXPECT_THROW(molien_series(c2_swap(Field::prime(3)), 3), PositiveCharacteristic);
}

// Independent count: the invariants of D8 form a polynomial ring in
// generators of degrees 2 and 8, so dim R^G_e = #{(a, b) : 2a + 8b = e}.
TEST(Molien, D8MatchesGeneratorDegrees) {
  auto s = molien_series(d8(), 16);
  for (unsigned e = 0; e <= 16; ++e) {
    long count = 0;
    for (unsigned b = 0; 8 * b <= e; ++b)
      if ((e - 8 * b) % 2 == 0) ++count;
    EXPECT_EQ(s.coefficients[e].to_string(), std::to_string(count)) << "degree " << e;
  }
}

TEST(Molien, MatchesInvariantBasisDimensions) {
  struct Case {
    FiniteMatrixGroup G;
    std::vector<std::string> names;
  };
  std::vector<Case> cases{{trivial(2), {"x", "y"}},
                          {c2_swap(), {"x1", "x2"}},
                          {s3(), {"x1", "x2", "x3"}},
                          {cn_scalar(3), {"x1", "x2"}}};
  for (const auto& c : cases) {
    Ring r = ring(c.G.field(), c.names);
    auto s = molien_series(c.G, 8);
    for (unsigned e = 0; e <= 8; ++e)
      EXPECT_EQ(s.coefficients[e], c.G.field().from_int(static_cast<long>(invariant_basis(c.G, r, e).size())))
          << "degree " << e;
  }
}
