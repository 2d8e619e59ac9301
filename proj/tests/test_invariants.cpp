#include <gtest/gtest.h>

#include "groups.hpp"
#include "ikit/invariants.hpp"

using namespace ikit;
using namespace testing_groups;

namespace {

std::vector<std::string> strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST(InvariantBasis, D8) {
  auto G = d8();
  Ring r = ring(G.field(), {"x", "y"});
  EXPECT_EQ(strings(invariant_basis(G, r, 2)), (std::vector<std::string>{"x^2 + y^2"}));
  EXPECT_TRUE(invariant_basis(G, r, 3).empty());
  auto b8 = invariant_basis(G, r, 8);
  ASSERT_EQ(b8.size(), 2u);
  for (const auto& f : b8) EXPECT_TRUE(is_invariant(f, G));
}

TEST(InvariantBasis, TrivialGroupDegreeOne) {
  auto G = trivial(3);
  Ring r = ring(G.field(), {"a", "b", "c"});
  EXPECT_EQ(strings(invariant_basis(G, r, 1)), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(InvariantBasis, WorksInModularCase) {
  auto G = c2_swap(Field::prime(2));
  Ring r = ring(G.field(), {"x1", "x2"});
  EXPECT_EQ(strings(invariant_basis(G, r, 2)), (std::vector<std::string>{"x1^2 + x2^2", "x1*x2"}));
}

TEST(King, D8) {
  auto G = d8();
  Ring r = ring(G.field(), {"x", "y"});
  auto res = king_generators(G, r);
  ASSERT_EQ(res.generators.size(), 2u);
  EXPECT_EQ(res.degrees, (std::vector<unsigned>{2, 8}));
  EXPECT_EQ(res.generators[0], parse_polynomial("(x^2 + y^2)/2", r));
  EXPECT_EQ(res.generators[1],
            parse_polynomial("(9*x^8 + 28*x^6*y^2 + 70*x^4*y^4 + 28*x^2*y^6 + 9*y^8)/32", r));
  EXPECT_EQ(res.termination_degree, 9u);
}

TEST(King, TrivialGroup) {
  auto G = trivial(2);
  Ring r = ring(G.field(), {"x", "y"});
  auto res = king_generators(G, r);
  EXPECT_EQ(strings(res.generators), (std::vector<std::string>{"y", "x"}));
  // Both degree-one monomials are consumed during the first pass.
  EXPECT_EQ(res.termination_degree, 1u);
}

TEST(King, SwapSpansSymmetricFunctions) {
  auto G = c2_swap();
  Ring r = ring(G.field(), {"x1", "x2"});
  auto res = king_generators(G, r);
  EXPECT_EQ(res.degrees, (std::vector<unsigned>{1, 2}));
  std::vector<Poly> sym{parse_polynomial("x1 + x2", r), parse_polynomial("x1*x2", r)};
  for (const auto& g : res.generators) EXPECT_TRUE(subalgebra_membership(g, sym).has_value());
  for (const auto& s : sym) EXPECT_TRUE(subalgebra_membership(s, res.generators).has_value());
}

TEST(King, ModularFails) {
  auto G = c2_swap(Field::prime(2));
  Ring r = ring(G.field(), {"x1", "x2"});
  EXPECT_THROW(king_generators(G, r), ModularCase);
}

TEST(King, ScalarCyclic) {
  for (int n : {3, 4}) {
    auto G = cn_scalar(n);
    Ring r = ring(G.field(), {"x1", "x2"});
    auto res = king_generators(G, r);
    EXPECT_EQ(res.generators.size(), static_cast<size_t>(n + 1));
    for (unsigned d : res.degrees) EXPECT_EQ(d, static_cast<unsigned>(n));
  }
}

TEST(King, LexOrderAlsoGenerates) {
  auto G = s3();
  Ring r = ring(G.field(), {"x1", "x2", "x3"}, MonomialOrder::lex());
  auto res = king_generators(G, r);
  EXPECT_EQ(res.degrees, (std::vector<unsigned>{1, 2, 3}));
  auto rep = verify_noether_and_hilbert(G, res.generators, r, 6);
  EXPECT_TRUE(rep.all_ok());
}

TEST(NoetherHilbert, ChecksAndMinimality) {
  auto G = d8();
  Ring r = ring(G.field(), {"x", "y"});
  auto res = king_generators(G, r);
  auto rep = verify_noether_and_hilbert(G, res.generators, r, res.termination_degree);
  EXPECT_TRUE(rep.all_ok());
  std::vector<Poly> dropped{res.generators[0]};
  auto bad = verify_noether_and_hilbert(G, dropped, r, res.termination_degree);
  EXPECT_FALSE(bad.subalgebra_ok);
  EXPECT_FALSE(bad.hilbert_monomials_ok);
}

TEST(NoetherSeparating, TrivialAndSwap) {
  auto T = trivial(1);
  Ring r1 = ring(T.field(), {"x1"});
  EXPECT_EQ(strings(noether_separating_set(T, r1).invariants), (std::vector<std::string>{"x1"}));

  auto G = c2_swap();
  Ring r = ring(G.field(), {"x1", "x2"});
  auto S = noether_separating_set(G, r).invariants;
  auto has = [&](const char* s) { return std::find(S.begin(), S.end(), parse_polynomial(s, r)) != S.end(); };
  EXPECT_TRUE(has("x1 + x2"));
  EXPECT_TRUE(has("x1*x2"));
  for (const auto& f : S) {
    EXPECT_TRUE(is_invariant(f, G));
    EXPECT_LE(f.total_degree(), 2);
  }
  EXPECT_TRUE(verify_separation_samples(S, G, 100, 10, 0).passed());
}

TEST(SeparationSamples, DetectsFailures) {
  auto G = c2_swap();
  Ring r = ring(G.field(), {"x1", "x2"});
  auto rep = verify_separation_samples({Poly::variable(r, 0)}, G, 50, 10, 0);
  EXPECT_GT(rep.same_orbit_failures, 0u);
  auto weak = verify_separation_samples({parse_polynomial("x1 + x2", r)}, G, 100, 1, 0);
  EXPECT_GT(weak.distinct_failures, 0u);
}

TEST(SeparationSamples, ScalarCyclicMonomials) {
  auto G = cn_scalar(3);
  Ring r = ring(G.field(), {"x1", "x2"});
  std::vector<Poly> S{parse_polynomial("x1^3", r), parse_polynomial("x1^2*x2", r), parse_polynomial("x2^3", r)};
  EXPECT_TRUE(verify_separation_samples(S, G, 100, 10, 0).passed());
}

// One reduction step in one variable: the even powers x^2, x^4, x^6, x^8
// separate the orbits of x -> -x, and 2n + 1 = 3.
TEST(ReduceSeparating, OneStep) {
  Field q = Field::rationals();
  auto G = close_group(q, 1, {matrix(q, {{"-1"}})});
  Ring r = ring(q, {"x"});
  std::vector<Poly> S;
  for (int e : {2, 4, 6, 8}) S.push_back(Poly::monomial(r, Monomial::variable(1, 0, e)));
  auto res = reduce_separating_set(S, 1);
  ASSERT_EQ(res.invariants.size(), 3u);
  ASSERT_EQ(res.alphas.size(), 1u);
  const auto& a = res.alphas[0];
  EXPECT_NE(a[0], 0);
  for (size_t i = 1; i < 4; ++i)
    EXPECT_EQ(res.invariants[i - 1], S[i].scaled(q.from_int(a[0])) - S[0].scaled(q.from_int(a[i])));
  EXPECT_FALSE(res.homogeneous);
  EXPECT_TRUE(verify_separation_samples(res.invariants, G, 100, 10, 0).passed());
}

TEST(ReduceSeparating, SmallSetUnchangedAndFiniteFieldRejected) {
  auto G = c2_swap();
  Ring r = ring(G.field(), {"x1", "x2"});
  std::vector<Poly> S{parse_polynomial("x1 + x2", r), parse_polynomial("x1*x2", r)};
  EXPECT_EQ(reduce_separating_set(S, 2).invariants, S);
  Field f = Field::prime(5);
  Ring rf = ring(f, {"x"});
  std::vector<Poly> many;
  for (int e = 1; e <= 4; ++e) many.push_back(Poly::monomial(rf, Monomial::variable(1, 0, e)));
  EXPECT_THROW(reduce_separating_set(many, 1), FieldTooSmall);
}

TEST(Hsop, Dimension) {
  Ring r = ring(Field::rationals(), {"x", "y"});
  EXPECT_TRUE(is_hsop({parse_polynomial("x", r), parse_polynomial("y", r)}, r));
  EXPECT_TRUE(is_phsop({parse_polynomial("x*y", r)}, r));
  EXPECT_FALSE(is_hsop({parse_polynomial("x*y", r), parse_polynomial("x^2", r)}, r));
  EXPECT_THROW(is_phsop({parse_polynomial("x + 1", r)}, r), NonHomogeneousInput);
  Ring rw = ring(sqrt2(), {"x", "y"});
  EXPECT_TRUE(is_hsop({parse_polynomial("x^2 + y^2", rw), parse_polynomial("x^2*y^2*(x^2 - y^2)^2", rw)}, rw));
}

TEST(Dade, PrimaryInvariants) {
  auto T = trivial(2);
  Ring rt = ring(T.field(), {"x", "y"});
  auto pt = dade_primary_invariants(T, rt, 0);
  EXPECT_EQ(pt.invariants, pt.forms);

  auto G = s3();
  Ring r = ring(G.field(), {"x1", "x2", "x3"});
  auto res = dade_primary_invariants(G, r, 0);
  ASSERT_EQ(res.invariants.size(), 3u);
  EXPECT_TRUE(is_hsop(res.invariants, r));
  for (const auto& f : res.invariants) EXPECT_TRUE(is_invariant(f, G));
  for (unsigned d : res.degrees) EXPECT_EQ(6u % d, 0u);
}

TEST(Bounds, Report) {
  auto b = degree_bound_report(16, 2, {2, 8});
  EXPECT_EQ(b.symonds, 8u);
  EXPECT_EQ(b.coarse, 30u);
  EXPECT_EQ(b.noether, 16u);
  EXPECT_EQ(degree_bound_report(2, 2, {1, 1}).symonds, 0u);
  EXPECT_EQ(degree_bound_report(2, 2, {1, 2}).coarse, 2u);
}
