#include "tropdual/constructions.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "tropdual/parse.hpp"
#include "tropdual/verify.hpp"

using namespace tropdual;

namespace {

TropValue tv(int num, int den = 1) { return TropValue(Rat(num, den)); }
TropValue inf() { return TropValue::infinity(); }

CongruencePair rel(const char* text) {
  auto pairs = parse_relation_list(text);
  return CongruencePair(pairs.at(0).first, pairs.at(0).second);
}

// parses "f ~ g; ..." with one spec shared across every relation
std::vector<CongruencePair> rels(const char* text) {
  std::vector<CongruencePair> out;
  for (auto& [lhs, rhs] : parse_relation_list(text)) out.emplace_back(lhs, rhs);
  return out;
}

bool same_generators(const std::vector<DualPolynomial>& got, std::vector<const char*> want) {
  if (got.size() != want.size()) return false;
  // one spec across all expected texts, widened to the generators' dimension
  // so that texts not naming every variable still parse into the same ring
  std::string joined;
  for (const char* w : want) {
    if (!joined.empty()) joined += "; ";
    joined += w;
  }
  VarSpec spec = infer_vars(joined);
  if (!got.empty() && spec.total != got.front().vars()) {
    bool has_y = spec.embed_index >= 0;
    spec.total = got.front().vars();
    spec.embed_index = has_y ? spec.total - 1 : -1;
  }
  std::vector<DualPolynomial> expect;
  for (const char* w : want) expect.push_back(parse_polynomial(w, spec));
  for (const DualPolynomial& g : got) {
    auto it = std::find(expect.begin(), expect.end(), g);
    if (it == expect.end()) return false;
    expect.erase(it);
  }
  return true;
}

TEST(Halfspace, ConstructorValidation) {
  EXPECT_NO_THROW(HalfspaceCongruence({1}, {0}, Rat(0)));
  EXPECT_THROW(HalfspaceCongruence({1}, {1}, Rat(0)), std::invalid_argument);
  EXPECT_THROW(HalfspaceCongruence({-1}, {0}, Rat(0)), std::invalid_argument);
  EXPECT_THROW(HalfspaceCongruence({1, 0}, {0}, Rat(0)), std::invalid_argument);
}

TEST(Halfspace, PairCutsTheStatedHalfspace) {
  // c + m·a <= n·a with n=(1), m=(0), c=0 reads a >= 0
  HalfspaceCongruence h({1}, {0}, Rat(0));
  CongruencePair p = h.pair();
  EXPECT_TRUE(satisfies(p, {tv(0)}));
  EXPECT_TRUE(satisfies(p, {tv(3)}));
  EXPECT_FALSE(satisfies(p, {tv(-1, 2)}));
  // n=(0), m=(1), c=-1 reads a <= 1
  HalfspaceCongruence g({0}, {1}, Rat(-1));
  CongruencePair q = g.pair();
  EXPECT_TRUE(satisfies(q, {tv(1)}));
  EXPECT_TRUE(satisfies(q, {tv(-5)}));
  EXPECT_FALSE(satisfies(q, {tv(9, 8)}));
}

TEST(Lem1, GeneratorShape) {
  HalfspaceCongruence h({0}, {1}, Rat(-1));
  auto gens = halfspace_congruence_to_ideal(h);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(poly_to_string_named(gens[0], 1), "-1*x*y + -1*x + y");
  EXPECT_EQ(poly_to_string_named(gens[1], 1), "y + 0");
  ConstructionCheck check = checked_halfspace_ideal(h);
  EXPECT_EQ(check.verdict.verdict, Verdict::True);
}

TEST(Lem1, RandomizedRoundTrips) {
  verify::SuiteResult r = verify::suite_lem1(20260819, 40);
  EXPECT_TRUE(r.passed) << r.message;
  EXPECT_EQ(r.checked, 40);
}

TEST(CongruenceToIdeal, UnitIntervalGenerators) {
  auto gens = congruence_to_ideal({rel("x^2 + x + 1 ~ x")});
  EXPECT_TRUE(same_generators(gens, {"x*y + y + 0", "(-1)*x*y + y + (-1)*x", "y + 0"}))
      << [&] {
           std::string all;
           for (const auto& g : gens) all += poly_to_string_named(g, g.vars() - 1) + "; ";
           return all;
         }();
  ConstructionCheck check = checked_congruence_to_ideal({rel("x^2 + x + 1 ~ x")});
  EXPECT_EQ(check.verdict.verdict, Verdict::True);
  Region v = check.actual;
  EXPECT_TRUE(region_contains(v, {tv(1, 2), tv(0)}));
  EXPECT_FALSE(region_contains(v, {tv(1, 2), tv(1, 4)}));
  EXPECT_FALSE(region_contains(v, {tv(2), tv(0)}));
  EXPECT_FALSE(region_contains(v, {inf(), tv(0)}));
}

TEST(CongruenceToIdeal, QuadrantGenerators) {
  std::vector<CongruencePair> pairs = rels("x1 + 0 ~ 0; x2 + 0 ~ 0");
  auto gens = congruence_to_ideal(pairs);
  EXPECT_TRUE(same_generators(gens, {"x1*y + y + 0", "x2*y + y + 0", "y + 0"}));
  ConstructionCheck check = checked_congruence_to_ideal(pairs);
  EXPECT_EQ(check.verdict.verdict, Verdict::True);
}

TEST(CongruenceToIdeal, FaithfulWhereNaiveGrowsADiagonal) {
  std::vector<CongruencePair> joint{rel("x1 + x2 + 0 ~ 0")};
  EXPECT_EQ(checked_congruence_to_ideal(joint).verdict.verdict, Verdict::True);
  ConstructionCheck naive = checked_naive_ideal(joint);
  EXPECT_TRUE(same_generators(naive.generators, {"x1 + x2 + y + 0", "y + 0"}));
  ASSERT_EQ(naive.verdict.verdict, Verdict::False);
  ASSERT_TRUE(naive.verdict.witness.has_value());
  const auto& w = *naive.verdict.witness;
  EXPECT_FALSE(naive.verdict.witness_in_left);
  ASSERT_EQ(w.size(), 3u);
  EXPECT_FALSE(w[0].is_inf());
  EXPECT_EQ(w[0], w[1]);
  EXPECT_TRUE(w[0].finite() < 0);
  EXPECT_EQ(w[2], tv(0));
}

TEST(NaiveIdeal, AgreesWhenSidesShareSupportStructure) {
  // single-variable relations keep the naive translation honest
  EXPECT_EQ(checked_naive_ideal({rel("x^2 + x + 1 ~ x")}).verdict.verdict, Verdict::True);
}

TEST(DualIdeal, UnitIntervalNeedsNoEmbedding) {
  auto gens = congruence_to_dual_ideal({rel("x^2 + x + 1 ~ x")});
  ASSERT_EQ(gens.size(), 2u);
  std::vector<std::string> text{poly_to_string(gens[0]), poly_to_string(gens[1])};
  std::sort(text.begin(), text.end());
  EXPECT_EQ(text[0], "(-1-1e)*x + 0");
  EXPECT_EQ(text[1], "x + 0+0e");
  ConstructionCheck check = checked_congruence_to_dual_ideal({rel("x^2 + x + 1 ~ x")});
  EXPECT_EQ(check.verdict.verdict, Verdict::True);
  EXPECT_TRUE(region_contains(check.actual, {tv(1, 2)}));
  EXPECT_FALSE(region_contains(check.actual, {inf()}));
}

TEST(DualIdeal, ClassicalReEmbedding) {
  auto dual_gens = congruence_to_dual_ideal({rel("x^2 + x + 1 ~ x")});
  ConstructionCheck check = checked_dual_to_classical(dual_gens);
  EXPECT_EQ(check.verdict.verdict, Verdict::True);
  EXPECT_TRUE(same_generators(check.generators,
                              {"x*y + y + 0", "(-1)*x*y + y + (-1)*x", "y + 0"}));
}

TEST(UnionIdeal, ProductsOfParts) {
  DualPolynomial a = parse_polynomial("x + 0");
  DualPolynomial b = parse_polynomial("x + 1");
  auto gens = union_to_ideal({{a}, {b}});
  ASSERT_EQ(gens.size(), 1u);
  EXPECT_EQ(gens[0], poly_mul(a, b));
  auto cross = union_to_ideal({{a, b}, {a}});
  EXPECT_EQ(cross.size(), 2u);
  EXPECT_TRUE(union_to_ideal({{a}, {}}).empty());
  EXPECT_THROW(union_to_ideal({}), std::invalid_argument);
}

TEST(UnionIdeal, CheckedSplitInterval) {
  // [0,1] u [2,3] as two convex parts over one variable
  HalfspaceCongruence ge0({1}, {0}, Rat(0));
  HalfspaceCongruence le1({0}, {1}, Rat(-1));
  HalfspaceCongruence ge2({1}, {0}, Rat(2));
  HalfspaceCongruence le3({0}, {1}, Rat(-3));
  std::vector<std::vector<DualPolynomial>> parts{convex_to_ideal({ge0, le1}),
                                                 convex_to_ideal({ge2, le3})};
  ConstructionCheck check = checked_union_ideal(parts);
  EXPECT_EQ(check.verdict.verdict, Verdict::True);
  EXPECT_TRUE(region_contains(check.actual, {tv(1, 2), tv(0)}));
  EXPECT_FALSE(region_contains(check.actual, {tv(3, 2), tv(0)}));
  EXPECT_TRUE(region_contains(check.actual, {tv(5, 2), tv(0)}));
}

TEST(BoxComplement, BoundedIntervalGenerators)
{
  IntervalSpec spec({{Rat(0), Rat(1)}});
  auto gens = box_complement_ideal(spec);
  ASSERT_EQ(gens.size(), 1u);
  EXPECT_EQ(poly_to_string(gens[0]), "(0+0e)*x^2 + (0+1e)*x + 1+1e");
  EXPECT_FALSE(in_box(spec, {tv(0)}));
  EXPECT_TRUE(in_box(spec, {tv(1, 2)}));
  EXPECT_FALSE(in_box(spec, {tv(1)}));
  EXPECT_FALSE(in_box(spec, {inf()}));
  ConstructionCheck check = checked_box_ideal(spec);
  EXPECT_EQ(check.verdict.verdict, Verdict::True);
}

TEST(BoxComplement, RayKeepsInfinityInside) {
  IntervalSpec spec({{Rat(-1), std::nullopt}});
  auto gens = box_complement_ideal(spec);
  ASSERT_EQ(gens.size(), 1u);
  EXPECT_EQ(poly_to_string(gens[0]), "(0+0e)*x + -1");
  EXPECT_TRUE(in_box(spec, {inf()}));
  EXPECT_TRUE(in_box(spec, {tv(0)}));
  EXPECT_FALSE(in_box(spec, {tv(-1)}));
  ConstructionCheck check = checked_box_ideal(spec);
  EXPECT_EQ(check.verdict.verdict, Verdict::True);
  EXPECT_TRUE(region_contains(check.actual, {tv(-1)}));
  EXPECT_FALSE(region_contains(check.actual, {inf()}));
}

TEST(BoxComplement, TwoDimensionalMixedBox) {
  IntervalSpec spec({{Rat(0), Rat(1)}, {Rat(-1), std::nullopt}});
  std::vector<DualPolynomial> gens = box_complement_ideal(spec);
  ASSERT_EQ(gens.size(), 2u);
  auto in_union = [&](const std::vector<TropValue>& a) {
    for (const DualPolynomial& g : gens)
      if (in_bend_locus(g, a)) return true;
    return false;
  };
  EXPECT_FALSE(in_union({tv(1, 2), tv(0)}));     // interior
  EXPECT_TRUE(in_union({tv(0), tv(0)}));         // boundary
  EXPECT_TRUE(in_union({tv(1, 2), tv(-1)}));     // second coordinate boundary
  EXPECT_TRUE(in_union({inf(), tv(0)}));         // ∞ leaves a bounded interval
  EXPECT_FALSE(in_union({tv(1, 2), inf()}));     // ∞ stays inside the ray
  EXPECT_EQ(checked_box_ideal(spec).verdict.verdict, Verdict::True);
}

TEST(Embedding, HorizontalEmbedPinsLastCoordinate) {
  Region base = congruence_region(rels("x1 + 0 ~ 0; x2 + 0 ~ 0"));
  Region lifted = horizontal_embed(base);
  EXPECT_EQ(lifted.k, 3);
  EXPECT_TRUE(region_contains(lifted, {tv(1), tv(2), tv(0)}));
  EXPECT_FALSE(region_contains(lifted, {tv(1), tv(2), tv(1, 8)}));
  EXPECT_FALSE(region_contains(lifted, {tv(1), tv(2), inf()}));
  EXPECT_TRUE(region_contains(lifted, {inf(), tv(2), tv(0)}));
  EXPECT_FALSE(region_contains(lifted, {tv(-1), tv(2), tv(0)}));
}

TEST(Pipelines, RejectEmptyInput) {
  EXPECT_THROW(congruence_to_ideal({}), std::invalid_argument);
  EXPECT_THROW(congruence_to_dual_ideal({}), std::invalid_argument);
  EXPECT_THROW(dual_ideal_to_classical({}), std::invalid_argument);
  EXPECT_THROW(convex_to_ideal({}), std::invalid_argument);
  EXPECT_THROW(IntervalSpec({}), std::invalid_argument);
  EXPECT_THROW(IntervalSpec({{Rat(1), Rat(0)}}), std::invalid_argument);
}

TEST(Pipelines, EnhancedDualRoundTrips) {
  verify::SuiteResult r = verify::suite_enhanced(20260819, 25);
  EXPECT_TRUE(r.passed) << r.message;
  EXPECT_EQ(r.checked, 27);  // two golden congruences + 25 random
}

}  // namespace
