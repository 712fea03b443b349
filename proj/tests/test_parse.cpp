#include "tropdual/parse.hpp"

#include <gtest/gtest.h>

#include "tropdual/verify.hpp"

using namespace tropdual;

namespace {

TropValue tv(int num, int den = 1) { return TropValue(Rat(num, den)); }

TEST(Parse, ScalarForms) {
  EXPECT_EQ(parse_dual_value("3"), DualValue::from_trop(tv(3)));
  EXPECT_EQ(parse_dual_value("inf"), DualValue::zero());
  EXPECT_EQ(parse_dual_value("3+1e"), DualValue(tv(3), tv(1)));
  EXPECT_EQ(parse_dual_value("3-2e"), DualValue(tv(3), tv(-2)));
  EXPECT_EQ(parse_dual_value("2e"), DualValue(TropValue::infinity(), tv(2)));
  EXPECT_EQ(parse_dual_value("e"), DualValue::eps());
  EXPECT_EQ(parse_dual_value("3+0e"), DualValue(tv(3), tv(0)));
  EXPECT_EQ(parse_dual_value("-1/2"), DualValue::from_trop(tv(-1, 2)));
  EXPECT_EQ(parse_dual_value("0.25"), DualValue::from_trop(tv(1, 4)));
}

TEST(Parse, PolynomialGrammar) {
  DualPolynomial f = parse_polynomial("(3+1e)*x^2 + (1+1e)*x + 2e");
  EXPECT_EQ(f.vars(), 1);
  ASSERT_EQ(f.terms().size(), 3u);
  EXPECT_EQ(f.terms().at({2}), DualValue(tv(3), tv(1)));
  EXPECT_EQ(f.terms().at({1}), DualValue(tv(1), tv(1)));
  EXPECT_EQ(f.terms().at({0}), DualValue(TropValue::infinity(), tv(2)));
}

TEST(Parse, ImplicitCoefficientAndJuxtaposition) {
  // a bare power carries the multiplicative unit 0, and scalars multiply additively
  EXPECT_EQ(parse_polynomial("x^2 + x + 1"), parse_polynomial("0*x^2 + 0*x + 1*0"));
  EXPECT_EQ(parse_polynomial("e*x"), parse_polynomial("(e)*x"));
  EXPECT_EQ(parse_polynomial("x1*x2 + x1"), parse_polynomial("x2*x1 + x1"));
}

TEST(Parse, MultivariateIndexing) {
  DualPolynomial f = parse_polynomial("x1^2 + x1*x2 + x1 + 1");
  EXPECT_EQ(f.vars(), 2);
  EXPECT_EQ(f.terms().at({2, 0}), DualValue::one());
  EXPECT_EQ(f.terms().at({1, 1}), DualValue::one());
  EXPECT_EQ(f.terms().at({1, 0}), DualValue::one());
  EXPECT_EQ(f.terms().at({0, 0}), DualValue::from_trop(tv(1)));
}

TEST(Parse, EmbeddingVariable) {
  VarSpec spec = infer_vars("x1*y + y + 0");
  EXPECT_EQ(spec.total, 2);
  EXPECT_EQ(spec.embed_index, 1);
  DualPolynomial f = parse_polynomial("x1*y + y + 0", spec);
  EXPECT_EQ(f.terms().at({1, 1}), DualValue::one());
  EXPECT_EQ(f.terms().at({0, 1}), DualValue::one());
  EXPECT_EQ(f.terms().at({0, 0}), DualValue::one());
}

TEST(Parse, ListsAndRelations) {
  auto gens = parse_polynomial_list("x1^2 + x1*x2 + x1 + 1; x2 + 0");
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0].vars(), 2);
  EXPECT_EQ(gens[1].vars(), 2);
  auto rels = parse_relation_list("x^2 + x + 1 ~ x; x ~ 0");
  ASSERT_EQ(rels.size(), 2u);
  EXPECT_EQ(rels[0].first.terms().size(), 3u);
  EXPECT_EQ(rels[1].second, DualPolynomial::constant(1, DualValue::one()));
}

TEST(Parse, PointsAndIntervals) {
  auto a = parse_point("0,inf,1/2");
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a[0], tv(0));
  EXPECT_TRUE(a[1].is_inf());
  EXPECT_EQ(a[2], tv(1, 2));
  IntervalText box = parse_interval("(0,1)");
  EXPECT_EQ(box.lo, Rat(0));
  ASSERT_TRUE(box.hi.has_value());
  EXPECT_EQ(*box.hi, Rat(1));
  IntervalText ray = parse_interval("(-1/2,inf]");
  EXPECT_EQ(ray.lo, Rat(-1, 2));
  EXPECT_FALSE(ray.hi.has_value());
}

TEST(Parse, ErrorsCarryPositions) {
  EXPECT_THROW(parse_polynomial(""), ParseError);
  EXPECT_THROW(parse_polynomial("x +"), ParseError);
  EXPECT_THROW(parse_polynomial("x^-2"), ParseError);
  EXPECT_THROW(parse_polynomial("x3", VarSpec{2, -1}), ParseError);
  EXPECT_THROW(parse_relation_list("x + 1"), ParseError);
  try {
    parse_polynomial("x + @");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GE(e.position(), 4u);
  }
}

TEST(Parse, PrintParseRoundTrip) {
  const char* cases[] = {
      "(3+1e)*x^2 + (1+1e)*x + 2e",
      "x1*x2 + (0+0e)*x1 + (0+0e)*x2 + 1",
      "x1^2 + x1*x2 + x1 + 1",
      "(1/2-3/4e)*x^3 + e*x + inf",
      "5",
  };
  for (const char* text : cases) {
    DualPolynomial f = parse_polynomial(text);
    VarSpec spec;
    spec.total = f.vars();
    spec.embed_index = -1;
    EXPECT_EQ(parse_polynomial(poly_to_string(f), spec), f) << text;
  }
}

TEST(Parse, SeededPrintParseRoundTrip) {
  verify::Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    int k = 1 + rng.below(3);
    DualPolynomial f = rng.poly(k, 5, 3, false);
    VarSpec spec;
    spec.total = k;
    spec.embed_index = -1;
    EXPECT_EQ(parse_polynomial(poly_to_string(f), spec), f) << poly_to_string(f);
  }
}

}  // namespace
