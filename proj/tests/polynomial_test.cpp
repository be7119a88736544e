#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace ltrop;
using namespace support;

TEST(Polynomial, PrintParseRoundTrip) {
  std::mt19937_64 rng(3);
  Ring ring = R("x,y,z");
  for (int i = 0; i < 300; ++i) {
    Polynomial p = random_poly(rng, 3, 4, 5, true);
    EXPECT_EQ(P(to_string(p, ring), ring), p) << to_string(p, ring);
  }
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly(rng, 3, 3, 4, true), b = random_poly(rng, 3, 3, 4, true), c = random_poly(rng, 3, 3, 4, true);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ((a * b).total_degree(), a.total_degree() + b.total_degree());
  }
}

TEST(Polynomial, GrammarExamples) {
  Ring ring = R("x,y,z");
  EXPECT_EQ(to_string(P("y^2 - x^3", ring), ring), "-x^3 + y^2");
  auto p = P("2/3*x*y - z^2", ring);
  EXPECT_EQ(p.coeff(Exponent{1, 1, 0}), AlgebraicNumber(Rational(2, 3)));
  EXPECT_EQ(P("x*x*y", ring), P("x^2*y", ring));
  EXPECT_EQ(P("-(x)", ring), P("-x", ring));
}

TEST(Polynomial, MalformedInputIsAUsageError) {
  Ring ring = R("x,y");
  for (const char* bad : {"", "x^", "y^^2", "x + ", "q", "1/0*x", "x^-1", "x**2", "(x", "x)", "3 x", "x^99999999999999999999"})
    EXPECT_THROW(P(bad, ring), UsageError) << bad;
  EXPECT_THROW(R("x,x"), UsageError);
  EXPECT_THROW(R("x,1y"), UsageError);
}

TEST(Polynomial, InitialFormTakesMinimalWeight) {
  Ring ring = R("x,y");
  auto f = P("y^2 - x^3 - x^2*y", ring);
  auto w = W("2,3");
  EXPECT_EQ(initial_form(f, w), P("y^2 - x^3", ring));
  EXPECT_EQ(w_order(f, w), ExtValue(6));
  EXPECT_TRUE(w_order(Polynomial(2), w).is_infinite());
  auto g = P("x*y - z", R("x,y,z"));
  EXPECT_EQ(initial_form(g, W("1,sqrt(2),1")), P("-z", R("x,y,z")));
}

TEST(Polynomial, InitialFormIsMultiplicative) {
  std::mt19937_64 rng(9);
  auto w = W("1,sqrt(2),3/2");
  for (int i = 0; i < 100; ++i) {
    auto a = random_poly(rng, 3, 3, 4, false), b = random_poly(rng, 3, 3, 4, false);
    EXPECT_EQ(initial_form(a * b, w), initial_form(a, w) * initial_form(b, w));
    EXPECT_EQ(w_order(a * b, w), w_order(a, w) + w_order(b, w));
  }
}

TEST(OrderDescriptor, LocalOrderPrefersLowWeight) {
  auto ord = OrderDescriptor(W("1,1"), OrderMode::Local);
  Ring ring = R("x,y");
  auto f = P("x - x^2 + y^3", ring);
  EXPECT_EQ(leading_exponent(f, ord), (Exponent{1, 0}));
  auto glob = OrderDescriptor::global(2);
  EXPECT_EQ(leading_exponent(f, glob), (Exponent{0, 3}));
}
