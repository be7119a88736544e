#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace ltrop;
using namespace support;

namespace {

ValuedSeries random_series(std::mt19937_64& rng, SeriesMode mode, bool truncate) {
  std::uniform_int_distribution<long> num(0, 12), den(1, 4), coef(-5, 5), count(0, 4);
  ValuedSeries s(mode, truncate ? ExtValue(ValueScalar(Rational(num(rng) + 6, den(rng)))) : ExtValue::infinity());
  for (long k = count(rng); k > 0; --k) {
    ValueScalar e(Rational(num(rng), den(rng)));
    if (mode == SeriesMode::Hahn && coef(rng) > 2) e = e + ValueScalar(Rational(0), Rational(num(rng), den(rng)), 2);
    long c = coef(rng);
    if (c) s.add_term(e, AlgebraicNumber(c));
  }
  return s;
}

bool known(const SeriesValuation& v) { return v.kind != SeriesValuation::AtLeast; }

ExtValue as_ext(const SeriesValuation& v) {
  return v.kind == SeriesValuation::Infinite ? ExtValue::infinity() : ExtValue(v.value);
}

}  // namespace

TEST(Series, ValuationPropertiesOnRandomSeries) {
  std::mt19937_64 rng(51);
  int exact_products = 0;
  for (int i = 0; i < 500; ++i) {
    SeriesMode mode = i % 3 == 0 ? SeriesMode::Hahn : SeriesMode::Puiseux;
    auto a = random_series(rng, mode, i % 2 == 0), b = random_series(rng, mode, i % 4 == 1);
    auto va = a.valuation(), vb = b.valuation();
    auto prod = a * b, sum = a + b;
    if (known(va) && known(vb)) {
      // Leading coefficients multiply to a nonzero number.
      EXPECT_EQ(as_ext(prod.valuation()), as_ext(va) + as_ext(vb)) << a.to_string() << " * " << b.to_string();
      ++exact_products;
    }
    // The sum's valuation bound never drops below the smaller one.
    EXPECT_GE(sum.order_bound(), min(a.order_bound(), b.order_bound()));
    EXPECT_EQ(sum.truncation(), min(a.truncation(), b.truncation()));
    // Known terms of a product are exact: compare against the exact product of
    // the known parts below the product's truncation.
    ValuedSeries ea(mode), eb(mode);
    for (const auto& [e, c] : a.terms()) ea.add_term(e, c);
    for (const auto& [e, c] : b.terms()) eb.add_term(e, c);
    EXPECT_EQ((ea * eb).truncated(prod.truncation()), prod);
    // Exponent denominators stay within the lcm of the factors' denominators.
    Integer l = lcm(a.denominator(), b.denominator());
    EXPECT_EQ(l % prod.denominator(), 0);
    EXPECT_EQ(l % sum.denominator(), 0);
  }
  EXPECT_GT(exact_products, 100);
}

TEST(Series, TextRoundTrip) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 300; ++i) {
    SeriesMode mode = i % 2 ? SeriesMode::Hahn : SeriesMode::Puiseux;
    auto s = random_series(rng, mode, i % 3 == 0);
    EXPECT_EQ(parse_series(s.to_string(), mode), s) << s.to_string();
  }
}

TEST(Series, TextForms) {
  auto s = parse_series("t^(1) + 1/2*t^(2) - 1/8*t^(3) + O(t^(4))", SeriesMode::Puiseux);
  EXPECT_EQ(s.to_string(), "t^(1) + 1/2*t^(2) - 1/8*t^(3) + O(t^(4))");
  EXPECT_EQ(parse_series("3", SeriesMode::Puiseux).to_string(), "3");
  EXPECT_EQ(parse_series("0", SeriesMode::Puiseux).to_string(), "0");
  EXPECT_EQ(parse_series("O(t^(2))", SeriesMode::Puiseux).valuation().to_string(), ">=2");
  EXPECT_EQ(parse_series("t^(1*sqrt(2))", SeriesMode::Hahn).valuation().to_string(), "1*sqrt(2)");
  EXPECT_THROW(parse_series("t^(1*sqrt(2))", SeriesMode::Puiseux), UsageError);
  EXPECT_THROW(parse_series("t^(3) + O(t^(2))", SeriesMode::Puiseux), UsageError);
  EXPECT_THROW(parse_series("O(t^(2)) + t", SeriesMode::Puiseux), UsageError);
  EXPECT_THROW(parse_series("t^(", SeriesMode::Puiseux), UsageError);
}

TEST(Series, ModesDoNotMix) {
  auto a = ValuedSeries::monomial(AlgebraicNumber(1), ValueScalar(1), SeriesMode::Puiseux);
  auto b = ValuedSeries::monomial(AlgebraicNumber(1), ValueScalar(1), SeriesMode::Hahn);
  EXPECT_THROW(a + b, UsageError);
}

TEST(Series, SubstituteTracksPrecision) {
  Ring ring = R("x,y");
  auto f = P("y^2 - x^3", ring);
  std::vector<ValuedSeries> exact = {parse_series("t^(2)", SeriesMode::Puiseux), parse_series("t^(3)", SeriesMode::Puiseux)};
  EXPECT_EQ(substitute(f, exact, SeriesMode::Puiseux).valuation().to_string(), "inf");
  std::vector<ValuedSeries> rough = {parse_series("t^(2) + O(t^(4))", SeriesMode::Puiseux),
                                     parse_series("t^(3) + O(t^(5))", SeriesMode::Puiseux)};
  // y^2 is known modulo t^8 and x^3 modulo t^8.
  EXPECT_EQ(substitute(f, rough, SeriesMode::Puiseux).valuation().to_string(), ">=8");
  std::vector<ValuedSeries> unknown = {parse_series("O(t^(0))", SeriesMode::Puiseux), parse_series("t", SeriesMode::Puiseux)};
  EXPECT_THROW(substitute(P("x + y", ring), unknown, SeriesMode::Puiseux), CapabilityError);
}
