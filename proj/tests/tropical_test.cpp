#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace ltrop;
using namespace support;

TEST(TropMember, HandExamples) {
  Ring ring = R("x,y");
  auto cusp = IdealPresentation::local(2, Ps({"y^2 - x^3"}, ring));
  EXPECT_TRUE(trop_member(cusp, EW("2,3")).member);
  EXPECT_TRUE(trop_member(cusp, EW("4,6")).member);
  auto r = trop_member(cusp, EW("1,1"));
  EXPECT_FALSE(r.member);
  ASSERT_TRUE(r.witness.has_value());
  auto line = IdealPresentation::local(2, Ps({"x + y"}, ring));
  EXPECT_FALSE(trop_member(line, EW("1,2")).member);
  EXPECT_TRUE(trop_member(line, EW("3,3")).member);
}

TEST(TropMember, InfiniteCoordinates) {
  Ring ring = R("x,y,z");
  auto I = IdealPresentation::local(3, Ps({"x*y - z^2"}, ring));
  // z = 0 forces x*y = 0, so one of x, y must also be infinite.
  EXPECT_FALSE(trop_member(I, EW("1,1,inf")).member);
  EXPECT_TRUE(trop_member(I, EW("inf,1,inf")).member);
  EXPECT_TRUE(trop_member(I, EW("inf,inf,inf")).member);
  auto r = trop_member(I, EW("inf,2,3"));
  EXPECT_EQ(r.zeroed, (std::vector<std::size_t>{0}));
  EXPECT_FALSE(r.member);
}

TEST(TropMember, RejectsBadQueries) {
  Ring ring = R("x,y");
  auto I = IdealPresentation::local(2, Ps({"y^2 - x^3"}, ring));
  EXPECT_THROW(trop_member(I, EW("1")), UsageError);
  EXPECT_THROW(trop_member(I, EW("0,1")), UsageError);
  EXPECT_THROW(trop_member(I.with_order(OrderDescriptor::global(2)), EW("2,3")), UsageError);
}

TEST(TropHypersurface, AgreesWithMembershipOfThePrincipalIdeal) {
  // Independent check: w is in the hypersurface iff the minimum of <w, M>
  // over the support is attained at least twice.
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> coord(1, 6);
  for (int i = 0; i < 15; ++i) {
    std::size_t n = 2 + i % 2;
    auto f = random_poly(rng, n, 3, 4, false);
    auto cones = trop_hypersurface(f);
    auto I = IdealPresentation::local(n, {f});
    for (int k = 0; k < 20; ++k) {
      QVec q;
      std::vector<ExtValue> w;
      std::vector<ValueScalar> wv;
      for (std::size_t j = 0; j < n; ++j) {
        long c = coord(rng);
        q.push_back(Rational(c));
        w.emplace_back(c);
        wv.emplace_back(c);
      }
      ValueScalar best(1000);
      int hits = 0;
      for (const auto& [e, c] : f.terms()) {
        ValueScalar v = dot(wv, e);
        if (v < best) {
          best = v;
          hits = 1;
        } else if (v == best) {
          ++hits;
        }
      }
      bool in_cone = false;
      for (const auto& tc : cones) in_cone = in_cone || contains(tc.cone.cone, q);
      EXPECT_EQ(hits >= 2, in_cone);
      EXPECT_EQ(hits >= 2, trop_member(I, w).member);
    }
  }
}

TEST(TropHypersurface, TriangleHasThreeRaysAndAVertex) {
  Ring ring = R("x,y,z");
  auto cones = trop_hypersurface(P("x*y - z^2 + x^3", ring));
  ASSERT_EQ(cones.size(), 4u);
  EXPECT_EQ(cones.back().dim, 1u);
  EXPECT_THROW(trop_hypersurface(P("1 + x", ring)), UsageError);
}

TEST(TropEnumerate, ConesAreConsistentWithMembership) {
  for (const auto& c : corpus()) {
    auto I = corpus_ideal(c);
    auto fan = trop_enumerate(I, 64, 1);
    EXPECT_FALSE(fan.truncated) << c.name;
    std::size_t top = 0;
    for (const auto& tc : fan.cones) {
      std::vector<ExtValue> wq;
      for (const auto& v : tc.relint) wq.emplace_back(ValueScalar(v));
      EXPECT_EQ(tc.member, trop_member(I, wq).member) << c.name;
      EXPECT_TRUE(contains(tc.cone.cone, tc.relint, true)) << c.name;
      top = std::max(top, tc.dim);
      // Dimension sanity: tropical cones have dimension at most dim I.
      if (tc.member) EXPECT_LE(tc.dim, dimension(I)) << c.name;
    }
    EXPECT_EQ(top, I.nvars()) << c.name;
  }
}

TEST(TropEnumerate, BudgetTruncates) {
  Ring ring = R("x,y,z");
  auto I = IdealPresentation::local(3, Ps({"x + y + z", "x*y - z^3"}, ring));
  auto fan = trop_enumerate(I, 5, 0);
  EXPECT_TRUE(fan.truncated);
  EXPECT_EQ(fan.cones.size(), 5u);
  EXPECT_THROW(trop_enumerate(I, 0, 0), UsageError);
}

TEST(TropEnumerate, SpaceCurveHasItsTwoRays) {
  Ring ring = R("x,y,z");
  auto I = IdealPresentation::local(3, Ps({"x + y + z", "x*y - z^3"}, ring));
  auto fan = trop_enumerate(I, 200, 0);
  std::vector<QVec> rays;
  for (const auto& tc : fan.cones)
    if (tc.member) {
      EXPECT_EQ(tc.dim, 1u);
      rays.push_back(tc.relint);
    }
  ASSERT_EQ(rays.size(), 2u);
  auto normalized = [](QVec v) {
    Rational m = *std::min_element(v.begin(), v.end());
    for (auto& x : v) x /= m;
    return v;
  };
  std::set<QVec> got = {normalized(rays[0]), normalized(rays[1])};
  std::set<QVec> want = {{Rational(1), Rational(2), Rational(1)}, {Rational(2), Rational(1), Rational(1)}};
  EXPECT_EQ(got, want);
}
