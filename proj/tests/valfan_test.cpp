#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace ltrop;
using namespace support;

TEST(InitialIdeal, CuspAndNode) {
  Ring ring = R("x,y");
  auto cusp = IdealPresentation::local(2, Ps({"y^2 - x^3"}, ring));
  auto d = initial_ideal(cusp, W("2,3"));
  ASSERT_EQ(d.generators.size(), 1u);
  EXPECT_EQ(d.generators[0], P("y^2 - x^3", ring));
  EXPECT_TRUE(initial_is_monomial_free(d, 2));
  auto e = initial_ideal(cusp, W("1,1"));
  EXPECT_EQ(e.generators[0], P("y^2", ring));
  EXPECT_FALSE(initial_is_monomial_free(e, 2));
}

TEST(InitialIdeal, RejectsNonPositiveWeights) {
  Ring ring = R("x,y");
  auto I = IdealPresentation::local(2, Ps({"y^2 - x^3"}, ring));
  EXPECT_THROW(initial_ideal(I, W("0,1")), UsageError);
  EXPECT_THROW(initial_ideal(I, W("1")), UsageError);
}

TEST(CosetValuation, HandExamples) {
  Ring ring = R("x,y");
  CosetValuationHandle h(IdealPresentation::local(2, Ps({"y^2 - x^3"}, ring)), W("2,3"));
  EXPECT_EQ(coset_valuation(P("x", ring), h), ExtValue(2));
  EXPECT_EQ(coset_valuation(P("y", ring), h), ExtValue(3));
  EXPECT_EQ(coset_valuation(P("y^2 - x^3", ring), h), ExtValue::infinity());
  // y^2 - x^3 + x^5 is x^5 modulo I.
  EXPECT_EQ(coset_valuation(P("y^2 - x^3 + x^5", ring), h), ExtValue(10));
  CosetValuationHandle bad(IdealPresentation::local(2, Ps({"y^2 - x^3"}, ring)), W("1,1"));
  EXPECT_THROW(coset_valuation(P("x", ring), bad), UsageError);
}

TEST(CosetValuation, AxiomsOnRandomPairs) {
  std::mt19937_64 rng(31);
  for (const auto& spec : valuation_handles()) {
    Ring ring = R(spec.vars);
    CosetValuationHandle h(IdealPresentation::local(ring.size(), Ps(spec.gens, ring)), W(spec.w));
    ASSERT_TRUE(h.monomial_free());
    for (int i = 0; i < 25; ++i) {
      auto g = random_poly(rng, ring.size(), 3, 3, true), k = random_poly(rng, ring.size(), 3, 3, true);
      auto vg = coset_valuation(g, h), vk = coset_valuation(k, h);
      EXPECT_EQ(coset_valuation(g * k, h), vg + vk);
      EXPECT_GE(coset_valuation(g + k, h), min(vg, vk));
      EXPECT_GE(vg, w_order(g, h.w()));
    }
  }
}

TEST(GroebnerCone, MatchesHandComputedCones) {
  Ring ring = R("x,y");
  auto cusp = IdealPresentation::local(2, Ps({"y^2 - x^3"}, ring));
  EXPECT_EQ(groebner_cone(cusp, W("2,3")).to_json(), "{\"eq\":[[3,-2]],\"ineq\":[[0,1],[1,0]]}");
  auto line = IdealPresentation::local(2, Ps({"x - y"}, ring));
  EXPECT_EQ(groebner_cone(line, W("1,1")).to_json(), "{\"eq\":[[1,-1]],\"ineq\":[[0,1],[1,0]]}");
}

TEST(GroebnerCone, InitialIdealIsConstantOnTheCone) {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<long> coord(1, 9);
  for (const auto& c : corpus()) {
    auto I = corpus_ideal(c);
    std::size_t n = I.nvars();
    for (int i = 0; i < 3; ++i) {
      auto w = random_weight(rng, n);
      auto gc = groebner_cone(I, w);
      QVec wq;
      for (const auto& v : w) wq.push_back(v.rational_part());
      EXPECT_TRUE(contains(gc.cone, wq)) << c.name;
      auto base = initial_ideal(I, w);
      auto an = analyze(gc.cone);
      std::vector<QVec> samples = {an.relint};
      for (int k = 0; k < 20; ++k) {
        QVec q;
        for (std::size_t j = 0; j < n; ++j) q.push_back(Rational(coord(rng)));
        if (contains(gc.cone, q, true)) samples.push_back(q);
      }
      for (const auto& q : samples) {
        std::vector<ValueScalar> wv(q.begin(), q.end());
        auto other = initial_ideal(I, wv);
        EXPECT_TRUE(ideals_equal(IdealPresentation::global(n, base.generators), IdealPresentation::global(n, other.generators)))
            << c.name;
      }
    }
  }
}

TEST(Tensor, CertificatesOnRandomPairs) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 10; ++i) {
    std::size_t n1 = 1 + i % 3, n2 = 1 + (i / 3) % 3;
    Ring X = named_ring("x", n1), Y = named_ring("y", n2);
    auto I = IdealPresentation::local(n1, random_ideal(rng, n1, 2));
    auto J = IdealPresentation::local(n2, random_ideal(rng, n2, 2));
    auto res = tensor_combine(X, I, random_weight(rng, n1), Y, J, random_weight(rng, n2));
    EXPECT_TRUE(res.step3_initial_equality);
    EXPECT_TRUE(res.certificate());
  }
}

TEST(Tensor, RejectsSharedVariables) {
  Ring X = R("x,y"), Y = R("y,z");
  auto I = IdealPresentation::local(2, Ps({"y^2 - x^3"}, X));
  auto J = IdealPresentation::local(2, Ps({"y - z^2"}, Y));
  EXPECT_THROW(tensor_combine(X, I, W("2,3"), Y, J, W("2,1")), UsageError);
}

TEST(Tensor, GroebnerBasesStayGroebnerInTheLargerRing) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 10; ++i) {
    std::size_t n1 = 1 + i % 3, n2 = 1 + (i / 3) % 3, n = n1 + n2;
    auto I = random_ideal(rng, n1, 2);
    std::vector<std::size_t> map(n1);
    for (std::size_t k = 0; k < n1; ++k) map[k] = k;
    auto ext = OrderDescriptor::global(n);
    auto basis = extend_vars(standard_basis(I, OrderDescriptor::global(n1)).basis, n, map);
    EXPECT_TRUE(buchberger_criterion(basis, ext));
    (void)n2;
  }
}

TEST(Tensor, IntersectionEqualsProduct) {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 8; ++i) {
    std::size_t n1 = 1 + i % 2, n2 = 1 + (i / 2) % 2, n = n1 + n2;
    std::vector<std::size_t> m1(n1), m2(n2);
    for (std::size_t k = 0; k < n1; ++k) m1[k] = k;
    for (std::size_t k = 0; k < n2; ++k) m2[k] = n1 + k;
    auto I = extend_vars(random_ideal(rng, n1, 2), n, m1);
    auto J = extend_vars(random_ideal(rng, n2, 2), n, m2);
    std::vector<Polynomial> prod;
    for (const auto& a : I)
      for (const auto& b : J) prod.push_back(a * b);
    EXPECT_TRUE(ideals_equal(IdealPresentation::global(n, intersect(I, J, n)), IdealPresentation::global(n, prod)));
  }
}

TEST(InitAdditivity, HyperplaneSectionOfAPlane) {
  Ring ring = R("x1,x2,x3");
  auto I = IdealPresentation::local(3, Ps({"x1 + x2 + x3"}, ring));
  EXPECT_TRUE(init_additivity_check(I, P("x2 - x1", ring), W("1,1,1")));
  EXPECT_THROW(init_additivity_check(I, P("x1 + x2 + x3", ring), W("1,1,1")), UsageError);
  EXPECT_THROW(init_additivity_check(I, P("x1 - x2^2", ring), W("1,1,1")), UsageError);
}
