// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli_cases.hpp"
#include "test_support.hpp"

using namespace ltrop;
using namespace support;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

// Member points collected by the round trip, reused by the rank bound check.
struct MemberPoint {
  std::string ideal;
  std::vector<ValueScalar> w;
  std::size_t dim;
};
std::vector<MemberPoint> g_members;

void cusp(Outcome& o) {
  Ring ring = R("x,y");
  auto I = IdealPresentation::local(2, Ps({"y^2 - x^3"}, ring));
  LiftOptions opts;
  opts.N = 10;
  auto t0 = Clock::now();
  auto res = lift_point(I, EW("2,3"), opts);
  double dt = seconds_since(t0);
  o.require(res.report.pass, "verification");
  o.require(res.report.achieved[0].is_exact() && res.report.achieved[0].value == ValueScalar(2), "x valuation");
  o.require(res.report.achieved[1].is_exact() && res.report.achieved[1].value == ValueScalar(3), "y valuation");
  o.require(res.report.residuals[0].kind == SeriesValuation::Infinite, "residual support not empty");
  o.require(dt < 1.0, "runtime");
  o.detail << "point (" << res.point[0].to_string() << ", " << res.point[1].to_string() << "), residual "
           << res.report.residuals[0].to_string() << ", " << dt << " s";
}

void node(Outcome& o) {
  Ring ring = R("x,y");
  auto I = IdealPresentation::local(2, Ps({"y^2 - x^2 - x^3"}, ring));
  LiftOptions opts;
  opts.N = 5;
  auto res = lift_point(I, EW("1,1"), opts);
  o.require(res.report.pass, "verification");
  const auto& y = res.point[1];
  AlgebraicNumber sign = y.leading_coeff();
  o.require(sign == AlgebraicNumber(1) || sign == AlgebraicNumber(-1), "leading coefficient");
  // y = +-x*(1 + x)^(1/2) with x = t.
  for (long k = 0; k < 5; ++k)
    o.require(y.coeff(ValueScalar(k + 1)) == sign * AlgebraicNumber(half_binomial(k)), "coefficient of t^" + std::to_string(k + 1));
  o.require(residual_reaches(res.report.residuals[0], ValueScalar(5)), "residual below 5");
  o.detail << "y = " << y.to_string() << ", residual " << res.report.residuals[0].to_string();
}

void round_trip(Outcome& o) {
  auto t0 = Clock::now();
  std::size_t ideals = 0, points = 0, members = 0, min_grid = 1000;
  for (const auto& c : corpus()) {
    auto I = corpus_ideal(c);
    std::size_t dim = dimension(I);
    auto grid = weight_grid(I.nvars());
    min_grid = std::min(min_grid, grid.size());
    ++ideals;
    for (const auto& w : grid) {
      ++points;
      bool member = trop_member(I, w).member;
      LiftOptions opts;
      opts.N = 4;
      try {
        auto res = lift_point(I, w, opts);
        o.require(member, c.name + ": lift succeeded off the tropical variety");
        o.require(res.report.pass && verify_lift(I, res.point, w, opts.N).pass, c.name + ": verification");
        ++members;
        std::vector<ValueScalar> wv;
        for (const auto& v : w) wv.push_back(v.value());
        g_members.push_back({c.name, wv, dim});
      } catch (const NegativeResult&) {
        o.require(!member, c.name + ": member rejected");
      } catch (const std::exception& e) {
        o.require(false, c.name + ": " + e.what());
      }
    }
  }
  double dt = seconds_since(t0);
  o.require(ideals >= 10 && min_grid >= 50, "corpus size");
  o.require(dt < 60.0, "runtime");
  o.detail << ideals << " ideals, " << points << " weights, " << members << " lifted, " << dt << " s";
}

void descent(Outcome& o) {
  for (std::size_t n : {3u, 4u}) {
    Ring ring = named_ring("x", n);
    std::string sum = "x1";
    for (std::size_t i = 2; i <= n; ++i) sum += " + x" + std::to_string(i);
    auto I = IdealPresentation::local(n, Ps({sum}, ring));
    std::vector<ExtValue> w(n, ExtValue(1));
    auto res = lift_point(I, w);
    o.require(res.descents.size() == n - 2, std::to_string(n) + " variables: descent count");
    for (const auto& s : res.descents) {
      o.require(s.nonzerodivisor && s.additivity && s.monomial_free, "certificates");
      o.require(s.dim_before == s.dim_after + 1, "dimension drop");
    }
    if (n == 3 && !res.descents.empty())
      o.require(res.descents[0].dim_before == 2 && res.descents[0].dim_after == 1, "3 variables: dimension 2 to 1");
    for (const auto& c : res.point) o.require(c.valuation().is_exact() && c.valuation().value == ValueScalar(1), "valuation 1");
    o.require(res.report.pass, "verification");
    o.detail << n << " variables: " << res.descents.size() << " descents, point (";
    for (std::size_t i = 0; i < n; ++i) o.detail << (i ? ", " : "") << res.point[i].to_string();
    o.detail << "); ";
  }
}

// Random pairs with disjoint variables and a tropical weight on each side.
struct Side {
  Ring ring;
  std::vector<Polynomial> gens;
  std::vector<ValueScalar> w;
};

std::optional<Side> random_side(std::mt19937_64& rng, const std::string& prefix) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
  Side s{named_ring(prefix, n), random_ideal(rng, n, 1), {}};
  auto I = IdealPresentation::local(n, s.gens);
  auto fan = trop_enumerate(I, 64, 0);
  for (const auto& tc : fan.cones)
    if (tc.member) {
      for (const auto& v : tc.relint) s.w.emplace_back(v);
      return s;
    }
  return std::nullopt;
}

std::vector<std::pair<Side, Side>> pair_corpus() {
  std::mt19937_64 rng(2024);
  std::vector<std::pair<Side, Side>> out;
  while (out.size() < 24) {
    auto a = random_side(rng, "x"), b = random_side(rng, "y");
    if (a && b) out.emplace_back(*a, *b);
  }
  return out;
}

void tensor(Outcome& o) {
  auto pairs = pair_corpus();
  for (const auto& [a, b] : pairs) {
    auto I = IdealPresentation::local(a.ring.size(), a.gens), J = IdealPresentation::local(b.ring.size(), b.gens);
    auto res = tensor_combine(a.ring, I, a.w, b.ring, J, b.w);
    o.require(res.inputs_monomial_free, "inputs monomial free");
    o.require(res.step3_initial_equality, "initial ideal equality");
    o.require(res.step4_monomial_free, "combined initial ideal monomial free");
  }
  o.detail << pairs.size() << " pairs";
}

void stability(Outcome& o) {
  auto pairs = pair_corpus();
  for (const auto& [a, b] : pairs) {
    std::size_t n1 = a.ring.size(), n2 = b.ring.size(), n = n1 + n2;
    std::vector<std::size_t> m1(n1), m2(n2);
    for (std::size_t k = 0; k < n1; ++k) m1[k] = k;
    for (std::size_t k = 0; k < n2; ++k) m2[k] = n1 + k;
    for (const auto& ord_pair : {std::make_pair(OrderDescriptor::global(n1), OrderDescriptor::global(n)),
                                 std::make_pair(OrderDescriptor::lex(n1), OrderDescriptor::lex(n))}) {
      auto gb = extend_vars(standard_basis(a.gens, ord_pair.first).basis, n, m1);
      o.require(buchberger_criterion(gb, ord_pair.second), "S-pairs of the extended basis");
    }
    // The second factor sits in the trailing variables; grevlex restricts to grevlex there too.
    auto gbj = extend_vars(standard_basis(b.gens, OrderDescriptor::global(n2)).basis, n, m2);
    o.require(buchberger_criterion(gbj, OrderDescriptor::global(n)), "S-pairs of the second factor");
    auto I = extend_vars(a.gens, n, m1), J = extend_vars(b.gens, n, m2);
    std::vector<Polynomial> prod;
    for (const auto& f : I)
      for (const auto& g : J) prod.push_back(f * g);
    o.require(ideals_equal(IdealPresentation::global(n, intersect(I, J, n)), IdealPresentation::global(n, prod)),
              "intersection equals product");
  }
  o.detail << pairs.size() << " pairs";
}

void valuation_axioms(Outcome& o) {
  std::mt19937_64 rng(7);
  std::size_t pairs = 0;
  for (const auto& spec : valuation_handles()) {
    Ring ring = R(spec.vars);
    CosetValuationHandle h(IdealPresentation::local(ring.size(), Ps(spec.gens, ring)), W(spec.w));
    o.require(h.monomial_free(), "handle monomial free");
    for (int i = 0; i < 200; ++i, ++pairs) {
      auto g = random_poly(rng, ring.size(), 3, 3, true), k = random_poly(rng, ring.size(), 3, 3, true);
      auto vg = coset_valuation(g, h), vk = coset_valuation(k, h);
      o.require(coset_valuation(g * k, h) == vg + vk, "multiplicativity");
      o.require(coset_valuation(g + k, h) >= min(vg, vk), "ultrametric inequality");
      o.require(vg >= w_order(g, h.w()), "bounded below by the w-order");
    }
  }
  o.detail << valuation_handles().size() << " handles, " << pairs << " pairs";
}

void newton(Outcome& o) {
  std::mt19937_64 rng(99);
  ValueScalar N(3);
  for (int i = 0; i < 100; ++i) {
    auto c = random_np_case(rng);
    NumberField field;
    auto roots = newton_puiseux(c.F, N, field, SeriesMode::Puiseux);
    o.require(roots.size() == c.F.size() - 1, "root count");
    o.require(same_roots_mod(roots, c.factors, N), "root multiset in case " + std::to_string(i));
  }
  o.detail << "100 products, truncation 3";
}

void hahn(Outcome& o) {
  Ring ring = R("x,y,z");
  auto I = IdealPresentation::local(3, Ps({"x*y - z^2"}, ring));
  auto w = EW("1,sqrt(2),1/2+1/2*sqrt(2)");
  o.require(trop_member(I, w).member, "membership");
  LiftOptions opts;
  opts.mode = SeriesMode::Hahn;
  auto res = lift_point(I, w, opts);
  const char* want[] = {"t^(1)", "t^(1*sqrt(2))", "t^(1/2+1/2*sqrt(2))"};
  for (int i = 0; i < 3; ++i) o.require(res.point[i].to_string() == want[i], "coordinate " + std::to_string(i));
  o.require(res.report.pass && res.report.residuals[0].kind == SeriesValuation::Infinite, "exact residual");
  std::vector<ValueScalar> wv;
  for (const auto& v : w) wv.push_back(v.value());
  g_members.push_back({"quadric_cone (irrational)", wv, dimension(I)});
  o.detail << "point (" << res.point[0].to_string() << ", " << res.point[1].to_string() << ", " << res.point[2].to_string() << ")";
}

void abhyankar(Outcome& o) {
  o.require(!g_members.empty(), "no member points collected");
  std::size_t max_r = 0;
  for (const auto& m : g_members) {
    auto r = rational_span(m.w).r;
    max_r = std::max(max_r, r);
    o.require(r <= m.dim, m.ideal + ": rank exceeds dimension");
  }
  o.detail << g_members.size() << " member points, largest rank " << max_r;
}

void determinism(Outcome& o) {
  const std::string fixtures = LTROP_FIXTURES, cli = LTROP_CLI;
  auto cases = cli_cases::load(fixtures);
  for (const auto& c : cases) {
    auto a = cli_cases::run(cli, c.args), b = cli_cases::run(cli, c.args);
    o.require(a.out == b.out && a.exit_code == b.exit_code, c.name + ": runs differ");
    o.require(a.out == cli_cases::slurp(cli_cases::golden_path(fixtures, c)), c.name + ": golden mismatch");
    o.require(a.exit_code == c.exit_code, c.name + ": exit code");
  }
  o.detail << cases.size() << " golden cases run twice";
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"cusp golden lift", cusp},
      {"node golden lift", node},
      {"membership and lifting round trip", round_trip},
      {"descent chain", descent},
      {"tensor certificates", tensor},
      {"Groebner stability and intersection", stability},
      {"coset valuation axioms", valuation_axioms},
      {"Newton-Puiseux reconstruction", newton},
      {"irrational (Hahn) lift", hahn},
      {"rank bound on member points", abhyankar},
      {"CLI determinism", determinism},
  };
  int failed = 0, index = 0;
  for (auto& [name, fn] : criteria) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << ++index << "] " << name << " (" << seconds_since(t0) << " s): " << o.detail.str()
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
