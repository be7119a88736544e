#pragma once

// Lifting points of the local tropical variety to truncated series: the
// rational span of a weight, dimension descent by adjoining a homogeneous
// binomial, and Newton-Puiseux root extraction over a parameter embedding.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ltrop/cone.hpp"
#include "ltrop/errors.hpp"
#include "ltrop/factor.hpp"
#include "ltrop/ideals.hpp"
#include "ltrop/series.hpp"
#include "ltrop/tropical.hpp"
#include "ltrop/valfan.hpp"

namespace ltrop {

// ---------------------------------------------------------------------------
// Rational span

struct RationalSpan {
  std::size_t r = 0;
  std::vector<ValueScalar> gamma;
  std::vector<std::vector<Rational>> matrix;  // n x r, w_i = sum_j matrix[i][j] * gamma[j]
};

inline std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  std::vector<QVec> q(rows.begin(), rows.end());
  return cone_detail::rank(q, cols);
}

inline RationalSpan rational_span(const std::vector<ValueScalar>& w) {
  if (w.empty()) throw UsageError("empty weight");
  std::int64_t d = 1;
  for (const auto& v : w) {
    if (v.sign() <= 0) throw UsageError("weights must be finite and positive, got " + v.to_string());
    if (!v.is_rational()) {
      if (d != 1 && v.d() != d) throw UsageError("weights mix different square roots");
      d = v.d();
    }
  }
  RationalSpan s;
  bool any_a = false, any_b = false;
  for (const auto& v : w) {
    any_a = any_a || v.rational_part() != 0;
    any_b = any_b || v.sqrt_part() != 0;
  }
  if (!any_b) {
    s.gamma = {ValueScalar(1)};
    for (const auto& v : w) s.matrix.push_back({v.rational_part()});
  } else if (!any_a) {
    s.gamma = {ValueScalar::sqrt_d(d)};
    for (const auto& v : w) s.matrix.push_back({v.sqrt_part()});
  } else {
    std::vector<std::vector<Rational>> ab;
    for (const auto& v : w) ab.push_back({v.rational_part(), v.sqrt_part()});
    if (rational_rank(ab, 2) == 2) {
      s.gamma = {ValueScalar(1), ValueScalar::sqrt_d(d)};
      s.matrix = ab;
    } else {
      // All entries are rational multiples of the first one.
      s.gamma = {w.front()};
      const auto& g = w.front();
      for (const auto& v : w) {
        Rational ratio = g.rational_part() != 0 ? v.rational_part() / g.rational_part() : v.sqrt_part() / g.sqrt_part();
        s.matrix.push_back({ratio});
      }
    }
  }
  s.r = s.gamma.size();
  if (rational_rank(s.matrix, s.r) != s.r) throw InternalError("rational span has deficient rank");
  for (std::size_t i = 0; i < w.size(); ++i) {
    ValueScalar acc(0);
    for (std::size_t j = 0; j < s.r; ++j) acc += s.matrix[i][j] * s.gamma[j];
    if (!(acc == w[i])) throw InternalError("rational span does not reproduce the weight");
  }
  return s;
}

// Integer rows spanning the orthogonal complement of the columns of M.
inline std::vector<ZRow> complement_equations(const std::vector<std::vector<Rational>>& M, std::size_t n, std::size_t r) {
  // Row-reduce M^T (r x n) and read off its null space.
  std::vector<QVec> a(r, QVec(n));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < n; ++i) a[j][i] = M[i][j];
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < r; ++col) {
    std::size_t p = row;
    while (p < r && a[p][col] == 0) ++p;
    if (p == r) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t i = 0; i < r; ++i)
      if (i != row && a[i][col] != 0) {
        Rational f = a[i][col];
        for (std::size_t k = 0; k < n; ++k) a[i][k] -= f * a[row][k];
      }
    pivots.push_back(col);
    ++row;
  }
  std::vector<ZRow> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    QVec z(n);
    z[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) z[pivots[k]] = -a[k][free];
    out.push_back(primitive_row(integer_row(z), true));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Newton-Puiseux

namespace np_detail {

struct Context {
  ValueScalar N;
  ValueScalar cap;  // coefficient terms from t^cap on cannot affect roots modulo t^N
  NumberField* field;
  SeriesMode mode;
};

// Truncates at the cap only when that drops terms, so exact inputs stay exact.
inline ValuedSeries capped(const ValuedSeries& s, const ValueScalar& cap) {
  if (s.empty() || s.terms().back().first < cap) return s;
  return s.truncated(ExtValue(cap));
}

inline std::vector<ValuedSeries> taylor_shift(const std::vector<ValuedSeries>& G, const ValuedSeries& s, SeriesMode mode) {
  std::size_t deg = G.size() - 1;
  std::vector<ValuedSeries> spow{ValuedSeries::constant(AlgebraicNumber(1), mode)};
  for (std::size_t k = 1; k <= deg; ++k) spow.push_back(spow.back() * s);
  std::vector<ValuedSeries> out(G.size(), ValuedSeries(mode));
  for (std::size_t k = 0; k <= deg; ++k) {
    Integer binom = 1;
    for (std::size_t j = k; j <= deg; ++j) {
      if (j > k) binom = binom * static_cast<long>(j) / static_cast<long>(j - k);
      out[k] += AlgebraicNumber(Rational(binom)) * (G[j] * spow[j - k]);
    }
  }
  return out;
}

inline bool exact_zero(const ValuedSeries& s) { return s.empty() && s.is_exact(); }

[[noreturn]] inline void insufficient(const std::string& where) {
  throw CapabilityError("insufficient truncation: coefficient precision does not determine the Newton polygon " + where);
}

// Roots of G with valuation above `floor` (all roots when floor is empty);
// there are K of them. r is the partial root already subtracted.
inline void solve(const std::vector<ValuedSeries>& G, std::size_t K, const std::optional<ValueScalar>& floor,
                  const ValuedSeries& r, const Context& ctx, std::vector<ValuedSeries>& out) {
  std::size_t k0 = 0;
  while (k0 < K && exact_zero(G[k0])) ++k0;
  for (std::size_t i = 0; i < k0; ++i) out.push_back(r);
  if (k0 == K) return;
  // Lower hull of the points (k, order bound of G[k]) for k0 <= k <= K.
  std::vector<std::size_t> idx;
  for (std::size_t k = k0; k <= K; ++k)
    if (!exact_zero(G[k])) idx.push_back(k);
  auto val = [&](std::size_t k) { return G[k].order_bound().value(); };
  if (G[K].empty()) insufficient("at its right end");
  std::vector<std::size_t> hull;
  for (std::size_t k : idx) {
    while (hull.size() >= 2) {
      std::size_t a = hull[hull.size() - 2], b = hull.back();
      // Drop b if it lies on or above the segment from a to k.
      ValueScalar lhs = (val(b) - val(a)) * Rational(static_cast<long>(k - a));
      ValueScalar rhs = (val(k) - val(a)) * Rational(static_cast<long>(b - a));
      if (lhs >= rhs) hull.pop_back();
      else break;
    }
    hull.push_back(k);
  }
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    std::size_t i = hull[h], j = hull[h + 1];
    ValueScalar omega = (val(i) - val(j)) / Rational(static_cast<long>(j - i));
    if (floor && omega <= *floor) throw InternalError("Newton polygon slope below the current root order");
    if (omega >= ctx.N) {
      for (std::size_t m = i; m < j; ++m) out.push_back(r.truncated(ExtValue(ctx.N)));
      continue;
    }
    if (ctx.mode == SeriesMode::Puiseux && !omega.is_rational())
      throw UsageError("irrational root exponent " + omega.to_string() + " in puiseux mode");
    ValueScalar beta = val(i) + omega * Rational(static_cast<long>(i));
    std::vector<AlgebraicNumber> phi(j - i + 1, AlgebraicNumber(0));
    for (std::size_t k = i; k <= j; ++k) {
      if (exact_zero(G[k])) continue;
      ValueScalar line = beta - omega * Rational(static_cast<long>(k));
      if (G[k].empty()) {
        if (val(k) <= line) insufficient("near t^(" + omega.to_string() + ")");
        continue;
      }
      if (val(k) == line) phi[k - i] = G[k].leading_coeff();
    }
    if (G[i].empty() || G[j].empty()) insufficient("at a vertex");
    auto roots = all_roots(*ctx.field, APoly(phi));
    std::vector<std::pair<AlgebraicNumber, std::size_t>> distinct;
    for (const auto& c : roots) {
      auto it = std::find_if(distinct.begin(), distinct.end(), [&](const auto& p) { return p.first == c; });
      if (it == distinct.end()) distinct.emplace_back(c, 1);
      else ++it->second;
    }
    for (const auto& [c, mult] : distinct) {
      ValuedSeries s = ValuedSeries::monomial(c, omega, ctx.mode);
      auto shifted = taylor_shift(G, s, ctx.mode);
      for (auto& g : shifted) g = capped(g, ctx.cap);
      solve(shifted, mult, omega, r + s, ctx, out);
    }
  }
}

}  // namespace np_detail

// Roots in the series field of sum_k F[k] z^k, with multiplicity, each
// correct modulo t^N (exact roots keep an infinite truncation).
inline std::vector<ValuedSeries> newton_puiseux(std::vector<ValuedSeries> F, const ValueScalar& N, NumberField& field,
                                                SeriesMode mode) {
  while (!F.empty() && np_detail::exact_zero(F.back())) F.pop_back();
  if (F.size() < 2) throw UsageError("newton_puiseux needs a polynomial of degree at least 1");
  for (const auto& c : F)
    if (c.mode() != mode) throw UsageError("coefficient series mode does not match");
  std::size_t deg = F.size() - 1;
  if (F[deg].empty()) np_detail::insufficient("at the leading coefficient");
  // Coefficient terms above v(lead) + deg * (N + |least negative slope|)
  // cannot influence roots modulo t^N.
  ValueScalar margin(0);
  for (const auto& c : F)
    if (!c.empty() && c.terms().front().first < ValueScalar(0)) margin = std::max(margin, -c.terms().front().first);
  ValueScalar cap = F[deg].terms().front().first + (N + margin + margin) * Rational(static_cast<long>(deg));
  for (auto& c : F) c = np_detail::capped(c, cap);
  std::vector<ValuedSeries> out;
  np_detail::Context ctx{N, cap, &field, mode};
  np_detail::solve(F, deg, std::nullopt, ValuedSeries(mode), ctx, out);
  if (out.size() != deg) throw InternalError("Newton-Puiseux returned " + std::to_string(out.size()) + " roots for degree " + std::to_string(deg));
  return out;
}

// ---------------------------------------------------------------------------
// Descent

struct DescentStep {
  std::vector<Integer> w_prime;
  std::vector<Polynomial> J;
  std::vector<std::size_t> slice;  // coordinates set to 1
  std::vector<AlgebraicNumber> x0, y0;
  Polynomial f_tilde, f;
  bool nonzerodivisor = false, additivity = false, monomial_free = false;
  std::size_t dim_before = 0, dim_after = 0;
};

struct DescentResult {
  IdealPresentation ideal;
  DescentStep step;
};

// An integral weight in the relative interior of the Groebner cone of w
// intersected with the rational span of w.
inline std::vector<Integer> integral_weight(const IdealPresentation& I, const std::vector<ValueScalar>& w, const RationalSpan& span) {
  bool rational = std::all_of(w.begin(), w.end(), [](const ValueScalar& v) { return v.is_rational(); });
  QVec q(w.size());
  if (rational) {
    for (std::size_t i = 0; i < w.size(); ++i) q[i] = w[i].rational_part();
  } else {
    Cone c = groebner_cone(I, w).cone;
    for (auto& row : complement_equations(span.matrix, w.size(), span.r)) push_unique(c.eq, row);
    auto an = analyze(c);
    if (an.empty) throw InternalError("weight cone misses its own rational span");
    q = an.relint;
  }
  ZRow z = primitive_row(integer_row(q), false);
  return std::vector<Integer>(z.begin(), z.end());
}

inline DescentResult descend(const IdealPresentation& I, const std::vector<ValueScalar>& w, NumberField& field,
                             std::uint64_t seed = 0) {
  std::size_t n = I.nvars();
  check_weight(w, n);
  RationalSpan span = rational_span(w);
  std::size_t d = dimension(I);
  if (d <= span.r) throw UsageError("descent needs dimension above the rational rank (" + std::to_string(d) + " <= " + std::to_string(span.r) + ")");
  auto init = initial_ideal(I, w);
  if (!initial_is_monomial_free(init, n)) throw UsageError("descent needs a monomial-free initial ideal");

  DescentStep step;
  step.dim_before = d;
  step.w_prime = integral_weight(I, w, span);
  std::vector<ValueScalar> wp;
  for (const auto& v : step.w_prime) wp.emplace_back(Rational(v));
  step.J = initial_ideal(I, wp).generators;
  if (!ideals_equal(IdealPresentation::global(n, step.J), IdealPresentation::global(n, init.generators)))
    throw InternalError("integral weight changed the initial ideal");

  // Slice: the first r coordinates whose grading block is invertible.
  std::vector<std::vector<Rational>> W = span.matrix;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(span.r), true);
  std::reverse(pick.begin(), pick.end());
  do {
    std::vector<std::size_t> S;
    std::vector<std::vector<Rational>> block;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[n - 1 - i]) {
        S.push_back(i);
        block.push_back(W[i]);
      }
    if (rational_rank(block, span.r) == span.r) {
      step.slice = S;
      break;
    }
  } while (std::next_permutation(pick.begin(), pick.end()));
  if (step.slice.empty()) throw InternalError("no invertible grading block");

  PointSearch opts;
  opts.seed = seed;
  opts.fixed.assign(n, std::nullopt);
  for (auto i : step.slice) opts.fixed[i] = AlgebraicNumber(1);
  step.x0 = find_point(step.J, n, field, opts).point;
  opts.avoid.push_back(step.x0);

  for (int tries = 0; tries < 8; ++tries) {
    std::vector<AlgebraicNumber> y0;
    try {
      y0 = find_point(step.J, n, field, opts).point;
    } catch (const CapabilityError& e) {
      throw CapabilityError(std::string("descent witness failure: ") + e.what());
    }
    opts.avoid.push_back(y0);
    for (std::size_t j = 0; j < n; ++j) {
      if (std::find(step.slice.begin(), step.slice.end(), j) != step.slice.end()) continue;
      // Least power x_j^e - c^e that balances against the slice coordinates.
      Polynomial f_tilde(n), f(n);
      bool built = false;
      for (long e = 1; e <= 64 && !built; ++e) {
        AlgebraicNumber ce = step.x0[j].pow(e);
        if (ce == y0[j].pow(e)) break;
        Polynomial cand = Polynomial::variable(n, j).pow(static_cast<unsigned>(e)) - Polynomial(n, ce);
        try {
          f = homogenize(cand, W, step.slice);
          f_tilde = cand;
          built = true;
        } catch (const UsageError&) {
        }
      }
      if (!built) continue;
      IdealPresentation next = I.plus({f});
      try {
        step.additivity = init_additivity_check(I, f, w);
        step.nonzerodivisor = true;
      } catch (const UsageError&) {
        continue;
      }
      if (!step.additivity) throw InternalError("initial ideal not additive for a nonzerodivisor");
      step.monomial_free = initial_is_monomial_free(initial_ideal(next, w), n);
      if (!step.monomial_free) throw InternalError("descent produced a monomial in the initial ideal");
      step.dim_after = dimension(next);
      if (step.dim_after + 1 != d) throw InternalError("descent did not drop the dimension by one");
      step.y0 = y0;
      step.f_tilde = f_tilde;
      step.f = f;
      return {next, step};
    }
  }
  throw CapabilityError("descent witness failure: no separating binomial found");
}

// ---------------------------------------------------------------------------
// Lifting

struct LiftOptions {
  ValueScalar N = 10;
  SeriesMode mode = SeriesMode::Puiseux;
  std::uint64_t seed = 0;
  int precision_rounds = 4;
  std::size_t max_combinations = 4096;
};

struct VerifyReport {
  std::vector<SeriesValuation> achieved;
  std::vector<bool> valuation_ok;
  std::vector<SeriesValuation> residuals;
  std::vector<bool> residual_ok;
  bool pass = false;
};

struct LiftResult {
  std::vector<ValuedSeries> point;
  VerifyReport report;
  std::vector<DescentStep> descents;
  RationalSpan span;
  std::size_t dimension = 0;
  std::vector<std::size_t> coordinates;  // finite coordinates; descents and parameters index into these
  std::vector<std::size_t> parameters;
  ValueScalar working_precision;
  NumberField field;
};

inline bool residual_reaches(const SeriesValuation& v, const ValueScalar& N) {
  return v.kind == SeriesValuation::Infinite || v.value >= N;
}

inline VerifyReport verify_lift(const IdealPresentation& I, const std::vector<ValuedSeries>& point, const TropQuery& w,
                                const ValueScalar& N) {
  std::size_t n = I.nvars();
  if (point.size() != n || w.size() != n) throw UsageError("point and weight must have one entry per variable");
  VerifyReport rep;
  rep.pass = true;
  SeriesMode mode = point.empty() ? SeriesMode::Puiseux : point.front().mode();
  for (std::size_t i = 0; i < n; ++i) {
    auto v = point[i].valuation();
    bool ok = w[i].is_infinite() ? v.kind == SeriesValuation::Infinite
                                 : v.kind == SeriesValuation::Exact && v.value == w[i].value();
    rep.achieved.push_back(v);
    rep.valuation_ok.push_back(ok);
    rep.pass = rep.pass && ok;
  }
  for (const auto& g : I.generators()) {
    SeriesValuation v;
    bool ok;
    try {
      v = substitute(g, point, mode).valuation();
      ok = residual_reaches(v, N);
    } catch (const CapabilityError&) {
      v.kind = SeriesValuation::AtLeast;
      v.value = ValueScalar(0);
      ok = false;
    }
    rep.residuals.push_back(v);
    rep.residual_ok.push_back(ok);
    rep.pass = rep.pass && ok;
  }
  return rep;
}

namespace lift_detail {

// Coordinate system of parameters with Q-independent values.
inline std::vector<std::size_t> choose_parameters(const IdealPresentation& I, const RationalSpan& span) {
  std::size_t n = I.nvars(), r = span.r;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(r), true);
  std::reverse(pick.begin(), pick.end());
  do {
    std::vector<std::size_t> P;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[n - 1 - i]) {
        P.push_back(i);
        rows.push_back(span.matrix[i]);
      }
    if (rational_rank(rows, r) != r) continue;
    std::vector<Polynomial> more;
    for (auto i : P) more.push_back(Polynomial::variable(n, i));
    if (dimension(I.plus(more)) == 0) return P;
  } while (std::next_permutation(pick.begin(), pick.end()));
  throw CapabilityError("no coordinate system of parameters with independent values");
}

// Polynomial in x_P and x_j of least positive degree in x_j.
inline Polynomial defining_equation(const IdealPresentation& I, const std::vector<std::size_t>& P, std::size_t j) {
  std::size_t n = I.nvars();
  std::vector<bool> flags(n, true);
  for (auto i : P) flags[i] = false;
  flags[j] = false;
  std::optional<Polynomial> best;
  for (const auto& g : eliminate(I.generators(), flags)) {
    long deg = g.degree_in(j);
    if (deg < 1) continue;
    if (!best || deg < best->degree_in(j) || (deg == best->degree_in(j) && g.size() < best->size())) best = g;
  }
  if (!best) throw InternalError("coordinate is not algebraic over the parameters");
  return *best;
}

}  // namespace lift_detail

inline LiftResult lift_point(const IdealPresentation& I, const TropQuery& q, const LiftOptions& opts = {}) {
  std::size_t n = I.nvars();
  if (q.size() != n) throw UsageError("weight has length " + std::to_string(q.size()) + ", expected " + std::to_string(n));
  if (opts.N.sign() <= 0) throw UsageError("target truncation must be positive");
  for (const auto& v : q)
    if (v.is_finite() && opts.mode == SeriesMode::Puiseux && !v.value().is_rational())
      throw UsageError("puiseux mode needs rational weights; use hahn mode for " + v.to_string());
  auto membership = trop_member(I, q);
  if (!membership.member) throw NegativeResult("weight is not in the local tropical variety");

  LiftResult res;
  res.coordinates = membership.kept;
  std::size_t m = membership.kept.size();
  if (m == 0) {
    for (std::size_t i = 0; i < n; ++i) res.point.emplace_back(opts.mode, ExtValue::infinity());
    res.report = verify_lift(I, res.point, q, opts.N);
    return res;
  }
  std::vector<ValueScalar> w;
  for (auto i : membership.kept) w.push_back(q[i].value());
  NumberField field;
  IdealPresentation cur = IdealPresentation::local(m, membership.reduced);
  res.span = rational_span(w);
  res.dimension = dimension(cur);
  if (res.span.r > res.dimension) throw InternalError("rational rank exceeds the dimension of a member point");
  while (dimension(cur) > res.span.r) {
    auto step = descend(cur, w, field, opts.seed);
    cur = step.ideal;
    res.descents.push_back(std::move(step.step));
  }
  res.parameters = lift_detail::choose_parameters(cur, res.span);

  ValueScalar slack(0);
  for (const auto& v : w) slack = std::max(slack, v);
  ValueScalar work = opts.N + slack;
  std::vector<std::optional<ValuedSeries>> sub(m);
  for (auto i : res.parameters) sub[i] = ValuedSeries::monomial(AlgebraicNumber(1), w[i], opts.mode);
  std::vector<Polynomial> equations(m, Polynomial(m));
  for (std::size_t j = 0; j < m; ++j)
    if (!sub[j]) equations[j] = lift_detail::defining_equation(cur, res.parameters, j);

  for (int round = 0; round < opts.precision_rounds; ++round, work += slack) {
    std::vector<std::vector<ValuedSeries>> candidates(m);
    for (std::size_t j = 0; j < m; ++j) {
      if (sub[j]) {
        candidates[j] = {*sub[j]};
        continue;
      }
      std::vector<ValuedSeries> point(m, ValuedSeries(opts.mode));
      for (auto i : res.parameters) point[i] = *sub[i];
      std::vector<ValuedSeries> F(static_cast<std::size_t>(equations[j].degree_in(j)) + 1,
                                  ValuedSeries(opts.mode, ExtValue::infinity()));
      for (const auto& [e, c] : equations[j].terms()) {
        ValuedSeries term = ValuedSeries::constant(c, opts.mode);
        for (auto i : res.parameters)
          if (e[i]) term = term * point[i].pow(e[i]);
        F[e[j]] += term;
      }
      for (auto& root : newton_puiseux(F, work, field, opts.mode)) {
        auto v = root.valuation();
        if (!v.is_exact() || !(v.value == w[j])) continue;
        if (std::find(candidates[j].begin(), candidates[j].end(), root) == candidates[j].end())
          candidates[j].push_back(root);
      }
      if (candidates[j].empty()) throw InternalError("no root of the expected valuation " + w[j].to_string());
    }
    // First combination, in lexicographic order of candidate indices, that
    // satisfies every generator.
    std::vector<std::size_t> pos(m, 0);
    for (std::size_t tried = 0; tried < opts.max_combinations; ++tried) {
      std::vector<ValuedSeries> full(n, ValuedSeries(opts.mode, ExtValue::infinity()));
      for (std::size_t k = 0; k < m; ++k) full[membership.kept[k]] = candidates[k][pos[k]];
      auto rep = verify_lift(I, full, q, opts.N);
      if (rep.pass) {
        res.point = std::move(full);
        res.report = std::move(rep);
        res.working_precision = work;
        res.field = field;
        return res;
      }
      std::size_t k = m;
      while (k-- > 0) {
        if (++pos[k] < candidates[k].size()) break;
        pos[k] = 0;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
  }
  throw CapabilityError("insufficient truncation: no lift verified at working precision " + work.to_string());
}

}  // namespace ltrop
