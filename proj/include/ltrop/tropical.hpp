#pragma once

// Local tropicalization over k[[x1..xn]]: pointwise membership (with +inf
// coordinates), tropical hypersurfaces and bounded Groebner fan traversal.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ltrop/cone.hpp"
#include "ltrop/errors.hpp"
#include "ltrop/ideals.hpp"
#include "ltrop/valfan.hpp"

namespace ltrop {

using TropQuery = std::vector<ExtValue>;

struct TropMemberResult {
  bool member = false;
  std::vector<std::size_t> zeroed;  // coordinates at +inf, set to 0
  std::vector<std::size_t> kept;    // finite coordinates, in order
  std::vector<Polynomial> reduced;  // generators after the substitution, in the kept variables
  std::vector<Polynomial> initial;  // generators of the initial ideal of the reduced ideal
  std::optional<Exponent> witness;  // monomial in the initial ideal, for non-members
};

// Drops the variables not listed in `kept`; they must not occur in f.
inline Polynomial restrict_vars(const Polynomial& f, const std::vector<std::size_t>& kept) {
  Polynomial out(kept.size());
  for (const auto& [e, c] : f.terms()) {
    Exponent r(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) r[i] = e[kept[i]];
    out.add_term(r, c);
  }
  return out;
}

inline TropMemberResult trop_member(const IdealPresentation& I, const TropQuery& q) {
  std::size_t n = I.nvars();
  if (q.size() != n) throw UsageError("query has length " + std::to_string(q.size()) + ", expected " + std::to_string(n));
  if (!I.is_local()) throw UsageError("tropical membership needs a local ideal");
  TropMemberResult out;
  std::vector<std::optional<AlgebraicNumber>> subst(n);
  std::vector<ValueScalar> w;
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i].is_infinite()) {
      out.zeroed.push_back(i);
      subst[i] = AlgebraicNumber(0);
    } else {
      if (q[i].value().sign() <= 0) throw UsageError("finite entries must be positive, got " + q[i].to_string());
      out.kept.push_back(i);
      w.push_back(q[i].value());
    }
  }
  for (const auto& g : I.generators()) {
    Polynomial r = restrict_vars(g.substitute(subst), out.kept);
    if (!r.is_zero()) out.reduced.push_back(r);
  }
  // Generators lie in the maximal ideal, so the quotient stays proper.
  if (out.kept.empty()) {
    out.member = true;
    return out;
  }
  std::size_t m = out.kept.size();
  auto data = initial_ideal(IdealPresentation::local(m, out.reduced), w);
  out.initial = data.generators;
  auto test = contains_monomial(IdealPresentation::global(m, data.generators));
  out.member = !test.contains;
  out.witness = test.witness;
  return out;
}

struct TropCone {
  GroebnerCone cone;
  bool member = false;
  std::vector<Polynomial> initial;
  QVec relint;
  std::size_t dim = 0;
};

inline void sort_cones(std::vector<TropCone>& cones) {
  std::vector<std::pair<std::string, TropCone>> keyed;
  for (auto& c : cones) keyed.emplace_back(canonical(c.cone.cone).key(), std::move(c));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.dim != b.second.dim) return a.second.dim > b.second.dim;
    return a.first < b.first;
  });
  cones.clear();
  for (auto& [k, c] : keyed) cones.push_back(std::move(c));
}

inline constexpr std::size_t kMaxHypersurfaceSupport = 14;

// Cones of the open orthant on which the minimum of <w, M> over the support
// of f is attained by at least two exponents.
inline std::vector<TropCone> trop_hypersurface(const Polynomial& f) {
  if (f.is_zero()) throw UsageError("tropical hypersurface of the zero polynomial");
  if (!coeff_is_zero(f.constant_term())) throw UsageError("polynomial must vanish at the origin");
  std::size_t n = f.nvars();
  std::vector<Exponent> support;
  std::vector<AlgebraicNumber> coeffs;
  for (const auto& [e, c] : f.terms()) {
    support.push_back(e);
    coeffs.push_back(c);
  }
  std::size_t s = support.size();
  if (s > kMaxHypersurfaceSupport)
    throw CapabilityError("hypersurface support of size " + std::to_string(s) + " exceeds " +
                          std::to_string(kMaxHypersurfaceSupport));
  auto diff = [&](const Exponent& a, const Exponent& b) {
    ZRow row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = Integer(static_cast<long>(a[i])) - Integer(static_cast<long>(b[i]));
    return row;
  };
  std::vector<TropCone> out;
  for (unsigned long mask = 1; mask < (1UL << s); ++mask) {
    if (__builtin_popcountl(mask) < 2) continue;
    std::size_t first = static_cast<std::size_t>(__builtin_ctzl(mask));
    Cone c{n, {}, {}, true};
    std::vector<ZRow> strict;
    for (std::size_t j = 0; j < s; ++j) {
      if (j == first) continue;
      if (mask >> j & 1UL)
        push_unique(c.eq, primitive_row(diff(support[j], support[first]), true));
      else
        push_unique(strict, primitive_row(diff(support[j], support[first]), false));
    }
    c.ineq = strict;
    auto an = analyze(c);
    if (an.empty) continue;
    if (std::any_of(an.implicit.begin(), an.implicit.end(), [](bool b) { return b; })) continue;
    for (std::size_t i = 0; i < n; ++i) {
      ZRow e(n, 0);
      e[i] = 1;
      push_unique(c.ineq, e);
    }
    std::sort(c.eq.begin(), c.eq.end());
    std::sort(c.ineq.begin(), c.ineq.end());
    TropCone tc;
    tc.cone.cone = c;
    tc.member = true;
    Polynomial in(n);
    for (std::size_t j = 0; j < s; ++j)
      if (mask >> j & 1UL) in.add_term(support[j], coeffs[j]);
    tc.initial = {in};
    tc.relint = an.relint;
    tc.dim = an.dim;
    out.push_back(std::move(tc));
  }
  sort_cones(out);
  return out;
}

struct TropFan {
  std::vector<TropCone> cones;
  bool truncated = false;
  std::vector<Integer> start;  // generic starting weight
};

namespace trop_detail {

inline std::vector<ValueScalar> to_weight(const QVec& p) {
  std::vector<ValueScalar> w;
  for (const auto& v : p) w.emplace_back(v);
  return w;
}

}  // namespace trop_detail

// Breadth-first traversal of the Groebner fan in the open orthant: facets
// are crossed to reach neighbouring maximal cones and enqueued to reach
// lower-dimensional cones. Stops after `budget` cones.
inline TropFan trop_enumerate(const IdealPresentation& I, std::size_t budget, std::uint64_t seed = 0) {
  if (!I.is_local()) throw UsageError("fan enumeration needs a local ideal");
  if (budget == 0) throw UsageError("budget must be positive");
  std::size_t n = I.nvars();
  TropFan fan;
  auto cone_at = [&](const QVec& p) {
    auto w = trop_detail::to_weight(p);
    auto data = initial_ideal(I, w);
    return std::make_pair(cone_from_basis(data.basis, w, data.order, n), data);
  };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, 97);
  QVec start;
  for (int attempt = 0;; ++attempt) {
    start.assign(n, Rational(0));
    for (auto& v : start) v = Rational(dist(rng));
    if (analyze(cone_at(start).first.cone).dim == n) break;
    if (attempt == 32) throw CapabilityError("no generic starting weight found");
  }
  for (const auto& v : start) fan.start.push_back(v.get_num());

  std::deque<QVec> queue{start};
  std::set<std::string> seen;
  while (!queue.empty()) {
    QVec p = queue.front();
    queue.pop_front();
    auto [gc, data] = cone_at(p);
    auto key = canonical(gc.cone).key();
    if (seen.count(key)) continue;
    if (fan.cones.size() == budget) {
      fan.truncated = true;
      break;
    }
    seen.insert(key);
    auto an = analyze(gc.cone);
    TropCone tc{gc, initial_is_monomial_free(data, n), data.generators, an.relint, an.dim};
    fan.cones.push_back(tc);
    for (const auto& face : facets(gc.cone)) {
      QVec q = analyze(face).relint;
      queue.push_back(q);
      if (an.dim != n) continue;
      // Step across the facet until the neighbouring cone touches q.
      const ZRow& normal = face.eq.back();
      Rational scale = 0, lo = q[0];
      for (std::size_t i = 0; i < n; ++i) {
        scale = std::max(scale, Rational(abs(normal[i])));
        lo = std::min(lo, q[i]);
      }
      Rational eps = lo / (2 * scale);
      for (int halving = 0; halving < 40; ++halving, eps /= 2) {
        QVec r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = q[i] - eps * Rational(normal[i]);
        auto neighbour = cone_at(r).first;
        if (contains(neighbour.cone, q) && analyze(neighbour.cone).dim == n) {
          queue.push_back(r);
          break;
        }
      }
    }
  }
  sort_cones(fan.cones);
  return fan;
}

}  // namespace ltrop
