#pragma once

// Standard and Groebner bases (Buchberger with the sugar strategy for global
// orders, Mora's tangent-cone normal form for local orders) and the ideal
// operations built on them.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ltrop/errors.hpp"
#include "ltrop/factor.hpp"
#include "ltrop/polynomial.hpp"

namespace ltrop {

// ---------------------------------------------------------------------------
// Ordered term lists used inside the engine

namespace gb_detail {

struct OTerm {
  Exponent e;
  OrderDescriptor::Key k;
  AlgebraicNumber c;
};
// Terms sorted with the leading term first.
using OPoly = std::vector<OTerm>;

inline OrderDescriptor::Key add_keys(const OrderDescriptor::Key& x, const OrderDescriptor::Key& y) {
  return {x.a + y.a, x.b + y.b, x.deg + y.deg};
}

inline OPoly to_opoly(const Polynomial& f, const OrderDescriptor& ord) {
  OPoly p;
  p.reserve(f.size());
  for (const auto& [e, c] : f.terms()) p.push_back({e, ord.key(e), c});
  std::sort(p.begin(), p.end(), [&](const OTerm& a, const OTerm& b) { return ord.compare(a.e, a.k, b.e, b.k) > 0; });
  return p;
}

inline Polynomial to_poly(const OPoly& p, std::size_t n) {
  Polynomial f(n);
  for (const auto& t : p) f.add_term(t.e, t.c);
  return f;
}

// f[from..] - c * x^m * g, merged in order.
inline OPoly sub_mul(const OPoly& f, std::size_t from, const AlgebraicNumber& c, const Exponent& m,
                     const OrderDescriptor::Key& mk, const OPoly& g, const OrderDescriptor& ord) {
  OPoly out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 0;
  Exponent ge;
  while (i < f.size() || j < g.size()) {
    if (j < g.size()) ge = g[j].e + m;
    int cmp = 0;
    OrderDescriptor::Key gk;
    if (j < g.size()) gk = add_keys(g[j].k, mk);
    if (i >= f.size()) cmp = -1;
    else if (j >= g.size()) cmp = 1;
    else cmp = ord.compare(f[i].e, f[i].k, ge, gk);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({ge, gk, -(c * g[j].c)});
      ++j;
    } else {
      AlgebraicNumber v = f[i].c - c * g[j].c;
      if (!is_zero(v)) out.push_back({f[i].e, f[i].k, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

inline void make_monic(OPoly& p) {
  if (p.empty() || p.front().c.is_one()) return;
  AlgebraicNumber inv = p.front().c.inverse();
  for (auto& t : p) t.c = t.c * inv;
}

inline long max_degree(const OPoly& p) {
  long d = 0;
  for (const auto& t : p) d = std::max(d, t.k.deg);
  return d;
}

inline long ecart(const OPoly& p) { return p.empty() ? 0 : max_degree(p) - p.front().k.deg; }

// Full (global) reduction: no term of the result is divisible by a leading
// term of the basis.
inline OPoly reduce_global(OPoly p, const std::vector<OPoly>& basis, const OrderDescriptor& ord, bool tail = true) {
  OPoly rem;
  std::size_t start = 0;
  while (start < p.size()) {
    const OTerm& lead = p[start];
    const OPoly* div = nullptr;
    for (const auto& g : basis)
      if (!g.empty() && divides(g.front().e, lead.e)) {
        div = &g;
        break;
      }
    if (!div) {
      if (!tail) {
        rem.insert(rem.end(), p.begin() + static_cast<long>(start), p.end());
        return rem;
      }
      rem.push_back(lead);
      ++start;
      continue;
    }
    Exponent m = lead.e - div->front().e;
    AlgebraicNumber c = lead.c / div->front().c;
    p = sub_mul(p, start, c, m, ord.key(m), *div, ord);
    start = 0;
  }
  return rem;
}

// Mora's normal form for local orders (tangent-cone algorithm with ecart
// selection). Only leading terms are reduced.
inline OPoly reduce_mora(OPoly h, const std::vector<OPoly>& basis, const OrderDescriptor& ord) {
  std::vector<OPoly> extra;
  std::vector<long> ecarts;
  for (const auto& g : basis) ecarts.push_back(ecart(g));
  std::vector<long> extra_ecarts;
  std::size_t guard = 0;
  while (!h.empty()) {
    if (++guard > 200000) throw CapabilityError("Mora normal form did not terminate within the step bound");
    const OPoly* best = nullptr;
    long best_ecart = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (divides(basis[i].front().e, h.front().e) && (!best || ecarts[i] < best_ecart)) {
        best = &basis[i];
        best_ecart = ecarts[i];
      }
    for (std::size_t i = 0; i < extra.size(); ++i)
      if (divides(extra[i].front().e, h.front().e) && (!best || extra_ecarts[i] < best_ecart)) {
        best = &extra[i];
        best_ecart = extra_ecarts[i];
      }
    if (!best) return h;
    OPoly g = *best;
    long eh = ecart(h);
    if (best_ecart > eh) {
      extra.push_back(h);
      extra_ecarts.push_back(eh);
    }
    Exponent m = h.front().e - g.front().e;
    AlgebraicNumber c = h.front().c / g.front().c;
    h = sub_mul(h, 0, c, m, ord.key(m), g, ord);
  }
  return h;
}

inline OPoly spoly(const OPoly& f, const OPoly& g, const OrderDescriptor& ord) {
  Exponent l = lcm(f.front().e, g.front().e);
  Exponent mf = l - f.front().e, mg = l - g.front().e;
  OPoly a = sub_mul(OPoly{}, 0, AlgebraicNumber(-1) / f.front().c, mf, ord.key(mf), f, ord);
  return sub_mul(a, 0, AlgebraicNumber(1) / g.front().c, mg, ord.key(mg), g, ord);
}

struct Pair {
  std::size_t i, j;
  Exponent lcm;
  long sugar;
};

}  // namespace gb_detail

struct BasisCertificate {
  std::string order;
  std::size_t pairs_reduced = 0;
  bool reduced = false;
};

struct BasisResult {
  std::vector<Polynomial> basis;
  BasisCertificate certificate;
};

// Standard basis for a local order, Groebner basis for a global one. The
// global result is reduced; the local result is minimal without tail
// reduction (tails of local standard bases are in general infinite).
inline BasisResult standard_basis(const std::vector<Polynomial>& gens, const OrderDescriptor& ord) {
  using namespace gb_detail;
  std::size_t n = ord.nvars();
  const bool local = ord.is_local();
  BasisResult res;
  res.certificate.order = ord.describe();
  std::vector<OPoly> G;
  std::vector<long> sugar;
  std::vector<bool> alive;
  std::vector<Pair> pairs;

  auto reduce = [&](OPoly p) {
    if (local) return reduce_mora(std::move(p), G, ord);
    std::vector<OPoly> live;
    for (std::size_t i = 0; i < G.size(); ++i)
      if (alive[i]) live.push_back(G[i]);
    return reduce_global(std::move(p), live, ord, false);
  };
  auto add = [&](OPoly p, long s) {
    make_monic(p);
    std::size_t k = G.size();
    for (std::size_t i = 0; i < k; ++i) {
      Exponent l = lcm(G[i].front().e, p.front().e);
      long si = sugar[i] + total_degree(l) - G[i].front().k.deg;
      long sk = s + total_degree(l) - p.front().k.deg;
      pairs.push_back({i, k, l, std::max(si, sk)});
    }
    G.push_back(std::move(p));
    sugar.push_back(s);
    alive.push_back(true);
    if (!local)
      for (std::size_t i = 0; i < k; ++i)
        if (alive[i] && divides(G[k].front().e, G[i].front().e)) alive[i] = false;
  };

  for (const auto& g : gens) {
    if (g.nvars() != n) throw UsageError("generator lives in a ring with a different number of variables");
    if (g.is_zero()) continue;
    OPoly p = reduce(to_opoly(g, ord));
    if (p.empty()) continue;
    add(std::move(p), max_degree(to_opoly(g, ord)));
  }

  auto in_pairs = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    for (const auto& q : pairs)
      if (q.i == a && q.j == b) return true;
    return false;
  };
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      return ord.compare(a.lcm, b.lcm) < 0;
    });
    Pair pr = *it;
    pairs.erase(it);
    const Exponent& li = G[pr.i].front().e;
    const Exponent& lj = G[pr.j].front().e;
    // Product criterion.
    bool coprime = true;
    for (std::size_t v = 0; v < n; ++v)
      if (li[v] && lj[v]) coprime = false;
    if (coprime) continue;
    // Chain criterion.
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (divides(G[k].front().e, pr.lcm) && !in_pairs(pr.i, k) && !in_pairs(pr.j, k)) chain = true;
    }
    if (chain) continue;
    ++res.certificate.pairs_reduced;
    OPoly h = reduce(spoly(G[pr.i], G[pr.j], ord));
    if (h.empty()) continue;
    if (local && h.front().k.deg == 0) {
      // A unit: the ideal is the whole local ring.
      G.assign(1, OPoly{{Exponent(n, 0), OrderDescriptor::Key{}, AlgebraicNumber(1)}});
      alive.assign(1, true);
      pairs.clear();
      break;
    }
    add(std::move(h), pr.sugar);
  }

  // Minimalize.
  std::vector<OPoly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < G.size() && !drop; ++j) {
      if (i == j || !divides(G[j].front().e, G[i].front().e)) continue;
      if (G[j].front().e != G[i].front().e || j < i) drop = true;
    }
    if (!drop) minimal.push_back(G[i]);
  }
  if (!local) {
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<OPoly> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      OPoly tail(minimal[i].begin() + 1, minimal[i].end());
      OPoly red = reduce_global(tail, others, ord, true);
      red.insert(red.begin(), minimal[i].front());
      minimal[i] = std::move(red);
      make_monic(minimal[i]);
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const OPoly& a, const OPoly& b) {
    return ord.compare(a.front().e, a.front().k, b.front().e, b.front().k) < 0;
  });
  bool reduced = true;
  for (std::size_t i = 0; i < minimal.size(); ++i)
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (i != j)
        for (const auto& t : minimal[i])
          if (divides(minimal[j].front().e, t.e)) reduced = false;
  res.certificate.reduced = reduced;
  for (const auto& g : minimal) res.basis.push_back(to_poly(g, n));
  return res;
}

// Remainder of f against a standard basis: full reduction for global
// orders, Mora's normal form for local ones. Zero iff f lies in the ideal
// (in the localization at the origin for local orders).
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const OrderDescriptor& ord) {
  using namespace gb_detail;
  std::vector<OPoly> B;
  for (const auto& g : basis)
    if (!g.is_zero()) B.push_back(to_opoly(g, ord));
  OPoly r = ord.is_local() ? reduce_mora(to_opoly(f, ord), B, ord) : reduce_global(to_opoly(f, ord), B, ord, true);
  return to_poly(r, f.nvars());
}

// ---------------------------------------------------------------------------
// Ideal presentations

class IdealPresentation {
 public:
  IdealPresentation(std::size_t nvars, std::vector<Polynomial> gens, OrderDescriptor ord)
      : n_(nvars), ord_(std::move(ord)) {
    if (ord_.nvars() != n_) throw UsageError("order has the wrong number of variables");
    for (auto& g : gens) {
      if (g.nvars() != n_) throw UsageError("generator has the wrong number of variables");
      if (g.is_zero()) continue;
      if (ord_.is_local() && !is_zero(g.constant_term()))
        throw UsageError("local ideal generators must vanish at the origin");
      gens_.push_back(std::move(g));
    }
  }
  static IdealPresentation global(std::size_t n, std::vector<Polynomial> gens) {
    return IdealPresentation(n, std::move(gens), OrderDescriptor::global(n));
  }
  static IdealPresentation local(std::size_t n, std::vector<Polynomial> gens) {
    return IdealPresentation(n, std::move(gens), OrderDescriptor::local(n));
  }

  std::size_t nvars() const { return n_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const OrderDescriptor& order() const { return ord_; }
  bool is_local() const { return ord_.is_local(); }

  const std::vector<Polynomial>& basis() const {
    if (!cache_) cache_ = standard_basis(gens_, ord_);
    return cache_->basis;
  }
  const BasisCertificate& certificate() const {
    basis();
    return cache_->certificate;
  }
  Polynomial normal_form(const Polynomial& f) const { return ltrop::normal_form(f, basis(), ord_); }
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool is_unit() const {
    for (const auto& g : basis())
      if (g.is_constant()) return true;
    return false;
  }
  // Same generators under another order.
  IdealPresentation with_order(OrderDescriptor ord) const { return IdealPresentation(n_, gens_, std::move(ord)); }
  IdealPresentation plus(const std::vector<Polynomial>& more) const {
    auto g = gens_;
    g.insert(g.end(), more.begin(), more.end());
    return IdealPresentation(n_, std::move(g), ord_);
  }

 private:
  std::size_t n_;
  std::vector<Polynomial> gens_;
  OrderDescriptor ord_;
  mutable std::optional<BasisResult> cache_;
};

// Two-sided membership of generators.
inline bool ideals_equal(const IdealPresentation& a, const IdealPresentation& b) {
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  for (const auto& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

inline std::vector<Polynomial> extend_vars(const std::vector<Polynomial>& gens, std::size_t m,
                                           const std::vector<std::size_t>& map) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(g.embed(m, map));
  return out;
}

// Generators of I ∩ k[vars not flagged], computed globally in n variables.
inline std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<bool>& flagged) {
  auto res = standard_basis(gens, OrderDescriptor::elimination(flagged));
  std::vector<Polynomial> out;
  for (const auto& g : res.basis) {
    bool uses = false;
    for (std::size_t i = 0; i < flagged.size(); ++i)
      if (flagged[i] && g.involves(i)) uses = true;
    if (!uses) out.push_back(g);
  }
  return out;
}

namespace ideal_detail {

// Identity embedding into n + 1 variables with the new variable last.
inline std::vector<std::size_t> shift_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

inline std::vector<Polynomial> drop_last(const std::vector<Polynomial>& gens, std::size_t n) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    Polynomial r(n);
    for (const auto& [e, c] : g.terms()) r.add_term(Exponent(e.begin(), e.begin() + static_cast<long>(n)), c);
    out.push_back(r);
  }
  return out;
}

}  // namespace ideal_detail

// (I : g^inf) via eliminating s from I + (1 - s*g). Computed in the
// polynomial ring; the result keeps I's order.
inline IdealPresentation saturate(const IdealPresentation& I, const Polynomial& g) {
  if (g.is_zero()) throw UsageError("saturation by the zero polynomial");
  std::size_t n = I.nvars();
  auto map = ideal_detail::shift_map(n);
  auto gens = extend_vars(I.generators(), n + 1, map);
  Exponent s(n + 1, 0);
  s[n] = 1;
  gens.push_back(Polynomial(n + 1, AlgebraicNumber(1)) - Polynomial::monomial(s) * g.embed(n + 1, map));
  std::vector<bool> flag(n + 1, false);
  flag[n] = true;
  auto out = ideal_detail::drop_last(eliminate(gens, flag), n);
  if (I.is_local()) {
    // Keep only what is meaningful at the origin: a generator that is a unit
    // there makes the local ideal trivial.
    for (const auto& h : out)
      if (!is_zero(h.constant_term())) return IdealPresentation(n, {Polynomial(n, AlgebraicNumber(1))}, OrderDescriptor::global(n));
    return IdealPresentation(n, out, I.order());
  }
  return IdealPresentation(n, out, I.order());
}

// I ∩ J by eliminating t from t*I + (1 - t)*J (global computation).
inline std::vector<Polynomial> intersect(const std::vector<Polynomial>& I, const std::vector<Polynomial>& J, std::size_t n) {
  auto map = ideal_detail::shift_map(n);
  Exponent te(n + 1, 0);
  te[n] = 1;
  Polynomial t = Polynomial::monomial(te);
  Polynomial one_minus_t = Polynomial(n + 1, AlgebraicNumber(1)) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I) gens.push_back(t * f.embed(n + 1, map));
  for (const auto& f : J) gens.push_back(one_minus_t * f.embed(n + 1, map));
  std::vector<bool> flag(n + 1, false);
  flag[n] = true;
  return ideal_detail::drop_last(eliminate(gens, flag), n);
}

// Exact division a / f; throws if f does not divide a.
inline Polynomial divide_exact(const Polynomial& a, const Polynomial& f) {
  using namespace gb_detail;
  OrderDescriptor ord = OrderDescriptor::global(a.nvars());
  OPoly p = to_opoly(a, ord), g = to_opoly(f, ord);
  Polynomial q(a.nvars());
  while (!p.empty()) {
    if (!divides(g.front().e, p.front().e)) throw InternalError("inexact polynomial division");
    Exponent m = p.front().e - g.front().e;
    AlgebraicNumber c = p.front().c / g.front().c;
    q.add_term(m, c);
    p = sub_mul(p, 0, c, m, ord.key(m), g, ord);
  }
  return q;
}

// (I : f) = (I ∩ (f)) / f, computed in the polynomial ring.
inline IdealPresentation ideal_quotient(const IdealPresentation& I, const Polynomial& f) {
  if (f.is_zero()) throw UsageError("ideal quotient by the zero polynomial");
  std::size_t n = I.nvars();
  std::vector<Polynomial> out;
  for (const auto& h : intersect(I.generators(), {f}, n)) out.push_back(divide_exact(h, f));
  if (I.is_local())
    for (const auto& h : out)
      if (!is_zero(h.constant_term())) return IdealPresentation(n, {Polynomial(n, AlgebraicNumber(1))}, OrderDescriptor::global(n));
  return IdealPresentation(n, out, I.order());
}

inline Polynomial variable_product(std::size_t n) {
  return Polynomial::monomial(Exponent(n, 1));
}

struct MonomialTest {
  bool contains = false;
  std::optional<Exponent> witness;
};

// Whether I contains a monomial, i.e. whether I : (x1...xn)^inf is the unit
// ideal (of the local ring when I is local).
inline MonomialTest contains_monomial(const IdealPresentation& I) {
  std::size_t n = I.nvars();
  MonomialTest out;
  if (I.generators().empty()) return out;
  auto sat = saturate(I, variable_product(n));
  bool unit;
  if (I.is_local()) {
    auto gens = sat.generators();
    for (std::size_t i = 0; i < n; ++i) gens.push_back(Polynomial::variable(n, i));
    unit = IdealPresentation::global(n, gens).is_unit() || sat.is_unit();
  } else {
    unit = sat.is_unit();
  }
  if (!unit) return out;
  out.contains = true;
  // Find (x1...xn)^k in I, then lower exponents from the last variable.
  Exponent e(n, 0);
  for (std::uint32_t k = 1; k <= 64; ++k) {
    std::fill(e.begin(), e.end(), k);
    if (I.contains(Polynomial::monomial(e))) break;
    if (k == 64) return out;
  }
  for (std::size_t i = n; i-- > 0;)
    while (e[i] > 0) {
      Exponent f = e;
      --f[i];
      if (!I.contains(Polynomial::monomial(f))) break;
      e = f;
    }
  out.witness = e;
  return out;
}

// Maximal independent sets of the leading-monomial ideal, largest first and
// then lexicographically by index list.
inline std::vector<std::vector<std::size_t>> independent_sets(const std::vector<Exponent>& leads, std::size_t n) {
  std::vector<std::vector<std::size_t>> best;
  std::size_t best_size = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (const auto& m : leads) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i)
        if (m[i] && !(mask >> i & 1)) inside = false;
      if (inside) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    if (s.size() > best_size) {
      best_size = s.size();
      best.clear();
    }
    if (s.size() == best_size) best.push_back(s);
  }
  std::sort(best.begin(), best.end());
  return best;
}

inline std::vector<Exponent> leading_exponents(const IdealPresentation& I) {
  std::vector<Exponent> out;
  for (const auto& g : I.basis()) out.push_back(leading_exponent(g, I.order()));
  return out;
}

// Krull dimension of the quotient (of the local ring for local ideals).
inline std::size_t dimension(const IdealPresentation& I) {
  if (I.is_unit()) throw UsageError("unit ideal");
  if (I.nvars() > 20) throw CapabilityError("dimension: too many variables");
  auto sets = independent_sets(leading_exponents(I), I.nvars());
  return sets.front().size();
}

// ---------------------------------------------------------------------------
// Points on the torus

struct PointSearch {
  std::uint64_t seed = 0;
  int max_attempts = 24;
  // Values assigned beforehand to some coordinates.
  std::vector<std::optional<AlgebraicNumber>> fixed;
  // Points the result must differ from.
  std::vector<std::vector<AlgebraicNumber>> avoid;
};

struct PointResult {
  std::vector<AlgebraicNumber> point;
  int attempts = 0;
  std::vector<std::size_t> free_vars;
};

namespace ideal_detail {

// Value of free variable x_i on a given attempt: all ones first, then
// 1, -2, 3, -4, ... by variable index, then seeded random nonzero integers.
inline long slice_value(int attempt, std::size_t i, std::mt19937_64& rng) {
  if (attempt == 0) return 1;
  if (attempt == 1) {
    long v = static_cast<long>(i) + 1;
    return (i % 2 == 0) ? v : -v;
  }
  long range = 4L * attempt;
  std::uniform_int_distribution<long> dist(-range, range - 1);
  long v = dist(rng);
  return v >= 0 ? v + 1 : v;
}

inline APoly as_univariate(const Polynomial& f, std::size_t var) {
  std::vector<AlgebraicNumber> c(static_cast<std::size_t>(std::max(0L, f.degree_in(var))) + 1);
  for (const auto& [e, a] : f.terms()) c[e[var]] += a;
  return APoly(std::move(c));
}

}  // namespace ideal_detail

// A common zero of the global ideal J with all coordinates nonzero, found by
// fixing a maximal independent set to generic values and solving the
// resulting zero-dimensional system variable by variable.
inline PointResult find_point(const std::vector<Polynomial>& J, std::size_t n, NumberField& field,
                              const PointSearch& opts = {}) {
  std::mt19937_64 rng(opts.seed);
  std::string last_failure = "no attempt made";
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    std::vector<std::optional<AlgebraicNumber>> val = opts.fixed;
    val.resize(n);
    std::vector<Polynomial> sys;
    for (const auto& g : J) sys.push_back(g.substitute(val));
    // Lex with the last variable largest leaves the earliest variables free.
    auto gb = standard_basis(sys, OrderDescriptor::lex(n)).basis;
    bool unit = false;
    for (const auto& g : gb) unit = unit || g.is_constant();
    if (unit) throw CapabilityError("witness search failed: the slice through the fixed coordinates is empty");
    std::vector<Exponent> leads;
    for (const auto& g : gb) leads.push_back(leading_exponent(g, OrderDescriptor::lex(n)));
    for (std::size_t i = 0; i < n; ++i)
      if (val[i]) {
        Exponent e(n, 0);
        e[i] = 1;
        leads.push_back(e);
      }
    auto free = independent_sets(leads, n).front();
    PointResult res;
    res.free_vars = free;
    for (auto v : free) val[v] = AlgebraicNumber(ideal_detail::slice_value(attempt, v, rng));
    bool ok = true;
    for (std::size_t var = 0; var < n && ok; ++var) {
      if (val[var]) continue;
      std::vector<Polynomial> cur;
      for (const auto& g : J) cur.push_back(g.substitute(val));
      auto lex = standard_basis(cur, OrderDescriptor::lex(n)).basis;
      std::optional<Polynomial> uni;
      for (const auto& g : lex) {
        if (g.is_constant()) {
          ok = false;
          last_failure = "empty slice";
          break;
        }
        bool only = true;
        for (std::size_t j = 0; j < n; ++j)
          if (j != var && g.involves(j)) only = false;
        if (only && g.involves(var) && (!uni || g.degree_in(var) < uni->degree_in(var))) uni = g;
      }
      if (!ok) break;
      if (!uni) {
        ok = false;
        last_failure = "slice is not zero-dimensional";
        break;
      }
      APoly p = ideal_detail::as_univariate(*uni, var);
      while (p.degree() >= 1 && is_zero(p.coeff(0))) p = p / APoly::x();
      if (p.degree() < 1) {
        ok = false;
        last_failure = "only the zero coordinate is available";
        break;
      }
      val[var] = adjoin_root(field, p);
    }
    if (!ok) continue;
    res.point.clear();
    for (const auto& v : val) res.point.push_back(*v);
    for (const auto& v : res.point)
      if (is_zero(v)) ok = false;
    if (!ok) {
      last_failure = "zero coordinate";
      continue;
    }
    for (const auto& g : J)
      if (!is_zero(g.evaluate(res.point))) throw InternalError("torus point does not satisfy the ideal");
    for (const auto& a : opts.avoid)
      if (a == res.point) ok = false;
    if (!ok) {
      last_failure = "point coincides with an excluded one";
      continue;
    }
    res.attempts = attempt + 1;
    return res;
  }
  throw CapabilityError("witness search failed after " + std::to_string(opts.max_attempts) + " attempts (" + last_failure + ")");
}

// A zero of J in the torus; J must not contain a monomial.
inline PointResult torus_point(const IdealPresentation& J, NumberField& field, std::uint64_t seed = 0) {
  auto G = J.is_local() ? J.with_order(OrderDescriptor::global(J.nvars())) : J;
  if (contains_monomial(G).contains) throw UsageError("torus_point: the ideal contains a monomial");
  PointSearch opts;
  opts.seed = seed;
  return find_point(J.generators(), J.nvars(), field, opts);
}

}  // namespace ltrop
