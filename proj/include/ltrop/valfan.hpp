#pragma once

// Initial ideals, Groebner cones, pushforward (coset) valuations on
// quotients k[[x]]/I, and weighted tensor products of ideals.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ltrop/cone.hpp"
#include "ltrop/errors.hpp"
#include "ltrop/ideals.hpp"
#include "ltrop/polynomial.hpp"

namespace ltrop {

struct InitialData {
  std::vector<ValueScalar> w;
  std::vector<Polynomial> generators;  // initial forms of the standard basis
  std::vector<Polynomial> basis;       // standard basis under the w-refined local order
  OrderDescriptor order;
};

inline void check_weight(const std::vector<ValueScalar>& w, std::size_t n) {
  if (w.size() != n) throw UsageError("weight has length " + std::to_string(w.size()) + ", expected " + std::to_string(n));
  for (const auto& v : w)
    if (v.sign() <= 0) throw UsageError("weights must be strictly positive, got " + v.to_string());
}

inline InitialData initial_ideal(const IdealPresentation& I, const std::vector<ValueScalar>& w) {
  check_weight(w, I.nvars());
  InitialData out;
  out.w = w;
  out.order = OrderDescriptor(w, OrderMode::Local);
  auto local = I.with_order(out.order);
  out.basis = local.basis();
  for (const auto& s : out.basis) {
    Polynomial in = initial_form(s, w);
    if (std::find(out.generators.begin(), out.generators.end(), in) == out.generators.end()) out.generators.push_back(in);
  }
  return out;
}

// Canonical text of a polynomial ideal: its reduced grevlex basis.
inline std::string ideal_key(const std::vector<Polynomial>& gens, std::size_t n) {
  Ring ring;
  for (std::size_t i = 0; i < n; ++i) ring.vars.push_back("v" + std::to_string(i));
  std::string s;
  for (const auto& g : standard_basis(gens, OrderDescriptor::global(n)).basis) s += to_string(g, ring) + ";";
  return s;
}

inline bool initial_is_monomial_free(const InitialData& d, std::size_t n) {
  return !contains_monomial(IdealPresentation::global(n, d.generators)).contains;
}

// ---------------------------------------------------------------------------
// Pushforward valuation

class CosetValuationHandle {
 public:
  CosetValuationHandle(const IdealPresentation& I, std::vector<ValueScalar> w)
      : ideal_(I.with_order(OrderDescriptor(w, OrderMode::Local))), init_(initial_ideal(I, w)) {
    monomial_free_ = initial_is_monomial_free(init_, I.nvars());
  }
  const IdealPresentation& ideal() const { return ideal_; }
  const std::vector<ValueScalar>& w() const { return init_.w; }
  const InitialData& initial() const { return init_; }
  bool monomial_free() const { return monomial_free_; }

 private:
  IdealPresentation ideal_;
  InitialData init_;
  bool monomial_free_ = false;
};

struct CosetValuationOptions {
  int max_rounds = 64;
  Rational order_ceiling = 1000000;
};

namespace valfan_detail {

// Division of a w-homogeneous f by w-homogeneous divisors, with quotients.
inline std::pair<std::vector<Polynomial>, Polynomial> divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                                                             const OrderDescriptor& ord) {
  std::size_t n = f.nvars();
  std::vector<Polynomial> q(divisors.size(), Polynomial(n));
  std::vector<Exponent> leads;
  std::vector<AlgebraicNumber> lcs;
  for (const auto& d : divisors) {
    leads.push_back(leading_exponent(d, ord));
    lcs.push_back(d.coeff(leads.back()));
  }
  Polynomial p = f, rem(n);
  std::size_t guard = 0;
  while (!p.is_zero()) {
    if (++guard > 100000) throw InternalError("homogeneous division did not terminate");
    Exponent lm = leading_exponent(p, ord);
    AlgebraicNumber lc = p.coeff(lm);
    bool done = false;
    for (std::size_t i = 0; i < divisors.size() && !done; ++i)
      if (divides(leads[i], lm)) {
        Exponent m = lm - leads[i];
        AlgebraicNumber c = lc / lcs[i];
        q[i].add_term(m, c);
        p -= divisors[i].mul_monomial(m, c);
        done = true;
      }
    if (!done) {
      rem.add_term(lm, lc);
      p -= Polynomial::monomial(lm, lc);
    }
  }
  return {q, rem};
}

}  // namespace valfan_detail

// sup over the coset g + I of the w-order, by repeatedly cancelling the
// initial form against lifted initial-ideal relations.
inline ExtValue coset_valuation(const Polynomial& g, const CosetValuationHandle& h, const CosetValuationOptions& opts = {}) {
  if (!h.monomial_free()) throw UsageError("not a valuation: initial ideal contains a monomial");
  if (g.nvars() != h.ideal().nvars()) throw UsageError("polynomial has the wrong number of variables");
  if (h.ideal().contains(g)) return ExtValue::infinity();
  const auto& data = h.initial();
  std::vector<Polynomial> lifts, inits;
  for (const auto& s : data.basis) {
    lifts.push_back(s);
    inits.push_back(initial_form(s, data.w));
  }
  Polynomial cur = g;
  for (int round = 0; round < opts.max_rounds; ++round) {
    ExtValue ord = w_order(cur, data.w);
    if (ord.is_infinite()) throw InternalError("coset representative vanished although g is not in I");
    if (ord.value() > ValueScalar(opts.order_ceiling)) break;
    auto [q, rem] = valfan_detail::divide(initial_form(cur, data.w), inits, data.order);
    if (!rem.is_zero()) return ord;
    for (std::size_t i = 0; i < q.size(); ++i)
      if (!q[i].is_zero()) cur -= q[i] * lifts[i];
  }
  throw CapabilityError("coset valuation exceeded its reduction bound");
}

// ---------------------------------------------------------------------------
// Groebner cones

struct GroebnerCone {
  Cone cone;
  std::string to_json() const { return "{\"eq\":" + row_json(cone.eq) + ",\"ineq\":" + row_json(cone.ineq) + "}"; }
};

inline void push_unique(std::vector<ZRow>& rows, ZRow r) {
  if (std::all_of(r.begin(), r.end(), [](const Integer& v) { return v == 0; })) return;
  if (std::find(rows.begin(), rows.end(), r) == rows.end()) rows.push_back(std::move(r));
}

inline GroebnerCone cone_from_basis(const std::vector<Polynomial>& basis, const std::vector<ValueScalar>& w,
                                    const OrderDescriptor& ord, std::size_t n) {
  GroebnerCone gc;
  gc.cone.n = n;
  gc.cone.positive = true;
  for (const auto& s : basis) {
    Exponent lm = leading_exponent(s, ord);
    Polynomial in = initial_form(s, w);
    for (const auto& [e, c] : s.terms()) {
      if (e == lm) continue;
      ZRow row(n);
      if (in.terms().count(e)) {
        for (std::size_t i = 0; i < n; ++i) row[i] = Integer(static_cast<long>(lm[i])) - Integer(static_cast<long>(e[i]));
        push_unique(gc.cone.eq, primitive_row(row, true));
      } else {
        for (std::size_t i = 0; i < n; ++i) row[i] = Integer(static_cast<long>(e[i])) - Integer(static_cast<long>(lm[i]));
        push_unique(gc.cone.ineq, primitive_row(row, false));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    ZRow e(n, 0);
    e[i] = 1;
    push_unique(gc.cone.ineq, e);
  }
  std::sort(gc.cone.eq.begin(), gc.cone.eq.end());
  std::sort(gc.cone.ineq.begin(), gc.cone.ineq.end());
  return gc;
}

inline GroebnerCone groebner_cone(const IdealPresentation& I, const std::vector<ValueScalar>& w) {
  auto data = initial_ideal(I, w);
  return cone_from_basis(data.basis, w, data.order, I.nvars());
}

// ---------------------------------------------------------------------------
// Tensor products

struct TensorResult {
  Ring ring;
  IdealPresentation ideal;
  std::vector<ValueScalar> w;
  bool step3_initial_equality = false;
  bool inputs_monomial_free = false;
  bool step4_monomial_free = false;
  // Certificate passes when the initial ideals agree and monomial-freeness
  // of both factors carries over to the combination.
  bool certificate() const { return step3_initial_equality && (!inputs_monomial_free || step4_monomial_free); }
};

inline TensorResult tensor_combine(const Ring& X, const IdealPresentation& I, const std::vector<ValueScalar>& w1,
                                   const Ring& Y, const IdealPresentation& J, const std::vector<ValueScalar>& w2) {
  for (const auto& v : X.vars)
    if (Y.index_of(v)) throw UsageError("variable '" + v + "' occurs in both factors");
  std::size_t n1 = X.size(), n2 = Y.size(), n = n1 + n2;
  if (I.nvars() != n1 || J.nvars() != n2) throw UsageError("ideal and variable list disagree");
  check_weight(w1, n1);
  check_weight(w2, n2);
  std::vector<std::size_t> m1(n1), m2(n2);
  for (std::size_t i = 0; i < n1; ++i) m1[i] = i;
  for (std::size_t i = 0; i < n2; ++i) m2[i] = n1 + i;
  Ring ring = X;
  ring.vars.insert(ring.vars.end(), Y.vars.begin(), Y.vars.end());
  std::vector<Polynomial> gens = extend_vars(I.generators(), n, m1);
  auto more = extend_vars(J.generators(), n, m2);
  gens.insert(gens.end(), more.begin(), more.end());
  std::vector<ValueScalar> w = w1;
  w.insert(w.end(), w2.begin(), w2.end());
  TensorResult res{ring, IdealPresentation(n, gens, OrderDescriptor(w, OrderMode::Local)), w};

  auto init_I = initial_ideal(I, w1), init_J = initial_ideal(J, w2);
  auto init_all = initial_ideal(res.ideal, w);
  std::vector<Polynomial> rhs = extend_vars(init_I.generators, n, m1);
  auto r2 = extend_vars(init_J.generators, n, m2);
  rhs.insert(rhs.end(), r2.begin(), r2.end());
  res.step3_initial_equality =
      ideals_equal(IdealPresentation::global(n, init_all.generators), IdealPresentation::global(n, rhs));
  res.inputs_monomial_free = initial_is_monomial_free(init_I, n1) && initial_is_monomial_free(init_J, n2);
  res.step4_monomial_free = initial_is_monomial_free(init_all, n);
  return res;
}

// init_w(I + (f)) = init_w(I) + (f) for w-homogeneous f that is a
// nonzerodivisor modulo init_w(I).
inline bool init_additivity_check(const IdealPresentation& I, const Polynomial& f, const std::vector<ValueScalar>& w) {
  check_weight(w, I.nvars());
  if (f.is_zero() || !is_w_homogeneous(f, w)) throw UsageError("f must be a nonzero w-homogeneous polynomial");
  std::size_t n = I.nvars();
  auto init = initial_ideal(I, w);
  auto base = IdealPresentation::global(n, init.generators);
  if (!ideals_equal(ideal_quotient(base, f), base)) throw UsageError("nonzerodivisor hypothesis violated");
  auto lhs = initial_ideal(I.plus({f}), w);
  auto rhs = init.generators;
  rhs.push_back(f);
  return ideals_equal(IdealPresentation::global(n, lhs.generators), IdealPresentation::global(n, rhs));
}

}  // namespace ltrop
