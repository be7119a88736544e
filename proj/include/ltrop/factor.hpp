#pragma once

// Factorization of univariate polynomials over number-field towers (Trager's
// norm method, descending level by level to Q) and root adjunction.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ltrop/errors.hpp"
#include "ltrop/number_field.hpp"
#include "ltrop/upoly.hpp"
#include "ltrop/zfactor.hpp"

namespace ltrop {

using APoly = UPoly<AlgebraicNumber>;

// Implementation limits for irreducibility testing.
inline constexpr long kMaxExtensionDegree = 8;
inline constexpr int kMaxTowerHeight = 3;
inline constexpr std::size_t kMaxNormDegree = 64;

inline std::string upoly_to_string(const APoly& p, const std::string& var = "z") {
  if (p.is_zero_poly()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    append_term(out, c[k], mono);
  }
  return out;
}

inline APoly to_apoly(const UPoly<Rational>& p) {
  std::vector<AlgebraicNumber> c;
  for (const auto& q : p.coeffs()) c.emplace_back(q);
  return APoly(std::move(c));
}

inline bool is_rational_poly(const APoly& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

inline UPoly<Rational> to_rational_upoly(const APoly& p) {
  std::vector<Rational> c;
  for (const auto& a : p.coeffs()) c.push_back(a.rational());
  return UPoly<Rational>(std::move(c));
}

// Norm of x from `level` down to its parent field.
inline AlgebraicNumber relative_norm(const AlgebraicNumber& x, const LevelPtr& level) {
  if (x.level() != level) return x.pow(level->degree());
  return resultant(APoly(level->minpoly), APoly(x.coeffs()));
}

// Norm of a polynomial with coefficients in `level` down to the parent
// field, by evaluation at 0..D and Newton interpolation.
inline APoly relative_norm(const APoly& g, const LevelPtr& level) {
  std::size_t degree = static_cast<std::size_t>(g.degree()) * level->degree();
  std::vector<AlgebraicNumber> xs, dd;
  for (std::size_t j = 0; j <= degree; ++j) {
    xs.emplace_back(static_cast<long>(j));
    dd.push_back(relative_norm(g(xs.back()), level));
  }
  for (std::size_t k = 1; k <= degree; ++k)
    for (std::size_t j = degree; j >= k; --j) dd[j] = (dd[j] - dd[j - 1]) / (xs[j] - xs[j - k]);
  APoly acc(dd[degree]);
  for (std::size_t k = degree; k-- > 0;) acc = acc * APoly(std::vector<AlgebraicNumber>{-xs[k], AlgebraicNumber(1)}) + APoly(dd[k]);
  return acc;
}

inline std::string field_name(const LevelPtr& l) { return l ? "Q(" + l->name + ")" : std::string("Q"); }

namespace factor_detail {

std::vector<std::pair<APoly, int>> factor_unchecked(const LevelPtr& field, const APoly& p);

inline std::vector<APoly> factor_squarefree_over(const LevelPtr& field, const APoly& p) {
  if (p.degree() <= 1) return {p.monic()};
  if (!field) {
    std::vector<APoly> out;
    for (auto& [f, m] : factor_rational(to_rational_upoly(p))) out.push_back(to_apoly(f));
    return out;
  }
  AlgebraicNumber alpha = AlgebraicNumber::generator(field);
  const long shifts[] = {0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6, 7, -7, 8, -8};
  for (long s : shifts) {
    AlgebraicNumber shift = AlgebraicNumber(s) * alpha;
    APoly g = p.shift(-shift);
    APoly norm = relative_norm(g, field);
    if (gcd(norm, norm.derivative()).degree() != 0) continue;
    std::vector<APoly> out;
    for (auto& [h, mult] : factor_unchecked(field->parent, norm)) {
      APoly common = gcd(g, h);
      if (common.degree() >= 1) out.push_back(common.shift(shift).monic());
    }
    long total = 0;
    for (const auto& f : out) total += f.degree();
    if (total != p.degree()) throw InternalError("norm factorization lost degree over " + field_name(field));
    return out;
  }
  throw CapabilityError("extension unsupported: no square-free norm found for " + upoly_to_string(p));
}

inline bool root_order(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() != b.is_rational()) return a.is_rational();
  if (a.is_rational()) {
    Rational aa = abs(a.rational()), bb = abs(b.rational());
    if (aa != bb) return aa < bb;
    return a.rational() > b.rational();
  }
  return a.to_string() < b.to_string();
}

}  // namespace factor_detail

namespace factor_detail {

inline std::vector<std::pair<APoly, int>> factor_unchecked(const LevelPtr& field, const APoly& p) {
  std::vector<std::pair<APoly, int>> out;
  if (p.degree() < 1) return out;
  if (!field && is_rational_poly(p)) {
    for (auto& [f, m] : factor_rational(to_rational_upoly(p))) out.emplace_back(to_apoly(f), m);
    return out;
  }
  for (auto& [part, mult] : squarefree_decomposition(p))
    for (auto& f : factor_squarefree_over(field, part)) out.emplace_back(std::move(f), mult);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    if (a.first.degree() == 1) return root_order(-a.first.coeff(0), -b.first.coeff(0));
    return upoly_to_string(a.first) < upoly_to_string(b.first);
  });
  return out;
}

}  // namespace factor_detail

// Monic irreducible factors over `field` with multiplicities, ordered by
// degree and then by text. Rational input is factored over Q first, and the
// degree bound applies to each Q-irreducible factor.
inline std::vector<std::pair<APoly, int>> factor_over(const LevelPtr& field, const APoly& p) {
  if (p.degree() < 1) return {};
  for (const auto& c : p.coeffs())
    if (!is_ancestor_or_self(c.level(), field)) throw UsageError("polynomial coefficients lie outside " + field_name(field));
  if (height_of(field) > kMaxTowerHeight)
    throw CapabilityError("extension unsupported: tower height exceeds " + std::to_string(kMaxTowerHeight));
  if (!field || is_rational_poly(p)) {
    if (static_cast<std::size_t>(p.degree()) > kMaxNormDegree)
      throw CapabilityError("extension unsupported: degree of " + upoly_to_string(p) + " exceeds " +
                            std::to_string(kMaxNormDegree));
  }
  if (!field) return factor_detail::factor_unchecked(field, p);
  auto too_big = [&](const APoly& f) {
    return f.degree() > kMaxExtensionDegree || static_cast<std::size_t>(f.degree()) * absolute_degree(field) > kMaxNormDegree;
  };
  if (!is_rational_poly(p)) {
    if (too_big(p))
      throw CapabilityError("extension unsupported: cannot factor " + upoly_to_string(p) + " over " + field_name(field));
    return factor_detail::factor_unchecked(field, p);
  }
  // Rational input: factor over Q first so the bound applies per Q-irreducible factor.
  std::vector<std::pair<APoly, int>> out;
  for (auto& [f, m] : factor_detail::factor_unchecked(nullptr, p)) {
    if (f.degree() == 1) {
      out.emplace_back(f, m);
      continue;
    }
    if (too_big(f))
      throw CapabilityError("extension unsupported: cannot factor " + upoly_to_string(f) + " over " + field_name(field));
    for (auto& [g, k] : factor_detail::factor_unchecked(field, f)) out.emplace_back(g, k * m);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    if (a.first.degree() == 1) return factor_detail::root_order(-a.first.coeff(0), -b.first.coeff(0));
    return upoly_to_string(a.first) < upoly_to_string(b.first);
  });
  return out;
}

// Roots of p lying in `field`, with multiplicity: rational roots first in
// order of absolute value (positive before negative), then by text.
inline std::vector<AlgebraicNumber> roots_in_field(const LevelPtr& field, const APoly& p) {
  std::vector<AlgebraicNumber> roots;
  for (const auto& [f, m] : factor_over(field, p)) {
    if (f.degree() != 1) continue;
    for (int i = 0; i < m; ++i) roots.push_back(-f.coeff(0));
  }
  std::stable_sort(roots.begin(), roots.end(), factor_detail::root_order);
  return roots;
}

inline bool is_irreducible(const LevelPtr& field, const APoly& p) {
  auto f = factor_over(field, p);
  return f.size() == 1 && f.front().second == 1;
}

// Returns a root of p, extending `field` by one irreducible factor of
// least degree when p has no root in it.
inline AlgebraicNumber adjoin_root(NumberField& field, const APoly& p) {
  if (p.degree() < 1) throw UsageError("adjoin_root: polynomial must be nonconstant");
  auto factors = factor_over(field.top(), p);
  auto roots = roots_in_field(field.top(), p);
  if (!roots.empty()) return roots.front();
  const APoly& pick = factors.front().first;
  if (pick.degree() > kMaxExtensionDegree)
    throw CapabilityError("extension unsupported: irreducible factor " + upoly_to_string(pick) + " has degree above " +
                          std::to_string(kMaxExtensionDegree));
  if (field.height() >= kMaxTowerHeight)
    throw CapabilityError("extension unsupported: adjoining a root of " + upoly_to_string(pick) +
                          " would exceed tower height " + std::to_string(kMaxTowerHeight));
  return field.adjoin(pick);
}

// All roots of p with multiplicity, adjoining roots until p splits.
inline std::vector<AlgebraicNumber> all_roots(NumberField& field, const APoly& p) {
  std::vector<AlgebraicNumber> roots;
  APoly rest = p;
  while (rest.degree() >= 1) {
    auto found = roots_in_field(field.top(), rest);
    for (const auto& r : found) {
      roots.push_back(r);
      rest = rest / APoly(std::vector<AlgebraicNumber>{-r, AlgebraicNumber(1)});
    }
    if (rest.degree() < 1) break;
    adjoin_root(field, rest);
  }
  return roots;
}

}  // namespace ltrop
