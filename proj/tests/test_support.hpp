#pragma once

// Shared helpers for the unit tests and the acceptance runner: parsing
// shorthands, random generators, independent oracles and the curated corpus.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ltrop/ltrop.hpp"

namespace support {

using namespace ltrop;

inline Ring R(const std::string& vars) { return parse_vars(vars); }
inline Polynomial P(const std::string& text, const Ring& ring) { return parse_polynomial(text, ring); }

inline std::vector<Polynomial> Ps(const std::vector<std::string>& texts, const Ring& ring) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(P(t, ring));
  return out;
}

inline std::vector<ValueScalar> W(const std::string& text) { return parse_weight(text); }
inline std::vector<ExtValue> EW(const std::string& text) { return parse_ext_weight(text); }

// Random polynomial with small integer coefficients.
inline Polynomial random_poly(std::mt19937_64& rng, std::size_t n, int max_deg, int max_terms, bool constant_ok) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, max_deg), count(1, max_terms);
  Polynomial p(n);
  int terms = count(rng);
  for (int guard = 0; p.size() < static_cast<std::size_t>(terms) && guard < 50; ++guard) {
    Exponent e(n, 0);
    int budget = deg(rng);
    for (int k = 0; k < budget; ++k) e[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] += 1;
    if (!constant_ok && total_degree(e) == 0) continue;
    int c = coef(rng);
    if (c != 0) p.add_term(e, AlgebraicNumber(static_cast<long>(c)));
  }
  if (p.is_zero()) p = Polynomial::variable(n, 0);
  return p;
}

// ---------------------------------------------------------------------------
// Independent Buchberger-criterion oracle for global orders: plain division
// with remainder, no pair criteria, no reuse of the library's reducer.

inline Polynomial remainder(Polynomial f, const std::vector<Polynomial>& divisors, const OrderDescriptor& ord) {
  Polynomial rem(f.nvars());
  while (!f.is_zero()) {
    Exponent lm = leading_exponent(f, ord);
    AlgebraicNumber lc = f.coeff(lm);
    bool divided = false;
    for (const auto& d : divisors) {
      if (d.is_zero()) continue;
      const Exponent& dl = leading_exponent(d, ord);
      if (!divides(dl, lm)) continue;
      f -= d.mul_monomial(lm - dl, lc / d.coeff(dl));
      divided = true;
      break;
    }
    if (!divided) {
      rem.add_term(lm, lc);
      f -= Polynomial::monomial(lm, lc);
    }
  }
  return rem;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const OrderDescriptor& ord) {
  const Exponent &a = leading_exponent(f, ord), &b = leading_exponent(g, ord);
  Exponent l = lcm(a, b);
  return f.mul_monomial(l - a, AlgebraicNumber(1) / f.coeff(a)) - g.mul_monomial(l - b, AlgebraicNumber(1) / g.coeff(b));
}

inline bool buchberger_criterion(const std::vector<Polynomial>& basis, const OrderDescriptor& ord) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!remainder(s_polynomial(basis[i], basis[j], ord), basis, ord).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Curated local ideals in at most three variables.

struct CorpusIdeal {
  std::string name;
  std::string vars;
  std::vector<std::string> gens;
};

inline std::vector<CorpusIdeal> corpus() {
  return {
      {"cusp", "x,y", {"y^2 - x^3"}},
      {"node", "x,y", {"y^2 - x^2 - x^3"}},
      {"line", "x,y", {"x + y"}},
      {"tacnode", "x,y", {"y^2 - 3*x*y + 2*x^2 + x^3"}},
      {"e6", "x,y", {"y^3 - x^4"}},
      {"quadric_cone", "x,y,z", {"x*y - z^2"}},
      {"plane", "x,y,z", {"x + y + z"}},
      {"space_curve", "x,y,z", {"x + y + z", "x*y - z^3"}},
      {"twisted", "x,y,z", {"x - y^2", "y - z^2"}},
      {"sum_of_squares", "x,y,z", {"x^2 + y^2 + z^2"}},
      {"surface", "x,y,z", {"y^2 - x^3 - z^4"}},
      {"monomial", "x,y,z", {"x*y*z"}},
  };
}

inline IdealPresentation corpus_ideal(const CorpusIdeal& c) {
  Ring ring = R(c.vars);
  return IdealPresentation::local(ring.size(), Ps(c.gens, ring));
}

// At least 50 positive rational weights per ideal.
inline std::vector<std::vector<ExtValue>> weight_grid(std::size_t n) {
  std::vector<std::vector<ExtValue>> out;
  if (n == 2) {
    for (long a = 1; a <= 7; ++a)
      for (long b = 1; b <= 7; ++b) out.push_back({ExtValue(a), ExtValue(b)});
    out.push_back({ExtValue(ValueScalar(Rational(2, 3))), ExtValue(1)});
    out.push_back({ExtValue(ValueScalar(Rational(1, 2))), ExtValue(ValueScalar(Rational(3, 4)))});
  } else {
    for (long a = 1; a <= 4; ++a)
      for (long b = 1; b <= 4; ++b)
        for (long c = 1; c <= 4; ++c) out.push_back({ExtValue(a), ExtValue(b), ExtValue(c)});
  }
  return out;
}

// Random ideal with generators vanishing at the origin.
inline std::vector<Polynomial> random_ideal(std::mt19937_64& rng, std::size_t n, int max_gens) {
  std::vector<Polynomial> gens;
  int k = std::uniform_int_distribution<int>(1, max_gens)(rng);
  for (int i = 0; i < k; ++i) gens.push_back(random_poly(rng, n, 3, 3, false));
  return gens;
}

inline std::vector<ValueScalar> random_weight(std::mt19937_64& rng, std::size_t n) {
  std::vector<ValueScalar> w;
  for (std::size_t i = 0; i < n; ++i) w.emplace_back(static_cast<long>(std::uniform_int_distribution<int>(1, 4)(rng)));
  return w;
}

inline Ring named_ring(const std::string& prefix, std::size_t n) {
  Ring r;
  for (std::size_t i = 0; i < n; ++i) r.vars.push_back(prefix + std::to_string(i + 1));
  return r;
}

// Handles with prime initial ideals. Monomial-free alone is not enough:
// (x + y + z, x*y - z^3) at (1,2,1) has initial ideal (x + z, z*(y + z^2)).
struct HandleSpec {
  std::string vars;
  std::vector<std::string> gens;
  std::string w;
};

inline std::vector<HandleSpec> valuation_handles() {
  return {
      {"x,y", {"y^2 - x^3"}, "2,3"},
      {"x,y", {"y^3 - x^2 - x^2*y"}, "3,2"},
      {"x,y,z", {"x*y - z^2"}, "1,1,1"},
      {"x,y,z", {"x + y + z"}, "1,1,1"},
      {"x,y,z", {"x - y^2", "y - z^2"}, "4,2,1"},
  };
}

// binom(1/2, k) as an exact rational.
inline Rational half_binomial(long k) {
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= (Rational(1, 2) - i) / Rational(i + 1);
  return r;
}

// ---------------------------------------------------------------------------
// Newton-Puiseux products: F = prod (z - s_i) for random exact Puiseux s_i.

struct NpCase {
  std::vector<ValuedSeries> factors;
  std::vector<ValuedSeries> F;  // coefficients, degree 0 first
};

inline ValuedSeries random_puiseux(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(0, 6), den(1, 3), coef(-3, 3), count(1, 3);
  ValuedSeries s(SeriesMode::Puiseux);
  for (long k = count(rng); k > 0; --k) {
    long c = coef(rng);
    if (c) s.add_term(ValueScalar(Rational(num(rng), den(rng))), AlgebraicNumber(c));
  }
  return s;
}

inline NpCase random_np_case(std::mt19937_64& rng) {
  NpCase out;
  int deg = std::uniform_int_distribution<int>(1, 3)(rng);
  out.F = {ValuedSeries::constant(AlgebraicNumber(1), SeriesMode::Puiseux)};
  for (int i = 0; i < deg; ++i) {
    auto s = random_puiseux(rng);
    out.factors.push_back(s);
    // multiply by (z - s)
    std::vector<ValuedSeries> next(out.F.size() + 1, ValuedSeries(SeriesMode::Puiseux));
    for (std::size_t k = 0; k < out.F.size(); ++k) {
      next[k + 1] += out.F[k];
      next[k] -= s * out.F[k];
    }
    out.F = next;
  }
  return out;
}

// Multiset equality of series modulo t^N, compared through their text.
inline bool same_roots_mod(const std::vector<ValuedSeries>& a, const std::vector<ValuedSeries>& b, const ValueScalar& N) {
  auto key = [&](const std::vector<ValuedSeries>& v) {
    std::vector<std::string> k;
    for (const auto& s : v) k.push_back(s.truncated(ExtValue(N)).to_string());
    std::sort(k.begin(), k.end());
    return k;
  };
  return a.size() == b.size() && key(a) == key(b);
}

}  // namespace support
