#pragma once

// Factorization of univariate polynomials over Z and Q: modular
// factorization (distinct-degree + Cantor-Zassenhaus), multifactor Hensel
// lifting, and subset recombination.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ltrop/errors.hpp"
#include "ltrop/scalars.hpp"
#include "ltrop/upoly.hpp"

namespace ltrop {

using ZPoly = std::vector<Integer>;  // low degree first, no trailing zeros

namespace zfactor_detail {

using Mod = std::int64_t;
using MPoly = std::vector<Mod>;

inline void trim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Mod mulmod(Mod a, Mod b, Mod p) { return static_cast<Mod>((static_cast<__int128>(a) * b) % p); }

inline Mod powmod(Mod a, std::uint64_t e, Mod p) {
  Mod r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}
inline Mod invmod(Mod a, Mod p) { return powmod((a % p + p) % p, static_cast<std::uint64_t>(p - 2), p); }

inline MPoly reduce(const ZPoly& f, Mod p) {
  MPoly r(f.size());
  Integer pz(static_cast<long>(p));
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer t = f[i] % pz;
    if (t < 0) t += pz;
    r[i] = t.get_si();
  }
  trim(r);
  return r;
}

inline MPoly sub(const MPoly& a, const MPoly& b, Mod p) {
  MPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] + p) % p;
  trim(r);
  return r;
}

inline MPoly mul(const MPoly& a, const MPoly& b, Mod p) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

inline std::pair<MPoly, MPoly> divmod(const MPoly& a, const MPoly& b, Mod p) {
  if (b.empty()) throw InternalError("modular division by zero polynomial");
  MPoly rem = a;
  if (rem.size() < b.size()) return {{}, rem};
  MPoly q(rem.size() - b.size() + 1, 0);
  Mod inv = invmod(b.back(), p);
  for (std::size_t k = rem.size(); k-- >= b.size();) {
    Mod top = rem[k];
    if (top) {
      Mod f = mulmod(top, inv, p);
      q[k - (b.size() - 1)] = f;
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::size_t idx = k - (b.size() - 1) + j;
        rem[idx] = (rem[idx] - mulmod(f, b[j], p) + p) % p;
      }
    }
    if (k == b.size() - 1) break;
  }
  rem.resize(b.size() - 1);
  trim(rem);
  trim(q);
  return {q, rem};
}

inline MPoly monic(const MPoly& a, Mod p) {
  if (a.empty()) return a;
  Mod inv = invmod(a.back(), p);
  MPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], inv, p);
  return r;
}

inline MPoly gcd(MPoly a, MPoly b, Mod p) {
  while (!b.empty()) {
    auto r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

// Returns (s, t) with s*a + t*b = 1 mod p; a, b coprime.
inline std::pair<MPoly, MPoly> ext_gcd(const MPoly& a, const MPoly& b, Mod p) {
  MPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw InternalError("Hensel factors not coprime modulo p");
  Mod inv = invmod(r0[0], p);
  for (auto& c : s0) c = mulmod(c, inv, p);
  for (auto& c : t0) c = mulmod(c, inv, p);
  return {s0, t0};
}

inline MPoly derivative(const MPoly& a, Mod p) {
  MPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mulmod(a[i], static_cast<Mod>(i % p), p));
  trim(r);
  return r;
}

inline MPoly powmod_poly(MPoly base, const Integer& e, const MPoly& m, Mod p) {
  MPoly result{1};
  base = divmod(base, m, p).second;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(mul(result, result, p), m, p).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(mul(result, base, p), m, p).second;
  }
  return result;
}

// Splits a monic squarefree product of irreducibles of degree `deg` (p odd).
inline void equal_degree_split(const MPoly& g, std::size_t deg, Mod p, std::mt19937_64& rng,
                               std::vector<MPoly>& out) {
  if (g.size() - 1 == deg) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), deg);
  e = (e - 1) / 2;
  std::uniform_int_distribution<Mod> dist(0, p - 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    MPoly a(g.size() - 1);
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (a.size() < 2) continue;
    MPoly b = sub(powmod_poly(a, e, g, p), MPoly{1}, p);
    MPoly d = gcd(g, b, p);
    if (d.size() > 1 && d.size() < g.size()) {
      equal_degree_split(d, deg, p, rng, out);
      equal_degree_split(divmod(g, d, p).first, deg, p, rng, out);
      return;
    }
  }
  throw InternalError("equal-degree splitting did not converge");
}

// Monic irreducible factors of a monic squarefree polynomial mod p.
inline std::vector<MPoly> factor_mod_p(const MPoly& f_in, Mod p, std::mt19937_64& rng) {
  std::vector<MPoly> out;
  MPoly f = f_in;
  MPoly x{0, 1};
  MPoly h = x;
  Integer pz(static_cast<long>(p));
  for (std::size_t i = 1; 2 * i <= f.size() - 1; ++i) {
    h = powmod_poly(h, pz, f, p);
    MPoly g = gcd(f, sub(h, x, p), p);
    if (g.size() > 1) {
      equal_degree_split(g, i, p, rng, out);
      f = divmod(f, g, p).first;
      h = divmod(h, f, p).second;
    }
  }
  if (f.size() > 1) out.push_back(monic(f, p));
  return out;
}

inline Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline ZPoly zmod(ZPoly a, const Integer& m) {
  for (auto& c : a) c = mod_nonneg(c, m);
  trim(a);
  return a;
}

inline ZPoly symmetric(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    c = mod_nonneg(c, m);
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

inline ZPoly lift_mpoly(const MPoly& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<long>(c));
  return r;
}

// Exact division over Z; returns false if b does not divide a.
inline bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (b.empty()) return false;
  if (a.size() < b.size()) return a.empty() ? (quotient.clear(), true) : false;
  ZPoly rem = a;
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  for (std::size_t k = rem.size(); k-- >= b.size();) {
    if (rem[k] != 0) {
      if (!mpz_divisible_p(rem[k].get_mpz_t(), b.back().get_mpz_t())) return false;
      Integer f = rem[k] / b.back();
      q[k - (b.size() - 1)] = f;
      for (std::size_t j = 0; j < b.size(); ++j) rem[k - (b.size() - 1) + j] -= f * b[j];
    }
    if (k == b.size() - 1) break;
  }
  for (const auto& c : rem)
    if (c != 0) return false;
  trim(q);
  quotient = std::move(q);
  return true;
}

inline Integer content(const ZPoly& a) {
  Integer g(0);
  for (const auto& c : a) g = ltrop::gcd(g, c);
  return g;
}

inline ZPoly primitive(ZPoly a) {
  Integer g = content(a);
  if (g == 0) return a;
  if (!a.empty() && a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Lifts f = g*h mod p (g monic) to f = G*H mod p^k >= modulus.
inline std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& f, const MPoly& g0, const MPoly& h0, Mod p,
                                           const Integer& modulus) {
  auto [s, t] = ext_gcd(g0, h0, p);
  ZPoly g = lift_mpoly(g0), h = lift_mpoly(h0);
  Integer pj(static_cast<long>(p));
  Integer pz(static_cast<long>(p));
  while (pj < modulus) {
    Integer pj1 = pj * pz;
    ZPoly diff = f;
    ZPoly gh = zmul(g, h);
    diff.resize(std::max(diff.size(), gh.size()), Integer(0));
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    diff = zmod(diff, pj1);
    MPoly e;
    for (auto& c : diff) {
      if (!mpz_divisible_p(c.get_mpz_t(), pj.get_mpz_t())) throw InternalError("Hensel invariant broken");
      Integer q = c / pj;
      e.push_back(mod_nonneg(q, pz).get_si());
    }
    trim(e);
    MPoly dg = divmod(mul(t, e, p), g0, p).second;
    MPoly dh = divmod(sub(e, mul(dg, h0, p), p), g0, p).first;
    ZPoly zdg = lift_mpoly(dg), zdh = lift_mpoly(dh);
    g.resize(std::max(g.size(), zdg.size()), Integer(0));
    h.resize(std::max(h.size(), zdh.size()), Integer(0));
    for (std::size_t i = 0; i < zdg.size(); ++i) g[i] += pj * zdg[i];
    for (std::size_t i = 0; i < zdh.size(); ++i) h[i] += pj * zdh[i];
    g = zmod(g, pj1);
    h = zmod(h, pj1);
    pj = pj1;
  }
  return {zmod(g, modulus), zmod(h, modulus)};
}

// Lifts monic modular factors of f (f = lc * prod factors mod p) to monic
// factors modulo `modulus`.
inline std::vector<ZPoly> hensel_multi(const ZPoly& f, const std::vector<MPoly>& factors, Mod p,
                                       const Integer& modulus) {
  std::vector<ZPoly> out;
  ZPoly target = zmod(f, modulus);
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    MPoly rest = reduce(ZPoly{target.back()}, p);
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = mul(rest, factors[j], p);
    auto [g, h] = hensel_pair(target, factors[i], rest, p, modulus);
    out.push_back(g);
    target = h;
  }
  // the last factor: target = lc * factor, make it monic mod modulus
  Integer inv;
  mpz_invert(inv.get_mpz_t(), target.back().get_mpz_t(), modulus.get_mpz_t());
  for (auto& c : target) c = mod_nonneg(c * inv, modulus);
  out.push_back(target);
  return out;
}

inline Integer max_abs(const ZPoly& f) {
  Integer m(0);
  for (const auto& c : f) m = std::max(m, Integer(abs(c)));
  return m;
}

}  // namespace zfactor_detail

// Irreducible factors of a primitive squarefree integer polynomial with
// positive leading coefficient.
inline std::vector<ZPoly> factor_squarefree_z(const ZPoly& f_in) {
  using namespace zfactor_detail;
  ZPoly f = f_in;
  trim(f);
  if (f.size() <= 2) return {f};
  std::size_t n = f.size() - 1;
  std::mt19937_64 rng(0x5eed1234ULL);

  // pick the prime giving the fewest modular factors among a few candidates
  Integer cand(1009);
  Mod best_p = 0;
  std::vector<MPoly> best;
  int tried = 0;
  for (int guard = 0; guard < 200 && tried < 5; ++guard) {
    mpz_nextprime(cand.get_mpz_t(), cand.get_mpz_t());
    Mod p = cand.get_si();
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    MPoly fp = reduce(f, p);
    if (gcd(fp, derivative(fp, p), p).size() != 1) continue;
    ++tried;
    auto facs = factor_mod_p(monic(fp, p), p, rng);
    if (best.empty() || facs.size() < best.size()) {
      best = std::move(facs);
      best_p = p;
    }
    if (best.size() == 1) return {f};
  }
  if (best.empty()) throw InternalError("no suitable prime for modular factorization");

  Integer lc = f.back();
  Integer bound = Integer(abs(lc)) * max_abs(f) * Integer(static_cast<long>(n + 1));
  Integer two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
  bound *= two_n * 2 + 1;
  Integer modulus(static_cast<long>(best_p));
  while (modulus <= bound) modulus *= best_p;

  auto lifted = hensel_multi(f, best, best_p, modulus);

  std::vector<ZPoly> result;
  std::vector<ZPoly> pool = lifted;
  ZPoly current = f;
  std::size_t s = 1;
  std::size_t budget = 1u << 20;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      if (budget-- == 0) throw CapabilityError("factor recombination exceeded its search budget");
      ZPoly g{Integer(current.back())};
      for (auto i : idx) g = zmod(zmul(g, pool[i]), modulus);
      g = primitive(symmetric(g, modulus));
      ZPoly q;
      if (zdivides(current, g, q)) {
        result.push_back(g);
        current = q;
        std::vector<ZPoly> rest;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(pool[i]);
        pool = std::move(rest);
        found = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == pool.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (current.size() > 1) result.push_back(primitive(current));
  return result;
}

// Factorization over Q: monic irreducible factors with multiplicities,
// sorted by degree and then by coefficients.
inline std::vector<std::pair<UPoly<Rational>, int>> factor_rational(const UPoly<Rational>& f) {
  using namespace zfactor_detail;
  std::vector<std::pair<UPoly<Rational>, int>> out;
  for (auto& [part, mult] : squarefree_decomposition(f)) {
    Integer den(1);
    for (const auto& c : part.coeffs()) den = lcm(den, c.get_den());
    ZPoly z;
    for (const auto& c : part.coeffs()) z.push_back(Integer(c * Rational(den)));
    z = primitive(z);
    for (auto& g : factor_squarefree_z(z)) {
      std::vector<Rational> coeffs;
      for (const auto& c : g) coeffs.emplace_back(c);
      out.emplace_back(UPoly<Rational>(coeffs).monic(), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    const auto& ca = a.first.coeffs();
    const auto& cb = b.first.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i)
      if (ca[i] != cb[i]) return ca[i] < cb[i];
    return a.second < b.second;
  });
  return out;
}

}  // namespace ltrop
