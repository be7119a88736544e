#pragma once

// Dense univariate polynomials over a field-like coefficient type.
//
// T must provide +, -, *, /, unary -, construction from long, and a free
// function is_zero(const T&).

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "ltrop/errors.hpp"
#include "ltrop/scalars.hpp"

namespace ltrop {

inline bool is_zero(const Rational& q) { return q == 0; }

template <class T>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit UPoly(const T& constant) {
    if (!is_zero(constant)) c_.push_back(constant);
  }

  // x^k * c
  static UPoly monomial(std::size_t k, const T& c) {
    std::vector<T> v(k + 1, T(0));
    v[k] = c;
    return UPoly(std::move(v));
  }
  static UPoly x() { return monomial(1, T(1)); }

  bool is_zero_poly() const { return c_.empty(); }
  // -1 for the zero polynomial
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  const T& lead() const {
    if (c_.empty()) throw UsageError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return UPoly(std::move(r));
  }
  UPoly operator-() const {
    std::vector<T> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(-x);
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return UPoly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const T& s, const UPoly& a) {
    std::vector<T> r;
    r.reserve(a.c_.size());
    for (const auto& x : a.c_) r.push_back(s * x);
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!is_zero(a.c_[i] - b.c_[i])) return false;
    return true;
  }

  // Euclidean division; the divisor must be nonzero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.c_.empty()) throw UsageError("polynomial division by zero");
    std::vector<T> rem = a.c_;
    long db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<T> q(static_cast<std::size_t>(a.degree() - db + 1), T(0));
    T inv_lead = T(1) / b.lead();
    for (long k = a.degree(); k >= db; --k) {
      const T& top = rem[static_cast<std::size_t>(k)];
      if (is_zero(top)) continue;
      T f = top * inv_lead;
      q[static_cast<std::size_t>(k - db)] = f;
      for (long j = 0; j <= db; ++j) {
        auto idx = static_cast<std::size_t>(k - db + j);
        rem[idx] = rem[idx] - f * b.c_[static_cast<std::size_t>(j)];
      }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
  }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

  UPoly monic() const {
    if (c_.empty()) return *this;
    T inv = T(1) / lead();
    return inv * *this;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<T> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(T(static_cast<long>(i)) * c_[i]);
    return UPoly(std::move(r));
  }

  template <class U>
  U eval(const U& x) const {
    U acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
    return acc;
  }
  T operator()(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // p(x + s)
  UPoly shift(const T& s) const {
    UPoly acc;
    UPoly lin(std::vector<T>{s, T(1)});
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + UPoly(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T>
UPoly<T> gcd(UPoly<T> a, UPoly<T> b) {
  while (!b.is_zero_poly()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) monic.
template <class T>
std::tuple<UPoly<T>, UPoly<T>, UPoly<T>> ext_gcd(const UPoly<T>& a, const UPoly<T>& b) {
  UPoly<T> r0 = a, r1 = b, s0(T(1)), s1, t0, t1(T(1));
  while (!r1.is_zero_poly()) {
    auto [q, r] = UPoly<T>::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero_poly()) return {r0, s0, t0};
  T inv = T(1) / r0.lead();
  return {inv * r0, inv * s0, inv * t0};
}

// Resultant over a field, by the Euclidean recurrence.
template <class T>
T resultant(const UPoly<T>& a, const UPoly<T>& b) {
  if (a.is_zero_poly() || b.is_zero_poly()) return T(0);
  long da = a.degree(), db = b.degree();
  if (db == 0) {
    T r(1);
    for (long i = 0; i < da; ++i) r = r * b.lead();
    return r;
  }
  if (da == 0) {
    T r(1);
    for (long i = 0; i < db; ++i) r = r * a.lead();
    return r;
  }
  auto rem = a % b;
  if (rem.is_zero_poly()) return T(0);
  T factor(1);
  for (long i = 0; i < da - rem.degree(); ++i) factor = factor * b.lead();
  if ((da * db) % 2 == 1) factor = -factor;
  return factor * resultant(b, rem);
}

// Square-free decomposition (Yun, characteristic 0): returns (f_i, i) with
// f = lc * prod f_i^i and each f_i monic square-free, pairwise coprime.
template <class T>
std::vector<std::pair<UPoly<T>, int>> squarefree_decomposition(const UPoly<T>& f) {
  std::vector<std::pair<UPoly<T>, int>> out;
  if (f.degree() < 1) return out;
  UPoly<T> fp = f.derivative();
  UPoly<T> a0 = gcd(f, fp);
  UPoly<T> b = f / a0;
  UPoly<T> c = fp / a0;
  UPoly<T> d = c - b.derivative();
  int i = 1;
  while (b.degree() >= 1) {
    UPoly<T> a = gcd(b, d);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    if (a.degree() >= 1) out.emplace_back(a.monic(), i);
    ++i;
  }
  return out;
}

}  // namespace ltrop
