#pragma once

// Truncated Puiseux and Hahn series in t: finitely many terms c*t^e below an
// exclusive truncation order, with precision propagated through arithmetic.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ltrop/errors.hpp"
#include "ltrop/number_field.hpp"
#include "ltrop/polynomial.hpp"
#include "ltrop/scalars.hpp"

namespace ltrop {

enum class SeriesMode { Puiseux, Hahn };

inline std::string mode_name(SeriesMode m) { return m == SeriesMode::Puiseux ? "puiseux" : "hahn"; }

inline SeriesMode parse_mode(const std::string& s) {
  if (s == "puiseux") return SeriesMode::Puiseux;
  if (s == "hahn") return SeriesMode::Hahn;
  throw UsageError("mode must be 'puiseux' or 'hahn', got '" + s + "'");
}

// Valuation of a truncated series: exact, only bounded below by the
// truncation, or exactly infinite.
struct SeriesValuation {
  enum Kind { Exact, AtLeast, Infinite } kind = Infinite;
  ValueScalar value;
  bool is_exact() const { return kind == Exact; }
  std::string to_string() const {
    if (kind == Infinite) return "inf";
    return (kind == AtLeast ? ">=" : "") + value.to_string();
  }
};

class ValuedSeries {
 public:
  using Term = std::pair<ValueScalar, AlgebraicNumber>;

  explicit ValuedSeries(SeriesMode mode = SeriesMode::Puiseux, ExtValue trunc = ExtValue::infinity())
      : trunc_(std::move(trunc)), mode_(mode) {}

  static ValuedSeries constant(const AlgebraicNumber& c, SeriesMode mode, ExtValue trunc = ExtValue::infinity()) {
    return monomial(c, ValueScalar(0), mode, std::move(trunc));
  }
  static ValuedSeries monomial(const AlgebraicNumber& c, const ValueScalar& e, SeriesMode mode,
                               ExtValue trunc = ExtValue::infinity()) {
    ValuedSeries s(mode, std::move(trunc));
    s.add_term(e, c);
    return s;
  }
  static ValuedSeries from_terms(std::vector<Term> terms, SeriesMode mode, ExtValue trunc) {
    ValuedSeries s(mode, std::move(trunc));
    for (auto& [e, c] : terms) s.add_term(e, c);
    return s;
  }

  const std::vector<Term>& terms() const { return terms_; }
  const ExtValue& truncation() const { return trunc_; }
  SeriesMode mode() const { return mode_; }
  bool empty() const { return terms_.empty(); }
  bool is_exact() const { return trunc_.is_infinite(); }

  AlgebraicNumber coeff(const ValueScalar& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const ValueScalar& v) { return t.first < v; });
    return (it != terms_.end() && it->first == e) ? it->second : AlgebraicNumber(0);
  }

  // Adds c*t^e; terms at or beyond the truncation are dropped.
  void add_term(const ValueScalar& e, const AlgebraicNumber& c) {
    if (coeff_is_zero(c) || ExtValue(e) >= trunc_) return;
    if (mode_ == SeriesMode::Puiseux && !e.is_rational())
      throw UsageError("puiseux series cannot carry the irrational exponent " + e.to_string());
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const ValueScalar& v) { return t.first < v; });
    if (it != terms_.end() && it->first == e) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    } else {
      terms_.insert(it, {e, c});
    }
  }

  // Lowers the truncation, dropping terms that no longer fit.
  ValuedSeries truncated(const ExtValue& t) const {
    ValuedSeries s(mode_, min(trunc_, t));
    for (const auto& [e, c] : terms_)
      if (ExtValue(e) < s.trunc_) s.terms_.emplace_back(e, c);
    return s;
  }

  // Lower bound of the valuation: the first exponent, else the truncation.
  ExtValue order_bound() const { return terms_.empty() ? trunc_ : ExtValue(terms_.front().first); }

  SeriesValuation valuation() const {
    SeriesValuation v;
    if (!terms_.empty()) {
      v.kind = SeriesValuation::Exact;
      v.value = terms_.front().first;
    } else if (trunc_.is_finite()) {
      v.kind = SeriesValuation::AtLeast;
      v.value = trunc_.value();
    }
    return v;
  }

  const AlgebraicNumber& leading_coeff() const {
    if (terms_.empty()) throw UsageError("series has no known leading term");
    return terms_.front().second;
  }

  // Least common denominator of the exponents (1 for the empty series).
  Integer denominator() const {
    Integer n = 1;
    for (const auto& [e, c] : terms_) {
      n = lcm(n, Integer(e.rational_part().get_den()));
      if (!e.is_rational()) n = lcm(n, Integer(e.sqrt_part().get_den()));
    }
    return n;
  }

  bool in_ring() const { return terms_.empty() || terms_.front().first.sign() >= 0; }

  friend ValuedSeries operator+(const ValuedSeries& a, const ValuedSeries& b) {
    check_modes(a, b);
    ValuedSeries s(a.mode_, min(a.trunc_, b.trunc_));
    for (const auto& [e, c] : a.terms_) s.add_term(e, c);
    for (const auto& [e, c] : b.terms_) s.add_term(e, c);
    return s;
  }
  ValuedSeries operator-() const {
    ValuedSeries s = *this;
    for (auto& t : s.terms_) t.second = -t.second;
    return s;
  }
  friend ValuedSeries operator-(const ValuedSeries& a, const ValuedSeries& b) { return a + (-b); }

  friend ValuedSeries operator*(const ValuedSeries& a, const ValuedSeries& b) {
    check_modes(a, b);
    ExtValue t = min(a.trunc_ + b.order_bound(), b.trunc_ + a.order_bound());
    ValuedSeries s(a.mode_, t);
    std::map<ValueScalar, AlgebraicNumber> acc;
    for (const auto& [e1, c1] : a.terms_)
      for (const auto& [e2, c2] : b.terms_) {
        ValueScalar e = e1 + e2;
        if (ExtValue(e) >= t) continue;
        acc[e] += c1 * c2;
      }
    for (auto& [e, c] : acc)
      if (!coeff_is_zero(c)) s.terms_.emplace_back(e, std::move(c));
    return s;
  }
  friend ValuedSeries operator*(const AlgebraicNumber& c, const ValuedSeries& a) {
    if (coeff_is_zero(c)) return ValuedSeries(a.mode_, ExtValue::infinity());
    ValuedSeries s = a;
    for (auto& t : s.terms_) t.second = c * t.second;
    return s;
  }

  // Multiplication by t^e, exact.
  ValuedSeries shift(const ValueScalar& e) const {
    ValuedSeries s(mode_, trunc_ + ExtValue(e));
    for (const auto& [x, c] : terms_) s.terms_.emplace_back(x + e, c);
    return s;
  }

  ValuedSeries pow(unsigned k) const {
    ValuedSeries r = constant(AlgebraicNumber(1), mode_);
    ValuedSeries base = *this;
    while (k) {
      if (k & 1U) r = r * base;
      k >>= 1U;
      if (k) base = base * base;
    }
    return r;
  }

  ValuedSeries& operator+=(const ValuedSeries& b) { return *this = *this + b; }
  ValuedSeries& operator-=(const ValuedSeries& b) { return *this = *this - b; }

  friend bool operator==(const ValuedSeries& a, const ValuedSeries& b) {
    if (a.mode_ != b.mode_ || a.trunc_ != b.trunc_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second)) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& [e, c] : terms_) append_term(out, c, e.is_zero() ? std::string() : "t^(" + e.to_string() + ")");
    if (out.empty()) out = "0";
    if (trunc_.is_finite()) out += " + O(t^(" + trunc_.value().to_string() + "))";
    return out;
  }

 private:
  static void check_modes(const ValuedSeries& a, const ValuedSeries& b) {
    if (a.mode_ != b.mode_) throw UsageError("cannot combine a puiseux series with a hahn series");
  }

  std::vector<Term> terms_;
  ExtValue trunc_;
  SeriesMode mode_;
};

namespace series_detail {

// Splits at top-level '+' and '-' signs, keeping each sign with its piece.
inline std::vector<std::pair<bool, std::string>> split_terms(const std::string& text) {
  std::vector<std::pair<bool, std::string>> out;
  int depth = 0;
  bool negative = false;
  std::string cur;
  auto flush = [&] {
    auto t = std::string(detail::trim(cur));
    if (!t.empty()) out.emplace_back(negative, t);
    else if (!out.empty() || negative) throw UsageError("empty term in series '" + text + "'");
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')' && --depth < 0) throw UsageError("unbalanced parentheses in series '" + text + "'");
    if (depth == 0 && (ch == '+' || ch == '-')) {
      if (!detail::trim(cur).empty() || !out.empty() || negative) flush();
      negative = ch == '-';
      continue;
    }
    cur += ch;
  }
  if (depth != 0) throw UsageError("unbalanced parentheses in series '" + text + "'");
  flush();
  return out;
}

inline AlgebraicNumber parse_coefficient(const std::string& text, const NumberField* field) {
  Ring none;
  Polynomial p = parse_polynomial(text, none, field);
  return p.constant_term();
}

}  // namespace series_detail

// Inverse of ValuedSeries::to_string.
inline ValuedSeries parse_series(const std::string& text, SeriesMode mode, const NumberField* field = nullptr) {
  if (text.size() > 100000) throw UsageError("series text too long");
  std::vector<ValuedSeries::Term> terms;
  ExtValue trunc = ExtValue::infinity();
  bool have_trunc = false;
  for (auto& [negative, piece] : series_detail::split_terms(text)) {
    if (have_trunc) throw UsageError("the O(...) term must come last in series '" + text + "'");
    if (piece.rfind("O(", 0) == 0) {
      if (negative || piece.size() < 7 || piece.compare(0, 5, "O(t^(") != 0 || piece.compare(piece.size() - 2, 2, "))") != 0)
        throw UsageError("malformed truncation term '" + piece + "'");
      trunc = ExtValue(parse_value(piece.substr(5, piece.size() - 7)));
      have_trunc = true;
      continue;
    }
    std::string coef = piece;
    ValueScalar e(0);
    auto pos = piece.rfind("t^(");
    if (pos != std::string::npos && piece.back() == ')') {
      e = parse_value(piece.substr(pos + 3, piece.size() - pos - 4));
      coef = piece.substr(0, pos);
    } else if (piece == "t" || (piece.size() > 2 && piece.compare(piece.size() - 2, 2, "*t") == 0)) {
      e = ValueScalar(1);
      coef = piece.substr(0, piece.size() - 1);
    }
    coef = std::string(detail::trim(coef));
    AlgebraicNumber c(1);
    if (!coef.empty() && coef != piece) {
      if (coef.back() != '*') throw UsageError("expected '*' before t in series term '" + piece + "'");
      coef.pop_back();
      c = series_detail::parse_coefficient(coef, field);
    } else if (coef == piece) {
      c = series_detail::parse_coefficient(coef, field);
    }
    if (negative) c = -c;
    if (coeff_is_zero(c) && piece != "0") throw UsageError("zero coefficient in series term '" + piece + "'");
    terms.emplace_back(e, c);
  }
  ValuedSeries s(mode, trunc);
  for (auto& [e, c] : terms) {
    if (ExtValue(e) >= trunc) throw UsageError("series term t^(" + e.to_string() + ") lies beyond the truncation");
    s.add_term(e, c);
  }
  return s;
}

// f evaluated at a point of series, with precision propagated.
inline ValuedSeries substitute(const Polynomial& f, const std::vector<ValuedSeries>& point, SeriesMode mode) {
  if (point.size() != f.nvars()) throw UsageError("point has the wrong number of coordinates");
  std::vector<std::vector<ValuedSeries>> powers(point.size());
  auto power = [&](std::size_t i, std::uint32_t k) -> const ValuedSeries& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(ValuedSeries::constant(AlgebraicNumber(1), mode));
    while (cache.size() <= k) cache.push_back(cache.back() * point[i]);
    return cache[k];
  };
  ValuedSeries acc(mode, ExtValue::infinity());
  for (const auto& [e, c] : f.terms()) {
    ValuedSeries term = ValuedSeries::constant(c, mode);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = term * power(i, e[i]);
    acc += term;
  }
  if (acc.truncation().is_finite() && acc.truncation().value().sign() <= 0)
    throw CapabilityError("insufficient truncation: result is only known modulo t^(" + acc.truncation().to_string() + ")");
  return acc;
}

}  // namespace ltrop
