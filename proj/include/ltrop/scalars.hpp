#pragma once

// Exact scalars: arbitrary-precision rationals and elements of the value
// group Q + Q*sqrt(d) used for weights, valuations and series exponents.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ltrop/errors.hpp"

namespace ltrop {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

// "p/q" in lowest terms, "p" when q = 1.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

inline Integer parse_integer(std::string_view text) {
  text = detail::trim(text);
  if (!detail::is_integer_literal(text)) throw UsageError("not an integer: '" + std::string(text) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s, 10);  // base 10: a leading zero is not octal
}

inline Rational parse_rational(std::string_view text) {
  text = detail::trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = detail::trim(text.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw UsageError("denominator must be unsigned: '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw UsageError("zero denominator: '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool is_squarefree(std::int64_t d) {
  if (d < 1) return false;
  for (std::int64_t p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

// a + b*sqrt(d) for a fixed positive squarefree d. With d = 1 the b part is
// always folded into a, so purely rational values carry b = 0. A value with
// b = 0 is compatible with every d.
class ValueScalar {
 public:
  ValueScalar() = default;
  ValueScalar(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  ValueScalar(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  ValueScalar(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (!is_squarefree(d_)) throw UsageError("sqrt parameter must be a positive squarefree integer, got " + std::to_string(d_));
    a_.canonicalize();
    b_.canonicalize();
    normalize();
  }

  static ValueScalar sqrt_d(std::int64_t d) { return ValueScalar(Rational(0), Rational(1), d); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt_part() const { return b_; }
  std::int64_t d() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  int sign() const { return sign_of(a_, b_, d_); }

  friend ValueScalar operator+(const ValueScalar& x, const ValueScalar& y) {
    std::int64_t d = common_d(x, y);
    return ValueScalar(x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend ValueScalar operator-(const ValueScalar& x, const ValueScalar& y) {
    std::int64_t d = common_d(x, y);
    return ValueScalar(x.a_ - y.a_, x.b_ - y.b_, d);
  }
  ValueScalar operator-() const { return ValueScalar(-a_, -b_, d_); }
  friend ValueScalar operator*(const ValueScalar& x, const ValueScalar& y) {
    std::int64_t d = common_d(x, y);
    Rational dd(static_cast<long>(d));
    return ValueScalar(x.a_ * y.a_ + x.b_ * y.b_ * dd, x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend ValueScalar operator*(const Rational& q, const ValueScalar& x) { return ValueScalar(q * x.a_, q * x.b_, x.d_); }
  friend ValueScalar operator*(const ValueScalar& x, const Rational& q) { return q * x; }
  friend ValueScalar operator/(const ValueScalar& x, const Rational& q) {
    if (q == 0) throw UsageError("division of a value by zero");
    return ValueScalar(x.a_ / q, x.b_ / q, x.d_);
  }
  ValueScalar& operator+=(const ValueScalar& y) { return *this = *this + y; }
  ValueScalar& operator-=(const ValueScalar& y) { return *this = *this - y; }

  friend std::strong_ordering operator<=>(const ValueScalar& x, const ValueScalar& y) {
    int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const ValueScalar& x, const ValueScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }

  // Sign of p + q*sqrt(d), decided exactly by squaring.
  static int sign_of(const Rational& p, const Rational& q, std::int64_t d) {
    int sp = sgn(p), sq = sgn(q);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    Rational p2 = p * p;
    Rational q2d = q * q * Rational(static_cast<long>(d));
    int c = cmp(p2, q2d);
    // |p| > |q|sqrt(d) means the rational part dominates.
    return c > 0 ? sp : (c < 0 ? sq : 0);
  }

  static std::int64_t common_d(const ValueScalar& x, const ValueScalar& y) {
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    if (x.d_ != y.d_)
      throw UsageError("value group mismatch: sqrt(" + std::to_string(x.d_) + ") vs sqrt(" + std::to_string(y.d_) + ")");
    return x.d_;
  }

  double approx() const;

  std::string to_string() const {
    if (b_ == 0) return ltrop::to_string(a_);
    std::string bpart = ltrop::to_string(b_) + "*sqrt(" + std::to_string(d_) + ")";
    if (a_ == 0) return bpart;
    if (b_ < 0) return ltrop::to_string(a_) + "-" + ltrop::to_string(Rational(-b_)) + "*sqrt(" + std::to_string(d_) + ")";
    return ltrop::to_string(a_) + "+" + bpart;
  }

 private:
  void normalize() {
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
    }
  }

  Rational a_{0};
  Rational b_{0};
  std::int64_t d_ = 1;
};

inline double ValueScalar::approx() const {
  return a_.get_d() + b_.get_d() * __builtin_sqrt(static_cast<double>(d_));
}

inline std::string to_string(const ValueScalar& v) { return v.to_string(); }

inline std::strong_ordering cmp_value(const ValueScalar& a, const ValueScalar& b) {
  if (a.sqrt_part() != 0 && b.sqrt_part() != 0 && a.d() != b.d())
    throw UsageError("cmp_value: operands use different sqrt parameters");
  return a <=> b;
}

// Accepts "a", "b*sqrt(d)", "a+b*sqrt(d)", "a-b*sqrt(d)" and "sqrt(d)"
// (coefficient 1). Rational parts are in "p/q" form.
inline ValueScalar parse_value(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw UsageError("empty value literal");
  auto pos = s.find("sqrt(");
  if (pos == std::string::npos) return ValueScalar(parse_rational(s));
  auto close = s.find(')', pos);
  if (close == std::string::npos || close + 1 != s.size())
    throw UsageError("malformed value literal: '" + std::string(text) + "'");
  Integer dz = parse_integer(s.substr(pos + 5, close - pos - 5));
  if (!dz.fits_slong_p() || dz < 1) throw UsageError("bad sqrt parameter in '" + std::string(text) + "'");
  std::int64_t d = dz.get_si();
  if (!is_squarefree(d)) throw UsageError("sqrt parameter must be squarefree in '" + std::string(text) + "'");
  std::string head = s.substr(0, pos);  // e.g. "1+1/2*", "-", "", "3*"
  Rational b(1);
  std::string a_text;
  if (!head.empty() && head.back() == '*') head.pop_back();
  // split head at the last top-level sign that is not leading
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
      split = i;
      break;
    }
  }
  std::string b_text = head;
  if (split != std::string::npos) {
    a_text = head.substr(0, split);
    b_text = head.substr(split);
  }
  if (b_text.empty() || b_text == "+") b = 1;
  else if (b_text == "-") b = -1;
  else b = parse_rational(b_text.front() == '+' ? b_text.substr(1) : b_text);
  Rational a = a_text.empty() ? Rational(0) : parse_rational(a_text);
  return ValueScalar(a, b, d);
}

// A valuation value: a ValueScalar or +infinity.
class ExtValue {
 public:
  ExtValue() : inf_(true) {}
  ExtValue(ValueScalar v) : inf_(false), v_(std::move(v)) {}  // NOLINT
  ExtValue(long v) : inf_(false), v_(v) {}                      // NOLINT
  static ExtValue infinity() { return ExtValue(); }

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }
  const ValueScalar& value() const {
    if (inf_) throw UsageError("infinite value has no finite part");
    return v_;
  }

  friend ExtValue operator+(const ExtValue& x, const ExtValue& y) {
    if (x.inf_ || y.inf_) return infinity();
    return ExtValue(x.v_ + y.v_);
  }
  friend std::strong_ordering operator<=>(const ExtValue& x, const ExtValue& y) {
    if (x.inf_ && y.inf_) return std::strong_ordering::equal;
    if (x.inf_) return std::strong_ordering::greater;
    if (y.inf_) return std::strong_ordering::less;
    return x.v_ <=> y.v_;
  }
  friend bool operator==(const ExtValue& x, const ExtValue& y) {
    if (x.inf_ || y.inf_) return x.inf_ == y.inf_;
    return x.v_ == y.v_;
  }

  std::string to_string() const { return inf_ ? std::string("inf") : v_.to_string(); }

 private:
  bool inf_;
  ValueScalar v_;
};

inline const ExtValue& min(const ExtValue& a, const ExtValue& b) { return (b < a) ? b : a; }

inline ExtValue parse_ext_value(std::string_view text) {
  auto t = detail::trim(text);
  if (t == "inf" || t == "+inf" || t == "oo") return ExtValue::infinity();
  return ExtValue(parse_value(t));
}

// Parses "v1,v2,..." into a weight vector (no infinite entries).
inline std::vector<ValueScalar> parse_weight(std::string_view text) {
  std::vector<ValueScalar> out;
  std::size_t start = 0;
  std::string s(text);
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_value(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::vector<ExtValue> parse_ext_weight(std::string_view text) {
  std::vector<ExtValue> out;
  std::string s(text);
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_ext_value(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace ltrop
