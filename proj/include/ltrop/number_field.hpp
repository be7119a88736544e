#pragma once

// Towers of simple algebraic extensions of Q and exact arithmetic in them.
//
// A FieldLevel is an immutable node Q(a1)(a2)...(ak) whose parent is the
// level below. An AlgebraicNumber carries a pointer to the lowest level it
// lives in, so values created before an adjunction stay valid afterwards:
// a NumberField is just a handle to the current top of an append-only chain.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ltrop/errors.hpp"
#include "ltrop/scalars.hpp"
#include "ltrop/upoly.hpp"

namespace ltrop {

struct FieldLevel;
using LevelPtr = std::shared_ptr<const FieldLevel>;

class AlgebraicNumber {
 public:
  AlgebraicNumber() : q_(0) {}
  AlgebraicNumber(long v) : q_(v) {}                       // NOLINT(google-explicit-constructor)
  AlgebraicNumber(Rational v) : q_(std::move(v)) { q_.canonicalize(); }  // NOLINT

  // The generator of `level` as an element of that level.
  static AlgebraicNumber generator(const LevelPtr& level);
  // Element of `level` with the given coefficients (low degree first) in
  // the level's generator; coefficients must live in the parent field.
  static AlgebraicNumber from_coeffs(const LevelPtr& level, std::vector<AlgebraicNumber> coeffs);

  const LevelPtr& level() const { return level_; }
  bool is_rational() const { return level_ == nullptr; }
  const Rational& rational() const {
    if (level_) throw UsageError("algebraic number is not rational");
    return q_;
  }
  // Coefficients in the generator of level(), or {rational} when rational.
  const std::vector<AlgebraicNumber>& coeffs() const { return c_; }

  friend bool is_zero(const AlgebraicNumber& x) { return !x.level_ && x.q_ == 0; }
  bool is_one() const { return !level_ && q_ == 1; }

  friend AlgebraicNumber operator+(const AlgebraicNumber& x, const AlgebraicNumber& y);
  friend AlgebraicNumber operator-(const AlgebraicNumber& x, const AlgebraicNumber& y) { return x + (-y); }
  AlgebraicNumber operator-() const;
  friend AlgebraicNumber operator*(const AlgebraicNumber& x, const AlgebraicNumber& y);
  friend AlgebraicNumber operator/(const AlgebraicNumber& x, const AlgebraicNumber& y) { return x * y.inverse(); }
  AlgebraicNumber& operator+=(const AlgebraicNumber& y) { return *this = *this + y; }
  AlgebraicNumber& operator-=(const AlgebraicNumber& y) { return *this = *this - y; }
  AlgebraicNumber& operator*=(const AlgebraicNumber& y) { return *this = *this * y; }
  AlgebraicNumber inverse() const;
  AlgebraicNumber pow(unsigned long e) const;

  friend bool operator==(const AlgebraicNumber& x, const AlgebraicNumber& y);
  friend bool operator!=(const AlgebraicNumber& x, const AlgebraicNumber& y) { return !(x == y); }

  // Polynomial in the generator names, e.g. "a1", "1/2*a1 + 1", "(a1 + 1)*a2 - 3".
  std::string to_string() const;
  // True when to_string() is a single signed factor (no top-level + or -).
  bool is_atomic() const;
  // Negative rational, used by printers to emit " - " separators.
  bool is_negative_rational() const { return !level_ && q_ < 0; }

  // Least common level of x and y; throws if they come from unrelated towers.
  static LevelPtr join(const LevelPtr& a, const LevelPtr& b);

 private:
  static AlgebraicNumber make(const LevelPtr& level, std::vector<AlgebraicNumber> coeffs);
  std::vector<AlgebraicNumber> coeffs_at(const LevelPtr& level) const;

  LevelPtr level_;
  Rational q_;
  std::vector<AlgebraicNumber> c_;
};

struct FieldLevel {
  LevelPtr parent;
  std::string name;
  // Monic minimal polynomial over the parent field, low degree first.
  std::vector<AlgebraicNumber> minpoly;
  int height = 1;

  std::size_t degree() const { return minpoly.size() - 1; }
  std::size_t absolute_degree() const { return degree() * (parent ? parent->absolute_degree() : 1); }
};

inline int height_of(const LevelPtr& l) { return l ? l->height : 0; }
inline std::size_t absolute_degree(const LevelPtr& l) { return l ? l->absolute_degree() : 1; }

inline bool is_ancestor_or_self(const LevelPtr& anc, const LevelPtr& desc) {
  if (!anc) return true;
  for (const FieldLevel* p = desc.get(); p; p = p->parent.get())
    if (p == anc.get()) return true;
  return false;
}

inline LevelPtr AlgebraicNumber::join(const LevelPtr& a, const LevelPtr& b) {
  if (a == b) return a;
  if (!a) return b;
  if (!b) return a;
  if (a->height >= b->height && is_ancestor_or_self(b, a)) return a;
  if (b->height >= a->height && is_ancestor_or_self(a, b)) return b;
  throw UsageError("algebraic numbers from unrelated number fields");
}

inline AlgebraicNumber AlgebraicNumber::make(const LevelPtr& level, std::vector<AlgebraicNumber> coeffs) {
  while (!coeffs.empty() && is_zero(coeffs.back())) coeffs.pop_back();
  if (coeffs.empty()) return AlgebraicNumber();
  if (coeffs.size() == 1) return coeffs.front();
  AlgebraicNumber r;
  r.level_ = level;
  r.c_ = std::move(coeffs);
  return r;
}

inline AlgebraicNumber AlgebraicNumber::generator(const LevelPtr& level) {
  if (!level) throw UsageError("Q has no generator");
  if (level->degree() == 1) return -level->minpoly[0];
  return make(level, {AlgebraicNumber(0), AlgebraicNumber(1)});
}

inline AlgebraicNumber AlgebraicNumber::from_coeffs(const LevelPtr& level, std::vector<AlgebraicNumber> coeffs) {
  if (!level) {
    AlgebraicNumber acc;
    if (coeffs.size() > 1) throw UsageError("rational field takes one coefficient");
    return coeffs.empty() ? acc : coeffs.front();
  }
  for (const auto& c : coeffs)
    if (!is_ancestor_or_self(c.level_, level->parent))
      throw UsageError("coefficient does not lie in the field below '" + level->name + "'");
  // reduce modulo the minimal polynomial
  std::size_t deg = level->degree();
  for (std::size_t k = coeffs.size(); k-- > deg;) {
    AlgebraicNumber top = coeffs[k];
    if (is_zero(top)) continue;
    for (std::size_t j = 0; j <= deg; ++j) coeffs[k - deg + j] = coeffs[k - deg + j] - top * level->minpoly[j];
  }
  if (coeffs.size() > deg) coeffs.resize(deg);
  return make(level, std::move(coeffs));
}

inline std::vector<AlgebraicNumber> AlgebraicNumber::coeffs_at(const LevelPtr& level) const {
  if (level_ == level) return c_;
  return {*this};
}

inline AlgebraicNumber operator+(const AlgebraicNumber& x, const AlgebraicNumber& y) {
  if (!x.level_ && !y.level_) return AlgebraicNumber(x.q_ + y.q_);
  LevelPtr l = AlgebraicNumber::join(x.level_, y.level_);
  auto a = x.coeffs_at(l);
  auto b = y.coeffs_at(l);
  if (a.size() < b.size()) std::swap(a, b);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
  return AlgebraicNumber::make(l, std::move(a));
}

inline AlgebraicNumber AlgebraicNumber::operator-() const {
  if (!level_) return AlgebraicNumber(Rational(-q_));
  AlgebraicNumber r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

inline AlgebraicNumber operator*(const AlgebraicNumber& x, const AlgebraicNumber& y) {
  if (!x.level_ && !y.level_) return AlgebraicNumber(x.q_ * y.q_);
  if (is_zero(x) || is_zero(y)) return AlgebraicNumber();
  LevelPtr l = AlgebraicNumber::join(x.level_, y.level_);
  if (x.level_ != l || y.level_ != l) {
    const AlgebraicNumber& scalar = x.level_ == l ? y : x;
    const AlgebraicNumber& vec = x.level_ == l ? x : y;
    std::vector<AlgebraicNumber> r;
    r.reserve(vec.c_.size());
    for (const auto& c : vec.c_) r.push_back(scalar * c);
    return AlgebraicNumber::make(l, std::move(r));
  }
  std::vector<AlgebraicNumber> prod(x.c_.size() + y.c_.size() - 1);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (is_zero(x.c_[i])) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) prod[i + j] = prod[i + j] + x.c_[i] * y.c_[j];
  }
  return AlgebraicNumber::from_coeffs(l, std::move(prod));
}

inline AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero(*this)) throw UsageError("division by zero in number field");
  if (!level_) return AlgebraicNumber(Rational(1 / q_));
  UPoly<AlgebraicNumber> a(c_);
  UPoly<AlgebraicNumber> m(level_->minpoly);
  auto [g, s, t] = ext_gcd(a, m);
  if (g.degree() != 0) throw InternalError("minimal polynomial of '" + level_->name + "' is reducible");
  return from_coeffs(level_, s.coeffs());
}

inline AlgebraicNumber AlgebraicNumber::pow(unsigned long e) const {
  AlgebraicNumber result(1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

inline bool operator==(const AlgebraicNumber& x, const AlgebraicNumber& y) {
  if (x.level_ != y.level_) return false;
  if (!x.level_) return x.q_ == y.q_;
  if (x.c_.size() != y.c_.size()) return false;
  for (std::size_t i = 0; i < x.c_.size(); ++i)
    if (!(x.c_[i] == y.c_[i])) return false;
  return true;
}

inline bool AlgebraicNumber::is_atomic() const {
  if (!level_) return true;
  std::size_t nonzero = 0;
  for (const auto& c : c_)
    if (!is_zero(c)) ++nonzero;
  return nonzero == 1 && !c_.empty() && c_.back().is_atomic();
}

// Appends the signed term c*mono to a sum being printed; an empty mono
// means a constant term. Compound coefficients are parenthesized.
inline void append_term(std::string& out, const AlgebraicNumber& c, const std::string& mono) {
  if (is_zero(c)) return;
  std::string text = c.to_string();
  bool negative = c.is_atomic() && text.front() == '-';
  AlgebraicNumber mag = negative ? -c : c;
  std::string coef;
  if (mono.empty()) coef = mag.is_atomic() ? mag.to_string() : "(" + mag.to_string() + ")";
  else if (!mag.is_one()) coef = (mag.is_atomic() ? mag.to_string() : "(" + mag.to_string() + ")") + "*";
  std::string term = coef + mono;
  if (out.empty()) out = negative ? "-" + term : term;
  else out += (negative ? " - " : " + ") + term;
}

inline std::string AlgebraicNumber::to_string() const {
  if (!level_) return ltrop::to_string(q_);
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    std::string mono = k == 0 ? "" : (k == 1 ? level_->name : level_->name + "^" + std::to_string(k));
    append_term(out, c_[k], mono);
  }
  return out;
}

inline std::string to_string(const AlgebraicNumber& x) { return x.to_string(); }

// Append-only handle on a tower Q = L0 < L1 < ... < Lh. Adjunction replaces
// the top; previously created values remain valid.
class NumberField {
 public:
  NumberField() = default;
  explicit NumberField(LevelPtr top) : top_(std::move(top)) {}

  const LevelPtr& top() const { return top_; }
  int height() const { return height_of(top_); }
  std::size_t absolute_degree() const { return ltrop::absolute_degree(top_); }

  // Adjoins a root of `minpoly` (monic, coefficients in the current top,
  // assumed irreducible there) and returns the new generator.
  AlgebraicNumber adjoin(const UPoly<AlgebraicNumber>& minpoly, std::string name = {}) {
    if (minpoly.degree() < 1) throw UsageError("cannot adjoin a root of a constant polynomial");
    auto level = std::make_shared<FieldLevel>();
    level->parent = top_;
    level->height = height() + 1;
    level->name = name.empty() ? "a" + std::to_string(level->height) : std::move(name);
    auto monic = minpoly.monic();
    for (const auto& c : monic.coeffs())
      if (!is_ancestor_or_self(c.level(), top_)) throw UsageError("minimal polynomial has coefficients outside the field");
    level->minpoly = monic.coeffs();
    top_ = level;
    return AlgebraicNumber::generator(top_);
  }

  std::vector<LevelPtr> levels() const {
    std::vector<LevelPtr> out;
    for (LevelPtr l = top_; l; l = l->parent) out.insert(out.begin(), l);
    return out;
  }

  std::optional<AlgebraicNumber> generator_named(const std::string& name) const {
    for (LevelPtr l = top_; l; l = l->parent)
      if (l->name == name) return AlgebraicNumber::generator(l);
    return std::nullopt;
  }

  // "a1: a1^2 - 2; a2: ..." from the bottom up; "Q" for the rationals.
  std::string describe() const;

 private:
  LevelPtr top_;
};

inline std::string minpoly_string(const FieldLevel& level) {
  std::string out;
  for (std::size_t k = level.minpoly.size(); k-- > 0;) {
    std::string mono = k == 0 ? "" : (k == 1 ? level.name : level.name + "^" + std::to_string(k));
    append_term(out, level.minpoly[k], mono);
  }
  return out;
}

inline std::string NumberField::describe() const {
  if (!top_) return "Q";
  std::string out;
  for (const auto& l : levels()) {
    if (!out.empty()) out += "; ";
    out += l->name + ": " + minpoly_string(*l);
  }
  return out;
}

}  // namespace ltrop
