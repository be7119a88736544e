#pragma once

// Sparse multivariate polynomials over a number-field tower, weight-refined
// monomial orders, w-orders, initial forms and w-homogenization.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ltrop/errors.hpp"
#include "ltrop/number_field.hpp"
#include "ltrop/scalars.hpp"

namespace ltrop {

using Exponent = std::vector<std::uint32_t>;

inline long total_degree(const Exponent& e) {
  long s = 0;
  for (auto v : e) s += v;
  return s;
}

inline bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// a - b, assuming b divides a.
inline Exponent operator-(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline ValueScalar dot(const std::vector<ValueScalar>& w, const Exponent& e) {
  if (w.size() != e.size()) throw UsageError("weight has length " + std::to_string(w.size()) + ", expected " + std::to_string(e.size()));
  ValueScalar s;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i]) s += w[i] * Rational(static_cast<long>(e[i]));
  return s;
}

inline bool coeff_is_zero(const AlgebraicNumber& c) { return is_zero(c); }

class Polynomial {
 public:
  using Terms = std::map<Exponent, AlgebraicNumber>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : n_(nvars) {}
  Polynomial(std::size_t nvars, const AlgebraicNumber& c) : n_(nvars) {
    if (!coeff_is_zero(c)) terms_.emplace(Exponent(nvars, 0), c);
  }
  static Polynomial monomial(const Exponent& e, const AlgebraicNumber& c = AlgebraicNumber(1)) {
    Polynomial p(e.size());
    if (!coeff_is_zero(c)) p.terms_.emplace(e, c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    Exponent e(nvars, 0);
    e[i] = 1;
    return monomial(e);
  }

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && ltrop::total_degree(terms_.begin()->first) == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  AlgebraicNumber coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? AlgebraicNumber(0) : it->second;
  }
  AlgebraicNumber constant_term() const { return coeff(Exponent(n_, 0)); }
  long total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, ltrop::total_degree(e));
    return d;
  }
  long degree_in(std::size_t i) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[i]));
    return d;
  }
  bool involves(std::size_t i) const {
    for (const auto& [e, c] : terms_)
      if (e[i]) return true;
    return false;
  }

  void add_term(const Exponent& e, const AlgebraicNumber& c) {
    if (is_zero_value(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_value(it->second)) terms_.erase(it);
    }
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    r.n_ = std::max(a.n_, b.n_);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  Polynomial operator-() const {
    Polynomial r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(std::max(a.n_, b.n_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend Polynomial operator*(const AlgebraicNumber& s, const Polynomial& a) {
    Polynomial r(a.n_);
    if (is_zero_value(s)) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
    return r;
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
  Polynomial mul_monomial(const Exponent& m, const AlgebraicNumber& c) const {
    Polynomial r(n_);
    for (const auto& [e, a] : terms_) r.terms_.emplace(e + m, a * c);
    return r;
  }
  Polynomial pow(unsigned k) const {
    Polynomial r(n_, AlgebraicNumber(1)), base = *this;
    while (k) {
      if (k & 1) r = r * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  // Highest level of the tower touched by any coefficient.
  LevelPtr coefficient_level() const {
    LevelPtr l;
    for (const auto& [e, c] : terms_) l = AlgebraicNumber::join(l, c.level());
    return l;
  }

  // Substitutes values for some variables (others kept), staying in n vars.
  Polynomial substitute(const std::vector<std::optional<AlgebraicNumber>>& values) const {
    Polynomial r(n_);
    for (const auto& [e, c] : terms_) {
      AlgebraicNumber coef = c;
      Exponent rest = e;
      for (std::size_t i = 0; i < n_; ++i)
        if (values[i] && e[i]) {
          coef = coef * values[i]->pow(e[i]);
          rest[i] = 0;
        }
      r.add_term(rest, coef);
    }
    return r;
  }
  AlgebraicNumber evaluate(const std::vector<AlgebraicNumber>& point) const {
    AlgebraicNumber acc;
    for (const auto& [e, c] : terms_) {
      AlgebraicNumber t = c;
      for (std::size_t i = 0; i < n_; ++i)
        if (e[i]) t = t * point[i].pow(e[i]);
      acc += t;
    }
    return acc;
  }
  // Relabels variables: variable i goes to position map[i] of an m-variable ring.
  Polynomial embed(std::size_t m, const std::vector<std::size_t>& map) const {
    Polynomial r(m);
    for (const auto& [e, c] : terms_) {
      Exponent f(m, 0);
      for (std::size_t i = 0; i < n_; ++i) f[map[i]] += e[i];
      r.add_term(f, c);
    }
    return r;
  }
  Polynomial monic_by(const AlgebraicNumber& lead) const { return lead.inverse() * *this; }

 private:
  static bool is_zero_value(const AlgebraicNumber& c) { return coeff_is_zero(c); }
  std::size_t n_ = 0;
  Terms terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

// ---------------------------------------------------------------------------
// Monomial orders

enum class OrderMode { Global, Local, Lex };

// Weight-refined order. Global: larger <w,M> leads, then larger total degree,
// then reverse lexicographic. Local: smaller <w,M> leads, then smaller total
// degree, then reverse lexicographic; 1 is the largest monomial. Lex compares
// exponents from the last variable down and ignores the weight.
class OrderDescriptor {
 public:
  OrderDescriptor() = default;
  OrderDescriptor(std::vector<ValueScalar> weight, OrderMode mode) : weight_(std::move(weight)), mode_(mode) {
    if (mode_ == OrderMode::Local)
      for (const auto& w : weight_)
        if (w.sign() <= 0) throw UsageError("local orders need strictly positive weights");
    if (mode_ == OrderMode::Global)
      for (const auto& w : weight_)
        if (w.sign() < 0) throw UsageError("global orders need nonnegative weights");
    scale();
  }
  static OrderDescriptor global(std::size_t n) { return OrderDescriptor(std::vector<ValueScalar>(n, ValueScalar(0)), OrderMode::Global); }
  static OrderDescriptor local(std::size_t n) { return OrderDescriptor(std::vector<ValueScalar>(n, ValueScalar(1)), OrderMode::Local); }
  static OrderDescriptor lex(std::size_t n) { return OrderDescriptor(std::vector<ValueScalar>(n, ValueScalar(0)), OrderMode::Lex); }
  // Global order eliminating the variables flagged true.
  static OrderDescriptor elimination(const std::vector<bool>& eliminate) {
    std::vector<ValueScalar> w;
    for (bool b : eliminate) w.emplace_back(b ? 1L : 0L);
    return OrderDescriptor(std::move(w), OrderMode::Global);
  }

  const std::vector<ValueScalar>& weight() const { return weight_; }
  OrderMode mode() const { return mode_; }
  bool is_local() const { return mode_ == OrderMode::Local; }
  std::size_t nvars() const { return weight_.size(); }

  // Cached comparison key of a monomial.
  struct Key {
    __int128 a = 0;
    __int128 b = 0;
    long deg = 0;
  };
  Key key(const Exponent& e) const {
    Key k;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      k.a += static_cast<__int128>(wa_[i]) * e[i];
      k.b += static_cast<__int128>(wb_[i]) * e[i];
      k.deg += e[i];
    }
    return k;
  }

  // Positive when m1 leads m2.
  int compare(const Exponent& m1, const Key& k1, const Exponent& m2, const Key& k2) const {
    if (mode_ != OrderMode::Lex) {
      int s = weight_sign(k1.a - k2.a, k1.b - k2.b);
      if (s != 0) return mode_ == OrderMode::Local ? -s : s;
      if (k1.deg != k2.deg) return (k1.deg > k2.deg) == (mode_ == OrderMode::Global) ? 1 : -1;
      for (std::size_t i = m1.size(); i-- > 0;)
        if (m1[i] != m2[i]) return m1[i] < m2[i] ? 1 : -1;
      return 0;
    }
    for (std::size_t i = m1.size(); i-- > 0;)
      if (m1[i] != m2[i]) return m1[i] > m2[i] ? 1 : -1;
    return 0;
  }
  int compare(const Exponent& m1, const Exponent& m2) const { return compare(m1, key(m1), m2, key(m2)); }

  std::string describe() const {
    std::string out = mode_ == OrderMode::Local ? "local" : (mode_ == OrderMode::Global ? "global" : "lex");
    if (mode_ != OrderMode::Lex) {
      out += " w=(";
      for (std::size_t i = 0; i < weight_.size(); ++i) out += (i ? "," : "") + weight_[i].to_string();
      out += ")";
    }
    return out;
  }

 private:
  void scale() {
    std::int64_t d = 1;
    Integer den = 1;
    for (const auto& w : weight_) {
      if (!w.is_rational()) d = w.d();
      den = lcm(den, Integer(w.rational_part().get_den()));
      den = lcm(den, Integer(w.sqrt_part().get_den()));
    }
    d_ = d;
    for (const auto& w : weight_) {
      Rational a = w.rational_part() * den, b = w.sqrt_part() * den;
      if (!a.get_num().fits_slong_p() || !b.get_num().fits_slong_p() || abs(a.get_num()) > (1L << 40) ||
          abs(b.get_num()) > (1L << 40))
        throw CapabilityError("weight entries too large for the monomial order");
      wa_.push_back(a.get_num().get_si());
      wb_.push_back(b.get_num().get_si());
    }
  }
  int weight_sign(__int128 p, __int128 q) const {
    int sp = p > 0 ? 1 : (p < 0 ? -1 : 0), sq = q > 0 ? 1 : (q < 0 ? -1 : 0);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    auto to_mpz = [](__int128 v) {
      bool neg = v < 0;
      unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
      Integer z = static_cast<unsigned long>(u >> 64);
      z <<= 64;
      z += static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL);
      return neg ? Integer(-z) : z;
    };
    Integer pp = to_mpz(p), qq = to_mpz(q);
    int c = cmp(Integer(pp * pp), Integer(qq * qq * d_));
    return c > 0 ? sp : (c < 0 ? sq : 0);
  }

  std::vector<ValueScalar> weight_;
  OrderMode mode_ = OrderMode::Global;
  std::vector<std::int64_t> wa_, wb_;
  std::int64_t d_ = 1;
};

inline std::strong_ordering compare_monomials(const Exponent& m1, const Exponent& m2, const OrderDescriptor& ord) {
  if (m1.size() != m2.size() || m1.size() != ord.nvars()) throw UsageError("compare_monomials: dimension mismatch");
  int c = ord.compare(m1, m2);
  return c > 0 ? std::strong_ordering::greater : (c < 0 ? std::strong_ordering::less : std::strong_ordering::equal);
}

// Leading exponent of a nonzero polynomial.
inline const Exponent& leading_exponent(const Polynomial& f, const OrderDescriptor& ord) {
  if (f.is_zero()) throw UsageError("leading term of the zero polynomial");
  auto best = f.terms().begin();
  auto kb = ord.key(best->first);
  for (auto it = std::next(best); it != f.terms().end(); ++it) {
    auto k = ord.key(it->first);
    if (ord.compare(it->first, k, best->first, kb) > 0) {
      best = it;
      kb = k;
    }
  }
  return best->first;
}

// ---------------------------------------------------------------------------
// w-order and initial forms (trivially valued coefficients)

inline ExtValue w_order(const Polynomial& f, const std::vector<ValueScalar>& w) {
  if (w.size() != f.nvars()) throw UsageError("weight has length " + std::to_string(w.size()) + ", expected " + std::to_string(f.nvars()));
  if (f.is_zero()) return ExtValue::infinity();
  std::optional<ValueScalar> best;
  for (const auto& [e, c] : f.terms()) {
    ValueScalar v = dot(w, e);
    if (!best || v < *best) best = v;
  }
  return ExtValue(*best);
}

inline Polynomial initial_form(const Polynomial& f, const std::vector<ValueScalar>& w) {
  ExtValue m = w_order(f, w);
  Polynomial r(f.nvars());
  if (m.is_infinite()) return r;
  for (const auto& [e, c] : f.terms())
    if (dot(w, e) == m.value()) r.add_term(e, c);
  return r;
}

inline bool is_w_homogeneous(const Polynomial& f, const std::vector<ValueScalar>& w) {
  return initial_form(f, w) == f;
}

// Homogenizes f with respect to the multigrading given by the n x r matrix
// W (row i = multidegree of x_i) using the r variables in `hom_vars`, whose
// rows must form an invertible block. Each term is multiplied by the unique
// monomial in hom_vars that lifts it to the componentwise highest level;
// substituting 1 for hom_vars recovers f.
inline Polynomial homogenize(const Polynomial& f, const std::vector<std::vector<Rational>>& W,
                             const std::vector<std::size_t>& hom_vars) {
  const std::size_t n = f.nvars(), r = hom_vars.size();
  if (f.is_zero()) throw UsageError("cannot homogenize the zero polynomial");
  if (W.size() != n) throw UsageError("grading matrix has wrong row count");
  // Invert the r x r block by Gauss-Jordan.
  std::vector<std::vector<Rational>> a(r, std::vector<Rational>(2 * r));
  for (std::size_t i = 0; i < r; ++i) {
    if (W[hom_vars[i]].size() != r) throw UsageError("grading matrix has wrong column count");
    for (std::size_t j = 0; j < r; ++j) a[i][j] = W[hom_vars[i]][j];
    a[i][r + i] = 1;
  }
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = c;
    while (p < r && a[p][c] == 0) ++p;
    if (p == r) throw UsageError("homogenizing variables do not span the grading");
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (std::size_t i = 0; i < r; ++i)
      if (i != c && a[i][c] != 0) {
        Rational f2 = a[i][c];
        for (std::size_t j = 0; j < 2 * r; ++j) a[i][j] -= f2 * a[c][j];
      }
  }
  // rho(m) = deg(m) * W_S^{-1}: the hom_vars exponents that would produce deg(m).
  auto rho = [&](const Exponent& e) {
    std::vector<Rational> deg(r, Rational(0)), out(r, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      if (e[i])
        for (std::size_t j = 0; j < r; ++j) deg[j] += W[i][j] * static_cast<long>(e[i]);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) out[j] += deg[k] * a[k][r + j];
    return out;
  };
  std::vector<std::pair<Exponent, std::vector<Rational>>> rows;
  std::vector<Rational> top;
  for (const auto& [e, c] : f.terms()) {
    Exponent stripped = e;
    for (auto v : hom_vars) stripped[v] = 0;
    auto rh = rho(stripped);
    if (top.empty()) top = rh;
    for (std::size_t j = 0; j < r; ++j) top[j] = std::max(top[j], rh[j]);
    rows.emplace_back(e, std::move(rh));
  }
  Polynomial out(n);
  for (const auto& [e, rh] : rows) {
    Exponent stripped = e;
    for (auto v : hom_vars) stripped[v] = 0;
    for (std::size_t j = 0; j < r; ++j) {
      Rational gap = top[j] - rh[j];
      if (gap.get_den() != 1) throw UsageError("no nonnegative integral balancing exists for this weight");
      stripped[hom_vars[j]] = static_cast<std::uint32_t>(gap.get_num().get_ui());
    }
    out.add_term(stripped, f.coeff(e));
  }
  for (const auto& [e, c] : f.terms()) {
    bool touches = false;
    for (auto v : hom_vars) touches = touches || e[v];
    if (touches) throw UsageError("homogenizing variables must not occur in the input");
  }
  return out;
}

// Single-grading form: positive integer weights w' and one homogenizing
// variable. With no homogenizing variable the lowest w'-level is returned.
inline Polynomial homogenize_w(const Polynomial& f, const std::vector<Integer>& w_prime, std::optional<std::size_t> hom_var) {
  if (w_prime.size() != f.nvars()) throw UsageError("weight has wrong length");
  for (const auto& v : w_prime)
    if (v <= 0) throw UsageError("homogenizing weights must be positive integers");
  if (f.is_zero()) throw UsageError("cannot homogenize the zero polynomial");
  if (!hom_var) {
    std::vector<ValueScalar> w;
    for (const auto& v : w_prime) w.emplace_back(Rational(v));
    return initial_form(f, w);
  }
  std::vector<std::vector<Rational>> W;
  for (const auto& v : w_prime) W.push_back({Rational(v)});
  return homogenize(f, W, {*hom_var});
}

// ---------------------------------------------------------------------------
// Text form

struct Ring {
  std::vector<std::string> vars;
  std::size_t size() const { return vars.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return i;
    return std::nullopt;
  }
};

inline bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

// Parses "x,y,z" (whitespace tolerated) into a ring.
inline Ring parse_vars(const std::string& text) {
  Ring ring;
  std::string cur;
  auto flush = [&] {
    std::string name(detail::trim(cur));
    if (!valid_identifier(name)) throw UsageError("bad variable name '" + name + "'");
    if (ring.index_of(name)) throw UsageError("duplicate variable '" + name + "'");
    ring.vars.push_back(name);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') flush();
    else cur.push_back(c);
  }
  flush();
  return ring;
}

inline std::string monomial_string(const Exponent& e, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!out.empty()) out += "*";
    out += ring.vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

// Terms are printed by descending total degree, then lexicographically
// descending exponents.
inline std::string to_string(const Polynomial& f, const Ring& ring) {
  if (f.is_zero()) return "0";
  std::vector<const std::pair<const Exponent, AlgebraicNumber>*> ts;
  for (const auto& t : f.terms()) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
    long da = total_degree(a->first), db = total_degree(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::string out;
  for (auto* t : ts) append_term(out, t->second, monomial_string(t->first, ring));
  return out;
}

namespace parse_detail {

// Values during parsing: polynomials in the ring variables.
class Parser {
 public:
  Parser(const std::string& text, const Ring& ring, const NumberField* field)
      : s_(text), ring_(ring), field_(field) {}

  Polynomial parse() {
    if (s_.size() > 1000000) throw UsageError("polynomial text too long");
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw UsageError("cannot parse polynomial '" + s_ + "' at position " + std::to_string(pos_) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Polynomial expr() {
    if (++depth_ > 200) fail("nesting too deep");
    skip();
    Polynomial acc(ring_.size());
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    --depth_;
    return acc;
  }
  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      if (accept('*')) acc *= power();
      else if (accept('/')) {
        Polynomial d = power();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        acc = d.constant_term().inverse() * acc;
      } else break;
    }
    return acc;
  }
  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      if (pos_ - start > 4) fail("exponent too large");
      unsigned k = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
      if (k > 1000) fail("exponent too large");
      if (base.size() > 1 && k > 64) fail("exponent too large for a compound base");
      return base.pow(k);
    }
    return base;
  }
  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial(ring_.size(), AlgebraicNumber(Rational(Integer(s_.substr(start, pos_ - start), 10))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto var = ring_.index_of(name);
      std::optional<AlgebraicNumber> gen = field_ ? field_->generator_named(name) : std::nullopt;
      if (var && gen) fail("name '" + name + "' is both a variable and a field generator");
      if (var) return Polynomial::variable(ring_.size(), *var);
      if (gen) return Polynomial(ring_.size(), *gen);
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  const Ring& ring_;
  const NumberField* field_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace parse_detail

inline Polynomial parse_polynomial(const std::string& text, const Ring& ring, const NumberField* field = nullptr) {
  return parse_detail::Parser(text, ring, field).parse();
}

}  // namespace ltrop
