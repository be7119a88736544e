#pragma once

// Exact linear programming (dense two-phase simplex, Bland's rule) and
// rational polyhedral cones {w : E w = 0, A w >= 0}.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ltrop/errors.hpp"
#include "ltrop/scalars.hpp"

namespace ltrop {

using QVec = std::vector<Rational>;
using ZRow = std::vector<Integer>;

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  QVec x;
  Rational value;
};

namespace lp_detail {

// Tableau over basic/nonbasic index sets, CLRS layout: constraints
// x_B = b - A_N x_N, objective v + c_N x_N.
struct Tableau {
  std::size_t m, n;  // constraints, total variables
  std::vector<QVec> A;  // m x n coefficients of the nonbasic part (full width)
  QVec b, c;
  Rational v;
  std::vector<std::size_t> basic, nonbasic;

  void pivot(std::size_t row, std::size_t col_var) {
    // col_var is an index into nonbasic
    std::size_t e = nonbasic[col_var];
    std::size_t l = basic[row];
    Rational piv = A[row][e];
    b[row] /= piv;
    for (std::size_t j = 0; j < n; ++j)
      if (j != e) A[row][j] /= piv;
    A[row][l] = Rational(1) / piv;
    A[row][e] = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || A[i][e] == 0) continue;
      Rational f = A[i][e];
      b[i] -= f * b[row];
      for (std::size_t j = 0; j < n; ++j)
        if (j != e && A[row][j] != 0) A[i][j] -= f * A[row][j];
      A[i][l] = -f * A[row][l];
      A[i][e] = 0;
    }
    Rational ce = c[e];
    v += ce * b[row];
    for (std::size_t j = 0; j < n; ++j)
      if (j != e && A[row][j] != 0) c[j] -= ce * A[row][j];
    c[l] = -ce * A[row][l];
    c[e] = 0;
    basic[row] = e;
    nonbasic[col_var] = l;
  }

  // Bland's rule; returns false when unbounded.
  bool optimize() {
    for (;;) {
      std::optional<std::size_t> enter;
      std::size_t best_var = n;
      for (std::size_t k = 0; k < nonbasic.size(); ++k)
        if (c[nonbasic[k]] > 0 && nonbasic[k] < best_var) {
          best_var = nonbasic[k];
          enter = k;
        }
      if (!enter) return true;
      std::size_t e = nonbasic[*enter];
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (A[i][e] <= 0) continue;
        Rational ratio = b[i] / A[i][e];
        if (!leave || ratio < best || (ratio == best && basic[i] < basic[*leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }
};

}  // namespace lp_detail

// maximize c.x subject to A x <= b, x >= 0.
inline LpResult lp_maximize(const std::vector<QVec>& A, const QVec& b, const QVec& c) {
  using lp_detail::Tableau;
  const std::size_t m = A.size(), nv = c.size();
  // Variables: 0..nv-1 original, nv..nv+m-1 slacks, nv+m auxiliary x0.
  Tableau t;
  t.m = m;
  t.n = nv + m + 1;
  const std::size_t aux = nv + m;
  t.A.assign(m, QVec(t.n));
  t.b = b;
  t.c.assign(t.n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) t.A[i][j] = A[i][j];
    t.A[i][aux] = -1;
    t.basic.push_back(nv + i);
  }
  for (std::size_t j = 0; j < nv; ++j) t.nonbasic.push_back(j);
  t.nonbasic.push_back(aux);

  std::size_t min_row = 0;
  for (std::size_t i = 1; i < m; ++i)
    if (b[i] < b[min_row]) min_row = i;
  if (m > 0 && b[min_row] < 0) {
    // Phase one: maximize -x0.
    t.c[aux] = -1;
    t.v = 0;
    t.pivot(min_row, nv);  // aux is the last nonbasic entry
    t.optimize();
    if (t.v != 0) return {LpStatus::Infeasible, {}, 0};
    // Drive x0 out of the basis if it stayed there at level zero.
    for (std::size_t i = 0; i < m; ++i)
      if (t.basic[i] == aux) {
        for (std::size_t k = 0; k < t.nonbasic.size(); ++k)
          if (t.A[i][t.nonbasic[k]] != 0) {
            t.pivot(i, k);
            break;
          }
        break;
      }
  }
  // Remove x0 from play by zeroing its column.
  for (auto& row : t.A) row[aux] = 0;
  // Rebuild the objective in terms of the nonbasic variables.
  t.c.assign(t.n, Rational(0));
  t.v = 0;
  for (std::size_t j = 0; j < nv; ++j) {
    if (c[j] == 0) continue;
    auto it = std::find(t.basic.begin(), t.basic.end(), j);
    if (it == t.basic.end()) {
      t.c[j] += c[j];
    } else {
      std::size_t i = static_cast<std::size_t>(it - t.basic.begin());
      t.v += c[j] * t.b[i];
      for (std::size_t k : t.nonbasic)
        if (k != aux) t.c[k] -= c[j] * t.A[i][k];
    }
  }
  t.c[aux] = 0;
  if (!t.optimize()) return {LpStatus::Unbounded, {}, 0};
  LpResult r;
  r.status = LpStatus::Optimal;
  r.x.assign(nv, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (t.basic[i] < nv) r.x[t.basic[i]] = t.b[i];
  r.value = 0;
  for (std::size_t j = 0; j < nv; ++j) r.value += c[j] * r.x[j];
  return r;
}

// ---------------------------------------------------------------------------
// Cones

inline Rational dot(const ZRow& a, const QVec& w) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * w[i];
  return s;
}

// Divides by the content; for equalities also makes the first nonzero entry
// positive.
inline ZRow primitive_row(ZRow r, bool is_equality) {
  Integer g = 0;
  for (const auto& v : r) g = gcd(g, v);
  if (g > 1)
    for (auto& v : r) v /= g;
  if (is_equality)
    for (const auto& v : r)
      if (v != 0) {
        if (v < 0)
          for (auto& u : r) u = -u;
        break;
      }
  return r;
}

inline ZRow integer_row(const QVec& q) {
  Integer den = 1;
  for (const auto& v : q) den = lcm(den, Integer(v.get_den()));
  ZRow r;
  for (const auto& v : q) r.push_back(Integer(v.get_num() * (den / v.get_den())));
  return r;
}

// {w : eq.w = 0, ineq.w >= 0}, optionally intersected with the open
// positive orthant.
struct Cone {
  std::size_t n = 0;
  std::vector<ZRow> eq;
  std::vector<ZRow> ineq;
  bool positive = true;
};

struct ConeAnalysis {
  bool empty = true;
  std::size_t dim = 0;
  QVec relint;                   // strictly inside every non-implicit inequality
  std::vector<bool> implicit;    // per ineq row
};

namespace cone_detail {

// Constraints for x = w - L (L = 1 in the open orthant, 0 otherwise) with
// extra rows; returns LP rows.
inline void build(const Cone& c, const Rational& L, std::vector<QVec>& A, QVec& b) {
  auto add_le = [&](const ZRow& row, const Rational& rhs) {
    QVec a(c.n);
    for (std::size_t i = 0; i < c.n; ++i) a[i] = Rational(row[i]);
    A.push_back(a);
    b.push_back(rhs);
  };
  auto shift = [&](const ZRow& row) {
    Rational s = 0;
    for (const auto& v : row) s += Rational(v) * L;
    return s;
  };
  for (const auto& row : c.eq) {
    Rational s = shift(row);
    add_le(row, -s);
    ZRow neg = row;
    for (auto& v : neg) v = -v;
    add_le(neg, s);
  }
  for (const auto& row : c.ineq) {
    ZRow neg = row;
    for (auto& v : neg) v = -v;
    add_le(neg, shift(row));
  }
}

inline std::size_t rank(std::vector<QVec> rows, std::size_t n) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][col] != 0) {
        Rational f = rows[i][col] / rows[r][col];
        for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[r][j];
      }
    ++r;
  }
  return r;
}

}  // namespace cone_detail

// Feasibility, implicit equalities, dimension and a relative-interior point.
inline ConeAnalysis analyze(const Cone& c) {
  ConeAnalysis out;
  Rational L = c.positive ? 1 : 0;
  std::vector<QVec> A;
  QVec b;
  cone_detail::build(c, L, A, b);
  QVec zero(c.n, Rational(0));
  auto base = lp_maximize(A, b, zero);
  if (base.status != LpStatus::Optimal) return out;
  out.empty = false;
  QVec sum(c.n);
  for (std::size_t i = 0; i < c.n; ++i) sum[i] = base.x[i] + L;
  out.implicit.assign(c.ineq.size(), true);
  for (std::size_t k = 0; k < c.ineq.size(); ++k) {
    if (!out.implicit[k]) continue;
    // maximize row.w subject to the cone and row.w <= row.w0 + 1, where w0
    // is the base point, so the extra row never cuts the region empty
    auto A2 = A;
    auto b2 = b;
    QVec obj(c.n);
    Rational shift = 0;
    for (std::size_t i = 0; i < c.n; ++i) {
      obj[i] = Rational(c.ineq[k][i]);
      shift += Rational(c.ineq[k][i]) * L;
    }
    A2.push_back(obj);
    b2.push_back(dot(c.ineq[k], base.x) + 1);
    auto r = lp_maximize(A2, b2, obj);
    if (r.status != LpStatus::Optimal) throw InternalError("cone LP failed");
    if (r.value + shift > 0) {
      out.implicit[k] = false;
      QVec w(c.n);
      for (std::size_t i = 0; i < c.n; ++i) w[i] = r.x[i] + L;
      for (std::size_t j = k + 1; j < c.ineq.size(); ++j)
        if (dot(c.ineq[j], w) > 0) out.implicit[j] = false;
      for (std::size_t i = 0; i < c.n; ++i) sum[i] += w[i];
    }
  }
  out.relint = sum;
  std::vector<QVec> rows;
  for (const auto& e : c.eq) rows.push_back(QVec(e.begin(), e.end()));
  for (std::size_t k = 0; k < c.ineq.size(); ++k)
    if (out.implicit[k]) rows.push_back(QVec(c.ineq[k].begin(), c.ineq[k].end()));
  out.dim = c.n - cone_detail::rank(rows, c.n);
  return out;
}

// Primitive integer point of the relative interior.
inline std::optional<ZRow> interior_point(const Cone& c) {
  auto a = analyze(c);
  if (a.empty) return std::nullopt;
  return primitive_row(integer_row(a.relint), false);
}

inline bool contains(const Cone& c, const QVec& w, bool strict_interior = false) {
  for (const auto& e : c.eq)
    if (dot(e, w) != 0) return false;
  if (c.positive)
    for (const auto& v : w)
      if (v <= 0) return false;
  if (!strict_interior) {
    for (const auto& a : c.ineq)
      if (dot(a, w) < 0) return false;
    return true;
  }
  auto an = analyze(c);
  for (std::size_t k = 0; k < c.ineq.size(); ++k) {
    Rational v = dot(c.ineq[k], w);
    if (an.implicit[k] ? v != 0 : v <= 0) return false;
  }
  return true;
}

// Canonical description of the closed cone: a reduced row-echelon basis of
// its equations and the primitive facet normals reduced modulo them.
struct CanonicalCone {
  std::size_t dim = 0;
  std::vector<ZRow> eq;
  std::vector<ZRow> facets;
  friend bool operator==(const CanonicalCone&, const CanonicalCone&) = default;
  std::string key() const {
    std::string s = std::to_string(dim) + "|";
    for (const auto& r : eq) {
      for (const auto& v : r) s += v.get_str() + ",";
      s += ";";
    }
    s += "|";
    for (const auto& r : facets) {
      for (const auto& v : r) s += v.get_str() + ",";
      s += ";";
    }
    return s;
  }
};

inline CanonicalCone canonical(const Cone& input) {
  Cone c = input;
  c.positive = false;
  if (input.positive)
    for (std::size_t i = 0; i < c.n; ++i) {
      ZRow e(c.n, 0);
      e[i] = 1;
      c.ineq.push_back(e);
    }
  auto an = analyze(c);
  CanonicalCone out;
  if (an.empty) throw InternalError("canonical form of an empty cone");
  out.dim = an.dim;
  // Row-reduce the equation space.
  std::vector<QVec> rows;
  for (const auto& e : c.eq) rows.push_back(QVec(e.begin(), e.end()));
  for (std::size_t k = 0; k < c.ineq.size(); ++k)
    if (an.implicit[k]) rows.push_back(QVec(c.ineq[k].begin(), c.ineq[k].end()));
  std::vector<QVec> rref;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < c.n; ++col) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i][col] != 0) {
        pick = i;
        break;
      }
    if (!pick) continue;
    QVec row = rows[*pick];
    rows.erase(rows.begin() + static_cast<long>(*pick));
    Rational inv = Rational(1) / row[col];
    for (auto& v : row) v *= inv;
    for (auto& other : rows)
      if (other[col] != 0) {
        Rational f = other[col];
        for (std::size_t j = 0; j < c.n; ++j) other[j] -= f * row[j];
      }
    for (auto& other : rref)
      if (other[col] != 0) {
        Rational f = other[col];
        for (std::size_t j = 0; j < c.n; ++j) other[j] -= f * row[j];
      }
    rref.push_back(row);
    pivots.push_back(col);
  }
  for (const auto& r : rref) out.eq.push_back(primitive_row(integer_row(r), true));
  auto reduce_mod = [&](const ZRow& a) {
    QVec v(a.begin(), a.end());
    for (std::size_t k = 0; k < rref.size(); ++k) {
      Rational f = v[pivots[k]];
      if (f != 0)
        for (std::size_t j = 0; j < c.n; ++j) v[j] -= f * rref[k][j];
    }
    return v;
  };
  std::vector<ZRow> facets;
  for (std::size_t k = 0; k < c.ineq.size(); ++k) {
    if (an.implicit[k]) continue;
    QVec red = reduce_mod(c.ineq[k]);
    bool zero = std::all_of(red.begin(), red.end(), [](const Rational& v) { return v == 0; });
    if (zero) continue;
    ZRow normal = primitive_row(integer_row(red), false);
    if (std::find(facets.begin(), facets.end(), normal) != facets.end()) continue;
    Cone face = c;
    face.eq.push_back(c.ineq[k]);
    auto fa = analyze(face);
    if (fa.empty || fa.dim + 1 != an.dim) continue;
    facets.push_back(normal);
  }
  std::sort(facets.begin(), facets.end());
  out.facets = std::move(facets);
  return out;
}

inline bool same_cone(const Cone& a, const Cone& b) { return canonical(a) == canonical(b); }

// Facets of a cone inside the open orthant, each given as the cone
// obtained by turning one inequality into an equation.
inline std::vector<Cone> facets(const Cone& c) {
  auto an = analyze(c);
  std::vector<Cone> out;
  std::vector<std::string> seen;
  if (an.empty) return out;
  for (std::size_t k = 0; k < c.ineq.size(); ++k) {
    if (an.implicit[k]) continue;
    Cone face = c;
    face.eq.push_back(c.ineq[k]);
    auto fa = analyze(face);
    if (fa.empty || fa.dim + 1 != an.dim) continue;
    auto key = canonical(face).key();
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    out.push_back(face);
  }
  return out;
}

inline std::string row_json(const std::vector<ZRow>& rows) {
  std::string s = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < rows[i].size(); ++j) s += (j ? "," : "") + rows[i][j].get_str();
    s += "]";
  }
  return s + "]";
}

}  // namespace ltrop
