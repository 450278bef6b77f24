#include "glsm/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace glsm {

// --------------------------- rational string I/O ----------------------------

Rational rational_from_string(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw ParseError("empty rational literal");
  auto bad = [&]() { throw ParseError("bad rational literal: '" + s + "'"); };
  std::size_t slashes = std::count(t.begin(), t.end(), '/');
  if (slashes > 1) bad();
  auto check_int = [&](const std::string& p) {
    if (p.empty()) bad();
    std::size_t k = (p[0] == '+' || p[0] == '-') ? 1 : 0;
    if (k == p.size()) bad();
    for (; k < p.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(p[k]))) bad();
  };
  if (slashes == 1) {
    auto pos = t.find('/');
    std::string a = t.substr(0, pos), b = t.substr(pos + 1);
    check_int(a);
    check_int(b);
    Integer nb(b);
    if (nb == 0) bad();
    return Rational(Integer(a), nb);
  }
  auto dot = t.find('.');
  if (dot == std::string::npos) {
    check_int(t);
    return Rational(Integer(t));
  }
  std::string a = t.substr(0, dot), b = t.substr(dot + 1);
  bool neg = !a.empty() && a[0] == '-';
  if (!a.empty() && (a[0] == '+' || a[0] == '-')) a = a.substr(1);
  if (a.empty() && b.empty()) bad();
  for (char c : a + b)
    if (!std::isdigit(static_cast<unsigned char>(c))) bad();
  Integer whole = a.empty() ? Integer(0) : Integer(a);
  Integer frac = b.empty() ? Integer(0) : Integer(b);
  Integer scale = 1;
  for (std::size_t k = 0; k < b.size(); ++k) scale *= 10;
  Rational r = Rational(whole) + Rational(frac, scale);
  return neg ? -r : r;
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << num(r);
  if (den(r) != 1) os << "/" << den(r);
  return os.str();
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw Error(9, "exact_rational: non-finite input");
  if (x == 0.0) return Rational(0);
  int e = 0;
  double m = std::frexp(x, &e);  // x = m * 2^e, |m| in [0.5, 1)
  // 53 doublings make the mantissa integral.
  auto mant = static_cast<long long>(std::ldexp(m, 53));
  Rational r(mant);
  int shift = e - 53;
  Integer pow2 = Integer(1) << std::abs(shift);
  if (shift >= 0) return r * Rational(pow2);
  return r / Rational(pow2);
}

// ------------------------------- basic ops ----------------------------------

Rational pairing(const QVec& u, const QVec& v) {
  if (u.size() != v.size()) throw Error(9, "pairing: length mismatch");
  Rational s = 0;
  for (std::size_t a = 0; a < u.size(); ++a) s += u[a] * v[a];
  return s;
}

namespace {

// Gaussian elimination to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<QVec>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Rational inv = m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational det(const std::vector<QVec>& rows) {
  std::size_t n = rows.size();
  for (const auto& r : rows)
    if (r.size() != n) throw Error(9, "det: matrix not square");
  std::vector<QVec> m = rows;
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m[sel][c] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(m[sel], m[c]);
      d = -d;
    }
    d *= m[c][c];
    Rational inv = m[c][c];
    for (std::size_t j = c; j < n; ++j) m[c][j] /= inv;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

std::size_t rank(const std::vector<QVec>& rows) {
  std::vector<QVec> m = rows;
  return rref(m).size();
}

std::vector<QVec> dual_basis(const std::vector<QVec>& rows) {
  std::size_t k = rows.size();
  for (const auto& r : rows)
    if (r.size() != k) throw Error(9, "dual_basis: need a square system");
  // Augment [M | I] and reduce; right block becomes M^{-1}; its columns are
  // the dual vectors (M * dual_j = e_j).
  std::vector<QVec> m(k, QVec(2 * k, Rational(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = rows[i][j];
    m[i][k + i] = 1;
  }
  auto pivots = rref(m);
  if (pivots.size() != k || pivots.back() != k - 1) throw SingularBasis();
  std::vector<QVec> duals(k, QVec(k));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t a = 0; a < k; ++a) duals[j][a] = m[a][k + j];
  return duals;
}

GroupStructure det_index(const std::vector<QVec>& rows) {
  std::size_t k = rows.size();
  std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].size() != k) throw Error(9, "det_index: matrix not square");
    for (std::size_t j = 0; j < k; ++j) {
      if (!is_integer(rows[i][j])) throw Error(9, "det_index: entries must be integers");
      m[i][j] = num(rows[i][j]);
    }
  }
  if (det(rows) == 0) throw SingularBasis();
  // Integer normal form by elementary row/column operations.
  auto abs_i = [](const Integer& x) { return x < 0 ? Integer(-x) : x; };
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < k) {
    // Find the nonzero entry of minimal absolute value in the trailing block.
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < k; ++i)
      for (std::size_t j = t; j < k; ++j)
        if (m[i][j] != 0 && (!found || abs_i(m[i][j]) < abs_i(m[pi][pj]))) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;  // cannot happen for nonsingular input
    std::swap(m[pi], m[t]);
    for (std::size_t i = 0; i < k; ++i) std::swap(m[i][pj], m[i][t]);
    bool clean = true;
    for (std::size_t i = t + 1; i < k; ++i) {
      Integer q = m[i][t] / m[t][t];
      if (q != 0)
        for (std::size_t j = t; j < k; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < k; ++j) {
      Integer q = m[t][j] / m[t][t];
      if (q != 0)
        for (std::size_t i = t; i < k; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // re-select a smaller pivot
    diag.push_back(abs_i(m[t][t]));
    ++t;
  }
  // Enforce the divisibility chain d_1 | d_2 | ... by gcd/lcm swaps.
  for (std::size_t i = 0; i + 1 < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j)
      if (diag[j] % diag[i] != 0) {
        Integer g = boost::multiprecision::gcd(diag[i], diag[j]);
        Integer l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
  std::sort(diag.begin(), diag.end());
  GroupStructure gs;
  gs.order = 1;
  for (const auto& d : diag) {
    gs.order *= d;
    if (d > 1) gs.cyclic_factors.push_back(d);
  }
  return gs;
}

int sign_wedge(const std::vector<QVec>& numerator_basis,
               const std::vector<QVec>& denominator_basis) {
  Rational dd = det(denominator_basis);
  if (dd == 0) throw DivisionByZero();
  Rational dn = det(numerator_basis);
  if (dn == 0) return 0;
  return (dn > 0) == (dd > 0) ? 1 : -1;
}

std::optional<std::vector<Rational>> coords_in_span(const std::vector<QVec>& gens,
                                                    const QVec& target) {
  std::size_t k = gens.size();
  if (k == 0) {
    for (const auto& x : target)
      if (x != 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  std::size_t d = gens[0].size();
  if (rank(gens) != k) throw SingularBasis("coords_in_span: dependent generators");
  // Solve gens^T * a = target by eliminating the augmented (d x (k+1)) system.
  std::vector<QVec> m(d, QVec(k + 1));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t i = 0; i < k; ++i) m[a][i] = gens[i][a];
    m[a][k] = target[a];
  }
  auto pivots = rref(m);
  std::vector<Rational> coeff(k, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == k) return std::nullopt;  // inconsistent: pivot in rhs column
    coeff[pivots[r]] = m[r][k];
  }
  // Verify (also guards the free-variable-free property).
  for (std::size_t a = 0; a < d; ++a) {
    Rational s = 0;
    for (std::size_t i = 0; i < k; ++i) s += coeff[i] * gens[i][a];
    if (s != target[a]) return std::nullopt;
  }
  return coeff;
}

QVec solve_left(const std::vector<QVec>& rows, const QVec& rhs) {
  auto c = coords_in_span(rows, rhs);
  if (!c) throw SingularBasis("solve_left: inconsistent system");
  return *c;
}

std::vector<QVec> kernel_basis(const std::vector<QVec>& rows) {
  if (rows.empty()) return {};
  std::size_t d = rows[0].size();
  std::vector<QVec> m = rows;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(d, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t f = 0; f < d; ++f) {
    if (is_pivot[f]) continue;
    QVec v(d, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// ------------------------- Fourier-Motzkin feasibility ----------------------

namespace {

struct Ineq {
  QVec a;      // coefficients
  Rational b;  // a . x >= b
};

bool fm_recurse(std::vector<Ineq> sys, std::size_t nvars) {
  for (std::size_t v = nvars; v-- > 0;) {
    std::vector<Ineq> pos, neg, zero;
    for (auto& q : sys) {
      if (q.a[v] > 0)
        pos.push_back(std::move(q));
      else if (q.a[v] < 0)
        neg.push_back(std::move(q));
      else
        zero.push_back(std::move(q));
    }
    std::vector<Ineq> next = std::move(zero);
    for (const auto& p : pos)
      for (const auto& n : neg) {
        // Eliminate x_v between p (lower bound) and n (upper bound).
        Ineq c;
        c.a.assign(v, Rational(0));
        Rational pa = p.a[v], na = -n.a[v];
        for (std::size_t j = 0; j < v; ++j) c.a[j] = p.a[j] * na + n.a[j] * pa;
        c.b = p.b * na + n.b * pa;
        bool all_zero = std::all_of(c.a.begin(), c.a.end(),
                                    [](const Rational& x) { return x == 0; });
        if (all_zero) {
          if (c.b > 0) return false;  // 0 >= positive: infeasible
          continue;
        }
        next.push_back(std::move(c));
      }
    for (auto& q : next) q.a.resize(v);
    sys = std::move(next);
  }
  for (const auto& q : sys)
    if (q.b > 0) return false;
  return true;
}

}  // namespace

bool fm_feasible(const std::vector<QVec>& A, const std::vector<Rational>& b) {
  if (A.empty()) return true;
  std::size_t nvars = A[0].size();
  std::vector<Ineq> sys;
  sys.reserve(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) sys.push_back({A[i], b[i]});
  return fm_recurse(std::move(sys), nvars);
}

bool fm_feasible_on_hyperplane(const std::vector<QVec>& A,
                               const std::vector<Rational>& b, const QVec& n) {
  // Substitute out one variable with a nonzero normal coefficient.
  std::size_t d = n.size(), piv = d;
  for (std::size_t j = 0; j < d; ++j)
    if (n[j] != 0) {
      piv = j;
      break;
    }
  if (piv == d) return fm_feasible(A, b);  // n == 0: no constraint
  std::vector<QVec> A2;
  A2.reserve(A.size());
  for (const auto& row : A) {
    QVec r;
    r.reserve(d - 1);
    for (std::size_t j = 0; j < d; ++j) {
      if (j == piv) continue;
      r.push_back(row[j] - row[piv] * n[j] / n[piv]);
    }
    A2.push_back(std::move(r));
  }
  return fm_feasible(A2, b);
}

bool has_nonneg_relation(const std::vector<QVec>& rows) {
  if (rows.empty()) return false;
  // By the positive-combination alternative: no nonzero nonnegative relation
  // exists iff some cocharacter pairs strictly positively with every row.
  std::vector<Rational> b(rows.size(), Rational(1));
  return !fm_feasible(rows, b);
}

QVec primitive(const QVec& v) {
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, den(x));
  std::vector<Integer> w;
  w.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer n = num(x) * (l / den(x));
    w.push_back(n);
    g = boost::multiprecision::gcd(g, n < 0 ? Integer(-n) : n);
  }
  QVec out(v.size(), Rational(0));
  if (g == 0) return out;
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = Rational(w[j] / g);
  return out;
}

}  // namespace glsm
