#include "ptc/linalg.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace ptc::linalg {

Echelon rref(Mat m, std::size_t ncols) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    Rational inv = 1 / m[row][col];
    for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
    }
    out.pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const Mat& m, std::size_t ncols) { return rref(m, ncols).rows.size(); }

Rational det(Mat m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

Mat kernel(const Mat& m, std::size_t ncols) {
  Echelon e = rref(m, ncols);
  std::vector<int> is_pivot(ncols, -1);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) is_pivot[e.pivots[r]] = static_cast<int>(r);
  Mat basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f] >= 0) continue;
    RatVec v(ncols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const Mat& m, const RatVec& b, std::size_t ncols) {
  Mat aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon e = rref(aug, ncols + 1);
  RatVec x(ncols, 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (static_cast<std::size_t>(e.pivots[r]) == ncols) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][ncols];
  }
  return x;
}

Rational dot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

ZMat identity(std::size_t n) {
  ZMat m(n, ZVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void row_axpy(ZMat& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] -= q * m[src][j];
}

void col_axpy(ZMat& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (auto& row : m) row[dst] -= q * row[src];
}

void col_swap(ZMat& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

Smith smith(const ZMat& a) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  Smith s{a, identity(m), identity(n), {}};
  ZMat& D = s.D;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // smallest non-zero entry of the trailing block becomes the pivot
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D[i][j] != 0 && (bi == m || abs(D[i][j]) < abs(D[bi][bj]))) bi = i, bj = j;
      if (bi == m) goto done;
      std::swap(D[t], D[bi]);
      std::swap(s.U[t], s.U[bi]);
      col_swap(D, t, bj);
      col_swap(s.V, t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D[i][t] == 0) continue;
        Integer q = fdiv(D[i][t], D[t][t]);
        row_axpy(D, i, t, q);
        row_axpy(s.U, i, t, q);
        if (D[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D[t][j] == 0) continue;
        Integer q = fdiv(D[t][j], D[t][t]);
        col_axpy(D, j, t, q);
        col_axpy(s.V, j, t, q);
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D[i][j] % D[t][t] != 0) {
            row_axpy(D, t, i, Integer(-1));
            row_axpy(s.U, t, i, Integer(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D[t][t] < 0) {
      for (auto& x : D[t]) x = -x;
      for (auto& x : s.U[t]) x = -x;
    }
    s.factors.push_back(D[t][t]);
  }
done:
  return s;
}

ZMat unimodular_inverse(const ZMat& u) {
  const std::size_t n = u.size();
  Mat aug(n, RatVec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(u[i][j]);
    aug[i][n + i] = 1;
  }
  Echelon e = rref(aug, 2 * n);
  if (e.rows.size() != n || static_cast<std::size_t>(e.pivots.back()) >= n)
    throw std::invalid_argument("unimodular_inverse: singular matrix");
  ZMat inv(n, ZVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& q = e.rows[i][n + j];
      if (q.get_den() != 1) throw std::invalid_argument("unimodular_inverse: not unimodular");
      inv[i][j] = q.get_num();
    }
  return inv;
}

ZMat integer_kernel(const ZMat& a, std::size_t ncols) {
  if (a.empty()) {
    ZMat id = identity(ncols);
    return id;
  }
  Smith s = smith(a);
  ZMat basis;
  for (std::size_t j = s.factors.size(); j < ncols; ++j) {
    ZVec v(ncols);
    for (std::size_t i = 0; i < ncols; ++i) v[i] = s.V[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

void HSystem::le(const RatVec& row, const Rational& rhs) {
  A.push_back(row);
  b.push_back(rhs);
}

void HSystem::ge(const RatVec& row, const Rational& rhs) {
  RatVec neg(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) neg[i] = -row[i];
  A.push_back(std::move(neg));
  b.push_back(-rhs);
}

void HSystem::eq(const RatVec& row, const Rational& rhs) {
  E.push_back(row);
  e.push_back(rhs);
}

bool HSystem::contains(const RatVec& x) const {
  for (std::size_t i = 0; i < E.size(); ++i)
    if (dot(E[i], x) != e[i]) return false;
  for (std::size_t i = 0; i < A.size(); ++i)
    if (dot(A[i], x) > b[i]) return false;
  return true;
}

int VRep::dimension() const {
  if (vertices.empty()) return -1;
  Mat dirs;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    RatVec d(vertices[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = vertices[i][j] - vertices[0][j];
    dirs.push_back(std::move(d));
  }
  for (const auto& r : rays) dirs.push_back(r);
  for (const auto& l : lineality) dirs.push_back(l);
  if (dirs.empty()) return 0;
  return static_cast<int>(rank(dirs, vertices[0].size()));
}

namespace {

// Incremental independence test against a reduced basis.
struct Basis {
  Mat rows;
  std::vector<std::size_t> piv;

  bool add(RatVec v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (v[piv[r]] == 0) continue;
      Rational f = v[piv[r]] / rows[r][piv[r]];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
    }
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        rows.push_back(std::move(v));
        piv.push_back(j);
        return true;
      }
    return false;
  }
};

RatVec normalize_dir(RatVec v) {
  for (const auto& x : v)
    if (x != 0) {
      Rational s = abs(x);
      for (auto& y : v) y /= s;
      break;
    }
  return v;
}

template <class Visit>
void choose_independent(const Mat& rows, const Basis& base, std::size_t need, Visit&& visit) {
  std::vector<std::size_t> chosen;
  std::vector<Basis> stack{base};
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (chosen.size() == need) {
      visit(chosen);
      return;
    }
    for (std::size_t i = from; i + (need - chosen.size()) <= rows.size(); ++i) {
      Basis next = stack.back();
      if (!next.add(rows[i])) continue;
      chosen.push_back(i);
      stack.push_back(std::move(next));
      self(self, i + 1);
      stack.pop_back();
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

VRep enumerate(const HSystem& h) {
  const std::size_t d = h.dim;
  VRep out;
  Mat all = h.A;
  all.insert(all.end(), h.E.begin(), h.E.end());
  out.lineality = all.empty() ? kernel(Mat{RatVec(d, 0)}, d) : kernel(all, d);

  Mat eqs = h.E;
  RatVec rhs = h.e;
  for (const auto& l : out.lineality) {
    eqs.push_back(l);
    rhs.push_back(0);
  }
  Basis base;
  Mat indep_eqs;
  RatVec indep_rhs;
  for (std::size_t i = 0; i < eqs.size(); ++i)
    if (base.add(eqs[i])) {
      indep_eqs.push_back(eqs[i]);
      indep_rhs.push_back(rhs[i]);
    }
  if (!solve(eqs, rhs, d)) return out;  // inconsistent equalities
  const std::size_t re = base.rows.size();

  std::set<RatVec> verts;
  choose_independent(h.A, base, d - re, [&](const std::vector<std::size_t>& s) {
    Mat m = indep_eqs;
    RatVec r = indep_rhs;
    for (auto i : s) {
      m.push_back(h.A[i]);
      r.push_back(h.b[i]);
    }
    auto x = solve(m, r, d);
    if (x && h.contains(*x)) verts.insert(*x);
  });
  out.vertices.assign(verts.begin(), verts.end());
  if (out.vertices.empty() || d - re == 0) return out;

  std::set<RatVec> rays;
  HSystem rec{d, h.A, RatVec(h.A.size(), 0), eqs, RatVec(eqs.size(), 0)};
  choose_independent(h.A, base, d - re - 1, [&](const std::vector<std::size_t>& s) {
    Mat m = indep_eqs;
    for (auto i : s) m.push_back(h.A[i]);
    Mat k = kernel(m, d);
    if (k.size() != 1) return;
    RatVec r = normalize_dir(k[0]);
    if (rec.contains(r)) rays.insert(r);
    for (auto& x : r) x = -x;
    if (rec.contains(r)) rays.insert(r);
  });
  out.rays.assign(rays.begin(), rays.end());
  return out;
}

}  // namespace ptc::linalg
