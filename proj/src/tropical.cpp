#include "ptc/tropical.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace ptc::tropical {

using linalg::HSystem;
using linalg::Mat;
using linalg::VRep;

RatVec to_rat(const ZPoint& p) {
  RatVec v;
  v.reserve(p.size());
  for (long x : p) v.emplace_back(x);
  return v;
}

namespace {

Mat differences(const std::vector<RatVec>& pts) {
  Mat m;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVec r(pts[0].size());
    for (std::size_t c = 0; c < r.size(); ++c) r[c] = pts[i][c] - pts[0][c];
    m.push_back(std::move(r));
  }
  return m;
}

// Pivot coordinates of the affine span: projecting onto them is injective
// on the span.
std::vector<int> span_pivots(const std::vector<RatVec>& pts) {
  if (pts.size() < 2) return {};
  return linalg::rref(differences(pts), pts[0].size()).pivots;
}

std::vector<RatVec> project(const std::vector<RatVec>& pts, const std::vector<int>& piv) {
  std::vector<RatVec> out;
  for (const auto& p : pts) {
    RatVec q;
    for (int c : piv) q.push_back(p[c]);
    out.push_back(std::move(q));
  }
  return out;
}

RatVec relint_point(const VRep& v) {
  RatVec x(v.vertices[0].size(), 0);
  for (const auto& p : v.vertices)
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += p[i];
  for (auto& c : x) c /= static_cast<long>(v.vertices.size());
  for (const auto& r : v.rays)
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += r[i];
  return x;
}

void for_each_combination(int m, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> c(k);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == k) {
      f(c);
      return;
    }
    for (int i = start; i <= m - (k - pos); ++i) {
      c[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

std::vector<std::vector<int>> oracle_projected(const std::vector<RatVec>& pts, const Lifting& eta, int d) {
  const int m = static_cast<int>(pts.size());
  std::set<std::vector<int>> cells;
  if (d == 0) {
    std::vector<int> all(m);
    for (int i = 0; i < m; ++i) all[i] = i;
    return {all};
  }
  for_each_combination(m, d + 1, [&](const std::vector<int>& c) {
    // h(p) = w.p + w0 through the lifted points of c
    Mat sys;
    RatVec rhs;
    for (int i : c) {
      RatVec row = pts[i];
      row.push_back(1);
      sys.push_back(row);
      rhs.push_back(eta[i]);
    }
    if (linalg::rank(sys, d + 1) != static_cast<std::size_t>(d + 1)) return;
    auto w = linalg::solve(sys, rhs, d + 1);
    std::vector<int> tight;
    for (int j = 0; j < m; ++j) {
      RatVec row = pts[j];
      row.push_back(1);
      Rational h = linalg::dot(row, *w);
      if (eta[j] < h) return;
      if (eta[j] == h) tight.push_back(j);
    }
    cells.insert(tight);
  });
  return {cells.begin(), cells.end()};
}

// T is the marked set of a face of conv(pts[S]).
bool is_face_set(const std::vector<RatVec>& pts, const std::vector<int>& s, const std::vector<int>& t) {
  const std::size_t n = pts[0].size();
  HSystem h;
  h.dim = n + 1;  // (c, level)
  for (int i : s) {
    RatVec row = pts[i];
    row.push_back(-1);
    if (std::binary_search(t.begin(), t.end(), i))
      h.eq(row, 0);
    else
      h.le(row, -1);
  }
  return !linalg::enumerate(h).empty();
}

std::string marked_str(const std::vector<int>& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + "}";
}

// The recession cone of h contains r.
bool recedes(const HSystem& h, const RatVec& r) {
  for (std::size_t i = 0; i < h.A.size(); ++i)
    if (linalg::dot(h.A[i], r) > 0) return false;
  for (const auto& e : h.E)
    if (linalg::dot(e, r) != 0) return false;
  return true;
}

bool polyhedron_subset(const VRep& p, const HSystem& q) {
  for (const auto& v : p.vertices)
    if (!q.contains(v)) return false;
  for (const auto& r : p.rays)
    if (!recedes(q, r)) return false;
  for (const auto& l : p.lineality) {
    RatVec neg = l;
    for (auto& x : neg) x = -x;
    if (!recedes(q, l) || !recedes(q, neg)) return false;
  }
  return true;
}

}  // namespace

int affine_dim(const std::vector<RatVec>& pts) {
  if (pts.empty()) return -1;
  if (pts.size() == 1) return 0;
  return static_cast<int>(linalg::rank(differences(pts), pts[0].size()));
}

MarkedPolytope MarkedPolytope::make(std::vector<ZPoint> points) {
  if (points.empty()) throw TropicalError("empty point configuration");
  MarkedPolytope mp;
  mp.n = static_cast<int>(points[0].size());
  std::set<ZPoint> seen;
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != mp.n) throw TropicalError("points of mixed dimension");
    if (!seen.insert(p).second) throw TropicalError("repeated point");
  }
  mp.points = std::move(points);
  auto rp = mp.rat_points();
  mp.dim = affine_dim(rp);
  for (std::size_t i = 0; i < rp.size(); ++i) {
    std::vector<RatVec> rest;
    for (std::size_t j = 0; j < rp.size(); ++j)
      if (j != i) rest.push_back(rp[j]);
    if (rest.empty() || !in_hull(rest, rp[i])) mp.hull.push_back(static_cast<int>(i));
  }
  return mp;
}

std::vector<RatVec> MarkedPolytope::rat_points() const {
  std::vector<RatVec> out;
  for (const auto& p : points) out.push_back(to_rat(p));
  return out;
}

bool in_hull(const std::vector<RatVec>& pts, const RatVec& x) {
  if (pts.empty()) return false;
  const std::size_t m = pts.size();
  HSystem h;
  h.dim = m;
  RatVec one(m, 1);
  h.eq(one, 1);
  for (std::size_t i = 0; i < m; ++i) {
    RatVec e(m, 0);
    e[i] = 1;
    h.ge(e, 0);
  }
  for (std::size_t c = 0; c < x.size(); ++c) {
    RatVec row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = pts[i][c];
    h.eq(row, x[c]);
  }
  return !linalg::enumerate(h).empty();
}

Rational normalized_volume(const std::vector<RatVec>& pts) {
  const int d = affine_dim(pts);
  if (d <= 0) return 1;
  auto proj = project(pts, span_pivots(pts));
  std::mt19937 rng(20240917);
  // a generic lifting triangulates conv(pts); retry on a degenerate draw
  for (int attempt = 0; attempt < 64; ++attempt) {
    Lifting eta;
    for (std::size_t i = 0; i < pts.size(); ++i) eta.push_back(frac(static_cast<long>(rng() % 1000003), 1000003));
    auto cells = oracle_projected(proj, eta, d);
    bool simplicial = true;
    for (const auto& c : cells) simplicial = simplicial && static_cast<int>(c.size()) == d + 1;
    if (!simplicial) continue;
    Rational vol = 0;
    for (const auto& c : cells) {
      Mat m;
      for (int k = 1; k <= d; ++k) {
        RatVec r(d);
        for (int j = 0; j < d; ++j) r[j] = proj[c[k]][j] - proj[c[0]][j];
        m.push_back(r);
      }
      vol += abs(linalg::det(m));
    }
    return vol;
  }
  throw TropicalError("no generic lifting found");
}

Subdivision regular_subdivision(const MarkedPolytope& mp, const Lifting& eta) {
  if (eta.size() != mp.points.size()) throw TropicalError("lifting is not total on A");
  auto rp = mp.rat_points();
  auto proj = project(rp, span_pivots(rp));
  const int d = mp.dim;
  const int m = static_cast<int>(rp.size());
  if (m > 20) throw TropicalError("point configuration too large");

  // Tight sets of max(a(x) - eta(a)) in the dual coordinates (x, t). A set S
  // is a cell when the polyhedron where exactly S attains the max is
  // non-empty, i.e. the tight set at its relative interior is S.
  std::vector<Cell> cells;
  for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1UL) s.push_back(i);
    HSystem h;
    h.dim = d + 1;
    for (int i = 0; i < m; ++i) {
      RatVec row = proj[i];
      row.push_back(-1);
      if (mask >> i & 1UL)
        h.eq(row, eta[i]);
      else
        h.le(row, eta[i]);
    }
    VRep v = linalg::enumerate(h);
    if (v.empty()) continue;
    RatVec x = relint_point(v);
    bool exact = true;
    for (int i = 0; i < m && exact; ++i) {
      if (mask >> i & 1UL) continue;
      RatVec row = proj[i];
      row.push_back(-1);
      exact = linalg::dot(row, x) < eta[i];
    }
    if (!exact) continue;
    std::vector<RatVec> sp;
    for (int i : s) sp.push_back(rp[i]);
    cells.push_back({s, affine_dim(sp)});
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.marked < b.marked;
  });
  Subdivision out;
  out.cells = std::move(cells);
  out.triangulation = true;
  for (std::size_t i = 0; i < out.cells.size(); ++i) {
    if (out.cells[i].dim != d) continue;
    out.maximal.push_back(static_cast<int>(i));
    out.triangulation = out.triangulation && static_cast<int>(out.cells[i].marked.size()) == d + 1;
  }
  return out;
}

std::vector<std::vector<int>> lower_hull_oracle(const MarkedPolytope& mp, const Lifting& eta) {
  if (eta.size() != mp.points.size()) throw TropicalError("lifting is not total on A");
  auto rp = mp.rat_points();
  return oracle_projected(project(rp, span_pivots(rp)), eta, mp.dim);
}

poset::FacePoset Subdivision::face_poset() const {
  poset::FacePoset p;
  for (const auto& c : cells) p.add(marked_str(c.marked), c.dim);
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = 0; j < cells.size(); ++j)
      if (cells[j].dim == cells[i].dim + 1 &&
          std::includes(cells[j].marked.begin(), cells[j].marked.end(), cells[i].marked.begin(), cells[i].marked.end()))
        p.add_cover(static_cast<int>(i), static_cast<int>(j));
  p.finalize();
  return p;
}

nlohmann::json Subdivision::to_json(const MarkedPolytope& mp) const {
  nlohmann::json j;
  j["points"] = mp.points;
  j["triangulation"] = triangulation;
  j["cells"] = nlohmann::json::array();
  for (const auto& c : cells) j["cells"].push_back({{"marked", c.marked}, {"dim", c.dim}});
  j["maximal"] = maximal;
  return j;
}

std::string check_subdivision_axioms(const MarkedPolytope& mp, const Subdivision& s) {
  auto rp = mp.rat_points();
  std::set<std::vector<int>> marked;
  for (const auto& c : s.cells) marked.insert(c.marked);

  // (1) faces of cells are cells
  for (const auto& c : s.cells) {
    const int k = static_cast<int>(c.marked.size());
    for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
      std::vector<int> t;
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1UL) t.push_back(c.marked[i]);
      if (is_face_set(rp, c.marked, t) && !marked.count(t))
        return "face " + marked_str(t) + " of " + marked_str(c.marked) + " is not a cell";
    }
  }

  // (2) two cells meet in a common face, with the matching marked set
  for (std::size_t a = 0; a < s.cells.size(); ++a)
    for (std::size_t b = a + 1; b < s.cells.size(); ++b) {
      const auto& ma = s.cells[a].marked;
      const auto& mb = s.cells[b].marked;
      std::vector<int> t;
      std::set_intersection(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(t));
      if (!t.empty() && (!is_face_set(rp, ma, t) || !is_face_set(rp, mb, t)))
        return "shared points of " + marked_str(ma) + " and " + marked_str(mb) + " are not a face";
      // conv(ma) meet conv(mb), in barycentric coordinates (lambda, mu)
      const std::size_t la = ma.size(), lb = mb.size();
      HSystem h;
      h.dim = la + lb;
      RatVec sa(la + lb, 0), sb(la + lb, 0);
      for (std::size_t i = 0; i < la; ++i) sa[i] = 1;
      for (std::size_t i = 0; i < lb; ++i) sb[la + i] = 1;
      h.eq(sa, 1);
      h.eq(sb, 1);
      for (std::size_t i = 0; i < la + lb; ++i) {
        RatVec e(la + lb, 0);
        e[i] = 1;
        h.ge(e, 0);
      }
      for (int c = 0; c < mp.n; ++c) {
        RatVec row(la + lb);
        for (std::size_t i = 0; i < la; ++i) row[i] = rp[ma[i]][c];
        for (std::size_t i = 0; i < lb; ++i) row[la + i] = -rp[mb[i]][c];
        h.eq(row, 0);
      }
      VRep v = linalg::enumerate(h);
      std::vector<RatVec> tp;
      for (int i : t) tp.push_back(rp[i]);
      for (const auto& w : v.vertices) {
        RatVec x(mp.n, 0);
        for (std::size_t i = 0; i < la; ++i)
          for (int c = 0; c < mp.n; ++c) x[c] += w[i] * rp[ma[i]][c];
        if (!in_hull(tp, x))
          return "cells " + marked_str(ma) + " and " + marked_str(mb) + " overlap beyond their common face";
      }
    }

  // (3) the maximal cells cover Q; interiors are disjoint by (2)
  Rational total = 0;
  for (int i : s.maximal) {
    std::vector<RatVec> cp;
    for (int k : s.cells[i].marked) cp.push_back(rp[k]);
    total += normalized_volume(cp);
  }
  if (total != normalized_volume(rp)) return "maximal cells do not cover Q";
  return {};
}

Rational tropical_polynomial(const MarkedPolytope& mp, const Lifting& eta, const RatVec& x) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < mp.points.size(); ++i) {
    Rational v = linalg::dot(to_rat(mp.points[i]), x) - eta[i];
    if (!best || v > *best) best = v;
  }
  return *best;
}

HypersurfaceModel tropical_hypersurface(const MarkedPolytope& mp, const Lifting& eta, const Subdivision& s) {
  auto rp = mp.rat_points();
  HypersurfaceModel out;
  for (std::size_t ci = 0; ci < s.cells.size(); ++ci) {
    const auto& c = s.cells[ci];
    if (c.dim < 1) continue;
    const int a0 = c.marked[0];
    HyperFace f;
    f.cell = static_cast<int>(ci);
    f.system.dim = mp.n;
    for (std::size_t i = 0; i < rp.size(); ++i) {
      if (static_cast<int>(i) == a0) continue;
      RatVec row(mp.n);
      for (int k = 0; k < mp.n; ++k) row[k] = rp[i][k] - rp[a0][k];
      Rational rhs = eta[i] - eta[a0];
      if (std::binary_search(c.marked.begin(), c.marked.end(), static_cast<int>(i)))
        f.system.eq(row, rhs);
      else
        f.system.le(row, rhs);
    }
    f.vrep = linalg::enumerate(f.system);
    f.dim = f.vrep.dimension();
    f.bounded = f.vrep.bounded();
    out.faces.push_back(std::move(f));
  }
  return out;
}

int HypersurfaceModel::count(int dim, bool bounded_only) const {
  int k = 0;
  for (const auto& f : faces)
    if (f.dim == dim && (!bounded_only || f.bounded)) ++k;
  return k;
}

nlohmann::json HypersurfaceModel::to_json(const MarkedPolytope& mp, const Subdivision& s) const {
  nlohmann::json j;
  j["ambient_dim"] = mp.n;
  j["faces"] = nlohmann::json::array();
  auto vec = [](const RatVec& v) {
    std::vector<std::string> o;
    for (const auto& x : v) o.push_back(to_string(x));
    return o;
  };
  for (const auto& f : faces) {
    nlohmann::json e;
    e["dual_cell"] = s.cells[f.cell].marked;
    e["dim"] = f.dim;
    e["bounded"] = f.bounded;
    e["vertices"] = nlohmann::json::array();
    for (const auto& v : f.vrep.vertices) e["vertices"].push_back(vec(v));
    e["rays"] = nlohmann::json::array();
    for (const auto& r : f.vrep.rays) e["rays"].push_back(vec(r));
    e["lineality"] = nlohmann::json::array();
    for (const auto& l : f.vrep.lineality) e["lineality"].push_back(vec(l));
    j["faces"].push_back(e);
  }
  return j;
}

bool verify_order_reversing(const Subdivision& s, const HypersurfaceModel& h) {
  for (const auto& a : h.faces)
    for (const auto& b : h.faces) {
      const auto& ma = s.cells[a.cell].marked;
      const auto& mb = s.cells[b.cell].marked;
      const bool comb = std::includes(mb.begin(), mb.end(), ma.begin(), ma.end());
      if (comb != polyhedron_subset(b.vrep, a.system)) return false;
    }
  return true;
}

namespace {

void check_index_set(Subset s, int n) {
  if (s == 0 || (s >> (n + 1)) != 0) throw TropicalError("index set outside 0..n");
}

RatVec unit(int n, int i, long v = 1) {
  RatVec e(n + 1, 0);
  e[i] = v;
  return e;
}

}  // namespace

HSystem cone_P(Subset i, int n) {
  check_index_set(i, n);
  if (cyclic::size_of(i) < 2) throw TropicalError("cone needs |I| >= 2");
  HSystem h;
  h.dim = n + 1;
  h.eq(unit(n, 0), 0);
  int first = -1;
  for (int k = 0; k <= n; ++k) {
    if (!(i >> k & 1U)) continue;
    if (first < 0) {
      first = k;
      continue;
    }
    RatVec r = unit(n, k);
    r[first] = -1;
    h.eq(r, 0);
  }
  for (int k = 0; k <= n; ++k) {
    if (i >> k & 1U) continue;
    RatVec r = unit(n, k);
    r[first] = -1;
    h.le(r, 0);
  }
  return h;
}

HSystem face_P(Subset i, Subset i_prime, int n) {
  check_index_set(i_prime, n);
  check_index_set(i, n);
  if (cyclic::size_of(i) < 2) throw TropicalError("face needs |I| >= 2");
  if ((i & ~i_prime) != 0) throw TropicalError("face needs I inside I'");
  HSystem h;
  h.dim = n + 1;
  h.eq(RatVec(n + 1, 1), 1);
  int first = -1;
  for (int k = 0; k <= n; ++k) {
    h.ge(unit(n, k), 0);
    if (!(i_prime >> k & 1U)) {
      h.eq(unit(n, k), 0);
      continue;
    }
    if (!(i >> k & 1U)) continue;
    if (first < 0) {
      first = k;
      continue;
    }
    RatVec r = unit(n, k);
    r[first] = -1;
    h.eq(r, 0);
  }
  for (int k = 0; k <= n; ++k) {
    if ((i >> k & 1U) || !(i_prime >> k & 1U)) continue;
    RatVec r = unit(n, k);
    r[first] = -1;
    h.le(r, 0);
  }
  return h;
}

int face_P_dim(Subset i, Subset i_prime, int n) { return linalg::enumerate(face_P(i, i_prime, n)).dimension(); }

bool face_P_incident(Subset i, Subset i_prime, Subset k, Subset k_prime, int n) {
  VRep v = linalg::enumerate(face_P(i, i_prime, n));
  return face_P(k, k_prime, n).contains(relint_point(v));
}

RatVec moment_simplex(const RatVec& weights) {
  Rational total = 0;
  for (const auto& w : weights) {
    if (w <= 0) throw TropicalError("weights must be positive");
    total += w;
  }
  RatVec out;
  for (const auto& w : weights) out.push_back(w / total);
  return out;
}

RatVec moment_mu(const MarkedPolytope& mp, const RatVec& weights) {
  if (weights.size() != mp.points.size()) throw TropicalError("one weight per point of A");
  Rational total = 0;
  RatVec out(mp.n, 0);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) throw TropicalError("weights must be positive");
    total += weights[i];
    for (int c = 0; c < mp.n; ++c) out[c] += weights[i] * mp.points[i][c];
  }
  for (auto& x : out) x /= total;
  return out;
}

RatVec moment_mu_at(const MarkedPolytope& mp, const Rational& base, const ZPoint& x) {
  if (base <= 0) throw TropicalError("base must be positive");
  RatVec w;
  for (const auto& a : mp.points) {
    long e = 0;
    for (int c = 0; c < mp.n; ++c) e += a[c] * x[c];
    Rational p = 1;
    Rational b = e >= 0 ? base : Rational(1 / base);
    for (long k = 0; k < std::labs(e); ++k) p *= b;
    w.push_back(p);
  }
  return moment_mu(mp, w);
}

namespace {

linalg::ZMat difference_matrix(const MarkedPolytope& mp) {
  linalg::ZMat m;
  for (std::size_t i = 1; i < mp.points.size(); ++i) {
    linalg::ZVec r;
    for (int c = 0; c < mp.n; ++c) r.emplace_back(mp.points[i][c] - mp.points[0][c]);
    m.push_back(r);
  }
  return m;
}

}  // namespace

linalg::ZMat lattice_N(const MarkedPolytope& mp) {
  auto m = difference_matrix(mp);
  if (m.empty()) {
    linalg::ZMat id;
    for (int i = 0; i < mp.n; ++i) {
      linalg::ZVec e(mp.n, 0);
      e[i] = 1;
      id.push_back(e);
    }
    return id;
  }
  return linalg::integer_kernel(m, mp.n);
}

Integer saturation_index(const MarkedPolytope& mp) {
  auto m = difference_matrix(mp);
  Integer idx = 1;
  if (m.empty()) return idx;
  for (const auto& f : linalg::smith(m).factors) idx *= abs(f);
  return idx;
}

std::string to_svg(const MarkedPolytope& mp, const Subdivision& s, const HypersurfaceModel& h) {
  if (mp.n != 2) throw TropicalError("SVG export needs plane curves");
  auto d = [](const Rational& q) { return q.get_d(); };
  // left panel: the subdivision; right panel: the curve
  double lo = 0, hi = 1;
  for (const auto& p : mp.points)
    for (long c : p) {
      lo = std::min(lo, static_cast<double>(c));
      hi = std::max(hi, static_cast<double>(c));
    }
  const double scale = 200.0 / (hi - lo);
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"260\">\n";
  o << "<g transform=\"translate(20,240) scale(1,-1)\">\n";
  auto px = [&](double v) { return (v - lo) * scale; };
  for (const auto& c : s.cells) {
    if (c.dim != 1) continue;
    // endpoints are the extreme marked points along the segment
    auto lt = [&](int a, int b) { return mp.points[a] < mp.points[b]; };
    int a = *std::min_element(c.marked.begin(), c.marked.end(), lt);
    int b = *std::max_element(c.marked.begin(), c.marked.end(), lt);
    o << "<line x1=\"" << px(mp.points[a][0]) << "\" y1=\"" << px(mp.points[a][1]) << "\" x2=\"" << px(mp.points[b][0])
      << "\" y2=\"" << px(mp.points[b][1]) << "\" stroke=\"black\"/>\n";
  }
  for (const auto& p : mp.points)
    o << "<circle cx=\"" << px(p[0]) << "\" cy=\"" << px(p[1]) << "\" r=\"3\" fill=\"black\"/>\n";
  o << "</g>\n";

  double cx = 0, cy = 0;
  int nv = 0;
  for (const auto& f : h.faces)
    if (f.dim == 0) {
      cx += d(f.vrep.vertices[0][0]);
      cy += d(f.vrep.vertices[0][1]);
      ++nv;
    }
  if (nv) cx /= nv, cy /= nv;
  double span = 1;
  for (const auto& f : h.faces)
    for (const auto& v : f.vrep.vertices)
      span = std::max({span, std::fabs(d(v[0]) - cx), std::fabs(d(v[1]) - cy)});
  const double cs = 80.0 / span;
  o << "<g transform=\"translate(390,130) scale(1,-1)\">\n";
  auto line = [&](double x1, double y1, double x2, double y2, const char* color) {
    o << "<line x1=\"" << (x1 - cx) * cs << "\" y1=\"" << (y1 - cy) * cs << "\" x2=\"" << (x2 - cx) * cs << "\" y2=\""
      << (y2 - cy) * cs << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
  };
  for (const auto& f : h.faces) {
    if (f.dim != 1) continue;
    const auto& vs = f.vrep.vertices;
    if (vs.size() == 2) {
      line(d(vs[0][0]), d(vs[0][1]), d(vs[1][0]), d(vs[1][1]), "firebrick");
    } else if (!f.vrep.rays.empty()) {
      const auto& r = f.vrep.rays[0];
      double len = std::hypot(d(r[0]), d(r[1]));
      double reach = 1.2 * span / len;
      line(d(vs[0][0]), d(vs[0][1]), d(vs[0][0]) + reach * d(r[0]), d(vs[0][1]) + reach * d(r[1]), "steelblue");
    }
  }
  o << "</g>\n</svg>\n";
  return o.str();
}

MarkedPolytope example_points() { return MarkedPolytope::make({{0, 0}, {1, 0}, {0, 1}, {2, 3}}); }

Lifting example_lifting() { return {0, 0, 0, 1}; }

}  // namespace ptc::tropical
