#include "ptc/coamoeba.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ptc::coamoeba {

using cyclic::bit;
using cyclic::min_of;

namespace {

void check_ground(const AngleVector& theta, Subset ground) {
  if (theta.size() == 0 || ground != cyclic::full_set(static_cast<int>(theta.size()) - 1))
    throw CoamoebaError("angle vector does not match the ground set");
}

std::vector<Subset> rotated(const CyclicPartition& sigma, std::size_t start) {
  const std::size_t k = sigma.k();
  if (start >= k) throw CoamoebaError("initial block out of range");
  std::vector<Subset> b(k);
  for (std::size_t s = 0; s < k; ++s) b[s] = sigma.block((start + s) % k);
  return b;
}

// Builds rows over y_0..y_{k-1}; y_0 is dropped since it is fixed to 0.
struct Builder {
  std::size_t k;
  linalg::HSystem h;
  explicit Builder(std::size_t kk) : k(kk) { h.dim = kk - 1; }
  RatVec row(std::initializer_list<std::pair<std::size_t, int>> terms) const {
    RatVec full(k, 0);
    for (auto [i, c] : terms) full[i] += c;
    return RatVec(full.begin() + 1, full.end());
  }
  // sum c_i y_i <= rhs
  void le(std::initializer_list<std::pair<std::size_t, int>> terms, const Rational& rhs) { h.le(row(terms), rhs); }
  void eq(std::initializer_list<std::pair<std::size_t, int>> terms, const Rational& rhs) { h.eq(row(terms), rhs); }
};

// Points on the circle in [0,2), sorted.
std::vector<Rational> sorted_points(const AngleVector& theta, Subset j) {
  std::vector<Rational> a;
  for (std::size_t i = 0; i < theta.size(); ++i)
    if (j & bit(static_cast<int>(i))) a.push_back(theta[i].q());
  std::sort(a.begin(), a.end());
  return a;
}

Rational gap_of(const std::vector<Rational>& a) {
  if (a.size() <= 1) return 2;
  Rational g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational d = (i + 1 < a.size() ? a[i + 1] : a[0] + 2) - a[i];
    if (d > g) g = d;
  }
  return g;
}

}  // namespace

Rational max_gap(const AngleVector& theta) {
  return gap_of(sorted_points(theta, cyclic::full_set(static_cast<int>(theta.size()) - 1)));
}

bool is_allowed(const AngleVector& theta) { return max_gap(theta) <= 1; }
bool in_zonotope_interior(const AngleVector& theta) { return max_gap(theta) > 1; }
bool in_zonotope(const AngleVector& theta) { return max_gap(theta) >= 1; }

bool in_argument_image(const AngleVector& theta) {
  Rational g = max_gap(theta);
  if (g < 1) return true;
  if (g > 1) return false;
  std::set<Rational> distinct;
  for (const auto& a : theta.coords()) distinct.insert(a.q());
  return distinct.size() == 2;
}

bool in_partial_coamoeba(const AngleVector& theta, Subset j) {
  if (theta.size() == 0 || (j & ~cyclic::full_set(static_cast<int>(theta.size()) - 1)))
    throw CoamoebaError("J is not a subset of the ground set");
  return gap_of(sorted_points(theta, j)) <= 1;
}

AngleVector pi_point(Subset i, int n) {
  RatVec q(n + 1, 0);
  for (int e : cyclic::elements(i)) q.at(e) = 1;
  return AngleVector(q);
}

RatVec LiftedSystem::full(const RatVec& vars) const {
  RatVec y{0};
  y.insert(y.end(), vars.begin(), vars.end());
  return y;
}

LiftedSystem octahedron_system(const CyclicPartition& sigma, std::size_t start) {
  LiftedSystem out;
  out.blocks = rotated(sigma, start);
  const std::size_t k = out.blocks.size();
  Builder b(k);
  for (std::size_t s = 0; s + 1 < k; ++s) {
    b.le({{s, 1}, {s + 1, -1}}, 0);
    b.le({{s + 1, 1}, {s, -1}}, 1);
  }
  b.le({{k - 1, 1}, {0, -1}}, 2);
  b.le({{0, 1}, {k - 1, -1}}, -1);
  out.h = b.h;
  return out;
}

LiftedSystem partial_octahedron_system(const CyclicPartition& sigma, Subset j, std::size_t start) {
  if (!cyclic::divides(sigma, j)) throw CoamoebaError("(sigma, J) is not in W");
  LiftedSystem out;
  out.blocks = rotated(sigma, start);
  const std::size_t k = out.blocks.size();
  Builder b(k);
  for (std::size_t s = 0; s + 1 < k; ++s) b.le({{s, 1}, {s + 1, -1}}, 0);
  b.le({{k - 1, 1}, {0, -1}}, 2);
  std::vector<std::size_t> jb;
  for (std::size_t s = 0; s < k; ++s)
    if (out.blocks[s] & j) jb.push_back(s);
  for (std::size_t t = 0; t + 1 < jb.size(); ++t) b.le({{jb[t + 1], 1}, {jb[t], -1}}, 1);
  b.le({{jb.front(), 1}, {jb.back(), -1}}, -1);
  out.h = b.h;
  return out;
}

LiftedSystem alcove_system(const Net& tau, std::size_t start) {
  LiftedSystem out;
  out.blocks = rotated(tau.sigma(), start);
  const std::size_t k = out.blocks.size();
  auto re = [&](int idx) { return static_cast<std::size_t>((idx - static_cast<int>(start) + static_cast<int>(k)) % k); };
  Builder b(k);
  const auto& arcs = tau.shuffle_arcs();
  for (const auto& arc : arcs) {
    if (arc.size() != 2) continue;
    std::size_t r = std::min(re(arc[0]), re(arc[1])), s = std::max(re(arc[0]), re(arc[1]));
    b.eq({{s, 1}, {r, -1}}, 1);  // opposite sides of a trapezoid
  }
  for (std::size_t t = 0; t < arcs.size(); ++t) {
    const auto& cur = arcs[t];
    const auto& next = arcs[(t + 1) % arcs.size()];
    for (int ra : cur)
      for (int sa : next) {
        std::size_t r = re(ra), s = re(sa);
        if (s == (r + 1) % k) {
          // median
          if (r + 1 < k)
            b.le({{r, 1}, {s, -1}}, 0);
          else
            b.le({{r, 1}, {s, -1}}, 2);
        } else if (r < s) {
          b.le({{r, 1}, {s, -1}}, -1);  // diagonal
        } else {
          b.le({{r, 1}, {s, -1}}, 1);
        }
      }
  }
  out.h = b.h;
  return out;
}

bool lifted_member(const LiftedSystem& sys, const AngleVector& theta) {
  const std::size_t k = sys.blocks.size();
  std::vector<Rational> r(k);
  const Rational base = theta[min_of(sys.blocks[0])].q();
  for (std::size_t s = 0; s < k; ++s) {
    const Rational a = theta[min_of(sys.blocks[s])].q();
    for (int e : cyclic::elements(sys.blocks[s]))
      if (theta[e].q() != a) return false;
    r[s] = mod_positive(a - base, 2);
  }
  // a block sitting on the initial angle may lift to 0 or 2
  std::vector<std::size_t> zero;
  for (std::size_t s = 1; s < k; ++s)
    if (r[s] == 0) zero.push_back(s);
  for (std::uint32_t mask = 0; mask < (1u << zero.size()); ++mask) {
    RatVec vars(r.begin() + 1, r.end());
    for (std::size_t t = 0; t < zero.size(); ++t)
      if (mask >> t & 1) vars[zero[t] - 1] = 2;
    if (sys.h.contains(vars)) return true;
  }
  return false;
}

RatVec lifted_angles(const LiftedSystem& sys, const RatVec& vars) {
  RatVec y = sys.full(vars);
  Subset ground = 0;
  for (Subset s : sys.blocks) ground |= s;
  const int n = 31 - __builtin_clz(ground);
  RatVec theta(n + 1, 0);
  for (std::size_t s = 0; s < sys.blocks.size(); ++s)
    for (int e : cyclic::elements(sys.blocks[s])) theta[e] = y[s];
  const Rational t0 = theta[0];
  for (auto& t : theta) t -= t0;
  return theta;
}

bool in_octahedron(const AngleVector& theta, const CyclicPartition& sigma) {
  check_ground(theta, sigma.ground());
  return lifted_member(octahedron_system(sigma), theta);
}

bool in_partial_octahedron(const AngleVector& theta, const CyclicPartition& sigma, Subset j) {
  check_ground(theta, sigma.ground());
  return lifted_member(partial_octahedron_system(sigma, j), theta);
}

bool in_alcove(const AngleVector& theta, const Net& tau) { return in_alcove_lifted(theta, tau); }

bool in_alcove_pairwise(const AngleVector& theta, const Net& tau, bool strict) {
  check_ground(theta, tau.sigma().ground());
  const int n = static_cast<int>(theta.size()) - 1;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      bool i_first = false;
      const Rational d = mod_positive(theta[j].q() - theta[i].q(), 2);
      switch (tau.pair_case(i, j, &i_first)) {
        case Net::PairCase::Same:
          if (d != 0) return false;
          break;
        case Net::PairCase::Opposite:
          if (d != 1) return false;
          break;
        case Net::PairCase::Ordered: {
          const Rational dd = i_first ? d : mod_positive(-d, 2);
          if (dd > 1 || (strict && (dd == 0 || dd == 1))) return false;
          break;
        }
      }
    }
  return true;
}

bool in_alcove_lifted(const AngleVector& theta, const Net& tau, std::size_t start) {
  check_ground(theta, tau.sigma().ground());
  return lifted_member(alcove_system(tau, start), theta);
}

bool alcove_in_partial_octahedron(const Net& tau, const CyclicPartition& sigma, Subset j) {
  if (!cyclic::divides(sigma, j)) throw CoamoebaError("(sigma, J) is not in W");
  if (tau.sigma().ground() != sigma.ground()) return false;
  return cyclic::refines(tau.sigma(), sigma) && tau.divides(j);
}

TorusRegion TorusRegion::octahedron(const CyclicPartition& s) {
  TorusRegion r;
  r.kind = Kind::Octahedron;
  r.sigma = s;
  r.j = s.ground();
  r.n = 31 - __builtin_clz(s.ground());
  return r;
}

TorusRegion TorusRegion::partial_octahedron(const CyclicPartition& s, Subset j) {
  if (!cyclic::divides(s, j)) throw CoamoebaError("(sigma, J) is not in W");
  TorusRegion r = octahedron(s);
  r.kind = Kind::PartialOctahedron;
  r.j = j;
  return r;
}

TorusRegion TorusRegion::alcove(const Net& t) {
  TorusRegion r = octahedron(t.sigma());
  r.kind = Kind::Alcove;
  r.tau = t;
  return r;
}

TorusRegion TorusRegion::zonotope(int n) {
  TorusRegion r;
  r.kind = Kind::Zonotope;
  r.n = n;
  r.j = cyclic::full_set(n);
  return r;
}

TorusRegion TorusRegion::coamoeba(Subset j, int n) {
  TorusRegion r = zonotope(n);
  r.kind = Kind::Coamoeba;
  r.j = j;
  return r;
}

bool TorusRegion::contains_point(const AngleVector& theta) const {
  if (static_cast<int>(theta.size()) != n + 1) throw CoamoebaError("angle vector has the wrong length");
  switch (kind) {
    case Kind::Octahedron:
      return in_octahedron(theta, sigma);
    case Kind::PartialOctahedron:
      return in_partial_octahedron(theta, sigma, j);
    case Kind::Alcove:
      return in_alcove(theta, *tau);
    case Kind::Zonotope:
      return in_zonotope(theta);
    case Kind::Coamoeba:
      return in_partial_coamoeba(theta, j);
  }
  return false;
}

LiftedSystem TorusRegion::system() const {
  switch (kind) {
    case Kind::Octahedron:
      return octahedron_system(sigma);
    case Kind::PartialOctahedron:
      return partial_octahedron_system(sigma, j);
    case Kind::Alcove:
      return alcove_system(*tau);
    default:
      throw CoamoebaError("region is not a lifted polytope: " + str());
  }
}

std::string TorusRegion::str() const {
  switch (kind) {
    case Kind::Octahedron:
      return "octahedron(" + sigma.str() + ")";
    case Kind::PartialOctahedron:
      return "partial_octahedron(" + sigma.str() + ", " + cyclic::subset_str(j) + ")";
    case Kind::Alcove:
      return "alcove(" + tau->str() + ")";
    case Kind::Zonotope:
      return "zonotope(" + std::to_string(n) + ")";
    case Kind::Coamoeba:
      return "coamoeba(" + cyclic::subset_str(j) + ")";
  }
  return "";
}

std::vector<RatVec> region_vertices(const TorusRegion& r) {
  LiftedSystem sys = r.system();
  linalg::VRep v = linalg::enumerate(sys.h);
  if (!v.bounded()) throw CoamoebaError("lifted system is unbounded: " + r.str());
  std::vector<RatVec> out;
  for (const auto& x : v.vertices) out.push_back(lifted_angles(sys, x));
  return out;
}

bool region_contains(const TorusRegion& outer, const TorusRegion& inner) {
  if (outer.n != inner.n) return false;
  auto verts = region_vertices(inner);
  if (verts.empty()) return true;
  RatVec bary(verts[0].size(), 0);
  for (const auto& v : verts) {
    if (!outer.contains_point(AngleVector(v))) return false;
    for (std::size_t i = 0; i < v.size(); ++i) bary[i] += v[i];
  }
  for (auto& x : bary) x /= static_cast<long>(verts.size());
  return outer.contains_point(AngleVector(bary));
}

std::vector<Chamber> enumerate_chambers(int n) {
  if (n < 1 || n > 9) throw CoamoebaError("enumerate_chambers: n out of range");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Chamber> out;
  do {
    // element perm[p] sits at p+1 on the projective line, element 0 at 0
    RatVec pos(n + 1, 0);
    for (int p = 0; p < n; ++p) pos[perm[p]] = frac(p + 1, n + 1);
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      RatVec q = pos;
      for (int i = 1; i <= n; ++i)
        if (bits >> (i - 1) & 1) q[i] += 1;
      Chamber c;
      c.theta = AngleVector(q);
      c.allowed = is_allowed(c.theta);
      c.sigma = cyclic::partition_of_angles(q, cyclic::full_set(n));
      out.push_back(std::move(c));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Net diameter_net(const AngleVector& theta) {
  if (!is_allowed(theta)) throw CoamoebaError("diameter_net: configuration is not allowed");
  const int n = static_cast<int>(theta.size()) - 1;
  RatVec q;
  for (const auto& a : theta.coords()) q.push_back(a.q());
  CyclicPartition sigma = cyclic::partition_of_angles(q, cyclic::full_set(n));
  const int k = static_cast<int>(sigma.k());
  std::vector<Rational> dir(k), lo(k), len(k);
  for (int s = 0; s < k; ++s) dir[s] = q[min_of(sigma.block(s))];
  // vertex s spans the directions strictly between side s-1 and side s
  for (int s = 0; s < k; ++s) {
    lo[s] = dir[(s + k - 1) % k];
    len[s] = mod_positive(dir[s] - lo[s], 2);
    if (len[s] == 0) len[s] = 2;
  }
  std::vector<nets::Chord> chords;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      Rational d = mod_positive(lo[b] + 1 - lo[a], 2);
      if (d < len[a] || d + len[b] > 2) chords.emplace_back(a, b);
    }
  return Net(sigma, chords);
}

namespace {

using V3 = std::array<Rational, 3>;

V3 sub(const V3& a, const V3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
V3 cross(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Rational dot3(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
bool is_zero(const V3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

// Orders coplanar points counter-clockwise around their centroid.
std::vector<int> order_face(const std::vector<V3>& pts, std::vector<int> idx, const V3& normal) {
  V3 c{0, 0, 0};
  for (int i : idx)
    for (int t = 0; t < 3; ++t) c[t] += pts[i][t];
  for (auto& x : c) x /= static_cast<long>(idx.size());
  V3 u = sub(pts[idx[0]], c);
  V3 w = cross(normal, u);
  std::vector<std::pair<double, int>> keyed;
  for (int i : idx) {
    V3 d = sub(pts[i], c);
    keyed.emplace_back(std::atan2(dot3(d, w).get_d(), dot3(d, u).get_d()), i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  for (auto& kv : keyed) out.push_back(kv.second);
  return out;
}

}  // namespace

std::string export_off(const TorusRegion& r) {
  if (r.n != 3) throw CoamoebaError("export_off needs n = 3");
  auto verts = region_vertices(r);
  std::sort(verts.begin(), verts.end());
  std::vector<V3> pts;
  for (const auto& v : verts) pts.push_back({v[1], v[2], v[3]});
  const int m = static_cast<int>(pts.size());
  linalg::Mat diffs;
  for (int i = 1; i < m; ++i) {
    V3 d = sub(pts[i], pts[0]);
    diffs.push_back({d[0], d[1], d[2]});
  }
  const std::size_t dim = m ? linalg::rank(diffs, 3) : 0;
  std::vector<std::vector<int>> faces;
  if (dim == 3) {
    std::set<std::vector<int>> seen;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int c = b + 1; c < m; ++c) {
          V3 nrm = cross(sub(pts[b], pts[a]), sub(pts[c], pts[a]));
          if (is_zero(nrm)) continue;
          int pos = 0, neg = 0;
          std::vector<int> on;
          for (int i = 0; i < m; ++i) {
            Rational s = dot3(nrm, sub(pts[i], pts[a]));
            if (s > 0) ++pos;
            else if (s < 0) ++neg;
            else on.push_back(i);
          }
          if (pos && neg) continue;
          if (!seen.insert(on).second) continue;
          if (pos) nrm = {-nrm[0], -nrm[1], -nrm[2]};  // outward
          faces.push_back(order_face(pts, on, nrm));
        }
  } else if (dim == 2) {
    V3 nrm{0, 0, 0};
    for (int b = 1; b < m && is_zero(nrm); ++b)
      for (int c = b + 1; c < m && is_zero(nrm); ++c) nrm = cross(sub(pts[b], pts[0]), sub(pts[c], pts[0]));
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);
    faces.push_back(order_face(pts, all, nrm));
  }
  std::ostringstream os;
  os << "OFF\n# " << r.str() << "\n" << m << " " << faces.size() << " 0\n";
  char buf[64];
  for (const auto& p : pts) {
    std::snprintf(buf, sizeof buf, "%.10g %.10g %.10g\n", p[0].get_d(), p[1].get_d(), p[2].get_d());
    os << buf;
  }
  for (const auto& f : faces) {
    os << f.size();
    for (int i : f) os << " " << i;
    os << "\n";
  }
  return os.str();
}

}  // namespace ptc::coamoeba
