#include "ptc/assembly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <future>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "ptc/coamoeba.hpp"

namespace ptc::assembly {

namespace {

using linalg::ZMat;
using linalg::ZVec;

Rational ceil_q(const Rational& q) { return Rational(-floor_q(-q)); }

RatVec mod2(RatVec v) {
  for (auto& x : v) x = mod_positive(x, 2);
  return v;
}

std::string deck_str(const DeckElement& k) {
  std::string s = "[";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + "]";
}

std::string marked_str(const std::vector<int>& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "." : "") + std::to_string(m[i]);
  return s;
}

// t-coordinates: element angles minus the angle of element 0, elements 1..n.
RatVec t_coords(const coamoeba::LiftedSystem& sys, const RatVec& vars) {
  RatVec th = coamoeba::lifted_angles(sys, vars);
  return RatVec(th.begin() + 1, th.end());
}

bool contains_t(const coamoeba::LiftedSystem& sys, const RatVec& t) {
  auto ang = [&](int e) { return e == 0 ? Rational(0) : t[e - 1]; };
  const Rational base = ang(cyclic::min_of(sys.blocks[0]));
  RatVec vars;
  for (std::size_t s = 0; s < sys.blocks.size(); ++s) {
    const Rational a = ang(cyclic::min_of(sys.blocks[s]));
    for (int e : cyclic::elements(sys.blocks[s]))
      if (ang(e) != a) return false;
    if (s > 0) vars.push_back(a - base);
  }
  return sys.h.contains(vars);
}

// W with, per cell, its lifted region in t-coordinates and, per cover, the
// lattice offset placing the face inside the closed region.
struct BaseW {
  cyclic::WLattice w;
  std::vector<coamoeba::LiftedSystem> sys;
  std::vector<RatVec> rep;
  std::vector<std::vector<RatVec>> verts;
  std::vector<std::vector<std::pair<int, ZVec>>> faces;
};

ZVec face_offset(const BaseW& bw, int c, int d, int n) {
  const RatVec& td = bw.rep[d];
  std::vector<long> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    Rational mn = bw.verts[c][0][i], mx = mn;
    for (const auto& v : bw.verts[c]) mn = std::min(mn, v[i]), mx = std::max(mx, v[i]);
    lo[i] = ceil_q((mn - td[i]) / 2).get_num().get_si();
    hi[i] = floor_q((mx - td[i]) / 2).get_si();
  }
  std::vector<ZVec> found;
  std::vector<long> m(lo);
  while (true) {
    bool ok = true;
    for (int i = 0; i < n; ++i) ok = ok && m[i] <= hi[i];
    if (ok) {
      RatVec t(td);
      for (int i = 0; i < n; ++i) t[i] += 2 * m[i];
      if (contains_t(bw.sys[c], t)) found.push_back(ZVec(m.begin(), m.end()));
    }
    int i = 0;
    while (i < n && m[i] >= hi[i]) m[i] = lo[i], ++i;
    if (i == n) break;
    ++m[i];
  }
  if (found.size() != 1)
    throw AssemblyError("face " + bw.w.poset.id(d) + " lifts " + std::to_string(found.size()) +
                        " times into the closed region of " + bw.w.poset.id(c));
  return found[0];
}

std::unique_ptr<BaseW> make_base(int n) {
  auto bw = std::make_unique<BaseW>();
  bw->w = cyclic::build_W_with_labels(n);
  const auto& p = bw->w.poset;
  const std::size_t sz = p.size();
  bw->sys.resize(sz);
  bw->rep.resize(sz);
  bw->verts.resize(sz);
  bw->faces.resize(sz);
  for (std::size_t c = 0; c < sz; ++c) {
    const auto& lab = bw->w.labels[c];
    bw->sys[c] = coamoeba::partial_octahedron_system(lab.sigma, lab.j, 0);
    const linalg::VRep vr = linalg::enumerate(bw->sys[c].h);
    if (vr.empty() || !vr.bounded()) throw AssemblyError("region of " + p.id(c) + " is not a polytope");
    RatVec avg(n, 0);
    for (const auto& v : vr.vertices) {
      bw->verts[c].push_back(t_coords(bw->sys[c], v));
      for (int i = 0; i < n; ++i) avg[i] += bw->verts[c].back()[i];
    }
    for (auto& a : avg) a /= static_cast<long>(vr.vertices.size());
    bw->rep[c] = avg;
  }
  for (std::size_t c = 0; c < sz; ++c)
    for (int d : p.down(c)) bw->faces[c].push_back({d, face_offset(*bw, c, d, n)});
  return bw;
}

const BaseW& base_w(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<BaseW>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = make_base(n);
  return *slot;
}

linalg::Mat to_mat(const ZMat& z) {
  linalg::Mat m;
  for (const auto& row : z) {
    RatVec r;
    for (const auto& x : row) r.push_back(Rational(x));
    m.push_back(r);
  }
  return m;
}

}  // namespace

// ---- simplex covers ----

std::vector<Integer> SimplexCoverData::deck() const {
  std::vector<Integer> out;
  for (const auto& f : factors)
    if (f > 1) out.push_back(f);
  return out;
}

std::vector<DeckElement> SimplexCoverData::deck_elements() const {
  std::vector<DeckElement> out;
  DeckElement k(factors.size(), 0);
  while (true) {
    out.push_back(k);
    std::size_t i = 0;
    while (i < k.size() && k[i] + 1 >= factors[i].get_si()) k[i] = 0, ++i;
    if (i == k.size()) break;
    ++k[i];
  }
  return out;
}

RatVec SimplexCoverData::translation(const DeckElement& k) const {
  RatVec t(n(), 0);
  for (std::size_t i = 0; i < k.size(); ++i)
    for (int j = 0; j < n(); ++j) t[j] += Rational(k[i]) * Rational(v[j][i]) / Rational(factors[i]);
  for (auto& x : t) x = mod_positive(x, 1);
  return t;
}

DeckElement SimplexCoverData::add(const DeckElement& a, const DeckElement& b) const {
  DeckElement out(factors.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const long f = factors[i].get_si();
    out[i] = ((a[i] + b[i]) % f + f) % f;
  }
  return out;
}

DeckElement SimplexCoverData::key(const ZVec& m) const {
  DeckElement out(factors.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < m.size(); ++j) s += u[i][j] * m[j];
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), s.get_mpz_t(), factors[i].get_mpz_t());
    out[i] = r.get_si();
  }
  return out;
}

SimplexCoverData simplex_cover(const std::vector<tropical::ZPoint>& b) {
  if (b.size() < 2) throw AssemblyError("a simplex needs at least two points");
  const std::size_t n = b[0].size();
  for (const auto& p : b)
    if (p.size() != n) throw AssemblyError("points of mixed dimension");
  SimplexCoverData d;
  d.b = b;
  for (std::size_t i = 1; i < b.size(); ++i) {
    ZVec row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = b[i][j] - b[0][j];
    d.diff.push_back(row);
  }
  const linalg::Smith s = linalg::smith(d.diff);
  if (s.factors.size() != d.diff.size()) throw AssemblyError("affinely dependent simplex");
  d.u = s.U;
  d.v = s.V;
  // make the diagonal positive by flipping rows of U
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    Integer f = s.factors[i];
    if (f < 0) {
      f = -f;
      for (auto& x : d.u[i]) x = -x;
    }
    d.factors.push_back(f);
    d.degree *= f;
  }
  const ZMat vinv = linalg::unimodular_inverse(s.V);
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    ZVec row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = d.factors[i] * vinv[i][j];
    d.xi_lattice.push_back(row);
  }
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    if (d.factors[i] == 1) continue;
    RatVec t(n);
    for (std::size_t j = 0; j < n; ++j) t[j] = mod_positive(Rational(d.v[j][i]) / Rational(d.factors[i]), 1);
    d.translations.push_back(t);
  }
  return d;
}

// ---- coefficients ----

Angle parse_pi_argument(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  for (const std::string suffix : {"*pi", "pi"})
    if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
      s.erase(s.size() - suffix.size());
      break;
    }
  if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos)
    throw AssemblyError("argument is not a rational multiple of pi: " + raw);
  if (s[0] == '+') s.erase(0, 1);
  try {
    return Angle(parse_rational(s));
  } catch (const std::invalid_argument&) {
    throw AssemblyError("argument is not a rational multiple of pi: " + raw);
  }
}

CoefficientData parse_coefficients(const std::vector<std::string>& args) {
  CoefficientData c;
  for (const auto& a : args) c.args.push_back(parse_pi_argument(a));
  return c;
}

CoefficientData generic_coefficients(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CoefficientData c;
  for (std::size_t i = 0; i < count; ++i) c.args.push_back(Angle(frac(static_cast<long>(rng() % 194), 97)));
  return c;
}

void CoefficientData::validate(std::size_t count) const {
  if (args.size() != count)
    throw AssemblyError("expected " + std::to_string(count) + " arguments, got " + std::to_string(args.size()));
  if (!weights.empty()) {
    if (weights.size() != count) throw AssemblyError("weights do not match the marked points");
    for (const auto& w : weights)
      if (w <= 0) throw AssemblyError("weights must be positive");
  }
}

CoefficientData CoefficientData::restrict_to(const std::vector<int>& idx) const {
  CoefficientData out;
  for (int i : idx) {
    out.args.push_back(args.at(i));
    if (!weights.empty()) out.weights.push_back(weights.at(i));
  }
  return out;
}

// ---- cover complex ----

int CoverComplex::act(int cell, const DeckElement& g) const {
  return poset.at(base_id[cell] + "@" + deck_str(scd.add(deck[cell], g)));
}

CoverComplex cover_complex(const SimplexCoverData& scd, const CoefficientData& coeffs) {
  const int n = scd.n();
  if (!scd.full_dimensional() || static_cast<int>(scd.b.size()) != n + 1)
    throw AssemblyError("cover complex needs a full-dimensional simplex");
  if (n < 1) throw AssemblyError("cover complex needs n >= 1");
  coeffs.validate(scd.b.size());
  const BaseW& bw = base_w(n);
  const auto& wp = bw.w.poset;
  const linalg::Mat dq = to_mat(scd.diff);
  RatVec r(n);
  for (int i = 0; i < n; ++i) r[i] = coeffs.args[i + 1].q() - coeffs.args[0].q();

  CoverComplex cc;
  cc.scd = scd;
  const auto elems = scd.deck_elements();
  std::map<DeckElement, int> eidx;
  for (std::size_t e = 0; e < elems.size(); ++e) eidx[elems[e]] = static_cast<int>(e);
  std::vector<RatVec> trans2;
  for (const auto& k : elems) {
    RatVec t = scd.translation(k);
    for (auto& x : t) x *= 2;
    trans2.push_back(t);
  }
  for (std::size_t c = 0; c < wp.size(); ++c) {
    RatVec w(n);
    for (int i = 0; i < n; ++i) w[i] = bw.rep[c][i] - r[i];
    const auto base_pt = linalg::solve(dq, w, n);
    if (!base_pt) throw AssemblyError("singular difference matrix");
    for (std::size_t e = 0; e < elems.size(); ++e) {
      cc.poset.add(wp.id(c) + "@" + deck_str(elems[e]), wp.rank(c));
      cc.base.push_back(bw.w.labels[c]);
      cc.base_id.push_back(wp.id(c));
      cc.deck.push_back(elems[e]);
      RatVec p(*base_pt);
      for (int i = 0; i < n; ++i) p[i] += trans2[e][i];
      cc.rep.push_back(mod2(p));
    }
  }
  const int per = static_cast<int>(elems.size());
  for (std::size_t c = 0; c < wp.size(); ++c)
    for (const auto& [d, m] : bw.faces[c]) {
      const DeckElement shift = scd.key(m);
      for (int e = 0; e < per; ++e)
        cc.poset.add_cover(d * per + eidx.at(scd.add(elems[e], shift)), static_cast<int>(c) * per + e);
    }
  cc.poset.finalize();
  return cc;
}

// ---- gluing ----

namespace {

// Parameters s in (0,1) with P + s (Q - P) = p mod 2.
std::vector<Rational> hits(const RatVec& P, const RatVec& Q, const RatVec& p) {
  const std::size_t n = P.size();
  RatVec d(n);
  std::size_t piv = n;
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = Q[j] - P[j];
    if (d[j] != 0 && piv == n) piv = j;
  }
  if (piv == n) throw AssemblyError("degenerate arc");
  std::vector<long> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] = ceil_q((std::min(P[j], Q[j]) - p[j]) / 2).get_num().get_si();
    hi[j] = floor_q((std::max(P[j], Q[j]) - p[j]) / 2).get_si();
    if (lo[j] > hi[j]) return {};
  }
  std::vector<Rational> out;
  std::vector<long> m(lo);
  while (true) {
    const Rational s = (p[piv] + 2 * m[piv] - P[piv]) / d[piv];
    bool ok = s > 0 && s < 1;
    for (std::size_t j = 0; ok && j < n; ++j) ok = P[j] + s * d[j] == p[j] + 2 * m[j];
    if (ok) out.push_back(s);
    std::size_t i = 0;
    while (i < n && m[i] >= hi[i]) m[i] = lo[i], ++i;
    if (i == n) break;
    ++m[i];
  }
  return out;
}

struct Arc {
  int cell;
  RatVec p, q;  // lifted endpoints
};

}  // namespace

GluedComplex glue(const tropical::MarkedPolytope& mp, const tropical::Lifting& eta, const CoefficientData& coeffs,
                  const std::vector<int>& order) {
  const int n = mp.n;
  if (mp.dim != n) throw AssemblyError("the marked polytope must be full-dimensional");
  coeffs.validate(mp.points.size());
  const tropical::Subdivision sub = tropical::regular_subdivision(mp, eta);
  if (!sub.triangulation) throw AssemblyError("the lifting does not induce a triangulation");

  GluedComplex g;
  for (int m : sub.maximal) g.simplices.push_back(sub.cells[m].marked);
  std::sort(g.simplices.begin(), g.simplices.end());
  const std::size_t ns = g.simplices.size();
  std::vector<int> proc(ns);
  std::iota(proc.begin(), proc.end(), 0);
  if (!order.empty()) {
    std::vector<int> chk(order);
    std::sort(chk.begin(), chk.end());
    if (chk != proc) throw AssemblyError("order is not a permutation of the simplices");
    proc = order;
  }
  if (ns > 1 && n > 2) throw AssemblyError("gluing several simplices is implemented for n <= 2");

  std::vector<std::future<CoverComplex>> jobs;
  for (const auto& s : g.simplices)
    jobs.push_back(std::async(std::launch::async, [&mp, &coeffs, s] {
      std::vector<tropical::ZPoint> b;
      for (int i : s) b.push_back(mp.points[i]);
      return cover_complex(simplex_cover(b), coeffs.restrict_to(s));
    }));
  std::vector<CoverComplex> cc;
  for (auto& j : jobs) cc.push_back(j.get());
  for (const auto& c : cc) g.covers.push_back(c.scd);

  // faces of codimension one and the simplices containing them
  std::map<std::vector<int>, std::vector<int>> owners;
  for (std::size_t s = 0; s < ns; ++s)
    for (int drop = 0; drop <= n; ++drop) {
      std::vector<int> f;
      for (int e = 0; e <= n; ++e)
        if (e != drop) f.push_back(g.simplices[s][e]);
      owners[f].push_back(static_cast<int>(s));
    }
  auto global_face = [&](std::size_t s, cyclic::Subset j) {
    std::vector<int> f;
    for (int e : cyclic::elements(j)) f.push_back(g.simplices[s][e]);
    return f;
  };
  const cyclic::Subset full = cyclic::full_set(n);
  auto shared = [&](const std::vector<int>& f) {
    auto it = owners.find(f);
    return n == 2 && it != owners.end() && it->second.size() == 2;
  };

  // target ids per (simplex, cell); empty string means "use the own id"
  std::vector<std::vector<std::vector<std::string>>> target(ns);
  std::vector<std::vector<char>> is_shared(ns);
  std::vector<std::pair<std::string, int>> extra_cells;
  std::vector<std::pair<std::string, std::string>> extra_covers;
  // vertices of one side lying inside an arc of the other: (vertex id, simplex, arc cell)
  std::vector<std::tuple<std::string, std::size_t, int>> inserted;
  for (std::size_t s = 0; s < ns; ++s) {
    const auto& c = cc[s];
    target[s].resize(c.poset.size());
    is_shared[s].assign(c.poset.size(), 0);
    for (std::size_t i = 0; i < c.poset.size(); ++i)
      target[s][i] = {"s" + marked_str(g.simplices[s]) + ":" + c.poset.id(i)};
  }

  const BaseW* bw = n >= 1 ? &base_w(n) : nullptr;
  for (const auto& [face, own] : owners) {
    if (!shared(face)) continue;
    const std::string tag = "E" + marked_str(face);
    std::map<std::string, RatVec> vpts;
    std::vector<std::vector<Arc>> arcs(2);
    for (int side = 0; side < 2; ++side) {
      const std::size_t s = own[side];
      const auto& c = cc[s];
      const linalg::Mat dq = to_mat(c.scd.diff);
      RatVec r(n);
      const CoefficientData loc = coeffs.restrict_to(g.simplices[s]);
      for (int i = 0; i < n; ++i) r[i] = loc.args[i + 1].q() - loc.args[0].q();
      for (std::size_t i = 0; i < c.poset.size(); ++i) {
        if (c.base[i].j == full || global_face(s, c.base[i].j) != face) continue;
        is_shared[s][i] = 1;
        if (c.poset.rank(i) == 0) {
          vpts[to_string(c.rep[i])] = c.rep[i];
          continue;
        }
        const int bc = bw->w.poset.at(c.base_id[i]);
        RatVec tr = c.scd.translation(c.deck[i]);
        std::vector<RatVec> ends;
        for (const auto& v : bw->verts[bc]) {
          RatVec w(n);
          for (int k = 0; k < n; ++k) w[k] = v[k] - r[k];
          RatVec p = *linalg::solve(dq, w, n);
          for (int k = 0; k < n; ++k) p[k] += 2 * tr[k];
          ends.push_back(p);
        }
        if (ends.size() != 2) throw AssemblyError("boundary arc with " + std::to_string(ends.size()) + " vertices");
        std::set<std::string> want, got{to_string(mod2(ends[0])), to_string(mod2(ends[1]))};
        for (int d : c.poset.down(i)) want.insert(to_string(c.rep[d]));
        if (want != got) throw AssemblyError("arc endpoints disagree with its faces in " + c.poset.id(i));
        arcs[side].push_back({static_cast<int>(i), ends[0], ends[1]});
      }
    }
    std::set<std::string> piece_keys[2];
    for (int side = 0; side < 2; ++side) {
      const std::size_t s = own[side];
      const auto& c = cc[s];
      std::map<std::string, int> cover_count;
      for (const auto& a : arcs[side]) {
        std::vector<std::pair<Rational, std::string>> cut{{0, to_string(mod2(a.p))}, {1, to_string(mod2(a.q))}};
        for (const auto& [key, pt] : vpts)
          for (const auto& sv : hits(a.p, a.q, pt)) {
            cut.push_back({sv, key});
            ++cover_count[key];
            inserted.emplace_back(tag + ":v:" + key, s, a.cell);
          }
        std::sort(cut.begin(), cut.end());
        std::vector<std::string> ids;
        for (std::size_t t = 0; t + 1 < cut.size(); ++t) {
          const Rational mid = (cut[t].first + cut[t + 1].first) / 2;
          RatVec mp2(n);
          for (int k = 0; k < n; ++k) mp2[k] = a.p[k] + mid * (a.q[k] - a.p[k]);
          const std::string id = tag + ":e:" + to_string(mod2(mp2));
          ids.push_back(id);
          piece_keys[side].insert(id);
          extra_covers.push_back({tag + ":v:" + cut[t].second, id});
          extra_covers.push_back({tag + ":v:" + cut[t + 1].second, id});
        }
        target[s][a.cell] = ids;
      }
      std::set<std::string> own_v;
      for (std::size_t i = 0; i < c.poset.size(); ++i)
        if (is_shared[s][i] && c.poset.rank(i) == 0 && global_face(s, c.base[i].j) == face) {
          own_v.insert(to_string(c.rep[i]));
          target[s][i] = {tag + ":v:" + to_string(c.rep[i])};
        }
      for (const auto& [key, pt] : vpts) {
        const int hitsn = cover_count.count(key) ? cover_count[key] : 0;
        if (own_v.count(key) ? hitsn != 0 : hitsn != 1)
          throw AssemblyError("point " + key + " over face " + tag + " is covered " + std::to_string(hitsn) +
                              " times by simplex " + marked_str(g.simplices[s]));
      }
    }
    if (piece_keys[0] != piece_keys[1]) {
      std::string diff;
      for (int side = 0; side < 2; ++side)
        for (const auto& k : piece_keys[side])
          if (!piece_keys[1 - side].count(k)) diff += " " + k;
      throw AssemblyError("representative mismatch over face " + tag + ":" + diff);
    }
    for (const auto& [key, pt] : vpts) extra_cells.push_back({tag + ":v:" + key, 0});
  }

  // quotient
  auto& q = g.quotient;
  auto ensure = [&](const std::string& id, int rank) {
    if (!q.find(id)) q.add(id, rank);
  };
  for (const auto& [id, rank] : extra_cells) ensure(id, rank);
  std::set<std::string> boundary_ids;
  std::map<std::pair<std::size_t, int>, int> src_of;
  for (int s : proc) {
    const auto& c = cc[s];
    for (std::size_t i = 0; i < c.poset.size(); ++i) {
      src_of[{s, static_cast<int>(i)}] = static_cast<int>(g.sources.size());
      for (const auto& id : target[s][i]) {
        ensure(id, c.poset.rank(i));
        if (c.base[i].j != full && !is_shared[s][i]) boundary_ids.insert(id);
      }
      const int src = static_cast<int>(g.sources.size());
      g.sources.push_back({g.simplices[s], c.base_id[i], c.deck[i]});
      g.source_to_quotient.push_back(q.at(target[s][i].front()));
      if (is_shared[s][i])
        for (const auto& id : target[s][i]) g.identifications[id].push_back(src);
    }
  }
  for (const auto& [id, s, cell] : inserted) g.identifications[id].push_back(src_of.at({s, cell}));
  for (int s : proc) {
    const auto& c = cc[s];
    for (std::size_t hi = 0; hi < c.poset.size(); ++hi)
      for (int lo : c.poset.down(hi)) {
        if (is_shared[s][lo] && is_shared[s][hi]) continue;
        for (const auto& a : target[s][lo])
          for (const auto& b : target[s][hi]) q.add_cover(a, b);
      }
  }
  for (const auto& [a, b] : extra_covers) q.add_cover(a, b);
  q.finalize();

  for (const auto& id : boundary_ids) g.boundary.push_back(q.at(id));
  std::sort(g.boundary.begin(), g.boundary.end());
  // connected components of the boundary subcomplex
  std::map<int, int> parent;
  for (int b : g.boundary) parent[b] = b;
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  for (int b : g.boundary)
    for (int d : q.down(b))
      if (parent.count(d)) parent[root(d)] = root(b);
  std::set<int> roots;
  for (int b : g.boundary) roots.insert(root(b));
  g.boundary_components = static_cast<int>(roots.size());

  g.euler = q.euler();
  try {
    g.homology = poset::cellular_homology(q);
  } catch (const std::exception& e) {
    std::string msg = e.what();
    for (std::size_t i = 0; i < q.size(); ++i)
      if (q.rank(i) == 1 && q.down(i).size() != 2) {
        msg += "\n  " + q.id(i) + " ->";
        for (int d : q.down(i)) msg += " " + q.id(d);
      }
    throw AssemblyError(msg);
  }
  if (n == 2) {
    const long long twice = 2 - g.euler - g.boundary_components;
    if (twice % 2 != 0 || twice < 0) throw AssemblyError("Euler characteristic incompatible with a surface");
    g.genus = static_cast<int>(twice / 2);
  }
  return g;
}

nlohmann::json GluedComplex::summary() const {
  nlohmann::json s;
  s["cells"] = quotient.size();
  s["f_vector"] = quotient.f_vector();
  s["euler"] = euler;
  s["betti"] = homology.betti;
  s["boundary_components"] = boundary_components;
  if (genus >= 0) s["genus"] = genus;
  nlohmann::json simp = nlohmann::json::array();
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    std::vector<std::string> deck;
    for (const auto& f : covers[i].deck()) deck.push_back(f.get_str());
    simp.push_back({{"marked", simplices[i]}, {"degree", covers[i].degree.get_str()}, {"deck", deck}});
  }
  s["simplices"] = simp;
  return s;
}

nlohmann::json GluedComplex::to_json() const {
  nlohmann::json j = summary();
  nlohmann::json cells = nlohmann::json::array();
  for (std::size_t i = 0; i < sources.size(); ++i)
    cells.push_back({{"simplex", sources[i].simplex},
                     {"base", sources[i].base},
                     {"deck", sources[i].deck},
                     {"quotient", quotient.id(source_to_quotient[i])}});
  j["source_cells"] = cells;
  j["identifications"] = identifications;
  j["quotient"] = nlohmann::json::parse(quotient.to_json());
  return j;
}

// ---- monodromy ----

std::pair<RatVec, RatVec> monodromy_point(const RatVec& x, const RatVec& theta) {
  if (x.size() != theta.size()) throw AssemblyError("dimension mismatch");
  RatVec t(theta.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = mod_positive(theta[i] + x[i], 1);
  return {x, t};
}

long monodromy_orbit_length(const RatVec& x, const RatVec& theta, long cap) {
  RatVec start(theta);
  for (auto& s : start) s = mod_positive(s, 1);
  RatVec cur = start;
  for (long k = 1; k <= cap; ++k) {
    cur = monodromy_point(x, cur).second;
    if (cur == start) return k;
  }
  return -1;
}

}  // namespace ptc::assembly
