#include "ptc/pants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ptc::pants {

using cyclic::bit;
using cyclic::elements;

Q2 Q2::operator/(const Q2& o) const {
  Rational n2 = o.x * o.x + o.y * o.y;
  if (n2 == 0) throw PantsError("division by zero Gaussian rational");
  return {(x * o.x + y * o.y) / n2, (y * o.x - x * o.y) / n2};
}

std::string Q2::str() const { return "(" + to_string(x) + "," + to_string(y) + ")"; }

Rational cross(const Q2& a, const Q2& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Q2& a, const Q2& b) { return a.x * b.x + a.y * b.y; }
bool same_ray(const Q2& a, const Q2& b) { return cross(a, b) == 0 && dot(a, b) > 0; }
bool antipodal(const Q2& a, const Q2& b) { return cross(a, b) == 0 && dot(a, b) < 0; }

namespace {
int half(const Q2& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }
}  // namespace

bool angle_less(const Q2& a, const Q2& b) {
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

Q2 ray_representative(const Q2& v) {
  if (v.zero()) throw PantsError("zero vector has no ray");
  Rational m = std::max<Rational>(abs(v.x), abs(v.y));
  return {v.x / m, v.y / m};
}

Q2 unit_circle(const std::optional<Rational>& t) {
  if (!t) return {-1, 0};
  const Rational& s = *t;
  Rational d = 1 + s * s;
  return {(1 - s * s) / d, 2 * s / d};
}

Q2 rotate(const Q2& v, const Rational& t) { return v * unit_circle(t); }

PolygonPoint::PolygonPoint(std::vector<Q2> edges, std::map<int, Q2> dirs) : edges_(std::move(edges)) {
  const int m = static_cast<int>(edges_.size());
  if (m < 2) throw PantsError("polygon point needs at least two edges");
  Q2 sum;
  int nonzero = 0;
  for (int i = 0; i < m; ++i) {
    sum = sum + edges_[i];
    if (!edges_[i].zero()) {
      ++nonzero;
      continue;
    }
    auto it = dirs.find(i);
    if (it == dirs.end() || it->second.zero())
      throw PantsError("zero edge " + std::to_string(i) + " has no recorded direction");
    dirs_[i] = it->second;
  }
  if (!sum.zero()) throw PantsError("edges do not close up");
  if (nonzero < 2) throw PantsError("a closed circuit needs at least two non-zero edges");
}

Q2 PolygonPoint::direction(int i) const {
  const Q2& e = edges_.at(i);
  return e.zero() ? dirs_.at(i) : e;
}

namespace {

nlohmann::json q2_json(const Q2& v) {
  return nlohmann::json::array({v.x.get_num().get_str(), v.x.get_den().get_str(), v.y.get_num().get_str(),
                                v.y.get_den().get_str()});
}

Q2 q2_from(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) throw PantsError("expected [xn,xd,yn,yd]");
  auto num = [&](std::size_t i) {
    return j[i].is_string() ? Integer(j[i].get<std::string>()) : Integer(j[i].get<long>());
  };
  Rational x(num(0), num(1)), y(num(2), num(3));
  x.canonicalize();
  y.canonicalize();
  return {x, y};
}

}  // namespace

nlohmann::json PolygonPoint::to_json() const {
  nlohmann::json j;
  j["edges"] = nlohmann::json::array();
  for (const auto& e : edges_) j["edges"].push_back(q2_json(e));
  j["dirs"] = nlohmann::json::object();
  for (const auto& [i, d] : dirs_) j["dirs"][std::to_string(i)] = q2_json(d);
  return j;
}

PolygonPoint PolygonPoint::from_json(const nlohmann::json& j) {
  std::vector<Q2> edges;
  for (const auto& e : j.at("edges")) edges.push_back(q2_from(e));
  std::map<int, Q2> dirs;
  if (j.contains("dirs"))
    for (const auto& [k, v] : j.at("dirs").items()) dirs[std::stoi(k)] = q2_from(v);
  return PolygonPoint(edges, dirs);
}

bool same_shape(const PolygonPoint& a, const PolygonPoint& b) {
  if (a.edges().size() != b.edges().size()) return false;
  std::optional<Q2> c;
  for (std::size_t i = 0; i < a.edges().size(); ++i) {
    const Q2 &ea = a.edges()[i], &eb = b.edges()[i];
    if (ea.zero() != eb.zero()) return false;
    if (ea.zero()) continue;
    if (!c) c = eb / ea;
    if (!(ea * *c == eb)) return false;
  }
  for (const auto& [i, d] : a.dirs())
    if (!same_ray(d * *c, b.dirs().at(i))) return false;
  return true;
}

StratumLabel classify(const PolygonPoint& p) {
  const int m = p.n() + 1;
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return angle_less(p.direction(a), p.direction(b)); });
  std::vector<Subset> blocks;
  for (std::size_t t = 0; t < idx.size(); ++t) {
    if (t > 0 && same_ray(p.direction(idx[t]), p.direction(idx[t - 1])))
      blocks.back() |= bit(idx[t]);
    else
      blocks.push_back(bit(idx[t]));
  }
  StratumLabel l{CyclicPartition(blocks), 0};
  for (int i = 0; i < m; ++i)
    if (!p.edges()[i].zero()) l.j |= bit(i);
  if (!l.in_W()) throw PantsError("classify: point outside every stratum");
  return l;
}

PolygonPoint witness(const StratumLabel& label) {
  if (!label.in_W()) throw PantsError("witness: " + label.str() + " is not in W");
  const auto& sigma = label.sigma;
  const int k = static_cast<int>(sigma.k());
  std::vector<int> jb;
  for (int s = 0; s < k; ++s)
    if (sigma.block(s) & label.j) jb.push_back(s);
  const int r = static_cast<int>(jb.size());
  // fraction of the full turn for every block; J-blocks equally spaced
  std::vector<Rational> turn(k);
  for (int t = 0; t < r; ++t) {
    const int a = jb[t], b = t + 1 < r ? jb[t + 1] : jb[0] + k;
    const Rational lo = frac(t, r), step = frac(1, r) / (b - a);
    for (int s = a; s < b; ++s) turn[s % k] = lo + step * (s - a);
  }
  std::vector<Q2> dir(k);
  for (int s = 0; s < k; ++s) {
    if (turn[s] == frac(1, 2)) {
      dir[s] = unit_circle(std::nullopt);
    } else {
      const double tn = std::tan(M_PI * turn[s].get_d());
      dir[s] = unit_circle(frac(static_cast<long>(std::llround(tn * 4096)), 4096));
    }
  }
  std::vector<Rational> len(k, 0);
  for (int s : jb) len[s] = 1;
  if (r >= 3) {
    Q2 sum;
    for (int s : jb) sum = sum + dir[s];
    const Q2 target = Q2{0, 0} - sum;
    if (!target.zero()) {
      bool done = false;
      for (int t = 0; t < r && !done; ++t) {
        const Q2 &u = dir[jb[t]], &v = dir[jb[(t + 1) % r]];
        if (cross(u, target) < 0 || cross(target, v) < 0) continue;
        const Rational det = cross(u, v);
        len[jb[t]] += cross(target, v) / det;
        len[jb[(t + 1) % r]] += cross(u, target) / det;
        done = true;
      }
      if (!done) throw std::logic_error("witness: J-directions do not span positively");
    }
  }
  std::vector<Q2> edges(sigma.ground() ? 32 - __builtin_clz(sigma.ground()) : 0);
  std::map<int, Q2> dirs;
  for (int s = 0; s < k; ++s) {
    const Subset js = sigma.block(s) & label.j;
    const int cnt = cyclic::size_of(js);
    for (int e : elements(sigma.block(s))) {
      if (js & bit(e))
        edges[e] = dir[s] * (len[s] / cnt);
      else
        dirs[e] = dir[s];
    }
  }
  PolygonPoint p(edges, dirs);
  if (!(classify(p) == label)) throw std::logic_error("witness: round trip failed for " + label.str());
  return p;
}

std::vector<Q2> arg_map(const PolygonPoint& p) {
  std::vector<Q2> out;
  for (int i = 0; i <= p.n(); ++i) out.push_back(ray_representative(p.direction(i)));
  return out;
}

bool directions_allowed(const std::vector<Q2>& dirs) {
  // allowed iff no gap between angularly consecutive distinct rays exceeds pi
  std::vector<Q2> d;
  for (const auto& v : dirs) d.push_back(ray_representative(v));
  std::sort(d.begin(), d.end(), angle_less);
  d.erase(std::unique(d.begin(), d.end()), d.end());
  if (d.size() < 2) return false;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (cross(d[i], d[(i + 1) % d.size()]) < 0) return false;
  return true;
}

bool closure_contains(const StratumLabel& outer, const StratumLabel& inner) {
  if (!outer.in_W() || !inner.in_W()) throw PantsError("closure_contains: label not in W");
  return cyclic::label_leq(inner, outer);
}

namespace {

Rational sup_distance(const PolygonPoint& a, const PolygonPoint& b) {
  Rational d = 0;
  for (std::size_t i = 0; i < a.edges().size(); ++i) {
    const Q2 v = a.edges()[i] - b.edges()[i];
    d = std::max<Rational>(d, std::max<Rational>(abs(v.x), abs(v.y)));
  }
  return d;
}

}  // namespace

std::optional<Deformation> deform(const StratumLabel& outer, const StratumLabel& inner, int levels) {
  if (!outer.in_W() || !inner.in_W()) throw PantsError("deform: label not in W");
  if (outer.sigma.ground() != inner.sigma.ground()) return std::nullopt;
  if ((inner.j & ~outer.j) != 0) return std::nullopt;  // non-zero edges stay non-zero nearby
  const PolygonPoint p = witness(inner);
  const int m = p.n() + 1;
  const auto& os = outer.sigma;
  const auto& is = inner.sigma;
  const int ko = static_cast<int>(os.k());
  // every outer block must sit inside one inner block (directions are continuous)
  std::vector<int> host(ko);
  for (int s = 0; s < ko; ++s) {
    host[s] = is.block_of(cyclic::min_of(os.block(s)));
    if ((os.block(s) & ~is.block(host[s])) != 0) return std::nullopt;
  }
  // rank of each outer block inside its host, counted from the start of its run
  std::vector<Rational> offset(ko);
  for (int b = 0; b < static_cast<int>(is.k()); ++b) {
    std::vector<int> members;
    int start = -1;
    for (int s = 0; s < ko; ++s)
      if (host[s] == b) {
        members.push_back(s);
        if (start < 0 && host[(s + ko - 1) % ko] != b) start = s;
      }
    if (start < 0) start = members.front();
    int rank = 0;
    for (int t = 0; t < ko; ++t) {
      const int s = (start + t) % ko;
      if (host[s] != b) continue;
      offset[s] = frac(2 * rank - static_cast<long>(members.size()) + 1, 2);
      ++rank;
    }
  }
  std::vector<Q2> base_dir(is.k());
  std::vector<Rational> base_len(m, 0);
  for (int i = 0; i < m; ++i) {
    const int b = is.block_of(i);
    base_dir[b] = p.direction(i);
  }
  for (int i = 0; i < m; ++i) {
    const Q2& e = p.edges()[i];
    if (e.zero()) continue;
    const Q2& d = base_dir[is.block_of(i)];
    base_len[i] = d.x != 0 ? e.x / d.x : e.y / d.y;
  }
  // inner block that absorbs the closure defect
  int absorber = -1;
  for (int b = 0; b < static_cast<int>(is.k()) && absorber < 0; ++b)
    if (is.block(b) & inner.j) absorber = b;

  Deformation out{p, {}, {}};
  for (int level = 1; level <= levels; ++level) {
    const Rational eps = frac(1, 1L << (3 * level));
    const Rational eps2 = eps * eps, eta = eps2 * eps;
    std::vector<Q2> edges(m), dirs(m);
    for (int i = 0; i < m; ++i) {
      const int s = os.block_of(i);
      dirs[i] = rotate(base_dir[host[s]], offset[s] * eps2);
      if (inner.j & bit(i))
        edges[i] = dirs[i] * base_len[i];
      else if (outer.j & bit(i))
        edges[i] = dirs[i] * eta;
    }
    Q2 r;
    for (const auto& e : edges) r = r + e;
    // v -> alpha v + c <v,d> d_perp on the absorbing block fixes the sum
    const Q2 d = base_dir[absorber];
    const Q2 dp{-d.y, d.x};
    const Rational n2 = dot(d, d);
    Q2 S;
    for (int i = 0; i < m; ++i)
      if (is.block_of(i) == absorber) S = S + edges[i];
    const Rational s_par = dot(S, d) / n2, s_perp = dot(S, dp) / n2;
    const Rational r_par = dot(r, d) / n2, r_perp = dot(r, dp) / n2;
    const Rational alpha = 1 - r_par / s_par;
    if (alpha <= 0) return std::nullopt;
    const Rational c = (s_perp - r_perp - alpha * s_perp) / s_par;
    auto M = [&](const Q2& v) { return v * alpha + dp * (c * dot(v, d) / n2); };
    std::map<int, Q2> zero_dirs;
    for (int i = 0; i < m; ++i) {
      if (is.block_of(i) == absorber) {
        edges[i] = M(edges[i]);
        dirs[i] = M(dirs[i]);
      }
      if (edges[i].zero()) zero_dirs[i] = dirs[i];
    }
    PolygonPoint x(edges, zero_dirs);
    if (!(classify(x) == outer)) return std::nullopt;
    out.distances.push_back(sup_distance(x, p));
    out.path.push_back(std::move(x));
  }
  return out;
}

bool closure_contains_geometric(const StratumLabel& outer, const StratumLabel& inner) {
  auto d = deform(outer, inner, 3);
  if (!d) return false;
  // distances must shrink towards zero
  for (std::size_t t = 1; t < d->distances.size(); ++t)
    if (d->distances[t] != 0 && d->distances[t] * 4 > d->distances[t - 1]) return false;
  return d->distances.back() < frac(1, 100);
}

bool is_convex_circuit(const PolygonPoint& p) {
  std::vector<Q2> e;
  for (const auto& v : p.edges())
    if (!v.zero()) e.push_back(v);
  std::sort(e.begin(), e.end(), angle_less);
  // merge parallel runs into single sides
  std::vector<Q2> sides;
  for (const auto& v : e) {
    if (!sides.empty() && same_ray(sides.back(), v))
      sides.back() = sides.back() + v;
    else
      sides.push_back(v);
  }
  if (sides.size() < 3) return false;
  for (std::size_t i = 0; i < sides.size(); ++i)
    if (cross(sides[i], sides[(i + 1) % sides.size()]) <= 0) return false;
  return true;
}

poset::FacePoset complex_poset(int n, bool geometric) {
  auto w = cyclic::build_W_with_labels(n);
  poset::FacePoset f;
  for (const auto& l : w.labels) f.add("Phi" + l.str(), l.rank());
  for (std::size_t a = 0; a < w.labels.size(); ++a)
    for (std::size_t b = 0; b < w.labels.size(); ++b) {
      if (w.labels[b].rank() != w.labels[a].rank() + 1) continue;
      const bool in = geometric ? closure_contains_geometric(w.labels[b], w.labels[a])
                                : closure_contains(w.labels[b], w.labels[a]);
      if (in) f.add_cover(static_cast<int>(a), static_cast<int>(b));
    }
  f.finalize();
  return f;
}

std::string to_svg(const PolygonPoint& p) {
  std::vector<int> idx;
  for (int i = 0; i <= p.n(); ++i) idx.push_back(i);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return angle_less(p.direction(a), p.direction(b)); });
  std::vector<std::pair<double, double>> pts{{0, 0}};
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (int i : idx) {
    auto [x, y] = pts.back();
    x += p.edges()[i].x.get_d();
    y += p.edges()[i].y.get_d();
    pts.emplace_back(x, y);
    minx = std::min(minx, x), maxx = std::max(maxx, x), miny = std::min(miny, y), maxy = std::max(maxy, y);
  }
  const double span = std::max({maxx - minx, maxy - miny, 1e-9});
  const double scale = 360.0 / span;
  auto X = [&](double x) { return 20 + (x - minx) * scale; };
  auto Y = [&](double y) { return 380 - (y - miny) * scale; };
  std::ostringstream os;
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\">\n";
  os << "<polygon fill=\"#eef\" stroke=\"#223\" points=\"";
  for (std::size_t t = 0; t + 1 < pts.size(); ++t) os << X(pts[t].first) << "," << Y(pts[t].second) << " ";
  os << "\"/>\n";
  for (std::size_t t = 0; t < idx.size(); ++t) {
    const double mx = (pts[t].first + pts[t + 1].first) / 2, my = (pts[t].second + pts[t + 1].second) / 2;
    os << "<text x=\"" << X(mx) << "\" y=\"" << Y(my) << "\" font-size=\"14\">z" << idx[t] << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ptc::pants
