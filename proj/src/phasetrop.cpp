#include "ptc/phasetrop.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ptc/coamoeba.hpp"
#include "ptc/tropical.hpp"

namespace ptc::phasetrop {

using cyclic::size_of;
using linalg::HSystem;
using linalg::VRep;

namespace {

int ground_n(const CyclicPartition& sigma) {
  int n = -1;
  for (Subset g = sigma.ground(); g; g >>= 1) ++n;
  return n;
}

bool subset_le(Subset a, Subset b) { return (a & ~b) == 0; }

const std::vector<Net>& all_nets(int n) {
  static std::map<int, std::vector<Net>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, nets::enumerate_nets(n)).first;
  return it->second;
}

RatVec average(const std::vector<RatVec>& pts) {
  RatVec x(pts.at(0).size(), 0);
  for (const auto& p : pts)
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += p[i];
  for (auto& c : x) c /= static_cast<long>(pts.size());
  return x;
}

}  // namespace

std::string TripleCell::str() const {
  return "(" + cyclic::subset_str(i) + "," + cyclic::subset_str(i_prime) + "," + tau.str() + ")";
}

bool triple_leq(const TripleCell& a, const TripleCell& b) {
  return subset_le(b.i, a.i) && subset_le(a.i_prime, b.i_prime) && nets::net_leq(a.tau, b.tau);
}

std::vector<TripleCell> psi_cells(const CyclicPartition& sigma, Subset j) {
  if (!cyclic::divides(sigma, j)) throw PhaseTropError("label not in W");
  const int n = ground_n(sigma);
  std::vector<TripleCell> out;
  for (const auto& tau : all_nets(n)) {
    if (!cyclic::refines(tau.sigma(), sigma)) continue;
    for (Subset i = j; i; i = (i - 1) & j) {
      if (size_of(i) < 2 || !tau.divides(i)) continue;
      const Subset free = j & ~i;
      for (Subset extra = free;; extra = (extra - 1) & free) {
        out.push_back({i, i | extra, tau});
        if (!extra) break;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const TripleCell& a, const TripleCell& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.str() < b.str();
  });
  return out;
}

PsiComplex build_psi(const CyclicPartition& sigma, Subset j) {
  PsiComplex out;
  out.host = {sigma, j};
  out.cells = psi_cells(sigma, j);
  const auto& cells = out.cells;
  const std::size_t m = cells.size();

  // net order table
  std::map<Net, int> net_index;
  for (const auto& c : cells) net_index.emplace(c.tau, 0);
  std::vector<const Net*> nets_used;
  for (auto& [net, idx] : net_index) {
    idx = static_cast<int>(nets_used.size());
    nets_used.push_back(&net);
  }
  const std::size_t nn = nets_used.size();
  std::vector<char> nleq(nn * nn);
  for (std::size_t a = 0; a < nn; ++a)
    for (std::size_t b = 0; b < nn; ++b) nleq[a * nn + b] = nets::net_leq(*nets_used[a], *nets_used[b]);
  std::vector<int> tidx(m);
  for (std::size_t a = 0; a < m; ++a) tidx[a] = net_index.at(cells[a].tau);
  auto leq = [&](std::size_t a, std::size_t b) {
    return subset_le(cells[b].i, cells[a].i) && subset_le(cells[a].i_prime, cells[b].i_prime) &&
           nleq[tidx[a] * nn + tidx[b]];
  };

  poset::FacePoset& p = out.complex.cells;
  for (const auto& c : cells) p.add(c.str(), c.dim());
  std::vector<std::vector<int>> covers(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || !leq(a, b)) continue;
      if (cells[b].dim() <= cells[a].dim()) throw PhaseTropError("triple order is not graded: " + cells[a].str());
      if (cells[b].dim() == cells[a].dim() + 1) {
        covers[a].push_back(static_cast<int>(b));
        p.add_cover(static_cast<int>(a), static_cast<int>(b));
      }
    }
  // every relation factors through a cover
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || cells[b].dim() < cells[a].dim() + 2 || !leq(a, b)) continue;
      bool through = false;
      for (int c : covers[a]) through = through || leq(static_cast<std::size_t>(c), b);
      if (!through) throw PhaseTropError("triple order skips a rank between " + cells[a].str() + " and " + cells[b].str());
    }
  p.finalize();
  out.complex.dim = p.max_rank();
  out.complex.pure = poset::check_pure(p, out.complex.dim);
  for (std::size_t a = 0; a < m; ++a)
    if (!(cells[a].label() == out.host)) out.boundary.push_back(static_cast<int>(a));
  return out;
}

MaximalType PsiComplex::type_of(int cell) const {
  const auto& c = cells.at(cell);
  if (c.dim() != complex.dim || c.i_prime != host.j || c.tau.sigma() != host.sigma) return MaximalType::Other;
  const std::size_t k = host.sigma.k();
  if (c.tau.l() == k && size_of(c.i) == 3) return MaximalType::TypeI;
  if (c.tau.l() + 1 == k && size_of(c.i) == 2) {
    // the two elements sit on opposite sides of the trapezoid, which the
    // shuffle merges into one block
    for (Subset b : c.tau.shuffle().blocks())
      if (subset_le(c.i, b)) return MaximalType::TypeII;
  }
  return MaximalType::Other;
}

nlohmann::json PsiComplex::to_json() const {
  nlohmann::json j;
  j["host"] = host.str();
  j["dim"] = complex.dim;
  j["pure"] = complex.pure;
  j["cells"] = nlohmann::json::array();
  for (const auto& c : cells)
    j["cells"].push_back({{"I", cyclic::subset_str(c.i)},
                          {"I_prime", cyclic::subset_str(c.i_prime)},
                          {"tau", c.tau.str()},
                          {"dim", c.dim()}});
  j["boundary"] = boundary;
  return j;
}

PsiHomology psi_complex_boundary_homology(const PsiComplex& psi, poset::Field f) {
  PsiHomology h;
  h.closed = poset::cellular_homology(psi.complex.cells, f);
  if (!psi.boundary.empty()) h.boundary = poset::cellular_homology(psi.complex.cells.induced(psi.boundary), f);
  return h;
}

bool triple_leq_geometric(const TripleCell& a, const TripleCell& b) {
  const int n = ground_n(a.tau.sigma());
  return tropical::face_P_incident(a.i, a.i_prime, b.i, b.i_prime, n) &&
         coamoeba::region_contains(coamoeba::TorusRegion::alcove(b.tau), coamoeba::TorusRegion::alcove(a.tau));
}

std::pair<RatVec, RatVec> sample_point(const TripleCell& c) {
  const int n = ground_n(c.tau.sigma());
  RatVec y = average(linalg::enumerate(tropical::face_P(c.i, c.i_prime, n)).vertices);
  RatVec theta = average(coamoeba::region_vertices(coamoeba::TorusRegion::alcove(c.tau)));
  return {y, theta};
}

StratumLabel ambient_label(const RatVec& y, const RatVec& theta) {
  Subset j = 0;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] > 0) j |= cyclic::bit(static_cast<int>(i));
  return {cyclic::partition_of_angles(theta, cyclic::full_set(static_cast<int>(theta.size()) - 1)), j};
}

LocalFan local_fan(const PsiComplex& psi, int vertex) {
  if (vertex < 0 || vertex >= static_cast<int>(psi.cells.size()) || psi.cells[vertex].dim() != 0)
    throw PhaseTropError("local fan needs a vertex of the complex");
  const auto& v = psi.cells[vertex];
  const int n = ground_n(psi.host.sigma);
  RatVec y = sample_point(v).first;
  LocalFan lf;
  lf.vertex = vertex;
  lf.incident = psi.complex.cells.upper_set(vertex);
  for (int c : lf.incident) {
    const auto& cell = psi.cells[c];
    // tangent cone of the closed face P_{I,I'} at y; alcoves are simplices
    HSystem face = tropical::face_P(cell.i, cell.i_prime, n);
    HSystem cone;
    cone.dim = face.dim;
    for (std::size_t r = 0; r < face.A.size(); ++r)
      if (linalg::dot(face.A[r], y) == face.b[r]) cone.le(face.A[r], 0);
    for (const auto& e : face.E) cone.eq(e, 0);
    lf.cone_dims.push_back(linalg::enumerate(cone).dimension() + cell.tau.rank());
  }
  return lf;
}

std::string local_fan_check(const PsiComplex& psi, int vertex) {
  LocalFan lf = local_fan(psi, vertex);
  const auto& v = psi.cells[vertex];
  const Subset j = psi.host.j;
  for (std::size_t k = 0; k < lf.incident.size(); ++k)
    if (lf.cone_dims[k] != psi.cells[lf.incident[k]].dim()) return "local cone of wrong dimension at " + psi.cells[lf.incident[k]].str();

  if (v.i == j) {
    const Subset minus = v.tau.sigma().block(0), plus = v.tau.sigma().block(1);
    std::set<Subset> seen, expected;
    for (int c : lf.incident) seen.insert(psi.cells[c].i);
    for (Subset i = j; i; i = (i - 1) & j)
      if ((i & minus) && (i & plus)) expected.insert(i);
    if (seen != expected) return "cones with non-empty fibers differ from the split sets";
    // I ordered by reverse inclusion against faces S x T of the product of
    // simplices on J & minus and J & plus
    poset::FacePoset fan, prod;
    const int top = size_of(j);
    for (Subset i : expected) fan.add(cyclic::subset_str(i), top - size_of(i));
    for (Subset i : expected)
      for (Subset i2 : expected)
        if (subset_le(i2, i) && size_of(i2) + 1 == size_of(i)) fan.add_cover(cyclic::subset_str(i), cyclic::subset_str(i2));
    fan.finalize();
    const Subset jm = j & minus, jp = j & plus;
    std::vector<std::pair<Subset, Subset>> faces;
    for (Subset s = jm; s; s = (s - 1) & jm)
      for (Subset t = jp; t; t = (t - 1) & jp) faces.emplace_back(s, t);
    auto id = [](Subset s, Subset t) { return cyclic::subset_str(s) + "x" + cyclic::subset_str(t); };
    const int pdim = size_of(jm) + size_of(jp) - 2;
    for (auto [s, t] : faces) prod.add(id(s, t), pdim - (size_of(s) + size_of(t) - 2));
    for (auto [s, t] : faces)
      for (auto [s2, t2] : faces)
        if (subset_le(s2, s) && subset_le(t2, t) && size_of(s2) + size_of(t2) + 1 == size_of(s) + size_of(t))
          prod.add_cover(id(s, t), id(s2, t2));
    prod.finalize();
    if (!poset::poset_isomorphic(fan, prod)) return "fan lattice is not dual to the product of simplices";
    return {};
  }

  // non-central: product with the orthant on J \ I
  PsiComplex small = build_psi(psi.host.sigma, v.i);
  auto sv = small.complex.cells.find(v.str());
  if (!sv) return "vertex missing from the smaller complex";
  auto inc_small = small.complex.cells.upper_set(*sv);
  const Subset free = j & ~v.i;
  if (lf.incident.size() != inc_small.size() * (std::size_t{1} << size_of(free))) return "incident cell count is not a product";
  std::map<std::pair<int, Subset>, int> image;
  for (int c : lf.incident) {
    const auto& cell = psi.cells[c];
    TripleCell base{cell.i, v.i, cell.tau};
    auto b = small.complex.cells.find(base.str());
    if (!b) return "cell " + cell.str() + " has no factor in the smaller complex";
    if (!image.emplace(std::make_pair(*b, cell.i_prime & ~v.i), c).second) return "product map is not injective";
  }
  for (const auto& [ka, a] : image)
    for (const auto& [kb, b] : image) {
      const bool prod_leq = small.complex.cells.leq(ka.first, kb.first) && subset_le(ka.second, kb.second);
      if (prod_leq != psi.complex.cells.leq(a, b)) return "product order differs at " + psi.cells[a].str();
    }
  return {};
}

// ---- cones ----

bool ConeModel::in_cone(const RatVec& v) const {
  for (const auto& g : dual_generators)
    if (linalg::dot(g, v) < 0) return false;
  return true;
}

RatVec ConeModel::pi(const RatVec& v) const {
  RatVec w = v;
  Rational s = linalg::dot(lambda_tilde, v);
  for (int i = 0; i < dim; ++i) w[i] -= s * v_tilde[i];
  return w;
}

namespace {

// lambda in the cone spanned by gens
bool in_span_cone(const std::vector<RatVec>& gens, const RatVec& lambda) {
  const std::size_t g = gens.size();
  HSystem h;
  h.dim = g;
  for (std::size_t i = 0; i < g; ++i) {
    RatVec e(g, 0);
    e[i] = 1;
    h.ge(e, 0);
  }
  for (std::size_t c = 0; c < lambda.size(); ++c) {
    RatVec row(g);
    for (std::size_t i = 0; i < g; ++i) row[i] = gens[i][c];
    h.eq(row, lambda[c]);
  }
  return !linalg::enumerate(h).empty();
}

// Extreme rays of the cone dual to the rays of R.
std::vector<RatVec> dual_rays(const ConeModel& c) {
  HSystem h;
  h.dim = c.dim;
  for (const auto& r : c.rays) h.ge(r, 0);
  return linalg::enumerate(h).rays;
}

}  // namespace

bool ConeModel::verify() const {
  if (linalg::dot(lambda_tilde, v_tilde) != 1) return false;
  for (const auto& g : dual_generators)
    if (linalg::dot(g, v_tilde) <= 0) return false;
  for (const auto& r : rays)
    if (linalg::dot(lambda_tilde, r) <= 0 || !in_cone(r)) return false;
  for (const auto& l : dual_rays(*this))
    if (!in_span_cone(dual_generators, l)) return false;
  return true;
}

ConeModel make_cone(int dim, std::vector<RatVec> dual_generators, RatVec v_tilde, RatVec lambda_tilde) {
  if (dim < 1 || dim > 6) throw PhaseTropError("cone dimension outside 1..6");
  ConeModel c;
  c.dim = dim;
  c.dual_generators = std::move(dual_generators);
  c.v_tilde = std::move(v_tilde);
  c.lambda_tilde = std::move(lambda_tilde);
  HSystem h;
  h.dim = dim;
  for (const auto& g : c.dual_generators) h.ge(g, 0);
  VRep v = linalg::enumerate(h);
  if (!v.lineality.empty()) throw PhaseTropError("cone is not pointed");
  c.rays = v.rays;
  if (!c.verify()) throw PhaseTropError("cone data is not a valid dual pair with interior vectors");
  return c;
}

namespace {

// Homogeneous coefficients (sum zero) or coordinates mod constants, as a
// vector in the chart x_0 = 0.
RatVec chart_functional(const RatVec& c) { return RatVec(c.begin() + 1, c.end()); }

}  // namespace

RatVec to_chart(const RatVec& x) {
  RatVec out;
  for (std::size_t i = 1; i < x.size(); ++i) out.push_back(x[i] - x[0]);
  return out;
}

ConeModel two_block_cone(Subset minus, Subset plus, int n) {
  if (!minus || !plus || (minus & plus) || (minus | plus) != cyclic::full_set(n))
    throw PhaseTropError("two-block cone needs a split of 0..n");
  std::vector<RatVec> gens;
  RatVec lt(n + 1, 0);
  const long pairs = static_cast<long>(size_of(minus)) * size_of(plus);
  for (int a : cyclic::elements(minus))
    for (int b : cyclic::elements(plus)) {
      RatVec c(n + 1, 0);
      c[b] = 1;
      c[a] = -1;
      gens.push_back(chart_functional(c));
      lt[b] += frac(1, pairs);
      lt[a] -= frac(1, pairs);
    }
  RatVec vt(n + 1, 0);
  for (int b : cyclic::elements(plus)) vt[b] = 1;
  return make_cone(n, gens, to_chart(vt), chart_functional(lt));
}

HSystem boundary_face(Subset minus, Subset plus, Subset i, int n) {
  if (!minus || !plus || (minus & plus) || (minus | plus) != cyclic::full_set(n))
    throw PhaseTropError("two-block cone needs a split of 0..n");
  HSystem h;
  h.dim = n;
  for (int a : cyclic::elements(minus))
    for (int b : cyclic::elements(plus)) {
      RatVec c(n + 1, 0);
      c[b] = 1;
      c[a] = -1;
      h.ge(chart_functional(c), 0);
    }
  auto el = cyclic::elements(i);
  for (std::size_t k = 1; k < el.size(); ++k) {
    RatVec e(n + 1, 0);
    e[el[k]] = 1;
    e[el[0]] = -1;
    h.eq(chart_functional(e), 0);
  }
  return h;
}

bool cone_tangent_total(const ConeModel& c, const RatVec& v, const RatVec& u) {
  if (!c.in_cone(v)) throw PhaseTropError("point outside the cone");
  // R-dual meets v-perp in a face, spanned by the generators vanishing on v
  bool pos = false, neg = false;
  for (const auto& l : c.dual_generators) {
    if (linalg::dot(l, v) != 0) continue;
    Rational s = linalg::dot(l, u);
    if (s == 0) return true;
    (s > 0 ? pos : neg) = true;
  }
  return pos && neg;
}

std::pair<RatVec, RatVec> psi_stretch(const ConeModel& c, const RatVec& v, const RatVec& u) {
  if (!cone_tangent_total(c, v, u)) throw PhaseTropError("pair is not in the total supporting tangent space");
  RatVec pu = c.pi(u);
  RatVec first = c.pi(v);
  Rational s = linalg::dot(c.lambda_tilde, u);
  for (int k = 0; k < c.dim; ++k) first[k] += s * pu[k];
  return {first, pu};
}

bool fiber_inequalities(const CyclicPartition& sigma, std::size_t start, std::size_t r, Subset i, const RatVec& u) {
  const std::size_t k = sigma.k();
  if (r < 1 || r >= k) throw PhaseTropError("split index outside 1..k-1");
  std::vector<int> minus_hits, plus_hits;  // one element per met block, in order
  for (std::size_t s = 0; s < k; ++s) {
    Subset met = sigma.block((start + s) % k) & i;
    if (!met) continue;
    (s < r ? minus_hits : plus_hits).push_back(cyclic::min_of(met));
  }
  if (minus_hits.empty() || plus_hits.empty()) throw PhaseTropError("I is not split by the two halves");
  return u[minus_hits.back()] >= u[plus_hits.front()] && u[plus_hits.back()] >= u[minus_hits.front()];
}

}  // namespace ptc::phasetrop
