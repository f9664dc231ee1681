#include "ptc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ptc/assembly.hpp"
#include "ptc/coamoeba.hpp"
#include "ptc/cyclic.hpp"
#include "ptc/nets.hpp"
#include "ptc/pants.hpp"
#include "ptc/phasetrop.hpp"
#include "ptc/poset.hpp"

namespace ptc::verify {

using cyclic::CyclicPartition;
using cyclic::StratumLabel;
using cyclic::Subset;
using nets::Net;

namespace {

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<long long> sphere_betti(int d) {
  if (d < 0) return {};
  if (d == 0) return {2};
  std::vector<long long> b(d + 1, 0);
  b[0] = b[d] = 1;
  return b;
}

std::string betti_str(const std::vector<long long>& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

void require_n(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi)
    throw VerifyError(std::string(what) + ": n must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
}

}  // namespace

void Check::expect(bool cond, const std::string& what) {
  if (!cond) failures.push_back(what);
}

void Check::merge(const std::string& key, const Check& sub) {
  results[key] = sub.results;
  for (const auto& f : sub.failures) failures.push_back(key + ": " + f);
}

nlohmann::json Report::to_json() const {
  return {{"suite", suite}, {"inputs", inputs}, {"results", check.results}, {"failures", check.failures},
          {"ok", ok()}};
}

// ---- alcoves ----

Check alcove_counts(int n) {
  require_n(n, 1, 6, "alcove_counts");
  Check c;
  const auto ch = coamoeba::enumerate_chambers(n);
  long in_z = 0;
  std::map<CyclicPartition, std::set<std::string>> per_sigma;
  for (const auto& x : ch) {
    if (!x.allowed) {
      ++in_z;
      continue;
    }
    const Net t = coamoeba::diameter_net(x.theta);
    c.expect(coamoeba::in_alcove(x.theta, t), "chamber point outside its alcove " + t.str());
    c.expect(t.sigma() == x.sigma, "diameter net disagrees with the chamber order");
    per_sigma[x.sigma].insert(t.str());
  }
  long maximal = 0;
  std::set<long> per_octahedron;
  for (const auto& s : cyclic::enumerate_cyclic_partitions(n)) {
    if (static_cast<int>(s.k()) != n + 1) continue;
    ++maximal;
    std::set<std::string> top;
    for (const auto& t : nets::nets_on(s))
      if (t.rank() == n) top.insert(t.str());
    c.expect(per_sigma[s] == top, "chambers and maximal nets differ on " + s.str());
    per_octahedron.insert(static_cast<long>(top.size()));
  }
  const long expect_per = (1L << n) - n - 1;
  c.results = {{"n", n},
               {"chambers", ch.size()},
               {"alcoves_in_zonotope", in_z},
               {"maximal_octahedra", maximal},
               {"alcoves_per_maximal_octahedron", std::vector<long>(per_octahedron.begin(), per_octahedron.end())}};
  c.expect(static_cast<long>(ch.size()) == factorial(n) * (1L << n), "chamber count");
  c.expect(in_z == factorial(n + 1), "alcoves in the zonotope");
  c.expect(maximal == factorial(n), "maximal octahedra");
  c.expect(per_octahedron == std::set<long>{expect_per}, "alcoves per maximal octahedron");
  c.expect(static_cast<long>(ch.size()) == in_z + maximal * expect_per, "chambers are zonotope plus octahedra");
  return c;
}

Check alcove_systems(int n, int samples, std::uint64_t seed) {
  require_n(n, 1, 5, "alcove_systems");
  Check c;
  std::mt19937_64 rng(seed);
  std::vector<AngleVector> pts;
  for (int s = 0; s < samples; ++s) {
    RatVec q(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
      const long den = 1 + static_cast<long>(rng() % 12);
      q[i] = frac(static_cast<long>(rng() % (2 * den)), den);
    }
    pts.emplace_back(q);
  }
  auto generic = [&](const AngleVector& t) {
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j)
        if (Rational(t[i].q() - t[j].q()).get_den() == 1) return false;
    return true;
  };
  long checks = 0, mismatch = 0, mismatch_generic = 0, only_pairwise = 0, only_lifted = 0, reference_lifted = 0;
  std::string first;
  for (const auto& tau : nets::enumerate_nets(n))
    for (const auto& t : pts) {
      ++checks;
      const bool a = coamoeba::in_alcove_lifted(t, tau);
      const bool b = coamoeba::in_alcove_pairwise(t, tau);
      if (a == b) continue;
      ++mismatch;
      (b ? only_pairwise : only_lifted) += 1;
      if (generic(t)) ++mismatch_generic;
      if (coamoeba::in_alcove(t, tau) == a) ++reference_lifted;
      if (first.empty()) first = tau.str() + " at " + t.str();
    }
  c.results = {{"n", n},
               {"samples_per_alcove", samples},
               {"comparisons", checks},
               {"mismatches", mismatch},
               {"mismatches_at_generic_points", mismatch_generic},
               {"pairwise_only", only_pairwise},
               {"lifted_only", only_lifted},
               {"mismatches_where_reference_sides_with_lifted", reference_lifted}};
  if (!first.empty()) c.results["first_mismatch"] = first;
  c.expect(mismatch == 0, std::to_string(mismatch) + " mismatches between the lifted and pairwise systems");
  return c;
}

// ---- W ----

Check w_lattice(int n) {
  require_n(n, 1, 5, "w_lattice");
  Check c;
  const auto w = cyclic::build_W_with_labels(n);
  const auto& p = w.poset;
  bool rank_ok = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& l = w.labels[i];
    rank_ok = rank_ok && l.in_W() && p.rank(i) == static_cast<int>(l.sigma.k()) + cyclic::size_of(l.j) - 4;
    if (p.down(i).empty()) rank_ok = rank_ok && p.rank(i) == 0;
  }
  c.expect(rank_ok, "rank formula or grading");
  const auto bad = poset::find_non_boolean_interval(p);
  c.expect(!bad, bad ? "non-Boolean interval " + p.id(bad->first) + " < " + p.id(bad->second) : "");
  const auto mx = p.maximal();
  std::set<std::vector<std::size_t>> shapes;
  std::set<std::pair<std::size_t, std::size_t>> corners;
  for (int m : mx) {
    const auto f = poset::lower_interval(p, p.id(m)).f_vector();
    shapes.insert(f);
    corners.insert({f.front(), f.size() >= 2 ? f[f.size() - 2] : 0});
  }
  nlohmann::json sh = nlohmann::json::array();
  for (const auto& s : shapes) sh.push_back(s);
  c.results = {{"n", n},
               {"size", p.size()},
               {"f_vector", p.f_vector()},
               {"euler", p.euler()},
               {"maximal_cells", mx.size()},
               {"boolean_intervals", !bad},
               {"maximal_lower_interval_f_vectors", sh}};
  c.expect(p.euler() == (n % 2 == 1 ? 1 : -1), "Euler characteristic");
  c.expect(static_cast<long>(mx.size()) == factorial(n), "number of maximal cells");
  if (n == 2) c.expect(shapes == std::set<std::vector<std::size_t>>{{6, 6, 1}}, "hexagon intervals");
  if (n == 3) {
    const std::pair<std::size_t, std::size_t> want{20, 8};
    c.expect(corners == std::set<std::pair<std::size_t, std::size_t>>{want}, "maximal intervals of n = 3");
  }
  return c;
}

Check w_interval_homology(int n, bool maximal_only) {
  require_n(n, 1, 4, "w_interval_homology");
  Check c;
  const auto p = cyclic::build_W(n);
  std::vector<int> cells;
  if (maximal_only) {
    cells = p.maximal();
  } else {
    for (std::size_t i = 0; i < p.size(); ++i) cells.push_back(static_cast<int>(i));
  }
  // Ranks over Fp bound rational ranks from below, so Fp betti numbers bound
  // rational ones from above. A sphere or point over Fp then forces the same
  // over Q: b_0 >= 1 and the Euler characteristic fixes the top degree.
  long bad = 0;
  for (int x : cells) {
    const auto closed = poset::order_complex_homology(poset::lower_interval(p, p.id(x)), poset::Field::Fp);
    const auto bd = poset::order_complex_homology(poset::open_lower_interval(p, p.id(x)), poset::Field::Fp);
    const bool ok = closed.betti == std::vector<long long>{1} && bd.betti == sphere_betti(p.rank(x) - 1);
    if (!ok && ++bad <= 5)
      c.failures.push_back(p.id(x) + ": closed " + betti_str(closed.betti) + " boundary " + betti_str(bd.betti));
  }
  c.results = {{"n", n}, {"cells_checked", cells.size()}, {"maximal_only", maximal_only}, {"bad_cells", bad}};
  return c;
}

// ---- incidence ----

Check incidence(int n) {
  require_n(n, 1, 4, "incidence");
  Check c;
  const auto labels = cyclic::enumerate_W(n);
  std::vector<coamoeba::LiftedSystem> sys;
  for (const auto& l : labels) sys.push_back(coamoeba::partial_octahedron_system(l.sigma, l.j));
  long pairs = 0, contained = 0, mismatch = 0;
  for (const auto& tau : nets::enumerate_nets(n)) {
    auto verts = coamoeba::region_vertices(coamoeba::TorusRegion::alcove(tau));
    RatVec bary(n + 1, 0);
    for (const auto& v : verts)
      for (int i = 0; i <= n; ++i) bary[i] += v[i];
    for (auto& x : bary) x /= static_cast<long>(verts.size());
    std::vector<AngleVector> probe{AngleVector(bary)};
    for (const auto& v : verts) probe.emplace_back(v);
    for (std::size_t li = 0; li < labels.size(); ++li) {
      ++pairs;
      bool geo = true;
      for (const auto& q : probe)
        if (!coamoeba::lifted_member(sys[li], q)) {
          geo = false;
          break;
        }
      const bool comb = coamoeba::alcove_in_partial_octahedron(tau, labels[li].sigma, labels[li].j);
      contained += geo;
      if (geo != comb && ++mismatch <= 5) c.failures.push_back(tau.str() + " in " + labels[li].str());
    }
  }
  c.results = {{"n", n}, {"pairs", pairs}, {"contained", contained}, {"mismatches", mismatch}};
  if (n == 4) {
    // five singleton blocks, four chords: among 2-sets only {1,4} is divided
    const Net ex = nets::make_net(CyclicPartition::parse("<0|1|2|3|4>"), {{0, 3}, {1, 3}, {1, 4}, {0, 2}});
    std::vector<std::string> divided;
    for (int a = 0; a <= 4; ++a)
      for (int b = a + 1; b <= 4; ++b)
        if (ex.divides(cyclic::bit(a) | cyclic::bit(b))) divided.push_back(cyclic::subset_str(cyclic::bit(a) | cyclic::bit(b)));
    c.results["example_net"] = ex.str();
    c.results["example_divided_pairs"] = divided;
    c.expect(divided == std::vector<std::string>{cyclic::subset_str(cyclic::subset_of({1, 4}))},
             "example net divides the wrong pairs");
  }
  return c;
}

// ---- complex side ----

Check pants_roundtrip(int n, bool geometric) {
  require_n(n, 1, 4, "pants_roundtrip");
  Check c;
  long bad = 0;
  const auto labels = cyclic::enumerate_W(n);
  for (const auto& l : labels) {
    const auto back = pants::classify(pants::witness(l));
    if (!(back == l) && ++bad <= 5) c.failures.push_back("witness of " + l.str() + " classifies as " + back.str());
  }
  const auto cp = pants::complex_poset(n, geometric);
  const bool iso = poset::poset_isomorphic(cp, cyclic::build_W(n)).has_value();
  c.results = {{"n", n},
               {"labels", labels.size()},
               {"roundtrip_failures", bad},
               {"order", geometric ? "geometric" : "closure_contains"},
               {"isomorphic_to_W", iso}};
  c.expect(iso, "complex-side poset is not isomorphic to W");
  return c;
}

// ---- phase tropical side ----

Check psi_collapse(int n, std::size_t budget) {
  require_n(n, 1, 4, "psi_collapse");
  Check c;
  long count = 0, collapsed = 0;
  std::size_t max_states = 0, max_cells = 0;
  for (const auto& l : cyclic::enumerate_W(n)) {
    const auto psi = phasetrop::build_psi(l.sigma, l.j);
    const auto r = poset::greedy_collapse(psi.complex, budget);
    ++count;
    max_states = std::max(max_states, r.states);
    max_cells = std::max(max_cells, psi.cells.size());
    if (r.ok())
      ++collapsed;
    else if (count - collapsed <= 5)
      c.failures.push_back(l.str() + (r.status == poset::CollapseResult::Status::Inconclusive ? " budget exhausted"
                                                                                              : " stuck"));
  }
  c.results = {{"n", n},
               {"strata", count},
               {"collapsed", collapsed},
               {"budget", budget},
               {"max_states", max_states},
               {"max_cells", max_cells}};
  return c;
}

Check psi_homology(int n) {
  require_n(n, 1, 4, "psi_homology");
  Check c;
  long count = 0, bad = 0;
  for (const auto& l : cyclic::enumerate_W(n)) {
    const auto psi = phasetrop::build_psi(l.sigma, l.j);
    const auto h = phasetrop::psi_complex_boundary_homology(psi);
    ++count;
    const bool ok = psi.complex.pure && psi.complex.dim == l.rank() && h.closed.betti == std::vector<long long>{1} &&
                    h.boundary.betti == sphere_betti(l.rank() - 1);
    if (!ok && ++bad <= 5)
      c.failures.push_back(l.str() + ": closed " + betti_str(h.closed.betti) + " boundary " + betti_str(h.boundary.betti));
  }
  c.results = {{"n", n}, {"strata", count}, {"bad", bad}};
  return c;
}

Check psi_label_poset(int n) {
  require_n(n, 1, 4, "psi_label_poset");
  Check c;
  const auto labels = cyclic::enumerate_W(n);
  std::map<StratumLabel, int> idx;
  poset::FacePoset p;
  for (const auto& l : labels) idx[l] = p.add("Psi" + l.str(), l.rank());
  long foreign = 0;
  for (const auto& l : labels) {
    std::set<StratumLabel> below;
    for (const auto& cell : phasetrop::psi_cells(l.sigma, l.j)) below.insert(cell.label());
    for (const auto& b : below) {
      auto it = idx.find(b);
      if (it == idx.end()) {
        ++foreign;
        continue;
      }
      if (b.rank() + 1 == l.rank()) p.add_cover(it->second, idx[l]);
    }
  }
  p.finalize();
  const bool iso = poset::poset_isomorphic(p, cyclic::build_W(n)).has_value();
  c.results = {{"n", n}, {"labels", labels.size()}, {"isomorphic_to_W", iso}, {"labels_outside_W", foreign}};
  c.expect(foreign == 0, "cells carry labels outside W");
  c.expect(iso, "strata poset is not isomorphic to W");
  return c;
}

Check stretch_map(int n, int pairs, std::uint64_t seed) {
  require_n(n, 2, 5, "stretch_map");
  Check c;
  std::mt19937_64 rng(seed);
  auto coef = [&](long range) { return frac(static_cast<long>(rng() % range), 1 + static_cast<long>(rng() % 12)); };
  long distinct = 0, collisions = 0, projection_bad = 0, cones = 0;
  nlohmann::json per = nlohmann::json::array();
  for (int r = 1; r <= n; ++r) {
    const Subset minus = cyclic::full_set(r - 1), plus = cyclic::full_set(n) & ~minus;
    const auto cone = phasetrop::two_block_cone(minus, plus, n);
    ++cones;
    c.expect(cone.verify(), "cone data for split " + std::to_string(r));
    const int target = (pairs + n - 1) / n;
    std::set<std::pair<RatVec, RatVec>> seen;
    std::map<std::pair<RatVec, RatVec>, std::pair<RatVec, RatVec>> images;
    int attempts = 0;
    while (static_cast<int>(seen.size()) < target && attempts < 50 * target) {
      ++attempts;
      const RatVec& facet = cone.dual_generators[rng() % cone.dual_generators.size()];
      RatVec v(n, 0);
      for (const auto& ray : cone.rays) {
        if (linalg::dot(facet, ray) != 0) continue;
        const Rational a = coef(41);
        for (int k = 0; k < n; ++k) v[k] += ray[k] * a;
      }
      RatVec lam(n, 0);
      for (const auto& g : cone.dual_generators)
        if (linalg::dot(g, v) == 0 && rng() % 2)
          for (int k = 0; k < n; ++k) lam[k] += g[k];
      if (lam == RatVec(n, 0)) lam = facet;
      RatVec u(n);
      for (auto& x : u) x = coef(61) - 3;
      const Rational s = linalg::dot(lam, u) / linalg::dot(lam, cone.v_tilde);
      for (int k = 0; k < n; ++k) u[k] -= s * cone.v_tilde[k];
      if (!phasetrop::cone_tangent_total(cone, v, u)) {
        c.failures.push_back("sampler produced a non-tangent pair");
        break;
      }
      if (!seen.insert({v, u}).second) continue;
      const auto img = phasetrop::psi_stretch(cone, v, u);
      if (img.second != cone.pi(u)) ++projection_bad;
      if (!images.emplace(img, std::make_pair(v, u)).second) ++collisions;
    }
    distinct += static_cast<long>(seen.size());
    per.push_back({{"minus", cyclic::subset_str(minus)}, {"plus", cyclic::subset_str(plus)}, {"pairs", seen.size()}});
  }
  c.results = {{"n", n},          {"cones", per},          {"pairs", distinct},
               {"collisions", collisions}, {"projection_violations", projection_bad}};
  c.expect(distinct >= pairs, "only " + std::to_string(distinct) + " distinct pairs sampled");
  c.expect(collisions == 0, std::to_string(collisions) + " collisions");
  c.expect(projection_bad == 0, "second coordinate differs from the projection");
  return c;
}

// ---- covers and gluing ----

Check covers(int n, std::uint64_t seed) {
  require_n(n, 1, 3, "covers");
  Check c;
  std::mt19937_64 rng(seed);
  long simplices = 0, complexes = 0;
  nlohmann::json degrees = nlohmann::json::array();
  while (simplices < 20) {
    std::vector<tropical::ZPoint> b(n + 1, tropical::ZPoint(n));
    for (auto& p : b)
      for (auto& x : p) x = static_cast<long>(rng() % 6) - 2;
    linalg::Mat d;
    for (int i = 1; i <= n; ++i) {
      RatVec row;
      for (int j = 0; j < n; ++j) row.push_back(Rational(b[i][j] - b[0][j]));
      d.push_back(row);
    }
    const Rational det = abs(linalg::det(d));
    if (det == 0 || det > 12) continue;
    ++simplices;
    const auto s = assembly::simplex_cover(b);
    degrees.push_back(s.degree.get_si());
    std::vector<RatVec> rp;
    for (const auto& p : b) rp.push_back(tropical::to_rat(p));
    c.expect(Rational(s.degree) == det, "degree differs from the determinant");
    c.expect(Rational(s.degree) == tropical::normalized_volume(rp), "degree differs from the normalized volume");
    Integer prod = 1;
    for (const auto& f : s.deck()) prod *= f;
    c.expect(prod == s.degree, "deck factors do not multiply to the degree");
    std::set<RatVec> group;
    for (const auto& k : s.deck_elements()) {
      const RatVec t = s.translation(k);
      group.insert(t);
      for (int i = 0; i < n; ++i) {
        Rational v = 0;
        for (int j = 0; j < n; ++j) v += d[i][j] * t[j];
        c.expect(v.get_den() == 1, "deck translation outside the dual lattice");
      }
    }
    c.expect(Rational(static_cast<long>(group.size())) == det, "deck translations are not distinct");
    if (s.degree <= 6) {
      ++complexes;
      const auto cc = assembly::cover_complex(s, assembly::generic_coefficients(n + 1, rng()));
      const auto w = cyclic::build_W(n);
      c.expect(cc.poset.size() == w.size() * s.degree.get_ui(), "cover cell count");
      c.expect(cc.poset.euler() == w.euler() * s.degree.get_si(), "Euler characteristic of the cover");
      for (const auto& g : s.deck_elements()) {
        if (std::all_of(g.begin(), g.end(), [](long x) { return x == 0; })) continue;
        for (std::size_t i = 0; i < cc.poset.size(); ++i)
          if (cc.act(static_cast<int>(i), g) == static_cast<int>(i)) c.failures.push_back("deck element fixes a cell");
      }
    }
  }
  if (n == 2) {
    const auto a = assembly::simplex_cover({{1, 0}, {0, 1}, {2, 3}});
    const auto b = assembly::simplex_cover({{0, 0}, {2, 0}, {0, 2}});
    c.expect(a.degree == 4 && a.deck() == std::vector<Integer>{4}, "Z/4 example");
    c.expect(b.degree == 4 && b.deck() == std::vector<Integer>{2, 2}, "Z/2 x Z/2 example");
  }
  c.results = {{"n", n}, {"simplices", simplices}, {"cover_complexes", complexes}, {"degrees", degrees}};
  return c;
}

std::pair<int, int> lattice_point_counts(const tropical::MarkedPolytope& mp) {
  if (mp.n != 2 || mp.dim != 2) throw VerifyError("lattice_point_counts needs a polygon");
  const auto pts = mp.rat_points();
  long lo[2] = {mp.points[0][0], mp.points[0][1]}, hi[2] = {lo[0], lo[1]};
  for (const auto& p : mp.points)
    for (int i = 0; i < 2; ++i) lo[i] = std::min(lo[i], p[i]), hi[i] = std::max(hi[i], p[i]);
  // a lattice point off the boundary is at distance >= 1/(width) from it
  const Rational eps = frac(1, 4 * (hi[0] - lo[0] + hi[1] - lo[1] + 1));
  int interior = 0, boundary = 0;
  for (long x = lo[0]; x <= hi[0]; ++x)
    for (long y = lo[1]; y <= hi[1]; ++y) {
      if (!tropical::in_hull(pts, {Rational(x), Rational(y)})) continue;
      bool inner = true;
      for (int i = 0; i < 2 && inner; ++i)
        for (int sgn : {-1, 1}) {
          RatVec q{Rational(x), Rational(y)};
          q[i] += sgn * eps;
          inner = inner && tropical::in_hull(pts, q);
        }
      ++(inner ? interior : boundary);
    }
  return {interior, boundary};
}

namespace {

Check certify_curve(const tropical::MarkedPolytope& mp, const tropical::Lifting& eta,
                    const assembly::CoefficientData& coeffs) {
  Check c;
  const auto g = assembly::glue(mp, eta, coeffs);
  const auto [interior, boundary] = lattice_point_counts(mp);
  const Rational vol = tropical::normalized_volume(mp.rat_points());
  c.results = g.summary();
  c.results["pick"] = {{"interior", interior}, {"boundary", boundary}, {"twice_area", vol.get_str()}};
  c.expect(Rational(static_cast<long>(-g.euler)) == vol, "Euler characteristic differs from -2 Area");
  c.expect(g.genus == interior, "genus differs from the interior point count");
  c.expect(g.boundary_components == boundary, "boundary components differ from the boundary point count");
  c.expect(g.homology.betti == std::vector<long long>{1, 2LL * interior + boundary - 1}, "homology");
  std::vector<int> order(g.simplices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(order.size() - 1 - i);
  const auto h = assembly::glue(mp, eta, coeffs, order);
  const bool iso = poset::poset_isomorphic(g.quotient, h.quotient).has_value();
  c.results["order_independent"] = iso;
  c.expect(iso, "reversed gluing order gives a different poset");
  return c;
}

}  // namespace

Check glue_example() {
  Check c;
  const auto mp = tropical::example_points();
  const auto eta = tropical::example_lifting();
  const auto s = tropical::regular_subdivision(mp, eta);
  std::set<std::vector<tropical::ZPoint>> cells, oracle;
  for (int m : s.maximal) {
    std::vector<tropical::ZPoint> pts;
    for (int i : s.cells[m].marked) pts.push_back(mp.points[i]);
    cells.insert(pts);
  }
  for (const auto& t : tropical::lower_hull_oracle(mp, eta)) {
    if (static_cast<int>(t.size()) != 3) continue;
    std::vector<tropical::ZPoint> pts;
    for (int i : t) pts.push_back(mp.points[i]);
    if (tropical::affine_dim(tropical::MarkedPolytope::make(pts).rat_points()) == 2) oracle.insert(pts);
  }
  const std::set<std::vector<tropical::ZPoint>> want{{{0, 0}, {0, 1}, {1, 0}}, {{0, 1}, {1, 0}, {2, 3}}};
  std::set<std::vector<tropical::ZPoint>> sorted_cells;
  for (auto v : cells) {
    std::sort(v.begin(), v.end());
    sorted_cells.insert(v);
  }
  std::set<std::vector<tropical::ZPoint>> sorted_oracle;
  for (auto v : oracle) {
    std::sort(v.begin(), v.end());
    sorted_oracle.insert(v);
  }
  c.expect(s.triangulation && sorted_cells == want, "subdivision");
  c.expect(sorted_oracle == want, "lower hull oracle");
  const auto h = tropical::tropical_hypersurface(mp, eta, s);
  const long vertices = static_cast<long>(h.count(0, false)), bounded = static_cast<long>(h.count(1, true));
  const long rays = static_cast<long>(h.count(1, false)) - bounded;
  c.expect(vertices == 2 && bounded == 1 && rays == 4, "tropical curve shape");
  std::vector<std::string> degrees, decks;
  for (int m : s.maximal) {
    std::vector<tropical::ZPoint> pts;
    for (int i : s.cells[m].marked) pts.push_back(mp.points[i]);
    const auto sc = assembly::simplex_cover(pts);
    degrees.push_back(sc.degree.get_str());
    std::string d;
    for (const auto& f : sc.deck()) d += (d.empty() ? "Z/" : " x Z/") + f.get_str();
    decks.push_back(d.empty() ? "trivial" : d);
  }
  std::sort(degrees.begin(), degrees.end());
  std::sort(decks.begin(), decks.end());
  c.expect(degrees == std::vector<std::string>{"1", "4"}, "simplex degrees");
  c.expect(decks == std::vector<std::string>{"Z/4", "trivial"}, "deck groups");
  const Check cert = certify_curve(mp, eta, assembly::generic_coefficients(mp.points.size(), 31));
  c.merge("glued", cert);
  c.results["tropical"] = {{"vertices", vertices}, {"bounded_edges", bounded}, {"rays", rays}};
  c.results["degrees"] = degrees;
  c.results["deck_groups"] = decks;
  c.expect(cert.results["euler"] == -5 && cert.results["genus"] == 1 && cert.results["boundary_components"] == 5,
           "chi, g, b of the glued curve");
  return c;
}

Check glue_battery(std::uint64_t seed) {
  Check c;
  const std::vector<std::vector<tropical::ZPoint>> polys{
      {{0, 0}, {1, 0}, {0, 1}, {1, 1}},
      {{0, 0}, {2, 0}, {0, 2}},
      {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}},
      {{1, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}, {0, 1}, {1, 1}},
      {{0, 0}, {3, 0}, {0, 2}, {1, 1}},
      {{0, 0}, {3, 1}, {1, 3}, {-1, 1}},
      {{0, 0}, {2, 0}, {0, 2}, {1, 0}, {0, 1}, {1, 1}},
      {{0, 0}, {4, 1}, {1, 2}},
  };
  std::mt19937_64 rng(seed);
  long unimodular = 0, non_unimodular = 0;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    const auto mp = tropical::MarkedPolytope::make(polys[k]);
    tropical::Lifting eta;
    bool found = false;
    for (int attempt = 0; attempt < 500 && !found; ++attempt) {
      eta.clear();
      for (std::size_t i = 0; i < mp.points.size(); ++i) eta.push_back(Rational(static_cast<long>(rng() % 64)));
      found = tropical::regular_subdivision(mp, eta).triangulation;
    }
    if (!found) {
      c.failures.push_back("no triangulating lifting for polygon " + std::to_string(k));
      continue;
    }
    const Check cert = certify_curve(mp, eta, assembly::generic_coefficients(mp.points.size(), rng()));
    bool uni = true;
    for (const auto& s : cert.results["simplices"]) uni = uni && s["degree"] == "1";
    (uni ? unimodular : non_unimodular) += 1;
    c.merge("polygon_" + std::to_string(k), cert);
  }
  c.results["polygons"] = polys.size();
  c.results["unimodular"] = unimodular;
  c.results["non_unimodular"] = non_unimodular;
  c.expect(unimodular >= 1 && non_unimodular >= 1, "battery lacks a mix of unimodular and non-unimodular cases");
  return c;
}

// ---- suites ----

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"alcoves",        "covers",       "glue",         "incidence",
                                              "pants-roundtrip", "psi-collapse", "psi-homology", "stretch-map",
                                              "w-lattice"};
  return names;
}

int default_max_n(const std::string& suite) {
  static const std::map<std::string, int> m{{"alcoves", 5},        {"covers", 3},       {"glue", 2},
                                            {"incidence", 4},      {"pants-roundtrip", 4}, {"psi-collapse", 3},
                                            {"psi-homology", 3},   {"stretch-map", 4},  {"w-lattice", 5}};
  auto it = m.find(suite);
  if (it == m.end()) throw VerifyError("unknown suite: " + suite);
  return it->second;
}

Report run_suite(const std::string& suite, const Options& o) {
  int cap = default_max_n(suite);
  if (auto it = o.max_n.find(suite); it != o.max_n.end()) cap = it->second;
  const bool sized = suite != "glue";  // glue works on fixed plane polygons
  if (sized && o.n > cap)
    throw VerifyError("n = " + std::to_string(o.n) + " exceeds the budget for " + suite + " (max " + std::to_string(cap) +
                      ")");
  if (o.n < 1) throw VerifyError("n must be positive");
  Report r;
  r.suite = suite;
  r.inputs = {{"seed", o.seed}};
  if (sized) r.inputs["n"] = o.n;
  const auto t0 = std::chrono::steady_clock::now();
  Check& c = r.check;
  if (suite == "w-lattice") {
    c.merge("lattice", w_lattice(o.n));
    if (o.n <= 4) c.merge("interval_homology", w_interval_homology(o.n, o.n == 4));
  } else if (suite == "alcoves") {
    r.inputs["samples"] = o.samples;
    c.merge("counts", alcove_counts(o.n));
    if (o.n <= 4) c.merge("systems", alcove_systems(o.n, o.samples, o.seed));
  } else if (suite == "incidence") {
    c.merge("incidence", incidence(o.n));
  } else if (suite == "pants-roundtrip") {
    c.merge("pants", pants_roundtrip(o.n, o.n <= 3));
  } else if (suite == "psi-collapse") {
    r.inputs["budget"] = o.budget;
    c.merge("collapse", psi_collapse(o.n, o.budget));
  } else if (suite == "psi-homology") {
    c.merge("homology", psi_homology(o.n));
    c.merge("label_poset", psi_label_poset(o.n));
  } else if (suite == "stretch-map") {
    r.inputs["pairs"] = o.pairs;
    c.merge("stretch", stretch_map(std::max(o.n, 2), o.pairs, o.seed));
  } else if (suite == "covers") {
    c.merge("covers", covers(o.n, o.seed));
  } else if (suite == "glue") {
    if (o.example == "plane-curve" || o.example == "paper-3.1") {  // alias
      r.inputs["example"] = o.example;
      c.merge("example", glue_example());
    } else if (o.example.empty()) {
      c.merge("battery", glue_battery(o.seed));
    } else {
      throw VerifyError("unknown example: " + o.example);
    }
  } else {
    throw VerifyError("unknown suite: " + suite);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<Report> run_suites(const std::vector<std::string>& suites, const Options& o) {
  std::vector<std::string> sorted(suites);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& s : sorted) default_max_n(s);  // reject unknown names before starting
  std::vector<std::future<Report>> jobs;
  for (const auto& s : sorted) jobs.push_back(std::async(std::launch::async, [s, o] { return run_suite(s, o); }));
  std::vector<Report> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace ptc::verify
