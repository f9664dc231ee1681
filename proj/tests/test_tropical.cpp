#include <random>
#include <set>

#include "doctest.h"
#include "ptc/tropical.hpp"

using namespace ptc;
using namespace ptc::tropical;
using cyclic::full_set;
using cyclic::subset_of;

namespace {

std::set<std::vector<int>> maximal_sets(const Subdivision& s) {
  std::set<std::vector<int>> out;
  for (int i : s.maximal) out.insert(s.cells[i].marked);
  return out;
}

MarkedPolytope square() { return MarkedPolytope::make({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

MarkedPolytope random_config(std::mt19937& rng, int n, int m, int box) {
  std::set<ZPoint> pts;
  while (static_cast<int>(pts.size()) < m) {
    ZPoint p(n);
    for (auto& c : p) c = static_cast<long>(rng() % box);
    pts.insert(p);
  }
  return MarkedPolytope::make({pts.begin(), pts.end()});
}

Lifting random_lifting(std::mt19937& rng, std::size_t m, int range) {
  Lifting eta;
  for (std::size_t i = 0; i < m; ++i) eta.push_back(frac(static_cast<long>(rng() % range), 1 + static_cast<long>(rng() % 3)));
  return eta;
}

}  // namespace

TEST_CASE("marked polytopes") {
  auto mp = MarkedPolytope::make({{0, 0}, {2, 0}, {0, 2}, {1, 1}, {1, 0}});
  CHECK(mp.dim == 2);
  CHECK(mp.hull == std::vector<int>{0, 1, 2});
  CHECK(MarkedPolytope::make({{0, 0}, {2, 2}}).dim == 1);
  CHECK_THROWS_AS(MarkedPolytope::make({}), TropicalError);
  CHECK_THROWS_AS(MarkedPolytope::make({{0, 0}, {0, 0}}), TropicalError);
  CHECK(normalized_volume(square().rat_points()) == 2);
  CHECK(normalized_volume(example_points().rat_points()) == 5);
}

TEST_CASE("unit square subdivisions") {
  auto mp = square();
  auto flat = regular_subdivision(mp, {0, 0, 0, 0});
  CHECK(flat.maximal.size() == 1);
  CHECK_FALSE(flat.triangulation);
  CHECK(flat.cells.size() == 9);  // 4 vertices, 4 edges, the square
  CHECK(check_subdivision_axioms(mp, flat).empty());

  auto bent = regular_subdivision(mp, {0, 0, 0, 1});
  CHECK(bent.triangulation);
  CHECK(maximal_sets(bent) == std::set<std::vector<int>>{{0, 1, 2}, {1, 2, 3}});
  CHECK(check_subdivision_axioms(mp, bent).empty());
}

TEST_CASE("two-triangle worked example") {
  auto mp = example_points();
  auto eta = example_lifting();
  auto s = regular_subdivision(mp, eta);
  CHECK(s.triangulation);
  CHECK(maximal_sets(s) == std::set<std::vector<int>>{{0, 1, 2}, {1, 2, 3}});
  auto oracle = lower_hull_oracle(mp, eta);
  CHECK(std::set<std::vector<int>>(oracle.begin(), oracle.end()) == maximal_sets(s));
  CHECK(check_subdivision_axioms(mp, s).empty());

  auto h = tropical_hypersurface(mp, eta, s);
  CHECK(h.count(0) == 2);
  CHECK(h.count(1) == 5);
  CHECK(h.count(1, true) == 1);
  CHECK(h.count(1) - h.count(1, true) == 4);
  CHECK(verify_order_reversing(s, h));
  for (const auto& f : h.faces) {
    CHECK(f.dim == 2 - s.cells[f.cell].dim);
    // every face point attains the max on exactly its dual marked set
    for (const auto& v : f.vrep.vertices) {
      Rational top = tropical_polynomial(mp, eta, v);
      for (int a : s.cells[f.cell].marked) CHECK(linalg::dot(to_rat(mp.points[a]), v) - eta[a] == top);
    }
  }
  auto j = h.to_json(mp, s);
  CHECK(j["faces"].size() == 7);
  auto svg = to_svg(mp, s, h);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("firebrick") != std::string::npos);
}

TEST_CASE("simplex gives the tropical hyperplane") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<ZPoint> pts{ZPoint(n, 0)};
    for (int i = 0; i < n; ++i) {
      ZPoint e(n, 0);
      e[i] = 1;
      pts.push_back(e);
    }
    auto mp = MarkedPolytope::make(pts);
    Lifting eta(pts.size(), 0);
    auto s = regular_subdivision(mp, eta);
    auto h = tropical_hypersurface(mp, eta, s);
    CHECK(verify_order_reversing(s, h));
    CHECK(static_cast<int>(h.faces.size()) == (1 << (n + 1)) - n - 2);
    for (const auto& f : h.faces) {
      // point 0 plays x_0 = 0; lift the cone into R^{n+1} with x_0 = 0
      cyclic::Subset idx = 0;
      for (int a : s.cells[f.cell].marked) idx |= 1U << a;
      auto cone = linalg::enumerate(cone_P(idx, n));
      auto lift = [](const RatVec& v) {
        RatVec w{0};
        w.insert(w.end(), v.begin(), v.end());
        return w;
      };
      auto sys = cone_P(idx, n);
      for (const auto& v : f.vrep.vertices) CHECK(sys.contains(lift(v)));
      for (const auto& r : f.vrep.rays) CHECK(sys.contains(lift(r)));
      CHECK(cone.dimension() == f.dim);
    }
  }
  auto single = MarkedPolytope::make({{3, 1}});
  auto s = regular_subdivision(single, {0});
  CHECK(s.cells.size() == 1);
  CHECK(tropical_hypersurface(single, {0}, s).faces.empty());
}

TEST_CASE("production subdivision agrees with the lower hull oracle") {
  std::mt19937 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = trial % 3 == 2 ? 3 : 2;
    const int m = n + 1 + static_cast<int>(rng() % (n == 3 ? 4 : 6));
    auto mp = random_config(rng, n, m, n == 3 ? 3 : 4);
    auto eta = random_lifting(rng, mp.points.size(), trial % 2 ? 3 : 50);
    auto s = regular_subdivision(mp, eta);
    auto oracle = lower_hull_oracle(mp, eta);
    CHECK(std::set<std::vector<int>>(oracle.begin(), oracle.end()) == maximal_sets(s));
    CHECK_MESSAGE(check_subdivision_axioms(mp, s).empty(), check_subdivision_axioms(mp, s));
    if (mp.dim != n) continue;
    auto h = tropical_hypersurface(mp, eta, s);
    CHECK(verify_order_reversing(s, h));
    if (!s.triangulation) continue;
    ++checked;
    // vertices of the hypersurface match maximal simplices; bounded edges
    // match interior codimension-one cells
    CHECK(h.count(0) == static_cast<int>(s.maximal.size()));
    int interior = 0;
    for (const auto& c : s.cells) {
      if (c.dim != n - 1) continue;
      int cofaces = 0;
      for (int i : s.maximal)
        if (std::includes(s.cells[i].marked.begin(), s.cells[i].marked.end(), c.marked.begin(), c.marked.end()))
          ++cofaces;
      if (cofaces == 2) ++interior;
    }
    CHECK(h.count(1, true) == interior);
    for (const auto& f : h.faces) CHECK(f.dim == n - s.cells[f.cell].dim);
  }
  CHECK(checked > 10);
}

TEST_CASE("lower-dimensional configurations") {
  auto mp = MarkedPolytope::make({{0, 0}, {1, 1}, {3, 3}});
  auto s = regular_subdivision(mp, {0, 1, 0});
  CHECK(maximal_sets(s) == std::set<std::vector<int>>{{0, 2}});
  s = regular_subdivision(mp, {0, -1, 0});
  CHECK(maximal_sets(s) == std::set<std::vector<int>>{{0, 1}, {1, 2}});
  CHECK(check_subdivision_axioms(mp, s).empty());
  auto h = tropical_hypersurface(mp, {0, -1, 0}, s);
  for (const auto& f : h.faces) {
    CHECK(f.dim == 1);
    CHECK(f.vrep.lineality.size() == 1);
  }
}

TEST_CASE("tropical hyperplane cones and compactified faces") {
  auto c = linalg::enumerate(cone_P(subset_of({0, 1}), 2));
  CHECK(c.dimension() == 1);
  CHECK(cone_P(subset_of({0, 1}), 2).contains({0, 0, -1}));
  CHECK_FALSE(cone_P(subset_of({0, 1}), 2).contains({0, 0, 1}));
  auto vertex = linalg::enumerate(cone_P(full_set(3), 3));
  CHECK(vertex.bounded());
  CHECK(vertex.vertices.size() == 1);
  CHECK(vertex.vertices[0] == RatVec(4, 0));
  CHECK_THROWS_AS(cone_P(subset_of({1}), 2), TropicalError);
  CHECK_THROWS_AS(face_P(subset_of({1}), subset_of({1, 2}), 2), TropicalError);
  CHECK_THROWS_AS(face_P(subset_of({0, 1}), subset_of({1, 2}), 2), TropicalError);

  for (int n = 1; n <= 5; ++n)
    for (cyclic::Subset ip = 1; ip <= full_set(n); ++ip)
      for (cyclic::Subset i = ip; i; i = (i - 1) & ip) {
        if (cyclic::size_of(i) < 2) continue;
        CHECK(face_P_dim(i, ip, n) == cyclic::size_of(ip) - cyclic::size_of(i));
      }
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::pair<cyclic::Subset, cyclic::Subset>> faces;
    for (cyclic::Subset ip = 1; ip <= full_set(n); ++ip)
      for (cyclic::Subset i = ip; i; i = (i - 1) & ip)
        if (cyclic::size_of(i) >= 2) faces.emplace_back(i, ip);
    for (auto [i, ip] : faces)
      for (auto [k, kp] : faces) {
        const bool comb = (k & ~i) == 0 && (ip & ~kp) == 0;
        CHECK(face_P_incident(i, ip, k, kp, n) == comb);
      }
  }
}

TEST_CASE("moment maps") {
  CHECK(moment_simplex({1, 1, 1}) == RatVec{frac(1, 3), frac(1, 3), frac(1, 3)});
  CHECK(moment_simplex({3, 1, 1}) == RatVec{frac(3, 5), frac(1, 5), frac(1, 5)});
  auto mp = example_points();
  CHECK(moment_mu(mp, {1, 1, 1, 1}) == RatVec{frac(3, 4), 1});
  CHECK(moment_mu_at(mp, 2, {0, 0}) == RatVec{frac(3, 4), 1});
  CHECK_THROWS_AS(moment_simplex({1, 0}), TropicalError);
  // images land in the relative interior of Q
  std::mt19937 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    RatVec w;
    for (int i = 0; i < 4; ++i) w.push_back(frac(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 5)));
    auto p = moment_mu(mp, w);
    CHECK(in_hull(mp.rat_points(), p));
    CHECK(p[1] > 0);
    CHECK(p[1] > frac(3, 2) * p[0] - frac(3, 2));
  }
  // a large base pushes the image toward the dominating point
  auto far = moment_mu_at(mp, 10, {1, 1});
  CHECK(far[0] > frac(19, 10));
}

TEST_CASE("lattice of vanishing differences") {
  CHECK(lattice_N(example_points()).empty());
  auto seg = MarkedPolytope::make({{0, 0}, {1, 0}});
  auto n1 = lattice_N(seg);
  REQUIRE(n1.size() == 1);
  CHECK(((n1[0][0] == 0) && abs(n1[0][1]) == 1));
  CHECK(saturation_index(seg) == 1);
  auto diag = MarkedPolytope::make({{0, 0}, {2, 2}});
  auto n2 = lattice_N(diag);
  REQUIRE(n2.size() == 1);
  CHECK(n2[0][0] == -n2[0][1]);
  CHECK(abs(n2[0][0]) == 1);
  CHECK(saturation_index(diag) == 2);
  CHECK(saturation_index(example_points()) == 1);
}
