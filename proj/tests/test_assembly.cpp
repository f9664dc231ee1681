#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "ptc/assembly.hpp"
#include "ptc/coamoeba.hpp"

using namespace ptc;
using namespace ptc::assembly;
using tropical::MarkedPolytope;
using tropical::ZPoint;

namespace {

long det2(const std::vector<ZPoint>& b) {
  const long a = b[1][0] - b[0][0], c = b[1][1] - b[0][1];
  const long d = b[2][0] - b[0][0], e = b[2][1] - b[0][1];
  return std::labs(a * e - c * d);
}

// Lattice points of a polygon, split into interior and boundary by probing
// small axis moves.
std::pair<int, int> pick_counts(const MarkedPolytope& mp) {
  const auto pts = mp.rat_points();
  long lo[2] = {mp.points[0][0], mp.points[0][1]}, hi[2] = {lo[0], lo[1]};
  for (const auto& p : mp.points)
    for (int i = 0; i < 2; ++i) lo[i] = std::min(lo[i], p[i]), hi[i] = std::max(hi[i], p[i]);
  const Rational eps = frac(1, 1000 * (hi[0] - lo[0] + hi[1] - lo[1] + 1));
  int interior = 0, boundary = 0;
  for (long x = lo[0]; x <= hi[0]; ++x)
    for (long y = lo[1]; y <= hi[1]; ++y) {
      if (!tropical::in_hull(pts, {x, y})) continue;
      bool inner = true;
      for (int i = 0; i < 2; ++i)
        for (int sgn : {-1, 1}) {
          RatVec q{Rational(x), Rational(y)};
          q[i] += sgn * eps;
          inner = inner && tropical::in_hull(pts, q);
        }
      ++(inner ? interior : boundary);
    }
  return {interior, boundary};
}

tropical::Lifting triangulating_lifting(const MarkedPolytope& mp, std::mt19937& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    tropical::Lifting eta;
    for (std::size_t i = 0; i < mp.points.size(); ++i) eta.push_back(Rational(static_cast<long>(rng() % 60)));
    if (tropical::regular_subdivision(mp, eta).triangulation) return eta;
  }
  throw std::runtime_error("no triangulating lifting found");
}

}  // namespace

TEST_CASE("simplex covers") {
  auto unit = simplex_cover({{0, 0}, {1, 0}, {0, 1}});
  CHECK(unit.degree == 1);
  CHECK(unit.deck().empty());

  auto c4 = simplex_cover({{1, 0}, {0, 1}, {2, 3}});
  CHECK(c4.degree == 4);
  REQUIRE(c4.deck().size() == 1);
  CHECK(c4.deck()[0] == 4);

  auto c22 = simplex_cover({{0, 0}, {2, 0}, {0, 2}});
  CHECK(c22.degree == 4);
  CHECK(c22.deck() == std::vector<Integer>{2, 2});

  CHECK_THROWS_AS(simplex_cover({{0, 0}, {1, 1}, {2, 2}}), AssemblyError);
  CHECK_THROWS_AS(simplex_cover({{0, 0}, {1}}), AssemblyError);

  // segment of lattice length 3 inside the plane
  auto seg = simplex_cover({{0, 0}, {3, 6}});
  CHECK(seg.degree == 3);
  CHECK_FALSE(seg.full_dimensional());
}

TEST_CASE("degree is the determinant and the deck group is the dual lattice mod 1") {
  std::mt19937 rng(7);
  int tested = 0;
  while (tested < 25) {
    std::vector<ZPoint> b(3, ZPoint(2));
    for (auto& p : b)
      for (auto& c : p) c = static_cast<long>(rng() % 5);
    const long det = det2(b);
    if (det == 0) continue;
    ++tested;
    auto s = simplex_cover(b);
    CHECK(s.degree == det);
    CHECK(Rational(s.degree) == tropical::normalized_volume(tropical::MarkedPolytope::make(b).rat_points()));
    Integer prod = 1;
    for (const auto& f : s.deck()) prod *= f;
    CHECK(prod == s.degree);
    // oracle: points x in [0,1)^2 on the grid (1/det) Z^2 with D x integral
    std::set<RatVec> oracle;
    for (long i = 0; i < det; ++i)
      for (long j = 0; j < det; ++j) {
        RatVec x{frac(i, det), frac(j, det)};
        bool integral = true;
        for (std::size_t r = 1; r < 3; ++r) {
          Rational v = Rational(b[r][0] - b[0][0]) * x[0] + Rational(b[r][1] - b[0][1]) * x[1];
          integral = integral && v.get_den() == 1;
        }
        if (integral) oracle.insert(x);
      }
    std::set<RatVec> mine;
    for (const auto& k : s.deck_elements()) mine.insert(s.translation(k));
    CHECK(mine == oracle);
    CHECK(static_cast<long>(mine.size()) == det);
  }
}

TEST_CASE("pi arguments") {
  CHECK(parse_pi_argument("1/3").q() == frac(1, 3));
  CHECK(parse_pi_argument("5/2 pi").q() == frac(1, 2));
  CHECK(parse_pi_argument("-1/4*pi").q() == frac(7, 4));
  for (const char* bad : {"sqrt(2)", "0.5", "e", "", "pi", "1/0"})
    CHECK_THROWS_AS(parse_pi_argument(bad), AssemblyError);
  CoefficientData c = parse_coefficients({"0", "1/2", "1/3"});
  CHECK_NOTHROW(c.validate(3));
  CHECK_THROWS_AS(c.validate(4), AssemblyError);
  c.weights = {1, 2, 0};
  CHECK_THROWS_AS(c.validate(3), AssemblyError);
}

TEST_CASE("cover complexes") {
  SUBCASE("degree one is W") {
    for (int n = 1; n <= 3; ++n) {
      std::vector<ZPoint> b(n + 1, ZPoint(n, 0));
      for (int i = 0; i < n; ++i) b[i + 1][i] = 1;
      auto cc = cover_complex(simplex_cover(b), generic_coefficients(n + 1, n));
      CHECK(poset::poset_isomorphic(cc.poset, cyclic::build_W(n)).has_value());
    }
  }
  SUBCASE("degree four") {
    for (auto b : std::vector<std::vector<ZPoint>>{{{1, 0}, {0, 1}, {2, 3}}, {{0, 0}, {2, 0}, {0, 2}}}) {
      auto cc = cover_complex(simplex_cover(b), generic_coefficients(3, 11));
      CHECK(cc.poset.f_vector() == std::vector<std::size_t>{24, 36, 8});
      CHECK(cc.poset.euler() == -4);
      auto h = poset::cellular_homology(cc.poset);
      // connected surface with chi = -4
      CHECK(h.betti == std::vector<long long>{1, 5});
    }
  }
  SUBCASE("deck action is free and preserves the order") {
    auto cc = cover_complex(simplex_cover({{0, 0}, {2, 0}, {0, 2}}), generic_coefficients(3, 2));
    for (const auto& g : cc.scd.deck_elements()) {
      const bool identity = std::all_of(g.begin(), g.end(), [](long x) { return x == 0; });
      for (std::size_t i = 0; i < cc.poset.size(); ++i) {
        const int j = cc.act(static_cast<int>(i), g);
        if (!identity) CHECK(j != static_cast<int>(i));
        for (int d : cc.poset.down(i)) {
          const auto& dn = cc.poset.down(j);
          CHECK(std::find(dn.begin(), dn.end(), cc.act(d, g)) != dn.end());
        }
      }
    }
  }
  SUBCASE("representatives map into their base regions") {
    const std::vector<ZPoint> b{{1, 0}, {0, 1}, {2, 3}};
    const auto coeffs = parse_coefficients({"1/5", "3/7", "-2/3"});
    auto cc = cover_complex(simplex_cover(b), coeffs);
    // lifts of one base cell sit at distinct torus points
    std::set<std::pair<std::string, RatVec>> reps;
    for (std::size_t i = 0; i < cc.poset.size(); ++i) {
      RatVec ang(3);
      for (int e = 0; e < 3; ++e) {
        ang[e] = coeffs.args[e].q();
        for (int k = 0; k < 2; ++k) ang[e] += Rational(b[e][k]) * cc.rep[i][k];
      }
      const Rational a0 = ang[0];
      for (auto& a : ang) a -= a0;
      CHECK(coamoeba::in_partial_octahedron(AngleVector(ang), cc.base[i].sigma, cc.base[i].j));
      reps.insert({cc.base_id[i], cc.rep[i]});
    }
    CHECK(reps.size() == cc.poset.size());
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(cover_complex(simplex_cover({{0, 0}, {1, 0}}), generic_coefficients(2, 0)), AssemblyError);
    CHECK_THROWS_AS(cover_complex(simplex_cover({{0, 0}, {1, 0}, {0, 1}}), generic_coefficients(2, 0)),
                    AssemblyError);
  }
}

TEST_CASE("gluing examples") {
  SUBCASE("unit simplex") {
    auto mp = MarkedPolytope::make({{0, 0}, {1, 0}, {0, 1}});
    auto g = glue(mp, {0, 0, 0}, generic_coefficients(3, 1));
    CHECK(poset::poset_isomorphic(g.quotient, cyclic::build_W(2)).has_value());
    CHECK(g.euler == -1);
    CHECK(g.boundary_components == 3);
  }
  SUBCASE("unit square") {
    auto mp = MarkedPolytope::make({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto g = glue(mp, {0, 0, 0, 1}, generic_coefficients(4, 3));
    CHECK(g.euler == -2);
    CHECK(g.genus == 0);
    CHECK(g.boundary_components == 4);
    CHECK(g.homology.betti == std::vector<long long>{1, 3});
    CHECK_THROWS_AS(glue(mp, {0, 0, 0, 0}, generic_coefficients(4, 3)), AssemblyError);
  }
  SUBCASE("two-triangle example") {
    auto g = glue(tropical::example_points(), tropical::example_lifting(), generic_coefficients(4, 5));
    CHECK(g.euler == -5);
    CHECK(g.genus == 1);
    CHECK(g.boundary_components == 5);
    CHECK(g.homology.betti == std::vector<long long>{1, 6});
    // every shared cell is matched from both sides
    for (const auto& [id, srcs] : g.identifications) {
      std::set<std::vector<int>> sides;
      for (int s : srcs) sides.insert(g.sources[s].simplex);
      CHECK(sides.size() == 2);
    }
    auto j = g.to_json();
    CHECK(j["euler"] == -5);
    CHECK(j["quotient"].is_object());
  }
  SUBCASE("higher dimension") {
    auto simplex3 = MarkedPolytope::make({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto g = glue(simplex3, {0, 0, 0, 0}, generic_coefficients(4, 1));
    CHECK(poset::poset_isomorphic(g.quotient, cyclic::build_W(3)).has_value());
    auto cube = MarkedPolytope::make({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    CHECK_THROWS_AS(glue(cube, {0, 0, 0, 0, 5}, generic_coefficients(5, 1)), AssemblyError);
  }
  SUBCASE("arguments must match the points") {
    CHECK_THROWS_AS(glue(tropical::example_points(), tropical::example_lifting(), generic_coefficients(3, 5)),
                    AssemblyError);
  }
}

TEST_CASE("curve battery against Pick") {
  const std::vector<std::vector<ZPoint>> polys{
      {{0, 0}, {2, 0}, {0, 2}},
      {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}},
      {{1, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}, {0, 1}, {1, 1}},
      {{0, 0}, {3, 0}, {0, 2}, {1, 1}},
      {{0, 0}, {3, 1}, {1, 3}, {-1, 1}},
      {{0, 0}, {2, 0}, {0, 2}, {1, 0}, {0, 1}, {1, 1}},
  };
  std::mt19937 rng(314);
  for (const auto& pts : polys) {
    auto mp = MarkedPolytope::make(pts);
    auto eta = triangulating_lifting(mp, rng);
    auto coeffs = generic_coefficients(pts.size(), rng());
    auto g = glue(mp, eta, coeffs);
    const auto [interior, boundary] = pick_counts(mp);
    const Rational vol = tropical::normalized_volume(mp.rat_points());
    CAPTURE(g.summary().dump());
    CHECK(Rational(static_cast<long>(-g.euler)) == vol);
    CHECK(g.genus == interior);
    CHECK(g.boundary_components == boundary);
    CHECK(g.homology.betti == std::vector<long long>{1, 2 * interior + boundary - 1});
    Integer total = 0;
    for (const auto& c : g.covers) total += c.degree;
    CHECK(Rational(total) == vol);

    // order independence
    std::vector<int> order(g.simplices.size());
    std::iota(order.begin(), order.end(), 0);
    std::reverse(order.begin(), order.end());
    auto h = glue(mp, eta, coeffs, order);
    CHECK(poset::poset_isomorphic(g.quotient, h.quotient).has_value());
    CHECK_THROWS_AS(glue(mp, eta, coeffs, std::vector<int>(g.simplices.size() + 1, 0)), AssemblyError);
  }
}

TEST_CASE("monodromy") {
  auto [x, t] = monodromy_point({0, 0}, {frac(1, 3), frac(1, 2)});
  CHECK(t == RatVec{frac(1, 3), frac(1, 2)});
  auto [x1, t1] = monodromy_point({frac(1, 2), 0}, {0, 0});
  CHECK(t1 == RatVec{frac(1, 2), 0});
  CHECK(monodromy_point(x1, t1).second == RatVec{0, 0});
  CHECK(x1 == RatVec{frac(1, 2), 0});

  // tropical vertices of the two-triangle example
  auto mp = tropical::example_points();
  auto s = tropical::regular_subdivision(mp, tropical::example_lifting());
  auto hm = tropical::tropical_hypersurface(mp, tropical::example_lifting(), s);
  int vertices = 0;
  for (const auto& f : hm.faces) {
    if (f.dim != 0) continue;
    ++vertices;
    const RatVec& v = f.vrep.vertices.at(0);
    Integer l = 1;
    for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    CHECK(monodromy_orbit_length(v, {0, 0}) == l.get_si());
  }
  CHECK(vertices == 2);

  // bijective on a fiber: distinct grid points stay distinct
  const RatVec xr{frac(2, 5), frac(-1, 3)};
  std::set<RatVec> img;
  for (long i = 0; i < 15; ++i)
    for (long j = 0; j < 15; ++j) img.insert(monodromy_point(xr, {frac(i, 15), frac(j, 15)}).second);
  CHECK(img.size() == 225);
  CHECK(monodromy_orbit_length(xr, {0, 0}) == 15);
}
