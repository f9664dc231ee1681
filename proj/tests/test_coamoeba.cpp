#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "ptc/coamoeba.hpp"

using namespace ptc;
using namespace ptc::coamoeba;
using cyclic::full_set;
using nets::make_net;
using nets::nets_on;
using cyclic::subset_of;

namespace {

CyclicPartition P(const std::string& s) { return CyclicPartition::parse(s); }
AngleVector A(std::initializer_list<Rational> q) { return AngleVector(RatVec(q)); }

AngleVector random_point(std::mt19937& rng, int n) {
  static const int dens[] = {2, 3, 4, 6, 12};
  const int den = dens[rng() % 5];
  RatVec q(n + 1);
  for (auto& x : q) x = frac(static_cast<long>(rng() % (2 * den)), den);
  return AngleVector(q);
}

std::vector<CyclicPartition> maximal_partitions(int n) {
  std::vector<CyclicPartition> out;
  for (const auto& s : cyclic::enumerate_cyclic_partitions(n))
    if (static_cast<int>(s.k()) == n + 1) out.push_back(s);
  return out;
}

}  // namespace

TEST_CASE("allowed configurations and the zonotope") {
  CHECK_FALSE(is_allowed(A({0, 0, 0})));
  CHECK(in_zonotope_interior(A({0, 0, 0})));
  AngleVector v = pi_point(subset_of({0}), 2);
  CHECK(v.str() == A({1, 0, 0}).str());
  CHECK(is_allowed(v));
  CHECK_FALSE(in_zonotope_interior(v));
  CHECK(in_zonotope(v));
  CHECK(in_argument_image(v));
  CHECK(in_zonotope_interior(A({frac(1, 2), 0, 0})));
  CHECK(is_allowed(A({0, frac(2, 3), frac(4, 3)})));
  CHECK_FALSE(in_zonotope(A({0, frac(2, 3), frac(4, 3)})));
  // boundary point of Z that is not a vertex
  AngleVector b = A({0, frac(1, 2), 1});
  CHECK(is_allowed(b));
  CHECK(in_zonotope(b));
  CHECK_FALSE(in_argument_image(b));
}

TEST_CASE("allowed is the complement of the open zonotope") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    AngleVector t = random_point(rng, n);
    CHECK(is_allowed(t) != in_zonotope_interior(t));
    bool boundary_non_vertex = in_zonotope(t) && !in_zonotope_interior(t);
    if (boundary_non_vertex) {
      std::set<Rational> d;
      for (auto& a : t.coords()) d.insert(a.q());
      boundary_non_vertex = d.size() != 2;
    }
    CHECK((is_allowed(t) && !in_argument_image(t)) == boundary_non_vertex);
  }
}

TEST_CASE("chambers of the torus arrangement") {
  for (int n = 1; n <= 4; ++n) {
    auto ch = enumerate_chambers(n);
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(static_cast<long>(ch.size()) == fact * (1L << n));
    long in_z = 0;
    std::map<CyclicPartition, std::set<std::string>> per_sigma;
    for (const auto& c : ch) {
      if (!c.allowed) {
        ++in_z;
        continue;
      }
      CHECK(static_cast<int>(c.sigma.k()) == n + 1);
      Net t = diameter_net(c.theta);
      CHECK(t.rank() == n);
      CHECK(t.sigma() == c.sigma);
      CHECK(in_alcove(c.theta, t));
      CHECK(in_alcove_lifted(c.theta, t));
      CHECK(in_octahedron(c.theta, c.sigma));
      per_sigma[c.sigma].insert(t.str());
    }
    CHECK(in_z == fact * (n + 1));
    for (const auto& sigma : maximal_partitions(n)) {
      std::set<std::string> top;
      for (const auto& t : nets_on(sigma))
        if (t.rank() == n) top.insert(t.str());
      CHECK(static_cast<long>(top.size()) == (1L << n) - n - 1);
      CHECK(per_sigma[sigma] == top);  // chambers and maximal nets match
    }
  }
}

TEST_CASE("pairwise circle conditions versus the lifted system") {
  std::mt19937 rng(5);
  for (int n = 1; n <= 3; ++n) {
    auto all = nets::enumerate_nets(n);
    for (int trial = 0; trial < 400; ++trial) {
      AngleVector t = random_point(rng, n);
      for (const auto& tau : all) {
        const bool a = in_alcove_lifted(t, tau);
        for (std::size_t s = 1; s < tau.k(); ++s) CHECK(a == in_alcove_lifted(t, tau, s));
        if (a) CHECK(in_alcove_pairwise(t, tau));
        if (in_alcove_pairwise(t, tau, true)) CHECK_MESSAGE(a, tau.str() << " at " << t.str());
      }
    }
  }
  // the closed pairwise form is too weak on degenerate points
  Net tri = make_net(P("<0|1|2>"), {{0, 1}, {0, 2}, {1, 2}});
  CHECK(in_alcove_pairwise(A({0, 0, 0}), tri));
  CHECK_FALSE(in_alcove(A({0, 0, 0}), tri));
}

TEST_CASE("strict pairwise conditions cut out relative interiors") {
  // barycenters are relative interior points; vertices are not (rank >= 1)
  for (int n = 1; n <= 4; ++n)
    for (const auto& tau : nets::enumerate_nets(n)) {
      auto vs = region_vertices(TorusRegion::alcove(tau));
      CHECK(static_cast<int>(vs.size()) == tau.rank() + 1);
      RatVec bary(n + 1, 0);
      for (const auto& v : vs)
        for (int i = 0; i <= n; ++i) bary[i] += v[i];
      for (auto& x : bary) x /= static_cast<long>(vs.size());
      CHECK_MESSAGE(in_alcove_pairwise(AngleVector(bary), tau, true), tau.str());
      if (tau.rank() >= 1)
        for (const auto& v : vs) CHECK_FALSE(in_alcove_pairwise(AngleVector(v), tau, true));
    }
}

TEST_CASE("lift does not depend on the initial block") {
  std::mt19937 rng(9);
  for (int n = 1; n <= 4; ++n) {
    std::vector<AngleVector> pts;
    for (int trial = 0; trial < (n == 4 ? 40 : 150); ++trial) pts.push_back(random_point(rng, n));
    for (const auto& sigma : cyclic::enumerate_cyclic_partitions(n)) {
      std::vector<LiftedSystem> oct;
      for (std::size_t s = 0; s < sigma.k(); ++s) oct.push_back(octahedron_system(sigma, s));
      for (const auto& t : pts)
        for (std::size_t s = 1; s < sigma.k(); ++s) CHECK(lifted_member(oct[0], t) == lifted_member(oct[s], t));
      for (cyclic::Subset j = 1; j <= full_set(n); ++j) {
        if (!cyclic::divides(sigma, j)) continue;
        std::vector<LiftedSystem> po;
        for (std::size_t s = 0; s < sigma.k(); ++s) po.push_back(partial_octahedron_system(sigma, j, s));
        for (const auto& t : pts)
          for (std::size_t s = 1; s < sigma.k(); ++s) CHECK(lifted_member(po[0], t) == lifted_member(po[s], t));
      }
    }
  }
}

TEST_CASE("octahedra are unions of alcoves") {
  std::mt19937 rng(3);
  for (int n = 1; n <= 3; ++n) {
    auto all = nets::enumerate_nets(n);
    auto parts = cyclic::enumerate_cyclic_partitions(n);
    for (int trial = 0; trial < 300; ++trial) {
      AngleVector t = random_point(rng, n);
      std::vector<const Net*> hit;
      for (const auto& tau : all)
        if (in_alcove(t, tau)) hit.push_back(&tau);
      CHECK(is_allowed(t) == !hit.empty());
      for (const auto& sigma : parts)
        for (cyclic::Subset j = 1; j <= full_set(n); ++j) {
          if (!cyclic::divides(sigma, j)) continue;
          bool via = false;
          for (const Net* tau : hit) via = via || alcove_in_partial_octahedron(*tau, sigma, j);
          CHECK_MESSAGE(in_partial_octahedron(t, sigma, j) == via, sigma.str() << " " << cyclic::subset_str(j) << " at " << t.str());
          if (j == full_set(n)) CHECK(in_octahedron(t, sigma) == in_partial_octahedron(t, sigma, j));
        }
      // closed partial coamoebas are covered by their partial octahedra
      for (cyclic::Subset j = 1; j <= full_set(n); ++j) {
        if (cyclic::size_of(j) < 2) continue;
        bool cover = false;
        for (const auto& sigma : maximal_partitions(n)) cover = cover || in_partial_octahedron(t, sigma, j);
        CHECK(in_partial_coamoeba(t, j) == cover);
      }
    }
  }
}

TEST_CASE("region containment matches the combinatorial criterion") {
  for (int n = 1; n <= 3; ++n) {
    auto all = nets::enumerate_nets(n);
    for (const auto& sigma : cyclic::enumerate_cyclic_partitions(n))
      for (cyclic::Subset j = 1; j <= full_set(n); ++j) {
        if (!cyclic::divides(sigma, j)) continue;
        TorusRegion outer = TorusRegion::partial_octahedron(sigma, j);
        for (const auto& tau : all)
          CHECK_MESSAGE(region_contains(outer, TorusRegion::alcove(tau)) == alcove_in_partial_octahedron(tau, sigma, j),
                        outer.str() << " vs " << tau.str());
      }
  }
  CHECK_THROWS_AS(TorusRegion::partial_octahedron(P("<{0,1}|2>"), subset_of({0, 1})), CoamoebaError);
  CHECK_THROWS_AS(alcove_in_partial_octahedron(make_net(P("<0|1|2>"), {{0, 1}, {0, 2}, {1, 2}}), P("<0|1|2>"), 1),
                  CoamoebaError);
}

TEST_CASE("vertex of the zonotope lies in the coamoeba") {
  TorusRegion vertex = TorusRegion::octahedron(P("<0|{1,2}>"));
  auto vs = region_vertices(vertex);
  REQUIRE(vs.size() == 1);
  CHECK(AngleVector(vs[0]) == pi_point(subset_of({0}), 2));
  CHECK(region_contains(TorusRegion::coamoeba(full_set(2), 2), vertex));
  CHECK(region_contains(TorusRegion::zonotope(2), vertex));
  CHECK_THROWS_AS(region_contains(TorusRegion::octahedron(P("<0|1|2>")), TorusRegion::zonotope(2)), CoamoebaError);
}

TEST_CASE("worked five-block alcove") {
  Net ex = make_net(P("<0|1|2|3|4>"), {{0, 3}, {1, 3}, {1, 4}, {0, 2}});
  auto vs = region_vertices(TorusRegion::alcove(ex));
  CHECK(vs.size() == 4);  // a 3-simplex
  for (const auto& v : vs) {
    CHECK(in_alcove(AngleVector(v), ex));
    CHECK(is_allowed(AngleVector(v)));
  }
  std::mt19937 rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    AngleVector t = random_point(rng, 4);
    if (in_alcove(t, ex)) CHECK(in_alcove_pairwise(t, ex));
  }
}

TEST_CASE("OFF export of three-dimensional octahedra") {
  std::string off = export_off(TorusRegion::octahedron(P("<0|1|2|3>")));
  CHECK(off.rfind("OFF\n", 0) == 0);
  CHECK(off.find("\n6 8 0\n") != std::string::npos);
  auto sigma = P("<0|1|2|3>");
  for (const auto& tau : nets_on(sigma)) {
    if (tau.rank() != 3) continue;
    std::string a = export_off(TorusRegion::alcove(tau));
    CHECK(a.find("\n4 4 0\n") != std::string::npos);
  }
  CHECK_THROWS_AS(export_off(TorusRegion::octahedron(P("<0|1|2>"))), CoamoebaError);
}
