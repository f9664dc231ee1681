#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "ptc/coamoeba.hpp"
#include "ptc/phasetrop.hpp"

using namespace ptc;
using namespace ptc::phasetrop;
using cyclic::full_set;
using cyclic::subset_of;

namespace {

CyclicPartition P(const std::string& s) { return CyclicPartition::parse(s); }

std::vector<long long> sphere_betti(int d) {
  if (d < 0) return {};
  if (d == 0) return {2};
  std::vector<long long> b(d + 1, 0);
  b[0] = b[d] = 1;
  return b;
}

int vertex_of(const PsiComplex& psi, Subset i) {
  for (std::size_t c = 0; c < psi.cells.size(); ++c)
    if (psi.cells[c].dim() == 0 && psi.cells[c].i == i) return static_cast<int>(c);
  return -1;
}

}  // namespace

TEST_CASE("point pair of pants") {
  auto psi = build_psi(P("<0|1>"), full_set(1));
  REQUIRE(psi.cells.size() == 1);
  CHECK(psi.complex.dim == 0);
  CHECK(psi.boundary.empty());
  auto h = psi_complex_boundary_homology(psi);
  CHECK(h.closed.betti == std::vector<long long>{1});
  CHECK(h.boundary.betti.empty());
  CHECK_THROWS_AS(build_psi(P("<{0,1}|2>"), subset_of({0, 1})), PhaseTropError);
}

TEST_CASE("closed strata are collapsible balls with sphere boundaries") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& lab : cyclic::enumerate_W(n)) {
      auto psi = build_psi(lab.sigma, lab.j);
      CHECK_MESSAGE(psi.complex.pure, lab.str());
      CHECK(psi.complex.dim == lab.rank());
      for (int c : psi.complex.cells.maximal())
        CHECK_MESSAGE(psi.type_of(c) != MaximalType::Other, psi.cells[c].str());
      auto col = poset::greedy_collapse(psi.complex);
      CHECK_MESSAGE(col.ok(), lab.str());
      auto h = psi_complex_boundary_homology(psi);
      CHECK_MESSAGE(h.closed.betti == std::vector<long long>{1}, lab.str());
      CHECK_MESSAGE(h.boundary.betti == sphere_betti(lab.rank() - 1), lab.str());
    }
}

TEST_CASE("hexagon for the maximal two-dimensional stratum") {
  auto psi = build_psi(P("<0|1|2>"), full_set(2));
  CHECK(psi.complex.dim == 2);
  auto h = psi_complex_boundary_homology(psi);
  CHECK(h.boundary.betti == std::vector<long long>{1, 1});
  int type1 = 0, type2 = 0;
  for (int c : psi.complex.cells.maximal()) (psi.type_of(c) == MaximalType::TypeI ? type1 : type2)++;
  CHECK(type1 >= 1);
  CHECK(type2 >= 1);
}

TEST_CASE("maximal triples at n = 4 have the two types") {
  for (const auto& sigma : cyclic::enumerate_cyclic_partitions(4)) {
    if (sigma.k() != 5) continue;
    auto cells = psi_cells(sigma, full_set(4));
    PsiComplex shell;
    shell.host = {sigma, full_set(4)};
    shell.complex.dim = shell.host.rank();
    int top = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      CHECK(cells[c].dim() <= 6);
      if (cells[c].dim() != 6) continue;
      ++top;
      shell.cells = {cells[c]};
      CHECK_MESSAGE(shell.type_of(0) != MaximalType::Other, cells[c].str());
    }
    CHECK(top > 0);
    break;  // one maximal partition is representative up to relabeling
  }
}

TEST_CASE("literal triple order matches geometric closure") {
  for (int n = 1; n <= 2; ++n)
    for (const auto& lab : cyclic::enumerate_W(n)) {
      auto cells = psi_cells(lab.sigma, lab.j);
      for (const auto& a : cells)
        for (const auto& b : cells) CHECK_MESSAGE(triple_leq(a, b) == triple_leq_geometric(a, b), a.str() << " " << b.str());
    }
  std::mt19937 rng(4);
  auto cells = psi_cells(P("<0|1|2|3>"), full_set(3));
  for (int trial = 0; trial < 1500; ++trial) {
    const auto& a = cells[rng() % cells.size()];
    const auto& b = cells[rng() % cells.size()];
    CHECK(triple_leq(a, b) == triple_leq_geometric(a, b));
  }
}

TEST_CASE("sampled points carry the cell label") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& lab : cyclic::enumerate_W(n)) {
      if (n == 3 && lab.sigma.k() < 4) continue;
      for (const auto& c : psi_cells(lab.sigma, lab.j)) {
        auto [y, theta] = sample_point(c);
        StratumLabel got = ambient_label(y, theta);
        CHECK_MESSAGE(got == c.label(), c.str());
        CHECK(cyclic::label_leq(got, lab));
        CHECK(coamoeba::in_partial_coamoeba(AngleVector(theta), c.i));
      }
    }
}

TEST_CASE("local fans") {
  // n = 3, vertex over the hyperplane vertex with sides {0,1} and {2,3}
  auto psi = build_psi(P("<0|1|2|3>"), full_set(3));
  int found = 0;
  for (std::size_t c = 0; c < psi.cells.size(); ++c) {
    const auto& v = psi.cells[c];
    if (v.dim() != 0) continue;
    CHECK_MESSAGE(local_fan_check(psi, static_cast<int>(c)).empty(), v.str() << ": " << local_fan_check(psi, static_cast<int>(c)));
    if (v.i == full_set(3) && v.tau.sigma() == P("<{0,1}|{2,3}>")) {
      ++found;
      std::set<Subset> facets;
      auto lf = local_fan(psi, static_cast<int>(c));
      for (int k : lf.incident)
        if (cyclic::size_of(psi.cells[k].i) == 2) facets.insert(psi.cells[k].i);
      CHECK(facets.size() == 4);  // a 4-cycle of facets
    }
  }
  CHECK(found == 1);
  for (int n = 2; n <= 3; ++n)
    for (const auto& lab : cyclic::enumerate_W(n)) {
      auto p = build_psi(lab.sigma, lab.j);
      for (std::size_t c = 0; c < p.cells.size(); ++c)
        if (p.cells[c].dim() == 0) CHECK_MESSAGE(local_fan_check(p, static_cast<int>(c)).empty(), p.cells[c].str());
    }
  auto two = build_psi(P("<0|1|2>"), full_set(2));
  int v = vertex_of(two, full_set(2));
  REQUIRE(v >= 0);
  auto lf = local_fan(two, v);
  for (std::size_t k = 0; k < lf.incident.size(); ++k) CHECK(lf.cone_dims[k] == two.cells[lf.incident[k]].dim());
  CHECK_THROWS_AS(local_fan(two, static_cast<int>(two.cells.size()) - 1), PhaseTropError);
}

TEST_CASE("two-block cone and supporting tangents") {
  ConeModel c = two_block_cone(subset_of({0, 1}), subset_of({2, 3}), 3);
  CHECK(c.verify());
  CHECK(linalg::dot(c.lambda_tilde, c.v_tilde) == 1);
  // v on the facet x_1 = x_2, u in that hyperplane
  RatVec v = to_chart({0, 1, 1, 2});
  CHECK(c.in_cone(v));
  CHECK(cone_tangent_total(c, v, to_chart({5, 3, 3, -7})));
  CHECK_FALSE(cone_tangent_total(c, v, to_chart({0, 0, 1, 0})));
  CHECK_FALSE(cone_tangent_total(c, c.v_tilde, to_chart({0, 1, 2, 3})));
  CHECK_THROWS_AS(cone_tangent_total(c, to_chart({0, 0, -1, 0}), v), PhaseTropError);
  CHECK_THROWS_AS(two_block_cone(subset_of({0}), subset_of({2}), 2), PhaseTropError);
  CHECK_THROWS_AS(make_cone(7, {}, {}, {}), PhaseTropError);
}

TEST_CASE("fiber inequalities agree with the tangent predicate") {
  std::mt19937 rng(8);
  for (int n = 1; n <= 4; ++n) {
    std::map<std::pair<Subset, Subset>, ConeModel> cones;
    for (const auto& sigma : cyclic::enumerate_cyclic_partitions(n)) {
      const std::size_t k = sigma.k();
      for (std::size_t start = 0; start < k; ++start)
        for (std::size_t r = 1; r < k; ++r) {
          Subset minus = 0;
          for (std::size_t s = 0; s < r; ++s) minus |= sigma.block((start + s) % k);
          const Subset plus = full_set(n) & ~minus;
          auto key = std::make_pair(minus, plus);
          if (!cones.count(key)) cones.emplace(key, two_block_cone(minus, plus, n));
          const ConeModel& cone = cones.at(key);
          for (Subset i = 1; i <= full_set(n); ++i) {
            if (!(i & minus) || !(i & plus)) continue;
            RatVec x(n + 1, 0);
            for (int e = 0; e <= n; ++e)
              if (!(i >> e & 1U)) x[e] = (minus >> e & 1U) ? -1 : 1;
            REQUIRE(boundary_face(minus, plus, i, n).contains(to_chart(x)));
            for (int trial = 0; trial < (n == 4 ? 3 : 8); ++trial) {
              // u constant on blocks and increasing along each half
              RatVec u(n + 1, 0);
              long lo = 0, hi = 0;
              for (std::size_t s = 0; s < k; ++s) {
                if (s == r) hi = 0;
                long& cur = s < r ? lo : hi;
                cur += static_cast<long>(rng() % 3);
                for (int e : cyclic::elements(sigma.block((start + s) % k))) u[e] = cur;
              }
              for (auto& ue : u) ue -= 2;
              CHECK(cone_tangent_total(cone, to_chart(x), to_chart(u)) == fiber_inequalities(sigma, start, r, i, u));
            }
          }
        }
      }
  }
}

TEST_CASE("stretch map") {
  ConeModel c = two_block_cone(subset_of({0, 2}), subset_of({1, 3}), 3);
  RatVec v = to_chart({0, 0, 0, 1});
  RatVec u = to_chart({0, 0, 0, 0});
  auto z = psi_stretch(c, v, u);
  CHECK(z.first == c.pi(v));
  // apex
  RatVec zero(3, 0);
  RatVec w = to_chart({1, 3, -1, 0});
  auto a = psi_stretch(c, zero, w);
  RatVec expect = c.pi(w);
  for (auto& e : expect) e *= linalg::dot(c.lambda_tilde, w);
  CHECK(a.first == expect);
  CHECK(a.second == c.pi(w));
  CHECK(linalg::dot(c.lambda_tilde, c.pi(w)) == 0);
  CHECK_THROWS_AS(psi_stretch(c, c.v_tilde, w), PhaseTropError);
}

TEST_CASE("stretch map is injective on sampled tangent pairs") {
  ConeModel c = two_block_cone(subset_of({0, 1}), subset_of({2, 3}), 3);
  std::mt19937 rng(12);
  std::set<std::pair<RatVec, RatVec>> pairs;
  std::map<std::pair<RatVec, RatVec>, std::pair<RatVec, RatVec>> images;
  int attempts = 0;
  while (pairs.size() < 10000 && attempts < 200000) {
    ++attempts;
    // v on a facet: a non-negative combination of the rays on it
    const RatVec& facet = c.dual_generators[rng() % c.dual_generators.size()];
    RatVec v(3, 0);
    for (const auto& r : c.rays) {
      if (linalg::dot(facet, r) != 0) continue;
      const long coef = static_cast<long>(rng() % 3);
      for (int k = 0; k < 3; ++k) v[k] += r[k] * coef;
    }
    // u in the kernel of a supporting functional at v
    std::vector<const RatVec*> support;
    for (const auto& g : c.dual_generators)
      if (linalg::dot(g, v) == 0) support.push_back(&g);
    RatVec lam(3, 0);
    for (const RatVec* g : support) {
      const long coef = static_cast<long>(rng() % 2);
      for (int k = 0; k < 3; ++k) lam[k] += (*g)[k] * coef;
    }
    if (lam == RatVec(3, 0)) lam = facet;
    RatVec u(3);
    for (auto& x : u) x = static_cast<long>(rng() % 5) - 2;
    const Rational s = linalg::dot(lam, u) / linalg::dot(lam, c.v_tilde);
    for (int k = 0; k < 3; ++k) u[k] -= s * c.v_tilde[k];
    REQUIRE(cone_tangent_total(c, v, u));
    if (!pairs.insert({v, u}).second) continue;
    auto img = psi_stretch(c, v, u);
    CHECK(img.second == c.pi(u));
    auto [it, fresh] = images.emplace(img, std::make_pair(v, u));
    CHECK_MESSAGE(fresh, "collision");
  }
  CHECK(pairs.size() >= 2000);
}
