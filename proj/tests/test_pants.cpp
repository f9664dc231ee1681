#include <random>

#include "doctest.h"
#include "ptc/pants.hpp"

using namespace ptc;
using namespace ptc::pants;
using cyclic::full_set;
using cyclic::subset_of;

namespace {

StratumLabel L(const std::string& s) { return StratumLabel::parse(s); }
Q2 V(Rational x, Rational y) { return {std::move(x), std::move(y)}; }

}  // namespace

TEST_CASE("angular comparator") {
  std::vector<Q2> v{V(1, 0), V(1, 1), V(0, 1), V(-1, 1), V(-1, 0), V(-1, -1), V(0, -1), V(1, -1)};
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b < v.size(); ++b) CHECK(angle_less(v[a], v[b]) == (a < b));
  CHECK(same_ray(V(2, 4), V(1, 2)));
  CHECK(antipodal(V(2, 4), V(-1, -2)));
  for (int t = -20; t <= 20; ++t) {
    Q2 u = unit_circle(frac(t, 7));
    Rational norm = u.x * u.x + u.y * u.y;
    CHECK(norm == 1);
  }
}

TEST_CASE("classify examples") {
  PolygonPoint tri({V(1, 0), V(frac(-1, 2), 1), V(frac(-1, 2), -1)}, {});
  CHECK(classify(tri).str() == "(<{0}|{1}|{2}>, {0,1,2})");
  PolygonPoint two({V(1, 0), V(-1, 0), V(0, 0)}, {{2, V(-1, 0)}});
  CHECK(classify(two) == L("(<{0}|{1,2}>, {0,1})"));
  PolygonPoint right({V(1, 0), V(0, 1), V(-1, -1)}, {});
  CHECK(classify(right) == L("(<0|1|2>, {0,1,2})"));
  CHECK(is_convex_circuit(right));
  CHECK_THROWS_AS(PolygonPoint({V(1, 0), V(1, 0), V(0, 0)}, {{2, V(1, 0)}}), PantsError);
  CHECK_THROWS_AS(PolygonPoint({V(0, 0), V(0, 0), V(0, 0)}, {{0, V(1, 0)}, {1, V(1, 0)}, {2, V(1, 0)}}), PantsError);
  CHECK_THROWS_AS(PolygonPoint({V(1, 0), V(-1, 0), V(0, 0)}, {}), PantsError);
}

TEST_CASE("witness examples") {
  PolygonPoint w = witness(L("(<{0}|{1}>, {0,1})"));
  CHECK(w.edges()[0] == V(1, 0));
  CHECK(w.edges()[1] == V(-1, 0));
  CHECK_THROWS_AS(witness(L("(<{0,1}|{2}>, {0,1})")), PantsError);
  auto dirs = arg_map(witness(L("(<{0}|{1,2}>, {0,1})")));
  CHECK(dirs[0] == V(1, 0));
  CHECK(dirs[1] == V(-1, 0));
  CHECK(dirs[2] == V(-1, 0));
}

TEST_CASE("classify inverts witness on W") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : cyclic::enumerate_W(n)) {
      PolygonPoint p = witness(l);
      CHECK(classify(p) == l);
      // arg_map realizes sigma, and the J-directions are allowed
      auto d = arg_map(p);
      std::vector<Q2> jd;
      for (int e : cyclic::elements(l.j)) jd.push_back(d[e]);
      CHECK(directions_allowed(jd));
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) CHECK(same_ray(d[a], d[b]) == (l.sigma.block_of(a) == l.sigma.block_of(b)));
      if (n >= 2 && static_cast<int>(l.sigma.k()) == n + 1 && l.j == full_set(n)) CHECK(is_convex_circuit(p));
    }
  std::mt19937 rng(2);
  auto w5 = cyclic::enumerate_W(5);
  for (int t = 0; t < 500; ++t) {
    const auto& l = w5[rng() % w5.size()];
    CHECK(classify(witness(l)) == l);
  }
}

TEST_CASE("json round trip and shape equality") {
  PolygonPoint p = witness(L("(<{0}|{1,2}|{3}>, {0,1,3})"));
  auto j = p.to_json();
  PolygonPoint q = PolygonPoint::from_json(j);
  CHECK_MESSAGE(q.to_json() == j, j.dump() << " vs " << q.to_json().dump());
  CHECK(same_shape(p, q));
  // rotate by (3,4) and scale: same shape
  std::vector<Q2> e;
  std::map<int, Q2> d;
  for (const auto& v : p.edges()) e.push_back(v * V(3, 4));
  for (const auto& [i, v] : p.dirs()) d[i] = v * V(3, 4);
  CHECK(same_shape(p, PolygonPoint(e, d)));
  CHECK_FALSE(same_shape(p, witness(L("(<{0}|{1,2}|{3}>, {0,1,2,3})"))));
}

TEST_CASE("closure order examples") {
  auto top = L("(<0|1|2>, {0,1,2})");
  CHECK(closure_contains(top, top));
  int rank0 = 0;
  for (const auto& l : cyclic::enumerate_W(2))
    if (l.rank() == 0) {
      ++rank0;
      CHECK(closure_contains(top, l));
      CHECK(closure_contains_geometric(top, l));
    }
  CHECK(rank0 == 6);
  // the other orientation of the triangle does not contain this one
  auto other = L("(<0|2|1>, {0,1,2})");
  auto edge = L("(<{0}|{1,2}>, {0,1})");
  CHECK_FALSE(closure_contains(other, top));
  CHECK(closure_contains(other, edge));
  CHECK_FALSE(closure_contains_geometric(other, top));
}

TEST_CASE("deformation paths converge inside the outer stratum") {
  auto d = deform(L("(<0|1|2|3>, {0,1,2,3})"), L("(<{0,1}|{2,3}>, {0,2})"));
  REQUIRE(d.has_value());
  for (const auto& x : d->path) CHECK(classify(x) == L("(<0|1|2|3>, {0,1,2,3})"));
  CHECK(d->distances.back() < d->distances.front());
}

TEST_CASE("geometric closure agrees with the W order") {
  for (int n = 1; n <= 3; ++n) {
    auto w = cyclic::enumerate_W(n);
    for (const auto& a : w)
      for (const auto& b : w) CHECK_MESSAGE(closure_contains_geometric(a, b) == cyclic::label_leq(b, a), a.str() << " over " << b.str());
  }
}

TEST_CASE("complex face poset is isomorphic to W") {
  for (int n = 1; n <= 3; ++n) {
    auto geo = complex_poset(n, true);
    CHECK(poset::poset_isomorphic(geo, cyclic::build_W(n)));
    CHECK(geo.euler() == cyclic::build_W(n).euler());
  }
}

TEST_CASE("svg export") {
  std::string s = to_svg(witness(L("(<0|1|2|3>, {0,1,2,3})")));
  CHECK(s.find("<svg") == 0);
  CHECK(s.find("z3") != std::string::npos);
}
