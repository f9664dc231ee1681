#ifndef PTC_PANTS_HPP
#define PTC_PANTS_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "ptc/cyclic.hpp"
#include "ptc/poset.hpp"
#include "ptc/rational.hpp"

namespace ptc::pants {

using cyclic::CyclicPartition;
using cyclic::StratumLabel;
using cyclic::Subset;

struct PantsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Gaussian rational x + iy.
struct Q2 {
  Rational x{0}, y{0};
  Q2() = default;
  Q2(Rational a, Rational b) : x(std::move(a)), y(std::move(b)) {}
  bool zero() const { return x == 0 && y == 0; }
  Q2 operator+(const Q2& o) const { return {x + o.x, y + o.y}; }
  Q2 operator-(const Q2& o) const { return {x - o.x, y - o.y}; }
  Q2 operator*(const Rational& s) const { return {x * s, y * s}; }
  Q2 operator*(const Q2& o) const { return {x * o.x - y * o.y, x * o.y + y * o.x}; }
  Q2 operator/(const Q2& o) const;
  bool operator==(const Q2& o) const { return x == o.x && y == o.y; }
  bool operator<(const Q2& o) const { return x < o.x || (x == o.x && y < o.y); }
  std::string str() const;
};

Rational cross(const Q2& a, const Q2& b);
Rational dot(const Q2& a, const Q2& b);
// Same ray: parallel and pointing the same way.
bool same_ray(const Q2& a, const Q2& b);
bool antipodal(const Q2& a, const Q2& b);
// Counter-clockwise angular order of non-zero vectors starting at the
// positive real axis.
bool angle_less(const Q2& a, const Q2& b);
// Scaled so the larger coordinate magnitude is 1.
Q2 ray_representative(const Q2& v);
// Point on the unit circle at parameter t (angle 2 atan t); t = nullopt is -1.
Q2 unit_circle(const std::optional<Rational>& t);
// Exact rotation by the angle 2 atan t.
Q2 rotate(const Q2& v, const Rational& t);

class PolygonPoint {
 public:
  PolygonPoint() = default;
  // Validates closure, at least two non-zero edges, and that every zero
  // edge carries a non-zero direction.
  PolygonPoint(std::vector<Q2> edges, std::map<int, Q2> dirs);

  int n() const { return static_cast<int>(edges_.size()) - 1; }
  const std::vector<Q2>& edges() const { return edges_; }
  const std::map<int, Q2>& dirs() const { return dirs_; }
  Q2 direction(int i) const;  // edge if non-zero, else recorded direction

  nlohmann::json to_json() const;
  static PolygonPoint from_json(const nlohmann::json& j);

 private:
  std::vector<Q2> edges_;
  std::map<int, Q2> dirs_;
};

// Equal up to rotation and positive scaling (a common Gaussian factor).
bool same_shape(const PolygonPoint& a, const PolygonPoint& b);

StratumLabel classify(const PolygonPoint& p);
PolygonPoint witness(const StratumLabel& label);
std::vector<Q2> arg_map(const PolygonPoint& p);
// No open half plane contains all the given directions.
bool directions_allowed(const std::vector<Q2>& dirs);

// Closure order on complex strata: inner lies in the closure of outer.
bool closure_contains(const StratumLabel& outer, const StratumLabel& inner);

// Deformation mode: points of the outer stratum converging to the witness
// of the inner stratum, one per scale. Empty when no such path is found.
struct Deformation {
  PolygonPoint limit;
  std::vector<PolygonPoint> path;
  std::vector<Rational> distances;  // sup distance of each path point to limit
};
std::optional<Deformation> deform(const StratumLabel& outer, const StratumLabel& inner, int levels = 3);
bool closure_contains_geometric(const StratumLabel& outer, const StratumLabel& inner);

// Convex polygon check: edges taken in counter-clockwise direction order
// turn left at every corner.
bool is_convex_circuit(const PolygonPoint& p);

// Complex-side face poset of the strata; geometric = true uses the
// deformation mode for the order.
poset::FacePoset complex_poset(int n, bool geometric = false);

std::string to_svg(const PolygonPoint& p);

}  // namespace ptc::pants

#endif
