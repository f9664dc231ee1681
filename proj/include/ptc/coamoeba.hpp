#ifndef PTC_COAMOEBA_HPP
#define PTC_COAMOEBA_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptc/cyclic.hpp"
#include "ptc/linalg.hpp"
#include "ptc/nets.hpp"
#include "ptc/rational.hpp"

namespace ptc::coamoeba {

using cyclic::CyclicPartition;
using cyclic::Subset;
using nets::Net;

struct CoamoebaError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// All angles are in units of pi.

// Largest gap between consecutive marked points on the circle.
Rational max_gap(const AngleVector& theta);
// No open half circle contains all points (gap <= 1). This is the closed
// coamoeba, the complement of the open zonotope.
bool is_allowed(const AngleVector& theta);
bool in_zonotope_interior(const AngleVector& theta);  // gap > 1
bool in_zonotope(const AngleVector& theta);           // gap >= 1
// The argument image itself before closure: gap < 1, or exactly two
// antipodal directions (the points pi_I).
bool in_argument_image(const AngleVector& theta);
// Closed partial coamoeba C_J: the points indexed by J are allowed.
bool in_partial_coamoeba(const AngleVector& theta, Subset j);

AngleVector pi_point(Subset i, int n);  // theta_i = pi for i in I, else 0

// Lifted inequality system in block coordinates y_0..y_{k-1} with y_0 = 0.
// The HSystem variables are y_1..y_{k-1}.
struct LiftedSystem {
  std::vector<Subset> blocks;  // cyclic order, first block is the initial one
  linalg::HSystem h;
  RatVec full(const RatVec& vars) const;  // prepend y_0 = 0
};

LiftedSystem octahedron_system(const CyclicPartition& sigma, std::size_t start = 0);
LiftedSystem partial_octahedron_system(const CyclicPartition& sigma, Subset j, std::size_t start = 0);
LiftedSystem alcove_system(const Net& tau, std::size_t start = 0);

bool lifted_member(const LiftedSystem& sys, const AngleVector& theta);
// Element angles of a lifted point (not reduced mod 2).
RatVec lifted_angles(const LiftedSystem& sys, const RatVec& vars);

bool in_octahedron(const AngleVector& theta, const CyclicPartition& sigma);
bool in_partial_octahedron(const AngleVector& theta, const CyclicPartition& sigma, Subset j);
// Closed alcove, via the lifted system.
bool in_alcove(const AngleVector& theta, const Net& tau);
bool in_alcove_lifted(const AngleVector& theta, const Net& tau, std::size_t start = 0);
// Pairwise circle conditions. The closed form contains the alcove but also
// degenerate points outside it (e.g. theta = 0 for the triangle net); the
// strict form (open half circles) is exact on the relative interior.
bool in_alcove_pairwise(const AngleVector& theta, const Net& tau, bool strict = false);

// Combinatorial incidence: sigma refines sigma(tau) and tau divides J.
bool alcove_in_partial_octahedron(const Net& tau, const CyclicPartition& sigma, Subset j);

struct TorusRegion {
  enum class Kind { Octahedron, PartialOctahedron, Alcove, Zonotope, Coamoeba };
  Kind kind = Kind::Zonotope;
  CyclicPartition sigma;
  Subset j = 0;
  std::optional<Net> tau;
  int n = 0;

  static TorusRegion octahedron(const CyclicPartition& s);
  static TorusRegion partial_octahedron(const CyclicPartition& s, Subset j);
  static TorusRegion alcove(const Net& t);
  static TorusRegion zonotope(int n);
  static TorusRegion coamoeba(Subset j, int n);

  bool contains_point(const AngleVector& theta) const;
  // Lifted system for the polytope kinds; throws for zonotope/coamoeba.
  LiftedSystem system() const;
  std::string str() const;
};

// Vertices of a polytope region as element angles.
std::vector<RatVec> region_vertices(const TorusRegion& r);
// Containment decided on the vertices and barycenter of inner.
bool region_contains(const TorusRegion& outer, const TorusRegion& inner);

// One representative point per chamber of the arrangement
// theta_i - theta_j in pi Z.
struct Chamber {
  AngleVector theta;
  bool allowed = false;
  CyclicPartition sigma;
};
std::vector<Chamber> enumerate_chambers(int n);

// Net of diameters of a polygon with side directions theta (allowed).
Net diameter_net(const AngleVector& theta);

// OFF text of a region for n = 3 in coordinates theta_1..theta_3.
std::string export_off(const TorusRegion& r);

}  // namespace ptc::coamoeba

#endif
