#ifndef PTC_TROPICAL_HPP
#define PTC_TROPICAL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "ptc/cyclic.hpp"
#include "ptc/linalg.hpp"
#include "ptc/poset.hpp"
#include "ptc/rational.hpp"

namespace ptc::tropical {

using cyclic::Subset;

struct TropicalError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using ZPoint = std::vector<long>;
RatVec to_rat(const ZPoint& p);

// Affine dimension of a point set (-1 when empty).
int affine_dim(const std::vector<RatVec>& pts);

struct MarkedPolytope {
  int n = 0;                   // ambient dimension
  std::vector<ZPoint> points;  // A
  std::vector<int> hull;       // indices of the vertices of Q = conv(A)
  int dim = -1;

  static MarkedPolytope make(std::vector<ZPoint> points);
  std::vector<RatVec> rat_points() const;
};

// Is x in conv(pts)?
bool in_hull(const std::vector<RatVec>& pts, const RatVec& x);
// Normalized volume d! * vol_d of conv(pts) inside its affine span lattice
// coordinates (pivot coordinates of the span).
Rational normalized_volume(const std::vector<RatVec>& pts);

using Lifting = std::vector<Rational>;  // eta, indexed like A

struct Cell {
  std::vector<int> marked;  // A_gamma as indices into A, sorted
  int dim = 0;
};

struct Subdivision {
  std::vector<Cell> cells;    // the face set Gamma, sorted by dim then marked
  std::vector<int> maximal;   // indices of cells of full dimension
  bool triangulation = false;
  poset::FacePoset face_poset() const;  // inclusion of marked sets
  nlohmann::json to_json(const MarkedPolytope& mp) const;
};

// Coherent subdivision from the lower faces of the lifted point set. Faces
// are the argmax sets of x -> max(a(x) - eta(a)).
Subdivision regular_subdivision(const MarkedPolytope& mp, const Lifting& eta);
// Brute-force oracle: maximal lower cells from all affinely independent
// (d+1)-subsets whose lifted hyperplane supports every lifted point.
std::vector<std::vector<int>> lower_hull_oracle(const MarkedPolytope& mp, const Lifting& eta);

// Subdivision axioms (1)-(3). Returns an empty string when they hold,
// otherwise a description of the first failure.
std::string check_subdivision_axioms(const MarkedPolytope& mp, const Subdivision& s);

struct HyperFace {
  int cell = -1;            // index into Subdivision::cells
  linalg::HSystem system;   // Phi(Q_gamma, A_gamma) in N_R
  linalg::VRep vrep;
  int dim = 0;
  bool bounded = false;
};

struct HypersurfaceModel {
  std::vector<HyperFace> faces;  // one per cell of dimension >= 1
  int count(int dim, bool bounded_only = false) const;
  nlohmann::json to_json(const MarkedPolytope& mp, const Subdivision& s) const;
};

Rational tropical_polynomial(const MarkedPolytope& mp, const Lifting& eta, const RatVec& x);
HypersurfaceModel tropical_hypersurface(const MarkedPolytope& mp, const Lifting& eta, const Subdivision& s);
// Phi reverses inclusion and is injective; checked on the polyhedra.
bool verify_order_reversing(const Subdivision& s, const HypersurfaceModel& h);

// Tropical hyperplane in R^{n+1}/R (coordinates with x_0 = 0).
linalg::HSystem cone_P(Subset i, int n);
// Closed face of the compactified hyperplane in the simplex coordinates
// y (sum 1): y constant on I, maximal there, zero off I'.
linalg::HSystem face_P(Subset i, Subset i_prime, int n);
int face_P_dim(Subset i, Subset i_prime, int n);
// The open face P_{I,I'} lies in the closed face of (K,K'); geometric.
bool face_P_incident(Subset i, Subset i_prime, Subset k, Subset k_prime, int n);

// Moment maps with e^{x_i} replaced by positive rational weights.
RatVec moment_simplex(const RatVec& weights);
RatVec moment_mu(const MarkedPolytope& mp, const RatVec& weights);
// |z^a| = base^{a(x)} for an integer point x.
RatVec moment_mu_at(const MarkedPolytope& mp, const Rational& base, const ZPoint& x);

// N(A): integer vectors on which all differences of A vanish.
linalg::ZMat lattice_N(const MarkedPolytope& mp);
// Index of the lattice spanned by the differences of A in its saturation M(A).
Integer saturation_index(const MarkedPolytope& mp);

std::string to_svg(const MarkedPolytope& mp, const Subdivision& s, const HypersurfaceModel& h);

// Worked two-triangle example: A = {(0,0),(1,0),(0,1),(2,3)}, eta = e_{(2,3)}.
MarkedPolytope example_points();
Lifting example_lifting();

}  // namespace ptc::tropical

#endif
