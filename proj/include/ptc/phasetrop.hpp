#ifndef PTC_PHASETROP_HPP
#define PTC_PHASETROP_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ptc/cyclic.hpp"
#include "ptc/linalg.hpp"
#include "ptc/nets.hpp"
#include "ptc/poset.hpp"
#include "ptc/rational.hpp"

namespace ptc::phasetrop {

using cyclic::CyclicPartition;
using cyclic::StratumLabel;
using cyclic::Subset;
using nets::Net;

struct PhaseTropError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct TripleCell {
  Subset i = 0, i_prime = 0;
  Net tau;
  int dim() const { return cyclic::size_of(i_prime) - cyclic::size_of(i) + tau.rank(); }
  // Stratum of the relative interior: (sigma(tau), I').
  StratumLabel label() const { return {tau.sigma(), i_prime}; }
  std::string str() const;
};

bool triple_leq(const TripleCell& a, const TripleCell& b);

enum class MaximalType { TypeI, TypeII, Other };

struct PsiComplex {
  StratumLabel host;
  std::vector<TripleCell> cells;  // indexed like complex.cells
  poset::PolyhedralComplexAbstract complex;
  std::vector<int> boundary;  // cells whose stratum is strictly below host

  MaximalType type_of(int cell) const;
  nlohmann::json to_json() const;
  std::string to_dot() const { return complex.cells.to_dot("Psi"); }
};

// All legitimate triples of the closed stratum for (sigma, J) with the face
// order. Throws when (sigma, J) is not in W or the order is not graded by
// dimension.
PsiComplex build_psi(const CyclicPartition& sigma, Subset j);
// Only the cells, without the order (cheap; used for larger n).
std::vector<TripleCell> psi_cells(const CyclicPartition& sigma, Subset j);

struct PsiHomology {
  poset::ChainComplexSummary closed, boundary;
};
PsiHomology psi_complex_boundary_homology(const PsiComplex& psi, poset::Field f = poset::Field::Q);

// Geometric closure order on triples: P_{I,I'} in the closed P_{I~,I~'} and
// the alcove of tau in the closed alcove of tau~.
bool triple_leq_geometric(const TripleCell& a, const TripleCell& b);

// A relative-interior point of P_{I,I'} x A_tau: simplex coordinates y and
// angles theta (pi units).
std::pair<RatVec, RatVec> sample_point(const TripleCell& c);
// Stratum of a point of the simplex times the torus.
StratumLabel ambient_label(const RatVec& y, const RatVec& theta);

// Local structure at a vertex (I, I, tau) of the complex.
struct LocalFan {
  int vertex = -1;
  std::vector<int> incident;    // cells containing the vertex
  std::vector<int> cone_dims;   // dimension of each local cone
};
LocalFan local_fan(const PsiComplex& psi, int vertex);
// For a central vertex (J, J, tau_a): the I labels of the incident cells,
// ordered by reverse inclusion, are dual to the faces of the product of
// simplices on the two sides of tau_a. For a non-central vertex (I, I, tau)
// the incident cells are the product of those of the (sigma, I) complex with
// the faces of an orthant on J \ I. Returns an empty string on success.
std::string local_fan_check(const PsiComplex& psi, int vertex);

// Dual pair of cones in V = Q^d: R = {v : lambda(v) >= 0 for all generators}.
struct ConeModel {
  int dim = 0;
  std::vector<RatVec> dual_generators;  // generators of R-dual
  std::vector<RatVec> rays;             // extreme rays of R
  RatVec v_tilde, lambda_tilde;         // interior vectors, lambda~(v~) = 1

  bool in_cone(const RatVec& v) const;
  // R-dual equals the cone dual to the rays of R; lambda~(v~) = 1; both
  // interior.
  bool verify() const;
  // Projection to W = V / R v~, realized as ker lambda~.
  RatVec pi(const RatVec& v) const;
};

ConeModel make_cone(int dim, std::vector<RatVec> dual_generators, RatVec v_tilde, RatVec lambda_tilde);
// Cone x_{i-} <= x_{i+} in R^{n+1}/R (coordinates with x_0 dropped) for the
// two-block partition <minus, plus> of {0..n}.
ConeModel two_block_cone(Subset minus, Subset plus, int n);
// The face R_I of the boundary fan: x constant on I.
linalg::HSystem boundary_face(Subset minus, Subset plus, Subset i, int n);

// (v, u) lies in the total supporting tangent space.
bool cone_tangent_total(const ConeModel& c, const RatVec& v, const RatVec& u);
std::pair<RatVec, RatVec> psi_stretch(const ConeModel& c, const RatVec& v, const RatVec& u);

// Fiber criterion over the relative interior of R_I for u ordered along
// sigma, whose minus half is the r blocks from `start`: u at the last minus
// block >= u at the first plus block, and u at the last plus block >= u at
// the first minus block (blocks met by I, in order). u is homogeneous.
bool fiber_inequalities(const CyclicPartition& sigma, std::size_t start, std::size_t r, Subset i, const RatVec& u);

// Homogeneous point of R^{n+1}/R in the chart x_0 = 0.
RatVec to_chart(const RatVec& x);

}  // namespace ptc::phasetrop

#endif
