#ifndef PTC_LINALG_HPP
#define PTC_LINALG_HPP

#include <optional>
#include <vector>

#include "ptc/rational.hpp"

namespace ptc::linalg {

using Mat = std::vector<RatVec>;
using ZVec = std::vector<Integer>;
using ZMat = std::vector<ZVec>;

struct Echelon {
  Mat rows;                 // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column per row
};

Echelon rref(Mat m, std::size_t ncols);
std::size_t rank(const Mat& m, std::size_t ncols);
Rational det(Mat m);
// Basis of {x : m x = 0}.
Mat kernel(const Mat& m, std::size_t ncols);
// Some solution of m x = b, or nullopt when inconsistent.
std::optional<RatVec> solve(const Mat& m, const RatVec& b, std::size_t ncols);
Rational dot(const RatVec& a, const RatVec& b);

// Smith normal form: U * A * V = D with U, V unimodular.
struct Smith {
  ZMat D, U, V;
  std::vector<Integer> factors;  // non-zero diagonal entries
};
Smith smith(const ZMat& a);
// Inverse of a unimodular matrix.
ZMat unimodular_inverse(const ZMat& u);
// Lattice basis of {x in Z^n : A x = 0}.
ZMat integer_kernel(const ZMat& a, std::size_t ncols);

// Polyhedron { x : A x <= b, E x = e } in Q^dim.
struct HSystem {
  std::size_t dim = 0;
  Mat A;
  RatVec b;
  Mat E;
  RatVec e;

  void le(const RatVec& row, const Rational& rhs);
  void ge(const RatVec& row, const Rational& rhs);
  void eq(const RatVec& row, const Rational& rhs);
  bool contains(const RatVec& x) const;
};

// Minkowski-Weyl data: P = conv(vertices) + cone(rays) + span(lineality).
struct VRep {
  std::vector<RatVec> vertices;
  std::vector<RatVec> rays;
  Mat lineality;
  bool empty() const { return vertices.empty(); }
  bool bounded() const { return rays.empty() && lineality.empty(); }
  int dimension() const;  // -1 when empty
};

VRep enumerate(const HSystem& h);

}  // namespace ptc::linalg

#endif
