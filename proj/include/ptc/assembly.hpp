#ifndef PTC_ASSEMBLY_HPP
#define PTC_ASSEMBLY_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ptc/cyclic.hpp"
#include "ptc/linalg.hpp"
#include "ptc/poset.hpp"
#include "ptc/rational.hpp"
#include "ptc/tropical.hpp"

namespace ptc::assembly {

struct AssemblyError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using DeckElement = std::vector<long>;  // coefficients on the Smith generators

struct SimplexCoverData {
  std::vector<tropical::ZPoint> b;
  linalg::ZMat diff;                // rows b_i - b_0
  linalg::ZMat xi_lattice;          // basis of Xi_B
  std::vector<Integer> factors;     // Smith diagonal, one per row of diff
  Integer degree = 1;
  linalg::ZMat u, v;                // U * diff * V = diag(factors)
  std::vector<RatVec> translations; // generator translations on N_T, mod 1

  int n() const { return b.empty() ? 0 : static_cast<int>(b.front().size()); }
  bool full_dimensional() const { return diff.size() == static_cast<std::size_t>(n()); }
  // Invariant factors > 1, i.e. the group structure of Lambda_B.
  std::vector<Integer> deck() const;
  std::vector<DeckElement> deck_elements() const;
  RatVec translation(const DeckElement& k) const;  // mod 1
  DeckElement add(const DeckElement& a, const DeckElement& b) const;
  // Class of a base lattice vector m in Z^n / diff Z^n.
  DeckElement key(const linalg::ZVec& m) const;
};

SimplexCoverData simplex_cover(const std::vector<tropical::ZPoint>& b);

// Arguments are angles in pi units; weights are the moduli weights.
struct CoefficientData {
  std::vector<Angle> args;
  std::vector<Rational> weights;  // empty means all 1

  void validate(std::size_t count) const;
  CoefficientData restrict_to(const std::vector<int>& idx) const;
};

// "p/q", "p/q pi" or "p/q*pi"; anything else is rejected.
Angle parse_pi_argument(const std::string& s);
CoefficientData parse_coefficients(const std::vector<std::string>& args);
// Deterministic pseudo-random arguments with denominator 97.
CoefficientData generic_coefficients(std::size_t count, std::uint64_t seed);

struct CoverComplex {
  SimplexCoverData scd;
  poset::FacePoset poset;
  std::vector<cyclic::StratumLabel> base;  // base W label per cell
  std::vector<std::string> base_id;
  std::vector<DeckElement> deck;
  std::vector<RatVec> rep;                 // point of the torus, pi units mod 2

  // Image of a cell under a deck element.
  int act(int cell, const DeckElement& g) const;
};

CoverComplex cover_complex(const SimplexCoverData& scd, const CoefficientData& coeffs);

struct GluedSource {
  std::vector<int> simplex;  // marked set of the maximal simplex
  std::string base;
  DeckElement deck;
};

struct GluedComplex {
  std::vector<std::vector<int>> simplices;
  std::vector<SimplexCoverData> covers;
  std::vector<GluedSource> sources;             // cells before the quotient
  std::vector<int> source_to_quotient;
  std::map<std::string, std::vector<int>> identifications;  // shared cell -> sources
  poset::FacePoset quotient;
  std::vector<int> boundary;                    // cells over the boundary of Q
  long long euler = 0;
  poset::ChainComplexSummary homology;
  int boundary_components = 0;
  int genus = -1;                               // plane curves only

  nlohmann::json to_json() const;
  nlohmann::json summary() const;
};

// order permutes the processing order of the maximal simplices (empty keeps
// the natural one). Several simplices are supported for n <= 2.
GluedComplex glue(const tropical::MarkedPolytope& mp, const tropical::Lifting& eta, const CoefficientData& coeffs,
                  const std::vector<int>& order = {});

// (x, theta + x mod 1); theta in turns.
std::pair<RatVec, RatVec> monodromy_point(const RatVec& x, const RatVec& theta);
// Number of iterations until theta returns.
long monodromy_orbit_length(const RatVec& x, const RatVec& theta, long cap = 100000);

}  // namespace ptc::assembly

#endif
