#ifndef PTC_NETS_HPP
#define PTC_NETS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ptc/cyclic.hpp"
#include "ptc/poset.hpp"

namespace ptc::nets {

using cyclic::CyclicPartition;
using cyclic::Subset;
using Chord = std::pair<int, int>;  // vertex indices, first < second

struct NetError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Vertex s of a partition with k blocks sits at the start of block s, so
// chord (a,b) has sides {a..b-1} and {b..a-1} (block indices, cyclic).
bool chords_cross(const Chord& x, const Chord& y);

class Net {
 public:
  // Validates, merges blocks across unused vertices and computes the
  // shuffle. Throws NetError on empty or non-crossing chord sets.
  Net(const CyclicPartition& base, const std::vector<Chord>& chords);

  const CyclicPartition& base() const { return base_; }
  const CyclicPartition& sigma() const { return sigma_; }  // sigma(tau)
  const std::vector<Chord>& chords() const { return chords_; }  // on sigma() vertices
  const CyclicPartition& shuffle() const { return shuffle_; }
  // Shuffle blocks as lists of sigma() block indices, in shuffle order.
  const std::vector<std::vector<int>>& shuffle_arcs() const { return shuffle_arcs_; }
  std::size_t k() const { return sigma_.k(); }
  std::size_t l() const { return chords_.size(); }
  int rank() const { return static_cast<int>(chords_.size()) - 1; }

  // Block-index sides of chord c.
  Subset side_blocks(const Chord& c) const;  // bitmask over block indices a..b-1
  Subset side_elements(const Chord& c) const;
  bool chord_divides(const Chord& c, Subset j) const;
  bool divides(Subset j) const;

  enum class PairCase { Same, Opposite, Ordered };
  // Relation between elements i and j. For Ordered, `i_first` tells whether
  // i comes before j counter-clockwise on a side of a non-dividing chord.
  PairCase pair_case(int i, int j, bool* i_first = nullptr) const;

  bool operator==(const Net& o) const { return sigma_ == o.sigma_ && chords_ == o.chords_; }
  bool operator<(const Net& o) const {
    return sigma_ < o.sigma_ || (sigma_ == o.sigma_ && chords_ < o.chords_);
  }
  std::string str() const;
  static Net parse(const std::string& text);

 private:
  CyclicPartition base_, sigma_, shuffle_;
  std::vector<Chord> chords_;
  std::vector<std::vector<int>> shuffle_arcs_;
};

Net make_net(const CyclicPartition& base, const std::vector<Chord>& chords);
CyclicPartition shuffle_of(const Net& net);
bool net_divides(const Net& net, Subset j);

// a precedes b: sigma(b) refines sigma(a) and the chords of a, moved to the
// vertices of b, are chords of b.
bool net_leq(const Net& a, const Net& b);
// Nets obtained by removing one chord.
std::vector<Net> net_facets(const Net& net);

// Pairwise crossing chord sets on k vertices that use every vertex.
const std::vector<std::vector<Chord>>& chord_patterns(int k);
// All nets with sigma(tau) == sigma.
std::vector<Net> nets_on(const CyclicPartition& sigma);
// All nets with ground set {0..n}.
std::vector<Net> enumerate_nets(int n);

struct NetPoset {
  poset::FacePoset poset;
  std::vector<Net> nets;
};
NetPoset build_net_poset(int n);

}  // namespace ptc::nets

#endif
