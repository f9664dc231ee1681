#ifndef PTC_CYCLIC_HPP
#define PTC_CYCLIC_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptc/poset.hpp"
#include "ptc/rational.hpp"

namespace ptc::cyclic {

struct CyclicError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Subsets of {0,...,31} as bitmasks.
using Subset = std::uint32_t;

inline Subset bit(int i) { return Subset{1} << i; }
inline Subset full_set(int n) { return (Subset{1} << (n + 1)) - 1; }  // {0..n}
int size_of(Subset s);
int min_of(Subset s);
std::vector<int> elements(Subset s);
Subset subset_of(const std::vector<int>& elems);
std::string subset_str(Subset s);
Subset parse_subset(const std::string& text);

// Cyclically ordered set partition, stored with the block containing the
// ground-set minimum first.
class CyclicPartition {
 public:
  CyclicPartition() = default;
  explicit CyclicPartition(std::vector<Subset> blocks);

  std::size_t k() const { return blocks_.size(); }
  const std::vector<Subset>& blocks() const { return blocks_; }
  Subset block(std::size_t s) const { return blocks_[s]; }
  Subset ground() const { return ground_; }
  // Index of the block containing e, or -1.
  int block_of(int e) const;

  bool operator==(const CyclicPartition& o) const { return blocks_ == o.blocks_; }
  bool operator!=(const CyclicPartition& o) const { return blocks_ != o.blocks_; }
  bool operator<(const CyclicPartition& o) const { return blocks_ < o.blocks_; }

  std::string str() const;  // <{0,1}|{2}>
  static CyclicPartition parse(const std::string& text);

 private:
  std::vector<Subset> blocks_;
  Subset ground_ = 0;
};

std::vector<CyclicPartition> enumerate_cyclic_partitions(int n);
std::vector<CyclicPartition> enumerate_cyclic_partitions_of(Subset ground);

// True iff b refines a (a precedes b in the order): every block of a is a
// union of cyclically consecutive blocks of b, in the same cyclic order.
bool refines(const CyclicPartition& a, const CyclicPartition& b);

CyclicPartition induced_partition(const CyclicPartition& sigma, Subset j);
// J meets at least two blocks.
bool divides(const CyclicPartition& sigma, Subset j);

// Cyclic partition read off from points q_i * pi on the circle (index i is
// the element), listed counter-clockwise.
CyclicPartition partition_of_angles(const RatVec& q, Subset ground);

struct StratumLabel {
  CyclicPartition sigma;
  Subset j = 0;

  bool in_W() const { return divides(sigma, j); }
  int rank() const { return static_cast<int>(sigma.k()) + size_of(j) - 4; }
  std::string str() const;  // (<...>, {..})
  static StratumLabel parse(const std::string& text);
  bool operator==(const StratumLabel& o) const { return sigma == o.sigma && j == o.j; }
  bool operator<(const StratumLabel& o) const { return sigma < o.sigma || (sigma == o.sigma && j < o.j); }
};

// (a, ja) precedes (b, jb): b refines a and ja is a subset of jb.
bool label_leq(const StratumLabel& a, const StratumLabel& b);

// All members of W for the ground set {0..n}, streamed.
void for_each_W(int n, const std::function<void(const StratumLabel&)>& visit);
std::vector<StratumLabel> enumerate_W(int n);

struct WLattice {
  poset::FacePoset poset;
  std::vector<StratumLabel> labels;  // indexed like poset elements
};

// Covers: merge two consecutive blocks, or drop one element of J.
WLattice build_W_with_labels(int n);
poset::FacePoset build_W(int n);

}  // namespace ptc::cyclic

#endif
