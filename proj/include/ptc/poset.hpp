#ifndef PTC_POSET_HPP
#define PTC_POSET_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ptc::poset {

struct PosetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite ranked poset given by its covering relation. Elements are interned
// string labels; indices are stable in insertion order.
class FacePoset {
 public:
  int add(const std::string& id, int rank);
  void add_cover(int lo, int hi);
  void add_cover(const std::string& lo, const std::string& hi);
  // Dedupe covers and check that every cover raises rank by one.
  void finalize();

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::string& id(int i) const { return ids_[i]; }
  int rank(int i) const { return ranks_[i]; }
  const std::vector<int>& up(int i) const { return up_[i]; }
  const std::vector<int>& down(int i) const { return down_[i]; }
  std::optional<int> find(const std::string& id) const;
  int at(const std::string& id) const;

  bool leq(int a, int b) const;
  // Indices of {y : y <= x}, sorted.
  std::vector<int> lower_set(int x) const;
  std::vector<int> upper_set(int x) const;
  // Sub-poset on a convex subset (covers are restricted, not recomputed).
  FacePoset induced(const std::vector<int>& elems) const;

  int max_rank() const;
  std::vector<std::size_t> f_vector() const;
  std::vector<int> maximal() const;
  long long euler() const;  // sum of (-1)^rank

  std::string to_json() const;
  static FacePoset from_json(const std::string& text);
  std::string to_dot(const std::string& name = "P") const;

 private:
  std::vector<std::string> ids_;
  std::vector<int> ranks_;
  std::vector<std::vector<int>> up_, down_;
  std::unordered_map<std::string, int> index_;
};

FacePoset lower_interval(const FacePoset& p, const std::string& x);
// Elements strictly below x.
FacePoset open_lower_interval(const FacePoset& p, const std::string& x);

// Throws on incomparable pair.
bool is_boolean_interval(const FacePoset& p, int x, int y);
bool is_boolean_interval(const FacePoset& p, const std::string& x, const std::string& y);
// Every interval of p Boolean. Returns the first offending pair if not.
std::optional<std::pair<int, int>> find_non_boolean_interval(const FacePoset& p);

// map[i] = image in b of element i of a.
std::optional<std::vector<int>> poset_isomorphic(const FacePoset& a, const FacePoset& b);

// Fp is the prime field of order 2^31 - 1. Ranks over Fp never exceed ranks
// over Q, so Fp betti numbers bound the rational ones from above.
enum class Field { Q, F2, Fp };

struct ChainComplexSummary {
  std::vector<long long> betti;  // trailing zeros trimmed
  long long euler = 0;
  std::vector<long long> cells;  // cells per dimension
};

ChainComplexSummary order_complex_homology(const FacePoset& p, Field f = Field::Q);
// Cellular homology of a regular CW complex with face poset p (ranks are
// dimensions). Incidence numbers are oriented through the diamond property.
ChainComplexSummary cellular_homology(const FacePoset& p, Field f = Field::Q);

struct PolyhedralComplexAbstract {
  FacePoset cells;
  int dim = 0;
  bool pure = true;
};

struct CollapseResult {
  enum class Status { Success, Stuck, Inconclusive };
  Status status = Status::Stuck;
  std::vector<std::pair<int, int>> steps;  // (face, coface) removed
  std::vector<int> remaining;              // alive cells at the end
  std::size_t states = 0;
  bool ok() const { return status == Status::Success; }
};

bool check_pure(const FacePoset& p, int dim);
CollapseResult greedy_collapse(const PolyhedralComplexAbstract& c,
                               std::size_t budget = 1000000);

}  // namespace ptc::poset

#endif
