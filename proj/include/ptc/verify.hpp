#ifndef PTC_VERIFY_HPP
#define PTC_VERIFY_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ptc/tropical.hpp"

namespace ptc::verify {

struct VerifyError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int n = 3;
  std::uint64_t seed = 1;
  std::size_t budget = 1000000;  // collapse search states per complex
  int samples = 1000;            // sample points per alcove
  int pairs = 10000;             // stretch-map pairs per n
  std::string example;           // glue: "plane-curve" or empty for the battery
  std::map<std::string, int> max_n;  // per suite; missing means the default
};

int default_max_n(const std::string& suite);

// Outcome of one check: named results plus human-readable failures.
struct Check {
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void expect(bool cond, const std::string& what);
  void merge(const std::string& key, const Check& sub);
};

struct Report {
  std::string suite;
  nlohmann::json inputs;
  Check check;
  double seconds = 0;
  bool ok() const { return check.ok(); }
  // Deterministic body (no timings).
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();
// Throws VerifyError for an unknown suite or an n above the budget.
Report run_suite(const std::string& suite, const Options& o);
// Several suites in parallel, reports ordered by suite name.
std::vector<Report> run_suites(const std::vector<std::string>& suites, const Options& o);

// ---- individual checks ----

// Chambers of the torus arrangement, alcoves in the zonotope, maximal
// octahedra and the alcoves inside each one.
Check alcove_counts(int n);
// Lifted alcove system against the closed pairwise circle conditions on
// seeded rational points (denominators 1..12), every net of size n.
Check alcove_systems(int n, int samples, std::uint64_t seed);
// f-vector, Euler characteristic, rank formula, Boolean intervals and the
// shape of maximal lower intervals.
Check w_lattice(int n);
// Closed lower intervals are acyclic and their boundaries are spheres
// (order complexes over Q).
Check w_interval_homology(int n, bool maximal_only);
// Combinatorial incidence of alcoves in partial octahedra against the
// geometric containment oracle, all (tau, sigma, J).
Check incidence(int n);
// Witness/classify round trip and the complex-side poset versus W.
Check pants_roundtrip(int n, bool geometric);
Check psi_collapse(int n, std::size_t budget);
// Closed and boundary homology of every closed stratum.
Check psi_homology(int n);
// Poset of closed strata under inclusion versus W.
Check psi_label_poset(int n);
Check stretch_map(int n, int pairs, std::uint64_t seed);
Check covers(int n, std::uint64_t seed);
Check glue_example();
Check glue_battery(std::uint64_t seed);

// Lattice points of a lattice polygon: (interior, boundary).
std::pair<int, int> lattice_point_counts(const tropical::MarkedPolytope& mp);

}  // namespace ptc::verify

#endif
