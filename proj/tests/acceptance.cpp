// Acceptance run: one line "AC<k> PASS|FAIL" per criterion, details indented.
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "ptc/verify.hpp"

using namespace ptc::verify;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void need(bool c, const std::string& what) {
    if (!c) pass = false;
    if (!c) notes.push_back(what);
  }
  void absorb(const std::string& tag, const Check& c) {
    for (const auto& f : c.failures) need(false, tag + ": " + f);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

double since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// chi of CP^{n-1} minus n+1 generic hyperplanes by inclusion-exclusion:
// s of the hyperplanes meet in a CP^{n-1-s}.
long pants_euler(int n) {
  long chi = 0;
  for (int s = 0; s <= n - 1; ++s) chi += (s % 2 ? -1 : 1) * binom(n + 1, s) * (n - s);
  return chi;
}

std::string tag(const char* what, int n) { return std::string(what) + " n=" + std::to_string(n); }

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> acs;

  acs.emplace_back("AC1", [] {
    Outcome o;
    for (int n = 2; n <= 5; ++n) {
      const auto t = std::chrono::steady_clock::now();
      o.absorb(tag("alcoves", n), alcove_counts(n));
      const double s = since(t);
      o.need(s < 60, tag("alcoves", n) + " took " + std::to_string(s) + " s");
    }
    return o;
  });

  acs.emplace_back("AC2", [] {
    Outcome o;
    for (int n = 2; n <= 5; ++n) {
      const auto t = std::chrono::steady_clock::now();
      const Check c = w_lattice(n);
      const double s = since(t);
      o.absorb(tag("W", n), c);
      o.need(c.results["boolean_intervals"] == true, tag("W", n) + " has a non-Boolean interval");
      o.need(s < 60, tag("W", n) + " took " + std::to_string(s) + " s");
    }
    return o;
  });

  acs.emplace_back("AC3", [] {
    Outcome o;
    for (int n = 2; n <= 5; ++n) {
      const long want = pants_euler(n);
      o.need(want == (n % 2 ? 1 : -1), tag("inclusion-exclusion oracle", n));
      const Check c = w_lattice(n);
      o.need(c.results["euler"] == want, tag("chi(W)", n) + " = " + c.results["euler"].dump() + ", oracle " +
                                             std::to_string(want));
    }
    return o;
  });

  acs.emplace_back("AC4", [] {
    Outcome o;
    for (int n = 1; n <= 3; ++n) o.absorb(tag("intervals", n), w_interval_homology(n, false));
    const auto t = std::chrono::steady_clock::now();
    const Check c4 = w_interval_homology(4, true);
    const double s = since(t);
    o.absorb("maximal intervals n=4", c4);
    o.need(c4.results["cells_checked"] == 24, "expected 24 maximal cells at n=4");
    o.need(s < 600, "n=4 took " + std::to_string(s) + " s");
    return o;
  });

  acs.emplace_back("AC5", [] {
    Outcome o;
    for (int n = 1; n <= 3; ++n) o.absorb(tag("collapse", n), psi_collapse(n, Options{}.budget));
    return o;
  });

  acs.emplace_back("AC6", [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
      const Check c = incidence(n);
      o.absorb(tag("incidence", n), c);
      if (n == 4) o.need(c.results.contains("example_divided_pairs"), "example net not checked");
    }
    return o;
  });

  acs.emplace_back("AC7", [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
      const Check c = alcove_systems(n, 1000, 7);
      o.absorb(tag("systems", n), c);
      if (!c.ok())
        o.note(tag("systems", n) + ": all " + c.results["mismatches"].dump() +
               " mismatches accepted by the closed pairwise system only, " +
               c.results["mismatches_at_generic_points"].dump() + " at generic points");
    }
    return o;
  });

  acs.emplace_back("AC8", [] {
    Outcome o;
    for (int n = 2; n <= 4; ++n) o.absorb(tag("stretch", n), stretch_map(n, 10000, 11));
    return o;
  });

  acs.emplace_back("AC9", [] {
    Outcome o;
    const auto t = std::chrono::steady_clock::now();
    o.absorb("example", glue_example());
    const double s = since(t);
    o.need(s < 10, "example took " + std::to_string(s) + " s");
    return o;
  });

  acs.emplace_back("AC10", [] {
    Outcome o;
    const Check c = glue_battery(5);
    o.absorb("battery", c);
    o.need(c.results.value("polygons", 0) >= 5, "fewer than 5 polygons");
    return o;
  });

  acs.emplace_back("AC11", [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
      o.absorb(tag("pants", n), pants_roundtrip(n, n <= 3));
      o.absorb(tag("psi", n), psi_label_poset(n));
    }
    return o;
  });

  int failed = 0;
  for (auto& [name, run] : acs) {
    const auto t = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.need(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << name << (o.pass ? " PASS" : " FAIL") << "  (" << since(t) << " s)\n";
    for (std::size_t i = 0; i < o.notes.size() && i < 8; ++i) std::cout << "    " << o.notes[i] << "\n";
    std::cout.flush();
  }
  std::cout << (acs.size() - failed) << "/" << acs.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
