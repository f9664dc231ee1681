#include <algorithm>

#include "ptc/poset.hpp"

namespace ptc::poset {

namespace {

struct CollapseState {
  const FacePoset& p;
  std::vector<char> alive;
  std::vector<int> alive_up;
  std::size_t alive_count;

  explicit CollapseState(const FacePoset& q) : p(q), alive(q.size(), 1), alive_up(q.size()), alive_count(q.size()) {
    for (std::size_t i = 0; i < q.size(); ++i) alive_up[i] = static_cast<int>(q.up(static_cast<int>(i)).size());
  }

  // Free pairs (g, f): f maximal, g a facet of f with no other coface.
  std::vector<std::pair<int, int>> free_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t f = 0; f < p.size(); ++f) {
      if (!alive[f] || alive_up[f] != 0) continue;
      for (int g : p.down(static_cast<int>(f)))
        if (alive[g] && alive_up[g] == 1) out.emplace_back(g, static_cast<int>(f));
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
      if (p.id(a.second) != p.id(b.second)) return p.id(a.second) < p.id(b.second);
      return p.id(a.first) < p.id(b.first);
    });
    return out;
  }

  void remove(int c) {
    alive[c] = 0;
    --alive_count;
    for (int g : p.down(c)) --alive_up[g];
  }
  void restore(int c) {
    alive[c] = 1;
    ++alive_count;
    for (int g : p.down(c)) ++alive_up[g];
  }
  bool done() const {
    if (alive_count != 1) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (alive[i]) return p.rank(static_cast<int>(i)) == 0;
    return false;
  }
};

}  // namespace

CollapseResult greedy_collapse(const PolyhedralComplexAbstract& c, std::size_t budget) {
  const FacePoset& p = c.cells;
  if (p.empty()) throw PosetError("greedy_collapse: empty complex");
  if (c.pure && !check_pure(p, c.dim)) throw PosetError("greedy_collapse: complex declared pure is not pure");
  if (p.max_rank() != c.dim) throw PosetError("greedy_collapse: declared dimension does not match");

  CollapseResult res;
  CollapseState st(p);
  if (st.done()) {
    res.status = CollapseResult::Status::Success;
    res.remaining = {0};
    return res;
  }
  struct Frame {
    std::vector<std::pair<int, int>> options;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({st.free_pairs(), 0});
  std::vector<int> best_remaining;
  std::size_t best_alive = st.alive_count;
  bool exhausted_budget = false;
  while (!stack.empty()) {
    Frame& fr = stack.back();
    if (fr.next >= fr.options.size()) {
      if (st.alive_count < best_alive || best_remaining.empty()) {
        best_alive = st.alive_count;
        best_remaining.clear();
        for (std::size_t i = 0; i < p.size(); ++i)
          if (st.alive[i]) best_remaining.push_back(static_cast<int>(i));
      }
      stack.pop_back();
      if (stack.empty()) break;
      auto [g, f] = res.steps.back();
      res.steps.pop_back();
      st.restore(g);
      st.restore(f);
      continue;
    }
    if (res.states >= budget) {
      exhausted_budget = true;
      break;
    }
    auto [g, f] = fr.options[fr.next++];
    ++res.states;
    st.remove(f);
    st.remove(g);
    res.steps.emplace_back(g, f);
    if (st.done()) {
      res.status = CollapseResult::Status::Success;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (st.alive[i]) res.remaining.push_back(static_cast<int>(i));
      return res;
    }
    stack.push_back({st.free_pairs(), 0});
  }
  res.status = exhausted_budget ? CollapseResult::Status::Inconclusive : CollapseResult::Status::Stuck;
  if (exhausted_budget) {
    res.remaining.clear();
    for (std::size_t i = 0; i < p.size(); ++i)
      if (st.alive[i]) res.remaining.push_back(static_cast<int>(i));
  } else {
    res.remaining = best_remaining;
  }
  res.steps.clear();
  return res;
}

}  // namespace ptc::poset
