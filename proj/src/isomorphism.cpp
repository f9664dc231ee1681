#include <algorithm>
#include <map>
#include <set>

#include "ptc/poset.hpp"

namespace ptc::poset {

namespace {

// Joint color refinement on the disjoint union of a and b.
struct Refiner {
  const FacePoset& a;
  const FacePoset& b;
  std::size_t na;

  int rank(std::size_t v) const { return v < na ? a.rank(static_cast<int>(v)) : b.rank(static_cast<int>(v - na)); }
  const std::vector<int>& up(std::size_t v) const {
    return v < na ? a.up(static_cast<int>(v)) : b.up(static_cast<int>(v - na));
  }
  const std::vector<int>& down(std::size_t v) const {
    return v < na ? a.down(static_cast<int>(v)) : b.down(static_cast<int>(v - na));
  }
  std::size_t off(std::size_t v) const { return v < na ? 0 : na; }

  // Returns false when the two sides have different color histograms.
  bool refine(std::vector<int>& color) const {
    const std::size_t n = color.size();
    std::size_t classes = std::set<int>(color.begin(), color.end()).size();
    for (;;) {
      std::map<std::vector<int>, int> sig_id;
      std::vector<int> next(n);
      for (std::size_t v = 0; v < n; ++v) {
        std::vector<int> sig{color[v], -1};
        std::vector<int> u, d;
        for (int w : up(v)) u.push_back(color[w + off(v)]);
        for (int w : down(v)) d.push_back(color[w + off(v)]);
        std::sort(u.begin(), u.end());
        std::sort(d.begin(), d.end());
        sig.insert(sig.end(), u.begin(), u.end());
        sig.push_back(-2);
        sig.insert(sig.end(), d.begin(), d.end());
        auto [it, _] = sig_id.emplace(std::move(sig), static_cast<int>(sig_id.size()));
        next[v] = it->second;
      }
      // renumber by signature order so colors are canonical
      std::vector<int> order(sig_id.size());
      int k = 0;
      for (auto& [s, id] : sig_id) order[id] = k++;
      for (auto& c : next) c = order[c];
      color = std::move(next);
      std::size_t now = sig_id.size();
      if (now == classes) break;
      classes = now;
    }
    std::map<int, long long> hist;
    for (std::size_t v = 0; v < n; ++v) hist[color[v]] += v < na ? 1 : -1;
    for (auto& [c, h] : hist)
      if (h != 0) return false;
    return true;
  }
};

bool verify(const FacePoset& a, const FacePoset& b, const std::vector<int>& m) {
  std::vector<char> hit(b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (m[i] < 0 || hit[m[i]]) return false;
    hit[m[i]] = 1;
    if (a.rank(static_cast<int>(i)) != b.rank(m[i])) return false;
    std::vector<int> ups;
    for (int h : a.up(static_cast<int>(i))) ups.push_back(m[h]);
    std::sort(ups.begin(), ups.end());
    if (ups != b.up(m[i])) return false;
  }
  return true;
}

bool search(const Refiner& R, std::vector<int> color, std::vector<int>& result, int depth) {
  if (!R.refine(color)) return false;
  const std::size_t n = color.size();
  std::map<int, std::vector<std::size_t>> cls_a, cls_b;
  for (std::size_t v = 0; v < n; ++v) (v < R.na ? cls_a : cls_b)[color[v]].push_back(v);
  int pick = -1;
  std::size_t best = 0;
  for (auto& [c, vs] : cls_a)
    if (vs.size() > 1 && (pick < 0 || vs.size() < best)) pick = c, best = vs.size();
  if (pick < 0) {
    result.assign(R.na, -1);
    for (auto& [c, vs] : cls_a) result[vs[0]] = static_cast<int>(cls_b[c][0] - R.na);
    return verify(R.a, R.b, result);
  }
  const std::size_t x = cls_a[pick][0];
  const int fresh = static_cast<int>(n) + depth + 1;
  for (std::size_t y : cls_b[pick]) {
    std::vector<int> c2 = color;
    c2[x] = fresh;
    c2[y] = fresh;
    if (search(R, c2, result, depth + 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> poset_isomorphic(const FacePoset& a, const FacePoset& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.empty()) return std::vector<int>{};
  if (a.f_vector() != b.f_vector()) return std::nullopt;
  Refiner R{a, b, a.size()};
  std::vector<int> color(a.size() + b.size());
  for (std::size_t v = 0; v < color.size(); ++v) color[v] = R.rank(v);
  std::vector<int> result;
  if (search(R, color, result, 0)) return result;
  return std::nullopt;
}

}  // namespace ptc::poset
