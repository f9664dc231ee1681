#include "ptc/nets.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace ptc::nets {

using cyclic::bit;

namespace {

Chord norm(int a, int b) { return a < b ? Chord{a, b} : Chord{b, a}; }

// v strictly inside the open arc from a to b (counter-clockwise) on k points.
bool strictly_between(int a, int b, int v, int k) {
  int dv = ((v - a) % k + k) % k;
  int db = ((b - a) % k + k) % k;
  return dv > 0 && dv < db;
}

}  // namespace

bool chords_cross(const Chord& x, const Chord& y) {
  if (x.first == y.first || x.first == y.second || x.second == y.first || x.second == y.second) return true;
  bool in1 = y.first > x.first && y.first < x.second;
  bool in2 = y.second > x.first && y.second < x.second;
  return in1 != in2;
}

Net::Net(const CyclicPartition& base, const std::vector<Chord>& chords) : base_(base) {
  const int k0 = static_cast<int>(base.k());
  if (chords.empty()) throw NetError("net needs at least one chord");
  std::set<Chord> cs;
  for (auto [a, b] : chords) {
    if (a < 0 || b < 0 || a >= k0 || b >= k0 || a == b) throw NetError("invalid chord endpoints");
    cs.insert(norm(a, b));
  }
  std::vector<Chord> in(cs.begin(), cs.end());
  for (std::size_t i = 0; i < in.size(); ++i)
    for (std::size_t j = i + 1; j < in.size(); ++j)
      if (!chords_cross(in[i], in[j]))
        throw NetError("chords (" + std::to_string(in[i].first) + "," + std::to_string(in[i].second) + ") and (" +
                       std::to_string(in[j].first) + "," + std::to_string(in[j].second) + ") do not intersect");
  // merge blocks across unused vertices
  std::vector<int> used;
  for (auto [a, b] : in) used.push_back(a), used.push_back(b);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  const int m = static_cast<int>(used.size());
  std::vector<Subset> merged(m, 0);
  std::vector<int> new_index(k0, -1);
  for (int t = 0; t < m; ++t) {
    new_index[used[t]] = t;
    int end = t + 1 < m ? used[t + 1] : used[0] + k0;
    for (int s = used[t]; s < end; ++s) merged[t] |= base.block(s % k0);
  }
  sigma_ = CyclicPartition(merged);
  int rot = 0;
  while (merged[rot] != sigma_.block(0)) ++rot;
  for (auto [a, b] : in) {
    int na = ((new_index[a] - rot) % m + m) % m;
    int nb = ((new_index[b] - rot) % m + m) % m;
    chords_.push_back(norm(na, nb));
  }
  std::sort(chords_.begin(), chords_.end());

  // Walk the midcircle: the active chord (p,q) advances p or q across one
  // block, or both at once across two opposite blocks.
  const int k = m;
  std::set<Chord> present(chords_.begin(), chords_.end());
  auto has = [&](int a, int b) {
    a %= k, b %= k;
    return a != b && present.count(norm(a, b)) > 0;
  };
  int p = chords_[0].first, q = chords_[0].second;
  std::vector<std::vector<int>> steps;
  std::set<Chord> visited;
  int crossed = 0;
  do {
    if (!visited.insert(norm(p, q)).second) throw NetError("net walk revisits a chord");
    bool c1 = has(p + 1, q), c2 = has(p, q + 1);
    if (c1 && c2) throw NetError("net walk is ambiguous");
    if (c1) {
      steps.push_back({p});
      p = (p + 1) % k;
    } else if (c2) {
      steps.push_back({q});
      q = (q + 1) % k;
    } else if (has(p + 1, q + 1)) {
      steps.push_back({p, q});
      p = (p + 1) % k;
      q = (q + 1) % k;
    } else {
      throw NetError("net walk is stuck");
    }
    crossed += static_cast<int>(steps.back().size());
  } while (norm(p, q) != chords_[0]);
  if (visited.size() != chords_.size() || crossed != k) throw NetError("net walk does not close up");
  std::vector<Subset> kb;
  for (auto& st : steps) {
    Subset s = 0;
    for (int a : st) s |= sigma_.block(a);
    kb.push_back(s);
  }
  shuffle_ = CyclicPartition(kb);
  int srot = 0;
  while (kb[srot] != shuffle_.block(0)) ++srot;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    auto st = steps[(srot + t) % steps.size()];
    std::sort(st.begin(), st.end());
    shuffle_arcs_.push_back(st);
  }
}

Subset Net::side_blocks(const Chord& c) const {
  Subset s = 0;
  for (int x = c.first; x < c.second; ++x) s |= bit(x);
  return s;
}

Subset Net::side_elements(const Chord& c) const {
  Subset s = 0;
  for (int x = c.first; x < c.second; ++x) s |= sigma_.block(x);
  return s;
}

bool Net::chord_divides(const Chord& c, Subset j) const {
  Subset side = side_elements(c);
  return (j & side) != 0 && (j & ~side & sigma_.ground()) != 0;
}

bool Net::divides(Subset j) const {
  for (const auto& c : chords_)
    if (!chord_divides(c, j)) return false;
  return true;
}

Net::PairCase Net::pair_case(int i, int j, bool* i_first) const {
  const int r = sigma_.block_of(i), s = sigma_.block_of(j);
  if (r < 0 || s < 0) throw NetError("pair_case: element outside the ground set");
  if (r == s) return PairCase::Same;
  const int kk = static_cast<int>(k());
  for (const auto& c : chords_) {
    Subset side = side_blocks(c);
    bool rin = side & bit(r), sin = side & bit(s);
    if (rin != sin) continue;
    int start = rin ? c.first : c.second;
    int pr = ((r - start) % kk + kk) % kk, ps = ((s - start) % kk + kk) % kk;
    if (i_first) *i_first = pr < ps;
    return PairCase::Ordered;
  }
  return PairCase::Opposite;
}

std::string Net::str() const {
  std::ostringstream os;
  os << "net(" << sigma_.str() << "; chords=[";
  for (std::size_t i = 0; i < chords_.size(); ++i) {
    if (i) os << ",";
    os << "(" << chords_[i].first << "," << chords_[i].second << ")";
  }
  os << "])";
  return os.str();
}

Net Net::parse(const std::string& text) {
  auto l = text.find('<'), r = text.find('>');
  auto c = text.find("chords=[");
  if (l == std::string::npos || r == std::string::npos || c == std::string::npos) throw NetError("bad net text: " + text);
  CyclicPartition sigma = CyclicPartition::parse(text.substr(l, r - l + 1));
  std::vector<Chord> chords;
  std::string body = text.substr(c + 8);
  std::size_t pos = 0;
  while ((pos = body.find('(', pos)) != std::string::npos) {
    int a = 0, b = 0;
    if (std::sscanf(body.c_str() + pos, "(%d,%d)", &a, &b) != 2) throw NetError("bad chord in: " + text);
    chords.emplace_back(a, b);
    ++pos;
  }
  return Net(sigma, chords);
}

Net make_net(const CyclicPartition& base, const std::vector<Chord>& chords) { return Net(base, chords); }
CyclicPartition shuffle_of(const Net& net) { return net.shuffle(); }
bool net_divides(const Net& net, Subset j) { return net.divides(j); }

bool net_leq(const Net& a, const Net& b) {
  if (a.sigma().ground() != b.sigma().ground()) return false;
  if (!cyclic::refines(a.sigma(), b.sigma())) return false;
  const int kb = static_cast<int>(b.k());
  std::vector<int> vmap(a.k(), -1);
  for (int f = 0; f < kb; ++f) {
    int host = a.sigma().block_of(cyclic::min_of(b.sigma().block(f)));
    int prev = a.sigma().block_of(cyclic::min_of(b.sigma().block((f + kb - 1) % kb)));
    if (host != prev) vmap[host] = f;
  }
  std::set<Chord> bc(b.chords().begin(), b.chords().end());
  for (auto [x, y] : a.chords()) {
    if (vmap[x] < 0 || vmap[y] < 0) return false;
    if (!bc.count(norm(vmap[x], vmap[y]))) return false;
  }
  return true;
}

std::vector<Net> net_facets(const Net& net) {
  std::vector<Net> out;
  if (net.l() < 2) return out;
  for (std::size_t drop = 0; drop < net.l(); ++drop) {
    std::vector<Chord> cs;
    for (std::size_t i = 0; i < net.l(); ++i)
      if (i != drop) cs.push_back(net.chords()[i]);
    out.emplace_back(net.sigma(), cs);
  }
  return out;
}

const std::vector<std::vector<Chord>>& chord_patterns(int k) {
  static std::map<int, std::vector<std::vector<Chord>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  if (k > 7) throw NetError("chord_patterns: k too large");
  std::vector<Chord> all;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) all.emplace_back(a, b);
  const std::size_t m = all.size();
  std::vector<std::uint64_t> compat(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (chords_cross(all[i], all[j])) compat[i] |= std::uint64_t{1} << j;
  std::vector<std::vector<Chord>> out;
  const std::uint32_t full_vertices = (1u << k) - 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    bool ok = true;
    std::uint32_t verts = 0;
    for (std::size_t i = 0; i < m && ok; ++i)
      if (mask >> i & 1) {
        if ((compat[i] & mask) != mask) ok = false;
        verts |= (1u << all[i].first) | (1u << all[i].second);
      }
    if (!ok || verts != full_vertices) continue;
    std::vector<Chord> cs;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) cs.push_back(all[i]);
    out.push_back(std::move(cs));
  }
  return cache.emplace(k, std::move(out)).first->second;
}

std::vector<Net> nets_on(const CyclicPartition& sigma) {
  std::vector<Net> out;
  if (sigma.k() < 2) return out;
  for (const auto& pat : chord_patterns(static_cast<int>(sigma.k()))) out.emplace_back(sigma, pat);
  return out;
}

std::vector<Net> enumerate_nets(int n) {
  std::vector<Net> out;
  for (const auto& sigma : cyclic::enumerate_cyclic_partitions(n)) {
    auto v = nets_on(sigma);
    out.insert(out.end(), v.begin(), v.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

NetPoset build_net_poset(int n) {
  NetPoset np;
  np.nets = enumerate_nets(n);
  std::stable_sort(np.nets.begin(), np.nets.end(), [](const Net& a, const Net& b) { return a.rank() < b.rank(); });
  std::map<std::string, int> index;
  for (const auto& t : np.nets) index[t.str()] = np.poset.add(t.str(), t.rank());
  for (const auto& t : np.nets)
    for (const auto& f : net_facets(t)) np.poset.add_cover(index.at(f.str()), index.at(t.str()));
  np.poset.finalize();
  return np;
}

}  // namespace ptc::nets
