#include "ptc/poset.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

#include "json.hpp"

namespace ptc::poset {

int FacePoset::add(const std::string& id, int rank) {
  if (index_.count(id)) throw PosetError("duplicate element " + id);
  if (rank < 0) throw PosetError("negative rank for " + id);
  int i = static_cast<int>(ids_.size());
  ids_.push_back(id);
  ranks_.push_back(rank);
  up_.emplace_back();
  down_.emplace_back();
  index_.emplace(id, i);
  return i;
}

void FacePoset::add_cover(int lo, int hi) {
  up_[lo].push_back(hi);
  down_[hi].push_back(lo);
}

void FacePoset::add_cover(const std::string& lo, const std::string& hi) { add_cover(at(lo), at(hi)); }

void FacePoset::finalize() {
  for (std::size_t i = 0; i < size(); ++i) {
    for (auto* v : {&up_[i], &down_[i]}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    for (int h : up_[i])
      if (ranks_[h] != ranks_[i] + 1)
        throw PosetError("cover " + ids_[i] + " < " + ids_[h] + " does not raise rank by one");
  }
}

std::optional<int> FacePoset::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FacePoset::at(const std::string& id) const {
  auto i = find(id);
  if (!i) throw PosetError("unknown element " + id);
  return *i;
}

bool FacePoset::leq(int a, int b) const {
  if (a == b) return true;
  if (ranks_[a] >= ranks_[b]) return false;
  std::vector<int> stack{b};
  std::vector<char> seen(size(), 0);
  seen[b] = 1;
  while (!stack.empty()) {
    int z = stack.back();
    stack.pop_back();
    for (int w : down_[z]) {
      if (w == a) return true;
      if (seen[w] || ranks_[w] <= ranks_[a]) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return false;
}

namespace {

std::vector<int> closure(const FacePoset& p, int x, bool downward) {
  std::vector<int> out{x};
  std::vector<char> seen(p.size(), 0);
  seen[x] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int w : downward ? p.down(out[k]) : p.up(out[k]))
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<int> FacePoset::lower_set(int x) const { return closure(*this, x, true); }
std::vector<int> FacePoset::upper_set(int x) const { return closure(*this, x, false); }

FacePoset FacePoset::induced(const std::vector<int>& elems) const {
  FacePoset q;
  std::unordered_map<int, int> local;
  for (int e : elems) local[e] = q.add(ids_[e], ranks_[e]);
  for (int e : elems)
    for (int h : up_[e]) {
      auto it = local.find(h);
      if (it != local.end()) q.add_cover(local[e], it->second);
    }
  q.finalize();
  return q;
}

int FacePoset::max_rank() const {
  int m = -1;
  for (int r : ranks_) m = std::max(m, r);
  return m;
}

std::vector<std::size_t> FacePoset::f_vector() const {
  std::vector<std::size_t> f(max_rank() + 1, 0);
  for (int r : ranks_) ++f[r];
  return f;
}

std::vector<int> FacePoset::maximal() const {
  std::vector<int> m;
  for (std::size_t i = 0; i < size(); ++i)
    if (up_[i].empty()) m.push_back(static_cast<int>(i));
  return m;
}

long long FacePoset::euler() const {
  long long e = 0;
  for (int r : ranks_) e += (r % 2 == 0) ? 1 : -1;
  return e;
}

std::string FacePoset::to_json() const {
  nlohmann::ordered_json j;
  j["elements"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < size(); ++i)
    j["elements"].push_back({{"id", ids_[i]}, {"rank", ranks_[i]}});
  j["covers"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < size(); ++i)
    for (int h : up_[i]) j["covers"].push_back({ids_[i], ids_[h]});
  return j.dump(1);
}

FacePoset FacePoset::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  FacePoset p;
  for (const auto& e : j.at("elements")) p.add(e.at("id").get<std::string>(), e.at("rank").get<int>());
  for (const auto& c : j.at("covers")) p.add_cover(c.at(0).get<std::string>(), c.at(1).get<std::string>());
  p.finalize();
  return p;
}

std::string FacePoset::to_dot(const std::string& name) const {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n  rankdir=BT;\n";
  for (int r = 0; r <= max_rank(); ++r) {
    os << "  { rank=same;";
    for (std::size_t i = 0; i < size(); ++i)
      if (ranks_[i] == r) os << " " << quote(ids_[i]) << ";";
    os << " }\n";
  }
  for (std::size_t i = 0; i < size(); ++i)
    for (int h : up_[i]) os << "  " << quote(ids_[i]) << " -> " << quote(ids_[h]) << ";\n";
  os << "}\n";
  return os.str();
}

FacePoset lower_interval(const FacePoset& p, const std::string& x) {
  return p.induced(p.lower_set(p.at(x)));
}

FacePoset open_lower_interval(const FacePoset& p, const std::string& x) {
  int xi = p.at(x);
  auto l = p.lower_set(xi);
  l.erase(std::find(l.begin(), l.end(), xi));
  return p.induced(l);
}

namespace {

// Checks [x,y] inside a region marked by `in` (the lower set of y).
// Atom-set criterion: the interval is Boolean iff it has r atoms, 2^r
// elements, z -> atoms(z) is injective with |atoms(z)| = rk z - rk x, and
// every z covers exactly rk z - rk x elements of the interval.
bool boolean_in_region(const FacePoset& p, int x, int y, const std::vector<int>& in, int stamp,
                       std::vector<int>& mark, std::vector<std::uint32_t>& atoms) {
  const int r = p.rank(y) - p.rank(x);
  if (r < 0 || r > 24) return false;
  std::vector<int> level{x};
  std::vector<int> all{x};
  mark[x] = stamp;
  atoms[x] = 0;
  int natoms = 0;
  for (int h : p.up(x))
    if (in[h]) {
      if (natoms >= r) return false;
      mark[h] = stamp;
      atoms[h] = 1u << natoms++;
      all.push_back(h);
    }
  if (natoms != r) return false;
  std::vector<char> used(std::size_t{1} << r, 0);
  used[0] = 1;
  for (std::size_t k = 1; k < all.size(); ++k) used[atoms[all[k]]] = 1;
  std::vector<int> frontier(all.begin() + 1, all.end());
  int height = 1;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int z : frontier)
      for (int h : p.up(z))
        if (in[h] && mark[h] != stamp) {
          mark[h] = stamp;
          next.push_back(h);
        }
    ++height;
    for (int z : next) {
      std::uint32_t s = 0;
      int below = 0;
      for (int w : p.down(z))
        if (mark[w] == stamp && p.rank(w) >= p.rank(x)) {
          s |= atoms[w];
          ++below;
        }
      if (below != height || std::popcount(s) != height || used[s]) return false;
      used[s] = 1;
      atoms[z] = s;
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return all.size() == (std::size_t{1} << r);
}

}  // namespace

bool is_boolean_interval(const FacePoset& p, int x, int y) {
  if (!p.leq(x, y)) throw PosetError("is_boolean_interval: " + p.id(x) + " is not below " + p.id(y));
  std::vector<int> in(p.size(), 0);
  for (int z : p.lower_set(y)) in[z] = 1;
  std::vector<int> mark(p.size(), -1);
  std::vector<std::uint32_t> atoms(p.size(), 0);
  return boolean_in_region(p, x, y, in, 0, mark, atoms);
}

bool is_boolean_interval(const FacePoset& p, const std::string& x, const std::string& y) {
  return is_boolean_interval(p, p.at(x), p.at(y));
}

std::optional<std::pair<int, int>> find_non_boolean_interval(const FacePoset& p) {
  std::vector<int> in(p.size(), 0);
  std::vector<int> mark(p.size(), -1);
  std::vector<std::uint32_t> atoms(p.size(), 0);
  int stamp = 0;
  std::vector<int> low;
  for (std::size_t y = 0; y < p.size(); ++y) {
    low.assign(1, static_cast<int>(y));
    in[y] = 1;
    for (std::size_t k = 0; k < low.size(); ++k)
      for (int w : p.down(low[k]))
        if (!in[w]) {
          in[w] = 1;
          low.push_back(w);
        }
    for (int x : low)
      if (!boolean_in_region(p, x, static_cast<int>(y), in, stamp++, mark, atoms)) {
        for (int z : low) in[z] = 0;
        return std::make_pair(x, static_cast<int>(y));
      }
    for (int z : low) in[z] = 0;
  }
  return std::nullopt;
}

bool check_pure(const FacePoset& p, int dim) {
  for (int m : p.maximal())
    if (p.rank(m) != dim) return false;
  return true;
}

}  // namespace ptc::poset
