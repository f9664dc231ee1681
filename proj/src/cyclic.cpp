#include "ptc/cyclic.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <unordered_map>

namespace ptc::cyclic {

int size_of(Subset s) { return std::popcount(s); }
int min_of(Subset s) { return s ? std::countr_zero(s) : -1; }

std::vector<int> elements(Subset s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

Subset subset_of(const std::vector<int>& elems) {
  Subset s = 0;
  for (int e : elems) {
    if (e < 0 || e > 31) throw CyclicError("element out of range");
    s |= bit(e);
  }
  return s;
}

std::string subset_str(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

Subset parse_subset(const std::string& text) {
  Subset s = 0;
  std::string num;
  auto flush = [&] {
    if (num.empty()) return;
    int e = std::stoi(num);
    if (e < 0 || e > 31) throw CyclicError("element out of range: " + num);
    s |= bit(e);
    num.clear();
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') num += c;
    else if (c == ',' || c == '{' || c == '}' || c == ' ') flush();
    else throw CyclicError("bad subset text: " + text);
  }
  flush();
  return s;
}

CyclicPartition::CyclicPartition(std::vector<Subset> blocks) {
  if (blocks.empty()) throw CyclicError("cyclic partition needs at least one block");
  Subset seen = 0;
  for (Subset b : blocks) {
    if (b == 0) throw CyclicError("empty block");
    if (seen & b) throw CyclicError("blocks overlap");
    seen |= b;
  }
  ground_ = seen;
  const int m = min_of(seen);
  auto first = std::find_if(blocks.begin(), blocks.end(), [&](Subset b) { return b & bit(m); });
  std::rotate(blocks.begin(), first, blocks.end());
  blocks_ = std::move(blocks);
}

int CyclicPartition::block_of(int e) const {
  for (std::size_t s = 0; s < blocks_.size(); ++s)
    if (blocks_[s] & bit(e)) return static_cast<int>(s);
  return -1;
}

std::string CyclicPartition::str() const {
  std::string out = "<";
  for (std::size_t s = 0; s < blocks_.size(); ++s) {
    if (s) out += "|";
    out += subset_str(blocks_[s]);
  }
  return out + ">";
}

CyclicPartition CyclicPartition::parse(const std::string& text) {
  auto l = text.find('<');
  auto r = text.rfind('>');
  if (l == std::string::npos || r == std::string::npos || r < l) throw CyclicError("bad partition text: " + text);
  std::string body = text.substr(l + 1, r - l - 1);
  std::vector<Subset> blocks;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    if (cur.find_first_not_of(' ') == std::string::npos) throw CyclicError("empty block in: " + text);
    blocks.push_back(parse_subset(cur));
    cur.clear();
  };
  for (char c : body) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (depth == 0 && (c == '|' || c == ',')) flush();
    else cur += c;
  }
  flush();
  return CyclicPartition(blocks);
}

namespace {

void set_partitions(const std::vector<int>& elems, std::size_t i, std::vector<Subset>& cur,
                    std::vector<std::vector<Subset>>& out) {
  if (i == elems.size()) {
    out.push_back(cur);
    return;
  }
  for (std::size_t b = 0; b < cur.size(); ++b) {
    cur[b] |= bit(elems[i]);
    set_partitions(elems, i + 1, cur, out);
    cur[b] &= ~bit(elems[i]);
  }
  cur.push_back(bit(elems[i]));
  set_partitions(elems, i + 1, cur, out);
  cur.pop_back();
}

}  // namespace

std::vector<CyclicPartition> enumerate_cyclic_partitions_of(Subset ground) {
  if (ground == 0) return {};
  std::vector<std::vector<Subset>> parts;
  std::vector<Subset> cur;
  set_partitions(elements(ground), 0, cur, parts);
  std::vector<CyclicPartition> out;
  for (auto& p : parts) {
    // p[0] holds the minimum; permute the rest
    std::sort(p.begin() + 1, p.end());
    do {
      out.emplace_back(p);
    } while (std::next_permutation(p.begin() + 1, p.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CyclicPartition> enumerate_cyclic_partitions(int n) {
  if (n < 0) throw CyclicError("n must be non-negative");
  return enumerate_cyclic_partitions_of(full_set(n));
}

bool refines(const CyclicPartition& a, const CyclicPartition& b) {
  if (a.ground() != b.ground()) throw CyclicError("refines: ground sets differ");
  const std::size_t ka = a.k(), kb = b.k();
  if (kb < ka) return false;
  std::vector<int> label(kb);
  for (std::size_t s = 0; s < kb; ++s) {
    int host = a.block_of(min_of(b.block(s)));
    if ((a.block(host) & b.block(s)) != b.block(s)) return false;
    label[s] = host;
  }
  if (ka == 1) return true;
  std::size_t start = 0;
  while (start < kb && label[start] == label[(start + kb - 1) % kb]) ++start;
  if (start == kb) return false;
  std::size_t runs = 0;
  int prev = -1;
  for (std::size_t t = 0; t < kb; ++t) {
    int l = label[(start + t) % kb];
    if (l == prev) continue;
    if (prev >= 0 && l != (prev + 1) % static_cast<int>(ka)) return false;
    prev = l;
    ++runs;
  }
  return runs == ka;
}

CyclicPartition induced_partition(const CyclicPartition& sigma, Subset j) {
  if (j == 0) throw CyclicError("induced_partition: empty J");
  if ((j & sigma.ground()) != j) throw CyclicError("induced_partition: J not inside the ground set");
  std::vector<Subset> blocks;
  for (Subset b : sigma.blocks())
    if (b & j) blocks.push_back(b & j);
  return CyclicPartition(blocks);
}

bool divides(const CyclicPartition& sigma, Subset j) {
  int hit = 0;
  for (Subset b : sigma.blocks())
    if (b & j) ++hit;
  return hit >= 2;
}

CyclicPartition partition_of_angles(const RatVec& q, Subset ground) {
  std::map<Rational, Subset> groups;
  for (int e : elements(ground)) groups[mod_positive(q.at(e), Rational(2))] |= bit(e);
  std::vector<Subset> blocks;
  for (auto& [a, s] : groups) blocks.push_back(s);
  return CyclicPartition(blocks);
}

std::string StratumLabel::str() const { return "(" + sigma.str() + ", " + subset_str(j) + ")"; }

StratumLabel StratumLabel::parse(const std::string& text) {
  auto r = text.rfind('>');
  if (r == std::string::npos) throw CyclicError("bad label text: " + text);
  StratumLabel l;
  l.sigma = CyclicPartition::parse(text.substr(0, r + 1));
  auto lb = text.find('{', r);
  auto rb = text.find('}', r);
  if (lb == std::string::npos || rb == std::string::npos) throw CyclicError("bad label text: " + text);
  l.j = parse_subset(text.substr(lb, rb - lb + 1));
  return l;
}

bool label_leq(const StratumLabel& a, const StratumLabel& b) {
  return (a.j & b.j) == a.j && refines(a.sigma, b.sigma);
}

void for_each_W(int n, const std::function<void(const StratumLabel&)>& visit) {
  const Subset g = full_set(n);
  for (const auto& sigma : enumerate_cyclic_partitions(n))
    for (Subset j = 1; j <= g; ++j)
      if (divides(sigma, j)) visit(StratumLabel{sigma, j});
}

std::vector<StratumLabel> enumerate_W(int n) {
  std::vector<StratumLabel> out;
  for_each_W(n, [&](const StratumLabel& l) { out.push_back(l); });
  return out;
}

WLattice build_W_with_labels(int n) {
  if (n < 1) throw CyclicError("build_W: n must be at least 1");
  WLattice w;
  w.labels = enumerate_W(n);
  std::sort(w.labels.begin(), w.labels.end(), [](const StratumLabel& a, const StratumLabel& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a < b;
  });
  std::map<StratumLabel, int> index;
  for (const auto& l : w.labels) index[l] = w.poset.add(l.str(), l.rank());
  for (const auto& l : w.labels) {
    const int hi = index.at(l);
    for (int e : elements(l.j)) {
      StratumLabel lo{l.sigma, l.j & ~bit(e)};
      if (lo.in_W()) w.poset.add_cover(index.at(lo), hi);
    }
    const auto& bl = l.sigma.blocks();
    const std::size_t k = bl.size();
    if (k < 3) continue;  // merging would leave one block, which divides nothing
    for (std::size_t s = 0; s < k; ++s) {
      std::vector<Subset> merged;
      for (std::size_t t = 0; t < k; ++t) {
        if (t == (s + 1) % k) continue;
        merged.push_back(t == s ? (bl[s] | bl[(s + 1) % k]) : bl[t]);
      }
      StratumLabel lo{CyclicPartition(merged), l.j};
      if (lo.in_W()) w.poset.add_cover(index.at(lo), hi);
    }
  }
  w.poset.finalize();
  return w;
}

poset::FacePoset build_W(int n) { return build_W_with_labels(n).poset; }

}  // namespace ptc::cyclic
