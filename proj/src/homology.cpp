#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "ptc/poset.hpp"
#include "ptc/rational.hpp"

namespace ptc::poset {

namespace {

using SparseRow = std::vector<std::pair<int, Rational>>;

constexpr std::uint64_t kPrime = 2147483647;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (b %= kPrime; e; e >>= 1, b = b * b % kPrime)
    if (e & 1) r = r * b % kPrime;
  return r;
}

std::size_t sparse_rank_mod(const std::vector<SparseRow>& in) {
  using Row = std::vector<std::pair<int, std::uint64_t>>;
  std::vector<Row> rows;
  rows.reserve(in.size());
  for (const auto& r : in) {
    Row k;
    for (const auto& [c, v] : r) {
      mpz_class num = v.get_num() % static_cast<unsigned long>(kPrime);
      if (num < 0) num += static_cast<unsigned long>(kPrime);
      std::uint64_t x = num.get_ui() * pow_mod(mpz_class(v.get_den() % static_cast<unsigned long>(kPrime)).get_ui(),
                                               kPrime - 2) % kPrime;
      if (x) k.emplace_back(c, x);
    }
    rows.push_back(std::move(k));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.size() < b.size(); });
  std::unordered_map<int, Row> pivots;
  Row next;
  for (auto& row : rows) {
    Row cur = std::move(row);
    while (!cur.empty()) {
      auto it = pivots.find(cur.front().first);
      if (it == pivots.end()) break;
      const Row& p = it->second;  // normalized: leading entry 1
      const std::uint64_t factor = cur.front().second;
      next.clear();
      std::size_t i = 0, j = 0;
      while (i < cur.size() || j < p.size()) {
        if (j == p.size() || (i < cur.size() && cur[i].first < p[j].first)) {
          next.push_back(cur[i++]);
        } else if (i == cur.size() || p[j].first < cur[i].first) {
          next.emplace_back(p[j].first, (kPrime - factor * p[j].second % kPrime) % kPrime);
          ++j;
        } else {
          const std::uint64_t v = (cur[i].second + kPrime - factor * p[j].second % kPrime) % kPrime;
          if (v) next.emplace_back(cur[i].first, v);
          ++i, ++j;
        }
      }
      std::swap(cur, next);
    }
    if (cur.empty()) continue;
    const std::uint64_t inv = pow_mod(cur.front().second, kPrime - 2);
    for (auto& e : cur) e.second = e.second * inv % kPrime;
    const int key = cur.front().first;
    pivots.emplace(key, std::move(cur));
  }
  return pivots.size();
}

// Rank of a sparse matrix by incremental elimination against pivot rows.
std::size_t sparse_rank(std::vector<SparseRow> rows, Field f) {
  if (f == Field::Fp) return sparse_rank_mod(rows);
  if (f == Field::F2)
    for (auto& r : rows) {
      SparseRow k;
      for (auto& [c, v] : r)
        if (v.get_num() % 2 != 0) k.emplace_back(c, Rational(1));
      r = std::move(k);
    }
  std::sort(rows.begin(), rows.end(), [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
  std::map<int, SparseRow> pivots;
  for (auto& row : rows) {
    SparseRow cur = std::move(row);
    while (!cur.empty()) {
      auto it = pivots.find(cur.front().first);
      if (it == pivots.end()) break;
      const SparseRow& p = it->second;
      Rational factor = cur.front().second / p.front().second;
      SparseRow next;
      next.reserve(cur.size() + p.size());
      std::size_t i = 0, j = 0;
      while (i < cur.size() || j < p.size()) {
        if (j == p.size() || (i < cur.size() && cur[i].first < p[j].first)) {
          next.push_back(cur[i++]);
        } else if (i == cur.size() || p[j].first < cur[i].first) {
          Rational v = -factor * p[j].second;
          if (f == Field::F2) v = 1;
          next.emplace_back(p[j].first, v);
          ++j;
        } else {
          Rational v = cur[i].second - factor * p[j].second;
          if (f == Field::F2) v = 0;
          if (v != 0) next.emplace_back(cur[i].first, v);
          ++i, ++j;
        }
      }
      cur = std::move(next);
    }
    if (!cur.empty()) pivots.emplace(cur.front().first, std::move(cur));
  }
  return pivots.size();
}

ChainComplexSummary summarize(const std::vector<long long>& cells,
                              const std::vector<std::size_t>& ranks /* ranks[k] = rank d_k */) {
  ChainComplexSummary s;
  s.cells = cells;
  const std::size_t top = cells.size();
  for (std::size_t k = 0; k < top; ++k) {
    long long rk_out = k < ranks.size() ? static_cast<long long>(ranks[k]) : 0;
    long long rk_in = k + 1 < ranks.size() ? static_cast<long long>(ranks[k + 1]) : 0;
    s.betti.push_back(cells[k] - rk_out - rk_in);
    s.euler += (k % 2 == 0 ? 1 : -1) * cells[k];
  }
  while (!s.betti.empty() && s.betti.back() == 0) s.betti.pop_back();
  return s;
}

}  // namespace

ChainComplexSummary order_complex_homology(const FacePoset& p, Field f) {
  if (p.empty()) return {};
  // strict upper sets
  std::vector<std::vector<int>> above(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    above[i] = p.upper_set(static_cast<int>(i));
    above[i].erase(std::find(above[i].begin(), above[i].end(), static_cast<int>(i)));
  }
  std::vector<std::map<std::vector<int>, int>> chains;
  std::vector<int> cur;
  auto rec = [&](auto&& self) -> void {
    std::size_t d = cur.size() - 1;
    if (chains.size() <= d) chains.resize(d + 1);
    chains[d].emplace(cur, static_cast<int>(chains[d].size()));
    for (int h : above[cur.back()]) {
      cur.push_back(h);
      self(self);
      cur.pop_back();
    }
  };
  for (std::size_t i = 0; i < p.size(); ++i) {
    cur = {static_cast<int>(i)};
    rec(rec);
  }
  std::vector<long long> cells;
  for (auto& c : chains) cells.push_back(static_cast<long long>(c.size()));
  std::vector<std::size_t> ranks(chains.size(), 0);
  for (std::size_t d = 1; d < chains.size(); ++d) {
    std::vector<SparseRow> rows;
    rows.reserve(chains[d].size());
    for (const auto& [ch, idx] : chains[d]) {
      SparseRow r;
      for (std::size_t i = 0; i < ch.size(); ++i) {
        std::vector<int> face = ch;
        face.erase(face.begin() + static_cast<long>(i));
        r.emplace_back(chains[d - 1].at(face), Rational(i % 2 == 0 ? 1 : -1));
      }
      std::sort(r.begin(), r.end(), [](auto& a, auto& b) { return a.first < b.first; });
      rows.push_back(std::move(r));
    }
    ranks[d] = sparse_rank(std::move(rows), f);
  }
  return summarize(cells, ranks);
}

ChainComplexSummary cellular_homology(const FacePoset& p, Field f) {
  if (p.empty()) return {};
  const int top = p.max_rank();
  std::vector<std::vector<int>> by_rank(top + 1);
  for (std::size_t i = 0; i < p.size(); ++i) by_rank[p.rank(static_cast<int>(i))].push_back(static_cast<int>(i));
  // incidence[c] = (facet, sign)
  std::vector<std::vector<std::pair<int, int>>> inc(p.size());
  std::vector<int> local_sign(p.size(), 0);
  std::vector<char> in_facets(p.size(), 0);
  auto sign_of = [&](int cell, int facet) {
    for (auto& [h, s] : inc[cell])
      if (h == facet) return s;
    throw PosetError("cellular_homology: missing incidence");
  };
  for (int r = 1; r <= top; ++r)
    for (int c : by_rank[r]) {
      const auto& facets = p.down(c);
      if (r == 1) {
        if (facets.size() != 2) throw PosetError("cellular_homology: edge " + p.id(c) + " without two endpoints");
        inc[c] = {{facets[0], 1}, {facets[1], -1}};
        continue;
      }
      if (facets.empty()) throw PosetError("cellular_homology: cell without facets " + p.id(c));
      for (int h : facets) in_facets[h] = 1, local_sign[h] = 0;
      local_sign[facets[0]] = 1;
      std::vector<int> queue{facets[0]};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        int h = queue[q];
        for (int g : p.down(h)) {
          int other = -1, count = 0;
          for (int h2 : p.up(g))
            if (in_facets[h2] && h2 != h) other = h2, ++count;
          if (count != 1) throw PosetError("cellular_homology: interval not a diamond under " + p.id(c));
          int want = -local_sign[h] * sign_of(h, g) * sign_of(other, g);
          if (local_sign[other] == 0) {
            local_sign[other] = want;
            queue.push_back(other);
          } else if (local_sign[other] != want) {
            throw PosetError("cellular_homology: non-orientable boundary of " + p.id(c));
          }
        }
      }
      for (int h : facets) {
        if (local_sign[h] == 0) throw PosetError("cellular_homology: disconnected boundary of " + p.id(c));
        inc[c].emplace_back(h, local_sign[h]);
        in_facets[h] = 0;
      }
    }
  // boundary of boundary must vanish
  for (int r = 2; r <= top; ++r)
    for (int c : by_rank[r]) {
      std::map<int, int> acc;
      for (auto& [h, s] : inc[c])
        for (auto& [g, t] : inc[h]) acc[g] += s * t;
      for (auto& [g, v] : acc)
        if (v != 0) throw PosetError("cellular_homology: d^2 != 0 at " + p.id(c));
    }
  std::vector<int> local(p.size(), 0);
  for (int r = 0; r <= top; ++r)
    for (std::size_t k = 0; k < by_rank[r].size(); ++k) local[by_rank[r][k]] = static_cast<int>(k);
  std::vector<long long> cells;
  for (auto& v : by_rank) cells.push_back(static_cast<long long>(v.size()));
  std::vector<std::size_t> ranks(top + 1, 0);
  for (int r = 1; r <= top; ++r) {
    std::vector<SparseRow> rows;
    for (int c : by_rank[r]) {
      SparseRow row;
      for (auto& [h, s] : inc[c]) row.emplace_back(local[h], Rational(s));
      std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.first < b.first; });
      rows.push_back(std::move(row));
    }
    ranks[r] = sparse_rank(std::move(rows), f);
  }
  return summarize(cells, ranks);
}

}  // namespace ptc::poset
