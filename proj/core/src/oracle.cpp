#include "denthex/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <unordered_map>

namespace denthex {

namespace {

struct BitsetHash {
  size_t operator()(const std::vector<uint64_t>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : v) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

class MatchCounter {
 public:
  explicit MatchCounter(const std::vector<std::vector<int>>& adj)
      : adj_(adj), n_(static_cast<int>(adj.size())), words_((n_ + 63) / 64) {}

  Count count() {
    std::vector<uint64_t> full(words_, 0);
    for (int i = 0; i < n_; ++i) full[i >> 6] |= 1ull << (i & 63);
    return rec(std::move(full));
  }

 private:
  const std::vector<std::vector<int>>& adj_;
  int n_;
  int words_;
  std::unordered_map<std::vector<uint64_t>, Count, BitsetHash> memo_;

  static bool test(const std::vector<uint64_t>& s, int i) {
    return (s[i >> 6] >> (i & 63)) & 1;
  }
  static void clear(std::vector<uint64_t>& s, int i) { s[i >> 6] &= ~(1ull << (i & 63)); }

  int live_degree(const std::vector<uint64_t>& s, int v, int* only) const {
    int d = 0;
    for (int w : adj_[v])
      if (test(s, w)) {
        ++d;
        *only = w;
      }
    return d;
  }

  // forced propagation in place; returns false when some vertex is dead
  bool propagate(std::vector<uint64_t>& s) const {
    std::vector<int> stack;
    for (int v = 0; v < n_; ++v)
      if (test(s, v)) stack.push_back(v);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (!test(s, v)) continue;
      int only = -1;
      int d = live_degree(s, v, &only);
      if (d == 0) return false;
      if (d == 1) {
        clear(s, v);
        clear(s, only);
        for (int u : adj_[v])
          if (test(s, u)) stack.push_back(u);
        for (int u : adj_[only])
          if (test(s, u)) stack.push_back(u);
      }
    }
    return true;
  }

  bool is_empty(const std::vector<uint64_t>& s) const {
    for (uint64_t w : s)
      if (w) return false;
    return true;
  }

  Count rec(std::vector<uint64_t> s) {
    if (!propagate(s)) return 0;
    if (is_empty(s)) return 1;
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    int v = -1;
    for (int w = 0; w < words_ && v < 0; ++w)
      if (s[w]) v = w * 64 + __builtin_ctzll(s[w]);
    Count total = 0;
    for (int u : adj_[v]) {
      if (!test(s, u)) continue;
      std::vector<uint64_t> next = s;
      clear(next, v);
      clear(next, u);
      total += rec(std::move(next));
    }
    memo_.emplace(std::move(s), total);
    return total;
  }
};

}  // namespace

Count count_tilings(const Region& r) {
  if (r.up_count() != r.down_count()) return 0;
  if (r.empty()) return 1;
  Graph g = dual_graph(r);
  MatchCounter mc(g.adj);
  return mc.count();
}

Count count_matchings(const Graph& g) {
  const int n = static_cast<int>(g.adj.size());
  // 2-colorability check
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          throw Error(Errc::NotBipartite, "graph is not bipartite");
        }
      }
    }
  }
  if (n % 2 != 0) return 0;
  MatchCounter mc(g.adj);
  return mc.count();
}

namespace {

void enumerate_rec(const Graph& g, std::vector<char>& alive, int remaining,
                   std::vector<Lozenge>& partial, std::vector<std::vector<Lozenge>>& out,
                   long limit) {
  if (static_cast<long>(out.size()) >= limit) return;
  if (remaining == 0) {
    std::vector<Lozenge> tiling = partial;
    std::sort(tiling.begin(), tiling.end());
    out.push_back(std::move(tiling));
    return;
  }
  // forced propagation with undo on exit
  std::vector<int> removed;
  size_t placed0 = partial.size();
  auto live_deg = [&](int v, int* only) {
    int d = 0;
    for (int w : g.adj[v])
      if (alive[w]) {
        ++d;
        *only = w;
      }
    return d;
  };
  auto undo = [&]() {
    for (int v : removed) alive[v] = 1;
    partial.resize(placed0);
  };
  bool dead = false;
  bool changed = true;
  while (changed && !dead) {
    changed = false;
    for (int v = 0; v < static_cast<int>(g.adj.size()); ++v) {
      if (!alive[v]) continue;
      int only = -1;
      int d = live_deg(v, &only);
      if (d == 0) {
        dead = true;
        break;
      }
      if (d == 1) {
        alive[v] = 0;
        alive[only] = 0;
        removed.push_back(v);
        removed.push_back(only);
        const UnitTriangle &tv = g.verts[v], &tw = g.verts[only];
        partial.push_back(tv.up ? Lozenge{tv, tw} : Lozenge{tw, tv});
        remaining -= 2;
        changed = true;
      }
    }
  }
  if (!dead) {
    if (remaining == 0) {
      std::vector<Lozenge> tiling = partial;
      std::sort(tiling.begin(), tiling.end());
      out.push_back(std::move(tiling));
    } else {
      int v = -1;
      for (int w = 0; w < static_cast<int>(g.adj.size()); ++w)
        if (alive[w]) {
          v = w;
          break;
        }
      for (int u : g.adj[v]) {
        if (!alive[u] || static_cast<long>(out.size()) >= limit) continue;
        alive[v] = alive[u] = 0;
        const UnitTriangle &tv = g.verts[v], &tu = g.verts[u];
        partial.push_back(tv.up ? Lozenge{tv, tu} : Lozenge{tu, tv});
        enumerate_rec(g, alive, remaining - 2, partial, out, limit);
        partial.pop_back();
        alive[v] = alive[u] = 1;
      }
    }
  }
  undo();
}

}  // namespace

std::vector<std::vector<Lozenge>> enumerate_tilings(const Region& r, long limit) {
  std::vector<std::vector<Lozenge>> out;
  if (limit <= 0) return out;
  if (r.up_count() != r.down_count()) return out;
  if (r.empty()) {
    out.push_back({});
    return out;
  }
  Graph g = dual_graph(r);
  std::vector<char> alive(g.adj.size(), 1);
  std::vector<Lozenge> partial;
  enumerate_rec(g, alive, static_cast<int>(g.adj.size()), partial, out, limit);
  return out;
}

}  // namespace denthex
