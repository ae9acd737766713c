#include "oracles.hpp"

#include <unordered_map>
#include <vector>

namespace oracle {

namespace {

std::vector<int> members(std::uint64_t bits) {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v)
    if ((bits >> v) & 1U) out.push_back(v);
  return out;
}

bool adjacent(const Graph& g, int a, int b) { return g.has_edge(a, b); }

// All k-subsets of `pool` as bit patterns.
void subsets(const std::vector<int>& pool, int k, std::size_t from, std::uint64_t acc,
             std::vector<std::uint64_t>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = from; i + k <= pool.size(); ++i) subsets(pool, k - 1, i + 1, acc | (1ULL << pool[i]), out);
}

std::vector<std::uint64_t> subsets(const std::vector<int>& pool, int k) {
  std::vector<std::uint64_t> out;
  if (k >= 0 && static_cast<std::size_t>(k) <= pool.size()) subsets(pool, k, 0, 0, out);
  return out;
}

bool only_cross_edge(const Graph& g, std::uint64_t a, std::uint64_t b, Edge e) {
  for (int x : members(a))
    for (int y : members(b)) {
      const Edge xy = wsatlab::make_edge(x, y);
      if (adjacent(g, x, y) && !(xy == e)) return false;
    }
  return true;
}

}  // namespace

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

bool linked(const Graph& g, int u, int v, VertexSet within) {
  std::vector<int> stack{u};
  std::vector<char> seen(g.vertex_count(), 0);
  seen[u] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (x == v) return true;
    for (int y = 0; y < g.vertex_count(); ++y) {
      if (!seen[y] && within.contains(y) && adjacent(g, x, y)) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return false;
}

int local_connectivity(const Graph& g, int u, int v) {
  std::vector<int> pool;
  for (int x = 0; x < g.vertex_count(); ++x)
    if (x != u && x != v) pool.push_back(x);
  const VertexSet all = g.vertices();
  for (int k = 0; k <= static_cast<int>(pool.size()); ++k)
    for (std::uint64_t cut : subsets(pool, k))
      if (!linked(g, u, v, all - VertexSet(cut))) return k;
  return static_cast<int>(pool.size());
}

bool exact_erasable_edge(const Graph& g, Edge e, int s, int t) {
  const int n = g.vertex_count();
  std::vector<int> pool;
  for (int x = 0; x < n; ++x)
    if (x != e.u && x != e.v) pool.push_back(x);
  for (int flip = 0; flip < 2; ++flip) {
    const int p = flip ? e.v : e.u;
    const int q = flip ? e.u : e.v;
    for (std::uint64_t a : subsets(pool, s - 1)) {
      std::vector<int> rest;
      for (int x : pool)
        if (!((a >> x) & 1U)) rest.push_back(x);
      for (std::uint64_t b : subsets(rest, t - 1)) {
        if (only_cross_edge(g, a | (1ULL << p), b | (1ULL << q), e)) return true;
      }
    }
  }
  return false;
}

bool relaxed_erasable_edge(const Graph& g, Edge e, int j) {
  const int n = g.vertex_count();
  if (n == j + 1) return true;
  std::vector<int> pool;
  for (int x = 0; x < n; ++x)
    if (x != e.u && x != e.v) pool.push_back(x);
  const Graph minus = g.without_edge(e);
  for (std::uint64_t w : subsets(pool, j))
    if (!linked(minus, e.u, e.v, g.vertices() - VertexSet(w))) return true;
  return false;
}

bool erasable(const Graph& g, int s, int t, int mode_j) {
  const std::vector<Edge> edges = g.edges();
  std::unordered_map<std::uint64_t, bool> memo;
  // Bit i of mask set: edge i still present.
  auto rec = [&](auto&& self, std::uint64_t mask) -> bool {
    if (mask == 0) return true;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Graph cur(g.vertex_count());
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((mask >> i) & 1U) cur.add_edge(edges[i]);
    bool ok = false;
    for (std::size_t i = 0; i < edges.size() && !ok; ++i) {
      if (!((mask >> i) & 1U)) continue;
      const bool step = mode_j < 0 ? exact_erasable_edge(cur, edges[i], s, t)
                                   : relaxed_erasable_edge(cur, edges[i], mode_j);
      if (step) ok = self(self, mask & ~(1ULL << i));
    }
    memo[mask] = ok;
    return ok;
  };
  return rec(rec, edges.empty() ? 0 : (edges.size() == 64 ? ~0ULL : (1ULL << edges.size()) - 1));
}

bool k_connected(const Graph& g, VertexSet x, int k) {
  if (x.size() < k + 1) return false;
  const std::vector<int> xs = x.to_vector();
  for (int d = 0; d < k; ++d) {
    for (std::uint64_t removed : subsets(xs, d)) {
      const VertexSet left = x - VertexSet(removed);
      const int start = left.front();
      for (int y : left)
        if (!linked(g, start, y, left)) return false;
    }
  }
  return true;
}

bool has_k_connected_subgraph(const Graph& g, int k) {
  const int n = g.vertex_count();
  for (std::uint64_t bits = 1; bits < (1ULL << n); ++bits)
    if (k_connected(g, VertexSet(bits), k)) return true;
  return false;
}

bool contains_kst(const Graph& h, int s, int t) {
  std::vector<int> all;
  for (int x = 0; x < h.vertex_count(); ++x) all.push_back(x);
  for (std::uint64_t a : subsets(all, s)) {
    int common = 0;
    for (int y : all) {
      if ((a >> y) & 1U) continue;
      bool ok = true;
      for (int x : members(a)) ok = ok && adjacent(h, x, y);
      if (ok) ++common;
    }
    if (common >= t) return true;
  }
  return false;
}

namespace {

// A K_{s,t} in h + e using the pair e across.
bool new_copy_through(const Graph& h, Edge e, int s, int t) {
  const Graph plus = h.with_edge(e);
  std::vector<int> pool;
  for (int x = 0; x < h.vertex_count(); ++x)
    if (x != e.u && x != e.v) pool.push_back(x);
  for (int flip = 0; flip < 2; ++flip) {
    const int p = flip ? e.v : e.u;
    const int q = flip ? e.u : e.v;
    for (std::uint64_t a : subsets(pool, s - 1)) {
      const std::uint64_t side_a = a | (1ULL << p);
      std::vector<int> rest;
      for (int x : pool)
        if (!((a >> x) & 1U)) rest.push_back(x);
      for (std::uint64_t b : subsets(rest, t - 1)) {
        const std::uint64_t side_b = b | (1ULL << q);
        bool full = true;
        for (int x : members(side_a))
          for (int y : members(side_b)) full = full && adjacent(plus, x, y);
        if (full) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool weakly_saturated_by_closure(const Graph& h, int s, int t) {
  if (contains_kst(h, s, t)) return false;
  Graph cur = h;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int u = 0; u < h.vertex_count(); ++u)
      for (int v = u + 1; v < h.vertex_count(); ++v)
        if (!cur.has_edge(u, v) && new_copy_through(cur, Edge{u, v}, s, t)) {
          cur.add_edge(u, v);
          grew = true;
        }
  }
  return cur.edge_count() == h.vertex_count() * (h.vertex_count() - 1) / 2;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace oracle
