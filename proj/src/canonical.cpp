#include "wsatlab/canonical.hpp"

#include <algorithm>
#include <map>

#include "wsatlab/codec.hpp"
#include "wsatlab/error.hpp"

namespace wsatlab {
namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

VertexSet to_set(const Cell& cell) {
  VertexSet out;
  for (int v : cell) out.insert(v);
  return out;
}

// Splits cells by neighbour counts into each splitter cell until the ordered
// partition is equitable. Only cell order and counts are consulted, so the
// result commutes with relabeling.
void refine(const Graph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t si = 0; si < p.size() && !changed; ++si) {
      const VertexSet splitter = to_set(p[si]);
      Partition next;
      next.reserve(p.size() + 1);
      for (const Cell& cell : p) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<int, Cell> groups;
        for (int v : cell) groups[(g.neighbors(v) & splitter).size()].push_back(v);
        if (groups.size() > 1) changed = true;
        for (auto& [count, members] : groups) next.push_back(std::move(members));
      }
      if (changed) p = std::move(next);
    }
  }
}

bool twins(const Graph& g, int u, int w) {
  return (g.neighbors(u) - VertexSet::single(w)) == (g.neighbors(w) - VertexSet::single(u));
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  std::vector<int> run() {
    Partition p;
    if (g_.vertex_count() > 0) {
      Cell all(g_.vertex_count());
      for (int v = 0; v < g_.vertex_count(); ++v) all[v] = v;
      p.push_back(std::move(all));
    }
    search(std::move(p));
    return best_order_;
  }

 private:
  void search(Partition p) {
    refine(g_, p);
    auto target = std::find_if(p.begin(), p.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == p.end()) {
      leaf(p);
      return;
    }
    const std::size_t idx = static_cast<std::size_t>(target - p.begin());
    const Cell cell = p[idx];
    // Interchanging twins is an automorphism fixing the current partition,
    // so one branch per twin class covers every leaf code.
    std::vector<int> reps;
    for (int v : cell) {
      bool covered = std::any_of(reps.begin(), reps.end(), [&](int r) { return twins(g_, r, v); });
      if (!covered) reps.push_back(v);
    }
    for (int v : reps) {
      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != idx) {
          child.push_back(p[i]);
          continue;
        }
        child.push_back({v});
        Cell rest;
        for (int w : cell)
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  void leaf(const Partition& p) {
    std::vector<int> order;
    order.reserve(p.size());
    for (const Cell& c : p) order.push_back(c.front());
    std::array<int, Graph::kMaxVertices> pos{};
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    std::vector<std::uint32_t> code(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::uint32_t row = 0;
      for (int w : g_.neighbors(order[i])) row |= std::uint32_t{1} << pos[w];
      code[i] = row;
    }
    if (!have_best_ || code < best_code_) {
      have_best_ = true;
      best_code_ = std::move(code);
      best_order_ = std::move(order);
    }
  }

  const Graph& g_;
  bool have_best_ = false;
  std::vector<std::uint32_t> best_code_;
  std::vector<int> best_order_;
};

}  // namespace

std::vector<int> canonical_order(const Graph& g) {
  if (g.vertex_count() > kCanonicalMaxVertices)
    throw InvalidArgument("canonical form supports at most 16 vertices, got " +
                          std::to_string(g.vertex_count()));
  return CanonicalSearch(g).run();
}

Graph relabel(const Graph& g, const std::vector<int>& order) {
  std::array<int, Graph::kMaxVertices> pos{};
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  Graph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(pos[e.u], pos[e.v]);
  return out;
}

std::string canonical_form(const Graph& g) { return emit_graph6(relabel(g, canonical_order(g))); }

}  // namespace wsatlab
