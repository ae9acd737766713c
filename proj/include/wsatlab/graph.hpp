#pragma once

#include <array>
#include <span>
#include <vector>

#include "wsatlab/vertex_set.hpp"

namespace wsatlab {

/**
 * Labeled simple undirected graph on at most 64 vertices. Each row of the
 * adjacency matrix is a VertexSet, so neighbourhood algebra is word-parallel.
 */
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const { return n_; }
  VertexSet vertices() const { return VertexSet::first(n_); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  bool has_edge(Edge e) const { return adj_[e.u].contains(e.v); }
  int edge_count() const;
  bool empty() const { return edge_count() == 0; }

  void add_edge(int u, int v);
  void add_edge(Edge e) { add_edge(e.u, e.v); }
  void remove_edge(int u, int v);
  void remove_edge(Edge e) { remove_edge(e.u, e.v); }

  Graph without_edge(Edge e) const {
    Graph g = *this;
    g.remove_edge(e);
    return g;
  }
  Graph with_edge(Edge e) const {
    Graph g = *this;
    g.add_edge(e);
    return g;
  }

  /// Edges in lexicographic order of (u, v) with u < v.
  std::vector<Edge> edges() const;
  /// Vertices incident to at least one edge.
  VertexSet non_isolated() const;

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

Graph complement(const Graph& g);

/// Vertex set reachable from `from` inside g[within]; `from` must be in `within`.
VertexSet reachable(const Graph& g, int from, VertexSet within);

/// Components of g[within], ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet within);
inline std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.vertices());
}

bool is_connected(const Graph& g, VertexSet within);

struct VertexCut {
  int size = 0;
  VertexSet cut;
};

/**
 * Maximum number of internally vertex-disjoint u-v paths inside g[within],
 * together with a minimum u-v vertex separator. Requires u != v, both in
 * `within`, and {u, v} not an edge.
 */
VertexCut min_vertex_cut(const Graph& g, int u, int v, VertexSet within);

int local_vertex_connectivity(const Graph& g, int u, int v);

/// All edges {u, v} of K_n in lexicographic order; used as the enumeration alphabet.
std::vector<Edge> complete_edge_list(int n);

}  // namespace wsatlab
