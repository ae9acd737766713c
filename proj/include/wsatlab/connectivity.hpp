#pragma once

#include <optional>
#include <vector>

#include "wsatlab/bounds.hpp"
#include "wsatlab/graph.hpp"

namespace wsatlab {

/// Vertices of g[within] surviving repeated deletion of degree < k vertices.
VertexSet k_core(const Graph& g, VertexSet within, int k);

/// Connectivity of g[within]: |within| - 1 for a clique, otherwise the least
/// local connectivity over non-adjacent pairs.
int vertex_connectivity(const Graph& g, VertexSet within);

/// A vertex set inducing a k-connected subgraph (at least k + 1 vertices).
std::optional<VertexSet> has_k_connected_subgraph(const Graph& g, int k);

/// The maximal k-connected induced subgraphs, ordered by bit pattern.
std::vector<VertexSet> k_connected_decomposition(const Graph& g, int k);

struct ConnectivityReport {
  int k = 0;
  std::optional<VertexSet> witness_subgraph;
  std::vector<VertexSet> decomposition;
};

ConnectivityReport connectivity_report(const Graph& g, int k);

/// True when g has no (j+2)-connected subgraph, a necessary condition for
/// g to be erasable with j excluded vertices. False refutes erasability.
bool check_erasable_obstruction(const Graph& g, int j);

struct EdgeBounds {
  int n = 0, k = 0;
  Rational mader;  // (3k - 1)(n - k) / 2
  Rational bk;     // 19 k (n - k) / 12
  bool bk_applies = false;  // the 19/12 theorem needs n >= 5k/2
};

/// Edge thresholds above which an n-vertex graph must contain a
/// (k+1)-connected subgraph: Mader's conjectured value and the proven 19/12.
EdgeBounds edge_bounds(int n, int k);

}  // namespace wsatlab
