#include "wsatlab/connectivity.hpp"

#include <algorithm>

#include "wsatlab/error.hpp"

namespace wsatlab {

VertexSet k_core(const Graph& g, VertexSet within, int k) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : within) {
      if ((g.neighbors(v) & within).size() < k) {
        within.erase(v);
        changed = true;
      }
    }
  }
  return within;
}

namespace {

// First non-adjacent pair in g[piece] with local connectivity below k, as its cut.
std::optional<VertexSet> small_cut(const Graph& g, VertexSet piece, int k) {
  for (int u : piece) {
    const VertexSet later = piece - VertexSet::first(u + 1) - g.neighbors(u);
    for (int v : later) {
      const VertexCut cut = min_vertex_cut(g, u, v, piece);
      if (cut.size < k) return cut.cut;
    }
  }
  return std::nullopt;
}

// Every k-connected subgraph sits whole inside one (component + cut) piece,
// so recursing on pieces never loses one.
void split(const Graph& g, VertexSet piece, int k, bool first_only, std::vector<VertexSet>& out) {
  piece = k_core(g, piece, k);
  for (VertexSet comp : connected_components(g, piece)) {
    if (comp.size() < k + 1) continue;
    const auto cut = small_cut(g, comp, k);
    if (!cut) {
      out.push_back(comp);
    } else {
      for (VertexSet side : connected_components(g, comp - *cut)) {
        split(g, side | *cut, k, first_only, out);
        if (first_only && !out.empty()) return;
      }
    }
    if (first_only && !out.empty()) return;
  }
}

}  // namespace

int vertex_connectivity(const Graph& g, VertexSet within) {
  const int size = within.size();
  int best = size > 0 ? size - 1 : 0;
  for (int u : within) {
    const VertexSet later = within - VertexSet::first(u + 1) - g.neighbors(u);
    for (int v : later) best = std::min(best, min_vertex_cut(g, u, v, within).size);
  }
  return best;
}

std::optional<VertexSet> has_k_connected_subgraph(const Graph& g, int k) {
  if (k < 1) throw InvalidArgument("k-connected subgraph search needs k >= 1");
  std::vector<VertexSet> found;
  split(g, g.vertices(), k, true, found);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<VertexSet> k_connected_decomposition(const Graph& g, int k) {
  if (k < 1) throw InvalidArgument("k-connected decomposition needs k >= 1");
  std::vector<VertexSet> leaves;
  split(g, g.vertices(), k, false, leaves);
  std::sort(leaves.begin(), leaves.end());
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
  std::vector<VertexSet> out;
  for (VertexSet a : leaves) {
    const bool inside = std::any_of(leaves.begin(), leaves.end(),
                                    [&](VertexSet b) { return b != a && a.is_subset_of(b); });
    if (!inside) out.push_back(a);
  }
  return out;
}

ConnectivityReport connectivity_report(const Graph& g, int k) {
  ConnectivityReport report;
  report.k = k;
  report.decomposition = k_connected_decomposition(g, k);
  if (!report.decomposition.empty()) report.witness_subgraph = report.decomposition.front();
  return report;
}

bool check_erasable_obstruction(const Graph& g, int j) {
  if (j < 0) throw InvalidArgument("obstruction check needs j >= 0");
  return !has_k_connected_subgraph(g, j + 2).has_value();
}

EdgeBounds edge_bounds(int n, int k) {
  if (k < 2 || n < k + 1) throw InvalidArgument("edge_bounds needs k >= 2 and n >= k + 1");
  EdgeBounds out;
  out.n = n;
  out.k = k;
  out.mader = Rational(static_cast<std::int64_t>(3 * k - 1) * (n - k), 2);
  out.bk = Rational(static_cast<std::int64_t>(19) * k * (n - k), 12);
  out.bk_applies = 2 * n >= 5 * k;
  return out;
}

}  // namespace wsatlab
