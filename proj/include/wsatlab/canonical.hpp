#pragma once

#include <string>
#include <vector>

#include "wsatlab/graph.hpp"

namespace wsatlab {

inline constexpr int kCanonicalMaxVertices = 16;

/**
 * Canonical labeling by individualization-refinement: colour refinement to an
 * equitable ordered partition, then branching on the first non-singleton cell
 * (one branch per twin class) and keeping the lexicographically smallest
 * adjacency code over all leaves. Returns the relabeling order: position i
 * holds the original vertex placed at i.
 */
std::vector<int> canonical_order(const Graph& g);

/// Relabels g so that vertex order[i] becomes vertex i.
Graph relabel(const Graph& g, const std::vector<int>& order);

/// Equal strings iff the graphs are isomorphic. The string is the graph6
/// encoding of the canonically relabeled graph. Rejects n > 16.
std::string canonical_form(const Graph& g);

}  // namespace wsatlab
