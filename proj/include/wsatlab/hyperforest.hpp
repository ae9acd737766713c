#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wsatlab/erase.hpp"
#include "wsatlab/graph.hpp"

namespace wsatlab {

/// Auxiliary hypergraph attached to each graph of an erase process with one
/// closed vertex per step. Hyperedges have at least two vertices; isolated
/// vertices carry none but still count as components.
struct HyperforestState {
  int vertex_count = 0;
  std::vector<VertexSet> hyperedges;  // sorted by numeric bit pattern

  int hyperedge_count() const { return static_cast<int>(hyperedges.size()); }
  int component_count() const;
  int semi_invariant() const { return hyperedge_count() + 2 * component_count(); }
};

/// The base vector of one step, chosen by the edge-operation outcome:
/// no split (1,0), two big parts (1,1), one singleton part (0,1), two
/// singleton parts (-1,1).
enum class Increment { NoSplit, Split, OneSingleton, TwoSingletons };

std::pair<int, int> increment_vector(Increment inc);
std::string to_string(Increment inc);

struct TraceRecord {
  int step_index = 0;  // 1-based
  Edge erased;
  int closed = -1;
  int f_before = 0, c_before = 0;
  int f_after = 0, c_after = 0;
  Increment increment = Increment::NoSplit;
  int lambda = 0;
  int q = 0;

  int s_before() const { return f_before + 2 * c_before; }
  int s_after() const { return f_after + 2 * c_after; }
};

struct ProcessTrace {
  int vertex_count = 0;
  int s0 = 0;
  int s_final = 0;
  int total_q = 0;
  std::vector<TraceRecord> records;
  HyperforestState final_state;
};

HyperforestState init_hyperforest(const Graph& g);

struct StepResult {
  HyperforestState state;
  TraceRecord record;
};

/**
 * Edge-operation on the unique hyperedge holding e, then vertex-operation on
 * every hyperedge through `closed`, with components taken in g_before - e.
 * Throws TraceError when e is not covered exactly once or the observed change
 * of (f, c) does not decompose as base vector + (lambda, 0).
 */
StepResult apply_step(const HyperforestState& state, const Graph& g_before, Edge e, int closed, int step_index = 1);

struct PropertyReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Coverage of every edge, connectivity of every hyperedge, pairwise
/// intersections of at most one vertex, acyclic incidence graph.
PropertyReport check_properties(const HyperforestState& state, const Graph& g);

/// Traces an Exact(s, t) certificate with n = s + t + 1, checking every
/// property after every step. Throws TraceError with the failing step.
ProcessTrace trace_process(const Graph& g, const EraseCertificate& cert);

}  // namespace wsatlab
