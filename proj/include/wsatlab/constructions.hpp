#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wsatlab/erase.hpp"
#include "wsatlab/graph.hpp"

namespace wsatlab {

/// One planned erase; the hint fixes the excluded set when the source names it.
struct ScheduleStep {
  Edge edge;
  std::optional<VertexSet> excluded_hint;
};

/// One planned addition to a weakly saturated graph with the intended parts.
struct SaturationHint {
  Edge edge;
  std::optional<KstParts> parts;  // (s-part, t-part)
};

struct ConstructionOutput {
  std::string name;
  int s = 0, t = 0;
  Graph graph;
  /// Label of each vertex index, in index order. Labels follow the drawings:
  /// a, b, c, d, a0, a1, ... for the erasable figures.
  std::vector<std::string> labels;
  int expected_edge_count = 0;
  /// True when `graph` is the weakly saturated graph rather than an
  /// erasable complement.
  bool saturated_form = false;
  std::vector<ScheduleStep> schedule;
  std::vector<SaturationHint> saturation_schedule;

  int index_of(const std::string& label) const;
};

/// C_4 (a, b, c, d) plus an (s-1)-path joined to a and an (s-2)-path joined to b.
ConstructionOutput fig1_graph(int s);

/// Paths a0..a(t-1) and b0..b(s-2), a joined to the first, b to the second and
/// to a(t-1), plus the edge ab. Requires gcd(s, t) = 1.
ConstructionOutput fig2_graph(int s, int t);

/// fig2 without the edge {a, a(t-1)}.
ConstructionOutput fig3_graph(int s, int t);

/// Weakly K_{s,t}-saturated graph on s + t + j vertices with parts A, B, C.
ConstructionOutput theorem3_graph(int s, int t, int j);

/// Hard-coded erasable graphs for (4,6), (6,8), (8,10).
ConstructionOutput appendix_graph(int s, int t);

struct ScheduleReplay {
  EraseCertificate certificate;
  bool complete = false;
  int scheduled_steps = 0;   // steps taken from the schedule
  int hinted_steps = 0;      // of those, ones whose hint held
  int completion_steps = 0;  // greedy steps after the schedule ran out
  std::vector<std::string> notes;  // hint failures and skipped entries
};

/// Follows the erase schedule in Exact(s, t) mode, honouring hints where they
/// hold and searching otherwise, then finishes greedily. Failed hints are
/// reported in `notes`, never silently dropped.
ScheduleReplay certificate_from_schedule(const ConstructionOutput& c);

struct SaturationReplay {
  bool kst_free = false;
  bool complete = false;
  std::vector<SaturationStep> order;
  int hinted_steps = 0;
  std::vector<std::string> notes;
};

/// Adds the saturation schedule's edges in order, checking each creates a
/// K_{s,t} through the new edge (hinted parts first, search otherwise).
SaturationReplay replay_saturation_schedule(const ConstructionOutput& c);

}  // namespace wsatlab
