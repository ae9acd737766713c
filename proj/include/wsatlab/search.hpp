#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wsatlab/erase.hpp"
#include "wsatlab/graph.hpp"

namespace wsatlab {

enum class Strategy { ExhaustiveLabeled, IsomorphFree, Heuristic };

std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& name);

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct SearchTask {
  int n = 0;
  EraseMode mode = ExactMode{};
  int target_edges = 0;
  Strategy strategy = Strategy::ExhaustiveLabeled;
  std::uint64_t seed = kDefaultSeed;
  std::int64_t iteration_budget = 200000;  // heuristic moves
  int workers = 1;
  /// Off only for oracle tests: every m-subset then goes straight to greedy.
  bool pruning = true;
  /// Labeled search: depth at which the prefix tree is cut into subtasks.
  int split_depth = 3;
  /// Labeled search: resumable record of finished subtasks; empty for none.
  std::string checkpoint_path;
};

enum class Verdict { Found, ExhaustedNone, Inconclusive };
std::string to_string(Verdict v);

struct SearchOutcome {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Graph> graph;
  std::optional<EraseCertificate> certificate;
  std::uint64_t graphs_examined = 0;  // m-edge candidates decided by greedy
  std::uint64_t pruned = 0;           // m-edge candidates discarded by pruning
  std::uint64_t nodes = 0;            // partial graphs visited
  bool exhaustive = false;
  double wall_seconds = 0;
};

/// Largest edge count the step bound leaves open for mode on n vertices.
std::int64_t max_erasable_edges_bound(int n, const EraseMode& mode);

/**
 * Prune-function for a partial edge set that still needs `remaining` edges.
 * Returns true when no completion can be erasable: step-count bound, a
 * (j+2)-connected subgraph, or an edgeful graph with no erasable edge.
 * Never rejects a subgraph of an erasable graph with the target size.
 */
bool prune(const Graph& partial, int remaining, const EraseMode& mode);

/// Step-count part of prune alone.
bool violates_step_bound(const Graph& partial, int remaining, const EraseMode& mode);

/// Is there an m-edge erasable graph on n vertices? See Strategy.
SearchOutcome exists_erasable(const SearchTask& task);

struct WsatResult {
  int n = 0, s = 0, t = 0;
  std::int64_t value = 0;
  int max_erasable = 0;
  Graph graph;
  EraseCertificate certificate;
  std::uint64_t graphs_examined = 0;
  std::uint64_t pruned = 0;
  double wall_seconds = 0;
};

/// wsat(n, K_{s,t}) = C(n,2) - max erasable edges, found by descending from
/// the step bound. Throws DiscrepancyError when the value leaves the known
/// interval.
WsatResult compute_wsat(int n, int s, int t, Strategy strategy, int workers = 1);

/// Seeded local search over m-edge sets; any result carries a replayed certificate.
std::optional<std::pair<Graph, EraseCertificate>> heuristic_search(int n, int s, int t, int m, std::uint64_t seed,
                                                                   std::int64_t budget);

/// Fast yes/no erasability that keeps scanning past each erased edge instead
/// of restarting; same verdict as greedy_erase.
bool is_erasable(const Graph& g, const EraseMode& mode);

/// Number of edges removed before the erase process stalls. The stall set
/// does not depend on the order, since erasable edges stay erasable.
int erasable_edge_count(const Graph& g, const EraseMode& mode);

}  // namespace wsatlab
