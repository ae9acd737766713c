#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wsatlab/graph.hpp"

namespace wsatlab {

/// Erase with sides of sizes exactly s and t; the remaining n - s - t
/// vertices are excluded ("closed").
struct ExactMode {
  int s = 0;
  int t = 0;
  constexpr bool operator==(const ExactMode&) const = default;
};

/// Relaxed erase: exactly j excluded vertices, side sizes unconstrained.
struct RelaxedMode {
  int j = 0;
  constexpr bool operator==(const RelaxedMode&) const = default;
};

using EraseMode = std::variant<ExactMode, RelaxedMode>;

/// Number of excluded vertices per step on an n-vertex graph.
int excluded_count(const EraseMode& mode, int n);
std::string describe(const EraseMode& mode);

/**
 * Partition witness for an exact erase: `edge` is the only edge between
 * side1 (|side1| = s) and side2 (|side2| = t); `excluded` is the rest.
 * side1 holds one endpoint and side2 the other, in either orientation.
 */
struct ExactWitness {
  Edge edge;
  VertexSet excluded;
  VertexSet side1;
  VertexSet side2;
  bool operator==(const ExactWitness&) const = default;
};

/// Cut of exactly j vertices, avoiding the endpoints, that separates them
/// once the edge is deleted.
struct RelaxedWitness {
  Edge edge;
  VertexSet cut;
  bool operator==(const RelaxedWitness&) const = default;
};

/// Relaxed erase on a graph with exactly j + 1 vertices: always allowed.
struct TrivialSmallGraph {
  bool operator==(const TrivialSmallGraph&) const = default;
};

using Witness = std::variant<ExactWitness, RelaxedWitness, TrivialSmallGraph>;

struct EraseStep {
  Edge edge;
  Witness witness;
  bool operator==(const EraseStep&) const = default;
};

struct EraseCertificate {
  EraseMode mode;
  std::vector<EraseStep> steps;
  bool operator==(const EraseCertificate&) const = default;
};

struct StuckReport {
  Graph remaining;
  std::vector<Edge> tried;
};

/// Result of greedy_erase. `certificate` holds the steps performed; it is a
/// full certificate exactly when `stuck` is empty.
struct EraseOutcome {
  EraseCertificate certificate;
  std::optional<StuckReport> stuck;

  bool succeeded() const { return !stuck.has_value(); }
  int erased() const { return static_cast<int>(certificate.steps.size()); }
};

struct VerificationReport {
  bool valid = true;
  int failed_step = -1;  // 0-based index of the first bad step
  std::string message;
};

std::optional<ExactWitness> find_exact_witness(const Graph& g, Edge e, int s, int t);

/// Same search with the excluded set fixed in advance.
std::optional<ExactWitness> find_exact_witness_excluding(const Graph& g, Edge e, int s, int t, VertexSet excluded);

/// Empty string on success, otherwise the reason the witness is invalid in g.
std::string check_exact_witness(const Graph& g, const ExactWitness& w, int s, int t);

std::optional<Witness> find_relaxed_witness(const Graph& g, Edge e, int j);
std::string check_relaxed_witness(const Graph& g, const RelaxedWitness& w, int j);

std::optional<Witness> find_witness(const Graph& g, Edge e, const EraseMode& mode);

/// Yes/no form of find_witness without reconstruction or argument checks;
/// callers guarantee e is an edge and the mode fits the graph.
bool has_witness(const Graph& g, Edge e, const EraseMode& mode);
std::string check_witness(const Graph& g, const EraseStep& step, const EraseMode& mode);

/**
 * Scans edges lexicographically and erases the first one with a witness,
 * until the graph is empty or no edge qualifies. Erasability is hereditary
 * to spanning subgraphs, so the choice of erasable edge never matters and
 * a stall proves the graph is not erasable.
 */
EraseOutcome greedy_erase(const Graph& g, const EraseMode& mode);

/// True when at least one edge of g admits a witness.
bool has_erasable_edge(const Graph& g, const EraseMode& mode);

VerificationReport replay_certificate(const Graph& g, const EraseCertificate& cert);

using KstParts = std::pair<VertexSet, VertexSet>;

/// A (not necessarily induced) K_{s,t} in g: parts of sizes s and t with
/// every cross pair an edge.
std::optional<KstParts> contains_kst(const Graph& g, int s, int t);

/// A K_{s,t} in g that uses the edge e as one of its cross pairs.
std::optional<KstParts> find_kst_through_edge(const Graph& g, Edge e, int s, int t);

/// Empty string when (parts) is a K_{s,t} of g through e.
std::string check_kst_through_edge(const Graph& g, Edge e, const KstParts& parts, int s, int t);

struct SaturationStep {
  Edge added;
  VertexSet part_s;
  VertexSet part_t;
};

struct SaturationReport {
  bool kst_free = false;
  std::optional<KstParts> kst;
  EraseOutcome complement_erase;
  /// Edges added to h in this order each create a new K_{s,t}.
  std::vector<SaturationStep> order;
  bool saturated() const { return kst_free && complement_erase.succeeded(); }
};

/**
 * h is weakly K_{s,t}-saturated iff it is K_{s,t}-free and its complement is
 * erasable in Exact(s, t) mode. The i-th erased complement edge is the i-th
 * edge added to h, with the witness sides as the parts of the new copy.
 */
SaturationReport is_weakly_saturated(const Graph& h, int s, int t);

}  // namespace wsatlab
