#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "wsatlab/bounds.hpp"
#include "wsatlab/connectivity.hpp"
#include "wsatlab/constructions.hpp"
#include "wsatlab/erase.hpp"
#include "wsatlab/hyperforest.hpp"
#include "wsatlab/search.hpp"

namespace wsatlab {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

Json to_json(VertexSet set);
Json to_json(Edge e);
Json to_json(const Graph& g);  // {"n", "edges", "graph6"}
Json to_json(const EraseMode& mode);
Json to_json(const EraseCertificate& cert);

Graph graph_from_json(const Json& j);
EraseMode mode_from_json(const Json& j);
EraseCertificate certificate_from_json(const Json& j);

/**
 * Line format, one step per line after a mode header:
 *
 *   mode exact s=3 t=3
 *   erase 0 1 | excluded: 4 | side1: 0 2 3 | side2: 1 5 6
 *
 * Relaxed steps read "erase u v | cut: 2 3" or "erase u v | trivial".
 * Empty sets print as "-". '#' starts a comment.
 */
std::string certificate_to_text(const EraseCertificate& cert);
EraseCertificate certificate_from_text(std::string_view text);

/// Accepts either the JSON mirror or the line format.
EraseCertificate parse_certificate_auto(std::string_view text);

/// Outcome of verifying one graph. `expected_edges` is -1 when unchecked.
struct VerifyReport {
  Graph graph;
  EraseMode mode;
  EraseOutcome outcome;
  VerificationReport replay;  // of the supplied or the greedy certificate
  bool certificate_supplied = false;
  bool erasable() const { return replay.valid && outcome.succeeded(); }
};

Json to_json(const VerifyReport& r);
std::string to_text(const VerifyReport& r);

Json to_json(const ProcessTrace& trace);
/// Table with columns step, edge, closed, f, c, s, lambda, vector, Q_i.
std::string to_text(const ProcessTrace& trace);

Json search_to_json(const SearchTask& task, const SearchOutcome& outcome);
std::string search_to_text(const SearchTask& task, const SearchOutcome& outcome);
/// Inverse of search_to_json for the fields SearchOutcome holds.
SearchOutcome search_outcome_from_json(const Json& j);

Json to_json(const WsatResult& r, const WsatBound& known);
std::string to_text(const WsatResult& r, const WsatBound& known);

Json to_json(const WsatBound& b);
Json bounds_grid_json(const std::vector<WsatBound>& rows);
/// TSV with one row per (n, s, t): lower, upper, exact flag, sources.
std::string bounds_grid_tsv(const std::vector<WsatBound>& rows);

Json to_json(const ConnectivityReport& r, const Graph& g);
std::string to_text(const ConnectivityReport& r, const Graph& g);

/// Graph, labels as a sidecar map, and the checks run on it.
Json construction_to_json(const ConstructionOutput& c, const ScheduleReplay* replay, const SaturationReport* saturation);
std::string construction_to_text(const ConstructionOutput& c, const ScheduleReplay* replay,
                                 const SaturationReport* saturation);

}  // namespace wsatlab
