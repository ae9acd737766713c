#include "wsatlab/wsatlab.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

#include "wsatlab/codec.hpp"
#include "wsatlab/error.hpp"
#include "wsatlab/report.hpp"

struct wsat_graph {
  wsatlab::Graph graph;
};

namespace {

using namespace wsatlab;

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wsat_status fail(wsat_status status, const std::string& message) {
  last_error = message;
  return status;
}

wsat_status guarded(const std::function<wsat_status()>& body) {
  try {
    last_error.clear();
    return body();
  } catch (const ParseError& e) {
    return fail(WSAT_PARSE_ERROR, e.what());
  } catch (const InvalidArgument& e) {
    return fail(WSAT_INVALID_ARGUMENT, e.what());
  } catch (const DiscrepancyError& e) {
    return fail(WSAT_DISCREPANCY, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(WSAT_PARSE_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(WSAT_INTERNAL, e.what());
  } catch (...) {
    return fail(WSAT_INTERNAL, "unknown exception");
  }
}

EraseMode to_mode(wsat_mode m) {
  if (m.kind == WSAT_MODE_EXACT) return ExactMode{m.s, m.t};
  if (m.kind == WSAT_MODE_RELAXED) return RelaxedMode{m.j};
  throw InvalidArgument("unknown mode kind");
}

Strategy to_strategy(wsat_strategy s) {
  switch (s) {
    case WSAT_STRATEGY_LABELED: return Strategy::ExhaustiveLabeled;
    case WSAT_STRATEGY_ISOFREE: return Strategy::IsomorphFree;
    case WSAT_STRATEGY_HEURISTIC: return Strategy::Heuristic;
  }
  throw InvalidArgument("unknown strategy");
}

void need(const void* p, const char* what) {
  if (!p) throw InvalidArgument(std::string(what) + " must not be NULL");
}

void check_mode_fits(const Graph& g, const EraseMode& mode) {
  const int n = g.vertex_count();
  if (const auto* exact = std::get_if<ExactMode>(&mode)) {
    if (exact->s < 1 || exact->t < exact->s || exact->s + exact->t > n)
      throw InvalidArgument("exact mode needs 1 <= s <= t and s + t <= n");
  } else {
    const int j = std::get<RelaxedMode>(mode).j;
    if (j < 0 || j + 1 > n) throw InvalidArgument("relaxed mode needs 0 <= j <= n - 1");
  }
}

void emit(char** out, wsat_format format, const Json& json, const std::string& text) {
  if (!out) return;
  *out = dup(format == WSAT_FORMAT_TEXT ? text : json.dump(2) + "\n");
}

}  // namespace

extern "C" {

const char* wsat_version(void) { return "1.0.0"; }

const char* wsat_last_error(void) { return last_error.c_str(); }

const char* wsat_status_name(wsat_status status) {
  switch (status) {
    case WSAT_OK: return "ok";
    case WSAT_NEGATIVE: return "negative";
    case WSAT_INVALID_ARGUMENT: return "invalid-argument";
    case WSAT_PARSE_ERROR: return "parse-error";
    case WSAT_INCONCLUSIVE: return "inconclusive";
    case WSAT_DISCREPANCY: return "discrepancy";
    case WSAT_INTERNAL: return "internal";
  }
  return "unknown";
}

void wsat_string_free(char* s) { std::free(s); }

wsat_status wsat_graph_new(int n, wsat_graph** out) {
  return guarded([&] {
    need(out, "out");
    *out = new wsat_graph{Graph(n)};
    return WSAT_OK;
  });
}

wsat_status wsat_graph_parse(const char* text, wsat_graph** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    const std::string body(text);
    const std::size_t first = body.find_first_not_of(" \t\r\n");
    Graph g = first != std::string::npos && body[first] == '{' ? graph_from_json(Json::parse(body))
                                                                 : parse_graph_auto(body);
    *out = new wsat_graph{g};
    return WSAT_OK;
  });
}

wsat_status wsat_graph_clone(const wsat_graph* g, wsat_graph** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = new wsat_graph{g->graph};
    return WSAT_OK;
  });
}

void wsat_graph_free(wsat_graph* g) { delete g; }

int wsat_graph_vertex_count(const wsat_graph* g) { return g ? g->graph.vertex_count() : -1; }

int wsat_graph_edge_count(const wsat_graph* g) { return g ? g->graph.edge_count() : -1; }

int wsat_graph_has_edge(const wsat_graph* g, int u, int v) {
  if (!g || u == v || u < 0 || v < 0 || u >= g->graph.vertex_count() || v >= g->graph.vertex_count()) return 0;
  return g->graph.has_edge(u, v) ? 1 : 0;
}

wsat_status wsat_graph_add_edge(wsat_graph* g, int u, int v) {
  return guarded([&] {
    need(g, "graph");
    g->graph.add_edge(u, v);
    return WSAT_OK;
  });
}

wsat_status wsat_graph_remove_edge(wsat_graph* g, int u, int v) {
  return guarded([&] {
    need(g, "graph");
    g->graph.remove_edge(u, v);
    return WSAT_OK;
  });
}

wsat_status wsat_graph_complement(const wsat_graph* g, wsat_graph** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = new wsat_graph{complement(g->graph)};
    return WSAT_OK;
  });
}

wsat_status wsat_graph_emit(const wsat_graph* g, const char* codec, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(codec, "codec");
    need(out, "out");
    const std::string c(codec);
    if (c == "graph6") {
      *out = dup(emit_graph6(g->graph) + "\n");
    } else if (c == "edgelist") {
      *out = dup(emit_edge_list(g->graph));
    } else if (c == "json") {
      *out = dup(to_json(g->graph).dump(2) + "\n");
    } else {
      throw InvalidArgument("unknown graph codec '" + c + "'");
    }
    return WSAT_OK;
  });
}

wsat_status wsat_verify(const wsat_graph* g, wsat_mode mode, const char* certificate, wsat_format format,
                        char** out) {
  return guarded([&] {
    need(g, "graph");
    VerifyReport r;
    r.graph = g->graph;
    r.mode = to_mode(mode);
    check_mode_fits(r.graph, r.mode);
    if (certificate && *certificate) {
      r.certificate_supplied = true;
      r.outcome.certificate = parse_certificate_auto(certificate);
      if (!(r.outcome.certificate.mode == r.mode))
        throw InvalidArgument("certificate mode " + describe(r.outcome.certificate.mode) + " differs from " +
                              describe(r.mode));
      r.replay = replay_certificate(r.graph, r.outcome.certificate);
    } else {
      r.outcome = greedy_erase(r.graph, r.mode);
      r.replay = replay_certificate(r.graph, r.outcome.certificate);
      if (!r.outcome.succeeded()) r.replay = VerificationReport{true, -1, ""};
    }
    emit(out, format, to_json(r), to_text(r));
    return r.erasable() ? WSAT_OK : WSAT_NEGATIVE;
  });
}

wsat_status wsat_saturation(const wsat_graph* h, int s, int t, wsat_format format, char** out) {
  return guarded([&] {
    need(h, "graph");
    check_mode_fits(h->graph, ExactMode{s, t});
    const SaturationReport r = is_weakly_saturated(h->graph, s, t);
    ConstructionOutput c;
    c.name = "input";
    c.s = s;
    c.t = t;
    c.graph = h->graph;
    c.expected_edge_count = h->graph.edge_count();
    c.saturated_form = true;
    for (int v = 0; v < h->graph.vertex_count(); ++v) c.labels.push_back(std::to_string(v));
    emit(out, format, construction_to_json(c, nullptr, &r), construction_to_text(c, nullptr, &r));
    return r.saturated() ? WSAT_OK : WSAT_NEGATIVE;
  });
}

wsat_status wsat_construct(const char* family, int s, int t, int j, wsat_format format, char** out,
                           wsat_graph** graph_out) {
  return guarded([&] {
    need(family, "family");
    const std::string f(family);
    ConstructionOutput c;
    if (f == "fig1") {
      c = fig1_graph(s);
    } else if (f == "fig2") {
      c = fig2_graph(s, t);
    } else if (f == "fig3") {
      c = fig3_graph(s, t);
    } else if (f == "theorem3") {
      c = theorem3_graph(s, t, j);
    } else if (f == "appendix") {
      c = appendix_graph(s, t);
    } else {
      throw InvalidArgument("unknown construction '" + f + "' (fig1, fig2, fig3, theorem3, appendix)");
    }
    bool ok = c.graph.edge_count() == c.expected_edge_count;
    if (c.saturated_form) {
      const SaturationReport r = is_weakly_saturated(c.graph, c.s, c.t);
      ok = ok && r.saturated();
      emit(out, format, construction_to_json(c, nullptr, &r), construction_to_text(c, nullptr, &r));
    } else {
      const ScheduleReplay replay = certificate_from_schedule(c);
      ok = ok && replay.complete;
      emit(out, format, construction_to_json(c, &replay, nullptr), construction_to_text(c, &replay, nullptr));
    }
    if (graph_out) *graph_out = new wsat_graph{c.graph};
    return ok ? WSAT_OK : WSAT_NEGATIVE;
  });
}

wsat_status wsat_trace(const wsat_graph* g, int s, int t, const char* certificate, wsat_format format, char** out) {
  return guarded([&] {
    need(g, "graph");
    if (g->graph.vertex_count() != s + t + 1) throw InvalidArgument("trace needs n = s + t + 1");
    check_mode_fits(g->graph, ExactMode{s, t});
    EraseCertificate cert;
    if (certificate && *certificate) {
      cert = parse_certificate_auto(certificate);
    } else {
      const EraseOutcome greedy = greedy_erase(g->graph, ExactMode{s, t});
      if (!greedy.succeeded()) return fail(WSAT_NEGATIVE, "graph is not erasable; nothing to trace");
      cert = greedy.certificate;
    }
    try {
      const ProcessTrace trace = trace_process(g->graph, cert);
      emit(out, format, to_json(trace), to_text(trace));
    } catch (const TraceError& e) {
      return fail(WSAT_NEGATIVE, e.what());
    }
    return WSAT_OK;
  });
}

void wsat_search_params_init(wsat_search_params* p) {
  if (!p) return;
  const SearchTask defaults;
  *p = wsat_search_params{};
  p->mode.kind = WSAT_MODE_EXACT;
  p->strategy = WSAT_STRATEGY_LABELED;
  p->seed = defaults.seed;
  p->iteration_budget = defaults.iteration_budget;
  p->workers = defaults.workers;
  p->pruning = 1;
  p->split_depth = defaults.split_depth;
  p->checkpoint_path = nullptr;
}

wsat_status wsat_search(const wsat_search_params* p, wsat_format format, char** out) {
  return guarded([&] {
    need(p, "params");
    SearchTask task;
    task.n = p->n;
    task.mode = to_mode(p->mode);
    task.target_edges = p->target_edges;
    task.strategy = to_strategy(p->strategy);
    task.seed = p->seed;
    task.iteration_budget = p->iteration_budget;
    task.workers = p->workers;
    task.pruning = p->pruning != 0;
    task.split_depth = p->split_depth;
    if (p->checkpoint_path) task.checkpoint_path = p->checkpoint_path;
    const SearchOutcome o = exists_erasable(task);
    emit(out, format, search_to_json(task, o), search_to_text(task, o));
    switch (o.verdict) {
      case Verdict::Found: return WSAT_OK;
      case Verdict::ExhaustedNone: return WSAT_NEGATIVE;
      case Verdict::Inconclusive: return WSAT_INCONCLUSIVE;
    }
    return WSAT_INTERNAL;
  });
}

wsat_status wsat_compute(int n, int s, int t, wsat_strategy strategy, int workers, wsat_format format, char** out) {
  return guarded([&] {
    const WsatResult r = compute_wsat(n, s, t, to_strategy(strategy), workers);
    const WsatBound known = known_wsat(n, s, t);
    emit(out, format, to_json(r, known), to_text(r, known));
    return WSAT_OK;
  });
}

wsat_status wsat_bounds_grid(int n_min, int n_max, int s_min, int s_max, int t_min, int t_max, wsat_format format,
                             char** out) {
  return guarded([&] {
    if (n_min > n_max || s_min > s_max || t_min > t_max) throw InvalidArgument("empty parameter range");
    if (n_max > Graph::kMaxVertices) throw InvalidArgument("n exceeds 64");
    std::vector<WsatBound> rows;
    for (int s = std::max(1, s_min); s <= s_max; ++s)
      for (int t = std::max(s, t_min); t <= t_max; ++t)
        for (int n = std::max(n_min, s + t); n <= n_max; ++n) rows.push_back(known_wsat(n, s, t));
    emit(out, format, bounds_grid_json(rows), bounds_grid_tsv(rows));
    return WSAT_OK;
  });
}

wsat_status wsat_connectivity(const wsat_graph* g, int k, wsat_format format, char** out) {
  return guarded([&] {
    need(g, "graph");
    const ConnectivityReport r = connectivity_report(g->graph, k);
    emit(out, format, to_json(r, g->graph), to_text(r, g->graph));
    return WSAT_OK;
  });
}

}  // extern "C"
