/*
 * C interface to wsatlab. Graphs are opaque handles; every operation returns
 * a wsat_status and writes its rendered result (JSON or text) to a string the
 * caller releases with wsat_string_free. On any status other than WSAT_OK,
 * WSAT_NEGATIVE or WSAT_INCONCLUSIVE, wsat_last_error() describes the
 * failure for the calling thread.
 */
#ifndef WSATLAB_H
#define WSATLAB_H

#include <stdint.h>

#if defined(WSATLAB_BUILDING)
#define WSAT_API __attribute__((visibility("default")))
#else
#define WSAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  WSAT_OK = 0,
  WSAT_NEGATIVE = 1, /* definite "no": not erasable, exhausted, not saturated */
  WSAT_INVALID_ARGUMENT = 2,
  WSAT_PARSE_ERROR = 3,
  WSAT_INCONCLUSIVE = 4, /* heuristic budget ran out */
  WSAT_DISCREPANCY = 5,  /* result contradicts the known-value table */
  WSAT_INTERNAL = 6
} wsat_status;

typedef enum { WSAT_FORMAT_JSON = 0, WSAT_FORMAT_TEXT = 1 } wsat_format;

typedef enum { WSAT_MODE_EXACT = 0, WSAT_MODE_RELAXED = 1 } wsat_mode_kind;

typedef struct {
  wsat_mode_kind kind;
  int s, t; /* exact */
  int j;    /* relaxed */
} wsat_mode;

typedef enum { WSAT_STRATEGY_LABELED = 0, WSAT_STRATEGY_ISOFREE = 1, WSAT_STRATEGY_HEURISTIC = 2 } wsat_strategy;

typedef struct wsat_graph wsat_graph;

WSAT_API const char* wsat_version(void);
WSAT_API const char* wsat_last_error(void);
WSAT_API const char* wsat_status_name(wsat_status status);
WSAT_API void wsat_string_free(char* s);

WSAT_API wsat_status wsat_graph_new(int n, wsat_graph** out);
/* graph6, edge list ("n <count>" header) or the JSON graph object. */
WSAT_API wsat_status wsat_graph_parse(const char* text, wsat_graph** out);
WSAT_API wsat_status wsat_graph_clone(const wsat_graph* g, wsat_graph** out);
WSAT_API void wsat_graph_free(wsat_graph* g);
WSAT_API int wsat_graph_vertex_count(const wsat_graph* g);
WSAT_API int wsat_graph_edge_count(const wsat_graph* g);
WSAT_API int wsat_graph_has_edge(const wsat_graph* g, int u, int v);
WSAT_API wsat_status wsat_graph_add_edge(wsat_graph* g, int u, int v);
WSAT_API wsat_status wsat_graph_remove_edge(wsat_graph* g, int u, int v);
WSAT_API wsat_status wsat_graph_complement(const wsat_graph* g, wsat_graph** out);
/* codec: "graph6", "edgelist" or "json". */
WSAT_API wsat_status wsat_graph_emit(const wsat_graph* g, const char* codec, char** out);

/* Erasability of g. With a certificate (line format or JSON) it is replayed;
 * otherwise the greedy process decides. WSAT_OK = erasable. */
WSAT_API wsat_status wsat_verify(const wsat_graph* g, wsat_mode mode, const char* certificate, wsat_format format,
                                 char** out);

/* Weak K_{s,t}-saturation of h. WSAT_OK = saturated. */
WSAT_API wsat_status wsat_saturation(const wsat_graph* h, int s, int t, wsat_format format, char** out);

/* family: "fig1", "fig2", "fig3", "theorem3", "appendix". j is used by
 * theorem3 only. WSAT_OK when the construction passes its checks (certified
 * erasable, or weakly saturated for theorem3) with the expected edge count.
 * graph_out, when not NULL, receives the constructed graph. */
WSAT_API wsat_status wsat_construct(const char* family, int s, int t, int j, wsat_format format, char** out,
                                    wsat_graph** graph_out);

/* Hyperforest trace of an Exact(s,t) certificate on s+t+1 vertices. Without
 * a certificate the greedy one is traced. */
WSAT_API wsat_status wsat_trace(const wsat_graph* g, int s, int t, const char* certificate, wsat_format format,
                                char** out);

typedef struct {
  int n;
  wsat_mode mode;
  int target_edges;
  wsat_strategy strategy;
  uint64_t seed;
  int64_t iteration_budget;
  int workers;
  int pruning;
  int split_depth;
  const char* checkpoint_path; /* NULL or "" for none */
} wsat_search_params;

/* Fills defaults: labeled strategy, seed 20240601, budget 200000, one worker,
 * pruning on, split depth 3. */
WSAT_API void wsat_search_params_init(wsat_search_params* p);

/* WSAT_OK = found, WSAT_NEGATIVE = exhausted with none, WSAT_INCONCLUSIVE. */
WSAT_API wsat_status wsat_search(const wsat_search_params* p, wsat_format format, char** out);

WSAT_API wsat_status wsat_compute(int n, int s, int t, wsat_strategy strategy, int workers, wsat_format format,
                                  char** out);

/* Known-value table over a grid; text format is TSV. */
WSAT_API wsat_status wsat_bounds_grid(int n_min, int n_max, int s_min, int s_max, int t_min, int t_max,
                                      wsat_format format, char** out);

/* Maximal k-connected subgraphs of g. */
WSAT_API wsat_status wsat_connectivity(const wsat_graph* g, int k, wsat_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
