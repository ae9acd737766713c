// wsatlab command-line front end; all work goes through the C API.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wsatlab/wsatlab.h"

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kInconclusive = 3, kFailure = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_for(wsat_status st) {
  switch (st) {
    case WSAT_OK: return kOk;
    case WSAT_NEGATIVE: return kNegative;
    case WSAT_INVALID_ARGUMENT:
    case WSAT_PARSE_ERROR: return kUsage;
    case WSAT_INCONCLUSIVE: return kInconclusive;
    default: return kFailure;
  }
}

struct GraphDeleter {
  void operator()(wsat_graph* g) const { wsat_graph_free(g); }
};
using GraphPtr = std::unique_ptr<wsat_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { wsat_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

std::string read_source(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Common {
  std::string format = "text";
  std::string output;
  std::uint64_t seed = 20240601;
  int workers = 1;
};

struct InputFlags {
  std::string input;
  std::string graph6;
  void add(CLI::App* cmd) {
    auto* a = cmd->add_option("--input,-i", input, "graph file: graph6, edge list or JSON ('-' for stdin)");
    auto* b = cmd->add_option("--graph6,-g", graph6, "graph6 string");
    a->excludes(b);
  }
  GraphPtr load() const {
    if (input.empty() == graph6.empty()) throw UsageError("give exactly one of --input or --graph6");
    const std::string text = input.empty() ? graph6 : read_source(input);
    wsat_graph* g = nullptr;
    const wsat_status st = wsat_graph_parse(text.c_str(), &g);
    if (st != WSAT_OK) throw UsageError(std::string("graph input: ") + wsat_last_error());
    return GraphPtr(g);
  }
};

struct ModeFlags {
  std::string kind = "exact";
  int s = 0, t = 0, j = -1;
  void add(CLI::App* cmd) {
    cmd->add_option("--mode", kind, "exact or relaxed")->check(CLI::IsMember({"exact", "relaxed"}));
    cmd->add_option("-s", s, "smaller side size");
    cmd->add_option("-t", t, "larger side size");
    cmd->add_option("-j", j, "excluded vertices (relaxed mode)");
  }
  wsat_mode get() const {
    wsat_mode m{};
    if (kind == "exact") {
      if (s < 1 || t < 1) throw UsageError("exact mode needs -s and -t");
      m.kind = WSAT_MODE_EXACT;
      m.s = s;
      m.t = t;
    } else {
      if (j < 0) throw UsageError("relaxed mode needs -j");
      m.kind = WSAT_MODE_RELAXED;
      m.j = j;
    }
    return m;
  }
};

wsat_format api_format(const Common& c) { return c.format == "text" ? WSAT_FORMAT_TEXT : WSAT_FORMAT_JSON; }

void write_out(const Common& c, const std::string& body) {
  if (c.output.empty()) {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw UsageError("cannot write " + c.output);
  out << body;
}

// Renders an API result. graph6 output picks the named graph out of the JSON.
int finish(const Common& c, wsat_status st, char* raw, const char* graph_field) {
  CString owned(raw);
  if (!raw) {
    if (st != WSAT_OK) std::cerr << "wsatlab: " << wsat_status_name(st) << ": " << wsat_last_error() << '\n';
    return exit_for(st);
  }
  std::string body(raw);
  if (c.format == "graph6") {
    if (!graph_field) throw UsageError("--format graph6 is not available for this subcommand");
    const auto j = nlohmann::json::parse(body);
    if (!j.contains(graph_field) || j[graph_field].is_null()) {
      body.clear();
    } else {
      body = j[graph_field]["graph6"].get<std::string>() + "\n";
    }
  }
  write_out(c, body);
  if (st == WSAT_NEGATIVE && *wsat_last_error()) std::cerr << "wsatlab: " << wsat_last_error() << '\n';
  return exit_for(st);
}

// Result format requested from the API: graph6 needs the JSON to extract from.
wsat_format request_format(const Common& c) { return c.format == "graph6" ? WSAT_FORMAT_JSON : api_format(c); }

// "6..9" or "7".
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "' (use a or a..b)");
  }
}

wsat_strategy parse_strategy(const std::string& s) {
  if (s == "labeled") return WSAT_STRATEGY_LABELED;
  if (s == "isofree") return WSAT_STRATEGY_ISOFREE;
  return WSAT_STRATEGY_HEURISTIC;
}

int default_workers() {
  const char* env = std::getenv("WSATLAB_WORKERS");
  if (!env || !*env) return 1;
  try {
    return std::max(1, std::stoi(env));
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wsatlab: weak saturation numbers of complete bipartite graphs"};
  app.require_subcommand(1);
  Common common;
  common.workers = default_workers();
  app.add_option("--format,-f", common.format, "json, text or graph6")
      ->check(CLI::IsMember({"json", "text", "graph6"}))
      ->capture_default_str();
  app.add_option("--output,-o", common.output, "write the result to a file instead of stdout");
  app.add_option("--seed", common.seed, "seed for randomized search")->capture_default_str();
  app.add_option("--workers,-w", common.workers, "search threads (default $WSATLAB_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  app.fallthrough();

  // verify
  auto* verify = app.add_subcommand("verify", "check erasability, or weak saturation with --saturated");
  InputFlags verify_in;
  ModeFlags verify_mode;
  std::string verify_cert;
  bool verify_saturated = false;
  verify_in.add(verify);
  verify_mode.add(verify);
  verify->add_option("--certificate,-c", verify_cert, "certificate to replay (line format or JSON)");
  verify->add_flag("--saturated", verify_saturated, "treat the input as h and test weak K_{s,t}-saturation");

  // construct
  auto* construct = app.add_subcommand("construct", "build and check a construction");
  std::string family;
  int cs = 0, ct = 0, cj = 0;
  std::string labels_path, edgelist_path;
  construct->add_option("family", family, "fig1, fig2, fig3, theorem3 or appendix")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "theorem3", "appendix"}));
  construct->add_option("-s", cs, "s")->required();
  construct->add_option("-t", ct, "t (ignored by fig1)");
  construct->add_option("-j", cj, "j (theorem3)");
  construct->add_option("--labels", labels_path, "write the vertex label map as JSON");
  construct->add_option("--edge-list", edgelist_path, "write the graph as an edge list");

  // trace
  auto* trace = app.add_subcommand("trace", "hyperforest trace of an erase process on s+t+1 vertices");
  InputFlags trace_in;
  int ts = 0, tt = 0;
  std::string trace_cert;
  trace_in.add(trace);
  trace->add_option("-s", ts, "s")->required();
  trace->add_option("-t", tt, "t")->required();
  trace->add_option("--certificate,-c", trace_cert, "certificate to trace (default: greedy)");

  // search
  auto* search = app.add_subcommand("search", "is there an m-edge erasable graph on n vertices?");
  ModeFlags search_mode;
  int sn = 0, sm = 0, split = 3;
  std::string strategy = "labeled", checkpoint;
  std::int64_t budget = 200000;
  bool no_prune = false;
  search_mode.add(search);
  search->add_option("-n", sn, "vertices")->required();
  search->add_option("-m", sm, "edges")->required();
  search->add_option("--strategy", strategy, "labeled, isofree or heuristic")
      ->check(CLI::IsMember({"labeled", "isofree", "heuristic"}))
      ->capture_default_str();
  search->add_option("--budget", budget, "heuristic move budget")->capture_default_str();
  search->add_option("--split-depth", split, "labeled prefix depth for subtasks")->capture_default_str();
  search->add_option("--checkpoint", checkpoint, "resumable checkpoint file (labeled)");
  search->add_flag("--no-prune", no_prune, "decide every candidate by greedy alone");

  // wsat
  auto* wsat = app.add_subcommand("wsat", "compute wsat(n, K_{s,t}) exhaustively");
  int wn = 0, ws = 0, wt = 0;
  std::string wstrategy = "labeled";
  wsat->add_option("-n", wn, "vertices")->required();
  wsat->add_option("-s", ws, "s")->required();
  wsat->add_option("-t", wt, "t")->required();
  wsat->add_option("--strategy", wstrategy, "labeled or isofree")
      ->check(CLI::IsMember({"labeled", "isofree"}))
      ->capture_default_str();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "known-value table over a grid (text format is TSV)");
  std::string bn, bs, bt;
  bounds->add_option("-n", bn, "n or a..b")->required();
  bounds->add_option("-s", bs, "s or a..b")->required();
  bounds->add_option("-t", bt, "t or a..b")->required();

  // connectivity
  auto* conn = app.add_subcommand("connectivity", "maximal k-connected subgraphs");
  InputFlags conn_in;
  int ck = 0;
  conn_in.add(conn);
  conn->add_option("-k", ck, "connectivity")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    char* out = nullptr;
    const wsat_format fmt = request_format(common);
    if (*verify) {
      GraphPtr g = verify_in.load();
      if (verify_saturated) {
        if (verify_mode.kind != "exact") throw UsageError("--saturated needs exact mode");
        const wsat_mode m = verify_mode.get();
        const wsat_status st = wsat_saturation(g.get(), m.s, m.t, fmt, &out);
      return finish(common, st, out, "graph");
      }
      const std::string cert = verify_cert.empty() ? "" : read_source(verify_cert);
      const wsat_status st = wsat_verify(g.get(), verify_mode.get(), cert.c_str(), fmt, &out);
      return finish(common, st, out, "graph");
    }
    if (*construct) {
      wsat_graph* raw = nullptr;
      const wsat_status st = wsat_construct(family.c_str(), cs, ct, cj, fmt, &out, &raw);
      GraphPtr g(raw);
      if (g && !labels_path.empty()) {
        char* js = nullptr;
        if (wsat_construct(family.c_str(), cs, ct, cj, WSAT_FORMAT_JSON, &js, nullptr) <= WSAT_NEGATIVE && js) {
          CString hold(js);
          std::ofstream lf(labels_path);
          if (!lf) throw UsageError("cannot write " + labels_path);
          lf << nlohmann::json::parse(js)["labels"].dump(2) << '\n';
        }
      }
      if (g && !edgelist_path.empty()) {
        char* el = nullptr;
        if (wsat_graph_emit(g.get(), "edgelist", &el) == WSAT_OK) {
          CString hold(el);
          std::ofstream ef(edgelist_path);
          if (!ef) throw UsageError("cannot write " + edgelist_path);
          ef << el;
        }
      }
      return finish(common, st, out, "graph");
    }
    if (*trace) {
      GraphPtr g = trace_in.load();
      const std::string cert = trace_cert.empty() ? "" : read_source(trace_cert);
      const wsat_status st = wsat_trace(g.get(), ts, tt, cert.c_str(), fmt, &out);
      return finish(common, st, out, nullptr);
    }
    if (*search) {
      wsat_search_params p;
      wsat_search_params_init(&p);
      p.n = sn;
      p.mode = search_mode.get();
      p.target_edges = sm;
      p.strategy = parse_strategy(strategy);
      p.seed = common.seed;
      p.iteration_budget = budget;
      p.workers = common.workers;
      p.pruning = no_prune ? 0 : 1;
      p.split_depth = split;
      p.checkpoint_path = checkpoint.empty() ? nullptr : checkpoint.c_str();
      const wsat_status st = wsat_search(&p, fmt, &out);
      return finish(common, st, out, "graph");
    }
    if (*wsat) {
      const wsat_status st = wsat_compute(wn, ws, wt, parse_strategy(wstrategy), common.workers, fmt, &out);
      return finish(common, st, out, "complement");
    }
    if (*bounds) {
      const auto [n0, n1] = parse_range(bn);
      const auto [s0, s1] = parse_range(bs);
      const auto [t0, t1] = parse_range(bt);
      const wsat_status st = wsat_bounds_grid(n0, n1, s0, s1, t0, t1, fmt, &out);
      return finish(common, st, out, nullptr);
    }
    if (*conn) {
      GraphPtr g = conn_in.load();
      const wsat_status st = wsat_connectivity(g.get(), ck, fmt, &out);
      return finish(common, st, out, "graph");
    }
  } catch (const UsageError& e) {
    std::cerr << "wsatlab: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "wsatlab: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
