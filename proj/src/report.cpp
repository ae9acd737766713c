#include "wsatlab/report.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

#include "wsatlab/codec.hpp"
#include "wsatlab/error.hpp"

namespace wsatlab {

namespace {

std::string join_set(VertexSet set) {
  if (set.empty()) return "-";
  std::string out;
  for (int v : set) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

int parse_int(const std::string& tok, int line, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != tok.size()) throw ParseError(std::string("bad ") + what + " '" + tok + "'", line);
  return value;
}

void check_vertex(int v, int line) {
  if (v < 0 || v >= Graph::kMaxVertices) throw ParseError("vertex " + std::to_string(v) + " out of range", line);
}

VertexSet parse_set_text(const std::string& body, int line) {
  VertexSet out;
  if (body == "-" || body.empty()) return out;
  std::istringstream in(body);
  std::string tok;
  while (in >> tok) {
    const int v = parse_int(tok, line, "vertex");
    check_vertex(v, line);
    out.insert(v);
  }
  return out;
}

// "label: body" with the expected label.
VertexSet labelled_set(const std::string& field, const char* label, int line) {
  const std::string prefix = std::string(label) + ":";
  if (field.rfind(prefix, 0) != 0) throw ParseError(std::string("expected '") + label + ":' in '" + field + "'", line);
  return parse_set_text(trim(field.substr(prefix.size())), line);
}

VertexSet set_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("vertex set must be an array");
  VertexSet out;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw ParseError("vertex must be an integer");
    const int x = v.get<int>();
    check_vertex(x, 0);
    out.insert(x);
  }
  return out;
}

Edge edge_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw ParseError("edge must be a pair of integers");
  const int a = j[0].get<int>(), b = j[1].get<int>();
  check_vertex(a, 0);
  check_vertex(b, 0);
  if (a == b) throw ParseError("edge endpoints must differ");
  return make_edge(a, b);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

Json stuck_json(const EraseOutcome& o) {
  if (o.succeeded()) return nullptr;
  Json tried = Json::array();
  for (Edge e : o.stuck->tried) tried.push_back(to_json(e));
  return Json{{"remaining", to_json(o.stuck->remaining)}, {"tried", tried}};
}

}  // namespace

Json to_json(VertexSet set) {
  Json out = Json::array();
  for (int v : set) out.push_back(v);
  return out;
}

Json to_json(Edge e) { return Json::array({e.u, e.v}); }

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (Edge e : g.edges()) edges.push_back(to_json(e));
  return Json{{"n", g.vertex_count()}, {"edges", edges}, {"graph6", emit_graph6(g)}};
}

Json to_json(const EraseMode& mode) {
  if (const auto* exact = std::get_if<ExactMode>(&mode)) return Json{{"kind", "exact"}, {"s", exact->s}, {"t", exact->t}};
  return Json{{"kind", "relaxed"}, {"j", std::get<RelaxedMode>(mode).j}};
}

Json to_json(const EraseCertificate& cert) {
  Json steps = Json::array();
  for (const EraseStep& step : cert.steps) {
    Json row{{"edge", to_json(step.edge)}};
    if (const auto* w = std::get_if<ExactWitness>(&step.witness)) {
      row["excluded"] = to_json(w->excluded);
      row["side1"] = to_json(w->side1);
      row["side2"] = to_json(w->side2);
    } else if (const auto* r = std::get_if<RelaxedWitness>(&step.witness)) {
      row["cut"] = to_json(r->cut);
    } else {
      row["trivial"] = true;
    }
    steps.push_back(row);
  }
  return Json{{"mode", to_json(cert.mode)}, {"steps", steps}};
}

Graph graph_from_json(const Json& j) {
  if (j.is_string()) return parse_graph6(j.get<std::string>());
  if (j.is_object() && !j.contains("edges") && j.contains("graph6")) return parse_graph6(j.at("graph6").get<std::string>());
  const Json& n = field(j, "n");
  if (!n.is_number_integer()) throw ParseError("'n' must be an integer");
  const int count = n.get<int>();
  if (count < 0 || count > Graph::kMaxVertices) throw ParseError("'n' out of range");
  Graph g(count);
  for (const Json& e : field(j, "edges")) {
    const Edge edge = edge_from_json(e);
    if (edge.v >= count) throw ParseError("edge " + to_string(edge) + " leaves the vertex range");
    g.add_edge(edge);
  }
  if (j.contains("graph6") && emit_graph6(g) != j.at("graph6").get<std::string>())
    throw ParseError("'graph6' disagrees with 'edges'");
  return g;
}

EraseMode mode_from_json(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "exact") return ExactMode{field(j, "s").get<int>(), field(j, "t").get<int>()};
  if (kind == "relaxed") return RelaxedMode{field(j, "j").get<int>()};
  throw ParseError("unknown mode kind '" + kind + "'");
}

EraseCertificate certificate_from_json(const Json& j) {
  EraseCertificate cert;
  try {
    cert.mode = mode_from_json(field(j, "mode"));
    for (const Json& row : field(j, "steps")) {
      EraseStep step;
      step.edge = edge_from_json(field(row, "edge"));
      if (row.contains("side1")) {
        step.witness = ExactWitness{step.edge, set_from_json(field(row, "excluded")), set_from_json(row.at("side1")),
                                    set_from_json(field(row, "side2"))};
      } else if (row.contains("cut")) {
        step.witness = RelaxedWitness{step.edge, set_from_json(row.at("cut"))};
      } else if (row.value("trivial", false)) {
        step.witness = TrivialSmallGraph{};
      } else {
        throw ParseError("step without a witness");
      }
      cert.steps.push_back(step);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate JSON: ") + e.what());
  }
  return cert;
}

std::string certificate_to_text(const EraseCertificate& cert) {
  std::ostringstream out;
  if (const auto* exact = std::get_if<ExactMode>(&cert.mode)) {
    out << "mode exact s=" << exact->s << " t=" << exact->t << '\n';
  } else {
    out << "mode relaxed j=" << std::get<RelaxedMode>(cert.mode).j << '\n';
  }
  for (const EraseStep& step : cert.steps) {
    out << "erase " << step.edge.u << ' ' << step.edge.v;
    if (const auto* w = std::get_if<ExactWitness>(&step.witness)) {
      out << " | excluded: " << join_set(w->excluded) << " | side1: " << join_set(w->side1)
          << " | side2: " << join_set(w->side2);
    } else if (const auto* r = std::get_if<RelaxedWitness>(&step.witness)) {
      out << " | cut: " << join_set(r->cut);
    } else {
      out << " | trivial";
    }
    out << '\n';
  }
  return out.str();
}

EraseCertificate certificate_from_text(std::string_view text) {
  EraseCertificate cert;
  bool have_mode = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::size_t hash = raw.find('#');
    const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;
    if (!have_mode) {
      int s = 0, t = 0, j = 0;
      char tail = 0;
      if (std::sscanf(body.c_str(), "mode exact s=%d t=%d %c", &s, &t, &tail) == 2) {
        cert.mode = ExactMode{s, t};
      } else if (std::sscanf(body.c_str(), "mode relaxed j=%d %c", &j, &tail) == 1) {
        cert.mode = RelaxedMode{j};
      } else {
        throw ParseError("expected 'mode exact s=.. t=..' or 'mode relaxed j=..'", line);
      }
      have_mode = true;
      continue;
    }
    const std::vector<std::string> fields = split_on(body, '|');
    std::istringstream head(fields[0]);
    std::string word, a, b, extra;
    if (!(head >> word >> a >> b) || word != "erase" || (head >> extra))
      throw ParseError("expected 'erase u v' in '" + fields[0] + "'", line);
    const int u = parse_int(a, line, "vertex"), v = parse_int(b, line, "vertex");
    check_vertex(u, line);
    check_vertex(v, line);
    if (u == v) throw ParseError("edge endpoints must differ", line);
    EraseStep step;
    step.edge = make_edge(u, v);
    const bool exact = std::holds_alternative<ExactMode>(cert.mode);
    if (exact) {
      if (fields.size() != 4) throw ParseError("exact step needs excluded, side1 and side2", line);
      step.witness = ExactWitness{step.edge, labelled_set(fields[1], "excluded", line),
                                  labelled_set(fields[2], "side1", line), labelled_set(fields[3], "side2", line)};
    } else if (fields.size() == 2 && fields[1] == "trivial") {
      step.witness = TrivialSmallGraph{};
    } else if (fields.size() == 2) {
      step.witness = RelaxedWitness{step.edge, labelled_set(fields[1], "cut", line)};
    } else {
      throw ParseError("relaxed step needs 'cut: ..' or 'trivial'", line);
    }
    cert.steps.push_back(step);
  }
  if (!have_mode) throw ParseError("certificate has no mode line");
  return cert;
}

EraseCertificate parse_certificate_auto(std::string_view text) {
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    Json j;
    try {
      j = Json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("certificate JSON: ") + e.what());
    }
    return certificate_from_json(j);
  }
  return certificate_from_text(text);
}

Json to_json(const VerifyReport& r) {
  return Json{{"kind", "verify"},
              {"schema_version", kReportSchemaVersion},
              {"mode", to_json(r.mode)},
              {"graph", to_json(r.graph)},
              {"erasable", r.erasable()},
              {"certificate_supplied", r.certificate_supplied},
              {"edges", r.graph.edge_count()},
              {"erased", r.outcome.erased()},
              {"certificate", to_json(r.outcome.certificate)},
              {"stuck", stuck_json(r.outcome)},
              {"replay",
               {{"valid", r.replay.valid}, {"failed_step", r.replay.failed_step}, {"message", r.replay.message}}}};
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream out;
  out << "# graph " << emit_graph6(r.graph) << " n=" << r.graph.vertex_count() << " edges=" << r.graph.edge_count()
      << '\n';
  out << "# mode " << describe(r.mode) << '\n';
  if (r.erasable()) {
    out << "# erasable: yes (" << r.outcome.erased() << " steps)\n" << certificate_to_text(r.outcome.certificate);
    return out.str();
  }
  out << "# erasable: no\n";
  if (!r.replay.valid) out << "# replay failed at " << r.replay.message << '\n';
  if (r.outcome.stuck) {
    out << "# stuck after " << r.outcome.erased() << " steps; remaining " << r.outcome.stuck->remaining.edge_count()
        << " edges:";
    for (Edge e : r.outcome.stuck->remaining.edges()) out << ' ' << e.u << '-' << e.v;
    out << '\n';
  }
  return out.str();
}

Json to_json(const ProcessTrace& trace) {
  Json rows = Json::array();
  for (const TraceRecord& r : trace.records) {
    const auto [df, dc] = increment_vector(r.increment);
    rows.push_back(Json{{"step", r.step_index},
                        {"edge", to_json(r.erased)},
                        {"closed", r.closed},
                        {"f", r.f_after},
                        {"c", r.c_after},
                        {"s", r.s_after()},
                        {"lambda", r.lambda},
                        {"vector", Json::array({df, dc})},
                        {"q", r.q}});
  }
  int f0 = 0, c0 = 0;
  if (!trace.records.empty()) {
    f0 = trace.records.front().f_before;
    c0 = trace.records.front().c_before;
  } else {
    f0 = trace.final_state.hyperedge_count();
    c0 = trace.final_state.component_count();
  }
  return Json{{"kind", "trace"},
              {"schema_version", kReportSchemaVersion},
              {"n", trace.vertex_count},
              {"initial", {{"f", f0}, {"c", c0}, {"s", trace.s0}}},
              {"steps", static_cast<int>(trace.records.size())},
              {"s_final", trace.s_final},
              {"total_q", trace.total_q},
              {"rows", rows}};
}

std::string to_text(const ProcessTrace& trace) {
  std::ostringstream out;
  const Json j = to_json(trace);
  out << "initial f=" << j["initial"]["f"] << " c=" << j["initial"]["c"] << " s=" << trace.s0 << '\n';
  out << pad("step", 6) << pad("edge", 8) << pad("closed", 8) << pad("f", 4) << pad("c", 4) << pad("s", 5)
      << pad("lambda", 8) << pad("vector", 8) << "Q_i\n";
  for (const TraceRecord& r : trace.records) {
    out << pad(std::to_string(r.step_index), 6) << pad(std::to_string(r.erased.u) + "-" + std::to_string(r.erased.v), 8)
        << pad(std::to_string(r.closed), 8) << pad(std::to_string(r.f_after), 4) << pad(std::to_string(r.c_after), 4)
        << pad(std::to_string(r.s_after()), 5) << pad(std::to_string(r.lambda), 8) << pad(to_string(r.increment), 8)
        << r.q << '\n';
  }
  out << "steps=" << trace.records.size() << " s_final=" << trace.s_final << " Q=" << trace.total_q << '\n';
  return out.str();
}

Json search_to_json(const SearchTask& task, const SearchOutcome& o) {
  return Json{{"kind", "search"},
              {"schema_version", kReportSchemaVersion},
              {"n", task.n},
              {"mode", to_json(task.mode)},
              {"target_edges", task.target_edges},
              {"strategy", to_string(task.strategy)},
              {"seed", task.seed},
              {"workers", task.workers},
              {"verdict", to_string(o.verdict)},
              {"exhaustive", o.exhaustive},
              {"graphs_examined", o.graphs_examined},
              {"pruned", o.pruned},
              {"nodes", o.nodes},
              {"wall_seconds", o.wall_seconds},
              {"graph", o.graph ? to_json(*o.graph) : Json(nullptr)},
              {"certificate", o.certificate ? to_json(*o.certificate) : Json(nullptr)}};
}

std::string search_to_text(const SearchTask& task, const SearchOutcome& o) {
  std::ostringstream out;
  out << "search n=" << task.n << " m=" << task.target_edges << " mode " << describe(task.mode) << " strategy "
      << to_string(task.strategy) << " seed " << task.seed << '\n';
  out << "verdict " << to_string(o.verdict) << (o.exhaustive ? " (exhaustive)" : "") << '\n';
  out << "examined " << o.graphs_examined << " pruned " << o.pruned << " nodes " << o.nodes << " time "
      << fmt_double(o.wall_seconds) << "s\n";
  if (o.graph) out << "graph " << emit_graph6(*o.graph) << '\n';
  if (o.certificate) out << certificate_to_text(*o.certificate);
  return out.str();
}

SearchOutcome search_outcome_from_json(const Json& j) {
  SearchOutcome o;
  try {
    const std::string verdict = field(j, "verdict").get<std::string>();
    if (verdict == "found") {
      o.verdict = Verdict::Found;
    } else if (verdict == "exhausted-none") {
      o.verdict = Verdict::ExhaustedNone;
    } else if (verdict == "inconclusive") {
      o.verdict = Verdict::Inconclusive;
    } else {
      throw ParseError("unknown verdict '" + verdict + "'");
    }
    o.exhaustive = field(j, "exhaustive").get<bool>();
    o.graphs_examined = field(j, "graphs_examined").get<std::uint64_t>();
    o.pruned = field(j, "pruned").get<std::uint64_t>();
    o.nodes = field(j, "nodes").get<std::uint64_t>();
    o.wall_seconds = field(j, "wall_seconds").get<double>();
    if (!field(j, "graph").is_null()) o.graph = graph_from_json(j.at("graph"));
    if (!field(j, "certificate").is_null()) o.certificate = certificate_from_json(j.at("certificate"));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("search JSON: ") + e.what());
  }
  return o;
}

Json to_json(const WsatBound& b) {
  return Json{{"n", b.n}, {"s", b.s}, {"t", b.t}, {"lower", b.lower}, {"upper", b.upper}, {"exact", b.exact},
              {"sources", b.sources}};
}

Json to_json(const WsatResult& r, const WsatBound& known) {
  return Json{{"kind", "wsat"},
              {"schema_version", kReportSchemaVersion},
              {"n", r.n},
              {"s", r.s},
              {"t", r.t},
              {"value", r.value},
              {"max_erasable", r.max_erasable},
              {"complement", to_json(r.graph)},
              {"certificate", to_json(r.certificate)},
              {"graphs_examined", r.graphs_examined},
              {"pruned", r.pruned},
              {"wall_seconds", r.wall_seconds},
              {"known", to_json(known)}};
}

std::string to_text(const WsatResult& r, const WsatBound& known) {
  std::ostringstream out;
  out << r.value << '\n';
  out << "wsat(" << r.n << ", K_{" << r.s << "," << r.t << "}) = " << r.value << "  max erasable " << r.max_erasable
      << "  known [" << known.lower << ", " << known.upper << "]  examined " << r.graphs_examined << " pruned "
      << r.pruned << " time " << fmt_double(r.wall_seconds) << "s\n";
  out << "complement " << emit_graph6(r.graph) << '\n';
  return out.str();
}

Json bounds_grid_json(const std::vector<WsatBound>& rows) {
  Json list = Json::array();
  for (const WsatBound& b : rows) list.push_back(to_json(b));
  return Json{{"kind", "bounds"}, {"schema_version", kReportSchemaVersion}, {"rows", list}};
}

std::string bounds_grid_tsv(const std::vector<WsatBound>& rows) {
  std::ostringstream out;
  out << "n\ts\tt\tlower\tupper\texact\tsources\n";
  for (const WsatBound& b : rows) {
    out << b.n << '\t' << b.s << '\t' << b.t << '\t' << b.lower << '\t' << b.upper << '\t' << (b.exact ? "yes" : "no")
        << '\t' << b.source() << '\n';
  }
  return out.str();
}

Json to_json(const ConnectivityReport& r, const Graph& g) {
  Json pieces = Json::array();
  for (VertexSet piece : r.decomposition) pieces.push_back(to_json(piece));
  return Json{{"kind", "connectivity"},
              {"schema_version", kReportSchemaVersion},
              {"graph", to_json(g)},
              {"k", r.k},
              {"connectivity", vertex_connectivity(g, g.vertices())},
              {"has_k_connected_subgraph", r.witness_subgraph.has_value()},
              {"witness", r.witness_subgraph ? to_json(*r.witness_subgraph) : Json(nullptr)},
              {"decomposition", pieces}};
}

std::string to_text(const ConnectivityReport& r, const Graph& g) {
  std::ostringstream out;
  out << "connectivity " << vertex_connectivity(g, g.vertices()) << '\n';
  if (!r.witness_subgraph) {
    out << r.k << "-connected subgraph: no\n";
    return out.str();
  }
  out << r.k << "-connected subgraph: yes " << to_string(*r.witness_subgraph) << '\n';
  out << "maximal " << r.k << "-connected subgraphs: " << r.decomposition.size() << '\n';
  for (VertexSet piece : r.decomposition) out << "  " << to_string(piece) << '\n';
  return out.str();
}

Json construction_to_json(const ConstructionOutput& c, const ScheduleReplay* replay, const SaturationReport* sat) {
  Json labels = Json::object();
  for (std::size_t i = 0; i < c.labels.size(); ++i) labels[std::to_string(i)] = c.labels[i];
  Json out{{"kind", "construction"},
           {"schema_version", kReportSchemaVersion},
           {"name", c.name},
           {"s", c.s},
           {"t", c.t},
           {"saturated_form", c.saturated_form},
           {"edge_count", c.graph.edge_count()},
           {"expected_edge_count", c.expected_edge_count},
           {"graph", to_json(c.graph)},
           {"labels", labels},
           {"schedule", nullptr},
           {"saturation", nullptr}};
  if (replay) {
    out["schedule"] = Json{{"complete", replay->complete},
                           {"scheduled_steps", replay->scheduled_steps},
                           {"hinted_steps", replay->hinted_steps},
                           {"completion_steps", replay->completion_steps},
                           {"notes", replay->notes},
                           {"certificate", to_json(replay->certificate)}};
  }
  if (sat) {
    Json kst = nullptr;
    if (sat->kst) kst = Json::array({to_json(sat->kst->first), to_json(sat->kst->second)});
    out["saturation"] = Json{{"kst_free", sat->kst_free},
                             {"saturated", sat->saturated()},
                             {"kst", kst},
                             {"complement_erased", sat->complement_erase.erased()},
                             {"stuck", stuck_json(sat->complement_erase)}};
  }
  return out;
}

std::string construction_to_text(const ConstructionOutput& c, const ScheduleReplay* replay,
                                 const SaturationReport* sat) {
  std::ostringstream out;
  out << c.name << " s=" << c.s << " t=" << c.t << " n=" << c.graph.vertex_count() << " edges="
      << c.graph.edge_count() << " expected=" << c.expected_edge_count << '\n';
  out << "graph6 " << emit_graph6(c.graph) << '\n';
  out << "labels";
  for (std::size_t i = 0; i < c.labels.size(); ++i) out << ' ' << i << '=' << c.labels[i];
  out << '\n';
  if (replay) {
    out << "certified erasable: " << (replay->complete ? "yes" : "no") << " (scheduled " << replay->scheduled_steps
        << ", hinted " << replay->hinted_steps << ", completion " << replay->completion_steps << ")\n";
    for (const std::string& note : replay->notes) out << "note: " << note << '\n';
  }
  if (sat) {
    out << "K_{s,t}-free: " << (sat->kst_free ? "yes" : "no");
    if (sat->kst) out << " (copy " << to_string(sat->kst->first) << " | " << to_string(sat->kst->second) << ")";
    out << '\n';
    out << "weakly saturated: " << (sat->saturated() ? "yes" : "no") << " (complement erased "
        << sat->complement_erase.erased() << " of " << complement(c.graph).edge_count() << ")\n";
  }
  return out.str();
}

}  // namespace wsatlab
